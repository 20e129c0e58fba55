use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{is_square_zero, OrbitClass, RankData, TwistError};
use crate::exactlinalg::{Matrix, Scalar};
use crate::sample::{self, Invertible, SampleRng};
use crate::superlie::{osp, symplectic_form, AlgebraElement, Family, SuperLieAlgebra, SuperMatrix};

/// Supercharge `sum_alpha w_alpha (x) Q_alpha` of `osp(k|2n)`; `w[alpha]` is row
/// `alpha` of the lower-left block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Supercharge3d {
    pub k: usize,
    pub w: Vec<Vec<Scalar>>,
}

impl Supercharge3d {
    pub fn new(k: usize, w: Vec<Vec<Scalar>>) -> Result<Self, TwistError> {
        if w.is_empty() || !w.len().is_multiple_of(2) || w.iter().any(|v| v.len() != k) {
            return Err(TwistError::Shape(format!("expected an even number of vectors of length {k}")));
        }
        Ok(Self { k, w })
    }

    pub fn from_block(c: &Matrix) -> Result<Self, TwistError> {
        Self::new(c.cols(), c.row_list())
    }

    pub fn zero(k: usize, two_n: usize) -> Self {
        Self { k, w: vec![vec![Scalar::zero(); k]; two_n] }
    }

    pub fn two_n(&self) -> usize {
        self.w.len()
    }

    /// The lower-left block (`2n x k`).
    pub fn block(&self) -> Matrix {
        Matrix::from_rows(self.w.clone()).expect("rectangular")
    }

    pub fn to_supermatrix(&self) -> SuperMatrix {
        let c = self.block();
        let b = -&(&c.transpose() * &symplectic_form(self.two_n()));
        SuperMatrix::odd(&b, &c).expect("consistent block shapes")
    }
}

/// Symmetric bilinear form `g(u, v) = sum u_i v_i` on `C^k`.
pub fn metric_pairing(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn wedge(u: &[Scalar], v: &[Scalar]) -> Matrix {
    Matrix::from_fn(u.len(), u.len(), |r, c| &(&u[r] * &v[c]) - &(&v[r] * &u[c]))
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Closed form of `[Q, Q] = 0`: all `g(w_i, w_j)` vanish and the `so(k)` part
/// `sum_p w_{2p-1} ^ w_{2p}` vanishes. Equivalently `C C^T = 0` and `C^T J C = 0`.
pub fn check_3d_conditions(q: &Supercharge3d) -> bool {
    let c = q.block();
    (&c * &c.transpose()).is_zero() && image_is_isotropic(q)
}

/// The stronger pairwise form: every `g(w_i, w_j) = 0`, `w1 ^ w2 = 0` and
/// `w3 ^ w4 = 0`. Sufficient for `[Q, Q] = 0` but not necessary.
pub fn split_conditions_3d(q: &Supercharge3d) -> bool {
    let c = q.block();
    (&c * &c.transpose()).is_zero()
        && q.w.chunks(2).all(|p| wedge(&p[0], &p[1]).is_zero())
}

/// `C^T J C = 0`: the image of `Q` in `C^k` is isotropic for the symplectic pairing
/// induced on it.
pub fn image_is_isotropic(q: &Supercharge3d) -> bool {
    let c = q.block();
    (&(&c.transpose() * &symplectic_form(q.two_n())) * &c).is_zero()
}

/// Rank of the lower-left block.
pub fn orbit_rank_3d(q: &Supercharge3d) -> Result<usize, TwistError> {
    if !check_3d_conditions(q) {
        return Err(TwistError::NotNilpotent("conditions on w fail".into()));
    }
    Ok(q.block().rank())
}

/// Shape of one pair `(w_{2p-1}, w_{2p})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "form")]
pub enum PairForm {
    Vanishing,
    /// `(w, c w)` with `w != 0`.
    Proportional { w: Vec<Scalar>, c: Scalar },
    /// `(0, w)` with `w != 0`: the point `c = infinity`.
    AtInfinity { w: Vec<Scalar> },
    Independent,
}

fn pair_form(a: &[Scalar], b: &[Scalar]) -> PairForm {
    match (is_zero_vec(a), is_zero_vec(b)) {
        (true, true) => PairForm::Vanishing,
        (true, false) => PairForm::AtInfinity { w: b.to_vec() },
        (false, _) => {
            if !wedge(a, b).is_zero() {
                return PairForm::Independent;
            }
            let i = a.iter().position(|x| !x.is_zero()).expect("nonzero");
            let c = &b[i] * &a[i].inv().expect("nonzero");
            PairForm::Proportional { w: a.to_vec(), c }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition3d {
    pub first: PairForm,
    pub second: PairForm,
    /// Every `g(w_i, w_j)` vanishes.
    pub null_and_orthogonal: bool,
    /// `[Q, Q] = 0` although one of the pairs is not proportional.
    pub outside_pairwise_form: bool,
}

impl Decomposition3d {
    pub fn in_pairwise_form(&self) -> bool {
        self.null_and_orthogonal
            && !matches!(self.first, PairForm::Independent)
            && !matches!(self.second, PairForm::Independent)
    }
}

/// Writes a four-vector supercharge as `(w, c w, w', c' w')` where possible.
pub fn decompose_3d(q: &Supercharge3d) -> Result<Decomposition3d, TwistError> {
    if q.two_n() != 4 {
        return Err(TwistError::Unsupported("decomposition is defined for four vectors".into()));
    }
    let c = q.block();
    let null_and_orthogonal = (&c * &c.transpose()).is_zero();
    let first = pair_form(&q.w[0], &q.w[1]);
    let second = pair_form(&q.w[2], &q.w[3]);
    let pairwise = !matches!(first, PairForm::Independent) && !matches!(second, PairForm::Independent);
    let outside_pairwise_form = check_3d_conditions(q) && !pairwise;
    Ok(Decomposition3d { first, second, null_and_orthogonal, outside_pairwise_form })
}

/// Result of moving a null orthogonal pair `(w, w')` to `((1,i,0,..), w'')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullPairReduction {
    /// `g` in `SO(k)` with `g w = (1, i, 0, ...)`.
    pub transform: Matrix,
    pub w_image: Vec<Scalar>,
    pub w_prime_image: Vec<Scalar>,
    /// First coordinate of `g w'`.
    pub x: Scalar,
    /// `g w' - x (1, i, 0, ...)`, moved by the stabilizer to `(0, 0, 1, +-i, 0, ...)`
    /// when nonzero.
    pub residual: Vec<Scalar>,
}

/// Reflection `v -> v - 2 g(v, n)/g(n, n) n`.
fn reflection(n: &[Scalar]) -> Result<Matrix, TwistError> {
    let nn = metric_pairing(n, n);
    let f = (&Scalar::from_int(-2) * &nn.inv()?).clone();
    let k = n.len();
    Ok(&Matrix::identity(k) + &Matrix::from_fn(k, k, |r, c| &(&n[r] * &n[c]) * &f))
}

/// Orthogonal map on coordinates `offset..` sending `u` to `(1, i, 0, ...)` there,
/// with the other coordinates fixed. `u` must be null and supported on `offset..`.
fn reflect_to_standard(u: &[Scalar], offset: usize) -> Result<Matrix, TwistError> {
    let k = u.len();
    let mut target = vec![Scalar::zero(); k];
    target[offset] = Scalar::one();
    target[offset + 1] = Scalar::i();
    let mut g = Matrix::identity(k);
    let mut cur = u.to_vec();
    if cur == target {
        return Ok(g);
    }
    if metric_pairing(&cur, &target).is_zero() {
        // a coordinate reflection or swap makes the pairing nonzero
        let mut found = false;
        'search: for a in offset..k {
            let mut n = vec![Scalar::zero(); k];
            n[a] = Scalar::one();
            let mut cands = vec![n];
            for b in a + 1..k {
                for s in [1, -1] {
                    let mut n = vec![Scalar::zero(); k];
                    n[a] = Scalar::one();
                    n[b] = Scalar::from_int(s);
                    cands.push(n);
                }
            }
            for n in cands {
                let s = reflection(&n)?;
                let moved = s.apply(&cur)?;
                if moved == target || !metric_pairing(&moved, &target).is_zero() {
                    g = &s * &g;
                    cur = moved;
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            return Err(TwistError::Infeasible("no reflection moves the vector off the target's orthogonal".into()));
        }
        if cur == target {
            return Ok(g);
        }
    }
    let n: Vec<Scalar> = cur.iter().zip(&target).map(|(a, b)| a - b).collect();
    let s = reflection(&n)?;
    Ok(&s * &g)
}

/// Moves a null orthogonal pair `(w, w')` in `C^k`, `k >= 4`, by an element of
/// `SO(k)`: first `w` to `(1, i, 0, ...)`, then the remainder of `w'` to
/// `(0, 0, 1, i, 0, ...)` (or `(0, 0, 1, -i)` when `k = 4` forces it).
pub fn reduce_null_pair(w: &[Scalar], w_prime: &[Scalar]) -> Result<NullPairReduction, TwistError> {
    let k = w.len();
    if k < 4 || w_prime.len() != k {
        return Err(TwistError::Shape("need two vectors of equal length at least 4".into()));
    }
    if is_zero_vec(w) || is_zero_vec(w_prime) {
        return Err(TwistError::Infeasible("vectors must be nonzero".into()));
    }
    for (a, b) in [(w, w), (w, w_prime), (w_prime, w_prime)] {
        if !metric_pairing(a, b).is_zero() {
            return Err(TwistError::Infeasible("vectors must be null and mutually orthogonal".into()));
        }
    }
    let mut g = reflect_to_standard(w, 0)?;
    let mut e3 = vec![Scalar::zero(); k];
    e3[2] = Scalar::one();
    let flip = reflection(&e3)?;
    if g.determinant()? != Scalar::one() {
        g = &flip * &g;
    }
    let f = g.apply(w_prime)?;
    let x = f[0].clone();
    let mut e = vec![Scalar::zero(); k];
    e[0] = Scalar::one();
    e[1] = Scalar::i();
    let mut residual: Vec<Scalar> = f.iter().zip(&e).map(|(a, b)| a - &(&x * b)).collect();
    if !is_zero_vec(&residual) {
        // residual lies in span(e3, ..., ek) and is null there
        let mut h = reflect_to_standard(&residual, 2)?;
        if h.determinant()? != Scalar::one() {
            let fix = if k >= 5 {
                let mut e5 = vec![Scalar::zero(); k];
                e5[4] = Scalar::one();
                reflection(&e5)?
            } else {
                let mut e4 = vec![Scalar::zero(); k];
                e4[3] = Scalar::one();
                reflection(&e4)?
            };
            h = &fix * &h;
        }
        g = &h * &g;
        residual = h.apply(&residual)?;
    }
    Ok(NullPairReduction {
        w_image: g.apply(w)?,
        w_prime_image: g.apply(w_prime)?,
        transform: g,
        x,
        residual,
    })
}

/// The first coordinate of `g w'` after `g w = (1, i, 0, ...)`.
pub fn orbit_param_3d(w: &[Scalar], w_prime: &[Scalar]) -> Result<Scalar, TwistError> {
    Ok(reduce_null_pair(w, w_prime)?.x)
}

/// `(O, S)` in `SO(k) x Sp(2n)` acting on the lower-left block by `C -> S C O^T`.
#[derive(Clone, Debug)]
pub struct ThreeDGroupElement {
    pub orthogonal: Invertible,
    pub symplectic: Invertible,
}

impl ThreeDGroupElement {
    pub fn act(&self, q: &Supercharge3d) -> Supercharge3d {
        let c = &(&self.symplectic.g * &q.block()) * &self.orthogonal.g.transpose();
        Supercharge3d::from_block(&c).expect("shape preserved")
    }

    pub fn random(rng: &mut SampleRng, k: usize, two_n: usize) -> Self {
        Self {
            orthogonal: sample::special_orthogonal(rng, k, 6),
            symplectic: sample::symplectic(rng, &symplectic_form(two_n), 4),
        }
    }
}

/// Twists of `osp(k|2n)`: three-dimensional for `2n = 4`, six-dimensional for
/// `k = 8`.
#[derive(Clone, Debug)]
pub struct ThreeDTwist {
    k: usize,
    two_n: usize,
    algebra: Arc<SuperLieAlgebra>,
}

impl ThreeDTwist {
    pub fn new(k: usize) -> Result<Self, TwistError> {
        Self::with_symplectic(k, 4)
    }

    pub fn with_symplectic(k: usize, two_n: usize) -> Result<Self, TwistError> {
        Ok(Self { k, two_n, algebra: Arc::new(osp(k, two_n)?) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn two_n(&self) -> usize {
        self.two_n
    }

    pub fn algebra(&self) -> &Arc<SuperLieAlgebra> {
        &self.algebra
    }

    pub fn element(&self, q: &Supercharge3d) -> Result<AlgebraElement, TwistError> {
        if q.k != self.k || q.two_n() != self.two_n {
            return Err(TwistError::Shape(format!(
                "supercharge for osp({}|{}), algebra osp({}|{})",
                q.k,
                q.two_n(),
                self.k,
                self.two_n
            )));
        }
        Ok(AlgebraElement::from_matrix(&self.algebra, q.to_supermatrix().matrix())?)
    }

    pub fn is_square_zero(&self, q: &Supercharge3d) -> Result<bool, TwistError> {
        is_square_zero(&self.element(q)?)
    }

    /// Closed-form conditions, checked against the bracket.
    pub fn check_conditions(&self, q: &Supercharge3d) -> Result<bool, TwistError> {
        let closed = check_3d_conditions(q);
        let bracket = self.is_square_zero(q)?;
        if closed != bracket {
            return Err(TwistError::CharacterizationMismatch(format!(
                "closed form {closed}, bracket {bracket}"
            )));
        }
        Ok(closed)
    }

    /// Rank of the block, with isotropy of its image asserted.
    pub fn orbit_invariant(&self, q: &Supercharge3d) -> Result<OrbitClass, TwistError> {
        if !self.is_square_zero(q)? {
            return Err(TwistError::NotNilpotent("[Q, Q] != 0".into()));
        }
        if !image_is_isotropic(q) {
            return Err(TwistError::InvariantViolation("image of a square-zero Q is not isotropic".into()));
        }
        let r = orbit_rank_3d(q)?;
        if r > (self.two_n / 2).min(self.k / 2) {
            return Err(TwistError::InvariantViolation(format!("rank {r} exceeds the isotropic bound")));
        }
        Ok(OrbitClass { family: Family::OspK4, k: self.k, rank: RankData::Single(r), extra: None })
    }
}
