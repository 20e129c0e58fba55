use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{is_square_zero, OrbitClass, RankData, TwistError};
use crate::exactlinalg::{Matrix, Scalar};
use crate::sample::{self, Invertible, SampleRng};
use crate::superlie::{AlgebraElement, Family, SuperLieAlgebra, SuperMatrix};

/// A four-dimensional supercharge `Q = Q+ + Q-` with `Q+ : V4* -> W_k` (`k x 4`)
/// and `Q- : W_k -> V4*` (`4 x k`). In the supermatrix picture `Q+` is the
/// lower-left block and `Q-` the upper-right block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Supercharge4d {
    pub k: usize,
    pub q_plus: Matrix,
    pub q_minus: Matrix,
}

impl Supercharge4d {
    pub fn new(k: usize, q_plus: Matrix, q_minus: Matrix) -> Result<Self, TwistError> {
        if q_plus.shape() != (k, 4) || q_minus.shape() != (4, k) {
            return Err(TwistError::Shape(format!(
                "expected q_plus {k}x4 and q_minus 4x{k}, got {}x{} and {}x{}",
                q_plus.rows(),
                q_plus.cols(),
                q_minus.rows(),
                q_minus.cols()
            )));
        }
        Ok(Self { k, q_plus, q_minus })
    }

    pub fn zero(k: usize) -> Self {
        Self { k, q_plus: Matrix::zeros(k, 4), q_minus: Matrix::zeros(4, k) }
    }

    pub fn chiral(q_plus: Matrix) -> Result<Self, TwistError> {
        let k = q_plus.rows();
        Self::new(k, q_plus, Matrix::zeros(4, k))
    }

    /// Parse matrix literals; `zero` is accepted for either block.
    pub fn parse(k: usize, q_plus: &str, q_minus: &str) -> Result<Self, TwistError> {
        let p = Matrix::parse_with_shape(q_plus, Some((k, 4)))?;
        let m = Matrix::parse_with_shape(q_minus, Some((4, k)))?;
        Self::new(k, p, m)
    }

    pub fn to_supermatrix(&self) -> SuperMatrix {
        SuperMatrix::odd(&self.q_minus, &self.q_plus).expect("consistent block shapes")
    }

    pub fn from_supermatrix(x: &SuperMatrix) -> Result<Self, TwistError> {
        let (m, k) = x.blocks();
        if m != 4 {
            return Err(TwistError::Shape(format!("even block of size {m}, expected 4")));
        }
        if !x.a().is_zero() || !x.d().is_zero() {
            return Err(TwistError::NotOdd);
        }
        Self::new(k, x.c(), x.b())
    }

    /// `Q+ o Q-` (`k x k`) and `Q- o Q+` (`4 x 4`).
    pub fn compositions(&self) -> (Matrix, Matrix) {
        (&self.q_plus * &self.q_minus, &self.q_minus * &self.q_plus)
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.q_plus.rank(), self.q_minus.rank())
    }

    pub fn is_chiral(&self) -> bool {
        self.q_minus.is_zero() || self.q_plus.is_zero()
    }
}

/// Element `(A, B)` of `S(GL(4) x GL(k))` acting by `Q+ -> B Q+ A^-1`,
/// `Q- -> A Q- B^-1` (conjugation by `diag(A, B)`).
#[derive(Clone, Debug)]
pub struct FourDGroupElement {
    pub a: Invertible,
    pub b: Invertible,
}

impl FourDGroupElement {
    pub fn act(&self, q: &Supercharge4d) -> Supercharge4d {
        Supercharge4d {
            k: q.k,
            q_plus: &(&self.b.g * &q.q_plus) * &self.a.inv,
            q_minus: &(&self.a.g * &q.q_minus) * &self.b.inv,
        }
    }

    /// The block-diagonal supermatrix and its inverse.
    pub fn supermatrices(&self) -> (Matrix, Matrix) {
        (Matrix::block_diag(&self.a.g, &self.b.g), Matrix::block_diag(&self.a.inv, &self.b.inv))
    }

    /// Determinant-one factors times a pair of equal diagonal scalings, so the
    /// Berezinian stays one.
    pub fn random(rng: &mut SampleRng, k: usize) -> Self {
        let mut a = sample::special_linear(rng, 4, 6);
        let mut b = sample::special_linear(rng, k, 6);
        let t = sample::nonzero_scalar(rng);
        let tinv = t.inv().expect("nonzero");
        let scale = |n: usize, s: &Scalar| {
            let mut d = Matrix::identity(n);
            d[(0, 0)] = s.clone();
            d
        };
        a = a.then(&Invertible { g: scale(4, &t), inv: scale(4, &tinv) });
        b = b.then(&Invertible { g: scale(k, &t), inv: scale(k, &tinv) });
        Self { a, b }
    }
}

/// Pure-tensor element `Q+ (x) w+ + Q- (x) w-` of the odd part of `psl(4|4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N4PureTensor {
    pub q_plus: Vec<Scalar>,
    pub w_plus: Vec<Scalar>,
    pub q_minus: Vec<Scalar>,
    pub w_minus: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum N4Cone {
    InCTr,
    InCRed,
    Both,
    Neither,
}

fn outer(u: &[Scalar], v: &[Scalar]) -> Matrix {
    Matrix::from_fn(u.len(), v.len(), |r, c| &u[r] * &v[c])
}

fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// `u (x) v - tr/4 * I`.
fn traceless_part(u: &[Scalar], v: &[Scalar]) -> Matrix {
    let m = outer(u, v);
    let t = &dot(u, v) * &Scalar::from_ratio(1, u.len() as i64);
    &m - &Matrix::identity(u.len()).scale(&t)
}

/// Writes a rank <= 1 matrix as `u v^T`.
fn factor_rank_one(m: &Matrix) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    if m.is_zero() {
        return Some((vec![Scalar::zero(); m.rows()], vec![Scalar::zero(); m.cols()]));
    }
    if m.rank() != 1 {
        return None;
    }
    let c = (0..m.cols()).find(|&c| (0..m.rows()).any(|r| !m[(r, c)].is_zero()))?;
    let u = m.col(c);
    let r = (0..m.rows()).find(|&r| !u[r].is_zero())?;
    let inv = u[r].inv().ok()?;
    let v = m.row(r).iter().map(|x| x * &inv).collect();
    Some((u, v))
}

impl N4PureTensor {
    pub fn to_supercharge(&self) -> Result<Supercharge4d, TwistError> {
        for v in [&self.q_plus, &self.w_plus, &self.q_minus, &self.w_minus] {
            if v.len() != 4 {
                return Err(TwistError::Shape("pure tensor factors must have length 4".into()));
            }
        }
        Supercharge4d::new(4, outer(&self.w_plus, &self.q_plus), outer(&self.q_minus, &self.w_minus))
    }

    pub fn from_supercharge(q: &Supercharge4d) -> Result<Self, TwistError> {
        if q.k != 4 {
            return Err(TwistError::Shape("pure tensors live in psl(4|4)".into()));
        }
        let (w_plus, q_plus) = factor_rank_one(&q.q_plus).ok_or(TwistError::NotPureTensor)?;
        let (q_minus, w_minus) = factor_rank_one(&q.q_minus).ok_or(TwistError::NotPureTensor)?;
        Ok(Self { q_plus, w_plus, q_minus, w_minus })
    }

    /// Sides with a vanishing tensor are represented by zero factors.
    fn canonical(&self) -> Self {
        let zero = vec![Scalar::zero(); 4];
        let vanishes = |a: &[Scalar], b: &[Scalar]| a.iter().all(Scalar::is_zero) || b.iter().all(Scalar::is_zero);
        let mut out = self.clone();
        if vanishes(&self.q_plus, &self.w_plus) {
            out.q_plus = zero.clone();
            out.w_plus = zero.clone();
        }
        if vanishes(&self.q_minus, &self.w_minus) {
            out.q_minus = zero.clone();
            out.w_minus = zero;
        }
        out
    }

    /// Cone membership from the trace and traceless parts of `Q+ (x) Q-` and `w+ (x) w-`.
    pub fn cone(&self) -> N4Cone {
        let c = self.canonical();
        let in_tr = dot(&c.q_plus, &c.q_minus).is_zero() && dot(&c.w_plus, &c.w_minus).is_zero();
        let in_red =
            traceless_part(&c.q_plus, &c.q_minus).is_zero() && traceless_part(&c.w_plus, &c.w_minus).is_zero();
        match (in_tr, in_red) {
            (true, true) => N4Cone::Both,
            (true, false) => N4Cone::InCTr,
            (false, true) => N4Cone::InCRed,
            (false, false) => N4Cone::Neither,
        }
    }
}

/// Four-dimensional twists: `sl(4|k)` for `k != 4`, `psl(4|4)` for `k = 4`.
#[derive(Clone, Debug)]
pub struct FourDTwist {
    family: Family,
    k: usize,
    algebra: Arc<SuperLieAlgebra>,
}

impl FourDTwist {
    pub fn new(k: usize) -> Result<Self, TwistError> {
        if k == 0 {
            return Err(TwistError::Unsupported("k must be positive".into()));
        }
        let family = if k == 4 { Family::Psl44 } else { Family::Sl4k };
        Ok(Self { family, k, algebra: Arc::new(family.build(k)?) })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn algebra(&self) -> &Arc<SuperLieAlgebra> {
        &self.algebra
    }

    fn check_k(&self, q: &Supercharge4d) -> Result<(), TwistError> {
        if q.k != self.k {
            return Err(TwistError::Shape(format!("supercharge has k = {}, algebra has k = {}", q.k, self.k)));
        }
        Ok(())
    }

    pub fn element(&self, q: &Supercharge4d) -> Result<AlgebraElement, TwistError> {
        self.check_k(q)?;
        Ok(AlgebraElement::from_matrix(&self.algebra, q.to_supermatrix().matrix())?)
    }

    pub fn supercharge(&self, x: &AlgebraElement) -> Result<Supercharge4d, TwistError> {
        let m = x.to_matrix()?;
        Supercharge4d::from_supermatrix(&SuperMatrix::new(4, self.k, m)?)
    }

    pub fn is_square_zero(&self, q: &Supercharge4d) -> Result<bool, TwistError> {
        is_square_zero(&self.element(q)?)
    }

    /// `Q+ o Q- = 0` and `Q- o Q+ = 0`, checked against the bracket.
    pub fn check_characterization(&self, q: &Supercharge4d) -> Result<bool, TwistError> {
        if self.k == 4 {
            return Err(TwistError::Unsupported("k = 4: use classify_n4_component".into()));
        }
        let (pm, mp) = q.compositions();
        let closed = pm.is_zero() && mp.is_zero();
        let bracket = self.is_square_zero(q)?;
        if closed != bracket {
            return Err(TwistError::CharacterizationMismatch(format!(
                "compositions vanish: {closed}, bracket vanishes: {bracket}"
            )));
        }
        Ok(closed)
    }

    /// Cone membership of a pure tensor in `psl(4|4)`, checked against the bracket.
    pub fn classify_n4_component(&self, t: &N4PureTensor) -> Result<N4Cone, TwistError> {
        if self.family != Family::Psl44 {
            return Err(TwistError::Unsupported("pure-tensor cones are defined for psl(4|4)".into()));
        }
        let cone = t.cone();
        let bracket = self.is_square_zero(&t.to_supercharge()?)?;
        if (cone != N4Cone::Neither) != bracket {
            return Err(TwistError::CharacterizationMismatch(format!(
                "cone membership {cone:?}, bracket vanishes: {bracket}"
            )));
        }
        Ok(cone)
    }

    /// Rank pair, plus the determinant of the full-rank block for `psl(4|4)`.
    pub fn orbit_invariant(&self, q: &Supercharge4d) -> Result<OrbitClass, TwistError> {
        if !self.is_square_zero(q)? {
            let (pm, mp) = q.compositions();
            return Err(TwistError::NotNilpotent(format!(
                "Q+ o Q- {} zero, Q- o Q+ {} zero",
                if pm.is_zero() { "is" } else { "is not" },
                if mp.is_zero() { "is" } else { "is not" }
            )));
        }
        let (rp, rm) = q.ranks();
        if rp + rm > self.k.min(4) {
            return Err(TwistError::InvariantViolation(format!("r+ + r- = {} > min(4, {})", rp + rm, self.k)));
        }
        let extra = match (self.family, rp, rm) {
            (Family::Psl44, 4, 0) => Some(q.q_plus.determinant()?),
            (Family::Psl44, 0, 4) => Some(q.q_minus.determinant()?),
            _ => None,
        };
        Ok(OrbitClass { family: self.family, k: self.k, rank: RankData::Pair(rp, rm), extra })
    }
}

/// Block representative `q_plus = [I_{r+} 0; 0 0]`, `q_minus = [0 0; 0 I_{r-}]`.
pub fn canonical_rep_4d(k: usize, r_plus: usize, r_minus: usize) -> Result<Supercharge4d, TwistError> {
    if r_plus + r_minus > k.min(4) {
        return Err(TwistError::Infeasible(format!("rank pair ({r_plus},{r_minus}) exceeds min(4,{k})")));
    }
    let mut q_plus = Matrix::zeros(k, 4);
    for i in 0..r_plus {
        q_plus[(i, i)] = Scalar::one();
    }
    let mut q_minus = Matrix::zeros(4, k);
    for t in 0..r_minus {
        q_minus[(4 - r_minus + t, k - r_minus + t)] = Scalar::one();
    }
    Supercharge4d::new(k, q_plus, q_minus)
}

/// Full-rank chiral representative in `psl(4|4)` with the given determinant;
/// `minus` puts it in the `Q-` block.
pub fn canonical_rep_4d_with_det(det: &Scalar, minus: bool) -> Result<Supercharge4d, TwistError> {
    if det.is_zero() {
        return Err(TwistError::Infeasible("full-rank block needs a nonzero determinant".into()));
    }
    let mut m = Matrix::identity(4);
    m[(3, 3)] = det.clone();
    if minus {
        Supercharge4d::new(4, Matrix::zeros(4, 4), m)
    } else {
        Supercharge4d::new(4, m, Matrix::zeros(4, 4))
    }
}
