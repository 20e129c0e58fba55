use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{is_square_zero, OrbitClass, RankData, TwistError};
use crate::exactlinalg::{Matrix, Scalar};
use crate::sample::{self, Invertible, SampleRng};
use crate::superlie::f4::{gamma_matrices, odd_index, F4Data, SPINOR_DIM};
use crate::superlie::{f4, AlgebraElement, Family, SuperLieAlgebra};

/// `Q = Q1 (x) w1 + Q2 (x) w2` with `Q1, Q2` spinors of `so(7)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Supercharge5d {
    pub q1: Vec<Scalar>,
    pub q2: Vec<Scalar>,
}

impl Supercharge5d {
    pub fn new(q1: Vec<Scalar>, q2: Vec<Scalar>) -> Result<Self, TwistError> {
        if q1.len() != SPINOR_DIM || q2.len() != SPINOR_DIM {
            return Err(TwistError::Shape(format!("spinors have {SPINOR_DIM} components")));
        }
        Ok(Self { q1, q2 })
    }

    /// The `8 x 2` matrix with columns `Q1, Q2`.
    pub fn as_matrix(&self) -> Matrix {
        Matrix::from_fn(SPINOR_DIM, 2, |r, c| if c == 0 { self.q1[r].clone() } else { self.q2[r].clone() })
    }

    fn from_matrix(m: &Matrix) -> Self {
        Self { q1: m.col(0), q2: m.col(1) }
    }

    pub fn coefficients(&self, dim: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim];
        for i in 0..SPINOR_DIM {
            v[odd_index(i, 0)] = self.q1[i].clone();
            v[odd_index(i, 1)] = self.q2[i].clone();
        }
        v
    }
}

/// `F(Q1, Q2) = 0` in `so(7)` and `<Qi, Qj> = 0` for all `i, j`.
pub fn check_5d_conditions(data: &F4Data, q: &Supercharge5d) -> bool {
    data.so7_pairing(&q.q1, &q.q2).iter().all(Scalar::is_zero)
        && data.pairing(&q.q1, &q.q1).is_zero()
        && data.pairing(&q.q1, &q.q2).is_zero()
        && data.pairing(&q.q2, &q.q2).is_zero()
}

/// First null spinor of the form `e_i + t e_j`, `t` in `{1, -1, i, -i}`.
pub fn null_spinor(data: &F4Data) -> Vec<Scalar> {
    let ts = [Scalar::one(), Scalar::from_int(-1), Scalar::i(), -Scalar::i()];
    for i in 0..SPINOR_DIM {
        let mut e = vec![Scalar::zero(); SPINOR_DIM];
        e[i] = Scalar::one();
        if data.pairing(&e, &e).is_zero() {
            return e;
        }
        for j in i + 1..SPINOR_DIM {
            for t in &ts {
                let mut v = e.clone();
                v[j] = t.clone();
                if data.pairing(&v, &v).is_zero() {
                    return v;
                }
            }
        }
    }
    unreachable!("the spinor form is nondegenerate of dimension 8")
}

/// Null spinor on the secant through a fixed null spinor `n0` in a random
/// direction `v`: `n0 - 2 <n0, v>/<v, v> v`.
pub fn random_null_spinor(data: &F4Data, rng: &mut SampleRng) -> Vec<Scalar> {
    let n0 = null_spinor(data);
    loop {
        let v = sample::vector(rng, SPINOR_DIM);
        let vv = data.pairing(&v, &v);
        if vv.is_zero() {
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
            continue;
        }
        let t = &(&Scalar::from_int(-2) * &data.pairing(&n0, &v)) * &vv.inv().expect("nonzero");
        let out: Vec<Scalar> = n0.iter().zip(&v).map(|(a, b)| a + &(&t * b)).collect();
        if out.iter().any(|x| !x.is_zero()) {
            return out;
        }
    }
}

/// `(R, L)` in `Spin(7) x SL(2)` acting by `[Q1 Q2] -> R [Q1 Q2] L^T`.
#[derive(Clone, Debug)]
pub struct Spin7Action {
    pub spin: Invertible,
    pub sl2: Invertible,
}

impl Spin7Action {
    pub fn act(&self, q: &Supercharge5d) -> Supercharge5d {
        Supercharge5d::from_matrix(&(&(&self.spin.g * &q.as_matrix()) * &self.sl2.g.transpose()))
    }

    /// Products of `I + t N` with `N = (g_a + i g_b) g_c / 2`, which squares to zero.
    pub fn random(rng: &mut SampleRng, steps: usize) -> Self {
        let g = gamma_matrices();
        let half = Scalar::from_ratio(1, 2);
        let mut spin = Invertible::identity(SPINOR_DIM);
        for _ in 0..steps {
            let a = sample::index(rng, 7);
            let b = (a + 1 + sample::index(rng, 6)) % 7;
            let c = (0..7).filter(|&c| c != a && c != b).nth(sample::index(rng, 5)).expect("index");
            let n = (&(&g[a] + &g[b].scale(&Scalar::i())) * &g[c]).scale(&half);
            let t = sample::nonzero_scalar(rng);
            let id = Matrix::identity(SPINOR_DIM);
            spin = spin.then(&Invertible { g: &id + &n.scale(&t), inv: &id - &n.scale(&t) });
        }
        Self { spin, sl2: sample::special_linear(rng, 2, 3) }
    }
}

/// Five-dimensional twists in `F(4)`.
pub struct FiveDTwist {
    algebra: Arc<SuperLieAlgebra>,
    data: F4Data,
}

impl FiveDTwist {
    pub fn new() -> Result<Self, TwistError> {
        Ok(Self { algebra: Arc::new(f4()?), data: F4Data::new()? })
    }

    pub fn algebra(&self) -> &Arc<SuperLieAlgebra> {
        &self.algebra
    }

    pub fn data(&self) -> &F4Data {
        &self.data
    }

    pub fn element(&self, q: &Supercharge5d) -> Result<AlgebraElement, TwistError> {
        Ok(AlgebraElement::new(&self.algebra, q.coefficients(self.algebra.dim()))?)
    }

    pub fn is_square_zero(&self, q: &Supercharge5d) -> Result<bool, TwistError> {
        is_square_zero(&self.element(q)?)
    }

    /// Closed-form conditions, checked against the bracket.
    pub fn check_conditions(&self, q: &Supercharge5d) -> Result<bool, TwistError> {
        let closed = check_5d_conditions(&self.data, q);
        let bracket = self.is_square_zero(q)?;
        if closed != bracket {
            return Err(TwistError::CharacterizationMismatch(format!("closed form {closed}, bracket {bracket}")));
        }
        Ok(closed)
    }

    /// Rank of `[Q1 Q2]`; every nonzero square-zero supercharge has rank one.
    pub fn orbit_invariant(&self, q: &Supercharge5d) -> Result<OrbitClass, TwistError> {
        if !self.is_square_zero(q)? {
            return Err(TwistError::NotNilpotent("[Q, Q] != 0".into()));
        }
        let r = q.as_matrix().rank();
        if r > 1 {
            return Err(TwistError::InvariantViolation(format!("square-zero supercharge of rank {r}")));
        }
        Ok(OrbitClass { family: Family::F4, k: 0, rank: RankData::Single(r), extra: None })
    }
}
