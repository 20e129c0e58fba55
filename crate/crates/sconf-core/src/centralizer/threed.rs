use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ideal_check, span_of_matrices, CentralizerError, CentralizerReport};
use crate::exactlinalg::{Matrix, Scalar, Subspace};
use crate::superlie::SuperLieAlgebra;
use crate::twist::{Supercharge3d, ThreeDTwist};

type Result<T> = std::result::Result<T, CentralizerError>;

fn null_vector(k: usize) -> Vec<Scalar> {
    let mut w = vec![Scalar::zero(); k];
    w[0] = Scalar::one();
    w[1] = Scalar::i();
    w
}

/// `Q = Q_0 (x) w` with `w = (1, i, 0, ...)` in `osp(k|4)`.
pub fn rank1_supercharge_3d(k: usize) -> Result<Supercharge3d> {
    if k < 2 {
        return Err(CentralizerError::InvalidParameters(format!("need k >= 2, got {k}")));
    }
    let mut w = vec![vec![Scalar::zero(); k]; 4];
    w[0] = null_vector(k);
    Ok(Supercharge3d::new(k, w)?)
}

pub fn example_3d_supercharge() -> Supercharge3d {
    rank1_supercharge_3d(2).expect("k = 2")
}

/// Parabolic element with parameters `(a, b, c, d, e, f, g)` in the Darboux
/// order `(q1, p1, q2, p2)`, paired with the rotation of eigenvalue `-a` on `w`.
fn parabolic_element(k: usize, params: [i64; 7]) -> Matrix {
    let [a, b, c, d, e, f, g] = params.map(Scalar::from_int);
    let z = Scalar::zero;
    // rows and columns in the order (q1, q2, p1, p2)
    let x = Matrix::from_rows(vec![
        vec![a.clone(), b.clone(), c, d.clone()],
        vec![z(), e.clone(), d, f],
        vec![z(), z(), -&a, z()],
        vec![z(), g, -&b, -&e],
    ])
    .expect("4x4");
    let perm = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let sp = &(&perm * &x) * &perm;
    // rotation in the (0, 1) plane with eigenvalue i*t on (1, i)
    let t = &Scalar::i() * &a;
    let mut so = Matrix::zeros(k, k);
    so[(0, 1)] = t.clone();
    so[(1, 0)] = -&t;
    Matrix::block_diag(&so, &sp)
}

const PARAMETERS: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
];

pub fn example_3d_parabolic_basis(alg: &Arc<SuperLieAlgebra>) -> Result<Subspace> {
    let mats: Vec<Matrix> = PARAMETERS.iter().map(|p| parabolic_element(2, *p)).collect();
    span_of_matrices(alg, &mats)
}

/// Parameters `a`, `b`, `c`, `d` of the parabolic family.
pub fn example_3d_exact_basis(alg: &Arc<SuperLieAlgebra>) -> Result<Subspace> {
    let mats: Vec<Matrix> = PARAMETERS[..4].iter().map(|p| parabolic_element(2, *p)).collect();
    span_of_matrices(alg, &mats)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Centralizer3dExample {
    pub report: CentralizerReport,
    pub z_equals_parabolic: bool,
    pub b_equals_stated: bool,
    pub ideal: bool,
}

impl Centralizer3dExample {
    pub fn passed(&self) -> bool {
        self.z_equals_parabolic && self.b_equals_stated && self.ideal
    }
}

pub fn centralizer_3d_example() -> Result<Centralizer3dExample> {
    let twist = ThreeDTwist::new(2)?;
    let alg = twist.algebra();
    let q = twist.element(&example_3d_supercharge())?;
    let report = CentralizerReport::compute(&q)?;
    Ok(Centralizer3dExample {
        z_equals_parabolic: example_3d_parabolic_basis(alg)?.same_as(&report.basis_z),
        b_equals_stated: example_3d_exact_basis(alg)?.same_as(&report.basis_b),
        ideal: ideal_check(&report, alg).passed(),
        report,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Centralizer3dRank1 {
    pub k: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    /// `7 + dim p_k - 1` with `dim p_k = 1 + (k-2)(k-3)/2 + (k-2)`.
    pub expected_dim_z: usize,
    /// Stated `k`-independent value.
    pub stated_dim_b: usize,
    /// `[Q0 (x) w, P0 (x) v]` contributes `w ^ v` for every `v`, so `b` picks up
    /// `k - 1` rotations on top of three symplectic directions.
    pub derived_dim_b: usize,
}

impl Centralizer3dRank1 {
    pub fn z_matches(&self) -> bool {
        self.dim_z == self.expected_dim_z
    }

    pub fn b_matches_stated(&self) -> bool {
        self.dim_b == self.stated_dim_b
    }

    pub fn b_matches_derived(&self) -> bool {
        self.dim_b == self.derived_dim_b
    }
}

pub fn centralizer_3d_rank1(k: usize) -> Result<Centralizer3dRank1> {
    let q = rank1_supercharge_3d(k)?;
    let twist = ThreeDTwist::new(k)?;
    let report = CentralizerReport::compute(&twist.element(&q)?)?;
    let p_k = 1 + (k - 2) * (k.saturating_sub(3)) / 2 + (k - 2);
    Ok(Centralizer3dRank1 {
        k,
        dim_z: report.dim_z,
        dim_b: report.dim_b,
        expected_dim_z: 7 + p_k - 1,
        stated_dim_b: 4,
        derived_dim_b: k + 2,
    })
}
