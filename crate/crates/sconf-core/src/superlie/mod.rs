//! Lie superalgebras by structure constants, with matrix realizations where
//! available and the verification of their defining identities.

mod algebra;
mod builders;
pub mod f4;
mod realization;
mod verify;

pub use algebra::{
    normalize_sparse, sign_for, AlgebraDump, AlgebraElement, BasisEntry, BracketEntry, SparseVec, SuperLieAlgebra,
    ALGEBRA_SCHEMA_VERSION,
};
pub use builders::{conformal, gl, osp, psl, sl, symplectic_form};
pub use f4::f4;
pub use realization::{
    algebra_from_realization, block_parity, supercommutator, MatrixRealization, SpanDecomposer, SuperMatrix,
};
pub use verify::{jacobiator, require_valid, verify_algebra, verify_algebra_with, VerifyReport, Violation, ViolationKind};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperLieError {
    #[error("malformed algebra data: {0}")]
    Malformed(String),
    #[error("bracket leaves the span of the basis: {0}")]
    OutOfSpan(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("algebra has no matrix realization")]
    NoRealization,
    #[error("elements belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("unsupported algebra: {0}")]
    Unsupported(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Families of superconformal algebras handled by the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `sl(4|k)`, `k != 4`.
    Sl4k,
    /// `psl(4|4)`.
    Psl44,
    /// `osp(k|4)` and, for `k = 8`, the six-dimensional `osp(8|4)`.
    OspK4,
    /// `F(4)`.
    F4,
}

impl Family {
    pub fn build(self, k: usize) -> Result<SuperLieAlgebra, SuperLieError> {
        match self {
            Family::Sl4k if k == 4 => Err(SuperLieError::Unsupported("sl(4|4) is not simple; use psl44".into())),
            Family::Sl4k => sl(4, k),
            Family::Psl44 => psl(4),
            Family::OspK4 => osp(k, 4),
            Family::F4 => f4(),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = SuperLieError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sl4k" => Ok(Family::Sl4k),
            "psl44" => Ok(Family::Psl44),
            "osp" | "osp_k4" | "ospk4" => Ok(Family::OspK4),
            "f4" => Ok(Family::F4),
            other => Err(SuperLieError::Unsupported(format!("unknown family `{other}`"))),
        }
    }
}
