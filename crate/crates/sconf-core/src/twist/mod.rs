//! Nilpotence tests, orbit invariants and canonical representatives for
//! twisting supercharges in dimensions 3 to 6.

mod fived;
mod fourd;
mod threed;

pub use fived::{check_5d_conditions, null_spinor, random_null_spinor, FiveDTwist, Spin7Action, Supercharge5d};
pub use fourd::{
    canonical_rep_4d, canonical_rep_4d_with_det, FourDGroupElement, FourDTwist, N4Cone, N4PureTensor, Supercharge4d,
};
pub use threed::{
    check_3d_conditions, decompose_3d, image_is_isotropic, metric_pairing, orbit_param_3d, orbit_rank_3d,
    reduce_null_pair, split_conditions_3d, Decomposition3d, NullPairReduction, PairForm, Supercharge3d, ThreeDGroupElement,
    ThreeDTwist,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlinalg::{LinalgError, Scalar};
use crate::superlie::{AlgebraElement, Family, SuperLieError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("element is not odd-homogeneous")]
    NotOdd,
    #[error("supercharge does not square to zero: {0}")]
    NotNilpotent(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("closed-form condition disagrees with the bracket: {0}")]
    CharacterizationMismatch(String),
    #[error("input is not a pure tensor on each side")]
    NotPureTensor,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Algebra(#[from] SuperLieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `[Q, Q] == 0`, computed from structure constants.
pub fn is_square_zero(q: &AlgebraElement) -> Result<bool, TwistError> {
    if !q.is_odd() {
        return Err(TwistError::NotOdd);
    }
    Ok(q.bracket(q)?.is_zero())
}

/// Orbit label of a square-zero supercharge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClass {
    pub family: Family,
    pub k: usize,
    pub rank: RankData,
    /// Determinant of the full-rank block (psl(4|4), rank (4,0) or (0,4)), or the
    /// reduction parameter of a rank 2 three-dimensional supercharge.
    pub extra: Option<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RankData {
    Pair(usize, usize),
    Single(usize),
}

impl OrbitClass {
    pub fn label(&self) -> String {
        let base = match self.rank {
            RankData::Pair(a, b) => format!("({a},{b})"),
            RankData::Single(r) => format!("rank {r}"),
        };
        match &self.extra {
            Some(x) => format!("{base} [{x}]"),
            None => base,
        }
    }
}
