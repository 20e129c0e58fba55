//! Closed and exact even subalgebras of a square-zero supercharge:
//! `z = ker(ad_Q) on the even part` and `b = im(ad_Q: odd -> even)`.

mod fourd;
mod threed;

pub use fourd::{
    chiral_b_pattern, chiral_closed_forms, chiral_dimension_report, chiral_structure_check, diagonal_sl4,
    projection_blocks, rank11_check, rank11_closed_pattern, rank11_exact_pattern, rank11_stated_pattern,
    rank11_supercharge, schur_supercharge, stabilizer_dim_formula, ChiralClosedForms, ChiralDimensionReport,
    ChiralStructureCheck, ProjectionBlocks, Rank11Check,
};
pub use threed::{
    centralizer_3d_example, centralizer_3d_rank1, example_3d_exact_basis, example_3d_parabolic_basis,
    example_3d_supercharge, rank1_supercharge_3d, Centralizer3dExample, Centralizer3dRank1,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlinalg::{LinalgError, Matrix, Parity, Scalar, Subspace};
use crate::superlie::{AlgebraElement, SuperLieAlgebra, SuperLieError};
use crate::twist::TwistError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentralizerError {
    #[error("supercharge is not odd")]
    NotOdd,
    #[error("supercharge does not square to zero")]
    NotNilpotent,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Algebra(#[from] SuperLieError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `[Q, -]` restricted to the even and odd parts.
#[derive(Clone, Debug)]
pub struct AdOperator {
    q: AlgebraElement,
    even: Vec<usize>,
    odd: Vec<usize>,
    /// columns: odd basis, rows: even basis
    pub odd_to_even: Matrix,
    /// columns: even basis, rows: odd basis
    pub even_to_odd: Matrix,
}

impl AdOperator {
    pub fn new(q: &AlgebraElement) -> Result<Self, CentralizerError> {
        if !q.is_odd() {
            return Err(CentralizerError::NotOdd);
        }
        if !q.bracket(q)?.is_zero() {
            return Err(CentralizerError::NotNilpotent);
        }
        let alg = q.algebra();
        let even = alg.even_indices();
        let odd = alg.odd_indices();
        Ok(Self {
            odd_to_even: alg.ad_matrix(q.coeffs(), &odd, &even),
            even_to_odd: alg.ad_matrix(q.coeffs(), &even, &odd),
            q: q.clone(),
            even,
            odd,
        })
    }

    pub fn supercharge(&self) -> &AlgebraElement {
        &self.q
    }

    pub fn algebra(&self) -> &SuperLieAlgebra {
        self.q.algebra()
    }

    /// `ad_Q o ad_Q` on the even part, which vanishes for square-zero `Q`.
    pub fn square_vanishes(&self) -> bool {
        (&self.odd_to_even * &self.even_to_odd).is_zero()
    }

    /// Kernel on the even part, in full algebra coordinates.
    pub fn closed(&self) -> Subspace {
        let alg = self.algebra();
        let vecs: Vec<Vec<Scalar>> =
            self.even_to_odd.kernel_vectors().iter().map(|v| alg.embed_coords(&self.even, v)).collect();
        alg.subspace(&vecs, Parity::Even)
    }

    /// Image of the odd part, in full algebra coordinates.
    pub fn exact(&self) -> Subspace {
        let alg = self.algebra();
        let image = self.odd_to_even.image();
        let vecs: Vec<Vec<Scalar>> = image.basis().iter().map(|v| alg.embed_coords(&self.even, v)).collect();
        alg.subspace(&vecs, Parity::Even)
    }

    pub fn rank_even_to_odd(&self) -> usize {
        self.even_to_odd.rank()
    }

    pub fn odd_indices(&self) -> &[usize] {
        &self.odd
    }
}

pub fn z_even(q: &AlgebraElement) -> Result<Subspace, CentralizerError> {
    Ok(AdOperator::new(q)?.closed())
}

pub fn b_even(q: &AlgebraElement) -> Result<Subspace, CentralizerError> {
    Ok(AdOperator::new(q)?.exact())
}

/// Dimensions and bases of `z` and `b`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CentralizerReport {
    pub algebra: String,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_quotient: usize,
    pub basis_z: Subspace,
    pub basis_b: Subspace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_pattern: Option<String>,
}

impl CentralizerReport {
    pub fn compute(q: &AlgebraElement) -> Result<Self, CentralizerError> {
        let ad = AdOperator::new(q)?;
        let z = ad.closed();
        let b = ad.exact();
        Ok(Self {
            algebra: q.algebra().name().to_string(),
            dim_z: z.dim(),
            dim_b: b.dim(),
            dim_quotient: z.dim() - b.dim().min(z.dim()),
            basis_z: z,
            basis_b: b,
            block_pattern: None,
        })
    }

    /// Basis elements of `z` and `b` as supermatrix literals, when the algebra
    /// has a matrix realization.
    pub fn basis_literals(&self, alg: &SuperLieAlgebra) -> Option<(Vec<String>, Vec<String>)> {
        let r = alg.realization()?;
        let lit = |s: &Subspace| s.basis().iter().map(|v| r.compose(v).to_string()).collect();
        Some((lit(&self.basis_z), lit(&self.basis_b)))
    }
}

/// `b` inside `z` and `[z, b]` inside `b`, on basis pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealCheck {
    pub exact_in_closed: bool,
    pub bracket_closed: bool,
}

impl IdealCheck {
    pub fn passed(&self) -> bool {
        self.exact_in_closed && self.bracket_closed
    }
}

pub fn ideal_check(report: &CentralizerReport, alg: &SuperLieAlgebra) -> IdealCheck {
    let exact_in_closed = report.basis_z.contains_subspace(&report.basis_b);
    let bracket_closed = report.basis_z.basis().iter().all(|z| {
        report.basis_b.basis().iter().all(|b| report.basis_b.contains(&alg.bracket_coeffs(z, b)))
    });
    IdealCheck { exact_in_closed, bracket_closed }
}

/// Span of even supermatrices, in algebra coordinates.
pub(crate) fn span_of_matrices(
    alg: &std::sync::Arc<SuperLieAlgebra>,
    mats: &[Matrix],
) -> Result<Subspace, CentralizerError> {
    let vecs = mats
        .iter()
        .map(|m| AlgebraElement::from_matrix(alg, m).map(|e| e.coeffs().to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(alg.subspace(&vecs, Parity::Even))
}
