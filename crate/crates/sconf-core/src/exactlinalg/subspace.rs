use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::LinalgError;

/// Grading tag carried by a subspace of a super vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// A linear subspace of `Q(i)^n`, stored as a reduced echelon basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    parity: Parity,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new(), parity: Parity::Mixed }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|k| {
                let mut v = vec![Scalar::zero(); ambient];
                v[k] = Scalar::one();
                v
            })
            .collect();
        Self { ambient, basis, pivots: (0..ambient).collect(), parity: Parity::Mixed }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("uniform vector lengths");
        let ech = m.echelon();
        let rank = ech.pivots.len();
        let basis = (0..rank).map(|r| ech.reduced.row(r).to_vec()).collect();
        Self { ambient, basis, pivots: ech.pivots, parity: Parity::Mixed }
    }

    pub(crate) fn from_canonical_basis(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        Self::span(ambient, &vectors)
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("uniform basis")
    }

    /// Coordinates with respect to [`Self::basis`], or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= &(c * x);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// Equality as subspaces, checked by mutual containment.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other) && other.contains_subspace(self)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, &all))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // a*S = b*T  <=>  (a, b) in ker [S^T | -T^T]
        let s = self.basis_matrix().transpose();
        let t = (-&other.basis_matrix()).transpose();
        let sys = s.hstack(&t)?;
        let vectors: Vec<Vec<Scalar>> = sys
            .kernel_vectors()
            .into_iter()
            .map(|x| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (a, b) in x.iter().take(self.dim()).zip(&self.basis) {
                    if a.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        if !bi.is_zero() {
                            *vi += &(a * bi);
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Shape(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn map(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        let images = self.basis.iter().map(|b| m.apply(b)).collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(m.rows(), &images))
    }

    /// Real span of the subspace inside `Q^{2n}` with coordinates ordered
    /// `(re_1, im_1, re_2, im_2, ...)`.
    pub fn realify(&self) -> Subspace {
        let mut real = Vec::with_capacity(2 * self.dim());
        for b in &self.basis {
            real.push(realify_vector(b));
            let ib: Vec<Scalar> = b.iter().map(Scalar::mul_i).collect();
            real.push(realify_vector(&ib));
        }
        Subspace::span(2 * self.ambient, &real).with_parity(self.parity)
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.same_as(other)
    }
}

/// Split each coordinate into real and imaginary parts.
pub fn realify_vector(v: &[Scalar]) -> Vec<Scalar> {
    v.iter()
        .flat_map(|x| [Scalar::from_real(x.re().clone()), Scalar::from_real(x.im().clone())])
        .collect()
}

/// Inverse of [`realify_vector`].
pub fn complexify_vector(v: &[Scalar]) -> Vec<Scalar> {
    v.chunks(2).map(|p| Scalar::new(p[0].re().clone(), p[1].re().clone())).collect()
}
