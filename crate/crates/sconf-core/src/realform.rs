//! Real forms cut out by (anti)linear involutions, real loci of `z` and `b`,
//! and Hermitian invariants of kernel planes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::centralizer::{projection_blocks, schur_supercharge, CentralizerError};
use crate::exactlinalg::{hermitian_signature, realify_vector, LinalgError, Matrix, Scalar, Subspace};
use crate::twist::Supercharge4d;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealFormError {
    #[error("map does not square to the identity")]
    NotInvolution,
    #[error("map is not compatible with the bracket")]
    NotBracketCompatible,
    #[error("subspace is not stable under the involution")]
    NotStable,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("supercharge is not chiral in the Q+ block")]
    NotChiral,
    #[error("unknown signature {0}")]
    UnknownSignature(String),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Result<T> = std::result::Result<T, RealFormError>;

/// `theta(X) = sign * M op(X) M^-1`, where `op` conjugates entries and/or
/// transposes according to the flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Involution {
    pub conjugate: bool,
    pub transpose: bool,
    pub sign: i8,
    pub conjugator: Matrix,
    #[serde(skip)]
    inverse: Option<Matrix>,
}

impl Involution {
    pub fn new(conjugate: bool, transpose: bool, sign: i8, conjugator: Matrix) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(RealFormError::Shape(format!("sign must be +1 or -1, got {sign}")));
        }
        let inverse = Some(conjugator.inverse()?);
        let theta = Self { conjugate, transpose, sign, conjugator, inverse };
        theta.validate()?;
        Ok(theta)
    }

    /// Re-derive the cached inverse after deserialization and validate.
    pub fn finish(self) -> Result<Self> {
        Self::new(self.conjugate, self.transpose, self.sign, self.conjugator)
    }

    /// Antilinear `X -> J conj(X) J^-1`, fixing `sl(2, H)`.
    pub fn euclidean() -> Self {
        let j = Matrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        Self::new(true, false, 1, j).expect("valid preset")
    }

    /// `X -> -K X^dagger K` with `K = diag(1, 1, -1, -1)`, fixing `su(2, 2)`.
    pub fn lorentzian() -> Self {
        Self::new(true, true, -1, HermitianForm::split().gram).expect("valid preset")
    }

    /// Entrywise conjugation, fixing `sl(4, R)`.
    pub fn split() -> Self {
        Self::new(true, false, 1, Matrix::identity(4)).expect("valid preset")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "euclidean" => Some(Self::euclidean()),
            "lorentzian" => Some(Self::lorentzian()),
            "split" => Some(Self::split()),
            _ => None,
        }
    }

    pub fn size(&self) -> usize {
        self.conjugator.rows()
    }

    pub fn apply(&self, x: &Matrix) -> Matrix {
        let mut y = if self.conjugate { x.conj() } else { x.clone() };
        if self.transpose {
            y = y.transpose();
        }
        let inv = self.inverse.clone().unwrap_or_else(|| self.conjugator.inverse().expect("invertible"));
        let out = &(&self.conjugator * &y) * &inv;
        if self.sign < 0 {
            -&out
        } else {
            out
        }
    }

    /// Transpose with a positive sign reverses products.
    pub fn reverses_products(&self) -> bool {
        self.transpose && self.sign > 0
    }

    fn gl_basis(&self) -> Vec<Matrix> {
        let n = self.size();
        let units: Vec<Matrix> = (0..n * n).map(|p| Matrix::unit(n, n, p / n, p % n)).collect();
        let imag = units.iter().map(|u| u.scale(&Scalar::i())).collect::<Vec<_>>();
        units.into_iter().chain(imag).collect()
    }

    fn validate(&self) -> Result<()> {
        let basis = self.gl_basis();
        if basis.iter().any(|x| &self.apply(&self.apply(x)) != x) {
            return Err(RealFormError::NotInvolution);
        }
        for x in &basis {
            for y in &basis {
                let lhs = self.apply(&x.commutator(y));
                let (tx, ty) = (self.apply(x), self.apply(y));
                let rhs = if self.reverses_products() { ty.commutator(&tx) } else { tx.commutator(&ty) };
                if lhs != rhs {
                    return Err(RealFormError::NotBracketCompatible);
                }
            }
        }
        Ok(())
    }

    /// The map as a rational operator on realified row-major coordinates.
    pub fn real_operator(&self) -> Matrix {
        let n = self.size();
        let dim = 2 * n * n;
        let mut op = Matrix::zeros(dim, dim);
        for col in 0..dim {
            let p = col / 2;
            let mut x = Matrix::zeros(n, n);
            x[(p / n, p % n)] = if col % 2 == 0 { Scalar::one() } else { Scalar::i() };
            let image = realify_vector(&self.apply(&x).to_vec());
            for (row, v) in image.into_iter().enumerate() {
                op[(row, col)] = v;
            }
        }
        op
    }

    fn fixed_space(&self) -> Subspace {
        let op = self.real_operator();
        (&op - &Matrix::identity(op.rows())).kernel()
    }

    /// `theta(S)` is contained in `S` (checked on `v` and `i v` for basis `v`).
    pub fn stabilizes(&self, s: &Subspace) -> Result<bool> {
        let n = self.size();
        check_ambient(s, n)?;
        for v in s.basis() {
            for w in [v.clone(), v.iter().map(Scalar::mul_i).collect()] {
                let x = Matrix::from_vec(n, n, w)?;
                if !s.contains(&self.apply(&x).to_vec()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn check_ambient(s: &Subspace, n: usize) -> Result<()> {
    if s.ambient() != n * n {
        return Err(RealFormError::Shape(format!("subspace ambient {} is not {n}x{n} matrices", s.ambient())));
    }
    Ok(())
}

/// Real points of a complex subspace of `n x n` matrices.
#[derive(Clone, Debug, Serialize)]
pub struct FixedLocus {
    /// In realified coordinates `(re, im)` per entry.
    pub real: Subspace,
    pub real_dim: usize,
    pub complex_dim: usize,
    pub stable: bool,
}

/// `S` intersected with the fixed points of `theta`, whether or not `S` is stable.
pub fn fixed_intersection(theta: &Involution, s: &Subspace) -> Result<FixedLocus> {
    check_ambient(s, theta.size())?;
    let real = s.realify().intersection(&theta.fixed_space())?;
    Ok(FixedLocus { real_dim: real.dim(), complex_dim: s.dim(), stable: theta.stabilizes(s)?, real })
}

/// Fixed locus of `theta` on a `theta`-stable subspace.
pub fn fixed_subalgebra(theta: &Involution, s: &Subspace) -> Result<FixedLocus> {
    let locus = fixed_intersection(theta, s)?;
    if !locus.stable {
        return Err(RealFormError::NotStable);
    }
    Ok(locus)
}

/// `sl(n)` inside row-major `n x n` coordinates.
pub fn traceless(n: usize) -> Subspace {
    let row: Vec<Scalar> =
        (0..n * n).map(|p| if p / n == p % n { Scalar::one() } else { Scalar::zero() }).collect();
    Matrix::from_rows(vec![row]).expect("one row").kernel()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    Euclidean,
    Lorentzian,
    Split,
}

impl Signature {
    pub const ALL: [Signature; 3] = [Signature::Euclidean, Signature::Lorentzian, Signature::Split];

    pub fn parse(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "4,0" | "(4,0)" | "euclidean" => Ok(Self::Euclidean),
            "3,1" | "(3,1)" | "lorentzian" => Ok(Self::Lorentzian),
            "2,2" | "(2,2)" | "split" => Ok(Self::Split),
            other => Err(RealFormError::UnknownSignature(other.to_string())),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Euclidean => "4,0",
            Self::Lorentzian => "3,1",
            Self::Split => "2,2",
        }
    }

    pub fn involution(self) -> Involution {
        match self {
            Self::Euclidean => Involution::euclidean(),
            Self::Lorentzian => Involution::lorentzian(),
            Self::Split => Involution::split(),
        }
    }

    /// Stated real dimensions of the fixed loci on `z` and `b`.
    pub fn stated_dims(self) -> (usize, usize) {
        match self {
            Self::Euclidean => (6, 0),
            Self::Lorentzian => (7, 3),
            // real-coefficient matrices of the complex patterns
            Self::Split => (11, 7),
        }
    }
}

/// Real loci of the conformal parts of `z` and `b` for the Schur supercharge.
#[derive(Clone, Debug, Serialize)]
pub struct SchurRealForm {
    pub signature: Signature,
    pub z_real_dim: usize,
    pub b_real_dim: usize,
    pub z_stable: bool,
    pub b_stable: bool,
    pub stated: (usize, usize),
    /// Real closed and exact translations (upper-right block).
    pub translations: (usize, usize),
}

impl SchurRealForm {
    pub fn matches_stated(&self) -> bool {
        (self.z_real_dim, self.b_real_dim) == self.stated
    }
}

fn upper_right() -> Subspace {
    let vecs: Vec<Vec<Scalar>> =
        (0..2).flat_map(|i| (2..4).map(move |j| Matrix::unit(4, 4, i, j).to_vec())).collect();
    Subspace::span(16, &vecs)
}

pub fn schur_realform_report(signature: Signature) -> Result<SchurRealForm> {
    let blocks = projection_blocks(&schur_supercharge())?;
    let theta = signature.involution();
    let z = fixed_intersection(&theta, &blocks.z_conformal)?;
    let b = fixed_intersection(&theta, &blocks.b_conformal)?;
    let ur = upper_right().realify();
    Ok(SchurRealForm {
        signature,
        z_real_dim: z.real_dim,
        b_real_dim: b.real_dim,
        z_stable: z.stable,
        b_stable: b.stable,
        stated: signature.stated_dims(),
        translations: (z.real.intersection(&ur)?.dim(), b.real.intersection(&ur)?.dim()),
    })
}

/// A point of a Grassmannian of `C^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrassmannPoint {
    pub plane: Subspace,
}

impl GrassmannPoint {
    pub fn new(plane: Subspace) -> Self {
        Self { plane }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Self::new(Subspace::span(ambient, vectors))
    }

    pub fn dim(&self) -> usize {
        self.plane.dim()
    }

    pub fn ambient(&self) -> usize {
        self.plane.ambient()
    }

    pub fn act(&self, g: &Matrix) -> Result<Self> {
        Ok(Self::new(self.plane.map(g)?))
    }
}

/// `ker(Q+)` inside `C^4`.
pub fn kernel_fiber(q: &Supercharge4d) -> Result<GrassmannPoint> {
    if !q.q_minus.is_zero() {
        return Err(RealFormError::NotChiral);
    }
    Ok(GrassmannPoint::new(q.q_plus.kernel()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianForm {
    pub gram: Matrix,
}

impl HermitianForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() || gram != gram.adjoint() {
            return Err(RealFormError::Shape("Gram matrix must be square and Hermitian".into()));
        }
        Ok(Self { gram })
    }

    /// `diag(1, 1, -1, -1)`.
    pub fn split() -> Self {
        Self { gram: Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]) }
    }

    /// Gram matrix `P^dagger H P` of the restriction to the span of the columns of `P`.
    pub fn restrict(&self, p: &GrassmannPoint) -> Result<Matrix> {
        if p.ambient() != self.gram.rows() {
            return Err(RealFormError::Shape(format!(
                "plane in C^{} but form on C^{}",
                p.ambient(),
                self.gram.rows()
            )));
        }
        let cols = p.plane.basis_matrix().transpose();
        Ok(&(&cols.adjoint() * &self.gram) * &cols)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl OrbitLabel {
    pub const fn new(pos: usize, neg: usize, null: usize) -> Self {
        Self { pos, neg, null }
    }
}

/// Signature of the form restricted to a 2-plane.
pub fn hermitian_orbit_label(p: &GrassmannPoint, h: &HermitianForm) -> Result<OrbitLabel> {
    if p.dim() != 2 {
        return Err(RealFormError::Shape(format!("expected a 2-plane, got dimension {}", p.dim())));
    }
    let (pos, neg, null) = hermitian_signature(&h.restrict(p)?)?;
    Ok(OrbitLabel { pos, neg, null })
}

fn ints(xs: [i64; 4]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// One plane for each of the six restricted signatures of the split form.
pub fn witness_planes() -> Vec<(OrbitLabel, GrassmannPoint)> {
    let e1 = ints([1, 0, 0, 0]);
    let e2 = ints([0, 1, 0, 0]);
    let e3 = ints([0, 0, 1, 0]);
    let e4 = ints([0, 0, 0, 1]);
    let n13 = ints([1, 0, 1, 0]);
    let n24 = ints([0, 1, 0, 1]);
    vec![
        (OrbitLabel::new(2, 0, 0), GrassmannPoint::span(4, &[e1.clone(), e2])),
        (OrbitLabel::new(1, 1, 0), GrassmannPoint::span(4, &[e1.clone(), e3.clone()])),
        (OrbitLabel::new(0, 2, 0), GrassmannPoint::span(4, &[e3.clone(), e4])),
        (OrbitLabel::new(1, 0, 1), GrassmannPoint::span(4, &[e1, n24.clone()])),
        (OrbitLabel::new(0, 1, 1), GrassmannPoint::span(4, &[e3, n24.clone()])),
        (OrbitLabel::new(0, 0, 2), GrassmannPoint::span(4, &[n13, n24])),
    ]
}
