use super::algebra::{normalize_sparse, sign_for, SparseVec, SuperLieAlgebra};
use super::SuperLieError;
use crate::exactlinalg::{Matrix, Parity, Scalar};
use crate::par::{self, Exec};

/// A square supermatrix with block sizes `(m, n)`:
/// `[[A, B], [C, D]]` with `A` of size `m x m` and `D` of size `n x n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    m: usize,
    n: usize,
    mat: Matrix,
}

impl SuperMatrix {
    pub fn new(m: usize, n: usize, mat: Matrix) -> Result<Self, SuperLieError> {
        if mat.shape() != (m + n, m + n) {
            return Err(SuperLieError::Malformed(format!(
                "{}x{} matrix for blocks ({m}|{n})",
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(Self { m, n, mat })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self { m, n, mat: Matrix::zeros(m + n, m + n) }
    }

    pub fn from_blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Self, SuperLieError> {
        let (m, n) = (a.rows(), d.rows());
        let ok = a.shape() == (m, m) && b.shape() == (m, n) && c.shape() == (n, m) && d.shape() == (n, n);
        if !ok {
            return Err(SuperLieError::Malformed("inconsistent block shapes".into()));
        }
        let mut mat = Matrix::zeros(m + n, m + n);
        mat.set_block(0, 0, a);
        mat.set_block(0, m, b);
        mat.set_block(m, 0, c);
        mat.set_block(m, m, d);
        Ok(Self { m, n, mat })
    }

    /// Odd supermatrix with lower-left block `c` (n x m) and upper-right block `b` (m x n).
    pub fn odd(b: &Matrix, c: &Matrix) -> Result<Self, SuperLieError> {
        let (m, n) = (b.rows(), b.cols());
        Self::from_blocks(&Matrix::zeros(m, m), b, c, &Matrix::zeros(n, n))
    }

    pub fn even(a: &Matrix, d: &Matrix) -> Result<Self, SuperLieError> {
        let (m, n) = (a.rows(), d.rows());
        Self::from_blocks(a, &Matrix::zeros(m, n), &Matrix::zeros(n, m), d)
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn a(&self) -> Matrix {
        self.mat.block(0, 0, self.m, self.m)
    }

    pub fn b(&self) -> Matrix {
        self.mat.block(0, self.m, self.m, self.n)
    }

    pub fn c(&self) -> Matrix {
        self.mat.block(self.m, 0, self.n, self.m)
    }

    pub fn d(&self) -> Matrix {
        self.mat.block(self.m, self.m, self.n, self.n)
    }

    /// Parity of a homogeneous nonzero supermatrix.
    pub fn parity(&self) -> Option<Parity> {
        block_parity(&self.mat, self.m)
    }

    pub fn supertrace(&self) -> Scalar {
        &self.a().trace() - &self.d().trace()
    }

    pub fn supercommutator(&self, o: &SuperMatrix) -> Result<SuperMatrix, SuperLieError> {
        if self.blocks() != o.blocks() {
            return Err(SuperLieError::Malformed("block sizes differ".into()));
        }
        let p = self.parity().unwrap_or(Parity::Even);
        let q = o.parity().unwrap_or(Parity::Even);
        if self.parity().is_none() && !self.mat.is_zero() || o.parity().is_none() && !o.mat.is_zero() {
            return Err(SuperLieError::Inhomogeneous);
        }
        Ok(Self { m: self.m, n: self.n, mat: supercommutator(&self.mat, p, &o.mat, q) })
    }
}

/// `XY - (-1)^{|X||Y|} YX`.
pub fn supercommutator(x: &Matrix, px: Parity, y: &Matrix, py: Parity) -> Matrix {
    let xy = x * y;
    let yx = y * x;
    if px == Parity::Odd && py == Parity::Odd {
        &xy + &yx
    } else {
        &xy - &yx
    }
}

/// Parity of a square matrix with even block size `m`, or `None` if mixed or zero.
pub fn block_parity(x: &Matrix, m: usize) -> Option<Parity> {
    let mut found = None;
    for r in 0..x.rows() {
        for c in 0..x.cols() {
            if x[(r, c)].is_zero() {
                continue;
            }
            let p = if (r < m) == (c < m) { Parity::Even } else { Parity::Odd };
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
    }
    found
}

/// Solves for coefficients of matrices in the span of a fixed list, using a
/// set of pivot entries chosen by row reduction.
#[derive(Clone, Debug)]
pub struct SpanDecomposer {
    shape: (usize, usize),
    elements: Vec<Matrix>,
    pivots: Vec<usize>,
    pivot_inverse: Matrix,
}

impl SpanDecomposer {
    pub fn new(elements: Vec<Matrix>) -> Result<Self, SuperLieError> {
        let shape = elements.first().map_or((0, 0), Matrix::shape);
        if elements.iter().any(|e| e.shape() != shape) {
            return Err(SuperLieError::Malformed("elements differ in shape".into()));
        }
        let flat = Matrix::from_rows(elements.iter().map(Matrix::to_vec).collect())
            .map_err(|e| SuperLieError::Malformed(e.to_string()))?;
        let ech = flat.echelon();
        if ech.pivots.len() != elements.len() {
            return Err(SuperLieError::Malformed(format!(
                "elements are linearly dependent (rank {} of {})",
                ech.pivots.len(),
                elements.len()
            )));
        }
        let square = Matrix::from_fn(elements.len(), elements.len(), |r, c| flat[(r, ech.pivots[c])].clone());
        let pivot_inverse = square.inverse().map_err(|e| SuperLieError::Malformed(e.to_string()))?;
        Ok(Self { shape, elements, pivots: ech.pivots, pivot_inverse })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.shape.0, self.shape.1);
        for (c, e) in coeffs.iter().zip(&self.elements) {
            if c.is_zero() {
                continue;
            }
            for r in 0..out.rows() {
                for k in 0..out.cols() {
                    let v = &e[(r, k)];
                    if !v.is_zero() {
                        out[(r, k)] += &(c * v);
                    }
                }
            }
        }
        out
    }

    /// Coefficients of `x`; fails if `x` is outside the span.
    pub fn decompose(&self, x: &Matrix) -> Result<Vec<Scalar>, SuperLieError> {
        if x.shape() != self.shape {
            return Err(SuperLieError::Malformed("shape does not match realization".into()));
        }
        let flat = x.entries();
        let mut coeffs = vec![Scalar::zero(); self.len()];
        for (k, &p) in self.pivots.iter().enumerate() {
            let t = &flat[p];
            if t.is_zero() {
                continue;
            }
            for (j, c) in coeffs.iter_mut().enumerate() {
                let v = &self.pivot_inverse[(k, j)];
                if !v.is_zero() {
                    *c += &(t * v);
                }
            }
        }
        if self.combine(&coeffs) != *x {
            return Err(SuperLieError::OutOfSpan(x.to_string()));
        }
        Ok(coeffs)
    }
}

/// Faithful (possibly projective) matrix realization of a superalgebra.
///
/// Extra `quotient` matrices span a central ideal that is divided out: their
/// coefficients are dropped when decomposing.
#[derive(Clone, Debug)]
pub struct MatrixRealization {
    m: usize,
    n: usize,
    basis_len: usize,
    parities: Vec<Parity>,
    decomposer: SpanDecomposer,
}

impl MatrixRealization {
    pub fn new(m: usize, n: usize, basis: Vec<Matrix>, quotient: Vec<Matrix>) -> Result<Self, SuperLieError> {
        let basis_len = basis.len();
        let mut parities = Vec::with_capacity(basis_len);
        for (k, b) in basis.iter().enumerate() {
            if b.shape() != (m + n, m + n) {
                return Err(SuperLieError::Malformed(format!("basis element {k} has the wrong shape")));
            }
            parities.push(block_parity(b, m).ok_or(SuperLieError::Malformed(format!(
                "basis element {k} is zero or not homogeneous"
            )))?);
        }
        let mut all = basis;
        all.extend(quotient);
        Ok(Self { m, n, basis_len, parities, decomposer: SpanDecomposer::new(all)? })
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn dim(&self) -> usize {
        self.basis_len
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.decomposer.elements()[..self.basis_len]
    }

    pub fn quotient(&self) -> &[Matrix] {
        &self.decomposer.elements()[self.basis_len..]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn decompose(&self, x: &Matrix) -> Result<Vec<Scalar>, SuperLieError> {
        let mut c = self.decomposer.decompose(x)?;
        c.truncate(self.basis_len);
        Ok(c)
    }

    /// Representative matrix of a coefficient vector (quotient directions set to zero).
    pub fn compose(&self, coeffs: &[Scalar]) -> Matrix {
        self.decomposer.combine(&coeffs[..self.basis_len])
    }

    pub fn bracket_of_basis(&self, a: usize, b: usize) -> Matrix {
        supercommutator(&self.basis()[a], self.parities[a], &self.basis()[b], self.parities[b])
    }
}

/// Builds structure constants from a realization, computing each unordered pair once.
pub fn algebra_from_realization(
    name: impl Into<String>,
    labels: Vec<String>,
    realization: MatrixRealization,
    exec: Exec,
) -> Result<SuperLieAlgebra, SuperLieError> {
    let dim = realization.dim();
    if labels.len() != dim {
        return Err(SuperLieError::Malformed("label count does not match basis".into()));
    }
    let rows: Vec<Result<Vec<SparseVec>, SuperLieError>> = par::map_range(dim, exec, |a| {
        (a..dim)
            .map(|b| {
                let x = realization.bracket_of_basis(a, b);
                let c = realization.decompose(&x).map_err(|e| match e {
                    SuperLieError::OutOfSpan(_) => SuperLieError::OutOfSpan(format!(
                        "[{}, {}] is not in the span of the basis",
                        labels[a], labels[b]
                    )),
                    other => other,
                })?;
                Ok(normalize_sparse(c.into_iter().enumerate().filter(|t| !t.1.is_zero()).collect()))
            })
            .collect()
    });
    let mut table = vec![Vec::new(); dim * dim];
    let parities = realization.parities().to_vec();
    for (a, row) in rows.into_iter().enumerate() {
        for (off, v) in row?.into_iter().enumerate() {
            let b = a + off;
            if a != b {
                let s = -sign_for(parities[a], parities[b]);
                table[b * dim + a] = v.iter().map(|(c, x)| (*c, &s * x)).collect();
            }
            table[a * dim + b] = v;
        }
    }
    Ok(SuperLieAlgebra::from_table(name, labels, parities, table)?.with_realization(realization))
}
