use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::realization::MatrixRealization;
use super::SuperLieError;
use crate::exactlinalg::{Matrix, Parity, Scalar, Subspace};

/// Sparse coefficient vector: `(basis index, coefficient)` with nonzero coefficients,
/// sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie superalgebra given by structure constants in a
/// homogeneous basis.
#[derive(Clone)]
pub struct SuperLieAlgebra {
    name: String,
    labels: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<SparseVec>,
    realization: Option<Arc<MatrixRealization>>,
}

impl fmt::Debug for SuperLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}|{})", self.name, self.even_dim(), self.odd_dim())
    }
}

/// Sums duplicate indices and drops zeros.
pub fn normalize_sparse(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
    terms.sort_by_key(|t| t.0);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == k => *acc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

pub fn sign_for(p: Parity, q: Parity) -> Scalar {
    if p == Parity::Odd && q == Parity::Odd {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

impl SuperLieAlgebra {
    /// Builds an algebra from a full table: `table[a * dim + b]` is `[e_a, e_b]`.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        parity: Vec<Parity>,
        table: Vec<SparseVec>,
    ) -> Result<Self, SuperLieError> {
        let dim = labels.len();
        if parity.len() != dim || table.len() != dim * dim {
            return Err(SuperLieError::Malformed(format!(
                "{} labels, {} parities, {} table entries",
                dim,
                parity.len(),
                table.len()
            )));
        }
        if parity.contains(&Parity::Mixed) {
            return Err(SuperLieError::Malformed("basis elements must be homogeneous".into()));
        }
        for v in &table {
            if v.iter().any(|(c, _)| *c >= dim) {
                return Err(SuperLieError::Malformed("structure constant index out of range".into()));
            }
        }
        let table = table.into_iter().map(normalize_sparse).collect();
        Ok(Self { name: name.into(), labels, parity, table, realization: None })
    }

    pub(crate) fn with_realization(mut self, r: MatrixRealization) -> Self {
        self.realization = Some(Arc::new(r));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn parity(&self, a: usize) -> Parity {
        self.parity[a]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.parity[a] == Parity::Even).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.parity[a] == Parity::Odd).collect()
    }

    pub fn realization(&self) -> Option<&MatrixRealization> {
        self.realization.as_deref()
    }

    /// `[e_a, e_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a * self.dim() + b]
    }

    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> Scalar {
        self.bracket_basis(a, b)
            .iter()
            .find(|t| t.0 == c)
            .map_or_else(Scalar::zero, |t| t.1.clone())
    }

    /// Copy with one structure constant overwritten; the mirrored constant is
    /// left alone, so this is how broken fixtures are made.
    pub fn with_structure_constant(&self, a: usize, b: usize, c: usize, value: Scalar) -> Self {
        let mut out = self.clone();
        let entry = &mut out.table[a * self.dim() + b];
        entry.retain(|t| t.0 != c);
        entry.push((c, value));
        *entry = normalize_sparse(std::mem::take(entry));
        out.realization = None;
        out
    }

    /// `[e_a, v]` for a sparse `v`.
    pub fn bracket_basis_sparse(&self, a: usize, v: &[(usize, Scalar)]) -> SparseVec {
        let mut terms = Vec::new();
        for (k, c) in v {
            for (j, s) in self.bracket_basis(a, *k) {
                terms.push((*j, c * s));
            }
        }
        normalize_sparse(terms)
    }

    /// `[v, e_a]` for a sparse `v`.
    pub fn bracket_sparse_basis(&self, v: &[(usize, Scalar)], a: usize) -> SparseVec {
        let mut terms = Vec::new();
        for (k, c) in v {
            for (j, s) in self.bracket_basis(*k, a) {
                terms.push((*j, c * s));
            }
        }
        normalize_sparse(terms)
    }

    /// Bracket of two dense coefficient vectors.
    pub fn bracket_coeffs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        assert!(x.len() == dim && y.len() == dim, "coefficient length does not match algebra");
        let mut out = vec![Scalar::zero(); dim];
        for (a, xa) in x.iter().enumerate().filter(|t| !t.1.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|t| !t.1.is_zero()) {
                let f = xa * yb;
                for (c, s) in self.bracket_basis(a, b) {
                    out[*c] += &(&f * s);
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]` from the span of `domain` basis vectors to the
    /// coordinates `codomain`. Columns follow `domain`, rows follow `codomain`.
    pub fn ad_matrix(&self, x: &[Scalar], domain: &[usize], codomain: &[usize]) -> Matrix {
        let mut row_of = vec![usize::MAX; self.dim()];
        for (r, &c) in codomain.iter().enumerate() {
            row_of[c] = r;
        }
        let mut m = Matrix::zeros(codomain.len(), domain.len());
        for (col, &b) in domain.iter().enumerate() {
            for (a, xa) in x.iter().enumerate().filter(|t| !t.1.is_zero()) {
                for (c, s) in self.bracket_basis(a, b) {
                    let r = row_of[*c];
                    assert!(r != usize::MAX, "ad image leaves the requested codomain");
                    m[(r, col)] += &(xa * s);
                }
            }
        }
        m
    }

    /// Dense coefficient vector of a basis vector.
    pub fn unit_vector(&self, a: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[a] = Scalar::one();
        v
    }

    /// Embed coordinates on a subset of basis indices into the full coordinate space.
    pub fn embed_coords(&self, indices: &[usize], coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (&i, c) in indices.iter().zip(coords) {
            v[i] = c.clone();
        }
        v
    }

    /// Subspace spanned by the given elements, tagged with their common parity.
    pub fn subspace(&self, vectors: &[Vec<Scalar>], parity: Parity) -> Subspace {
        Subspace::span(self.dim(), vectors).with_parity(parity)
    }

    pub fn to_dump(&self) -> AlgebraDump {
        let basis = self
            .labels
            .iter()
            .zip(&self.parity)
            .map(|(l, p)| BasisEntry { label: l.clone(), parity: *p })
            .collect();
        let dim = self.dim();
        let brackets = (0..dim * dim)
            .filter(|k| !self.table[*k].is_empty())
            .map(|k| BracketEntry { a: k / dim, b: k % dim, terms: self.table[k].clone() })
            .collect();
        AlgebraDump {
            schema_version: ALGEBRA_SCHEMA_VERSION,
            name: self.name.clone(),
            dim,
            even_dim: self.even_dim(),
            odd_dim: self.odd_dim(),
            basis,
            brackets,
        }
    }

    pub fn from_dump(d: &AlgebraDump) -> Result<Self, SuperLieError> {
        if d.schema_version != ALGEBRA_SCHEMA_VERSION {
            return Err(SuperLieError::Malformed(format!("unsupported schema version {}", d.schema_version)));
        }
        let dim = d.basis.len();
        if d.dim != dim {
            return Err(SuperLieError::Malformed("dim does not match basis length".into()));
        }
        let mut table = vec![Vec::new(); dim * dim];
        for e in &d.brackets {
            if e.a >= dim || e.b >= dim {
                return Err(SuperLieError::Malformed("bracket index out of range".into()));
            }
            table[e.a * dim + e.b] = e.terms.clone();
        }
        Self::from_table(
            d.name.clone(),
            d.basis.iter().map(|b| b.label.clone()).collect(),
            d.basis.iter().map(|b| b.parity).collect(),
            table,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dump()).expect("dump serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SuperLieError> {
        let d: AlgebraDump = serde_json::from_str(s).map_err(|e| SuperLieError::Malformed(e.to_string()))?;
        Self::from_dump(&d)
    }
}

pub const ALGEBRA_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BasisEntry {
    pub label: String,
    pub parity: Parity,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BracketEntry {
    pub a: usize,
    pub b: usize,
    pub terms: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDump {
    pub schema_version: u32,
    pub name: String,
    pub dim: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub basis: Vec<BasisEntry>,
    pub brackets: Vec<BracketEntry>,
}

/// An element of a specific algebra, as a dense coefficient vector.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: Arc<SuperLieAlgebra>,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|t| !t.1.is_zero())
            .map(|(k, c)| format!("({c})*{}", self.algebra.label(k)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl AlgebraElement {
    pub fn new(algebra: &Arc<SuperLieAlgebra>, coeffs: Vec<Scalar>) -> Result<Self, SuperLieError> {
        if coeffs.len() != algebra.dim() {
            return Err(SuperLieError::Malformed(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        Ok(Self { algebra: Arc::clone(algebra), coeffs })
    }

    pub fn zero(algebra: &Arc<SuperLieAlgebra>) -> Self {
        Self { algebra: Arc::clone(algebra), coeffs: vec![Scalar::zero(); algebra.dim()] }
    }

    pub fn basis(algebra: &Arc<SuperLieAlgebra>, a: usize) -> Self {
        Self { algebra: Arc::clone(algebra), coeffs: algebra.unit_vector(a) }
    }

    /// Element represented by a supermatrix, through the algebra's realization.
    pub fn from_matrix(algebra: &Arc<SuperLieAlgebra>, m: &Matrix) -> Result<Self, SuperLieError> {
        let r = algebra.realization().ok_or(SuperLieError::NoRealization)?;
        let coeffs = r.decompose(m)?;
        Ok(Self { algebra: Arc::clone(algebra), coeffs })
    }

    pub fn to_matrix(&self) -> Result<Matrix, SuperLieError> {
        let r = self.algebra.realization().ok_or(SuperLieError::NoRealization)?;
        Ok(r.compose(&self.coeffs))
    }

    pub fn algebra(&self) -> &Arc<SuperLieAlgebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// `Some(parity)` if homogeneous and nonzero, `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.algebra.parity(k);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        found
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || self.algebra.parity(k) == Parity::Odd)
    }

    fn same_algebra(&self, o: &AlgebraElement) -> Result<(), SuperLieError> {
        if Arc::ptr_eq(&self.algebra, &o.algebra)
            || (self.algebra.name == o.algebra.name && self.algebra.dim() == o.algebra.dim())
        {
            Ok(())
        } else {
            Err(SuperLieError::AlgebraMismatch(self.algebra.name.clone(), o.algebra.name.clone()))
        }
    }

    pub fn bracket(&self, o: &AlgebraElement) -> Result<AlgebraElement, SuperLieError> {
        self.same_algebra(o)?;
        Ok(Self { algebra: Arc::clone(&self.algebra), coeffs: self.algebra.bracket_coeffs(&self.coeffs, &o.coeffs) })
    }

    pub fn add(&self, o: &AlgebraElement) -> Result<AlgebraElement, SuperLieError> {
        self.same_algebra(o)?;
        Ok(Self {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        Self { algebra: Arc::clone(&self.algebra), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn project(&self, parity: Parity) -> AlgebraElement {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if self.algebra.parity(k) == parity { c.clone() } else { Scalar::zero() })
            .collect();
        Self { algebra: Arc::clone(&self.algebra), coeffs }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, o: &Self) -> bool {
        self.same_algebra(o).is_ok() && self.coeffs == o.coeffs
    }
}
