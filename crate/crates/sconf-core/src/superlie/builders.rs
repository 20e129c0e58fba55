//! Constructors for the matrix superalgebras and the conformal algebras.

use super::algebra::{normalize_sparse, SparseVec, SuperLieAlgebra};
use super::realization::{algebra_from_realization, MatrixRealization};
use super::SuperLieError;
use crate::exactlinalg::{Matrix, Parity, Scalar};
use crate::par::Exec;

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    Matrix::unit(n, n, i, j)
}

fn lbl(prefix: &str, i: usize, j: usize) -> String {
    format!("{prefix}({},{})", i + 1, j + 1)
}

fn odd_units(m: usize, n: usize) -> (Vec<Matrix>, Vec<String>) {
    let size = m + n;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m {
        for j in 0..n {
            basis.push(unit(size, i, m + j));
            labels.push(lbl("B", i, j));
        }
    }
    for j in 0..n {
        for i in 0..m {
            basis.push(unit(size, m + j, i));
            labels.push(lbl("C", j, i));
        }
    }
    (basis, labels)
}

fn off_diagonal(size: usize, offset: usize, n: usize, prefix: &str) -> (Vec<Matrix>, Vec<String>) {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(size, offset + i, offset + j));
                labels.push(lbl(prefix, i, j));
            }
        }
    }
    (basis, labels)
}

fn cartan_differences(size: usize, offset: usize, n: usize, prefix: &str) -> (Vec<Matrix>, Vec<String>) {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n.saturating_sub(1) {
        basis.push(&unit(size, offset + i, offset + i) - &unit(size, offset + i + 1, offset + i + 1));
        labels.push(format!("{prefix}{}", i + 1));
    }
    (basis, labels)
}

/// `gl(m|n)` in the basis of matrix units.
pub fn gl(m: usize, n: usize) -> Result<SuperLieAlgebra, SuperLieError> {
    let size = m + n;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for (off, len, p) in [(0, m, "A"), (m, n, "D")] {
        for i in 0..len {
            for j in 0..len {
                basis.push(unit(size, off + i, off + j));
                labels.push(lbl(p, i, j));
            }
        }
    }
    let (ob, ol) = odd_units(m, n);
    basis.extend(ob);
    labels.extend(ol);
    let r = MatrixRealization::new(m, n, basis, Vec::new())?;
    algebra_from_realization(format!("gl({m}|{n})"), labels, r, Exec::default())
}

/// `sl(m|n)`: supertraceless supermatrices.
pub fn sl(m: usize, n: usize) -> Result<SuperLieAlgebra, SuperLieError> {
    if m == 0 || n == 0 {
        return Err(SuperLieError::Unsupported(format!("sl({m}|{n}) needs both blocks nonempty")));
    }
    let size = m + n;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for part in [
        off_diagonal(size, 0, m, "A"),
        cartan_differences(size, 0, m, "HA"),
        off_diagonal(size, m, n, "D"),
        cartan_differences(size, m, n, "HD"),
    ] {
        basis.extend(part.0);
        labels.extend(part.1);
    }
    // diagonal element linking the two blocks
    basis.push(&unit(size, m - 1, m - 1) + &unit(size, m, m));
    labels.push("Z".into());
    let (ob, ol) = odd_units(m, n);
    basis.extend(ob);
    labels.extend(ol);
    let r = MatrixRealization::new(m, n, basis, Vec::new())?;
    algebra_from_realization(format!("sl({m}|{n})"), labels, r, Exec::default())
}

/// `psl(n|n)`, realized on representatives with both diagonal blocks traceless
/// and the identity supermatrix divided out.
pub fn psl(n: usize) -> Result<SuperLieAlgebra, SuperLieError> {
    if n < 2 {
        return Err(SuperLieError::Unsupported(format!("psl({n}|{n})")));
    }
    let size = 2 * n;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for part in [
        off_diagonal(size, 0, n, "A"),
        cartan_differences(size, 0, n, "HA"),
        off_diagonal(size, n, n, "D"),
        cartan_differences(size, n, n, "HD"),
    ] {
        basis.extend(part.0);
        labels.extend(part.1);
    }
    let (ob, ol) = odd_units(n, n);
    basis.extend(ob);
    labels.extend(ol);
    let r = MatrixRealization::new(n, n, basis, vec![Matrix::identity(size)])?;
    algebra_from_realization(format!("psl({n}|{n})"), labels, r, Exec::default())
}

/// Standard symplectic form on `C^{2n}`: block diagonal with `[[0,1],[-1,0]]` blocks,
/// so the Darboux pairs are `(1,2), (3,4), ...`.
pub fn symplectic_form(two_n: usize) -> Matrix {
    assert!(two_n.is_multiple_of(2), "symplectic dimension must be even");
    let mut j = Matrix::zeros(two_n, two_n);
    for p in 0..two_n / 2 {
        j[(2 * p, 2 * p + 1)] = Scalar::one();
        j[(2 * p + 1, 2 * p)] = Scalar::from_int(-1);
    }
    j
}

/// `osp(m|2n)` preserving `diag(I_m, J)`. Even part `so(m) + sp(2n)`; an odd
/// element has lower-left block `C` (2n x m) free and upper-right block `-C^T J`.
pub fn osp(m: usize, two_n: usize) -> Result<SuperLieAlgebra, SuperLieError> {
    if two_n == 0 || !two_n.is_multiple_of(2) || m == 0 {
        return Err(SuperLieError::Unsupported(format!("osp({m}|{two_n})")));
    }
    let size = m + two_n;
    let j = symplectic_form(two_n);
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            basis.push(&unit(size, a, b) - &unit(size, b, a));
            labels.push(lbl("so", a, b));
        }
    }
    for a in 0..two_n {
        for b in a..two_n {
            let s = if a == b {
                Matrix::unit(two_n, two_n, a, a)
            } else {
                &Matrix::unit(two_n, two_n, a, b) + &Matrix::unit(two_n, two_n, b, a)
            };
            let d = -&(&j * &s);
            let mut x = Matrix::zeros(size, size);
            x.set_block(m, m, &d);
            basis.push(x);
            labels.push(lbl("sp", a, b));
        }
    }
    for alpha in 0..two_n {
        for a in 0..m {
            let c = Matrix::unit(two_n, m, alpha, a);
            let b = -&(&c.transpose() * &j);
            let mut x = Matrix::zeros(size, size);
            x.set_block(m, 0, &c);
            x.set_block(0, m, &b);
            basis.push(x);
            labels.push(lbl("Q", alpha, a));
        }
    }
    let r = MatrixRealization::new(m, two_n, basis, Vec::new())?;
    algebra_from_realization(format!("osp({m}|{two_n})"), labels, r, Exec::default())
}

/// Generators of the conformal algebra of `R^{p,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ConfGen {
    M(usize, usize),
    P(usize),
    D,
    K(usize),
}

struct ConfBasis {
    n: usize,
    metric: Vec<i64>,
}

impl ConfBasis {
    fn dim(&self) -> usize {
        let n = self.n;
        n * (n - 1) / 2 + 2 * n + 1
    }

    fn index(&self, g: ConfGen) -> usize {
        let n = self.n;
        let nm = n * (n - 1) / 2;
        match g {
            ConfGen::M(a, b) => {
                debug_assert!(a < b);
                // rows a = 0.. contribute n-1, n-2, ... entries
                a * (2 * n - a - 1) / 2 + (b - a - 1)
            }
            ConfGen::P(a) => nm + a,
            ConfGen::D => nm + n,
            ConfGen::K(a) => nm + n + 1 + a,
        }
    }

    fn gens(&self) -> Vec<ConfGen> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                out.push(ConfGen::M(a, b));
            }
        }
        out.extend((0..n).map(ConfGen::P));
        out.push(ConfGen::D);
        out.extend((0..n).map(ConfGen::K));
        out
    }

    fn g(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.metric[a]
        } else {
            0
        }
    }

    /// `M_ab` for arbitrary indices as a signed basis term.
    fn m(&self, a: usize, b: usize, coeff: i64, out: &mut Vec<(usize, i64)>) {
        if a == b || coeff == 0 {
            return;
        }
        if a < b {
            out.push((self.index(ConfGen::M(a, b)), coeff));
        } else {
            out.push((self.index(ConfGen::M(b, a)), -coeff));
        }
    }

    /// Brackets for the ordered pairs listed in the defining relations; `None`
    /// means the pair is obtained by antisymmetry.
    fn rule(&self, x: ConfGen, y: ConfGen) -> Option<Vec<(usize, i64)>> {
        use ConfGen::*;
        let mut out = Vec::new();
        match (x, y) {
            (M(m, n), M(r, s)) => {
                self.m(m, s, self.g(n, r), &mut out);
                self.m(r, n, -self.g(m, s), &mut out);
                self.m(m, r, -self.g(n, s), &mut out);
                self.m(n, s, -self.g(m, r), &mut out);
            }
            (M(m, n), P(r)) => {
                out.push((self.index(P(m)), self.g(n, r)));
                out.push((self.index(P(n)), -self.g(m, r)));
            }
            (M(m, n), K(r)) => {
                out.push((self.index(K(m)), self.g(n, r)));
                out.push((self.index(K(n)), -self.g(m, r)));
            }
            (D, P(r)) => out.push((self.index(P(r)), 1)),
            (D, K(r)) => out.push((self.index(K(r)), -1)),
            (K(m), P(n)) => {
                self.m(m, n, -2, &mut out);
                out.push((self.index(D), 2 * self.g(m, n)));
            }
            (P(_), P(_)) | (K(_), K(_)) | (D, D) | (D, M(..)) | (M(..), D) => {}
            _ => return None,
        }
        Some(out)
    }
}

/// Conformal algebra of `R^{p,q}` from its defining commutation relations with
/// metric `diag(1_p, -1_q)`. Basis order: `M_ab (a<b)`, `P_a`, `D`, `K_a`.
pub fn conformal(p: usize, q: usize) -> Result<SuperLieAlgebra, SuperLieError> {
    let n = p + q;
    if n == 0 {
        return Err(SuperLieError::Unsupported("conf(0,0)".into()));
    }
    let basis = ConfBasis { n, metric: (0..n).map(|a| if a < p { 1 } else { -1 }).collect() };
    let gens = basis.gens();
    let dim = basis.dim();
    debug_assert_eq!(gens.len(), dim);
    let to_sparse = |v: Vec<(usize, i64)>, sign: i64| -> SparseVec {
        normalize_sparse(v.into_iter().map(|(k, c)| (k, Scalar::from_int(sign * c))).collect())
    };
    let mut table = vec![Vec::new(); dim * dim];
    for (a, &x) in gens.iter().enumerate() {
        for (b, &y) in gens.iter().enumerate() {
            table[a * dim + b] = match basis.rule(x, y) {
                Some(v) => to_sparse(v, 1),
                None => to_sparse(basis.rule(y, x).expect("one ordering is listed"), -1),
            };
        }
    }
    let labels = gens
        .iter()
        .map(|g| match *g {
            ConfGen::M(a, b) => format!("M{}{}", a + 1, b + 1),
            ConfGen::P(a) => format!("P{}", a + 1),
            ConfGen::D => "D".into(),
            ConfGen::K(a) => format!("K{}", a + 1),
        })
        .collect();
    SuperLieAlgebra::from_table(format!("conf({p},{q})"), labels, vec![Parity::Even; dim], table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let a = sl(4, 2).unwrap();
        assert_eq!((a.even_dim(), a.odd_dim()), (19, 16));
        let b = psl(4).unwrap();
        assert_eq!((b.even_dim(), b.odd_dim()), (30, 32));
        let c = osp(3, 4).unwrap();
        assert_eq!((c.even_dim(), c.odd_dim()), (13, 12));
        let d = conformal(4, 0).unwrap();
        assert_eq!(d.dim(), 15);
        let e = gl(4, 2).unwrap();
        assert_eq!((e.even_dim(), e.odd_dim()), (20, 16));
    }

    #[test]
    fn conformal_index_matches_order() {
        let b = ConfBasis { n: 5, metric: vec![1; 5] };
        for (k, g) in b.gens().into_iter().enumerate() {
            assert_eq!(b.index(g), k);
        }
    }
}
