//! The exceptional superalgebra `F(4)`: even part `so(7) + sl(2)`, odd part
//! spinor of `so(7)` tensored with the doublet of `sl(2)`.

use super::algebra::{normalize_sparse, SparseVec, SuperLieAlgebra};
use super::realization::SpanDecomposer;
use super::SuperLieError;
use crate::exactlinalg::{Matrix, Parity, Scalar};

pub const SPINOR_DIM: usize = 8;
pub const SO7_DIM: usize = 21;
pub const SL2_DIM: usize = 3;

fn pauli() -> [Matrix; 3] {
    [
        "0,1;1,0".parse().expect("literal"),
        "0,-i;i,0".parse().expect("literal"),
        "1,0;0,-1".parse().expect("literal"),
    ]
}

/// Seven mutually anticommuting 8x8 matrices squaring to the identity.
pub fn gamma_matrices() -> Vec<Matrix> {
    let [s1, s2, s3] = pauli();
    let id = Matrix::identity(2);
    let k3 = |a: &Matrix, b: &Matrix, c: &Matrix| a.kron(b).kron(c);
    vec![
        k3(&s1, &id, &id),
        k3(&s2, &id, &id),
        k3(&s3, &s1, &id),
        k3(&s3, &s2, &id),
        k3(&s3, &s3, &s1),
        k3(&s3, &s3, &s2),
        k3(&s3, &s3, &s3),
    ]
}

/// `so(7)` generators `g_a g_b / 2` for `a < b`, acting on spinors.
pub fn spin_generators() -> Vec<Matrix> {
    let g = gamma_matrices();
    let half = Scalar::from_ratio(1, 2);
    let mut out = Vec::with_capacity(SO7_DIM);
    for a in 0..7 {
        for b in a + 1..7 {
            out.push((&g[a] * &g[b]).scale(&half));
        }
    }
    out
}

/// Symmetric bilinear form on spinors invariant under `so(7)`, normalized by
/// the deterministic kernel basis.
pub fn spinor_form(gens: &[Matrix]) -> Result<Matrix, SuperLieError> {
    let n = SPINOR_DIM;
    // unknowns: entries C_ij, row-major
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for s in gens {
        // (s^T C + C s)_{ij} = sum_k s_ki C_kj + C_ik s_kj
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for k in 0..n {
                    row[k * n + j] += &s[(k, i)];
                    row[i * n + k] += &s[(k, j)];
                }
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut row = vec![Scalar::zero(); n * n];
            row[i * n + j] = Scalar::one();
            row[j * n + i] = Scalar::from_int(-1);
            rows.push(row);
        }
    }
    let sys = Matrix::from_rows(rows).map_err(|e| SuperLieError::Malformed(e.to_string()))?;
    let kernel = sys.kernel_vectors();
    if kernel.len() != 1 {
        return Err(SuperLieError::Construction(format!(
            "invariant spinor form space has dimension {}",
            kernel.len()
        )));
    }
    Matrix::from_vec(n, n, kernel[0].clone()).map_err(|e| SuperLieError::Malformed(e.to_string()))
}

/// `sl(2)` basis `e, h, f`.
pub fn sl2_basis() -> Vec<Matrix> {
    vec![
        "0,1;0,0".parse().expect("literal"),
        "1,0;0,-1".parse().expect("literal"),
        "0,0;1,0".parse().expect("literal"),
    ]
}

/// `[[0,1],[-1,0]]`, the invariant form on the doublet.
pub fn doublet_form() -> Matrix {
    "0,1;-1,0".parse().expect("literal")
}

/// Odd basis index of `s_i (x) w_alpha`.
pub fn odd_index(spinor: usize, alpha: usize) -> usize {
    SO7_DIM + SL2_DIM + 2 * spinor + alpha
}

/// Data for the spinor part of the construction.
pub struct F4Data {
    pub gens: Vec<Matrix>,
    pub form: Matrix,
    so7: SpanDecomposer,
    sl2: SpanDecomposer,
    trace_dual: Matrix,
}

impl F4Data {
    pub fn new() -> Result<Self, SuperLieError> {
        let gens = spin_generators();
        let form = spinor_form(&gens)?;
        let gram = Matrix::from_fn(SO7_DIM, SO7_DIM, |a, b| (&gens[a] * &gens[b]).trace());
        let trace_dual = gram.inverse().map_err(|e| SuperLieError::Construction(e.to_string()))?;
        Ok(Self {
            so7: SpanDecomposer::new(gens.clone())?,
            sl2: SpanDecomposer::new(sl2_basis())?,
            gens,
            form,
            trace_dual,
        })
    }

    /// `<u, v> = u^T C v`.
    pub fn pairing(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let cv = self.form.apply(v).expect("spinor length");
        u.iter().zip(&cv).map(|(a, b)| a * b).sum()
    }

    /// The `so(7)`-valued pairing: coefficients `y` with `tr(X y) = <u, X v>` for all `X`.
    pub fn so7_pairing(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let raw: Vec<Scalar> = self
            .gens
            .iter()
            .map(|s| self.pairing(u, &s.apply(v).expect("spinor length")))
            .collect();
        self.trace_dual.transpose().apply(&raw).expect("dimension")
    }
}

/// `F(4)` with the relative normalization of the two odd-odd components fixed by
/// the Jacobi identity on odd triples.
pub fn f4() -> Result<SuperLieAlgebra, SuperLieError> {
    let data = F4Data::new()?;
    let (table0, table1) = f4_tables(&data)?;
    let lambda = solve_odd_jacobi(&table0, &table1)?;
    let dim = SO7_DIM + SL2_DIM + 2 * SPINOR_DIM;
    let table: Vec<SparseVec> = table0
        .iter()
        .zip(&table1)
        .map(|(t0, t1)| {
            let mut v = t0.clone();
            v.extend(t1.iter().map(|(c, x)| (*c, x * &lambda)));
            normalize_sparse(v)
        })
        .collect();
    debug_assert_eq!(table.len(), dim * dim);
    SuperLieAlgebra::from_table("F(4)", f4_labels(), f4_parities(), table)
}

fn f4_labels() -> Vec<String> {
    let mut labels = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            labels.push(format!("L({},{})", a + 1, b + 1));
        }
    }
    labels.extend(["e", "h", "f"].map(String::from));
    for i in 0..SPINOR_DIM {
        for alpha in 0..2 {
            labels.push(format!("S{}w{}", i + 1, alpha + 1));
        }
    }
    labels
}

fn f4_parities() -> Vec<Parity> {
    let mut p = vec![Parity::Even; SO7_DIM + SL2_DIM];
    p.extend(vec![Parity::Odd; 2 * SPINOR_DIM]);
    p
}

fn sparse_from(offset: usize, v: &[Scalar]) -> SparseVec {
    normalize_sparse(v.iter().enumerate().map(|(k, c)| (offset + k, c.clone())).collect())
}

/// Structure constants split as `table0 + lambda * table1`.
fn f4_tables(data: &F4Data) -> Result<(Vec<SparseVec>, Vec<SparseVec>), SuperLieError> {
    let dim = SO7_DIM + SL2_DIM + 2 * SPINOR_DIM;
    let sl2 = sl2_basis();
    let eps = doublet_form();
    let mut t0 = vec![Vec::new(); dim * dim];
    let mut t1 = vec![Vec::new(); dim * dim];
    let spinor = |i: usize| {
        let mut v = vec![Scalar::zero(); SPINOR_DIM];
        v[i] = Scalar::one();
        v
    };
    let doublet = |a: usize| {
        let mut v = vec![Scalar::zero(); 2];
        v[a] = Scalar::one();
        v
    };
    for a in 0..SO7_DIM {
        for b in 0..SO7_DIM {
            let c = data.so7.decompose(&data.gens[a].commutator(&data.gens[b]))?;
            t0[a * dim + b] = sparse_from(0, &c);
        }
    }
    for a in 0..SL2_DIM {
        for b in 0..SL2_DIM {
            let c = data.sl2.decompose(&sl2[a].commutator(&sl2[b]))?;
            t0[(SO7_DIM + a) * dim + SO7_DIM + b] = sparse_from(SO7_DIM, &c);
        }
    }
    // even on odd
    for i in 0..SPINOR_DIM {
        for alpha in 0..2 {
            let o = odd_index(i, alpha);
            for (a, s) in data.gens.iter().enumerate() {
                let col = s.col(i);
                let v = normalize_sparse(
                    col.into_iter().enumerate().map(|(j, c)| (odd_index(j, alpha), c)).collect(),
                );
                t0[o * dim + a] = v.iter().map(|(k, c)| (*k, -c)).collect();
                t0[a * dim + o] = v;
            }
            for (y, ym) in sl2.iter().enumerate() {
                let col = ym.col(alpha);
                let v = normalize_sparse(col.into_iter().enumerate().map(|(b, c)| (odd_index(i, b), c)).collect());
                let a = SO7_DIM + y;
                t0[o * dim + a] = v.iter().map(|(k, c)| (*k, -c)).collect();
                t0[a * dim + o] = v;
            }
        }
    }
    // odd on odd
    for i in 0..SPINOR_DIM {
        for alpha in 0..2 {
            for j in 0..SPINOR_DIM {
                for beta in 0..2 {
                    let (u, v) = (spinor(i), spinor(j));
                    let (w, x) = (doublet(alpha), doublet(beta));
                    let e = &eps[(alpha, beta)];
                    let so7 = data.so7_pairing(&u, &v);
                    let so7: Vec<Scalar> = so7.iter().map(|c| c * e).collect();
                    let pr = data.pairing(&u, &v);
                    // (w x^T + x w^T) eps lies in sl(2)
                    let wx = Matrix::column_vector(&w);
                    let xx = Matrix::column_vector(&x);
                    let sym = &(&wx * &xx.transpose()) + &(&xx * &wx.transpose());
                    let r = data.sl2.decompose(&(&sym * &eps).scale(&pr))?;
                    let (p, q) = (odd_index(i, alpha), odd_index(j, beta));
                    t0[p * dim + q] = sparse_from(0, &so7);
                    t1[p * dim + q] = sparse_from(SO7_DIM, &r);
                }
            }
        }
    }
    Ok((t0, t1))
}

/// Accumulates `[e_a, v]` into `out` with a factor.
fn bracket_into(table: &[SparseVec], dim: usize, a: usize, v: &[(usize, Scalar)], f: &Scalar, out: &mut Vec<(usize, Scalar)>) {
    for (k, c) in v {
        let fc = f * c;
        for (j, s) in &table[a * dim + k] {
            out.push((*j, &fc * s));
        }
    }
}

/// The odd-odd-odd Jacobi identity is affine in `lambda`; find the unique root.
fn solve_odd_jacobi(t0: &[SparseVec], t1: &[SparseVec]) -> Result<Scalar, SuperLieError> {
    let dim = SO7_DIM + SL2_DIM + 2 * SPINOR_DIM;
    let odd: Vec<usize> = (SO7_DIM + SL2_DIM..dim).collect();
    let minus = Scalar::from_int(-1);
    let mut constant = Vec::new();
    let mut linear = Vec::new();
    for &a in &odd {
        for &b in &odd {
            for &c in &odd {
                // all three signs are -1 for odd triples
                let mut j0 = Vec::new();
                let mut j1 = Vec::new();
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    bracket_into(t0, dim, x, &t0[y * dim + z], &minus, &mut j0);
                    bracket_into(t0, dim, x, &t1[y * dim + z], &minus, &mut j1);
                }
                constant.push(normalize_sparse(j0));
                linear.push(normalize_sparse(j1));
            }
        }
    }
    let mut lambda: Option<Scalar> = None;
    for (c0, c1) in constant.iter().zip(&linear) {
        for (k, x1) in c1 {
            let x0 = c0.iter().find(|t| t.0 == *k).map_or_else(Scalar::zero, |t| t.1.clone());
            let cand = -(&x0 / x1);
            match &lambda {
                None => lambda = Some(cand),
                Some(l) if *l != cand => {
                    return Err(SuperLieError::Construction(
                        "odd Jacobi identity has no consistent solution".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    let lambda = lambda.ok_or_else(|| SuperLieError::Construction("odd Jacobi identity does not fix the normalization".into()))?;
    for (c0, c1) in constant.iter().zip(&linear) {
        let mut v = c0.clone();
        v.extend(c1.iter().map(|(k, x)| (*k, x * &lambda)));
        if !normalize_sparse(v).is_empty() {
            return Err(SuperLieError::Construction(
                "odd Jacobi identity fails for the solved normalization".into(),
            ));
        }
    }
    Ok(lambda)
}
