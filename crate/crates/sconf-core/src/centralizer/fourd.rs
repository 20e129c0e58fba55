use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{span_of_matrices, AdOperator, CentralizerError, CentralizerReport, ideal_check};
use crate::exactlinalg::{Matrix, Scalar, Subspace};
use crate::superlie::{AlgebraElement, SuperLieAlgebra};
use crate::twist::{canonical_rep_4d, FourDTwist, Supercharge4d};

type Result<T> = std::result::Result<T, CentralizerError>;

fn check_chiral(k: usize, r: usize) -> Result<()> {
    if k == 0 || r == 0 || r > k.min(4) {
        return Err(CentralizerError::InvalidParameters(format!("need 1 <= r <= min(4, k), got k={k}, r={r}")));
    }
    Ok(())
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Closed forms for the dimensions of `z`, `b` and `z/b` of a chiral rank `r`
/// supercharge in `sl(4|k)` (`psl(4|4)` at `k = 4`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralClosedForms {
    pub dim_z: i64,
    pub dim_b: i64,
    pub dim_quotient: i64,
}

pub fn chiral_closed_forms(k: usize, r: usize) -> Result<ChiralClosedForms> {
    check_chiral(k, r)?;
    let ki = k as i64;
    let corr = delta(k, r) - delta(k, 4);
    let (z, b, quot) = match r {
        1 => (ki * ki - ki + 11, ki + 3, ki * ki - 2 * ki + 8),
        2 => (ki * ki - 2 * ki + 10, 2 * ki + 4, ki * ki - 4 * ki + 6),
        3 => (ki * ki - 3 * ki + 11, 3 * ki + 3, ki * ki - 6 * ki + 8),
        _ => (ki * ki - 4 * ki + 14, 4 * ki, ki * ki - 8 * ki + 14),
    };
    Ok(ChiralClosedForms { dim_z: z + corr, dim_b: b, dim_quotient: quot + corr })
}

/// Group-level formula `dim Z = k^2 - kr + r^2 - 4r + 14`, plus one when `r = k`.
pub fn stabilizer_dim_formula(k: usize, r: usize) -> i64 {
    let (ki, ri) = (k as i64, r as i64);
    ki * ki - ki * ri + ri * ri - 4 * ri + 14 + delta(k, r)
}

/// Computed dimensions next to the closed forms; mismatches are reported, not raised.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChiralDimensionReport {
    pub k: usize,
    pub r: usize,
    pub algebra: String,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_quotient: usize,
    pub expected: ChiralClosedForms,
    pub z_matches: bool,
    pub b_matches: bool,
    pub quotient_matches: bool,
    pub ideal: bool,
}

impl ChiralDimensionReport {
    pub fn matches(&self) -> bool {
        self.z_matches && self.b_matches && self.quotient_matches
    }
}

fn chiral_setup(k: usize, r: usize) -> Result<(FourDTwist, AlgebraElement)> {
    check_chiral(k, r)?;
    let twist = FourDTwist::new(k)?;
    let q = canonical_rep_4d(k, r, 0)?;
    let el = twist.element(&q)?;
    Ok((twist, el))
}

pub fn chiral_dimension_report(k: usize, r: usize) -> Result<ChiralDimensionReport> {
    let (twist, q) = chiral_setup(k, r)?;
    let report = CentralizerReport::compute(&q)?;
    let expected = chiral_closed_forms(k, r)?;
    let ideal = ideal_check(&report, twist.algebra()).passed();
    Ok(ChiralDimensionReport {
        k,
        r,
        algebra: report.algebra.clone(),
        dim_z: report.dim_z,
        dim_b: report.dim_b,
        dim_quotient: report.dim_quotient,
        z_matches: report.dim_z as i64 == expected.dim_z,
        b_matches: report.dim_b as i64 == expected.dim_b,
        quotient_matches: report.dim_quotient as i64 == expected.dim_quotient,
        expected,
        ideal,
    })
}

fn even_matrix(a: &Matrix, d: &Matrix) -> Matrix {
    Matrix::block_diag(a, d)
}

fn unit_a(k: usize, i: usize, j: usize) -> Matrix {
    even_matrix(&Matrix::unit(4, 4, i, j), &Matrix::zeros(k, k))
}

fn unit_d(k: usize, i: usize, j: usize) -> Matrix {
    even_matrix(&Matrix::zeros(4, 4), &Matrix::unit(k, k, i, j))
}

/// Diagonal supermatrices `diag(a_0..a_3, d_0..d_{k-1})` over the kernel of
/// the given linear constraints on the diagonal entries.
fn diagonal_solutions(k: usize, constraints: &[Vec<Scalar>]) -> Vec<Matrix> {
    let n = 4 + k;
    let sys = if constraints.is_empty() {
        Matrix::zeros(1, n)
    } else {
        Matrix::from_rows(constraints.to_vec()).expect("rectangular constraints")
    };
    sys.kernel_vectors().into_iter().map(|v| Matrix::diagonal(&v)).collect()
}

fn diag_constraint(k: usize, terms: &[(usize, i64)]) -> Vec<Scalar> {
    let mut row = vec![Scalar::zero(); 4 + k];
    for &(i, c) in terms {
        row[i] = Scalar::from_int(c);
    }
    row
}

/// `tr A = tr D` on the diagonal variables.
fn supertrace_constraint(k: usize) -> Vec<Scalar> {
    (0..4 + k).map(|i| if i < 4 { Scalar::one() } else { Scalar::from_int(-1) }).collect()
}

/// Span of `(A, D)` with `A` supported on the first `r` columns, `D` on the
/// first `r` rows, and equal `r x r` corners.
pub fn chiral_b_pattern(alg: &Arc<SuperLieAlgebra>, k: usize, r: usize) -> Result<Subspace> {
    check_chiral(k, r)?;
    let mut mats = Vec::new();
    for i in 0..r {
        for j in 0..r {
            mats.push(even_matrix(&Matrix::unit(4, 4, i, j), &Matrix::unit(k, k, i, j)));
        }
    }
    for i in r..4 {
        for j in 0..r {
            mats.push(unit_a(k, i, j));
        }
    }
    for i in 0..r {
        for j in r..k {
            mats.push(unit_d(k, i, j));
        }
    }
    span_of_matrices(alg, &mats)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChiralStructureCheck {
    pub k: usize,
    pub r: usize,
    pub dim_z: usize,
    pub stabilizer_formula: i64,
    pub z_matches_formula: bool,
    pub dim_b: usize,
    pub pattern_dim: usize,
    pub b_equals_pattern: bool,
}

impl ChiralStructureCheck {
    pub fn passed(&self) -> bool {
        self.z_matches_formula && self.b_equals_pattern
    }
}

pub fn chiral_structure_check(k: usize, r: usize) -> Result<ChiralStructureCheck> {
    if k == 4 {
        return Err(CentralizerError::InvalidParameters("the stabilizer formula excludes k = 4".into()));
    }
    let (twist, q) = chiral_setup(k, r)?;
    let ad = AdOperator::new(&q)?;
    let (z, b) = (ad.closed(), ad.exact());
    let pattern = chiral_b_pattern(twist.algebra(), k, r)?;
    let formula = stabilizer_dim_formula(k, r);
    Ok(ChiralStructureCheck {
        k,
        r,
        dim_z: z.dim(),
        stabilizer_formula: formula,
        z_matches_formula: z.dim() as i64 == formula,
        dim_b: b.dim(),
        pattern_dim: pattern.dim(),
        b_equals_pattern: pattern.same_as(&b),
    })
}

/// Rank `(1,1)` representative with `Q+ = E_00` (`k x 4`) and `Q- = E_11` (`4 x k`).
pub fn rank11_supercharge(k: usize) -> Result<Supercharge4d> {
    Ok(Supercharge4d::new(k, Matrix::unit(k, 4, 0, 0), Matrix::unit(4, k, 1, 1))?)
}

/// Off-diagonal units of `A` in row 1 or column 0, and of `D` in row 0 or column 1.
fn rank11_offdiagonal(k: usize) -> Vec<Matrix> {
    let mut a = BTreeSet::new();
    for j in 0..4 {
        a.insert((1, j));
    }
    for i in 0..4 {
        a.insert((i, 0));
    }
    let mut d = BTreeSet::new();
    for j in 0..k {
        d.insert((0, j));
    }
    for i in 0..k {
        d.insert((i, 1));
    }
    let mut mats: Vec<Matrix> = a.into_iter().filter(|(i, j)| i != j).map(|(i, j)| unit_a(k, i, j)).collect();
    mats.extend(d.into_iter().filter(|(i, j)| i != j).map(|(i, j)| unit_d(k, i, j)));
    mats
}

/// Diagonal variables outside `A_00, A_11, D_00, D_11` vanish.
fn rank11_zero_diagonal(k: usize) -> Vec<Vec<Scalar>> {
    [2, 3].into_iter().chain(6..4 + k).map(|i| diag_constraint(k, &[(i, 1)])).collect()
}

/// The stated set: `A` in row 1 or column 0, `D` in row 0 or column 1, `tr A = tr D`.
pub fn rank11_stated_pattern(alg: &Arc<SuperLieAlgebra>, k: usize) -> Result<Subspace> {
    let mut cons = rank11_zero_diagonal(k);
    cons.push(supertrace_constraint(k));
    let mut mats = rank11_offdiagonal(k);
    mats.extend(diagonal_solutions(k, &cons));
    span_of_matrices(alg, &mats)
}

/// The stated supports with `A_00 = D_00` and `A_11 = D_11`.
pub fn rank11_exact_pattern(alg: &Arc<SuperLieAlgebra>, k: usize) -> Result<Subspace> {
    let mut cons = rank11_zero_diagonal(k);
    cons.push(diag_constraint(k, &[(0, 1), (4, -1)]));
    cons.push(diag_constraint(k, &[(1, 1), (5, -1)]));
    let mut mats = rank11_offdiagonal(k);
    mats.extend(diagonal_solutions(k, &cons));
    span_of_matrices(alg, &mats)
}

/// `A` vanishes on row 0 and column 1 off the diagonal, `D` on column 0 and
/// row 1 off the diagonal, with `A_00 = D_00`, `A_11 = D_11`, `tr A = tr D`.
pub fn rank11_closed_pattern(alg: &Arc<SuperLieAlgebra>, k: usize) -> Result<Subspace> {
    let mut mats = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i != 0 && j != 1 {
                mats.push(unit_a(k, i, j));
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && j != 0 && i != 1 {
                mats.push(unit_d(k, i, j));
            }
        }
    }
    let cons = vec![
        diag_constraint(k, &[(0, 1), (4, -1)]),
        diag_constraint(k, &[(1, 1), (5, -1)]),
        supertrace_constraint(k),
    ];
    mats.extend(diagonal_solutions(k, &cons));
    span_of_matrices(alg, &mats)
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank11Check {
    pub k: usize,
    pub dim_b: usize,
    pub stated_dim: usize,
    pub exact_pattern_dim: usize,
    pub b_in_stated: bool,
    pub b_equals_stated: bool,
    pub b_equals_exact_pattern: bool,
    pub z_equals_closed_pattern: bool,
    #[serde(skip_serializing)]
    pub b: Subspace,
}

impl Rank11Check {
    /// Computed `b` and `z` equal the corrected patterns.
    pub fn passed(&self) -> bool {
        self.b_in_stated && self.b_equals_exact_pattern && self.z_equals_closed_pattern
    }
}

pub fn rank11_check(k: usize) -> Result<Rank11Check> {
    if k < 2 {
        return Err(CentralizerError::InvalidParameters(format!("rank (1,1) needs k >= 2, got {k}")));
    }
    let twist = FourDTwist::new(k)?;
    let alg = twist.algebra();
    let q = twist.element(&rank11_supercharge(k)?)?;
    let ad = AdOperator::new(&q)?;
    let (z, b) = (ad.closed(), ad.exact());
    let stated = rank11_stated_pattern(alg, k)?;
    let exact = rank11_exact_pattern(alg, k)?;
    Ok(Rank11Check {
        k,
        dim_b: b.dim(),
        stated_dim: stated.dim(),
        exact_pattern_dim: exact.dim(),
        b_in_stated: stated.contains_subspace(&b),
        b_equals_stated: stated.same_as(&b),
        b_equals_exact_pattern: exact.same_as(&b),
        z_equals_closed_pattern: rank11_closed_pattern(alg, k)?.same_as(&z),
        b,
    })
}

/// `{(X, X) : X in sl(4)}` inside `psl(4|4)`.
pub fn diagonal_sl4(alg: &Arc<SuperLieAlgebra>) -> Result<Subspace> {
    let mut mats = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let u = Matrix::unit(4, 4, i, j);
                mats.push(even_matrix(&u, &u));
            }
        }
    }
    for i in 0..3 {
        let h = &Matrix::unit(4, 4, i, i) - &Matrix::unit(4, 4, i + 1, i + 1);
        mats.push(even_matrix(&h, &h));
    }
    span_of_matrices(alg, &mats)
}

/// Conformal (`4 x 4`) projections of `z` and `b` for the Schur supercharge,
/// in row-major coordinates of `4 x 4` matrices.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionBlocks {
    pub z_conformal_dim: usize,
    pub b_conformal_dim: usize,
    pub z_pattern_dim: usize,
    pub b_pattern_dim: usize,
    pub z_matches_pattern: bool,
    pub b_matches_pattern: bool,
    /// Pure upper-right elements of the conformal part of `z` and `b`.
    pub closed_translations: usize,
    pub exact_translations: usize,
    #[serde(skip_serializing)]
    pub z_conformal: Subspace,
    #[serde(skip_serializing)]
    pub b_conformal: Subspace,
}

impl ProjectionBlocks {
    pub fn passed(&self) -> bool {
        self.z_matches_pattern && self.b_matches_pattern
    }
}

pub fn schur_supercharge() -> Supercharge4d {
    Supercharge4d::parse(2, "1,0,0,0;0,0,1,0", "zero").expect("valid literal")
}

fn unit16(i: usize, j: usize) -> Vec<Scalar> {
    Matrix::unit(4, 4, i, j).to_vec()
}

fn traceless16() -> Subspace {
    let row: Vec<Scalar> = (0..16).map(|p| if p % 5 == 0 { Scalar::one() } else { Scalar::zero() }).collect();
    Matrix::from_rows(vec![row]).expect("one row").kernel()
}

/// 2x2 blocks over index pairs `{0,1}` and `{2,3}`; each block keeps the
/// entries listed in `local` (local row, local column).
fn block_pattern(local: &[(usize, usize)]) -> Subspace {
    let mut vecs = Vec::new();
    for br in 0..2 {
        for bc in 0..2 {
            for &(i, j) in local {
                vecs.push(unit16(2 * br + i, 2 * bc + j));
            }
        }
    }
    Subspace::span(16, &vecs)
}

fn upper_right16() -> Subspace {
    let vecs: Vec<Vec<Scalar>> = (0..2).flat_map(|i| (2..4).map(move |j| unit16(i, j))).collect();
    Subspace::span(16, &vecs)
}

pub fn projection_blocks(q: &Supercharge4d) -> Result<ProjectionBlocks> {
    if q != &schur_supercharge() {
        return Err(CentralizerError::InvalidParameters("expected the Schur representative".into()));
    }
    let twist = FourDTwist::new(2)?;
    let alg = twist.algebra();
    let real = alg.realization().expect("sl(4|2) has a matrix realization");
    let ad = AdOperator::new(&twist.element(q)?)?;
    let a_blocks = |s: &Subspace| -> Vec<Vec<Scalar>> {
        s.basis().iter().map(|v| real.compose(v).block(0, 0, 4, 4).to_vec()).collect()
    };
    let mut z_vecs = a_blocks(&ad.closed());
    // z in gl(4|2) adds the identity supermatrix
    z_vecs.push(Matrix::identity(4).to_vec());
    let sl4 = traceless16();
    let z_conf = Subspace::span(16, &z_vecs).intersection(&sl4)?;
    let b_conf = Subspace::span(16, &a_blocks(&ad.exact())).intersection(&sl4)?;
    let z_pat = block_pattern(&[(0, 0), (1, 0), (1, 1)]).intersection(&sl4)?;
    let b_pat = block_pattern(&[(0, 0), (1, 0)]).intersection(&sl4)?;
    let ur = upper_right16();
    Ok(ProjectionBlocks {
        z_conformal_dim: z_conf.dim(),
        b_conformal_dim: b_conf.dim(),
        z_pattern_dim: z_pat.dim(),
        b_pattern_dim: b_pat.dim(),
        z_matches_pattern: z_pat.same_as(&z_conf),
        b_matches_pattern: b_pat.same_as(&b_conf),
        closed_translations: z_conf.intersection(&ur)?.dim(),
        exact_translations: b_conf.intersection(&ur)?.dim(),
        z_conformal: z_conf,
        b_conformal: b_conf,
    })
}
