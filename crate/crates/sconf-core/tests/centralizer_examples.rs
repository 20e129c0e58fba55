use std::sync::Arc;

use sconf_core::centralizer::*;
use sconf_core::exactlinalg::{Matrix, Scalar};
use sconf_core::superlie::{sl, AlgebraElement};
use sconf_core::twist::{canonical_rep_4d, FourDTwist, Supercharge4d};

fn report_4d(q: &Supercharge4d) -> CentralizerReport {
    let t = FourDTwist::new(q.k).unwrap();
    CentralizerReport::compute(&t.element(q).unwrap()).unwrap()
}

/// Dimension of `{(A, D) : D C = C A, A B = B D, tr A = tr D}` by solving the
/// linear system on raw matrix entries, independent of any algebra basis.
fn brute_force_z_dim(q: &Supercharge4d) -> usize {
    let k = q.k;
    let n = 16 + k * k;
    let var_a = |i: usize, j: usize| 4 * i + j;
    let var_d = |i: usize, j: usize| 16 + k * i + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let c = &q.q_plus;
    let b = &q.q_minus;
    // (D C - C A)_{ij}
    for i in 0..k {
        for j in 0..4 {
            let mut row = vec![Scalar::zero(); n];
            for l in 0..k {
                row[var_d(i, l)] = &row[var_d(i, l)] + &c[(l, j)];
            }
            for l in 0..4 {
                row[var_a(l, j)] = &row[var_a(l, j)] - &c[(i, l)];
            }
            rows.push(row);
        }
    }
    // (A B - B D)_{ij}
    for i in 0..4 {
        for j in 0..k {
            let mut row = vec![Scalar::zero(); n];
            for l in 0..4 {
                row[var_a(i, l)] = &row[var_a(i, l)] + &b[(l, j)];
            }
            for l in 0..k {
                row[var_d(l, j)] = &row[var_d(l, j)] - &b[(i, l)];
            }
            rows.push(row);
        }
    }
    let mut tr = vec![Scalar::zero(); n];
    for i in 0..4 {
        tr[var_a(i, i)] = Scalar::one();
    }
    for i in 0..k {
        tr[var_d(i, i)] = Scalar::from_int(-1);
    }
    rows.push(tr);
    n - Matrix::from_rows(rows).unwrap().rank()
}

#[test]
fn zero_supercharge_centralizes_everything() {
    let r = report_4d(&Supercharge4d::zero(2));
    assert_eq!((r.dim_z, r.dim_b), (19, 0));
}

#[test]
fn schur_dimensions_and_ideal() {
    let r = report_4d(&schur_supercharge());
    assert_eq!((r.dim_z, r.dim_b, r.dim_quotient), (11, 8, 3));
    let alg = Arc::new(sl(4, 2).unwrap());
    assert!(ideal_check(&r, &alg).passed());
}

#[test]
fn non_nilpotent_rejected() {
    let alg = Arc::new(sl(4, 2).unwrap());
    let q = FourDTwist::new(2).unwrap().element(&Supercharge4d::parse(2, "1,0,0,0;0,0,0,0", "1,0;0,0;0,0;0,0").unwrap()).unwrap();
    assert!(matches!(z_even(&q), Err(CentralizerError::NotNilpotent)));
    let even = AlgebraElement::basis(&alg, 0);
    assert!(matches!(b_even(&even), Err(CentralizerError::NotOdd)));
}

#[test]
fn kernel_matches_brute_force_oracle() {
    for k in 1..=6 {
        for rp in 0..=k.min(4) {
            for rm in 0..=(k.min(4) - rp) {
                let q = canonical_rep_4d(k, rp, rm).unwrap();
                if k == 4 {
                    continue;
                }
                assert_eq!(report_4d(&q).dim_z, brute_force_z_dim(&q), "k={k} ranks=({rp},{rm})");
            }
        }
    }
}

#[test]
fn ideal_holds_for_canonical_representatives() {
    for k in 1..=6 {
        let t = FourDTwist::new(k).unwrap();
        for rp in 0..=k.min(4) {
            for rm in 0..=(k.min(4) - rp) {
                let q = canonical_rep_4d(k, rp, rm).unwrap();
                let r = CentralizerReport::compute(&t.element(&q).unwrap()).unwrap();
                assert!(ideal_check(&r, t.algebra()).passed(), "k={k} ({rp},{rm})");
                assert_eq!(r.dim_quotient, r.dim_z - r.dim_b);
            }
        }
    }
}

#[test]
fn chiral_dimensions_closed_form_for_all_cells() {
    // exact kernel dimension is k^2 - kr + r^2 - 4r + 15 away from k = 4
    for k in (1..=8).filter(|&k| k != 4) {
        for r in 1..=k.min(4) {
            let rep = chiral_dimension_report(k, r).unwrap();
            let (ki, ri) = (k as i64, r as i64);
            assert_eq!(rep.dim_z as i64, ki * ki - ki * ri + ri * ri - 4 * ri + 15, "k={k} r={r}");
            assert!(rep.b_matches, "k={k} r={r}");
            assert!(rep.ideal);
        }
    }
}

#[test]
fn tabulated_kernel_dimension_is_one_short_off_the_diagonal() {
    for k in (1..=8).filter(|&k| k != 4) {
        for r in 1..=k.min(4) {
            let rep = chiral_dimension_report(k, r).unwrap();
            let diff = rep.dim_z as i64 - rep.expected.dim_z;
            assert_eq!(diff, if r == k { 0 } else { 1 }, "k={k} r={r}");
            assert_eq!(rep.z_matches, r == k);
        }
    }
}

#[test]
fn schur_cell_matches_closed_forms() {
    let rep = chiral_dimension_report(2, 2).unwrap();
    assert_eq!((rep.dim_z, rep.dim_b, rep.dim_quotient), (11, 8, 3));
    assert!(rep.matches());
}

#[test]
fn k3_rank1_cell() {
    let rep = chiral_dimension_report(3, 1).unwrap();
    assert_eq!((rep.dim_z, rep.dim_b, rep.dim_quotient), (18, 6, 12));
    assert_eq!(rep.expected.dim_z, 17);
    assert!(!rep.z_matches);
    assert!(rep.b_matches);
}

#[test]
fn chiral_rank1_k2_dims() {
    let rep = chiral_dimension_report(2, 1).unwrap();
    assert_eq!((rep.dim_z, rep.dim_b), (14, 5));
}

#[test]
fn full_rank_in_psl44_is_diagonal_sl4() {
    let t = FourDTwist::new(4).unwrap();
    for r in 1..=4 {
        let rep = chiral_dimension_report(4, r).unwrap();
        assert!(rep.ideal);
        assert_eq!(rep.dim_z as i64, [23, 18, 15, 15][r - 1]);
        assert_eq!(rep.dim_b as i64, [7, 12, 15, 15][r - 1]);
    }
    let rep = report_4d(&canonical_rep_4d(4, 4, 0).unwrap());
    let diag = diagonal_sl4(t.algebra()).unwrap();
    assert_eq!(diag.dim(), 15);
    assert!(diag.same_as(&rep.basis_z));
    assert!(diag.same_as(&rep.basis_b));
    let stated = chiral_closed_forms(4, 4).unwrap();
    assert_eq!((stated.dim_z, stated.dim_b), (14, 16));
}

#[test]
fn chiral_exact_pattern_spans_b() {
    for (k, r) in [(2, 1), (2, 2), (3, 2), (5, 3), (6, 4)] {
        let c = chiral_structure_check(k, r).unwrap();
        assert!(c.b_equals_pattern, "k={k} r={r}");
        assert_eq!(c.dim_b, k * r + 4 * r - r * r);
    }
    assert_eq!(chiral_structure_check(5, 3).unwrap().dim_b, 18);
}

#[test]
fn stabilizer_formula_matches_only_on_the_diagonal() {
    let c = chiral_structure_check(2, 2).unwrap();
    assert_eq!((c.dim_z, c.stabilizer_formula), (11, 11));
    assert!(c.passed());
    let c = chiral_structure_check(2, 1).unwrap();
    assert_eq!((c.dim_z, c.stabilizer_formula), (14, 13));
    assert!(!c.z_matches_formula);
    assert!(chiral_structure_check(4, 2).is_err());
}

#[test]
fn rank11_patterns() {
    for k in 2..=5 {
        let c = rank11_check(k).unwrap();
        assert!(c.passed(), "k={k}: {c:?}");
        assert_eq!(c.dim_b, 2 * k + 4);
        assert_eq!(c.stated_dim, 2 * k + 5);
        assert!(c.b_in_stated);
        assert!(!c.b_equals_stated);
    }
}

#[test]
fn rank11_corrupted_pattern_is_rejected() {
    let t = FourDTwist::new(2).unwrap();
    let c = rank11_check(2).unwrap();
    let good = rank11_exact_pattern(t.algebra(), 2).unwrap();
    assert!(good.same_as(&c.b));
    // drop the identification of the (0,0) corners
    let bad = rank11_stated_pattern(t.algebra(), 2).unwrap();
    assert!(!bad.same_as(&c.b));
    assert!(rank11_check(1).is_err());
}

#[test]
fn schur_projection_patterns() {
    let p = projection_blocks(&schur_supercharge()).unwrap();
    assert!(p.passed(), "{p:?}");
    assert_eq!((p.z_conformal_dim, p.b_conformal_dim), (11, 7));
    assert_eq!((p.z_pattern_dim, p.b_pattern_dim), (11, 7));
    assert_eq!((p.closed_translations, p.exact_translations), (3, 2));
    assert!(projection_blocks(&canonical_rep_4d(2, 1, 0).unwrap()).is_err());
}

#[test]
fn three_d_example() {
    let ex = centralizer_3d_example().unwrap();
    assert_eq!((ex.report.dim_z, ex.report.dim_b), (7, 4));
    assert!(ex.passed(), "{ex:?}");
}

#[test]
fn three_d_rank1_dimensions() {
    for k in 2..=7 {
        let r = centralizer_3d_rank1(k).unwrap();
        assert!(r.z_matches(), "{r:?}");
        assert!(r.b_matches_derived(), "{r:?}");
        assert_eq!(r.b_matches_stated(), k == 2);
    }
    assert_eq!(centralizer_3d_rank1(4).unwrap().dim_z, 10);
    assert_eq!(centralizer_3d_rank1(6).unwrap().dim_b, 8);
    assert!(centralizer_3d_rank1(1).is_err());
}
