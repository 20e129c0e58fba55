//! One pass/fail line per acceptance criterion. Failing claims must be exactly
//! the analysed discrepancies between stated and computed values.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use sconf_core::report::{verify_all, verify_criteria, SuiteReport, VerifyOptions};

/// Claims whose stated value disagrees with the exact computation.
fn analysed_failures() -> BTreeSet<String> {
    let mut keys = BTreeSet::new();
    // kernel closed form is one short off the diagonal, and the k = 4 row is shifted
    for k in 1..=8usize {
        for r in 1..=k.min(4) {
            if r != k || k == 4 {
                keys.insert(format!("chiral:dim-z:k={k},r={r}"));
            }
        }
    }
    keys.insert("chiral:dim-b:k=4,r=4".into());
    // the stated Euclidean set is not fixed by the involution; split exact part has 7 real dims
    keys.insert("realform:euclidean-dims".into());
    keys.insert("realform:split-dims".into());
    // unipotent elements of the null-vector stabilizer shift the x-parameter
    keys.insert("invariance:3d-x-parameter".into());
    // [Q0 (x) w, P0 (x) v] contributes w ^ v, so rank-one b has dimension k + 2
    for k in 3..=8 {
        keys.insert(format!("rank1-3d:dim-b:k={k}"));
    }
    keys
}

/// Written straight to stderr so the lines survive output capture.
fn print_matrix(rep: &SuiteReport, elapsed: Duration) {
    let mut out = String::new();
    for c in &rep.criteria {
        let failed: Vec<&str> = c.claims.iter().filter(|x| !x.passed).map(|x| x.key.as_str()).collect();
        out += &format!(
            "criterion {} ({}): {} [{} claims, {} failed]\n",
            c.id,
            c.title,
            if c.passed { "PASS" } else { "FAIL" },
            c.claims.len(),
            failed.len()
        );
    }
    out += &format!("{} claims in {:.1}s\n", rep.claim_count, elapsed.as_secs_f64());
    std::io::stderr().write_all(out.as_bytes()).unwrap();
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let opts = VerifyOptions::default();
    let rep = verify_all(&opts);
    let elapsed = start.elapsed();
    print_matrix(&rep, elapsed);

    let keys: BTreeSet<&str> = rep.criteria.iter().flat_map(|c| &c.claims).map(|c| c.key.as_str()).collect();
    assert_eq!(keys.len(), rep.claim_count, "claim keys are unique");
    assert!(rep.claim_count >= 40);
    assert_eq!(rep.criteria.len(), 8);

    let failed: BTreeSet<String> = rep.failed_keys.iter().cloned().collect();
    let expected = analysed_failures();
    let unexpected: Vec<_> = failed.difference(&expected).collect();
    let missing: Vec<_> = expected.difference(&failed).collect();
    assert!(unexpected.is_empty(), "unanalysed failures: {unexpected:?}");
    assert!(missing.is_empty(), "analysed failures now pass: {missing:?}");

    let status: Vec<bool> = rep.criteria.iter().map(|c| c.passed).collect();
    assert_eq!(status, [true, false, false, true, false, false, true, true]);

    let again = serde_json::to_string(&verify_all(&opts)).unwrap();
    assert_eq!(serde_json::to_string(&rep).unwrap(), again, "byte-identical rerun");

    assert!(elapsed < Duration::from_secs(120), "suite took {elapsed:?}");
}

#[test]
fn diagonal_cells_and_derived_values_pass() {
    let rep = verify_criteria(&VerifyOptions::default(), &[2, 3, 6]);
    for key in [
        "chiral:dim-z:k=1,r=1",
        "chiral:dim-z:k=2,r=2",
        "chiral:dim-z:k=3,r=3",
        "chiral:dim-b:k=7,r=3",
        "schur:dim-z",
        "schur:dim-b",
        "schur:closed-block-pattern",
        "schur:exact-block-pattern",
        "realform:lorentzian-dims",
        "realform:split-translations",
        "realform:split-matches-complex-blocks",
        "osp2-example:closed-is-parabolic",
        "osp2-example:exact-spanned-by-listed",
        "rank1-3d:dim-b:k=2",
        "rank1-3d:dim-z:k=8",
    ] {
        let c = rep.claim(key).unwrap_or_else(|| panic!("missing {key}"));
        assert!(c.passed, "{key}: {c:?}");
    }
    let c = rep.claim("rank1-3d:dim-b:k=5").unwrap();
    assert_eq!((c.expected.as_u64(), c.actual.as_u64()), (Some(4), Some(7)));
}

#[test]
fn corrupted_fixture_fails_its_key() {
    for key in ["labels:basis-invariance", "labels:random-planes-outside", "schur:dim-z"] {
        let opts = VerifyOptions { corrupt: Some(key.into()), ..Default::default() };
        let rep = verify_criteria(&opts, &[3, 7]);
        assert!(rep.failed_keys.contains(&key.to_string()), "{key}");
        let clean = verify_criteria(&VerifyOptions::default(), &[3, 7]);
        assert!(!clean.failed_keys.contains(&key.to_string()));
    }
}

#[test]
fn seed_changes_samples_not_verdicts() {
    let a = verify_criteria(&VerifyOptions { seed: 7, ..Default::default() }, &[7]);
    let b = verify_criteria(&VerifyOptions { seed: 8, ..Default::default() }, &[7]);
    assert_eq!(a.seed, 7);
    assert_eq!(b.seed, 8);
    assert!(a.passed && b.passed);
}
