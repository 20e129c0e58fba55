use serde::{Deserialize, Serialize};

use super::algebra::{normalize_sparse, sign_for, SuperLieAlgebra};
use super::SuperLieError;
use crate::exactlinalg::{Parity, Scalar};
use crate::par::{self, Exec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Parity,
    Antisymmetry,
    Jacobi,
    Realization,
}

/// First failing identity, with the basis indices involved.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub residual: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub algebra: String,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub pairs_checked: u64,
    pub triples_checked: u64,
    pub realization_checked: bool,
    pub passed: bool,
    pub violation: Option<Violation>,
}

fn violation(alg: &SuperLieAlgebra, kind: ViolationKind, indices: Vec<usize>, residual: Vec<(usize, Scalar)>) -> Violation {
    let labels = indices.iter().map(|&k| alg.label(k).to_string()).collect();
    Violation { kind, indices, labels, residual }
}

fn combined(p: Parity, q: Parity) -> Parity {
    if p == q {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn check_pairs(alg: &SuperLieAlgebra) -> Option<Violation> {
    let dim = alg.dim();
    for a in 0..dim {
        for b in 0..dim {
            let pa = alg.parity(a);
            let pb = alg.parity(b);
            let target = combined(pa, pb);
            let ab = alg.bracket_basis(a, b);
            if let Some((c, _)) = ab.iter().find(|(c, _)| alg.parity(*c) != target) {
                return Some(violation(alg, ViolationKind::Parity, vec![a, b, *c], ab.clone()));
            }
            if b < a {
                continue;
            }
            // [a,b] + (-1)^{|a||b|} [b,a] = 0
            let s = sign_for(pa, pb);
            let mut terms = ab.clone();
            terms.extend(alg.bracket_basis(b, a).iter().map(|(c, x)| (*c, &s * x)));
            let r = normalize_sparse(terms);
            if !r.is_empty() {
                return Some(violation(alg, ViolationKind::Antisymmetry, vec![a, b], r));
            }
        }
    }
    None
}

/// `(-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]`.
pub fn jacobiator(alg: &SuperLieAlgebra, a: usize, b: usize, c: usize) -> Vec<(usize, Scalar)> {
    let mut terms = Vec::new();
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        let s = sign_for(alg.parity(x), alg.parity(z));
        for (k, v) in alg.bracket_basis(y, z) {
            let f = &s * v;
            for (j, w) in alg.bracket_basis(x, *k) {
                terms.push((*j, &f * w));
            }
        }
    }
    normalize_sparse(terms)
}

fn check_jacobi(alg: &SuperLieAlgebra, exec: Exec) -> (u64, Option<Violation>) {
    let dim = alg.dim();
    let found: Vec<Option<Violation>> = par::map_range(dim, exec, |a| {
        for b in 0..dim {
            for c in 0..dim {
                let r = jacobiator(alg, a, b, c);
                if !r.is_empty() {
                    return Some(violation(alg, ViolationKind::Jacobi, vec![a, b, c], r));
                }
            }
        }
        None
    });
    let triples = (dim as u64).pow(3);
    (triples, found.into_iter().flatten().next())
}

fn check_realization(alg: &SuperLieAlgebra, exec: Exec) -> Option<Violation> {
    let r = alg.realization()?;
    let dim = alg.dim();
    let found: Vec<Option<Violation>> = par::map_range(dim, exec, |a| {
        for b in 0..dim {
            let expected = r.bracket_of_basis(a, b);
            let mut coeffs = vec![Scalar::zero(); dim];
            for (c, x) in alg.bracket_basis(a, b) {
                coeffs[*c] = x.clone();
            }
            let got = r.compose(&coeffs);
            let diff = &got - &expected;
            // differences along divided-out directions are allowed
            let residual = if diff.is_zero() {
                None
            } else {
                match r.decompose(&diff) {
                    Ok(c) if c.iter().all(Scalar::is_zero) => None,
                    Ok(c) => Some(normalize_sparse(c.into_iter().enumerate().collect())),
                    Err(_) => Some(Vec::new()),
                }
            };
            if let Some(res) = residual {
                return Some(violation(alg, ViolationKind::Realization, vec![a, b], res));
            }
        }
        None
    });
    found.into_iter().flatten().next()
}

/// Checks parity, graded antisymmetry and the super Jacobi identity on every
/// ordered basis triple, and agreement with the matrix realization when present.
pub fn verify_algebra(alg: &SuperLieAlgebra) -> VerifyReport {
    verify_algebra_with(alg, Exec::default())
}

pub fn verify_algebra_with(alg: &SuperLieAlgebra, exec: Exec) -> VerifyReport {
    let dim = alg.dim() as u64;
    let mut report = VerifyReport {
        algebra: alg.name().to_string(),
        even_dim: alg.even_dim(),
        odd_dim: alg.odd_dim(),
        pairs_checked: dim * dim,
        triples_checked: 0,
        realization_checked: alg.realization().is_some(),
        passed: false,
        violation: None,
    };
    if let Some(v) = check_pairs(alg) {
        report.violation = Some(v);
        return report;
    }
    if let Some(v) = check_realization(alg, exec) {
        report.violation = Some(v);
        return report;
    }
    let (triples, v) = check_jacobi(alg, exec);
    report.triples_checked = triples;
    report.passed = v.is_none();
    report.violation = v;
    report
}

/// Error-returning wrapper for callers that need a verified algebra.
pub fn require_valid(alg: &SuperLieAlgebra) -> Result<(), SuperLieError> {
    let r = verify_algebra(alg);
    match r.violation {
        None => Ok(()),
        Some(v) => Err(SuperLieError::Verification(format!("{:?} at {:?}", v.kind, v.labels))),
    }
}
