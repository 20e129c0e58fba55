use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sconf_core::centralizer::{
    centralizer_3d_example, centralizer_3d_rank1, chiral_dimension_report, projection_blocks, rank11_check,
    schur_supercharge, CentralizerReport,
};
use sconf_core::exactlinalg::Matrix;
use sconf_core::par::Exec;
use sconf_core::realform::{hermitian_orbit_label, kernel_fiber, schur_realform_report, GrassmannPoint, HermitianForm, Signature};
use sconf_core::report::{chiral_table_markdown, verify_all, verify_criteria, VerifyOptions};
use sconf_core::superlie::f4::SPINOR_DIM;
use sconf_core::superlie::{verify_algebra_with, AlgebraElement, Family, SuperLieAlgebra};
use sconf_core::twist::{
    canonical_rep_4d, FiveDTwist, FourDTwist, N4PureTensor, Supercharge3d, Supercharge4d, Supercharge5d, ThreeDTwist,
    TwistError,
};

use crate::args::{AlgebraCmd, CentralizerCmd, FamilyArgs, RealformCmd, SuperchargeArgs, TwistCmd, Verb, VerifyCmd};

/// Invalid flags or inputs; exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, UsageError>;

pub struct Outcome {
    pub payload: Value,
    /// False on any verification failure; exit code 1.
    pub ok: bool,
    /// Markdown rendering when it differs from the generic one.
    pub markdown: Option<String>,
}

impl Outcome {
    fn new(payload: impl Serialize, ok: bool) -> Self {
        Self { payload: serde_json::to_value(payload).expect("serializable"), ok, markdown: None }
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn parse_family(s: &str) -> Result<Family> {
    s.parse::<Family>().map_err(|_| usage(format!("unknown family `{s}` (expected sl4k, psl44, osp or f4)")))
}

fn resolve_k(family: Family, k: Option<usize>) -> Result<usize> {
    match family {
        Family::Psl44 => match k {
            None | Some(4) => Ok(4),
            Some(k) => Err(usage(format!("psl44 has k = 4, got {k}"))),
        },
        Family::F4 => Ok(0),
        _ => k.ok_or_else(|| usage("--k is required for this family")),
    }
}

fn build_algebra(f: &FamilyArgs) -> Result<SuperLieAlgebra> {
    let family = parse_family(&f.family)?;
    let k = resolve_k(family, f.k)?;
    match family {
        Family::OspK4 => Ok(sconf_core::superlie::osp(k, f.two_n)?),
        Family::Sl4k if k == 4 => Err(usage("sl4k needs k != 4; use --family psl44")),
        _ => Ok(family.build(k)?),
    }
}

/// Supercharge JSON document: `family`, `k`, and literal fields per family.
#[derive(Debug, Default, Deserialize, Serialize)]
pub struct SuperchargeDoc {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_plus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_minus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q2: Option<String>,
}

impl SuperchargeDoc {
    fn from_args(a: &SuperchargeArgs) -> Result<Self> {
        if let Some(path) = &a.input {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            return serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())));
        }
        Ok(Self {
            family: a.family.family.clone(),
            k: a.family.k,
            two_n: (parse_family(&a.family.family)? == Family::OspK4).then_some(a.family.two_n),
            q_plus: a.qplus.clone(),
            q_minus: a.qminus.clone(),
            block: a.block.clone(),
            q1: a.q1.clone(),
            q2: a.q2.clone(),
        })
    }
}

fn literal(field: &Option<String>, name: &str, shape: (usize, usize)) -> Result<Matrix> {
    let s = field.as_deref().ok_or_else(|| usage(format!("missing --{name}")))?;
    Matrix::parse_with_shape(s, Some(shape)).map_err(|e| usage(format!("--{name}: {e}")))
}

enum Target {
    FourD(FourDTwist, Supercharge4d),
    ThreeD(ThreeDTwist, Supercharge3d),
    FiveD(FiveDTwist, Supercharge5d),
}

impl Target {
    fn from_doc(d: &SuperchargeDoc) -> Result<Self> {
        let family = parse_family(&d.family)?;
        let k = resolve_k(family, d.k)?;
        match family {
            Family::Sl4k | Family::Psl44 => {
                if family == Family::Sl4k && k == 4 {
                    return Err(usage("sl4k needs k != 4; use --family psl44"));
                }
                let t = FourDTwist::new(k)?;
                let q = Supercharge4d::new(k, literal(&d.q_plus, "qplus", (k, 4))?, literal(&d.q_minus, "qminus", (4, k))?)?;
                Ok(Target::FourD(t, q))
            }
            Family::OspK4 => {
                let two_n = d.two_n.unwrap_or(4);
                let t = ThreeDTwist::with_symplectic(k, two_n)?;
                let q = Supercharge3d::from_block(&literal(&d.block, "block", (two_n, k))?)?;
                Ok(Target::ThreeD(t, q))
            }
            Family::F4 => {
                let t = FiveDTwist::new()?;
                let q1 = literal(&d.q1, "q1", (1, SPINOR_DIM))?.row(0).to_vec();
                let q2 = literal(&d.q2, "q2", (1, SPINOR_DIM))?.row(0).to_vec();
                Ok(Target::FiveD(t, Supercharge5d::new(q1, q2)?))
            }
        }
    }

    fn element(&self) -> std::result::Result<AlgebraElement, TwistError> {
        match self {
            Target::FourD(t, q) => t.element(q),
            Target::ThreeD(t, q) => t.element(q),
            Target::FiveD(t, q) => t.element(q),
        }
    }
}

fn classify(a: &SuperchargeArgs) -> Result<Outcome> {
    let doc = SuperchargeDoc::from_args(a)?;
    let target = Target::from_doc(&doc)?;
    let (orbit, cone) = match &target {
        Target::FourD(t, q) => {
            let cone = if q.k == 4 {
                N4PureTensor::from_supercharge(q).ok().map(|p| t.classify_n4_component(&p)).transpose()?
            } else {
                None
            };
            (t.orbit_invariant(q), cone)
        }
        Target::ThreeD(t, q) => (t.orbit_invariant(q), None),
        Target::FiveD(t, q) => (t.orbit_invariant(q), None),
    };
    match orbit {
        Ok(class) => {
            let mut payload = json!({ "input": doc, "nilpotent": true, "label": class.label(), "orbit": class });
            if let Some(c) = cone {
                payload["pure_tensor_cone"] = serde_json::to_value(c).expect("serializable");
            }
            Ok(Outcome::new(payload, true))
        }
        Err(e @ (TwistError::NotNilpotent(_) | TwistError::InvariantViolation(_))) => {
            Ok(Outcome::new(json!({ "input": doc, "nilpotent": false, "diagnostic": e.to_string() }), false))
        }
        Err(e) => Err(e.into()),
    }
}

fn centralizer_compute(a: &SuperchargeArgs) -> Result<Outcome> {
    let doc = SuperchargeDoc::from_args(a)?;
    let target = Target::from_doc(&doc)?;
    let x = target.element()?;
    let report = match CentralizerReport::compute(&x) {
        Ok(r) => r,
        Err(e) => return Ok(Outcome::new(json!({ "input": doc, "diagnostic": e.to_string() }), false)),
    };
    let literals = report.basis_literals(x.algebra());
    let mut payload = json!({
        "input": doc,
        "algebra": report.algebra,
        "dim_z": report.dim_z,
        "dim_b": report.dim_b,
        "dim_quotient": report.dim_quotient,
    });
    if let Some((z, b)) = literals {
        payload["basis_z"] = json!(z);
        payload["basis_b"] = json!(b);
    }
    Ok(Outcome::new(payload, true))
}

fn parse_k_range(s: &str) -> Result<Vec<usize>> {
    let bad = || usage(format!("--k: expected `a..b` or a comma list, got `{s}`"));
    let ks: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
        (a..=b).collect()
    } else {
        s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
    };
    if ks.is_empty() || ks.contains(&0) {
        return Err(bad());
    }
    Ok(ks)
}

pub fn run(verb: &Verb, seed: u64, exec: Exec) -> Result<Outcome> {
    match verb {
        Verb::Algebra(AlgebraCmd::Dump(f)) => Ok(Outcome::new(build_algebra(f)?.to_dump(), true)),
        Verb::Algebra(AlgebraCmd::Verify(f)) => {
            let rep = verify_algebra_with(&build_algebra(f)?, exec);
            let ok = rep.passed;
            Ok(Outcome::new(rep, ok))
        }
        Verb::Twist(TwistCmd::Classify(a)) => classify(a),
        Verb::Twist(TwistCmd::Canonical { k, r, r_minus }) => {
            let q = canonical_rep_4d(*k, *r, *r_minus)?;
            let doc = SuperchargeDoc {
                family: if *k == 4 { "psl44" } else { "sl4k" }.into(),
                k: Some(*k),
                q_plus: Some(q.q_plus.to_string()),
                q_minus: Some(q.q_minus.to_string()),
                ..Default::default()
            };
            Ok(Outcome::new(doc, true))
        }
        Verb::Centralizer(c) => match c {
            CentralizerCmd::Compute(a) => centralizer_compute(a),
            CentralizerCmd::Chiral { k, r } => {
                let rep = chiral_dimension_report(*k, *r)?;
                let ok = rep.matches();
                Ok(Outcome::new(rep, ok))
            }
            CentralizerCmd::Schur => {
                let p = projection_blocks(&schur_supercharge())?;
                let ok = p.passed();
                Ok(Outcome::new(p, ok))
            }
            CentralizerCmd::Rank11 { k } => {
                let r = rank11_check(*k)?;
                let ok = r.passed() && r.b_equals_stated;
                Ok(Outcome::new(r, ok))
            }
            CentralizerCmd::OspExample => {
                let ex = centralizer_3d_example()?;
                let ok = ex.passed();
                Ok(Outcome::new(ex, ok))
            }
            CentralizerCmd::OspRank1 { k } => {
                let r = centralizer_3d_rank1(*k)?;
                let ok = r.z_matches() && r.b_matches_stated();
                Ok(Outcome::new(r, ok))
            }
        },
        Verb::Realform(r) => match r {
            RealformCmd::Schur { signature } => {
                let rep = schur_realform_report(Signature::parse(signature)?)?;
                let ok = rep.matches_stated();
                Ok(Outcome::new(rep, ok))
            }
            RealformCmd::Label { plane } => {
                let m = Matrix::parse_with_shape(plane, None)?;
                if m.cols() != 4 {
                    return Err(usage("--plane: rows must have 4 entries"));
                }
                let p = GrassmannPoint::span(4, &m.row_list());
                let label = hermitian_orbit_label(&p, &HermitianForm::split())?;
                Ok(Outcome::new(json!({ "plane": p, "label": label }), true))
            }
            RealformCmd::KernelFiber { k, qplus } => {
                let q = Supercharge4d::chiral(Matrix::parse_with_shape(qplus, Some((*k, 4)))?)?;
                Ok(Outcome::new(kernel_fiber(&q)?, true))
            }
        },
        Verb::Verify(VerifyCmd::All { corrupt, only }) => {
            let opts = VerifyOptions { seed, exec, corrupt: corrupt.clone(), ..Default::default() };
            if let Some(bad) = only.iter().find(|&&id| !(1..=8).contains(&id)) {
                return Err(usage(format!("--only: criterion ids are 1 to 8, got {bad}")));
            }
            let rep = if only.is_empty() { verify_all(&opts) } else { verify_criteria(&opts, only) };
            let ok = rep.passed;
            let markdown = Some(crate::render::verify_matrix(&rep));
            Ok(Outcome { payload: serde_json::to_value(rep).expect("serializable"), ok, markdown })
        }
        Verb::Verify(VerifyCmd::Tables { k }) => {
            let ks = parse_k_range(k)?;
            let table = chiral_table_markdown(&ks, exec);
            let cells: Vec<Value> = ks
                .iter()
                .flat_map(|&k| (1..=k.min(4)).map(move |r| (k, r)))
                .map(|(k, r)| {
                    chiral_dimension_report(k, r)
                        .map(|rep| serde_json::to_value(rep).expect("serializable"))
                        .unwrap_or_else(|e| json!({ "k": k, "r": r, "error": e.to_string() }))
                })
                .collect();
            Ok(Outcome { payload: json!({ "ks": ks, "cells": cells }), ok: true, markdown: Some(table) })
        }
    }
}

pub fn write_output(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut s = std::io::stdout().lock();
            s.write_all(text.as_bytes())?;
            s.flush()
        }
    }
}
