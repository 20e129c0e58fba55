//! Seeded verification suite: role-keyed claims grouped into eight criteria.

mod samplers;

pub use samplers::{pure_tensor, supercharge_3d, supercharge_4d, supercharge_5d};

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::centralizer::{
    centralizer_3d_example, centralizer_3d_rank1, chiral_closed_forms, chiral_dimension_report, diagonal_sl4,
    projection_blocks, schur_supercharge, CentralizerReport,
};
use crate::exactlinalg::{Parity, Scalar};
use crate::par::{self, Exec};
use crate::realform::{
    hermitian_orbit_label, schur_realform_report, witness_planes, GrassmannPoint, HermitianForm, OrbitLabel,
    Signature,
};
use crate::sample::{self, SampleRng};
use crate::superlie::{self, supercommutator, SuperLieAlgebra};
use crate::twist::{
    canonical_rep_4d, canonical_rep_4d_with_det, image_is_isotropic, null_spinor, orbit_param_3d, orbit_rank_3d,
    FiveDTwist, FourDGroupElement, FourDTwist, N4PureTensor, Supercharge3d, Supercharge4d, Supercharge5d,
    ThreeDGroupElement, ThreeDTwist, TwistError,
};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub key: String,
    pub passed: bool,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub claim_count: usize,
    pub failed_keys: Vec<String>,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn criterion(&self, id: u8) -> Option<&CriterionReport> {
        self.criteria.iter().find(|c| c.id == id)
    }

    pub fn claim(&self, key: &str) -> Option<&Claim> {
        self.criteria.iter().flat_map(|c| &c.claims).find(|c| c.key == key)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub exec: Exec,
    /// Claims whose key starts with this prefix get a perturbed expected value.
    pub corrupt: Option<String>,
    pub equivalence_samples: usize,
    pub invariance_elements: usize,
    pub random_planes: usize,
    pub oracle_pairs: usize,
    /// Rerun the sampled criteria and compare serializations.
    pub rerun_check: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: sample::DEFAULT_SEED,
            exec: Exec::Parallel,
            corrupt: None,
            equivalence_samples: 200,
            invariance_elements: 50,
            random_planes: 500,
            oracle_pairs: 100,
            rerun_check: true,
        }
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "algebra integrity"),
    (2, "chiral centralizer dimensions"),
    (3, "schur case study"),
    (4, "nilpotence characterizations"),
    (5, "orbit invariants"),
    (6, "three-dimensional structure"),
    (7, "hermitian orbit labels"),
    (8, "determinism"),
];

fn claim(key: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Claim {
    let expected = serde_json::to_value(expected).expect("serializable");
    let actual = serde_json::to_value(actual).expect("serializable");
    Claim { key: key.into(), passed: expected == actual, expected, actual }
}

/// Failed computations become failing claims carrying the error text.
fn fallible<T: Serialize, E: std::fmt::Display>(
    key: impl Into<String>,
    expected: impl Serialize,
    actual: Result<T, E>,
) -> Claim {
    match actual {
        Ok(v) => claim(key, expected, v),
        Err(e) => claim(key, expected, json!({ "error": e.to_string() })),
    }
}

fn perturb(v: &Value) -> Value {
    match v {
        Value::Bool(b) => Value::Bool(!b),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => json!(u + 1),
            (_, Some(i)) => json!(i + 1),
            _ => json!(n.as_f64().unwrap_or(0.0) + 1.0),
        },
        Value::Array(a) if !a.is_empty() => {
            let mut a = a.clone();
            a[0] = perturb(&a[0]);
            Value::Array(a)
        }
        Value::String(s) => Value::String(format!("{s}*")),
        other => json!({ "corrupted": other }),
    }
}

fn flatten(groups: Vec<Vec<Claim>>) -> Vec<Claim> {
    groups.into_iter().flatten().collect()
}

fn rng_for(opts: &VerifyOptions, label: &str) -> SampleRng {
    sample::sub_rng(opts.seed, label)
}

// ---------------------------------------------------------------- criterion 1

fn integrity_targets() -> Vec<(String, Box<dyn Fn() -> Result<SuperLieAlgebra, superlie::SuperLieError> + Send + Sync>)> {
    type Build = Box<dyn Fn() -> Result<SuperLieAlgebra, superlie::SuperLieError> + Send + Sync>;
    let mut out: Vec<(String, Build)> = Vec::new();
    for n in 3..=6usize {
        for q in 0..=n / 2 {
            let p = n - q;
            out.push((format!("conf({p},{q})"), Box::new(move || superlie::conformal(p, q))));
        }
    }
    for k in [1usize, 2, 3, 5, 6] {
        out.push((format!("sl(4|{k})"), Box::new(move || superlie::sl(4, k))));
    }
    out.push(("psl(4|4)".into(), Box::new(|| superlie::psl(4))));
    for k in 1..=8usize {
        out.push((format!("osp({k}|4)"), Box::new(move || superlie::osp(k, 4))));
    }
    out.push(("osp(8|2)".into(), Box::new(|| superlie::osp(8, 2))));
    out.push(("f(4)".into(), Box::new(superlie::f4)));
    out
}

fn random_homogeneous(rng: &mut SampleRng, alg: &SuperLieAlgebra, parity: Parity) -> Vec<Scalar> {
    let idx = if parity == Parity::Odd { alg.odd_indices() } else { alg.even_indices() };
    let mut x = vec![Scalar::zero(); alg.dim()];
    for _ in 0..3 {
        let a = *sample::choose(rng, &idx);
        x[a] = sample::nonzero_scalar(rng);
    }
    x
}

/// Mismatches between the structure-constant bracket and the supercommutator of
/// realizing matrices on random homogeneous pairs.
fn realization_mismatches(rng: &mut SampleRng, alg: &SuperLieAlgebra, pairs: usize) -> Result<usize, String> {
    let real = alg.realization().ok_or("no matrix realization")?;
    let pick = |rng: &mut SampleRng| {
        if alg.odd_dim() > 0 && sample::coin(rng, 0.5) {
            Parity::Odd
        } else {
            Parity::Even
        }
    };
    let mut bad = 0;
    for _ in 0..pairs {
        let (px, py) = (pick(rng), pick(rng));
        let x = random_homogeneous(rng, alg, px);
        let y = random_homogeneous(rng, alg, py);
        let by_constants = alg.bracket_coeffs(&x, &y);
        let m = supercommutator(&real.compose(&x), px, &real.compose(&y), py);
        let by_matrices = real.decompose(&m).map_err(|e| e.to_string())?;
        if by_constants != by_matrices {
            bad += 1;
        }
    }
    Ok(bad)
}

fn criterion_integrity(opts: &VerifyOptions) -> Vec<Claim> {
    let targets = integrity_targets();
    flatten(par::map_slice(&targets, opts.exec, |(name, build)| {
        let alg = match build() {
            Ok(a) => a,
            Err(e) => return vec![fallible::<bool, _>(format!("algebra:{name}:identities"), true, Err(e))],
        };
        let report = superlie::verify_algebra_with(&alg, Exec::Sequential);
        let mut out = vec![claim(format!("algebra:{name}:identities"), true, report.passed)];
        if alg.realization().is_some() {
            let mut rng = rng_for(opts, &format!("oracle:{name}"));
            out.push(fallible(
                format!("algebra:{name}:matrix-oracle-mismatches"),
                0,
                realization_mismatches(&mut rng, &alg, opts.oracle_pairs),
            ));
        }
        out
    }))
}

// ---------------------------------------------------------------- criterion 2

fn chiral_cells(ks: &[usize]) -> Vec<(usize, usize)> {
    ks.iter().flat_map(|&k| (1..=k.min(4)).map(move |r| (k, r))).collect()
}

fn criterion_chiral(opts: &VerifyOptions) -> Vec<Claim> {
    let cells = chiral_cells(&(1..=8).collect::<Vec<_>>());
    flatten(par::map_slice(&cells, opts.exec, |&(k, r)| {
        let cell = format!("k={k},r={r}");
        match chiral_dimension_report(k, r) {
            Ok(rep) => vec![
                claim(format!("chiral:dim-z:{cell}"), rep.expected.dim_z, rep.dim_z),
                claim(format!("chiral:dim-b:{cell}"), rep.expected.dim_b, rep.dim_b),
                claim(format!("chiral:ideal:{cell}"), true, rep.ideal),
            ],
            Err(e) => vec![fallible::<usize, _>(format!("chiral:dim-z:{cell}"), 0, Err(e))],
        }
    }))
}

/// Markdown table of computed and closed-form chiral dimensions.
pub fn chiral_table_markdown(ks: &[usize], exec: Exec) -> String {
    let cells = chiral_cells(ks);
    let rows = par::map_slice(&cells, exec, |&(k, r)| match (chiral_dimension_report(k, r), chiral_closed_forms(k, r)) {
        (Ok(rep), Ok(cf)) => format!(
            "| {k} | {r} | {} | {} | {} | {} | {} | {} | {} |",
            rep.algebra.replace('|', "\\|"),
            rep.dim_z,
            cf.dim_z,
            rep.dim_b,
            cf.dim_b,
            rep.dim_quotient,
            if rep.matches() { "yes" } else { "no" }
        ),
        (Err(e), _) => format!("| {k} | {r} | error: {e} | | | | | | |"),
        (_, Err(e)) => format!("| {k} | {r} | error: {e} | | | | | | |"),
    });
    let mut out = String::from(
        "| k | r | algebra | dim z | closed form z | dim b | closed form b | dim z/b | match |\n|---|---|---|---|---|---|---|---|---|\n",
    );
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------- criterion 3

fn criterion_schur(opts: &VerifyOptions) -> Vec<Claim> {
    let jobs: Vec<usize> = (0..5).collect();
    flatten(par::map_slice(&jobs, opts.exec, |&job| match job {
        0 => {
            let q = schur_supercharge();
            let rep = FourDTwist::new(2)
                .and_then(|t| t.element(&q))
                .map_err(|e| e.to_string())
                .and_then(|x| CentralizerReport::compute(&x).map_err(|e| e.to_string()));
            match rep {
                Ok(r) => vec![claim("schur:dim-z", 11, r.dim_z), claim("schur:dim-b", 8, r.dim_b)],
                Err(e) => vec![fallible::<usize, _>("schur:dim-z", 11, Err(e))],
            }
        }
        1 => match projection_blocks(&schur_supercharge()) {
            Ok(p) => vec![
                claim("schur:closed-block-pattern", true, p.z_matches_pattern),
                claim("schur:exact-block-pattern", true, p.b_matches_pattern),
                claim("schur:complex-translations", [3, 2], [p.closed_translations, p.exact_translations]),
            ],
            Err(e) => vec![fallible::<bool, _>("schur:closed-block-pattern", true, Err(e))],
        },
        2 => real_form_claims(Signature::Euclidean, "realform:euclidean-dims"),
        3 => real_form_claims(Signature::Lorentzian, "realform:lorentzian-dims"),
        _ => {
            let split = schur_realform_report(Signature::Split);
            let blocks = projection_blocks(&schur_supercharge());
            match (split, blocks) {
                (Ok(s), Ok(p)) => vec![
                    claim("realform:split-translations", [3, 2], [s.translations.0, s.translations.1]),
                    claim("realform:split-dims", [11, 8], [s.z_real_dim, s.b_real_dim]),
                    claim(
                        "realform:split-matches-complex-blocks",
                        [p.z_pattern_dim, p.b_pattern_dim],
                        [s.z_real_dim, s.b_real_dim],
                    ),
                ],
                (Err(e), _) => vec![fallible::<usize, _>("realform:split-dims", 0, Err(e))],
                (_, Err(e)) => vec![fallible::<usize, _>("realform:split-dims", 0, Err(e))],
            }
        }
    }))
}

fn real_form_claims(sig: Signature, key: &str) -> Vec<Claim> {
    match schur_realform_report(sig) {
        Ok(r) => vec![claim(key, [r.stated.0, r.stated.1], [r.z_real_dim, r.b_real_dim])],
        Err(e) => vec![fallible::<usize, _>(key, 0, Err(e))],
    }
}

// ---------------------------------------------------------------- criterion 4

/// Outcome counts of a closed-form condition checked against the bracket.
#[derive(Default, Serialize)]
struct Agreement {
    positives: usize,
    negatives: usize,
    mismatches: usize,
}

impl Agreement {
    fn record(&mut self, r: Result<bool, TwistError>) {
        match r {
            Ok(true) => self.positives += 1,
            Ok(false) => self.negatives += 1,
            Err(_) => self.mismatches += 1,
        }
    }

    fn claims(&self, key: &str, need_both: bool) -> Vec<Claim> {
        let mut out = vec![claim(format!("{key}:mismatches"), 0, self.mismatches)];
        if need_both {
            out.push(claim(format!("{key}:both-outcomes"), true, self.positives > 0 && self.negatives > 0));
        }
        out
    }
}

fn canonical_4d_cases(k: usize) -> Vec<Supercharge4d> {
    let cap = k.min(4);
    let mut out = vec![Supercharge4d::zero(k)];
    for rp in 0..=cap {
        for rm in 0..=cap - rp {
            let q = canonical_rep_4d(k, rp, rm).expect("within bound");
            // overlapping supports make both compositions nonzero
            let mut overlapping = q.clone();
            for t in 0..rm {
                overlapping.q_minus[(t, t)] = Scalar::one();
            }
            out.push(q);
            if rp > 0 && rm > 0 {
                out.push(overlapping);
            }
        }
    }
    out
}

fn exhaustive_pure_tensors() -> Vec<N4PureTensor> {
    let unit = |i: usize| {
        let mut v = vec![Scalar::zero(); 4];
        v[i] = Scalar::one();
        v
    };
    let choices = [vec![Scalar::zero(); 4], unit(0), unit(1), {
        let mut v = unit(0);
        v[1] = Scalar::one();
        v
    }];
    let mut out = Vec::new();
    for a in &choices {
        for b in &choices {
            for c in &choices {
                for d in &choices {
                    out.push(N4PureTensor { q_plus: a.clone(), w_plus: b.clone(), q_minus: c.clone(), w_minus: d.clone() });
                }
            }
        }
    }
    out
}

fn exhaustive_3d(k: usize) -> Vec<Supercharge3d> {
    let mut rows: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); k]];
    let mut e0 = vec![Scalar::zero(); k];
    e0[0] = Scalar::one();
    rows.push(e0.clone());
    if k >= 2 {
        for s in [Scalar::i(), -Scalar::i()] {
            let mut w = e0.clone();
            w[1] = s;
            rows.push(w);
        }
    }
    let mut out = Vec::new();
    let n = rows.len();
    for code in 0..n.pow(4) {
        let mut c = code;
        let block: Vec<Vec<Scalar>> = (0..4)
            .map(|_| {
                let r = rows[c % n].clone();
                c /= n;
                r
            })
            .collect();
        out.push(Supercharge3d::new(k, block).expect("shape"));
    }
    out
}

fn exhaustive_5d(t: &FiveDTwist) -> Vec<Supercharge5d> {
    let dim = crate::superlie::f4::SPINOR_DIM;
    let zero = vec![Scalar::zero(); dim];
    let n = null_spinor(t.data());
    let unit = |i: usize| {
        let mut v = zero.clone();
        v[i] = Scalar::one();
        v
    };
    let twice: Vec<Scalar> = n.iter().map(|x| x + x).collect();
    let mut out = vec![
        Supercharge5d::new(zero.clone(), zero.clone()),
        Supercharge5d::new(n.clone(), zero.clone()),
        Supercharge5d::new(zero.clone(), n.clone()),
        Supercharge5d::new(n.clone(), twice),
        Supercharge5d::new(n.clone(), n.clone()),
    ];
    for a in 0..dim {
        for b in 0..dim {
            out.push(Supercharge5d::new(unit(a), unit(b)));
        }
    }
    out.into_iter().map(|q| q.expect("spinor length")).collect()
}

fn criterion_nilpotence(opts: &VerifyOptions) -> Vec<Claim> {
    #[derive(Clone, Copy)]
    enum Job {
        FourD(usize),
        Pure,
        ThreeD(usize),
        FiveD,
    }
    let mut jobs: Vec<Job> = [1, 2, 3, 5, 6].map(Job::FourD).to_vec();
    jobs.push(Job::Pure);
    jobs.extend((2..=5).map(Job::ThreeD));
    jobs.push(Job::FiveD);
    let n = opts.equivalence_samples;
    flatten(par::map_slice(&jobs, opts.exec, |job| match *job {
        Job::FourD(k) => {
            let key = format!("nilpotence:4d:k={k}");
            let t = match FourDTwist::new(k) {
                Ok(t) => t,
                Err(e) => return vec![fallible::<usize, _>(key, 0, Err(e))],
            };
            let mut rng = rng_for(opts, &key);
            let mut random = Agreement::default();
            for _ in 0..n {
                random.record(t.check_characterization(&supercharge_4d(&mut rng, k)));
            }
            let mut canon = Agreement::default();
            for q in canonical_4d_cases(k) {
                canon.record(t.check_characterization(&q));
            }
            let mut out = random.claims(&format!("{key}:random"), true);
            out.extend(canon.claims(&format!("{key}:canonical"), false));
            out
        }
        Job::Pure => {
            let key = "nilpotence:4d:pure-tensor";
            let t = match FourDTwist::new(4) {
                Ok(t) => t,
                Err(e) => return vec![fallible::<usize, _>(key, 0, Err(e))],
            };
            let cone = |p: &N4PureTensor| t.classify_n4_component(p).map(|c| c != crate::twist::N4Cone::Neither);
            let mut rng = rng_for(opts, key);
            let mut random = Agreement::default();
            for _ in 0..n {
                random.record(cone(&pure_tensor(&mut rng)));
            }
            let mut canon = Agreement::default();
            for p in exhaustive_pure_tensors() {
                canon.record(cone(&p));
            }
            let mut out = random.claims(&format!("{key}:random"), true);
            out.extend(canon.claims(&format!("{key}:canonical"), true));
            out
        }
        Job::ThreeD(k) => {
            let key = format!("nilpotence:3d:k={k}");
            let t = match ThreeDTwist::new(k) {
                Ok(t) => t,
                Err(e) => return vec![fallible::<usize, _>(key, 0, Err(e))],
            };
            let mut rng = rng_for(opts, &key);
            let mut random = Agreement::default();
            for _ in 0..n {
                random.record(t.check_conditions(&supercharge_3d(&mut rng, k)));
            }
            let mut canon = Agreement::default();
            for q in exhaustive_3d(k) {
                canon.record(t.check_conditions(&q));
            }
            let mut out = random.claims(&format!("{key}:random"), true);
            out.extend(canon.claims(&format!("{key}:canonical"), true));
            out
        }
        Job::FiveD => {
            let key = "nilpotence:5d";
            let t = match FiveDTwist::new() {
                Ok(t) => t,
                Err(e) => return vec![fallible::<usize, _>(key, 0, Err(e))],
            };
            let mut rng = rng_for(opts, key);
            let mut random = Agreement::default();
            for _ in 0..n {
                random.record(t.check_conditions(&supercharge_5d(&mut rng, t.data())));
            }
            let mut canon = Agreement::default();
            for q in exhaustive_5d(&t) {
                canon.record(t.check_conditions(&q));
            }
            let mut out = random.claims(&format!("{key}:random"), true);
            out.extend(canon.claims(&format!("{key}:canonical"), true));
            out
        }
    }))
}

// ---------------------------------------------------------------- criterion 5

fn null_pair(k: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut e = vec![Scalar::zero(); k];
    e[0] = Scalar::one();
    e[1] = Scalar::i();
    let mut f = vec![Scalar::zero(); k];
    f[2] = Scalar::one();
    f[3] = Scalar::i();
    (e, f)
}

fn criterion_invariants(opts: &VerifyOptions) -> Vec<Claim> {
    let jobs: Vec<usize> = (0..7).collect();
    let m = opts.invariance_elements;
    flatten(par::map_slice(&jobs, opts.exec, |&job| match job {
        0 => {
            // rank pairs of every canonical representative, k != 4
            [1usize, 2, 3, 5, 6]
                .iter()
                .map(|&k| {
                    let key = format!("invariance:4d-rank-pair:k={k}");
                    let run = || -> Result<usize, TwistError> {
                        let t = FourDTwist::new(k)?;
                        let mut rng = rng_for(opts, &key);
                        let mut changed = 0;
                        for rp in 0..=k.min(4) {
                            for rm in 0..=k.min(4) - rp {
                                let q = canonical_rep_4d(k, rp, rm)?;
                                let base = t.orbit_invariant(&q)?;
                                for _ in 0..m {
                                    let g = FourDGroupElement::random(&mut rng, k);
                                    if t.orbit_invariant(&g.act(&q))? != base {
                                        changed += 1;
                                    }
                                }
                            }
                        }
                        Ok(changed)
                    };
                    fallible(key.clone(), 0, run())
                })
                .collect()
        }
        1 => {
            let key = "invariance:psl44-determinant";
            let run = || -> Result<usize, TwistError> {
                let t = FourDTwist::new(4)?;
                let mut rng = rng_for(opts, key);
                let mut changed = 0;
                for (det, minus) in [(Scalar::from_int(3), false), (Scalar::from_parts((1, 2), (1, 1)), true)] {
                    let q = canonical_rep_4d_with_det(&det, minus)?;
                    let base = t.orbit_invariant(&q)?;
                    if base.extra.as_ref() != Some(&det) {
                        changed += 1;
                    }
                    for _ in 0..m {
                        let g = FourDGroupElement::random(&mut rng, 4);
                        if t.orbit_invariant(&g.act(&q))? != base {
                            changed += 1;
                        }
                    }
                }
                Ok(changed)
            };
            vec![fallible(key, 0, run())]
        }
        2 => {
            (2..=6usize)
                .map(|k| {
                    let key = format!("invariance:3d-rank:k={k}");
                    let run = || -> Result<usize, TwistError> {
                        let t = ThreeDTwist::new(k)?;
                        let mut rng = rng_for(opts, &key);
                        let (e, f) = if k >= 4 { null_pair(k) } else { (null_pair(4).0[..k].to_vec(), vec![]) };
                        let mut reps = vec![Supercharge3d::zero(k, 4)];
                        let mut rows = vec![vec![Scalar::zero(); k]; 4];
                        rows[0] = e.clone();
                        reps.push(Supercharge3d::new(k, rows.clone())?);
                        if k >= 4 {
                            rows[2] = f;
                            reps.push(Supercharge3d::new(k, rows)?);
                        }
                        let mut changed = 0;
                        for q in reps {
                            let base = t.orbit_invariant(&q)?;
                            for _ in 0..m {
                                let g = ThreeDGroupElement::random(&mut rng, k, 4);
                                if t.orbit_invariant(&g.act(&q))? != base {
                                    changed += 1;
                                }
                            }
                        }
                        Ok(changed)
                    };
                    fallible(key.clone(), 0, run())
                })
                .collect()
        }
        3 => {
            // x-parameter of (e, f) against that of (O e, O f)
            let key = "invariance:3d-x-parameter";
            let run = || -> Result<usize, TwistError> {
                let mut rng = rng_for(opts, key);
                let mut changed = 0;
                for k in [4usize, 5, 6] {
                    let (e, f) = null_pair(k);
                    let base = orbit_param_3d(&e, &f)?;
                    for _ in 0..m {
                        let o = sample::special_orthogonal(&mut rng, k, 4);
                        if orbit_param_3d(&o.g.apply(&e)?, &o.g.apply(&f)?)? != base {
                            changed += 1;
                        }
                    }
                }
                Ok(changed)
            };
            vec![fallible(key, 0, run())]
        }
        4 => {
            let key = "invariance:4d-rank-bound";
            let run = || -> Result<usize, TwistError> {
                let mut rng = rng_for(opts, key);
                let mut violations = 0;
                for k in [1usize, 2, 3, 5, 6] {
                    let t = FourDTwist::new(k)?;
                    for _ in 0..opts.equivalence_samples {
                        let q = supercharge_4d(&mut rng, k);
                        if t.is_square_zero(&q)? {
                            let (a, b) = q.ranks();
                            if a + b > k.min(4) {
                                violations += 1;
                            }
                        }
                    }
                }
                Ok(violations)
            };
            vec![fallible(key, 0, run())]
        }
        5 => {
            let run = || -> Result<(bool, bool), String> {
                let t = FourDTwist::new(4).map_err(|e| e.to_string())?;
                let q = canonical_rep_4d(4, 4, 0).map_err(|e| e.to_string())?;
                let rep = CentralizerReport::compute(&t.element(&q).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let diag = diagonal_sl4(t.algebra()).map_err(|e| e.to_string())?;
                Ok((diag.same_as(&rep.basis_z), diag.same_as(&rep.basis_b)))
            };
            match run() {
                Ok((z, b)) => vec![
                    claim("full-rank-chiral:closed-is-diagonal-sl4", true, z),
                    claim("full-rank-chiral:exact-is-diagonal-sl4", true, b),
                ],
                Err(e) => vec![fallible::<bool, _>("full-rank-chiral:closed-is-diagonal-sl4", true, Err(e))],
            }
        }
        _ => {
            // 5d: every nonzero square-zero sample has rank one, stable under Spin(7) x SL(2)
            let key = "invariance:5d-rank";
            let run = || -> Result<usize, TwistError> {
                let t = FiveDTwist::new()?;
                let mut rng = rng_for(opts, key);
                let q = Supercharge5d::new(null_spinor(t.data()), vec![Scalar::zero(); crate::superlie::f4::SPINOR_DIM])?;
                let base = t.orbit_invariant(&q)?;
                let mut changed = 0;
                for _ in 0..m {
                    let g = crate::twist::Spin7Action::random(&mut rng, 4);
                    if t.orbit_invariant(&g.act(&q))? != base {
                        changed += 1;
                    }
                }
                Ok(changed)
            };
            vec![fallible(key, 0, run())]
        }
    }))
}

// ---------------------------------------------------------------- criterion 6

fn criterion_three_d(opts: &VerifyOptions) -> Vec<Claim> {
    let jobs: Vec<usize> = (0..9).collect();
    flatten(par::map_slice(&jobs, opts.exec, |&job| match job {
        0 => match centralizer_3d_example() {
            Ok(ex) => vec![
                claim("osp2-example:dims", [7, 4], [ex.report.dim_z, ex.report.dim_b]),
                claim("osp2-example:closed-is-parabolic", true, ex.z_equals_parabolic),
                claim("osp2-example:exact-spanned-by-listed", true, ex.b_equals_stated),
                claim("osp2-example:ideal", true, ex.ideal),
            ],
            Err(e) => vec![fallible::<bool, _>("osp2-example:dims", true, Err(e))],
        },
        1 => {
            let key = "isotropy:3d-sampled-nilpotents";
            let run = || -> Result<(usize, usize), TwistError> {
                let mut rng = rng_for(opts, key);
                let (mut seen, mut bad) = (0, 0);
                for k in 2..=6 {
                    let t = ThreeDTwist::new(k)?;
                    for _ in 0..opts.equivalence_samples / 2 {
                        let q = supercharge_3d(&mut rng, k);
                        if t.is_square_zero(&q)? {
                            seen += 1;
                            if !image_is_isotropic(&q) || orbit_rank_3d(&q)? > k / 2 {
                                bad += 1;
                            }
                        }
                    }
                }
                Ok((seen, bad))
            };
            match run() {
                Ok((seen, bad)) => vec![claim(format!("{key}:violations"), 0, bad), claim(format!("{key}:any"), true, seen > 0)],
                Err(e) => vec![fallible::<usize, _>(format!("{key}:violations"), 0, Err(e))],
            }
        }
        j => {
            let k = j;
            match centralizer_3d_rank1(k) {
                Ok(r) => vec![
                    claim(format!("rank1-3d:dim-b:k={k}"), r.stated_dim_b, r.dim_b),
                    claim(format!("rank1-3d:dim-z:k={k}"), r.expected_dim_z, r.dim_z),
                ],
                Err(e) => vec![fallible::<usize, _>(format!("rank1-3d:dim-b:k={k}"), 4, Err(e))],
            }
        }
    }))
}

// ---------------------------------------------------------------- criterion 7

fn criterion_labels(opts: &VerifyOptions) -> Vec<Claim> {
    let h = HermitianForm::split();
    let witnesses = witness_planes();
    let distinct: BTreeSet<OrbitLabel> = witnesses.iter().map(|(l, _)| *l).collect();
    let allowed: BTreeSet<OrbitLabel> = (0..=2)
        .flat_map(|p| (0..=2 - p).map(move |n| OrbitLabel::new(p, n, 2 - p - n)))
        .collect();
    let mut out = vec![
        claim("labels:distinct-witnesses", allowed.len(), distinct.len()),
        claim("labels:witnesses-cover-all", true, distinct == allowed),
        claim(
            "labels:witness-labels-correct",
            true,
            witnesses.iter().all(|(l, p)| hermitian_orbit_label(p, &h).ok() == Some(*l)),
        ),
    ];
    let mut rng = rng_for(opts, "labels:basis-invariance");
    let mut stable = true;
    for (label, plane) in &witnesses {
        for _ in 0..10 {
            let mix = sample::special_linear(&mut rng, 2, 4).g;
            let p = GrassmannPoint::span(4, &(&mix * &plane.plane.basis_matrix()).row_list());
            stable &= hermitian_orbit_label(&p, &h).ok() == Some(*label);
        }
    }
    out.push(claim("labels:basis-invariance", true, stable));
    let mut rng = rng_for(opts, "labels:random-planes");
    let mut outside = 0;
    let mut seen = BTreeSet::new();
    let mut planes = 0;
    while planes < opts.random_planes {
        let a = sample::vector(&mut rng, 4);
        let b = sample::vector(&mut rng, 4);
        let p = GrassmannPoint::span(4, &[a, b]);
        if p.dim() != 2 {
            continue;
        }
        planes += 1;
        match hermitian_orbit_label(&p, &h) {
            Ok(l) if allowed.contains(&l) => {
                seen.insert(l);
            }
            _ => outside += 1,
        }
    }
    out.push(claim("labels:random-planes-outside", 0, outside));
    out.push(claim("labels:random-planes-sampled", opts.random_planes, planes));
    out.push(claim("labels:random-planes-distinct", true, seen.len() >= 2));
    out
}

// ---------------------------------------------------------------- assembly

fn run_criterion(id: u8, opts: &VerifyOptions) -> Vec<Claim> {
    match id {
        1 => criterion_integrity(opts),
        2 => criterion_chiral(opts),
        3 => criterion_schur(opts),
        4 => criterion_nilpotence(opts),
        5 => criterion_invariants(opts),
        6 => criterion_three_d(opts),
        7 => criterion_labels(opts),
        _ => Vec::new(),
    }
}

const SAMPLED: [u8; 3] = [4, 5, 7];

/// Runs every criterion. The output depends only on the options.
pub fn verify_all(opts: &VerifyOptions) -> SuiteReport {
    let ids: Vec<u8> = (1..=7).collect();
    let mut groups = par::map_slice(&ids, opts.exec, |&id| run_criterion(id, opts));
    let mut determinism = Vec::new();
    if opts.rerun_check {
        let again = par::map_slice(&SAMPLED, opts.exec, |&id| run_criterion(id, opts));
        for (id, claims) in SAMPLED.iter().zip(again) {
            let first = serde_json::to_string(&groups[(*id - 1) as usize]).expect("serializable");
            let second = serde_json::to_string(&claims).expect("serializable");
            determinism.push(claim(format!("determinism:rerun-criterion-{id}"), true, first == second));
        }
    }
    let mut seq_opts = opts.clone();
    seq_opts.exec = Exec::Sequential;
    let seq = serde_json::to_string(&criterion_chiral(&seq_opts)).expect("serializable");
    let par = serde_json::to_string(&groups[1]).expect("serializable");
    determinism.push(claim("determinism:sequential-equals-parallel", true, seq == par));
    groups.push(determinism);
    assemble(opts, groups)
}

/// Runs only the listed criteria (criterion 8 is skipped).
pub fn verify_criteria(opts: &VerifyOptions, ids: &[u8]) -> SuiteReport {
    let groups: Vec<Vec<Claim>> = (1..=8u8)
        .map(|id| if ids.contains(&id) && id != 8 { run_criterion(id, opts) } else { Vec::new() })
        .collect();
    let mut report = assemble(opts, groups);
    report.criteria.retain(|c| ids.contains(&c.id) && c.id != 8);
    report
}

fn assemble(opts: &VerifyOptions, groups: Vec<Vec<Claim>>) -> SuiteReport {
    let mut criteria = Vec::new();
    for ((id, title), mut claims) in CRITERIA.iter().zip(groups) {
        if let Some(prefix) = &opts.corrupt {
            for c in claims.iter_mut().filter(|c| c.key.starts_with(prefix.as_str())) {
                c.expected = perturb(&c.expected);
                c.passed = c.expected == c.actual;
            }
        }
        criteria.push(CriterionReport {
            id: *id,
            title: (*title).to_string(),
            passed: claims.iter().all(|c| c.passed),
            claims,
        });
    }
    let failed_keys: Vec<String> =
        criteria.iter().flat_map(|c| &c.claims).filter(|c| !c.passed).map(|c| c.key.clone()).collect();
    SuiteReport {
        seed: opts.seed,
        passed: failed_keys.is_empty(),
        claim_count: criteria.iter().map(|c| c.claims.len()).sum(),
        failed_keys,
        criteria,
    }
}
