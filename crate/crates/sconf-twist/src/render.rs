use serde_json::Value;

use sconf_core::report::SuiteReport;

/// Pass/fail matrix of a verification run, one row per claim.
pub fn verify_matrix(rep: &SuiteReport) -> String {
    let mut out = format!(
        "# Verification (seed {})\n\n{} claims, {} failed\n\n| criterion | title | status |\n|---|---|---|\n",
        rep.seed,
        rep.claim_count,
        rep.failed_keys.len()
    );
    for c in &rep.criteria {
        out.push_str(&format!("| {} | {} | {} |\n", c.id, c.title, status(c.passed)));
    }
    for c in &rep.criteria {
        out.push_str(&format!("\n## {}. {}\n\n| claim | expected | actual | status |\n|---|---|---|---|\n", c.id, c.title));
        for cl in &c.claims {
            out.push_str(&format!("| `{}` | {} | {} | {} |\n", cl.key, cl.expected, cl.actual, status(cl.passed)));
        }
    }
    out
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

/// Generic rendering: top-level scalars as a table, the rest as JSON.
pub fn generic(command: &str, payload: &Value) -> String {
    let mut out = format!("# {command}\n\n");
    if let Value::Object(map) = payload {
        let (flat, nested): (Vec<_>, Vec<_>) = map.iter().partition(|(_, v)| !v.is_object() && !v.is_array());
        if !flat.is_empty() {
            out.push_str("| field | value |\n|---|---|\n");
            for (k, v) in flat {
                out.push_str(&format!("| {k} | {v} |\n"));
            }
        }
        for (k, v) in nested {
            out.push_str(&format!(
                "\n## {k}\n\n```json\n{}\n```\n",
                serde_json::to_string_pretty(v).expect("serializable")
            ));
        }
    } else {
        out.push_str(&format!("```json\n{}\n```\n", serde_json::to_string_pretty(payload).expect("serializable")));
    }
    out
}
