//! wasm-bindgen surface for the browser demo. Three entry points, all
//! JSON-in-string-out so the page needs no extra glue:
//!
//! * [`explore`]: one (n, r, strict) instance with its graph, value,
//!   certificate, and witness matrix;
//! * [`value_table`]: the value grid used for the heatmap;
//! * [`oracle_demo`]: a seeded feasibility search at a chosen target.

use wasm_bindgen::prelude::*;

use serde_json::json;
use skewrank::{certify, mrs_spec, oracle_search, OracleOutcome, PowerSpec, DEFAULT_SEED};

fn spec_from(n: u32, r: u32, strict: bool) -> Result<PowerSpec, String> {
    if !(2..=24).contains(&n) {
        return Err("n must be in 2..=24".into());
    }
    if !(1..=24).contains(&r) {
        return Err("r must be in 1..=24".into());
    }
    PowerSpec::new(n as usize, r as usize, strict).map_err(|e| e.to_string())
}

fn err_json(msg: String) -> String {
    json!({ "error": msg }).to_string()
}

/// Full picture of one instance: edges of the (strict) power, closed-form
/// value with its case tag, the lower bound with its kind, and the witness
/// matrix as `[i, j, "p/q"]` upper entries plus its exact rank.
#[wasm_bindgen]
pub fn explore(n: u32, r: u32, strict: bool) -> String {
    let spec = match spec_from(n, r, strict) {
        Ok(s) => s,
        Err(m) => return err_json(m),
    };
    let cert = certify(&spec);
    let g = spec.graph();
    let upper: Vec<_> = cert
        .upper_witness
        .upper_entries()
        .into_iter()
        .map(|(i, j, v)| json!([i, j, v.to_string()]))
        .collect();
    let components: Vec<_> = g
        .connected_components()
        .into_iter()
        .map(|(vertices, _)| vertices)
        .collect();
    json!({
        "n": spec.n,
        "r": spec.r,
        "strict": spec.strict,
        "edges": g.edges(),
        "components": components,
        "value": cert.value,
        "case_tag": cert.formula.case_tag.as_str(),
        "lower_bound": cert.lower_bound,
        "lower_kind": cert.lower_kind.as_str(),
        "witness_rank": cert.value,
        "witness_upper": upper,
    })
    .to_string()
}

/// Rows `{n, r, value, case_tag}` for all `2 <= n <= max_n`, `1 <= r <= n`,
/// at the given strictness. Drives the heatmap.
#[wasm_bindgen]
pub fn value_table(max_n: u32, strict: bool) -> String {
    if !(2..=24).contains(&max_n) {
        return err_json("max_n must be in 2..=24".into());
    }
    let mut rows = Vec::new();
    for n in 2..=max_n as usize {
        for r in 1..=n {
            let f = mrs_spec(&PowerSpec { n, r, strict });
            rows.push(json!({
                "n": n,
                "r": r,
                "value": f.value,
                "case_tag": f.case_tag.as_str(),
            }));
        }
    }
    json!({ "max_n": max_n, "strict": strict, "rows": rows }).to_string()
}

/// Runs the randomized feasibility search on the (strict) power at an even
/// target rank. Restarts are capped to keep the page responsive.
#[wasm_bindgen]
pub fn oracle_demo(n: u32, r: u32, strict: bool, target: u32, restarts: u32, seed: u32) -> String {
    let spec = match spec_from(n, r, strict) {
        Ok(s) => s,
        Err(m) => return err_json(m),
    };
    if n > 12 {
        return err_json("oracle demo is limited to n <= 12".into());
    }
    let g = spec.graph();
    let seed = if seed == 0 { DEFAULT_SEED } else { seed as u64 };
    let restarts = restarts.min(500) as usize;
    match oracle_search(&g, target as usize, restarts, seed) {
        Ok(OracleOutcome::Found(m)) => {
            let upper: Vec<_> = m
                .upper_entries()
                .into_iter()
                .map(|(i, j, v)| json!([i, j, v.to_string()]))
                .collect();
            json!({
                "outcome": "found",
                "rank": m.rank(),
                "upper": upper,
            })
            .to_string()
        }
        Ok(OracleOutcome::Impossible { reason }) => {
            json!({ "outcome": "impossible", "reason": reason }).to_string()
        }
        Ok(OracleOutcome::NotFound { restarts }) => json!({
            "outcome": "not-found",
            "restarts": restarts,
            "note": "evidence only, not a proof of impossibility",
        })
        .to_string(),
        Err(e) => err_json(e.to_string()),
    }
}
