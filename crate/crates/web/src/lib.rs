//! Browser bindings. Each export returns a JSON string or throws a message.
//! The `*_json` functions hold the logic so they can be tested natively.

use qsym_core::compute::{compute, ComputeRequest, FamilyKind, Method};
use qsym_core::lgv::{family_to_tableau, for_each_path_family, LgvGraph};
use qsym_core::qfun::q_row;
use qsym_core::ring::series_from_linear_factors;
use qsym_core::shapes::StrictPartition;
use qsym_core::symfun::Alphabet;
use qsym_core::tableaux::VariableSpec;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

// Keeps the page responsive; larger inputs belong on the command line.
const MAX_VARS: usize = 4;
const MAX_WEIGHT: usize = 12;

fn check_size(k: usize, m: usize) -> Result<(), String> {
    if k + m > MAX_VARS {
        return Err(format!("the demo is limited to k + m <= {MAX_VARS}"));
    }
    Ok(())
}

/// Every route for the given family, plus whether they agree.
pub fn compute_json(family: &str, lambda: &str, mu: &str, k: usize, m: usize) -> Result<String, String> {
    check_size(k, m)?;
    let family: FamilyKind = family.parse().map_err(|e| format!("{e}"))?;
    let mut req = ComputeRequest::new(family, lambda, k, m);
    req.mu = mu.to_string();
    req.method = Some(Method::All);
    req.max_terms = Some(5000);
    let weight: usize = lambda.split(',').filter_map(|s| s.trim().parse::<usize>().ok()).sum();
    if weight > MAX_WEIGHT {
        return Err(format!("the demo is limited to |λ| <= {MAX_WEIGHT}"));
    }
    let report = compute(&req).map_err(|e| e.to_string())?;
    let routes: Vec<Value> = report
        .routes
        .iter()
        .map(|(m, p)| json!({"method": m.to_string(), "poly": p.to_string()}))
        .collect();
    let out = json!({
        "routes": routes,
        "agreed": report.agreed().is_some(),
        "result": report.agreed().map(|p| p.to_string()),
    });
    Ok(out.to_string())
}

/// Up to `limit` path families with their tableaux, for drawing.
/// Heights are doubled, as in the core crate.
pub fn paths_json(lambda: &str, mu: &str, k: usize, m: usize, limit: usize) -> Result<String, String> {
    check_size(k, m)?;
    let lam: StrictPartition = lambda.parse().map_err(|e| format!("{e}"))?;
    let mu: StrictPartition = mu.parse().map_err(|e| format!("{e}"))?;
    if lam.weight() > 8 {
        return Err("the path view is limited to |λ| <= 8".into());
    }
    let spec = VariableSpec::new(k, m);
    let g = LgvGraph::new(spec, lam.part(1));
    let mut families = Vec::new();
    let mut total = 0usize;
    for_each_path_family(&lam, &mu, spec, &mut |f| {
        total += 1;
        if families.len() >= limit {
            return;
        }
        let paths: Vec<Value> = f
            .paths
            .iter()
            .map(|p| {
                let labels: Vec<Option<String>> = p.letters.iter().map(|l| l.map(|l| l.to_string())).collect();
                json!({"vertices": p.vertices, "labels": labels})
            })
            .collect();
        let tableau = family_to_tableau(f, &lam, &mu).map(|t| t.to_string()).unwrap_or_default();
        families.push(json!({"paths": paths, "tableau": tableau}));
    })
    .map_err(|e| e.to_string())?;
    let heights: Vec<Value> = (1..=g.top2())
        .map(|j| json!({"y2": j, "letter": g.letter_at(j, false).to_string()}))
        .collect();
    let out = json!({
        "top2": g.top2(),
        "xmax": lam.part(1),
        "heights": heights,
        "total": total,
        "families": families,
    });
    Ok(out.to_string())
}

/// One-row values for `l = 0..=degree` and whether they match the product.
pub fn series_json(k: usize, m: usize, degree: usize) -> Result<String, String> {
    check_size(k, m)?;
    if degree > 10 {
        return Err("the demo is limited to degree <= 10".into());
    }
    let spec = VariableSpec::new(k, m);
    let alpha = Alphabet::intermediate(spec);
    let prod = series_from_linear_factors(spec.n(), alpha.monomials(), alpha.monomials(), degree)
        .map_err(|e| e.to_string())?;
    let coeffs: Vec<String> = (0..=degree).map(|l| q_row(l as i64, spec).to_string()).collect();
    let matches = (0..=degree).all(|l| q_row(l as i64, spec) == prod.coeff(l));
    Ok(json!({"coeffs": coeffs, "matches": matches}).to_string())
}

#[wasm_bindgen]
pub fn compute_routes(family: &str, lambda: &str, mu: &str, k: usize, m: usize) -> Result<String, JsError> {
    compute_json(family, lambda, mu, k, m).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn path_families(lambda: &str, mu: &str, k: usize, m: usize, limit: usize) -> Result<String, JsError> {
    paths_json(lambda, mu, k, m, limit).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn series(k: usize, m: usize, degree: usize) -> Result<String, JsError> {
    series_json(k, m, degree).map_err(|e| JsError::new(&e))
}
