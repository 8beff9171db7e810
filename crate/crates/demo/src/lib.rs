//! Browser bindings. Each export takes plain numbers or text and returns a
//! JSON string; the page in `www/` does the plotting.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use graphclust::cliques;
use graphclust::{census, clustering, gen, Error, Graph, Rational};

/// Largest graph the page will accept for random sampling.
pub const MAX_SAMPLE_NODES: usize = 400;
/// Largest chain length for the curve plot.
pub const MAX_CURVE_NODES: usize = 2000;

fn rational(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string(), "value": *r.numer() as f64 / *r.denom() as f64 })
}

fn coefficient(g: &Graph, b: usize) -> Value {
    match clustering::coefficient(g, b) {
        Ok(r) => rational(&r.value),
        Err(Error::UndefinedCoefficient { .. }) => Value::Null,
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn coefficients(g: &Graph) -> Value {
    json!({ "C3": coefficient(g, 3), "C4": coefficient(g, 4), "C5": coefficient(g, 5) })
}

/// `C(3)`, `C(4)`, `C(5)` of `chain_clique(b, n)` for `n = b..=n_max`.
pub fn chain_curves(b: usize, n_max: usize) -> Result<String, String> {
    if !(3..=8).contains(&b) {
        return Err(format!("clique order must be between 3 and 8, got {b}"));
    }
    if n_max < b || n_max > MAX_CURVE_NODES {
        return Err(format!("chain length must be between {b} and {MAX_CURVE_NODES}, got {n_max}"));
    }
    let mut points = Vec::with_capacity(n_max - b + 1);
    for n in b..=n_max {
        let g = gen::chain_clique(b, n).map_err(|e| e.to_string())?;
        let mut point = coefficients(&g);
        point["n"] = json!(n);
        points.push(point);
    }
    Ok(json!({ "b": b, "points": points }).to_string())
}

/// A seeded `G(n, p)` draw with its coefficients and the `p^k` reference
/// values.
pub fn random_sample(n: usize, p: f64, seed: u64) -> Result<String, String> {
    if n > MAX_SAMPLE_NODES {
        return Err(format!("at most {MAX_SAMPLE_NODES} nodes, got {n}"));
    }
    let g = gen::gnp(n, p, seed).map_err(|e| e.to_string())?;
    let expected: Vec<Value> = (3..=5)
        .map(|b| {
            let e = clustering::expected_c_gnp(b, p).map_err(|e| e.to_string())?;
            Ok(json!({ "b": b, "exponent": e.exponent, "value": e.value }))
        })
        .collect::<Result<_, String>>()?;
    Ok(json!({
        "n": n,
        "p": p,
        "seed": seed,
        "edges": g.edges().collect::<Vec<_>>(),
        "connected": g.is_connected(),
        "coefficients": coefficients(&g),
        "expected": expected,
    })
    .to_string())
}

/// Census, coefficients and clique histogram of a pasted edge list.
pub fn analyze(text: &str) -> Result<String, String> {
    let g = Graph::parse(text).map_err(|e| e.to_string())?;
    if g.n() > MAX_SAMPLE_NODES {
        return Err(format!("at most {MAX_SAMPLE_NODES} nodes, got {}", g.n()));
    }
    let counts = census::full_census(&g).map_err(|e| e.to_string())?;
    let report = cliques::maximal_cliques(&g).map_err(|e| e.to_string())?;
    Ok(json!({
        "nodes": g.n(),
        "edges": g.m(),
        "connected": g.is_connected(),
        "census": counts,
        "coefficients": coefficients(&g),
        "clique_number": report.clique_number,
        "clique_histogram": report.size_histogram,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn chain_clique_curves(b: usize, n_max: usize) -> Result<String, JsError> {
    chain_curves(b, n_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gnp_sample(n: usize, p: f64, seed: u32) -> Result<String, JsError> {
    random_sample(n, p, u64::from(seed)).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze_edge_list(text: &str) -> Result<String, JsError> {
    analyze(text).map_err(|e| JsError::new(&e))
}
