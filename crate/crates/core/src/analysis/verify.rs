//! Side-by-side check of the closed-form census against the oracle.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::census::{self, motif_key};
use crate::clustering::ClusteringReport;
use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, MotifId};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub component: String,
    pub analytic: Value,
    pub oracle: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub b: usize,
    pub analytic: BTreeMap<String, Value>,
    pub oracle: BTreeMap<String, Value>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub mismatches: Vec<Mismatch>,
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
fn count_value(c: Count) -> Value {
    u64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from)
}

fn coefficient(cliques: Count, trees: Count, b: usize) -> Result<Value> {
    match ClusteringReport::new(b, cliques, trees) {
        Ok(r) => Ok(Value::String(format!("{}/{}", r.value.numer(), r.value.denom()))),
        Err(Error::UndefinedCoefficient { .. }) => Ok(Value::Null),
        Err(e) => Err(e),
    }
}

/// Compares the order-`b` census counts, clique and tree totals and
/// `C(b)` with brute-force values. Disagreement is reported, not raised.
pub fn verify(g: &Graph, b: usize) -> Result<VerifyReport> {
    if !(3..=5).contains(&b) || b > g.n() {
        return Err(Error::InvalidParameter(format!(
            "verify needs 3 <= b <= 5 and b <= n = {}, got b = {b}",
            g.n()
        )));
    }
    let counts = match b {
        3 => census::census3(g)?,
        4 => census::census4(g)?,
        _ => census::census5(g)?,
    };
    let mut analytic = BTreeMap::new();
    let mut oracle_side = BTreeMap::new();
    for id in MotifId::CENSUS.iter().filter(|id| id.b == b) {
        let key = motif_key(id.b, id.a);
        analytic.insert(key.clone(), count_value(counts.get(id.b, id.a).unwrap_or(0)));
        oracle_side.insert(key, count_value(oracle::brute_motif_count(g, *id)?));
    }

    let (cliques, trees) = counts.clustering_terms(b).expect("tier computed above");
    analytic.insert("cliques".into(), count_value(cliques));
    analytic.insert("spanning_trees".into(), count_value(trees));
    analytic.insert(format!("C{b}"), coefficient(cliques, trees, b)?);

    let brute_cliques = oracle::count_b_cliques(g, b)?;
    let brute_trees = oracle::count_b_spanning_trees(g, b)?;
    oracle_side.insert("cliques".into(), count_value(brute_cliques));
    oracle_side.insert("spanning_trees".into(), count_value(brute_trees));
    oracle_side.insert(format!("C{b}"), coefficient(brute_cliques, brute_trees, b)?);

    let mismatches: Vec<Mismatch> = analytic
        .iter()
        .filter(|(k, v)| oracle_side.get(*k) != Some(*v))
        .map(|(k, v)| Mismatch {
            component: k.clone(),
            analytic: v.clone(),
            oracle: oracle_side.get(k).cloned().unwrap_or(Value::Null),
        })
        .collect();
    Ok(VerifyReport {
        b,
        matched: mismatches.is_empty(),
        analytic,
        oracle: oracle_side,
        mismatches,
    })
}
