//! The generalized clustering coefficient
//! `C(b) = b^(b-2) · (#b-cliques) / (#trees on b nodes)`.
//!
//! `b^(b-2)` is Cayley's count of spanning trees of `K_b`, which pins
//! complete graphs at exactly 1. [`c3`], [`c4`] and [`c5`] use the closed
//! form census; [`c_general`] sweeps subsets and works for any `b`.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::census::{self, MotifCounts};
use crate::count::{self, Count, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;

/// `C(b)` together with the counts it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusteringReport {
    pub b: usize,
    /// Number of `b`-cliques.
    pub clique_count: Count,
    /// Number of trees on exactly `b` nodes.
    pub spanning_tree_count: Count,
    /// `b^(b-2)`.
    pub cayley_factor: Count,
    pub value: Rational,
    pub value_f64: f64,
}

impl ClusteringReport {
    pub fn new(b: usize, clique_count: Count, spanning_tree_count: Count) -> Result<Self> {
        if spanning_tree_count == 0 {
            return Err(Error::UndefinedCoefficient { b });
        }
        let cayley_factor = cayley(b)?;
        let numerator = count::mul(cayley_factor, clique_count, "C(b) numerator")?;
        let value = Rational::new(numerator, spanning_tree_count);
        Ok(ClusteringReport {
            b,
            clique_count,
            spanning_tree_count,
            cayley_factor,
            value_f64: count::to_f64(&value),
            value,
        })
    }

    /// Builds `C(b)` for `b` in 3..=5 from census counts.
    pub fn from_census(counts: &MotifCounts, b: usize) -> Result<Self> {
        let (cliques, trees) = counts.clustering_terms(b).ok_or_else(|| {
            Error::InvalidParameter(format!("census does not include tier {b}"))
        })?;
        ClusteringReport::new(b, cliques, trees)
    }
}

impl Serialize for ClusteringReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClusteringReport", 7)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("cliques", &self.clique_count)?;
        st.serialize_field("spanning_trees", &self.spanning_tree_count)?;
        st.serialize_field("cayley", &self.cayley_factor)?;
        st.serialize_field("value_num", self.value.numer())?;
        st.serialize_field("value_den", self.value.denom())?;
        st.serialize_field("value", &self.value_f64)?;
        st.end()
    }
}

/// Cayley's `b^(b-2)`, the number of labelled trees on `b` nodes.
pub fn cayley(b: usize) -> Result<Count> {
    if b < 2 {
        return Err(Error::InvalidParameter(format!("Cayley factor needs b >= 2, got {b}")));
    }
    let exp = u32::try_from(b - 2).map_err(|_| Error::Overflow("Cayley factor"))?;
    count::pow(b as Count, exp)
}

/// `C(3) = 3·|triangles| / |connected triples|`.
pub fn c3(g: &Graph) -> Result<ClusteringReport> {
    ClusteringReport::from_census(&census::census3(g)?, 3)
}

/// `C(4) = 16·|4-cliques| / (|4-stars| + |4-paths|)`.
pub fn c4(g: &Graph) -> Result<ClusteringReport> {
    ClusteringReport::from_census(&census::census4(g)?, 4)
}

/// `C(5) = 125·|5-cliques| / (|5-stars| + |5-arrows| + |5-paths|)`.
pub fn c5(g: &Graph) -> Result<ClusteringReport> {
    ClusteringReport::from_census(&census::census5(g)?, 5)
}

/// Closed-form `C(b)` for `b` in 3..=5.
pub fn c_analytic(g: &Graph, b: usize) -> Result<ClusteringReport> {
    match b {
        3 => c3(g),
        4 => c4(g),
        5 => c5(g),
        _ => Err(Error::InvalidParameter(format!(
            "closed forms exist for b = 3, 4, 5 only, got {b}"
        ))),
    }
}

/// `C(b)` for any `3 <= b <= n` by subset enumeration. Cost grows as
/// `n^b`.
pub fn c_general(g: &Graph, b: usize) -> Result<ClusteringReport> {
    oracle::c_naive(g, b)
}

/// Closed form where available, subset enumeration otherwise.
pub fn coefficient(g: &Graph, b: usize) -> Result<ClusteringReport> {
    if (3..=5).contains(&b) {
        c_analytic(g, b)
    } else {
        c_general(g, b)
    }
}

/// Expected `C(b)` on `G(n, p)`, taken as the ratio of expected counts.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct GnpExpectation {
    pub b: usize,
    pub p: f64,
    /// `(b-1)(b-2)/2`.
    pub exponent: u32,
    pub value: f64,
}

/// `p^((b-1)(b-2)/2)`: `C(n,b)·p^C(b,2)` expected cliques against
/// `b^(b-2)·C(n,b)·p^(b-1)` expected trees.
pub fn expected_c_gnp(b: usize, p: f64) -> Result<GnpExpectation> {
    if b < 3 {
        return Err(Error::InvalidParameter(format!("b must be at least 3, got {b}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} is outside [0, 1]")));
    }
    let exponent = u32::try_from((b - 1) * (b - 2) / 2)
        .map_err(|_| Error::InvalidParameter(format!("b = {b} is too large")))?;
    Ok(GnpExpectation {
        b,
        p,
        exponent,
        value: p.powi(exponent as i32),
    })
}
