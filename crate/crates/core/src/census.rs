//! Exact nested subgraph counts for the ten motifs behind `C(3)`, `C(4)`
//! and `C(5)`.
//!
//! Counts are *nested*: every edge subset isomorphic to the motif counts
//! once, so a `K_4` holds one 4-clique, four triangles, twelve 4-paths and
//! so on. Motifs are named `M{a}_{b}` where `b` is the node count and `a`
//! the canonical adjacency code (see [`crate::oracle::canonical_motif_id`]).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitRow;
use crate::count::{self, binomial, Count};
use crate::error::Result;
use crate::graph::Graph;
use crate::walks::{self, WalkStats};

/// `(b, a)` pairs of the ten motifs, in census order.
pub const MOTIFS: [(usize, u32); 10] = [
    (3, 3),
    (3, 7),
    (4, 11),
    (4, 13),
    (4, 15),
    (4, 63),
    (5, 75),
    (5, 77),
    (5, 86),
    (5, 1023),
];

/// Counts of the ten census motifs.
///
/// `tier` records the largest motif order computed; counts of higher
/// tiers are left at zero and must not be read as "absent".
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotifCounts {
    /// 3-star (connected triple).
    #[serde(rename = "M3_3")]
    pub m3_3: Count,
    /// Triangle.
    #[serde(rename = "M7_3")]
    pub m7_3: Count,
    /// 4-star.
    #[serde(rename = "M11_4")]
    pub m11_4: Count,
    /// 4-path.
    #[serde(rename = "M13_4")]
    pub m13_4: Count,
    /// Tadpole: triangle with a pendant edge.
    #[serde(rename = "M15_4")]
    pub m15_4: Count,
    /// 4-clique.
    #[serde(rename = "M63_4")]
    pub m63_4: Count,
    /// 5-star.
    #[serde(rename = "M75_5")]
    pub m75_5: Count,
    /// 5-arrow: degree sequence (3,2,1,1,1).
    #[serde(rename = "M77_5")]
    pub m77_5: Count,
    /// 5-path.
    #[serde(rename = "M86_5")]
    pub m86_5: Count,
    /// 5-clique.
    #[serde(rename = "M1023_5")]
    pub m1023_5: Count,
    #[serde(skip)]
    pub tier: usize,
}

impl MotifCounts {
    pub const CSV_HEADER: &'static str =
        "M3_3,M7_3,M11_4,M13_4,M15_4,M63_4,M75_5,M77_5,M86_5,M1023_5";

    pub fn has_tier(&self, b: usize) -> bool {
        (3..=self.tier).contains(&b)
    }

    /// Count for motif `M{a}_{b}`, if it is one of the ten.
    pub fn get(&self, b: usize, a: u32) -> Option<Count> {
        let v = match (b, a) {
            (3, 3) => self.m3_3,
            (3, 7) => self.m7_3,
            (4, 11) => self.m11_4,
            (4, 13) => self.m13_4,
            (4, 15) => self.m15_4,
            (4, 63) => self.m63_4,
            (5, 75) => self.m75_5,
            (5, 77) => self.m77_5,
            (5, 86) => self.m86_5,
            (5, 1023) => self.m1023_5,
            _ => return None,
        };
        Some(v)
    }

    /// Counts in [`MOTIFS`] order.
    pub fn values(&self) -> [Count; 10] {
        MOTIFS.map(|(b, a)| self.get(b, a).unwrap_or_default())
    }

    /// Header line plus one data row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        let row: Vec<String> = self.values().iter().map(Count::to_string).collect();
        let _ = writeln!(out, "{}", row.join(","));
        out
    }

    /// Clique count and `b`-spanning-tree count for `C(b)`, when the tier
    /// was computed.
    pub fn clustering_terms(&self, b: usize) -> Option<(Count, Count)> {
        if !self.has_tier(b) {
            return None;
        }
        match b {
            3 => Some((self.m7_3, self.m3_3)),
            4 => Some((self.m63_4, self.m11_4 + self.m13_4)),
            5 => Some((self.m1023_5, self.m75_5 + self.m77_5 + self.m86_5)),
            _ => None,
        }
    }
}

/// Name of motif `M{a}_{b}` as used in JSON and CSV output.
pub fn motif_key(b: usize, a: u32) -> String {
    format!("M{a}_{b}")
}

/// Connected triples and triangles.
pub fn census3(g: &Graph) -> Result<MotifCounts> {
    let g3 = walks::closed_walks3(g);
    let mut c = MotifCounts::default();
    tier3(g, &g3, &mut c)?;
    Ok(c)
}

/// Tiers 3 and 4.
pub fn census4(g: &Graph) -> Result<MotifCounts> {
    let g3 = walks::closed_walks3(g);
    let mut c = MotifCounts::default();
    tier3(g, &g3, &mut c)?;
    tier4(g, &g3, &mut c)?;
    Ok(c)
}

/// All three tiers.
pub fn census5(g: &Graph) -> Result<MotifCounts> {
    full_census(g)
}

/// All ten counts from a single [`WalkStats`] pass.
pub fn full_census(g: &Graph) -> Result<MotifCounts> {
    let w = WalkStats::compute(g)?;
    census_from_walks(g, &w)
}

/// All ten counts given precomputed walk statistics for `g`.
pub fn census_from_walks(g: &Graph, w: &WalkStats) -> Result<MotifCounts> {
    let mut c = MotifCounts::default();
    tier3(g, &w.g3_diag, &mut c)?;
    tier4(g, &w.g3_diag, &mut c)?;
    tier5(g, w, &mut c)?;
    Ok(c)
}

fn tier3(g: &Graph, g3: &[Count], c: &mut MotifCounts) -> Result<()> {
    c.m3_3 = count::sum(
        g.degrees().iter().map(|&k| binomial(k as Count, 2)),
        "M3_3",
    )?;
    let trace = count::sum(g3.iter().map(|&x| Ok(x)), "tr(g^3)")?;
    debug_assert_eq!(trace % 6, 0);
    c.m7_3 = trace / 6;
    c.tier = 3;
    Ok(())
}

fn tier4(g: &Graph, g3: &[Count], c: &mut MotifCounts) -> Result<()> {
    let k = |i: usize| g.degree(i) as Count;

    c.m11_4 = count::sum(g.degrees().iter().map(|&d| binomial(d as Count, 3)), "M11_4")?;

    let edge_products = count::sum(
        g.edges().map(|(i, j)| count::mul(k(i) - 1, k(j) - 1, "M13_4")),
        "M13_4",
    )?;
    c.m13_4 = count::sub(edge_products, count::mul(3, c.m7_3, "M13_4")?, "M13_4")?;

    let tadpole_twice = count::sum(
        (0..g.n())
            .filter(|&i| k(i) > 2)
            .map(|i| count::mul(g3[i], k(i) - 2, "M15_4")),
        "M15_4",
    )?;
    debug_assert_eq!(tadpole_twice % 2, 0);
    c.m15_4 = tadpole_twice / 2;

    // tr(g_{-i}³) where g_{-i} is induced on Γ(i).
    let neighbourhood_traces = count::sum(
        (0..g.n())
            .filter(|&i| k(i) >= 3)
            .map(|i| Ok(walks::masked_trace_cubed(g, g.row(i)))),
        "M63_4",
    )?;
    debug_assert_eq!(neighbourhood_traces % 24, 0);
    c.m63_4 = neighbourhood_traces / 24;
    c.tier = 4;
    Ok(())
}

fn tier5(g: &Graph, w: &WalkStats, c: &mut MotifCounts) -> Result<()> {
    let k = |i: usize| g.degree(i) as Count;

    c.m75_5 = count::sum(g.degrees().iter().map(|&d| binomial(d as Count, 4)), "M75_5")?;

    // Each edge taken in both directions as the arrow's central edge.
    let arrow_terms = count::sum(
        g.edges().flat_map(|(i, j)| [(i, j), (j, i)]).map(|(i, j)| {
            count::mul(binomial(k(i) - 1, 2)?, k(j) - 1, "M77_5")
        }),
        "M77_5",
    )?;
    c.m77_5 = count::sub(arrow_terms, count::mul(2, c.m15_4, "M77_5")?, "M77_5")?;

    debug_assert_eq!(w.sum_offdiag_g4 % 2, 0);
    let mut path = w.sum_offdiag_g4 / 2;
    for (factor, term) in [
        (2, c.m3_3),
        (9, c.m7_3),
        (3, c.m11_4),
        (2, c.m13_4),
        (2, c.m15_4),
    ] {
        path = count::sub(path, count::mul(factor, term, "M86_5")?, "M86_5")?;
    }
    c.m86_5 = path;

    // tr(((g_{-i})_{-j})³): triangles among common neighbours of i and j.
    let mut traces: Count = 0;
    for i in 0..g.n() {
        if g.degree(i) < 4 {
            continue;
        }
        let ni = g.row(i);
        // (i, j) and (j, i) share the same common neighbourhood.
        for j in ni.iter().skip_while(|&j| j <= i) {
            let common: BitRow = ni.intersection(g.row(j));
            if common.count() < 3 {
                continue;
            }
            let both = count::mul(2, walks::masked_trace_cubed(g, &common), "M1023_5")?;
            traces = count::add(traces, both, "M1023_5")?;
        }
    }
    debug_assert_eq!(traces % 120, 0);
    c.m1023_5 = traces / 120;
    c.tier = 5;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::walks::COMPUTE_CALLS;

    fn counts(c: &MotifCounts) -> [Count; 10] {
        c.values()
    }

    #[test]
    fn tier3_examples() {
        let k4 = census3(&gen::complete(4).unwrap()).unwrap();
        assert_eq!((k4.m3_3, k4.m7_3), (12, 4));
        let p3 = census3(&gen::path(3).unwrap()).unwrap();
        assert_eq!((p3.m3_3, p3.m7_3), (1, 0));
        let pet = census3(&gen::petersen()).unwrap();
        assert_eq!((pet.m3_3, pet.m7_3), (30, 0));
        assert!(pet.has_tier(3) && !pet.has_tier(4));
    }

    #[test]
    fn tier4_examples() {
        let k5 = census4(&gen::complete(5).unwrap()).unwrap();
        assert_eq!((k5.m11_4, k5.m13_4, k5.m15_4, k5.m63_4), (20, 60, 60, 5));
        let star = census4(&gen::star(5).unwrap()).unwrap();
        assert_eq!((star.m11_4, star.m13_4, star.m15_4, star.m63_4), (4, 0, 0, 0));
        let c4 = census4(&gen::cycle(4).unwrap()).unwrap();
        assert_eq!((c4.m11_4, c4.m13_4, c4.m15_4, c4.m63_4), (0, 4, 0, 0));
    }

    #[test]
    fn tier5_examples() {
        let k5 = census5(&gen::complete(5).unwrap()).unwrap();
        assert_eq!((k5.m75_5, k5.m77_5, k5.m86_5, k5.m1023_5), (5, 60, 60, 1));
        let c5 = census5(&gen::cycle(5).unwrap()).unwrap();
        assert_eq!((c5.m75_5, c5.m77_5, c5.m86_5, c5.m1023_5), (0, 0, 5, 0));
        let star = census5(&gen::star(6).unwrap()).unwrap();
        assert_eq!((star.m75_5, star.m77_5, star.m86_5, star.m1023_5), (5, 0, 0, 0));
    }

    #[test]
    fn full_census_examples() {
        assert_eq!(
            counts(&full_census(&gen::complete(5).unwrap()).unwrap()),
            [30, 10, 20, 60, 60, 5, 5, 60, 60, 1]
        );
        let empty = Graph::with_node_count(6, []).unwrap();
        assert_eq!(counts(&full_census(&empty).unwrap()), [0; 10]);

        let chain = full_census(&gen::chain_clique(4, 6).unwrap()).unwrap();
        assert_eq!(chain.m63_4, 1);
        assert_eq!(chain.m7_3, 4);
        assert_eq!(chain.m11_4, 7);
        assert_eq!(chain.m13_4, 6 + 15);
    }

    #[test]
    fn petersen_full_census() {
        // Brute-force subset enumeration; girth 5 leaves only trees.
        assert_eq!(
            counts(&full_census(&gen::petersen()).unwrap()),
            [30, 0, 10, 60, 0, 0, 0, 60, 120, 0]
        );
    }

    #[test]
    fn too_small_graphs_give_zero() {
        let k2 = gen::complete(2).unwrap();
        assert_eq!(counts(&full_census(&k2).unwrap()), [0; 10]);
        let k4 = full_census(&gen::complete(4).unwrap()).unwrap();
        assert_eq!((k4.m75_5, k4.m77_5, k4.m86_5, k4.m1023_5), (0, 0, 0, 0));
    }

    #[test]
    fn neighbourhood_clique_counts_via_literal_subgraphs() {
        for seed in 0..10 {
            let g = gen::gnp(11, 0.7, seed).unwrap();
            let c = full_census(&g).unwrap();
            let mut m63: Count = 0;
            let mut m1023: Count = 0;
            for i in 0..g.n() {
                let ni: Vec<_> = g.neighbors(i).collect();
                let gi = g.induced_subgraph(&ni).unwrap();
                m63 += walks::closed_walks3(&gi).iter().sum::<Count>();
                for j in 0..gi.n() {
                    let nj: Vec<_> = gi.neighbors(j).collect();
                    let gij = gi.induced_subgraph(&nj).unwrap();
                    m1023 += walks::closed_walks3(&gij).iter().sum::<Count>();
                }
            }
            assert_eq!(c.m63_4, m63 / 24);
            assert_eq!(c.m1023_5, m1023 / 120);
        }
    }

    #[test]
    fn full_census_computes_walk_stats_once() {
        let g = gen::gnp(20, 0.5, 3).unwrap();
        let before = COMPUTE_CALLS.with(|c| c.get());
        full_census(&g).unwrap();
        assert_eq!(COMPUTE_CALLS.with(|c| c.get()) - before, 1);
    }

    #[test]
    fn json_and_csv_keys() {
        let c = full_census(&gen::complete(5).unwrap()).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        let keys: Vec<_> = json.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 10);
        assert_eq!(json["M1023_5"], 1);
        assert_eq!(json["M13_4"], 60);
        assert_eq!(
            c.to_csv(),
            format!("{}\n30,10,20,60,60,5,5,60,60,1\n", MotifCounts::CSV_HEADER)
        );
    }
}
