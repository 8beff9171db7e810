//! Maximal clique enumeration and clique-size statistics.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bitset::BitRow;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueOptions {
    /// Enumeration fails once more than this many maximal cliques exist.
    pub cap: usize,
    /// Tomita pivoting. Turning it off gives plain Bron–Kerbosch.
    pub pivot: bool,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        CliqueOptions {
            cap: DEFAULT_CLIQUE_CAP,
            pivot: true,
        }
    }
}

/// Degree summary of nodes that belong to maximal cliques of one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderDegreeStats {
    pub order: usize,
    /// Distinct nodes in maximal cliques of this order.
    pub nodes: usize,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    pub median: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeStats {
    pub per_order: Vec<OrderDegreeStats>,
    pub graph_mean: f64,
    pub graph_median: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueReport {
    /// Members sorted, cliques sorted lexicographically.
    pub maximal_cliques: Vec<Vec<NodeId>>,
    /// `w(G)`, the largest clique order.
    pub clique_number: usize,
    /// Order to number of maximal cliques of that order.
    pub size_histogram: BTreeMap<usize, usize>,
    pub degree_stats: DegreeStats,
}

pub fn maximal_cliques(g: &Graph) -> Result<CliqueReport> {
    maximal_cliques_with(g, CliqueOptions::default())
}

/// Bron–Kerbosch enumeration. Isolated nodes come out as 1-cliques.
pub fn maximal_cliques_with(g: &Graph, opts: CliqueOptions) -> Result<CliqueReport> {
    let n = g.n();
    let mut search = Search {
        g,
        opts,
        found: Vec::new(),
    };
    let mut r = Vec::new();
    search.expand(&mut r, BitRow::full(n), BitRow::new(n))?;
    let mut cliques = search.found;
    cliques.sort_unstable();

    let clique_number = cliques.iter().map(Vec::len).max().unwrap_or(0);
    let mut report = CliqueReport {
        maximal_cliques: cliques,
        clique_number,
        size_histogram: BTreeMap::new(),
        degree_stats: DegreeStats {
            per_order: Vec::new(),
            graph_mean: 0.0,
            graph_median: 0.0,
        },
    };
    report.size_histogram = clique_size_distribution(&report);
    report.degree_stats = clique_degree_stats(g, &report);
    Ok(report)
}

struct Search<'a> {
    g: &'a Graph,
    opts: CliqueOptions,
    found: Vec<Vec<NodeId>>,
}

impl Search<'_> {
    fn expand(&mut self, r: &mut Vec<NodeId>, mut p: BitRow, mut x: BitRow) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                if self.found.len() == self.opts.cap {
                    return Err(Error::CliqueCap { cap: self.opts.cap });
                }
                let mut clique = r.clone();
                clique.sort_unstable();
                self.found.push(clique);
            }
            return Ok(());
        }

        let mut candidates = p.clone();
        if self.opts.pivot {
            // Vertex of P ∪ X with the most neighbours in P.
            let pivot = p
                .iter()
                .chain(x.iter())
                .max_by_key(|&u| (p.intersection_count(self.g.row(u)), std::cmp::Reverse(u)))
                .expect("P is nonempty");
            candidates.difference_with(self.g.row(pivot));
        }

        for v in candidates.iter() {
            let nv = self.g.row(v);
            r.push(v);
            self.expand(r, p.intersection(nv), x.intersection(nv))?;
            r.pop();
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

pub fn clique_size_distribution(report: &CliqueReport) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for c in &report.maximal_cliques {
        *hist.entry(c.len()).or_insert(0) += 1;
    }
    hist
}

fn median(sorted: &[usize]) -> f64 {
    match sorted.len() {
        0 => 0.0,
        len if len % 2 == 1 => sorted[len / 2] as f64,
        len => (sorted[len / 2 - 1] + sorted[len / 2]) as f64 / 2.0,
    }
}

fn mean(values: &[usize]) -> f64 {
    if values.is_empty() {
        0.0
    } else {
        values.iter().sum::<usize>() as f64 / values.len() as f64
    }
}

/// Degree statistics of the distinct nodes found in maximal cliques of
/// each order, alongside the whole-graph mean and median degree.
pub fn clique_degree_stats(g: &Graph, report: &CliqueReport) -> DegreeStats {
    let mut members: BTreeMap<usize, BTreeSet<NodeId>> = BTreeMap::new();
    for c in &report.maximal_cliques {
        members.entry(c.len()).or_default().extend(c.iter().copied());
    }
    let per_order = members
        .into_iter()
        .map(|(order, nodes)| {
            let mut degrees: Vec<usize> = nodes.iter().map(|&v| g.degree(v)).collect();
            degrees.sort_unstable();
            OrderDegreeStats {
                order,
                nodes: degrees.len(),
                min: degrees[0],
                max: *degrees.last().expect("nonempty clique"),
                mean: mean(&degrees),
                median: median(&degrees),
            }
        })
        .collect();
    let mut all = g.degrees().to_vec();
    all.sort_unstable();
    DegreeStats {
        per_order,
        graph_mean: mean(&all),
        graph_median: median(&all),
    }
}

impl CliqueReport {
    pub fn order_stats(&self, order: usize) -> Option<&OrderDegreeStats> {
        self.degree_stats.per_order.iter().find(|s| s.order == order)
    }

    /// `k,count` rows with header.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("k,count\n");
        for (k, c) in &self.size_histogram {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}
