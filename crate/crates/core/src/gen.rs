//! Graph generators: named families, seeded Erdős–Rényi samples and the
//! clique-plus-chain counterexample family.
//!
//! # Random stream
//!
//! `G(n, p)` samples are reproducible across platforms and ports. The
//! generator is ChaCha8 seeded through `rand_core`'s `seed_from_u64`
//! (PCG32 expansion of the 64-bit seed into the 32-byte key). Pairs
//! `(i, j)` with `i < j` are visited in lexicographic order and each draws
//! one `next_u64()`; the edge is kept iff the draw is below
//! `floor(p · 2^64)`, with `p = 1` keeping every pair. Connected sampling
//! continues the same stream from one attempt to the next.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Deterministic families selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedFamily {
    Complete,
    Path,
    Cycle,
    Star,
}

impl NamedFamily {
    pub fn min_nodes(self) -> usize {
        match self {
            NamedFamily::Complete | NamedFamily::Path => 1,
            NamedFamily::Star => 2,
            NamedFamily::Cycle => 3,
        }
    }
}

/// A fully parameterized generator request. Round-trips through JSON as
/// `{"family": "gnp", "n": 30, "p": 0.5, "seed": 7}` and similar.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GenSpec {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Gnp { n: usize, p: f64, seed: u64 },
    GnpConnected { n: usize, p: f64, seed: u64, max_tries: usize },
    ChainClique { b: usize, n: usize },
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GenSpec::Complete { n } => check_min(NamedFamily::Complete, n),
            GenSpec::Path { n } => check_min(NamedFamily::Path, n),
            GenSpec::Cycle { n } => check_min(NamedFamily::Cycle, n),
            GenSpec::Star { n } => check_min(NamedFamily::Star, n),
            GenSpec::Gnp { n, p, .. } => check_gnp(n, p),
            GenSpec::GnpConnected { n, p, max_tries, .. } => {
                check_gnp(n, p)?;
                if max_tries == 0 {
                    return Err(Error::InvalidParameter("max_tries must be at least 1".into()));
                }
                Ok(())
            }
            GenSpec::ChainClique { b, n } => check_chain(b, n),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            GenSpec::Complete { n } => named_family(NamedFamily::Complete, n),
            GenSpec::Path { n } => named_family(NamedFamily::Path, n),
            GenSpec::Cycle { n } => named_family(NamedFamily::Cycle, n),
            GenSpec::Star { n } => named_family(NamedFamily::Star, n),
            GenSpec::Gnp { n, p, seed } => gnp(n, p, seed),
            GenSpec::GnpConnected {
                n,
                p,
                seed,
                max_tries,
            } => gnp_connected(n, p, seed, max_tries).map(|s| s.graph),
            GenSpec::ChainClique { b, n } => chain_clique(b, n),
        }
    }
}

fn check_min(family: NamedFamily, n: usize) -> Result<()> {
    if n < family.min_nodes() {
        return Err(Error::InvalidParameter(format!(
            "{family:?} needs at least {} nodes, got {n}",
            family.min_nodes()
        )));
    }
    Ok(())
}

fn check_gnp(n: usize, p: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("G(n, p) needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} is outside [0, 1]")));
    }
    Ok(())
}

fn check_chain(b: usize, n: usize) -> Result<()> {
    if b < 3 || n < b {
        return Err(Error::InvalidParameter(format!(
            "chain_clique needs n >= b >= 3, got b = {b}, n = {n}"
        )));
    }
    Ok(())
}

pub fn named_family(family: NamedFamily, n: usize) -> Result<Graph> {
    check_min(family, n)?;
    let edges: Vec<(NodeId, NodeId)> = match family {
        NamedFamily::Complete => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        NamedFamily::Path => (1..n).map(|i| (i - 1, i)).collect(),
        NamedFamily::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        NamedFamily::Star => (1..n).map(|i| (0, i)).collect(),
    };
    Graph::with_node_count(n, edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    named_family(NamedFamily::Complete, n)
}

pub fn path(n: usize) -> Result<Graph> {
    named_family(NamedFamily::Path, n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    named_family(NamedFamily::Cycle, n)
}

/// Star on `n` nodes: centre 0 and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    named_family(NamedFamily::Star, n)
}

/// The Petersen graph (outer 5-cycle, inner pentagram, spokes).
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::with_node_count(10, edges).expect("static edge list")
}

/// `K_b` on nodes `0..b` with a path `b, b+1, .., n-1` hanging off node 0.
pub fn chain_clique(b: usize, n: usize) -> Result<Graph> {
    check_chain(b, n)?;
    let mut edges: Vec<(NodeId, NodeId)> =
        (0..b).flat_map(|i| (i + 1..b).map(move |j| (i, j))).collect();
    if n > b {
        edges.push((0, b));
        edges.extend((b + 1..n).map(|v| (v - 1, v)));
    }
    Graph::with_node_count(n, edges)
}

fn threshold(p: f64) -> Option<u64> {
    // None means "always include".
    if p >= 1.0 {
        None
    } else {
        Some((p * 18_446_744_073_709_551_616.0) as u64)
    }
}

fn draw(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let cut = threshold(p);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = rng.next_u64();
            if cut.is_none_or(|t| x < t) {
                edges.push((i, j));
            }
        }
    }
    Graph::with_node_count(n, edges)
}

/// Erdős–Rényi `G(n, p)` from the documented ChaCha8 stream.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_gnp(n, p)?;
    draw(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A connected `G(n, p)` sample and the number of draws it took.
#[derive(Clone, Debug)]
pub struct ConnectedSample {
    pub graph: Graph,
    pub attempts: usize,
}

/// Rejection-samples `G(n, p)` until the draw is connected.
pub fn gnp_connected(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<ConnectedSample> {
    check_gnp(n, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_tries {
        let graph = draw(n, p, &mut rng)?;
        if graph.is_connected() {
            return Ok(ConnectedSample {
                graph,
                attempts: attempt,
            });
        }
    }
    Err(Error::Sampling {
        n,
        p,
        tries: max_tries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.m(), 6);
        let c5 = cycle(5).unwrap();
        assert!(c5.degrees().iter().all(|&d| d == 2));
        let s = star(5).unwrap();
        assert_eq!(s.degrees(), &[4, 1, 1, 1, 1]);
        assert!(cycle(2).is_err());
        assert!(star(1).is_err());
        assert_eq!(path(1).unwrap().m(), 0);
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(5, 0.0, 17).unwrap().m(), 0);
        assert_eq!(gnp(5, 1.0, 17).unwrap(), complete(5).unwrap());
        assert!(gnp(5, 1.5, 0).is_err());
        assert!(gnp(5, -0.1, 0).is_err());
        assert!(gnp(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(30, 0.3, 99).unwrap();
        let b = gnp(30, 0.3, 99).unwrap();
        assert_eq!(a.to_edge_list(), b.to_edge_list());
        assert_ne!(a.to_edge_list(), gnp(30, 0.3, 100).unwrap().to_edge_list());
    }

    #[test]
    fn gnp_stream_is_pinned() {
        // Frozen output of the documented stream; changing the generator
        // or the pair order breaks this.
        let g = gnp(8, 0.5, 42).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            [
                (0, 3), (0, 5), (0, 6), (0, 7), (1, 4), (2, 5), (2, 7),
                (3, 4), (3, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 6),
            ]
        );
    }

    #[test]
    fn gnp_edge_count_within_binomial_band() {
        // m ~ Bin(435, 0.5): P(m outside [100, 320]) is below 1e-30.
        for seed in 0..1000 {
            let m = gnp(30, 0.5, seed).unwrap().m();
            assert!((100..=320).contains(&m), "seed {seed}: m = {m}");
        }
    }

    #[test]
    fn connected_sampling() {
        let s = gnp_connected(10, 1.0, 3, 1).unwrap();
        assert_eq!(s.graph, complete(10).unwrap());
        assert_eq!(s.attempts, 1);
        let dense = gnp_connected(30, 0.9, 5, 100).unwrap();
        assert!(dense.graph.is_connected());
        assert_eq!(dense.attempts, 1);
        let err = gnp_connected(10, 0.01, 5, 3).unwrap_err();
        assert!(matches!(err, Error::Sampling { tries: 3, .. }));
    }

    #[test]
    fn chain_clique_shape() {
        let g = chain_clique(4, 8).unwrap();
        assert_eq!(g.m(), 6 + 4);
        assert_eq!(g.degrees(), &[4, 3, 3, 3, 2, 2, 2, 1]);
        assert!(g.is_connected());
        assert!(chain_clique(5, 12).unwrap().is_connected());
        assert_eq!(chain_clique(4, 4).unwrap(), complete(4).unwrap());
        assert!(chain_clique(2, 5).is_err());
        assert!(chain_clique(5, 4).is_err());
    }

    #[test]
    fn spec_round_trips_through_json() {
        let specs = [
            GenSpec::Gnp { n: 30, p: 0.5, seed: 7 },
            GenSpec::ChainClique { b: 4, n: 26 },
            GenSpec::GnpConnected { n: 12, p: 0.5, seed: 1, max_tries: 10 },
            GenSpec::Star { n: 6 },
        ];
        for spec in specs {
            let json = serde_json::to_string(&spec).unwrap();
            assert_eq!(serde_json::from_str::<GenSpec>(&json).unwrap(), spec);
        }
        let parsed: GenSpec = serde_json::from_str(r#"{"family":"cycle","n":5}"#).unwrap();
        assert_eq!(parsed.generate().unwrap(), cycle(5).unwrap());
        assert!(serde_json::from_str::<GenSpec>(r#"{"family":"cycle","n":5,"p":0.3}"#).is_err());
        assert!(serde_json::from_str::<GenSpec>(r#"{"family":"gnp","n":5}"#).is_err());
        assert!(GenSpec::ChainClique { b: 5, n: 3 }.generate().is_err());
    }
}
