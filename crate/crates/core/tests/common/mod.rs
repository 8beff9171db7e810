#![allow(dead_code)]

use graphclust::{gen, Graph};

pub const CORPUS_SIZE: usize = 300;
pub const PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// `(n, p, seed)` of corpus entry `k`: n cycles through 6..=12, p through
/// 0.2/0.5/0.8, seed = k.
pub fn corpus_params(k: usize) -> (usize, f64, u64) {
    (6 + k % 7, PROBABILITIES[(k / 7) % 3], k as u64)
}

/// The 300 seeded connected G(n, p) graphs shared by the corpus checks.
pub fn corpus() -> Vec<Graph> {
    (0..CORPUS_SIZE)
        .map(|k| {
            let (n, p, seed) = corpus_params(k);
            gen::gnp_connected(n, p, seed, 100_000)
                .unwrap_or_else(|e| panic!("corpus entry {k}: {e}"))
                .graph
        })
        .collect()
}

pub fn complete_minus_edge(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&e| e != (0, 1));
    Graph::with_node_count(n, edges).unwrap()
}
