//! Generalized clustering coefficients for simple undirected graphs.
//!
//! `C(b)` compares the number of `b`-cliques in a graph with the number of
//! trees spanning `b` of its nodes, normalized by Cayley's `b^(b-2)` so that
//! complete graphs score exactly one. For `b = 3, 4, 5` the counts come from
//! closed-form nested subgraph enumeration ([`census`]); for any `b` they can
//! be recomputed by exhaustive subset sweeps ([`oracle`]).
//!
//! ```
//! use graphclust::{clustering, gen};
//!
//! let g = gen::chain_clique(4, 10).unwrap();
//! let c3 = clustering::c3(&g).unwrap();
//! assert_eq!(c3.value, graphclust::Rational::new(3, 5));
//! ```

pub mod analysis;
pub mod bitset;
pub mod census;
pub mod cliques;
pub mod clustering;
pub mod count;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod walks;

pub use census::MotifCounts;
pub use cliques::CliqueReport;
pub use clustering::ClusteringReport;
pub use count::{Count, Rational};
pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
pub use walks::WalkStats;
