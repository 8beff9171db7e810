//! Immutable simple undirected graphs over dense node ids.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bitset::BitRow;
use crate::count::Rational;
use crate::error::{Error, Result};

/// Dense node index in `0..n`.
pub type NodeId = usize;

/// A simple undirected graph.
///
/// Adjacency is held as one [`BitRow`] per node; degrees are cached.
/// External labels are kept alongside dense ids and survive
/// [`Graph::induced_subgraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<BitRow>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// Builds a graph from labels and id pairs. Repeated edges collapse,
    /// self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if let Some(prev) = seen.insert(label.as_str(), i) {
                return Err(Error::InvalidGraph(format!(
                    "label `{label}` used by nodes {prev} and {i}"
                )));
            }
        }
        let mut rows = vec![BitRow::new(n); n];
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::NodeOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: labels[u].clone(),
                });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(labels, rows))
    }

    /// Graph on nodes labelled `"0".."n-1"`.
    pub fn with_node_count<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Graph::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    fn from_rows(labels: Vec<String>, rows: Vec<BitRow>) -> Graph {
        let degrees: Vec<usize> = rows.iter().map(BitRow::count).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        let g = Graph {
            labels,
            rows,
            degrees,
            m,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated labels, `#` comment lines and blank lines
    /// ignored. Labels get dense ids in order of first appearance.
    pub fn from_edge_list<I, S>(lines: I) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut ids: HashMap<String, NodeId> = HashMap::new();
        let mut edges = Vec::new();
        for (idx, line) in lines.into_iter().enumerate() {
            let line_no = idx + 1;
            let line = line.as_ref().trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    found: tokens.len(),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(Error::SelfLoop {
                    line: line_no,
                    label: tokens[0].to_string(),
                });
            }
            let mut id_of = |label: &str| {
                *ids.entry(label.to_string()).or_insert_with(|| {
                    labels.push(label.to_string());
                    labels.len() - 1
                })
            };
            let (u, v) = (id_of(tokens[0]), id_of(tokens[1]));
            edges.push((u, v));
        }
        Graph::from_edges(labels, edges)
    }

    /// [`Graph::from_edge_list`] over the lines of a string.
    pub fn parse(text: &str) -> Result<Graph> {
        Graph::from_edge_list(text.lines())
    }

    /// Serializes to the edge-list format: each edge written with the
    /// lexicographically smaller label first, lines sorted. Isolated nodes
    /// are not representable and are dropped.
    pub fn to_edge_list(&self) -> String {
        let mut lines: Vec<(&str, &str)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].as_str(), self.labels[v].as_str());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        lines.sort_unstable();
        let mut out = String::new();
        for (a, b) in lines {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: NodeId) -> &str {
        &self.labels[i]
    }

    pub fn id_of(&self, label: &str) -> Option<NodeId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn degree(&self, i: NodeId) -> usize {
        self.degrees[i]
    }

    /// Adjacency row of `i` as a bit set.
    #[inline]
    pub fn row(&self, i: NodeId) -> &BitRow {
        &self.rows[i]
    }

    #[inline]
    pub fn has_edge(&self, i: NodeId, j: NodeId) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, i: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.rows[i].iter()
    }

    /// The neighbourhood `Γ(i)` as a sorted set.
    pub fn neighborhood(&self, i: NodeId) -> Result<BTreeSet<NodeId>> {
        self.check_id(i)?;
        Ok(self.neighbors(i).collect())
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `2m / (n(n-1))`.
    pub fn density(&self) -> Result<Rational> {
        let n = self.n();
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "density needs at least 2 nodes, graph has {n}"
            )));
        }
        Ok(Rational::new(2 * self.m as u128, (n * (n - 1)) as u128))
    }

    /// Subgraph induced on `nodes`, relabelled densely in the order given.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Result<Graph> {
        let k = nodes.len();
        let mut position = vec![usize::MAX; self.n()];
        for (new, &old) in nodes.iter().enumerate() {
            self.check_id(old)?;
            if position[old] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "node {old} listed twice in induced subgraph"
                )));
            }
            position[old] = new;
        }
        let mut rows = vec![BitRow::new(k); k];
        for (new, &old) in nodes.iter().enumerate() {
            for nb in self.neighbors(old) {
                if position[nb] != usize::MAX {
                    rows[new].insert(position[nb]);
                }
            }
        }
        let labels = nodes.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Graph::from_rows(labels, rows))
    }

    /// Breadth-first reachability from node 0. The empty graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = BitRow::new(n);
        seen.insert(0);
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen.contains(v) {
                    seen.insert(v);
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// Symmetric, loop-free adjacency with a consistent degree cache.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        if self.labels.len() != n || self.degrees.len() != n {
            return Err(Error::InvalidGraph("inconsistent node count".into()));
        }
        let mut degree_sum = 0;
        for i in 0..n {
            if self.rows[i].contains(i) {
                return Err(Error::InvalidGraph(format!("self-loop at node {i}")));
            }
            if self.rows[i].count() != self.degrees[i] {
                return Err(Error::InvalidGraph(format!("stale degree at node {i}")));
            }
            for j in self.rows[i].iter() {
                if !self.rows[j].contains(i) {
                    return Err(Error::InvalidGraph(format!("edge {i}-{j} is not symmetric")));
                }
            }
            degree_sum += self.degrees[i];
        }
        if degree_sum != 2 * self.m {
            return Err(Error::InvalidGraph("degree sum differs from 2m".into()));
        }
        Ok(())
    }

    fn check_id(&self, i: NodeId) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { id: i, n: self.n() })
        }
    }
}
