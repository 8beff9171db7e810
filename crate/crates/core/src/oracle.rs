//! Brute-force reference counts.
//!
//! Everything here enumerates node subsets directly and shares no code
//! with the closed-form census, so the two can check each other.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::census::MotifCounts;
use crate::clustering::ClusteringReport;
use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Motif label `M_a^(b)`: `b` nodes, canonical code `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MotifId {
    pub b: usize,
    pub a: u32,
}

impl MotifId {
    pub const STAR3: MotifId = MotifId { b: 3, a: 3 };
    pub const TRIANGLE: MotifId = MotifId { b: 3, a: 7 };
    pub const STAR4: MotifId = MotifId { b: 4, a: 11 };
    pub const PATH4: MotifId = MotifId { b: 4, a: 13 };
    pub const TADPOLE: MotifId = MotifId { b: 4, a: 15 };
    pub const CLIQUE4: MotifId = MotifId { b: 4, a: 63 };
    pub const STAR5: MotifId = MotifId { b: 5, a: 75 };
    pub const ARROW5: MotifId = MotifId { b: 5, a: 77 };
    pub const PATH5: MotifId = MotifId { b: 5, a: 86 };
    pub const CLIQUE5: MotifId = MotifId { b: 5, a: 1023 };

    pub const CENSUS: [MotifId; 10] = [
        Self::STAR3,
        Self::TRIANGLE,
        Self::STAR4,
        Self::PATH4,
        Self::TADPOLE,
        Self::CLIQUE4,
        Self::STAR5,
        Self::ARROW5,
        Self::PATH5,
        Self::CLIQUE5,
    ];

    /// Checks that `a` is the canonical code of some `b`-node graph.
    pub fn validate(self) -> Result<MotifId> {
        check_motif_order(self.b)?;
        let table = code_table(self.b);
        if (self.a as usize) < table.len() && table[self.a as usize] == self.a {
            Ok(self)
        } else {
            Err(Error::InvalidParameter(format!(
                "{} is not a canonical {}-node motif code",
                self.a, self.b
            )))
        }
    }
}

fn check_motif_order(b: usize) -> Result<()> {
    if (3..=5).contains(&b) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "motif order must be 3, 4 or 5, got {b}"
        )))
    }
}

fn check_order(g: &Graph, b: usize) -> Result<()> {
    if b < 3 || b > g.n() {
        return Err(Error::InvalidParameter(format!(
            "b = {b} must satisfy 3 <= b <= n = {}",
            g.n()
        )));
    }
    Ok(())
}

fn pair_count(b: usize) -> usize {
    b * (b - 1) / 2
}

/// Bit of pair `(i, j)`, `i < j`, in the row-by-row upper-triangle
/// reading. The first pair is the most significant bit.
fn pair_bit(b: usize, i: usize, j: usize) -> u32 {
    let index = i * (2 * b - i - 1) / 2 + (j - i - 1);
    1 << (pair_count(b) - 1 - index)
}

/// Upper-triangle code of an adjacency given as a bit mask in the same
/// reading order, under the node permutation `perm`.
fn permuted_code(b: usize, mask: u32, perm: &[usize]) -> u32 {
    let mut code = 0;
    for i in 0..b {
        for j in i + 1..b {
            let (x, y) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            if mask & pair_bit(b, x, y) != 0 {
                code |= pair_bit(b, i, j);
            }
        }
    }
    code
}

fn permutations(b: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(b), &mut vec![false; b], &mut out);
    out
}

fn canonical_code(b: usize, mask: u32) -> u32 {
    permutations(b)
        .iter()
        .map(|perm| permuted_code(b, mask, perm))
        .min()
        .expect("at least one permutation")
}

/// Canonical code of every `b`-node adjacency mask, `3 <= b <= 5`.
fn code_table(b: usize) -> &'static [u32] {
    static TABLES: OnceLock<[Vec<u32>; 3]> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        [3, 4, 5].map(|b| {
            (0..1u32 << pair_count(b))
                .map(|mask| canonical_code(b, mask))
                .collect()
        })
    });
    &tables[b - 3]
}

/// Minimal decimal reading of the upper triangle over all relabellings.
pub fn canonical_motif_id(adj: &[Vec<bool>]) -> Result<MotifId> {
    let b = adj.len();
    check_motif_order(b)?;
    let mut mask = 0;
    for (i, row) in adj.iter().enumerate() {
        if row.len() != b {
            return Err(Error::InvalidParameter("adjacency matrix is not square".into()));
        }
        if row[i] {
            return Err(Error::InvalidParameter(format!("self-loop at node {i}")));
        }
        for j in i + 1..b {
            if row[j] != adj[j][i] {
                return Err(Error::InvalidParameter("adjacency matrix is not symmetric".into()));
            }
            if row[j] {
                mask |= pair_bit(b, i, j);
            }
        }
    }
    Ok(MotifId {
        b,
        a: canonical_code(b, mask),
    })
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[NodeId])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn induced_mask(g: &Graph, subset: &[NodeId]) -> u32 {
    let b = subset.len();
    let mut mask = 0;
    for i in 0..b {
        for j in i + 1..b {
            if g.has_edge(subset[i], subset[j]) {
                mask |= pair_bit(b, i, j);
            }
        }
    }
    mask
}

/// Histogram of canonical codes over every nonempty edge subset of every
/// `b`-node induced subgraph. A connected motif spanning `b` nodes is
/// seen exactly once per nested occurrence.
fn nested_histogram(g: &Graph, b: usize) -> Result<Vec<Count>> {
    let table = code_table(b);
    let mut hist = vec![0 as Count; table.len()];
    let mut overflow = false;
    for_each_combination(g.n(), b, |subset| {
        let mask = induced_mask(g, subset);
        let mut sub = mask;
        while sub != 0 {
            let slot = &mut hist[table[sub as usize] as usize];
            match slot.checked_add(1) {
                Some(v) => *slot = v,
                None => overflow = true,
            }
            sub = (sub - 1) & mask;
        }
    });
    if overflow {
        return Err(Error::Overflow("brute-force motif histogram"));
    }
    Ok(hist)
}

/// Number of nested occurrences of motif `id` in `g`.
pub fn brute_motif_count(g: &Graph, id: MotifId) -> Result<Count> {
    let id = id.validate()?;
    Ok(nested_histogram(g, id.b)?[id.a as usize])
}

/// All ten census counts by subset enumeration.
pub fn brute_census(g: &Graph) -> Result<MotifCounts> {
    let h3 = nested_histogram(g, 3)?;
    let h4 = nested_histogram(g, 4)?;
    let h5 = nested_histogram(g, 5)?;
    Ok(MotifCounts {
        m3_3: h3[3],
        m7_3: h3[7],
        m11_4: h4[11],
        m13_4: h4[13],
        m15_4: h4[15],
        m63_4: h4[63],
        m75_5: h5[75],
        m77_5: h5[77],
        m86_5: h5[86],
        m1023_5: h5[1023],
        tier: 5,
    })
}

/// Number of `b`-subsets whose induced subgraph is complete.
pub fn count_b_cliques(g: &Graph, b: usize) -> Result<Count> {
    check_order(g, b)?;
    let mut total: Count = 0;
    for_each_combination(g.n(), b, |s| {
        let complete = (0..b).all(|i| (i + 1..b).all(|j| g.has_edge(s[i], s[j])));
        if complete {
            total += 1;
        }
    });
    Ok(total)
}

/// Number of trees in `g` on exactly `b` nodes: the sum of spanning tree
/// counts over all `b`-node induced subgraphs.
pub fn count_b_spanning_trees(g: &Graph, b: usize) -> Result<Count> {
    check_order(g, b)?;
    let dim = b - 1;
    let mut minor = vec![0i128; dim * dim];
    let mut total: Count = 0;
    let mut failure = None;
    for_each_combination(g.n(), b, |s| {
        if failure.is_some() {
            return;
        }
        laplacian_minor(dim + 1, |i, j| g.has_edge(s[i], s[j]), &mut minor);
        match determinant(&mut minor, dim).and_then(to_count) {
            Ok(t) => match total.checked_add(t) {
                Some(v) => total = v,
                None => failure = Some(Error::Overflow("b-spanning tree count")),
            },
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Spanning trees of `g` by the matrix-tree theorem; zero when `g` is
/// disconnected.
pub fn spanning_tree_count(g: &Graph) -> Result<Count> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("graph has no nodes".into()));
    }
    let dim = n - 1;
    let mut minor = vec![0i128; dim * dim];
    laplacian_minor(n, |i, j| g.has_edge(i, j), &mut minor);
    to_count(determinant(&mut minor, dim)?)
}

fn to_count(det: i128) -> Result<Count> {
    Count::try_from(det).map_err(|_| Error::NegativeCount("Laplacian cofactor"))
}

/// Laplacian of a `size`-node graph with its last row and column removed,
/// written row-major into `out`.
fn laplacian_minor(size: usize, adjacent: impl Fn(usize, usize) -> bool, out: &mut [i128]) {
    let dim = size - 1;
    out.fill(0);
    for i in 0..size {
        for j in i + 1..size {
            if adjacent(i, j) {
                if i < dim {
                    out[i * dim + i] += 1;
                }
                if j < dim {
                    out[j * dim + j] += 1;
                }
                if j < dim {
                    out[i * dim + j] = -1;
                    out[j * dim + i] = -1;
                }
            }
        }
    }
}

/// Fraction-free (Bareiss) determinant of a row-major `dim × dim` integer
/// matrix. Destroys `a`.
fn determinant(a: &mut [i128], dim: usize) -> Result<i128> {
    const WHAT: &str = "Bareiss elimination";
    if dim == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..dim - 1 {
        if a[k * dim + k] == 0 {
            let Some(r) = (k + 1..dim).find(|&r| a[r * dim + k] != 0) else {
                return Ok(0);
            };
            for c in 0..dim {
                a.swap(k * dim + c, r * dim + c);
            }
            sign = -sign;
        }
        let pivot = a[k * dim + k];
        for i in k + 1..dim {
            let lead = a[i * dim + k];
            for j in k + 1..dim {
                let x = a[i * dim + j]
                    .checked_mul(pivot)
                    .zip(lead.checked_mul(a[k * dim + j]))
                    .and_then(|(p, q)| p.checked_sub(q))
                    .ok_or(Error::Overflow(WHAT))?;
                // Exact by Sylvester's identity.
                a[i * dim + j] = x / prev;
            }
        }
        prev = pivot;
    }
    Ok(sign * a[(dim - 1) * dim + dim - 1])
}

/// `C(b)` by nested loops over every `b`-subset.
pub fn c_naive(g: &Graph, b: usize) -> Result<ClusteringReport> {
    let cliques = count_b_cliques(g, b)?;
    let trees = count_b_spanning_trees(g, b)?;
    ClusteringReport::new(b, cliques, trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{gen, Rational};

    fn adjacency(b: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; b]; b];
        for &(i, j) in edges {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        adj
    }

    #[test]
    fn canonical_ids_of_named_motifs() {
        let tri = adjacency(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(canonical_motif_id(&tri).unwrap(), MotifId::TRIANGLE);
        let p3 = adjacency(3, &[(0, 1), (1, 2)]);
        assert_eq!(canonical_motif_id(&p3).unwrap(), MotifId::STAR3);
        let k5: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        assert_eq!(canonical_motif_id(&adjacency(5, &k5)).unwrap(), MotifId::CLIQUE5);

        let star4 = adjacency(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(canonical_motif_id(&star4).unwrap(), MotifId::STAR4);
        let path4 = adjacency(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(canonical_motif_id(&path4).unwrap(), MotifId::PATH4);
        let tadpole = adjacency(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(canonical_motif_id(&tadpole).unwrap(), MotifId::TADPOLE);
        let star5 = adjacency(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(canonical_motif_id(&star5).unwrap(), MotifId::STAR5);
        let arrow = adjacency(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        assert_eq!(canonical_motif_id(&arrow).unwrap(), MotifId::ARROW5);
        let path5 = adjacency(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(canonical_motif_id(&path5).unwrap(), MotifId::PATH5);
    }

    #[test]
    fn canonical_id_rejects_bad_input() {
        assert!(canonical_motif_id(&adjacency(2, &[(0, 1)])).is_err());
        assert!(canonical_motif_id(&adjacency(6, &[(0, 1)])).is_err());
        let mut asym = adjacency(3, &[(0, 1)]);
        asym[1][0] = false;
        assert!(canonical_motif_id(&asym).is_err());
        assert!(MotifId { b: 4, a: 14 }.validate().is_err());
        assert!(MotifId { b: 4, a: 13 }.validate().is_ok());
    }

    #[test]
    fn permutation_invariance_of_the_ten_motifs() {
        for id in MotifId::CENSUS {
            let b = id.b;
            let edges: Vec<_> = (0..b)
                .flat_map(|i| (i + 1..b).map(move |j| (i, j)))
                .filter(|&(i, j)| id.a & pair_bit(b, i, j) != 0)
                .collect();
            for perm in permutations(b) {
                let relabelled: Vec<_> = edges.iter().map(|&(i, j)| (perm[i], perm[j])).collect();
                assert_eq!(canonical_motif_id(&adjacency(b, &relabelled)).unwrap(), id);
            }
        }
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let mut count = 0;
        for_each_combination(3, 4, |_| count += 1);
        assert_eq!(count, 0);
        for_each_combination(4, 4, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn brute_counts() {
        let k4 = gen::complete(4).unwrap();
        assert_eq!(brute_motif_count(&k4, MotifId::TRIANGLE).unwrap(), 4);
        assert_eq!(brute_motif_count(&k4, MotifId::PATH4).unwrap(), 12);
        let c5 = gen::cycle(5).unwrap();
        assert_eq!(brute_motif_count(&c5, MotifId::PATH5).unwrap(), 5);
        let k5 = gen::complete(5).unwrap();
        assert_eq!(brute_motif_count(&k5, MotifId::ARROW5).unwrap(), 60);
    }

    #[test]
    fn clique_counts() {
        assert_eq!(count_b_cliques(&gen::complete(6).unwrap(), 4).unwrap(), 15);
        assert_eq!(count_b_cliques(&gen::chain_clique(5, 20).unwrap(), 5).unwrap(), 1);
        assert_eq!(count_b_cliques(&gen::petersen(), 3).unwrap(), 0);
        assert!(count_b_cliques(&gen::complete(4).unwrap(), 5).is_err());
        assert!(count_b_cliques(&gen::complete(4).unwrap(), 2).is_err());
    }

    #[test]
    fn b_spanning_tree_counts() {
        let k4 = gen::complete(4).unwrap();
        assert_eq!(count_b_spanning_trees(&k4, 4).unwrap(), 16);
        let k5 = gen::complete(5).unwrap();
        assert_eq!(count_b_spanning_trees(&k5, 4).unwrap(), 80);
        assert_eq!(count_b_spanning_trees(&k5, 5).unwrap(), 125);
    }

    #[test]
    fn whole_graph_spanning_trees() {
        assert_eq!(spanning_tree_count(&gen::path(6).unwrap()).unwrap(), 1);
        assert_eq!(spanning_tree_count(&gen::star(7).unwrap()).unwrap(), 1);
        for n in 3..=9 {
            assert_eq!(spanning_tree_count(&gen::cycle(n).unwrap()).unwrap(), n as Count);
        }
        for n in 3..=8u32 {
            let kn = gen::complete(n as usize).unwrap();
            assert_eq!(spanning_tree_count(&kn).unwrap(), Count::from(n).pow(n - 2));
        }
        let split = Graph::with_node_count(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&split).unwrap(), 0);
        assert_eq!(spanning_tree_count(&Graph::with_node_count(1, []).unwrap()).unwrap(), 1);
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // Needs a row swap at the first step.
        let mut m = vec![0, 2, 1, 3i128];
        assert_eq!(determinant(&mut m, 2).unwrap(), -2);
        let mut m = vec![2, 1, 1, 1, 3, 2, 1, 0, 0i128];
        assert_eq!(determinant(&mut m, 3).unwrap(), -1);
    }

    #[test]
    fn naive_coefficients() {
        let k5 = gen::complete(5).unwrap();
        assert_eq!(c_naive(&k5, 5).unwrap().value, Rational::from_integer(1));
        let chain = gen::chain_clique(4, 12).unwrap();
        assert_eq!(c_naive(&chain, 4).unwrap().value, Rational::new(8, 17));
        let star = gen::star(6).unwrap();
        assert_eq!(c_naive(&star, 3).unwrap().value, Rational::from_integer(0));
    }
}
