//! Closed-walk and walk counts from powers of the adjacency matrix.

use crate::bitset::BitRow;
use crate::count::{self, Count};
use crate::error::Result;
use crate::graph::Graph;

/// Walk counts consumed by the nested subgraph formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkStats {
    /// `(g³)_ii`: closed walks of length 3 at each node, twice the number
    /// of triangles through it.
    pub g3_diag: Vec<Count>,
    /// `tr(g³)`, six times the triangle count.
    pub tr_g3: Count,
    /// `Σ_{i≠j} (g⁴)_ij` over ordered pairs.
    pub sum_offdiag_g4: Count,
}

#[cfg(test)]
thread_local! {
    pub(crate) static COMPUTE_CALLS: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
}

impl WalkStats {
    /// Computes the walk counts from neighbourhood intersections without
    /// forming any matrix power.
    pub fn compute(g: &Graph) -> Result<WalkStats> {
        #[cfg(test)]
        COMPUTE_CALLS.with(|c| c.set(c.get() + 1));

        let g3_diag = closed_walks3(g);
        let tr_g3 = count::sum(g3_diag.iter().map(|&x| Ok(x)), "tr(g^3)")?;
        let sum_offdiag_g4 = offdiag_g4_sum(g)?;
        Ok(WalkStats {
            g3_diag,
            tr_g3,
            sum_offdiag_g4,
        })
    }

    /// Same quantities by explicit dense matrix powers. Used to
    /// cross-validate [`WalkStats::compute`].
    pub fn dense(g: &Graph) -> Result<WalkStats> {
        let n = g.n();
        let a: Vec<Vec<Count>> = (0..n)
            .map(|i| (0..n).map(|j| Count::from(g.has_edge(i, j))).collect())
            .collect();
        let a2 = matmul(&a, &a)?;
        let a3 = matmul(&a2, &a)?;
        let a4 = matmul(&a2, &a2)?;
        let g3_diag: Vec<Count> = (0..n).map(|i| a3[i][i]).collect();
        let tr_g3 = count::sum(g3_diag.iter().map(|&x| Ok(x)), "tr(g^3)")?;
        let mut sum_offdiag_g4: Count = 0;
        for (i, row) in a4.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i != j {
                    sum_offdiag_g4 = count::add(sum_offdiag_g4, x, "sum of (g^4)_ij")?;
                }
            }
        }
        Ok(WalkStats {
            g3_diag,
            tr_g3,
            sum_offdiag_g4,
        })
    }
}

fn matmul(a: &[Vec<Count>], b: &[Vec<Count>]) -> Result<Vec<Vec<Count>>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                let term = count::mul(a[i][k], b[k][j], "dense matrix power")?;
                out[i][j] = count::add(out[i][j], term, "dense matrix power")?;
            }
        }
    }
    Ok(out)
}

/// `(g³)_ii = Σ_{j∈Γ(i)} |Γ(i) ∩ Γ(j)|` for every node.
pub fn closed_walks3(g: &Graph) -> Vec<Count> {
    (0..g.n())
        .map(|i| {
            let row = g.row(i);
            row.iter()
                .map(|j| row.intersection_count(g.row(j)) as Count)
                .sum()
        })
        .collect()
}

/// `tr(h³)` where `h` is the subgraph of `g` induced on `mask`.
///
/// Equivalent to building the induced subgraph and summing its closed
/// 3-walks, but works directly on masked adjacency rows.
pub fn masked_trace_cubed(g: &Graph, mask: &BitRow) -> Count {
    // Each unordered edge jk inside the mask contributes twice.
    let mut total: Count = 0;
    for j in mask.iter() {
        let nj = g.row(j);
        for k in mask.iter().skip_while(|&k| k <= j) {
            if nj.contains(k) {
                total += mask.intersection_count3(nj, g.row(k)) as Count;
            }
        }
    }
    2 * total
}

/// `Σ_{i≠j} (g⁴)_ij` as `Σ_k s_k² − tr(g⁴)`, where `s_k = Σ_{j∈Γ(k)} k_j`
/// is the k-th row sum of `g²` and `tr(g⁴) = Σ_{i,k} ((g²)_ik)²`.
fn offdiag_g4_sum(g: &Graph) -> Result<Count> {
    const WHAT: &str = "sum of (g^4)_ij";
    let n = g.n();
    let mut all_entries: Count = 0;
    for k in 0..n {
        let s: Count = g.neighbors(k).map(|j| g.degree(j) as Count).sum();
        all_entries = count::add(all_entries, count::mul(s, s, WHAT)?, WHAT)?;
    }
    let mut trace: Count = 0;
    for i in 0..n {
        let d = g.degree(i) as Count;
        trace = count::add(trace, d * d, WHAT)?;
        for k in i + 1..n {
            let c = g.row(i).intersection_count(g.row(k)) as Count;
            trace = count::add(trace, 2 * c * c, WHAT)?;
        }
    }
    count::sub(all_entries, trace, WHAT)
}
