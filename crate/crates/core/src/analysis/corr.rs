use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::series::{Column, SeriesTable};

pub const DEFAULT_PERMUTATIONS: usize = 10_000;

/// Pairwise Pearson correlations over rows defined in both columns.
///
/// `r[i][j]` is `None` when a column is constant on the shared rows or
/// fewer than three rows are shared. `p_value` is the two-sided
/// permutation p-value `(hits + 1) / (permutations + 1)`; it is `None` on
/// the diagonal, where `r` is undefined, or when no permutations ran.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrMatrix {
    pub names: Vec<String>,
    pub r: Vec<Vec<Option<f64>>>,
    pub n: Vec<Vec<usize>>,
    pub p_value: Vec<Vec<Option<f64>>>,
}

impl CorrMatrix {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,n,r,p\n");
        let fmt = |v: Option<f64>| v.map_or_else(|| "NA".to_string(), |x| x.to_string());
        for i in 0..self.names.len() {
            for j in 0..self.names.len() {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    self.names[i],
                    self.names[j],
                    self.n[i][j],
                    fmt(self.r[i][j]),
                    fmt(self.p_value[i][j])
                ));
            }
        }
        out
    }
}

/// Sample Pearson correlation, `None` for fewer than three points or a
/// zero-variance input.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n < 3 {
        return None;
    }
    let mx = x.iter().sum::<f64>() / n as f64;
    let my = y.iter().sum::<f64>() / n as f64;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    // Relative threshold: a column that is constant up to rounding has
    // no defined correlation.
    let scale = |s: f64, m: f64| s <= 1e-24 * (1.0 + m * m) * n as f64;
    if scale(sxx, mx) || scale(syy, my) {
        return None;
    }
    Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

fn joint_rows(x: &[Option<f64>], y: &[Option<f64>]) -> (Vec<f64>, Vec<f64>) {
    x.iter()
        .zip(y)
        .filter_map(|(a, b)| Some(((*a)?, (*b)?)))
        .unzip()
}

fn permutation_p(x: &[f64], y: &[f64], observed: f64, permutations: usize, seed: u64) -> Option<f64> {
    if permutations == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shuffled = y.to_vec();
    let mut hits = 0usize;
    for _ in 0..permutations {
        shuffled.shuffle(&mut rng);
        if let Some(r) = pearson(x, &shuffled) {
            if r.abs() >= observed.abs() - 1e-12 {
                hits += 1;
            }
        }
    }
    Some((hits + 1) as f64 / (permutations + 1) as f64)
}

/// Correlation matrix over arbitrary named columns of equal length.
pub fn pearson_columns(
    names: &[&str],
    columns: &[Vec<Option<f64>>],
    permutations: usize,
    seed: u64,
) -> CorrMatrix {
    let k = columns.len();
    let mut r = vec![vec![None; k]; k];
    let mut n = vec![vec![0; k]; k];
    let mut p_value = vec![vec![None; k]; k];
    for i in 0..k {
        for j in i..k {
            let (x, y) = joint_rows(&columns[i], &columns[j]);
            n[i][j] = x.len();
            n[j][i] = x.len();
            let rij = pearson(&x, &y);
            if i == j {
                r[i][i] = rij.map(|_| 1.0);
                continue;
            }
            r[i][j] = rij;
            r[j][i] = rij;
            if let Some(obs) = rij {
                let pair_seed = seed ^ ((i * k + j) as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
                let p = permutation_p(&x, &y, obs, permutations, pair_seed);
                p_value[i][j] = p;
                p_value[j][i] = p;
            }
        }
    }
    CorrMatrix {
        names: names.iter().map(|s| s.to_string()).collect(),
        r,
        n,
        p_value,
    }
}

/// Correlations among `C3`, `C4`, `C5` and density.
pub fn pearson_matrix(table: &SeriesTable, permutations: usize, seed: u64) -> CorrMatrix {
    let names: Vec<&str> = Column::ALL.iter().map(|c| c.name()).collect();
    let columns: Vec<Vec<Option<f64>>> = Column::ALL.iter().map(|&c| table.column_f64(c)).collect();
    pearson_columns(&names, &columns, permutations, seed)
}
