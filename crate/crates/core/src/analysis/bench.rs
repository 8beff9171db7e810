//! Wall-clock comparison of closed-form and nested-loop `C(b)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::clustering::{self, ClusteringReport};
use crate::count::Rational;
use crate::error::{Error, Result};
use crate::gen;
use crate::graph::Graph;
use crate::oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Statistic {
    C3,
    C4,
    C5,
}

impl Statistic {
    pub fn order(self) -> usize {
        match self {
            Statistic::C3 => 3,
            Statistic::C4 => 4,
            Statistic::C5 => 5,
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.order())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c3" | "3" => Ok(Statistic::C3),
            "c4" | "4" => Ok(Statistic::C4),
            "c5" | "5" => Ok(Statistic::C5),
            other => Err(Error::InvalidParameter(format!("unknown statistic `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Analytic,
    Naive,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Analytic => "analytic",
            Algorithm::Naive => "naive",
        })
    }
}

impl Algorithm {
    pub fn run(self, g: &Graph, stat: Statistic) -> Result<ClusteringReport> {
        match self {
            Algorithm::Analytic => clustering::c_analytic(g, stat.order()),
            Algorithm::Naive => oracle::c_naive(g, stat.order()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub p: f64,
    pub reps: usize,
    pub statistics: Vec<Statistic>,
    pub seed: u64,
    /// Attempts per connected draw.
    pub max_tries: usize,
    /// Run each (algorithm, statistic) once per size before timing.
    pub warmup: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![10, 20, 30],
            p: 0.9,
            reps: 5,
            statistics: vec![Statistic::C3, Statistic::C4, Statistic::C5],
            seed: 0,
            max_tries: 1000,
            warmup: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub statistic: Statistic,
    pub n: usize,
    pub p: f64,
    pub rep: usize,
    /// Seed of the connected draw timed in this record.
    pub seed: u64,
    pub seconds: f64,
    pub value: Rational,
}

pub const CSV_HEADER: &str = "algorithm,statistic,n,p,rep,seed,seconds,value_num,value_den";

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.9},{},{}",
            self.algorithm,
            self.statistic,
            self.n,
            self.p,
            self.rep,
            self.seed,
            self.seconds,
            self.value.numer(),
            self.value.denom()
        )
    }
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Seed of replication `rep` at size `n`: the base seed with `n` in the
/// high 32 bits and `rep` in the low 32 bits mixed in by XOR.
pub fn replication_seed(seed: u64, n: usize, rep: usize) -> u64 {
    seed ^ ((n as u64) << 32) ^ rep as u64
}

fn timed(alg: Algorithm, g: &Graph, stat: Statistic) -> Result<(f64, Rational)> {
    let start = Instant::now();
    let report = alg.run(g, stat)?;
    let seconds = start.elapsed().as_secs_f64();
    Ok((seconds, report.value))
}

/// Times both algorithms on the same connected `G(n, p)` draw for every
/// size, replication and statistic.
pub fn bench_run(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if cfg.reps == 0 {
        return Err(Error::InvalidParameter("reps must be at least 1".into()));
    }
    if let Some(&n) = cfg.sizes.iter().find(|&&n| n < 5) {
        return Err(Error::InvalidParameter(format!("benchmark sizes must be >= 5, got {n}")));
    }
    let mut records = Vec::new();
    for &n in &cfg.sizes {
        if cfg.warmup {
            let warm = gen::gnp_connected(n, cfg.p, replication_seed(cfg.seed, n, 0), cfg.max_tries)?;
            for &stat in &cfg.statistics {
                for alg in [Algorithm::Analytic, Algorithm::Naive] {
                    std::hint::black_box(alg.run(&warm.graph, stat)?);
                }
            }
        }
        for rep in 0..cfg.reps {
            let seed = replication_seed(cfg.seed, n, rep);
            let sample = gen::gnp_connected(n, cfg.p, seed, cfg.max_tries)?;
            for &stat in &cfg.statistics {
                for alg in [Algorithm::Analytic, Algorithm::Naive] {
                    let (seconds, value) = timed(alg, &sample.graph, stat)?;
                    records.push(BenchRecord {
                        algorithm: alg,
                        statistic: stat,
                        n,
                        p: cfg.p,
                        rep,
                        seed,
                        seconds,
                        value,
                    });
                }
            }
        }
    }
    Ok(records)
}

/// Median runtimes per `(statistic, n)` cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Speedup {
    pub statistic: Statistic,
    pub n: usize,
    pub reps: usize,
    pub median_analytic: f64,
    pub median_naive: f64,
    /// `median_naive / median_analytic`.
    pub ratio: f64,
    /// Analytic and naive values agreed on every replication.
    pub values_agree: bool,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

pub fn speedups(records: &[BenchRecord]) -> Vec<Speedup> {
    type Cell = (Vec<f64>, Vec<f64>, BTreeMap<usize, Vec<Rational>>);
    let mut cells: BTreeMap<(Statistic, usize), Cell> = BTreeMap::new();
    for r in records {
        let cell = cells.entry((r.statistic, r.n)).or_default();
        match r.algorithm {
            Algorithm::Analytic => cell.0.push(r.seconds),
            Algorithm::Naive => cell.1.push(r.seconds),
        }
        cell.2.entry(r.rep).or_default().push(r.value);
    }
    cells
        .into_iter()
        .filter(|(_, (a, b, _))| !a.is_empty() && !b.is_empty())
        .map(|((statistic, n), (analytic, naive, values))| {
            let reps = analytic.len();
            let median_analytic = median(analytic);
            let median_naive = median(naive);
            Speedup {
                statistic,
                n,
                reps,
                median_analytic,
                median_naive,
                ratio: median_naive / median_analytic.max(f64::MIN_POSITIVE),
                values_agree: values.values().all(|v| v.windows(2).all(|w| w[0] == w[1])),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_layout() {
        let cfg = BenchConfig {
            sizes: vec![20],
            p: 0.9,
            reps: 3,
            statistics: vec![Statistic::C3],
            seed: 11,
            max_tries: 100,
            warmup: false,
        };
        let records = bench_run(&cfg).unwrap();
        assert_eq!(records.len(), 6);
        for pair in records.chunks(2) {
            assert_eq!(pair[0].algorithm, Algorithm::Analytic);
            assert_eq!(pair[1].algorithm, Algorithm::Naive);
            assert_eq!(pair[0].value, pair[1].value);
            assert_eq!(pair[0].seed, pair[1].seed);
        }
        let csv = to_csv(&records);
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), 7);
    }

    #[test]
    fn same_seed_same_values() {
        let cfg = BenchConfig {
            sizes: vec![8, 9],
            reps: 2,
            seed: 4,
            warmup: false,
            ..BenchConfig::default()
        };
        let strip = |rs: Vec<BenchRecord>| -> Vec<_> {
            rs.into_iter()
                .map(|r| (r.algorithm, r.statistic, r.n, r.rep, r.seed, r.value))
                .collect()
        };
        assert_eq!(strip(bench_run(&cfg).unwrap()), strip(bench_run(&cfg).unwrap()));
    }

    #[test]
    fn rejects_bad_config() {
        let small = BenchConfig { sizes: vec![4], ..BenchConfig::default() };
        assert!(bench_run(&small).is_err());
        let none = BenchConfig { reps: 0, ..BenchConfig::default() };
        assert!(bench_run(&none).is_err());
    }

    #[test]
    fn statistic_names() {
        assert_eq!("c4".parse::<Statistic>().unwrap(), Statistic::C4);
        assert_eq!("C5".parse::<Statistic>().unwrap(), Statistic::C5);
        assert!("c6".parse::<Statistic>().is_err());
        assert_eq!(Statistic::C3.to_string(), "C3");
    }
}
