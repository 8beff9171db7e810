//! Snapshot series, correlation tables, runtime benchmarks and oracle
//! verification built on top of the core counts.

pub mod bench;
pub mod corr;
pub mod series;
pub mod verify;

pub use bench::{bench_run, speedups, Algorithm, BenchConfig, BenchRecord, Speedup, Statistic};
pub use corr::{pearson, pearson_columns, pearson_matrix, CorrMatrix};
pub use series::{series_scan, Column, SeriesTable};
pub use verify::{verify, VerifyReport};
