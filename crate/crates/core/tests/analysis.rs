//! Series scanning, correlation, verification and benchmark plumbing.

mod common;

use std::fs;

use proptest::prelude::*;

use graphclust::analysis::{self, BenchConfig, Column, Statistic};
use graphclust::{gen, Rational};

#[test]
fn chain_series_reproduces_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    for n in 6..=65 {
        let g = gen::chain_clique(4, n).unwrap();
        fs::write(dir.path().join(format!("snap{n:03}.txt")), g.to_edge_list()).unwrap();
    }
    let table = analysis::series_scan(dir.path()).unwrap();
    assert_eq!(table.len(), 60);
    assert!(table.errors.is_empty());
    for (k, n) in (6..=65u128).enumerate() {
        assert_eq!(table.snapshot_ids[k], format!("snap{n:03}"));
        assert_eq!(table.c3[k], Some(Rational::new(12, n + 10)));
        assert_eq!(table.c4[k], Some(Rational::new(16, n + 22)));
        assert_eq!(table.c5[k], Some(Rational::from_integer(0)));
    }
    let m = analysis::pearson_matrix(&table, 200, 9);
    let c3 = Column::ALL.iter().position(|&c| c == Column::C3).unwrap();
    let c4 = Column::ALL.iter().position(|&c| c == Column::C4).unwrap();
    let c5 = Column::ALL.iter().position(|&c| c == Column::C5).unwrap();
    assert!(m.r[c3][c4].unwrap() > 0.99);
    assert_eq!(m.r[c3][c5], None);
    assert_eq!(m.p_value[c3][c4], Some(1.0 / 201.0));
    assert_eq!(m, analysis::pearson_matrix(&table, 200, 9));
}

#[test]
fn bad_snapshots_are_reported_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.txt"), gen::complete(5).unwrap().to_edge_list()).unwrap();
    fs::write(dir.path().join("b.txt"), "x x\n").unwrap();
    fs::write(dir.path().join("c.txt"), "lonely\n").unwrap();
    let table = analysis::series_scan(dir.path()).unwrap();
    assert_eq!(table.snapshot_ids, vec!["a"]);
    let files: Vec<_> = table.errors.iter().map(|e| e.file.as_str()).collect();
    assert_eq!(files, ["b.txt", "c.txt"]);
    assert!(analysis::series_scan(&dir.path().join("missing")).is_err());
}

#[test]
fn verify_passes_on_corpus_samples() {
    for g in common::corpus().iter().step_by(10) {
        for b in 3..=5 {
            let r = analysis::verify(g, b).unwrap();
            assert!(r.matched, "{:?}", r.mismatches);
            assert!(r.mismatches.is_empty());
        }
    }
    let r = analysis::verify(&gen::chain_clique(4, 10).unwrap(), 4).unwrap();
    assert_eq!(r.analytic["C4"], "1/2");
}

#[test]
fn bench_is_deterministic_apart_from_times() {
    let cfg = BenchConfig {
        sizes: vec![8, 12],
        reps: 2,
        statistics: vec![Statistic::C3, Statistic::C5],
        seed: 5,
        warmup: false,
        ..BenchConfig::default()
    };
    let a = analysis::bench_run(&cfg).unwrap();
    let b = analysis::bench_run(&cfg).unwrap();
    assert_eq!(a.len(), 2 * 2 * 2 * 2);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!((x.seed, x.n, x.rep, x.value), (y.seed, y.n, y.rep, y.value));
    }
    assert!(analysis::speedups(&a).iter().all(|s| s.values_agree));
    let csv = analysis::bench::to_csv(&a);
    assert!(csv.starts_with("algorithm,statistic,n,p,rep,seed,seconds,value_num,value_den\n"));
    assert_eq!(csv.lines().count(), 1 + a.len());
}

proptest! {
    #[test]
    fn pearson_is_affine_invariant(
        rows in proptest::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 3..40),
        scale in 1e-3f64..1e3,
        shift in -1e3f64..1e3,
    ) {
        let (x, y): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
        let moved: Vec<f64> = x.iter().map(|v| scale * v + shift).collect();
        match (analysis::pearson(&x, &y), analysis::pearson(&moved, &y)) {
            (Some(a), Some(b)) => prop_assert!((a - b).abs() < 1e-12, "{} vs {}", a, b),
            (None, None) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }
}
