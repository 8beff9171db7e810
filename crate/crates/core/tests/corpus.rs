//! Closed-form counts against brute force on a seeded random corpus.

mod common;

use graphclust::census::{self, MOTIFS};
use graphclust::oracle::{self, MotifId};
use graphclust::{clustering, walks::WalkStats, Error, Rational};

#[test]
fn corpus_is_connected_and_covers_the_grid() {
    let graphs = common::corpus();
    assert_eq!(graphs.len(), 300);
    for (k, g) in graphs.iter().enumerate() {
        assert!(g.is_connected());
        assert_eq!(g.n(), common::corpus_params(k).0);
        g.check_invariants().unwrap();
    }
}

#[test]
fn census_matches_brute_force() {
    for (k, g) in common::corpus().iter().enumerate() {
        let fast = census::full_census(g).unwrap();
        let brute = oracle::brute_census(g).unwrap();
        for (b, a) in MOTIFS {
            assert_eq!(
                fast.get(b, a),
                brute.get(b, a),
                "graph {k}: M{a}_{b} differs ({:?})",
                common::corpus_params(k)
            );
        }
        assert_eq!(
            brute.m3_3,
            oracle::brute_motif_count(g, MotifId::STAR3).unwrap()
        );
    }
}

#[test]
fn spanning_tree_denominators_tie_out() {
    for g in common::corpus() {
        let c = census::full_census(&g).unwrap();
        assert_eq!(c.m3_3, oracle::count_b_spanning_trees(&g, 3).unwrap());
        assert_eq!(c.m11_4 + c.m13_4, oracle::count_b_spanning_trees(&g, 4).unwrap());
        assert_eq!(
            c.m75_5 + c.m77_5 + c.m86_5,
            oracle::count_b_spanning_trees(&g, 5).unwrap()
        );
        assert_eq!(c.m63_4, oracle::count_b_cliques(&g, 4).unwrap());
        assert_eq!(c.m1023_5, oracle::count_b_cliques(&g, 5).unwrap());
    }
}

#[test]
fn nesting_inequalities() {
    for g in common::corpus() {
        let c = census::full_census(&g).unwrap();
        assert!(3 * c.m7_3 <= c.m3_3);
        let w = WalkStats::compute(&g).unwrap();
        assert_eq!(w.tr_g3 % 6, 0);
        assert_eq!(w.tr_g3 / 6, c.m7_3);
        assert_eq!(w, WalkStats::dense(&g).unwrap());
    }
}

#[test]
fn analytic_and_general_coefficients_agree_and_are_bounded() {
    for g in common::corpus() {
        for b in 3..=5 {
            let analytic = clustering::c_analytic(&g, b);
            let general = clustering::c_general(&g, b);
            match (&analytic, &general) {
                (Ok(a), Ok(o)) => {
                    assert_eq!(a.value, o.value);
                    assert_eq!(a.clique_count, o.clique_count);
                    assert_eq!(a.spanning_tree_count, o.spanning_tree_count);
                    assert!(a.value <= Rational::from_integer(1));
                    assert_eq!(a.value == Rational::from_integer(0), a.clique_count == 0);
                }
                (Err(Error::UndefinedCoefficient { .. }), Err(Error::UndefinedCoefficient { .. })) => {}
                other => panic!("analytic/general disagree: {other:?}"),
            }
        }
    }
}

#[test]
fn whole_graph_order_equals_matrix_tree() {
    for g in common::corpus().iter().filter(|g| g.n() <= 9) {
        assert_eq!(
            oracle::count_b_spanning_trees(g, g.n()).unwrap(),
            oracle::spanning_tree_count(g).unwrap()
        );
    }
}
