//! Randomized and exhaustive invariants of the curve model: crossing
//! symmetry, rotation equivariance, lift/projection round trips, and
//! the mesh condition on the translation quivers.

use proptest::prelude::*;
use syzygy::fixtures;
use syzygy::geom::{arc_quiver, diag_quiver, project, Arc, Diag, Projected, Sign};
use syzygy::quiver::Quiver;

fn diags() -> impl Strategy<Value = (Diag, Diag)> {
    (3u32..=9).prop_flat_map(|n| {
        let all = Diag::all(n);
        let len = all.len();
        (Just(all), 0..len, 0..len).prop_map(|(all, i, j)| (all[i], all[j]))
    })
}

fn arcs() -> impl Strategy<Value = (Arc, Arc)> {
    (0usize..5).prop_flat_map(|i| {
        let all = Arc::all([5u32, 7, 9, 11, 13][i]);
        let len = all.len();
        (Just(all), 0..len, 0..len).prop_map(|(all, i, j)| (all[i], all[j]))
    })
}

proptest! {
    #[test]
    fn diagonal_crossings_are_antisymmetric((g, d) in diags()) {
        if g == d {
            prop_assert_eq!(g.crossing(&d), 0);
        } else {
            prop_assert!(g.crossing(&d) + d.crossing(&g) <= 1);
        }
    }

    #[test]
    fn diagonal_crossings_are_rotation_invariant((g, d) in diags(), k in -20i64..=20) {
        prop_assert_eq!(g.rotate(k).crossing(&d.rotate(k)), g.crossing(&d));
    }

    #[test]
    fn full_rotation_fixes_every_diagonal((g, _) in diags()) {
        prop_assert_eq!(g.rotate(2 * i64::from(g.polygon_half())), g);
        let mut cur = g;
        for _ in 0..2 * g.polygon_half() {
            cur = cur.syzygy();
        }
        prop_assert_eq!(cur, g);
    }

    #[test]
    fn double_syzygy_inverts_tau_on_diagonals((g, _) in diags()) {
        prop_assert_eq!(g.tau().syzygy().syzygy(), g);
        prop_assert_eq!(g.syzygy().syzygy().tau(), g);
    }

    #[test]
    fn arc_crossing_pairs_sum_to_at_most_two((a, b) in arcs()) {
        if a == b {
            prop_assert_eq!(a.crossing(&b), 0);
        } else {
            let sum = a.crossing(&b) + b.crossing(&a);
            prop_assert!(sum <= 2);
            if sum == 2 {
                prop_assert!(!a.is_loop() && !b.is_loop());
            }
        }
    }

    #[test]
    fn arc_crossings_are_rotation_invariant((a, b) in arcs(), k in -20i64..=20) {
        prop_assert_eq!(a.rotate(k).crossing(&b.rotate(k)), a.crossing(&b));
    }

    #[test]
    fn double_full_rotation_fixes_every_arc((a, _) in arcs()) {
        prop_assert_eq!(a.rotate(2 * i64::from(a.marked_points())), a);
    }

    #[test]
    fn double_syzygy_inverts_tau_on_arcs((a, _) in arcs()) {
        prop_assert_eq!(a.tau().syzygy().syzygy(), a);
        prop_assert_eq!(a.syzygy().syzygy().tau(), a);
    }

    #[test]
    fn projection_inverts_the_lift((a, _) in arcs()) {
        match (a, project(&a.lift())) {
            (Arc::Plain { .. }, Projected::Plain(back)) => prop_assert_eq!(back, a),
            (Arc::Loop { foot, .. }, Projected::LoopPair(p, m)) => {
                prop_assert_eq!(p, Arc::signed_loop(a.marked_points(), foot, Sign::Plus).unwrap());
                prop_assert_eq!(m, Arc::signed_loop(a.marked_points(), foot, Sign::Minus).unwrap());
            }
            _ => prop_assert!(false, "projection changed the shape of {:?}", a),
        }
    }
}

#[test]
fn curve_counts_follow_the_closed_forms() {
    for n in 3u32..=9 {
        assert_eq!(Diag::all(n).len() as u32, n * (n - 2), "diagonals at {n}");
    }
    for n in (5u32..=13).step_by(2) {
        assert_eq!(Arc::all(n).len() as u32, n * (n + 1) / 2, "arcs at {n}");
    }
}

#[test]
fn translation_quivers_satisfy_the_mesh_condition() {
    for n in 4u32..=7 {
        let g = diag_quiver(n);
        for &y in g.nodes() {
            let mut pred = g.predecessors(&y);
            let mut succ = g.successors(&y.tau());
            pred.sort();
            succ.sort();
            assert_eq!(pred, succ, "mesh at {y:?} in the {}-gon", 2 * n);
        }
    }
    for n in (5u32..=11).step_by(2) {
        let g = arc_quiver(n);
        for &y in g.nodes() {
            let mut pred = g.predecessors(&y);
            let mut succ = g.successors(&y.tau());
            pred.sort();
            succ.sort();
            assert_eq!(pred, succ, "mesh at {y:?} in the punctured {n}-gon");
        }
    }
}

#[test]
fn text_and_json_round_trips_preserve_every_fixture() {
    for (name, doc) in fixtures::ALL {
        let q = fixtures::parse(doc);
        let text = q.to_text();
        let from_text = Quiver::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(from_text.to_text(), text, "{name}: text round trip");
        let json = q.to_json();
        let from_json = Quiver::parse(&json).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(from_json.to_text(), text, "{name}: json round trip");
    }
}
