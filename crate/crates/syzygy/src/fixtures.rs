//! Built-in quiver documents and reference radical configurations.
//!
//! These are the standard inputs exercised by the test suite and the
//! command-line fixtures runner: two dimer tree halves with their glue
//! arrow `alpha`, a pair of glued triangles, a quiver whose dual graph
//! contains a ring (so validation must reject it), and three quivers
//! whose Jacobian algebras have exceptional syzygy type. The larger
//! quivers carry their potential explicitly; dimer trees get the
//! canonical alternating potential at use time.

use crate::quiver::Quiver;

/// Five-vertex dimer tree half with boundary glue arrow `alpha`.
pub const HALF_FIVE: &str = "\
quiver half-five
vertices: 1 2 3 4 5
arrow a43: 4 -> 3
arrow a31: 3 -> 1
arrow a35: 3 -> 5
arrow a52: 5 -> 2
arrow a14: 1 -> 4
arrow alpha: 1 -> 2
arrow a23: 2 -> 3
";

/// Seven-vertex dimer tree half with boundary glue arrow `alpha`.
pub const HALF_SEVEN: &str = "\
quiver half-seven
vertices: 1 2 3 4 5 6 7
arrow a74: 7 -> 4
arrow a41: 4 -> 1
arrow a34: 3 -> 4
arrow a35: 3 -> 5
arrow a52: 5 -> 2
arrow a65: 6 -> 5
arrow a17: 1 -> 7
arrow alpha: 1 -> 2
arrow a23: 2 -> 3
arrow a26: 2 -> 6
";

/// Two triangles sharing the interior arrow `s`: the smallest glued
/// dimer tree, with twin vertices `c` and `d`.
pub const TRIANGLE_PAIR: &str = "\
quiver triangle-pair
vertices: a b c d
arrow s: a -> b
arrow bc: b -> c
arrow ca: c -> a
arrow bd: b -> d
arrow da: d -> a
";

/// The skew quiver of `half-seven` along `alpha`, spelled out for
/// comparison against the derived one.
pub const SKEW_SEVEN: &str = "\
quiver skew-seven
vertices: 1+ 1- 2+ 2- 3 4 5 6 7
arrow a74: 7 -> 4
arrow a41+: 4 -> 1+
arrow a41-: 4 -> 1-
arrow a34: 3 -> 4
arrow a35: 3 -> 5
arrow a52+: 5 -> 2+
arrow a52-: 5 -> 2-
arrow a65: 6 -> 5
arrow a17+: 1+ -> 7
arrow a17-: 1- -> 7
arrow alpha+: 1+ -> 2+
arrow alpha-: 1- -> 2-
arrow a23+: 2+ -> 3
arrow a23-: 2- -> 3
arrow a26+: 2+ -> 6
arrow a26-: 2- -> 6
";

/// Nine-vertex quiver whose dual graph contains a ring of four cycles,
/// so it is not a dimer tree; its Jacobian algebra still has a
/// well-behaved syzygy category. Potential: sum of all chordless
/// cycles.
pub const RING_NINE: &str = "\
quiver ring-nine
vertices: 1 2 3 4 5 6 7 8 9
arrow a56: 5 -> 6
arrow a61: 6 -> 1
arrow a23: 2 -> 3
arrow a25: 2 -> 5
arrow a12: 1 -> 2
arrow a17: 1 -> 7
arrow a42: 4 -> 2
arrow a76: 7 -> 6
arrow a78: 7 -> 8
arrow a34: 3 -> 4
arrow a31: 3 -> 1
arrow a89: 8 -> 9
arrow a93: 9 -> 3
potential:
+ a12 a25 a56 a61
+ a12 a23 a31
+ a23 a34 a42
+ a17 a76 a61
+ a17 a78 a89 a93 a31
";

/// Eight-vertex quiver with five triangles and one square around a
/// ring; its Jacobian algebra has syzygy type E6. Potential: sum of
/// all chordless cycles.
pub const E_SIX: &str = "\
quiver e6
vertices: 1 2 3 4 5 6 7 8
arrow a6_4: 6 -> 4
arrow a6_7: 6 -> 7
arrow a7_3: 7 -> 3
arrow a8_7: 8 -> 7
arrow a4_3: 4 -> 3
arrow a3_1: 3 -> 1
arrow a3_6: 3 -> 6
arrow a3_5: 3 -> 5
arrow a5_2: 5 -> 2
arrow a5_8: 5 -> 8
arrow a1_4: 1 -> 4
arrow a1_2: 1 -> 2
arrow a2_3: 2 -> 3
potential:
+ a1_4 a4_3 a3_1
+ a3_6 a6_4 a4_3
+ a6_7 a7_3 a3_6
+ a1_2 a2_3 a3_1
+ a3_5 a5_2 a2_3
+ a5_8 a8_7 a7_3 a3_5
";

/// Nine-vertex variant of `e6` whose long cycle has length five;
/// syzygy type E7.
pub const E_SEVEN: &str = "\
quiver e7
vertices: 1 2 3 4 5 6 7 8 9
arrow a6_4: 6 -> 4
arrow a6_7: 6 -> 7
arrow a7_3: 7 -> 3
arrow a8_7: 8 -> 7
arrow a9_8: 9 -> 8
arrow a4_3: 4 -> 3
arrow a3_1: 3 -> 1
arrow a3_6: 3 -> 6
arrow a3_5: 3 -> 5
arrow a5_2: 5 -> 2
arrow a5_9: 5 -> 9
arrow a1_4: 1 -> 4
arrow a1_2: 1 -> 2
arrow a2_3: 2 -> 3
potential:
+ a1_4 a4_3 a3_1
+ a3_6 a6_4 a4_3
+ a6_7 a7_3 a3_6
+ a1_2 a2_3 a3_1
+ a3_5 a5_2 a2_3
+ a5_9 a9_8 a8_7 a7_3 a3_5
";

/// Ten-vertex variant of `e6` whose long cycle has length six;
/// syzygy type E8.
pub const E_EIGHT: &str = "\
quiver e8
vertices: 1 2 3 4 5 6 7 8 9 10
arrow a6_4: 6 -> 4
arrow a6_7: 6 -> 7
arrow a7_3: 7 -> 3
arrow a8_7: 8 -> 7
arrow a9_8: 9 -> 8
arrow a10_9: 10 -> 9
arrow a4_3: 4 -> 3
arrow a3_1: 3 -> 1
arrow a3_6: 3 -> 6
arrow a3_5: 3 -> 5
arrow a5_2: 5 -> 2
arrow a5_10: 5 -> 10
arrow a1_4: 1 -> 4
arrow a1_2: 1 -> 2
arrow a2_3: 2 -> 3
potential:
+ a1_4 a4_3 a3_1
+ a3_6 a6_4 a4_3
+ a6_7 a7_3 a3_6
+ a1_2 a2_3 a3_1
+ a3_5 a5_2 a2_3
+ a5_10 a10_9 a9_8 a8_7 a7_3 a3_5
";

/// Reference radical configuration for the glued `half-five` in the
/// 14-gon: one 2-diagonal per vertex.
pub const CONFIG_GLUED_FIVE: &[(&str, (u32, u32))] = &[
    ("1", (3, 10)),
    ("2", (6, 13)),
    ("3", (2, 7)),
    ("4", (1, 4)),
    ("5", (5, 8)),
    ("3p", (9, 14)),
    ("4p", (8, 11)),
    ("5p", (12, 1)),
];

/// Reference radical configuration for the skew `half-five` in the
/// punctured 7-gon: plain arcs and signed loops.
pub const CONFIG_SKEW_FIVE: &[(&str, &str)] = &[
    ("1+", "(3,3)+"),
    ("1-", "(3,3)-"),
    ("2+", "(6,6)-"),
    ("2-", "(6,6)+"),
    ("3", "(2,7)"),
    ("4", "(1,4)"),
    ("5", "(5,1)"),
];

/// Every built-in document, named, in a fixed order.
pub const ALL: &[(&str, &str)] = &[
    ("half-five", HALF_FIVE),
    ("half-seven", HALF_SEVEN),
    ("triangle-pair", TRIANGLE_PAIR),
    ("skew-seven", SKEW_SEVEN),
    ("ring-nine", RING_NINE),
    ("e6", E_SIX),
    ("e7", E_SEVEN),
    ("e8", E_EIGHT),
];

/// Parses a built-in document; they are verified by the test suite.
pub fn parse(doc: &str) -> Quiver {
    Quiver::parse(doc).expect("built-in fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{validate, CycleData, Violation};
    use crate::potential::uniform_potential;

    #[test]
    fn all_fixtures_parse() {
        for (name, doc) in ALL {
            let q = parse(doc);
            assert_eq!(&q.name, name);
        }
    }

    #[test]
    fn halves_and_triangle_pair_are_dimer_trees() {
        for doc in [HALF_FIVE, HALF_SEVEN, TRIANGLE_PAIR] {
            assert!(validate(&parse(doc)).is_dimer_tree());
        }
    }

    #[test]
    fn ring_nine_fails_the_dual_tree_check() {
        let report = validate(&parse(RING_NINE));
        assert!(!report.is_dimer_tree());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DualGraphNotTree { .. })));
    }

    #[test]
    fn exceptional_quivers_fail_the_dual_tree_check() {
        for doc in [E_SIX, E_SEVEN, E_EIGHT] {
            let report = validate(&parse(doc));
            assert!(!report.is_dimer_tree());
        }
    }

    #[test]
    fn embedded_potentials_sum_all_chordless_cycles() {
        for doc in [RING_NINE, E_SIX, E_SEVEN, E_EIGHT] {
            let q = parse(doc);
            let data = CycleData::new(&q);
            let expected = uniform_potential(&data);
            assert_eq!(q.potential.as_ref(), Some(&expected), "in {}", q.name);
        }
    }
}
