//! Cross-checks between the punctured-polygon crossing rules and the
//! branched double cover, plus an independent annulus model.
//!
//! The annulus model counts unsigned crossings directly: curves lift to
//! intervals on the line (plain arcs by their span, puncture loops by a
//! full half-period), and two curves cross once for every translate of
//! one interval that interleaves the other. No polygon lifts and no
//! sign bookkeeping enter, so agreement with the directed crossing
//! tables is a genuine two-route check.

use crate::geom::arc::Arc;
use crate::geom::diag::Diag;

/// Unsigned geometric crossing number of the underlying curves in the
/// punctured polygon, via interval interleaving in the annulus cover.
/// Loop signs are ignored; identical underlying curves count zero.
pub fn annulus_crossing(a: &Arc, b: &Arc) -> u32 {
    let n = a.marked_points() as i64;
    let ends = |x: &Arc| -> (i64, i64) {
        match *x {
            Arc::Plain { tail, head, .. } => {
                let t = tail as i64;
                let s = (head as i64 - t).rem_euclid(n);
                (t, t + s)
            }
            Arc::Loop { foot, .. } => (foot as i64, foot as i64 + n),
        }
    };
    let (a0, a1) = ends(a);
    let (b0, b1) = ends(b);
    let mut total = 0;
    for k in -2..=2i64 {
        let lo = b0 + k * n;
        let hi = b1 + k * n;
        if lo == a0 || lo == a1 || hi == a0 || hi == a1 {
            continue;
        }
        let inside = |x: i64| a0 < x && x < a1;
        if inside(lo) != inside(hi) {
            total += 1;
        }
    }
    total
}

/// The tag orbit of an arc: a plain arc alone, a loop together with
/// its opposite sign.
pub fn tag_orbit(a: &Arc) -> Vec<Arc> {
    match *a {
        Arc::Plain { .. } => vec![*a],
        Arc::Loop { n, foot, sign } => vec![
            Arc::signed_loop(n, foot, sign).expect("loop"),
            Arc::signed_loop(n, foot, sign.flip()).expect("loop"),
        ],
    }
}

/// Directed crossings summed over both tag orbits and both directions.
pub fn orbit_crossing_sum(a: &Arc, b: &Arc) -> u32 {
    let mut total = 0u32;
    for u in tag_orbit(a) {
        for v in tag_orbit(b) {
            total += u32::from(u.crossing(&v)) + u32::from(v.crossing(&u));
        }
    }
    total
}

fn untagged_eq(a: &Arc, b: &Arc) -> bool {
    match (a, b) {
        (Arc::Plain { .. }, Arc::Plain { .. }) => a == b,
        (
            Arc::Loop { foot: f, .. },
            Arc::Loop { foot: g, .. },
        ) => f == g,
        _ => false,
    }
}

/// Verifies, for every pair of curves of the punctured `n`-gon, the
/// relations tying directed crossings to the branched double cover and
/// to the annulus model. Returns human-readable failures; an empty
/// vector means every relation holds.
pub fn verify_branched_cover(n: u32) -> Vec<String> {
    let mut failures = Vec::new();
    let arcs = Arc::all(n);
    let diags = Diag::all(n);

    for g in &diags {
        for d in &diags {
            let by_target = g.crossing(d) as u32 + g.crossing(&d.half_turn()) as u32;
            let by_source = g.crossing(d) as u32 + g.half_turn().crossing(d) as u32;
            if by_target != by_source {
                failures.push(format!(
                    "orbit sums over lifts differ at {g}, {d}: {by_target} vs {by_source}"
                ));
            }
        }
    }

    for a in &arcs {
        for b in &arcs {
            if a == b {
                continue;
            }
            let observed = a.crossing(b) as u32;
            let expected = match (a.is_loop(), b.is_loop()) {
                (false, false) => {
                    let (ga, gb) = (a.lift(), b.lift());
                    ga.crossing(&gb) as u32 + ga.crossing(&gb.half_turn()) as u32
                }
                (false, true) | (true, false) => a.lift().crossing(&b.lift()) as u32,
                (true, true) => {
                    if untagged_eq(a, b) {
                        0
                    } else {
                        continue;
                    }
                }
            };
            if observed != expected {
                failures.push(format!(
                    "lift formula fails at {a}, {b}: {observed} vs {expected}"
                ));
            }
        }
    }

    for a in &arcs {
        for b in &arcs {
            if !a.is_loop() || !b.is_loop() || untagged_eq(a, b) {
                continue;
            }
            let over_targets: u32 = tag_orbit(b).iter().map(|v| a.crossing(v) as u32).sum();
            let lifted = a.lift().crossing(&b.lift()) as u32;
            if over_targets != lifted {
                failures.push(format!(
                    "loop orbit sum fails at {a}, {b}: {over_targets} vs {lifted}"
                ));
            }
            let flipped = match (a, b) {
                (Arc::Loop { foot: f, sign: s, .. }, Arc::Loop { foot: g, sign: t, .. }) => {
                    let fa = Arc::signed_loop(n, *f, s.flip()).expect("loop");
                    let fb = Arc::signed_loop(n, *g, t.flip()).expect("loop");
                    fa.crossing(&fb)
                }
                _ => unreachable!("both are loops"),
            };
            if a.crossing(b) != flipped {
                failures.push(format!("global sign flip breaks crossing at {a}, {b}"));
            }
        }
    }

    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i..] {
            if untagged_eq(a, b) && !a.is_loop() {
                continue;
            }
            if untagged_eq(a, b) {
                if annulus_crossing(a, b) != 0 {
                    failures.push(format!("same-foot loops cross in annulus model at {a}"));
                }
                continue;
            }
            let geometric = annulus_crossing(a, b);
            let directed = orbit_crossing_sum(a, b);
            if geometric != directed {
                failures.push(format!(
                    "annulus model disagrees at {a}, {b}: geometric {geometric}, directed {directed}"
                ));
            }
        }
    }

    for a in &arcs {
        for b in &arcs {
            let e = a.crossing(b);
            if e > 2 {
                failures.push(format!("crossing above two at {a}, {b}"));
            }
            if e == 2 && (a.is_loop() || b.is_loop()) {
                failures.push(format!("double crossing involves a loop at {a}, {b}"));
            }
        }
    }

    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_for_small_polygons() {
        for n in [3, 5, 7, 9, 11] {
            let failures = verify_branched_cover(n);
            assert!(failures.is_empty(), "n={n}: {failures:?}");
        }
    }

    #[test]
    fn annulus_counts_match_hand_examples() {
        let arc = |s: &str| Arc::parse(7, s).unwrap();
        assert_eq!(annulus_crossing(&arc("(1,6)"), &arc("(4,2)")), 2);
        assert_eq!(annulus_crossing(&arc("(1,4)"), &arc("(2,5)")), 1);
        assert_eq!(annulus_crossing(&arc("(1,4)"), &arc("(3,3)+")), 2);
        assert_eq!(annulus_crossing(&arc("(3,3)+"), &arc("(1,4)")), 2);
        assert_eq!(annulus_crossing(&arc("(3,3)+"), &arc("(6,6)-")), 2);
        assert_eq!(annulus_crossing(&arc("(3,3)+"), &arc("(3,3)-")), 0);
        assert_eq!(annulus_crossing(&arc("(1,4)"), &arc("(4,7)")), 0);
    }

    #[test]
    fn orbit_sums_match_hand_examples() {
        let arc = |s: &str| Arc::parse(7, s).unwrap();
        assert_eq!(orbit_crossing_sum(&arc("(1,6)"), &arc("(4,2)")), 2);
        assert_eq!(orbit_crossing_sum(&arc("(3,3)+"), &arc("(1,4)")), 2);
        assert_eq!(orbit_crossing_sum(&arc("(3,3)+"), &arc("(6,6)-")), 2);
    }
}
