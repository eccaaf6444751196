//! Universal covers of the stable translation quivers and hammock
//! knitting. Stable hom dimensions are knitted in the simply connected
//! cover, then summed over all lifts of the target curve.
//!
//! Cover nodes carry an unreduced tail coordinate `o` (odd integers on
//! the polygon side, even integers on the punctured side) and a row.
//! Every arrow raises the grading `2o + span` by two, and the
//! translation lowers the tail by two.

use std::collections::{BTreeMap, BTreeSet};

use crate::geom::arc::{Arc, Sign};
use crate::geom::diag::Diag;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum KnitError {
    #[error("hammock not extinguished after {0} slices")]
    NotExtinguished(usize),
}

trait MeshNode: Copy + Ord {
    fn predecessors(&self) -> Vec<Self>;
    fn successors(&self) -> Vec<Self>;
    fn translate(&self) -> Self;
}

fn knit<T: MeshNode>(start: T, cap: usize) -> Result<BTreeMap<T, usize>, KnitError> {
    let mut h: BTreeMap<T, usize> = BTreeMap::new();
    h.insert(start, 1);
    let mut active: BTreeSet<T> = BTreeSet::new();
    active.insert(start);
    for _ in 0..cap {
        let mut next: BTreeSet<T> = BTreeSet::new();
        let candidates: BTreeSet<T> = active.iter().flat_map(|z| z.successors()).collect();
        for y in candidates {
            let incoming: usize = y
                .predecessors()
                .iter()
                .map(|z| h.get(z).copied().unwrap_or(0))
                .sum();
            let dropped = h.get(&y.translate()).copied().unwrap_or(0);
            let value = incoming.saturating_sub(dropped);
            if value > 0 {
                h.insert(y, value);
                next.insert(y);
            }
        }
        if next.is_empty() {
            return Ok(h);
        }
        active = next;
    }
    Err(KnitError::NotExtinguished(cap))
}

/// A node of the polygon-side cover: odd tail `o`, odd span row `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoverDiag {
    pub n: u32,
    pub o: i64,
    pub s: u32,
}

impl CoverDiag {
    pub fn project(&self) -> Diag {
        let m = 2 * self.n as i64;
        let tail = ((self.o - 1).rem_euclid(m) + 1) as u32;
        let head = ((self.o + self.s as i64 - 1).rem_euclid(m) + 1) as u32;
        Diag::new(self.n, tail, head).expect("cover node projects")
    }

    pub fn lift(d: &Diag) -> Self {
        CoverDiag {
            n: d.polygon_half(),
            o: d.tail() as i64,
            s: d.span(),
        }
    }
}

impl MeshNode for CoverDiag {
    fn predecessors(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.s >= 5 {
            out.push(CoverDiag { s: self.s - 2, ..*self });
        }
        if self.s + 2 <= 2 * self.n - 3 {
            out.push(CoverDiag {
                o: self.o - 2,
                s: self.s + 2,
                ..*self
            });
        }
        out
    }

    fn successors(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.s + 2 <= 2 * self.n - 3 {
            out.push(CoverDiag { s: self.s + 2, ..*self });
        }
        if self.s >= 5 {
            out.push(CoverDiag {
                o: self.o + 2,
                s: self.s - 2,
                ..*self
            });
        }
        out
    }

    fn translate(&self) -> Self {
        CoverDiag { o: self.o - 2, ..*self }
    }
}

/// A node of the punctured-side cover: even tail `o`, and either a
/// plain row of odd span below the puncture or one of the two fork
/// rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverArc {
    Plain { n: u32, o: i64, s: u32 },
    Fork { n: u32, o: i64, sign: Sign },
}

impl CoverArc {
    pub fn project(&self) -> Arc {
        match *self {
            CoverArc::Plain { n, o, s } => {
                let m = n as i64;
                let tail = ((o - 1).rem_euclid(m) + 1) as u32;
                let head = ((o + s as i64 - 1).rem_euclid(m) + 1) as u32;
                Arc::plain(n, tail, head).expect("cover node projects")
            }
            CoverArc::Fork { n, o, sign } => {
                let foot = ((o - 1).rem_euclid(n as i64) + 1) as u32;
                Arc::signed_loop(n, foot, sign).expect("cover node projects")
            }
        }
    }

    pub fn lift(a: &Arc) -> Self {
        let even = |v: u32, n: u32| -> i64 {
            if v.is_multiple_of(2) {
                v as i64
            } else {
                (v + n) as i64
            }
        };
        match *a {
            Arc::Plain { n, tail, head } => CoverArc::Plain {
                n,
                o: even(tail, n),
                s: (head + n - tail) % n,
            },
            Arc::Loop { n, foot, sign } => CoverArc::Fork {
                n,
                o: even(foot, n),
                sign,
            },
        }
    }
}

impl MeshNode for CoverArc {
    fn predecessors(&self) -> Vec<Self> {
        match *self {
            CoverArc::Plain { n, o, s } => {
                let mut out = Vec::new();
                if s >= 5 {
                    out.push(CoverArc::Plain { n, o, s: s - 2 });
                }
                if s + 2 <= n - 2 {
                    out.push(CoverArc::Plain {
                        n,
                        o: o - 2,
                        s: s + 2,
                    });
                } else {
                    out.push(CoverArc::Fork {
                        n,
                        o: o - 2,
                        sign: Sign::Plus,
                    });
                    out.push(CoverArc::Fork {
                        n,
                        o: o - 2,
                        sign: Sign::Minus,
                    });
                }
                out
            }
            CoverArc::Fork { n, o, .. } => vec![CoverArc::Plain { n, o, s: n - 2 }],
        }
    }

    fn successors(&self) -> Vec<Self> {
        match *self {
            CoverArc::Plain { n, o, s } => {
                let mut out = Vec::new();
                if s + 2 <= n - 2 {
                    out.push(CoverArc::Plain { n, o, s: s + 2 });
                } else {
                    out.push(CoverArc::Fork {
                        n,
                        o,
                        sign: Sign::Plus,
                    });
                    out.push(CoverArc::Fork {
                        n,
                        o,
                        sign: Sign::Minus,
                    });
                }
                if s >= 5 {
                    out.push(CoverArc::Plain {
                        n,
                        o: o + 2,
                        s: s - 2,
                    });
                }
                out
            }
            CoverArc::Fork { n, o, .. } => vec![CoverArc::Plain {
                n,
                o: o + 2,
                s: n - 2,
            }],
        }
    }

    fn translate(&self) -> Self {
        match *self {
            CoverArc::Plain { n, o, s } => CoverArc::Plain { n, o: o - 2, s },
            CoverArc::Fork { n, o, sign } => CoverArc::Fork { n, o: o - 2, sign },
        }
    }
}

fn cap_for(n: u32) -> usize {
    16 * n as usize + 16
}

/// The hammock of the polygon-side cover knitted from the canonical
/// lift of `x`: positive counts only.
pub fn hammock_diag(x: &Diag) -> Result<BTreeMap<CoverDiag, usize>, KnitError> {
    knit(CoverDiag::lift(x), cap_for(x.polygon_half()))
}

/// The hammock of the punctured-side cover knitted from the canonical
/// lift of `x`: positive counts only.
pub fn hammock_arc(x: &Arc) -> Result<BTreeMap<CoverArc, usize>, KnitError> {
    knit(CoverArc::lift(x), cap_for(x.marked_points()))
}

/// Stable hom dimensions out of `x`, as a table over the diagonals
/// hit by the hammock: entry at `y` sums the counts of all lifts of
/// `y`.
pub fn stable_hom_diag(x: &Diag) -> Result<BTreeMap<Diag, usize>, KnitError> {
    let mut out = BTreeMap::new();
    for (node, v) in hammock_diag(x)? {
        *out.entry(node.project()).or_insert(0) += v;
    }
    Ok(out)
}

/// Stable hom dimensions out of `x`, as a table over arcs.
pub fn stable_hom_arc(x: &Arc) -> Result<BTreeMap<Arc, usize>, KnitError> {
    let mut out = BTreeMap::new();
    for (node, v) in hammock_arc(x)? {
        *out.entry(node.project()).or_insert(0) += v;
    }
    Ok(out)
}

/// The stable hom dimension from `x` to `y` on the polygon side.
pub fn mesh_hom_dim_diag(x: &Diag, y: &Diag) -> Result<usize, KnitError> {
    Ok(stable_hom_diag(x)?.get(y).copied().unwrap_or(0))
}

/// The stable hom dimension from `x` to `y` on the punctured side.
pub fn mesh_hom_dim_arc(x: &Arc, y: &Arc) -> Result<usize, KnitError> {
    Ok(stable_hom_arc(x)?.get(y).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_moves_project_onto_pivot_moves() {
        use crate::geom::arquiver::{arc_moves, diag_moves};
        for d in Diag::all(7) {
            let node = CoverDiag::lift(&d);
            assert_eq!(node.project(), d);
            let mut projected: Vec<Diag> =
                node.successors().iter().map(|m| m.project()).collect();
            projected.sort();
            let mut expected = diag_moves(&d);
            expected.sort();
            assert_eq!(projected, expected, "at {d}");
        }
        for a in Arc::all(9) {
            let node = CoverArc::lift(&a);
            assert_eq!(node.project(), a);
            let mut projected: Vec<Arc> =
                node.successors().iter().map(|m| m.project()).collect();
            projected.sort();
            let mut expected = arc_moves(&a);
            expected.sort();
            assert_eq!(projected, expected, "at {a}");
        }
    }

    #[test]
    fn successor_and_predecessor_agree() {
        for d in Diag::all(7) {
            let node = CoverDiag::lift(&d);
            for s in node.successors() {
                assert!(s.predecessors().contains(&node));
            }
            for p in node.predecessors() {
                assert!(p.successors().contains(&node));
            }
        }
        for a in Arc::all(9) {
            let node = CoverArc::lift(&a);
            for s in node.successors() {
                assert!(s.predecessors().contains(&node));
            }
            for p in node.predecessors() {
                assert!(p.successors().contains(&node));
            }
        }
    }

    #[test]
    fn narrow_diagonal_hammock_is_a_single_ray() {
        let x = Diag::new(7, 5, 8).unwrap();
        let table = stable_hom_diag(&x).unwrap();
        let expect: BTreeMap<Diag, usize> = [(5, 8), (5, 10), (5, 12), (5, 14), (5, 2)]
            .iter()
            .map(|&(a, b)| (Diag::new(7, a, b).unwrap(), 1))
            .collect();
        assert_eq!(table, expect);
    }

    #[test]
    fn loop_hammock_matches_hand_knit() {
        let x = Arc::parse(7, "(3,3)+").unwrap();
        let table = stable_hom_arc(&x).unwrap();
        let expect: BTreeMap<Arc, usize> =
            ["(3,3)+", "(5,3)", "(5,5)-", "(7,3)", "(7,5)", "(7,7)+"]
                .iter()
                .map(|s| (Arc::parse(7, s).unwrap(), 1))
                .collect();
        assert_eq!(table, expect);
    }

    #[test]
    fn knitting_extinguishes_everywhere() {
        for d in Diag::all(7) {
            assert!(stable_hom_diag(&d).is_ok(), "at {d}");
        }
        for a in Arc::all(7) {
            assert!(stable_hom_arc(&a).is_ok(), "at {a}");
        }
        for a in Arc::all(9) {
            assert!(stable_hom_arc(&a).is_ok(), "at {a}");
        }
    }

    #[test]
    fn hammocks_are_translation_equivariant() {
        let x = Diag::new(7, 3, 10).unwrap();
        let base = stable_hom_diag(&x).unwrap();
        let shifted = stable_hom_diag(&x.tau()).unwrap();
        let mapped: BTreeMap<Diag, usize> =
            base.iter().map(|(d, &v)| (d.tau(), v)).collect();
        assert_eq!(shifted, mapped);

        let y = Arc::parse(9, "(2,2)-").unwrap();
        let base = stable_hom_arc(&y).unwrap();
        let shifted = stable_hom_arc(&y.tau()).unwrap();
        let mapped: BTreeMap<Arc, usize> =
            base.iter().map(|(a, &v)| (a.tau(), v)).collect();
        assert_eq!(shifted, mapped);
    }
}
