//! Stable translation quivers on curves: nodes are diagonals (resp.
//! arcs), arrows are single-endpoint pivots by one step of matching
//! parity, and the translation is the double clockwise rotation.

use std::collections::BTreeMap;

use crate::geom::arc::{Arc, Sign};
use crate::geom::diag::Diag;

/// A finite quiver on copyable node values with a translation.
#[derive(Debug, Clone)]
pub struct TransQuiver<T> {
    nodes: Vec<T>,
    index: BTreeMap<T, usize>,
    arrows: Vec<(usize, usize)>,
}

impl<T: Ord + Copy> TransQuiver<T> {
    fn build(mut nodes: Vec<T>, moves: impl Fn(&T) -> Vec<T>) -> Self {
        nodes.sort();
        let index: BTreeMap<T, usize> = nodes.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut arrows = Vec::new();
        for (i, t) in nodes.iter().enumerate() {
            for succ in moves(t) {
                arrows.push((i, index[&succ]));
            }
        }
        arrows.sort_unstable();
        TransQuiver {
            nodes,
            index,
            arrows,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn arrows(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.arrows
            .iter()
            .map(move |&(a, b)| (self.nodes[a], self.nodes[b]))
    }

    pub fn contains(&self, t: &T) -> bool {
        self.index.contains_key(t)
    }

    pub fn successors(&self, t: &T) -> Vec<T> {
        let Some(&i) = self.index.get(t) else {
            return Vec::new();
        };
        self.arrows
            .iter()
            .filter(|&&(a, _)| a == i)
            .map(|&(_, b)| self.nodes[b])
            .collect()
    }

    pub fn predecessors(&self, t: &T) -> Vec<T> {
        let Some(&i) = self.index.get(t) else {
            return Vec::new();
        };
        self.arrows
            .iter()
            .filter(|&&(_, b)| b == i)
            .map(|&(a, _)| self.nodes[a])
            .collect()
    }

    /// Partitions the nodes into orbits of the given translation. Orbits
    /// are listed by their smallest member and start there.
    pub fn orbits(&self, step: impl Fn(&T) -> T) -> Vec<Vec<T>> {
        let mut seen = BTreeMap::new();
        let mut orbits = Vec::new();
        for &start in &self.nodes {
            if seen.contains_key(&start) {
                continue;
            }
            let mut orbit = vec![start];
            seen.insert(start, ());
            let mut cur = step(&start);
            while cur != start {
                seen.insert(cur, ());
                orbit.push(cur);
                cur = step(&cur);
            }
            orbits.push(orbit);
        }
        orbits
    }
}

fn step2(m: u32, v: u32) -> u32 {
    (v + 1) % m + 1
}

/// Pivot moves of a polygon diagonal: advance the head by one even step
/// while the span stays below its maximum, or advance the tail by one
/// odd step while the span stays above its minimum.
pub fn diag_moves(d: &Diag) -> Vec<Diag> {
    let n = d.polygon_half();
    let mut out = Vec::new();
    if d.span() + 2 <= 2 * n - 3 {
        out.push(Diag::new(n, d.tail(), step2(2 * n, d.head())).expect("pivot head"));
    }
    if d.span() >= 5 {
        out.push(Diag::new(n, step2(2 * n, d.tail()), d.head()).expect("pivot tail"));
    }
    out
}

/// Pivot moves of a punctured-polygon arc: plain arcs advance the head
/// (splitting into the two signed loops at their tail once the span
/// would reach the puncture) or advance the tail; loops re-emerge as the
/// widest plain arc ending at their foot.
pub fn arc_moves(a: &Arc) -> Vec<Arc> {
    let n = a.marked_points();
    match *a {
        Arc::Plain { tail, head, .. } => {
            let span = (head + n - tail) % n;
            let mut out = Vec::new();
            if span + 2 <= n - 2 {
                out.push(Arc::plain(n, tail, step2(n, head)).expect("pivot head"));
            } else {
                out.push(Arc::signed_loop(n, tail, Sign::Plus).expect("fork"));
                out.push(Arc::signed_loop(n, tail, Sign::Minus).expect("fork"));
            }
            if span >= 5 {
                out.push(Arc::plain(n, step2(n, tail), head).expect("pivot tail"));
            }
            out
        }
        Arc::Loop { foot, .. } => {
            vec![Arc::plain(n, step2(n, foot), foot).expect("unfork")]
        }
    }
}

/// The stable translation quiver on all diagonals of the `2n`-gon.
pub fn diag_quiver(n: u32) -> TransQuiver<Diag> {
    TransQuiver::build(Diag::all(n), diag_moves)
}

/// The stable translation quiver on all arcs of the punctured `n`-gon.
pub fn arc_quiver(n: u32) -> TransQuiver<Arc> {
    TransQuiver::build(Arc::all(n), arc_moves)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_quiver_counts() {
        let g = diag_quiver(7);
        assert_eq!(g.node_count(), 35);
        assert_eq!(g.arrow_count(), 56);
        let orbits = g.orbits(|d| d.tau());
        assert_eq!(orbits.len(), 5);
        assert!(orbits.iter().all(|o| o.len() == 7));
    }

    #[test]
    fn arc_quiver_counts() {
        let g = arc_quiver(7);
        assert_eq!(g.node_count(), 28);
        assert_eq!(g.arrow_count(), 42);
        let orbits = g.orbits(|a| a.tau());
        assert_eq!(orbits.len(), 4);
        assert!(orbits.iter().all(|o| o.len() == 7));

        let g9 = arc_quiver(9);
        assert_eq!(g9.node_count(), 45);
        assert_eq!(g9.arrow_count(), 72);
        let orbits9 = g9.orbits(|a| a.tau());
        assert_eq!(orbits9.len(), 5);
        assert!(orbits9.iter().all(|o| o.len() == 9));
    }

    #[test]
    fn arc_pivots_match_reference_moves() {
        let n = 7;
        let g = arc_quiver(n);
        let arc = |s: &str| Arc::parse(n, s).unwrap();

        assert_eq!(g.successors(&arc("(1,4)")), vec![arc("(1,6)")]);
        let mut from_widest = g.successors(&arc("(1,6)"));
        from_widest.sort();
        assert_eq!(
            from_widest,
            vec![arc("(3,6)"), arc("(1,1)+"), arc("(1,1)-")]
        );
        assert_eq!(g.successors(&arc("(6,6)+")), vec![arc("(1,6)")]);
        assert_eq!(g.successors(&arc("(6,6)-")), vec![arc("(1,6)")]);
    }

    #[test]
    fn translations_are_quiver_automorphisms() {
        let g = diag_quiver(7);
        for (a, b) in g.arrows() {
            let moved = diag_moves(&a.tau());
            assert!(moved.contains(&b.tau()), "tau breaks {a} -> {b}");
        }
        let h = arc_quiver(9);
        for (a, b) in h.arrows() {
            let moved = arc_moves(&a.tau());
            assert!(moved.contains(&b.tau()), "tau breaks {a} -> {b}");
        }
    }

    #[test]
    fn mesh_predecessors_of_widest_plain_arc() {
        let g = arc_quiver(7);
        let arc = |s: &str| Arc::parse(7, s).unwrap();
        let mut preds = g.predecessors(&arc("(3,1)"));
        preds.sort();
        assert_eq!(
            preds,
            vec![arc("(3,6)"), arc("(1,1)+"), arc("(1,1)-")],
        );
    }
}
