//! Chordless cycle enumeration, the dual graph, and dimer tree validation.
//!
//! A quiver is accepted as a dimer tree when it is connected, has no
//! parallel arrows, every arrow lies on one or two chordless cycles, and
//! the dual graph (chordless cycles plus boundary arrows as nodes, shared
//! arrows and containment as edges) is a tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::quiver::{canonical_rotation, ArrowIx, Quiver, VertexIx};

/// A chordless directed cycle, stored as its arrow sequence rotated so the
/// lexicographically least arrow id comes first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChordlessCycle {
    pub arrows: Vec<ArrowIx>,
}

impl ChordlessCycle {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn contains_arrow(&self, a: ArrowIx) -> bool {
        self.arrows.contains(&a)
    }

    pub fn vertices(&self, q: &Quiver) -> BTreeSet<VertexIx> {
        self.arrows.iter().map(|&a| q.arrow(a).src).collect()
    }

    /// The arrow of this cycle whose source is the target of `a`.
    pub fn successor_of(&self, q: &Quiver, a: ArrowIx) -> ArrowIx {
        let pos = self
            .arrows
            .iter()
            .position(|&x| x == a)
            .expect("arrow must belong to the cycle");
        let next = self.arrows[(pos + 1) % self.arrows.len()];
        debug_assert_eq!(q.arrow(a).tgt, q.arrow(next).src);
        next
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).id.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Whether an arrow lies on one chordless cycle or two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    Boundary,
    Interior,
}

/// Chordless cycles of a quiver together with the arrow membership table.
#[derive(Debug, Clone)]
pub struct CycleData {
    pub cycles: Vec<ChordlessCycle>,
    membership: Vec<Vec<usize>>,
}

impl CycleData {
    pub fn new(q: &Quiver) -> Self {
        let cycles = chordless_cycles(q);
        let mut membership = vec![Vec::new(); q.arrow_count()];
        for (i, c) in cycles.iter().enumerate() {
            for &a in &c.arrows {
                membership[a.0].push(i);
            }
        }
        CycleData { cycles, membership }
    }

    pub fn cycles_through(&self, a: ArrowIx) -> &[usize] {
        &self.membership[a.0]
    }

    pub fn arrow_kind(&self, a: ArrowIx) -> Option<ArrowKind> {
        match self.membership[a.0].len() {
            1 => Some(ArrowKind::Boundary),
            2 => Some(ArrowKind::Interior),
            _ => None,
        }
    }

    pub fn boundary_arrows(&self, q: &Quiver) -> Vec<ArrowIx> {
        q.arrows()
            .filter(|&a| self.arrow_kind(a) == Some(ArrowKind::Boundary))
            .collect()
    }

    pub fn interior_arrows(&self, q: &Quiver) -> Vec<ArrowIx> {
        q.arrows()
            .filter(|&a| self.arrow_kind(a) == Some(ArrowKind::Interior))
            .collect()
    }

    /// For an interior arrow, the cycle containing it other than `cycle`.
    pub fn other_cycle(&self, a: ArrowIx, cycle: usize) -> Option<usize> {
        let m = &self.membership[a.0];
        if m.len() != 2 {
            return None;
        }
        if m[0] == cycle {
            Some(m[1])
        } else if m[1] == cycle {
            Some(m[0])
        } else {
            None
        }
    }

    /// Distance of each cycle from `root` in the cycle adjacency graph,
    /// where two cycles are adjacent when they share an interior arrow.
    pub fn cycle_distances(&self, q: &Quiver, root: usize) -> Vec<Option<usize>> {
        let mut adj = vec![BTreeSet::new(); self.cycles.len()];
        for a in q.arrows() {
            if let [i, j] = *self.membership[a.0].as_slice() {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        let mut dist = vec![None; self.cycles.len()];
        let mut queue = VecDeque::from([root]);
        dist[root] = Some(0);
        while let Some(c) = queue.pop_front() {
            for &n in &adj[c] {
                if dist[n].is_none() {
                    dist[n] = Some(dist[c].unwrap() + 1);
                    queue.push_back(n);
                }
            }
        }
        dist
    }
}

/// Enumerates all chordless directed cycles of the quiver.
///
/// Simple cycles are grown by depth-first search anchored at their least
/// vertex, then filtered: a cycle is chordless when the only arrows between
/// its vertices are the cycle arrows themselves.
pub fn chordless_cycles(q: &Quiver) -> Vec<ChordlessCycle> {
    let mut out = Vec::new();
    for start in q.vertices() {
        let mut path: Vec<ArrowIx> = Vec::new();
        let mut visited: BTreeSet<VertexIx> = BTreeSet::from([start]);
        grow(q, start, start, &mut path, &mut visited, &mut out);
    }
    for c in &mut out {
        c.arrows = canonical_rotation(&c.arrows, |a| q.arrow(a).id.as_str());
    }
    out.sort_by_key(|c| {
        (
            c.arrows.len(),
            c.arrows
                .iter()
                .map(|&a| q.arrow(a).id.clone())
                .collect::<Vec<_>>(),
        )
    });
    out
}

fn grow(
    q: &Quiver,
    start: VertexIx,
    here: VertexIx,
    path: &mut Vec<ArrowIx>,
    visited: &mut BTreeSet<VertexIx>,
    out: &mut Vec<ChordlessCycle>,
) {
    for a in q.arrows_from(here) {
        let tgt = q.arrow(a).tgt;
        if tgt == start {
            if path.len() >= 2 {
                path.push(a);
                if is_chordless(q, path) {
                    out.push(ChordlessCycle {
                        arrows: path.clone(),
                    });
                }
                path.pop();
            }
            continue;
        }
        if tgt.0 > start.0 && !visited.contains(&tgt) {
            path.push(a);
            visited.insert(tgt);
            grow(q, start, tgt, path, visited, out);
            visited.remove(&tgt);
            path.pop();
        }
    }
}

fn is_chordless(q: &Quiver, cycle: &[ArrowIx]) -> bool {
    let verts: BTreeSet<VertexIx> = cycle.iter().map(|&a| q.arrow(a).src).collect();
    q.arrows().all(|a| {
        let arr = q.arrow(a);
        cycle.contains(&a) || !(verts.contains(&arr.src) && verts.contains(&arr.tgt))
    })
}

/// The dual graph of a quiver: one node per chordless cycle, one node per
/// boundary arrow; an edge for every shared interior arrow and one from
/// each boundary arrow to the cycle containing it.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub node_labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub cycle_count: usize,
}

impl DualGraph {
    pub fn new(q: &Quiver, data: &CycleData) -> Self {
        let mut node_labels: Vec<String> = data
            .cycles
            .iter()
            .map(|c| format!("cycle[{}]", c.display(q)))
            .collect();
        let cycle_count = node_labels.len();
        let mut edges = Vec::new();
        let mut seen_pairs = BTreeSet::new();
        for a in q.arrows() {
            match *data.cycles_through(a) {
                [i, j] => {
                    let key = (i.min(j), i.max(j), q.arrow(a).id.clone());
                    if seen_pairs.insert(key) {
                        edges.push((i, j));
                    }
                }
                [i] => {
                    let node = node_labels.len();
                    node_labels.push(format!("arrow[{}]", q.arrow(a).id));
                    edges.push((i, node));
                }
                _ => {}
            }
        }
        DualGraph {
            node_labels,
            edges,
            cycle_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_labels.len()
    }

    pub fn is_connected(&self) -> bool {
        if self.node_labels.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(n) = queue.pop_front() {
            for &m in &adj[n] {
                if !seen[m] {
                    seen[m] = true;
                    queue.push_back(m);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.node_count()
    }
}

/// A single reason a quiver fails dimer tree validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Disconnected,
    ParallelArrows { src: String, tgt: String },
    ArrowInNoCycle { arrow: String },
    ArrowInTooManyCycles { arrow: String, count: usize },
    DualGraphNotTree { nodes: usize, edges: usize, connected: bool },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Disconnected => write!(f, "underlying graph is disconnected"),
            Violation::ParallelArrows { src, tgt } => {
                write!(f, "parallel arrows from {src} to {tgt}")
            }
            Violation::ArrowInNoCycle { arrow } => {
                write!(f, "arrow {arrow} lies on no chordless cycle")
            }
            Violation::ArrowInTooManyCycles { arrow, count } => {
                write!(f, "arrow {arrow} lies on {count} chordless cycles")
            }
            Violation::DualGraphNotTree {
                nodes,
                edges,
                connected,
            } => write!(
                f,
                "dual graph is not a tree ({nodes} nodes, {edges} edges, connected: {connected})"
            ),
        }
    }
}

/// Outcome of dimer tree validation, with enough detail to print a report.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub quiver_name: String,
    pub vertex_count: usize,
    pub arrow_count: usize,
    pub cycle_count: usize,
    pub boundary_count: usize,
    pub interior_count: usize,
    pub dual_nodes: usize,
    pub dual_edges: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_dimer_tree(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "quiver {}: {} vertices, {} arrows, {} chordless cycles",
            self.quiver_name, self.vertex_count, self.arrow_count, self.cycle_count
        )?;
        writeln!(
            f,
            "arrows: {} boundary, {} interior; dual graph: {} nodes, {} edges",
            self.boundary_count, self.interior_count, self.dual_nodes, self.dual_edges
        )?;
        if self.violations.is_empty() {
            write!(f, "dimer tree: yes")
        } else {
            writeln!(f, "dimer tree: no")?;
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "  violation: {v}")?;
            }
            Ok(())
        }
    }
}

fn quiver_connected(q: &Quiver) -> bool {
    if q.vertex_count() == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); q.vertex_count()];
    for a in q.arrows() {
        let arr = q.arrow(a);
        adj[arr.src.0].push(arr.tgt.0);
        adj[arr.tgt.0].push(arr.src.0);
    }
    let mut seen = vec![false; q.vertex_count()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(n) = queue.pop_front() {
        for &m in &adj[n] {
            if !seen[m] {
                seen[m] = true;
                queue.push_back(m);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Runs every dimer tree check on `q` and returns the full report.
pub fn validate(q: &Quiver) -> ValidationReport {
    let data = CycleData::new(q);
    let dual = DualGraph::new(q, &data);
    let mut violations = Vec::new();

    if !quiver_connected(q) {
        violations.push(Violation::Disconnected);
    }

    let mut pair_counts: BTreeMap<(VertexIx, VertexIx), usize> = BTreeMap::new();
    for a in q.arrows() {
        let arr = q.arrow(a);
        *pair_counts.entry((arr.src, arr.tgt)).or_default() += 1;
    }
    for ((src, tgt), count) in pair_counts {
        if count > 1 {
            violations.push(Violation::ParallelArrows {
                src: q.vertex_name(src).to_string(),
                tgt: q.vertex_name(tgt).to_string(),
            });
        }
    }

    for a in q.arrows() {
        match data.cycles_through(a).len() {
            1 | 2 => {}
            0 => violations.push(Violation::ArrowInNoCycle {
                arrow: q.arrow(a).id.clone(),
            }),
            n => violations.push(Violation::ArrowInTooManyCycles {
                arrow: q.arrow(a).id.clone(),
                count: n,
            }),
        }
    }

    if !dual.is_tree() {
        violations.push(Violation::DualGraphNotTree {
            nodes: dual.node_count(),
            edges: dual.edges.len(),
            connected: dual.is_connected(),
        });
    }

    ValidationReport {
        quiver_name: q.name.clone(),
        vertex_count: q.vertex_count(),
        arrow_count: q.arrow_count(),
        cycle_count: data.cycles.len(),
        boundary_count: data.boundary_arrows(q).len(),
        interior_count: data.interior_arrows(q).len(),
        dual_nodes: dual.node_count(),
        dual_edges: dual.edges.len(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_TRIANGLES: &str = "\
quiver two-triangles
vertices: a b c d
arrow s: a -> b
arrow bc: b -> c
arrow ca: c -> a
arrow bd: b -> d
arrow da: d -> a
";

    const GLUED_EIGHT: &str = "\
quiver glued-eight
vertices: 1 2 3 4 5 3p 4p 5p
arrow a43: 4 -> 3
arrow a31: 3 -> 1
arrow a35: 3 -> 5
arrow a52: 5 -> 2
arrow a14: 1 -> 4
arrow alpha: 1 -> 2
arrow a23: 2 -> 3
arrow b43: 4p -> 3p
arrow b31: 3p -> 1
arrow b35: 3p -> 5p
arrow b52: 5p -> 2
arrow b14: 1 -> 4p
arrow b23: 2 -> 3p
";

    /// Brute-force oracle: a vertex subset carries a chordless cycle exactly
    /// when its induced arrows form a single directed cycle through every
    /// vertex of the subset and nothing else.
    fn subset_oracle(q: &Quiver) -> BTreeSet<BTreeSet<ArrowIx>> {
        let n = q.vertex_count();
        assert!(n <= 16, "oracle is exponential in vertex count");
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let verts: BTreeSet<VertexIx> = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(VertexIx)
                .collect();
            if verts.len() < 3 {
                continue;
            }
            let induced: Vec<ArrowIx> = q
                .arrows()
                .filter(|&a| {
                    verts.contains(&q.arrow(a).src) && verts.contains(&q.arrow(a).tgt)
                })
                .collect();
            if induced.len() != verts.len() {
                continue;
            }
            let out_deg_ok = verts.iter().all(|&v| {
                induced.iter().filter(|&&a| q.arrow(a).src == v).count() == 1
                    && induced.iter().filter(|&&a| q.arrow(a).tgt == v).count() == 1
            });
            if !out_deg_ok {
                continue;
            }
            let mut reached = BTreeSet::new();
            let mut v = *verts.iter().next().unwrap();
            while reached.insert(v) {
                let a = induced.iter().find(|&&a| q.arrow(a).src == v).unwrap();
                v = q.arrow(*a).tgt;
            }
            if reached == verts {
                out.insert(induced.into_iter().collect());
            }
        }
        out
    }

    fn cycle_arrow_sets(q: &Quiver) -> BTreeSet<BTreeSet<ArrowIx>> {
        chordless_cycles(q)
            .into_iter()
            .map(|c| c.arrows.into_iter().collect())
            .collect()
    }

    #[test]
    fn triangle_has_one_cycle() {
        let q = Quiver::parse("quiver t\nvertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n").unwrap();
        let cycles = chordless_cycles(&q);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
    }

    #[test]
    fn two_triangles_classification() {
        let q = Quiver::parse(TWO_TRIANGLES).unwrap();
        let data = CycleData::new(&q);
        assert_eq!(data.cycles.len(), 2);
        let shared = q.arrow_by_name("s").unwrap();
        assert_eq!(data.arrow_kind(shared), Some(ArrowKind::Interior));
        assert_eq!(data.boundary_arrows(&q).len(), 4);
        let report = validate(&q);
        assert!(report.is_dimer_tree(), "{report}");
        let dual = DualGraph::new(&q, &data);
        assert_eq!(dual.node_count(), 6);
        assert_eq!(dual.edges.len(), 5);
    }

    #[test]
    fn glued_eight_is_dimer_tree_with_six_cycles() {
        let q = Quiver::parse(GLUED_EIGHT).unwrap();
        let data = CycleData::new(&q);
        assert_eq!(data.cycles.len(), 6);
        assert_eq!(data.boundary_arrows(&q).len(), 8);
        assert_eq!(data.interior_arrows(&q).len(), 5);
        assert!(validate(&q).is_dimer_tree());
    }

    #[test]
    fn enumeration_matches_subset_oracle() {
        for doc in [TWO_TRIANGLES, GLUED_EIGHT] {
            let q = Quiver::parse(doc).unwrap();
            assert_eq!(cycle_arrow_sets(&q), subset_oracle(&q), "on {}", q.name);
        }
    }

    #[test]
    fn acyclic_quiver_fails_validation() {
        let q = Quiver::parse("quiver line\nvertices: 1 2\narrow a: 1 -> 2\n").unwrap();
        let report = validate(&q);
        assert!(!report.is_dimer_tree());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ArrowInNoCycle { .. })));
    }

    #[test]
    fn disconnected_quiver_fails_validation() {
        let q = Quiver::parse(
            "quiver two-parts\nvertices: 1 2 3 4 5 6\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\narrow d: 4 -> 5\narrow e: 5 -> 6\narrow f: 6 -> 4\n",
        )
        .unwrap();
        let report = validate(&q);
        assert!(!report.is_dimer_tree());
        assert!(report.violations.contains(&Violation::Disconnected));
    }

    #[test]
    fn cycle_distances_from_root() {
        let q = Quiver::parse(GLUED_EIGHT).unwrap();
        let data = CycleData::new(&q);
        let root = data
            .cycles
            .iter()
            .position(|c| {
                c.arrows
                    .iter()
                    .filter(|&&a| data.arrow_kind(a) == Some(ArrowKind::Interior))
                    .count()
                    == 1
            })
            .unwrap();
        let dist = data.cycle_distances(&q, root);
        assert!(dist.iter().all(|d| d.is_some()));
        assert_eq!(*dist.iter().flatten().max().unwrap() as i64, 3);
    }
}
