//! Radical configurations: assignments of polygon diagonals (resp.
//! punctured-polygon arcs) to quiver vertices whose pairwise directed
//! crossings realize exactly the arrows of the quiver.
//!
//! The crossing pattern drives everything downstream: the vertices whose
//! lines a curve crosses left-to-right give the projective cover of the
//! module the curve stands for, the right-to-left crossings give the
//! start of its presentation, and clockwise rotation acts as the syzygy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::gaction::SigmaAction;
use crate::geom::arc::{project, Arc, Projected, Sign};
use crate::geom::diag::Diag;
use crate::quiver::{Quiver, VertexIx};

/// True when two distinct vertices have identical in- and out-neighbour
/// sets; such vertices carry isomorphic radicals and may share a curve.
pub fn twins(q: &Quiver, x: VertexIx, y: VertexIx) -> bool {
    if x == y {
        return false;
    }
    let targets = |v: VertexIx| -> BTreeSet<VertexIx> {
        q.arrows_from(v).iter().map(|&a| q.arrow(a).tgt).collect()
    };
    let sources = |v: VertexIx| -> BTreeSet<VertexIx> {
        q.arrows_into(v).iter().map(|&a| q.arrow(a).src).collect()
    };
    targets(x) == targets(y) && sources(x) == sources(y)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigViolation {
    WrongPolygon { vertex: String },
    Missing { vertex: String },
    CrossingMismatch { from: String, to: String, expected: u8, got: u8 },
    NonTwinCollision { a: String, b: String },
    NotEquivariant { vertex: String },
    FixedNotDiameter { vertex: String },
}

impl fmt::Display for ConfigViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigViolation::WrongPolygon { vertex } => {
                write!(f, "curve at {vertex} lives in the wrong polygon")
            }
            ConfigViolation::Missing { vertex } => write!(f, "no curve assigned to {vertex}"),
            ConfigViolation::CrossingMismatch {
                from,
                to,
                expected,
                got,
            } => write!(
                f,
                "crossing from {from} to {to} is {got}, expected {expected}"
            ),
            ConfigViolation::NonTwinCollision { a, b } => {
                write!(f, "vertices {a} and {b} share a curve but are not twins")
            }
            ConfigViolation::NotEquivariant { vertex } => {
                write!(f, "curve at {vertex} is not half-turn equivariant")
            }
            ConfigViolation::FixedNotDiameter { vertex } => {
                write!(f, "fixed vertex {vertex} is not assigned a diameter")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error(transparent)]
    Diag(#[from] crate::geom::diag::DiagError),
    #[error(transparent)]
    Arc(#[from] crate::geom::arc::ArcError),
    #[error("vertex {0} must carry a diameter to split into loops")]
    NotDiameter(String),
    #[error("vertex {0} projects to a puncture loop but is not split")]
    UnexpectedDiameter(String),
    #[error("cannot orient the loop signs at {0}")]
    AmbiguousSigns(String),
}

/// A radical configuration on the even polygon side.
#[derive(Debug, Clone)]
pub struct ConfigA {
    pub n: u32,
    assign: BTreeMap<VertexIx, Diag>,
}

impl ConfigA {
    pub fn new(n: u32, assign: BTreeMap<VertexIx, Diag>) -> Self {
        ConfigA { n, assign }
    }

    pub fn from_names(
        q: &Quiver,
        n: u32,
        pairs: &[(&str, (u32, u32))],
    ) -> Result<Self, ConfigError> {
        let mut assign = BTreeMap::new();
        for &(name, (a, b)) in pairs {
            let v = q
                .vertex_by_name(name)
                .ok_or_else(|| ConfigError::UnknownVertex(name.to_string()))?;
            assign.insert(v, Diag::new(n, a, b)?);
        }
        Ok(ConfigA { n, assign })
    }

    pub fn diagonal(&self, v: VertexIx) -> Option<Diag> {
        self.assign.get(&v).copied()
    }

    pub fn assignments(&self) -> impl Iterator<Item = (VertexIx, Diag)> + '_ {
        self.assign.iter().map(|(&v, &d)| (v, d))
    }

    /// Checks that the pairwise crossings of the assigned diagonals are
    /// exactly the arrows of `q`, that shared diagonals only occur at
    /// twins, and (when an involution is given) that the configuration is
    /// half-turn equivariant with diameters at the fixed vertices.
    pub fn validate(&self, q: &Quiver, sigma: Option<&SigmaAction>) -> Vec<ConfigViolation> {
        let mut out = Vec::new();
        for v in q.vertices() {
            match self.assign.get(&v) {
                None => out.push(ConfigViolation::Missing {
                    vertex: q.vertex_name(v).to_string(),
                }),
                Some(d) if d.polygon_half() != self.n => out.push(ConfigViolation::WrongPolygon {
                    vertex: q.vertex_name(v).to_string(),
                }),
                Some(_) => {}
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in q.vertices() {
            for y in q.vertices() {
                if x == y {
                    continue;
                }
                let gx = self.assign[&x];
                let gy = self.assign[&y];
                if gx == gy {
                    if x < y && !twins(q, x, y) {
                        out.push(ConfigViolation::NonTwinCollision {
                            a: q.vertex_name(x).to_string(),
                            b: q.vertex_name(y).to_string(),
                        });
                    }
                    continue;
                }
                let expected = u8::from(q.arrow_between(x, y).is_some());
                let got = gx.crossing(&gy);
                if got != expected {
                    out.push(ConfigViolation::CrossingMismatch {
                        from: q.vertex_name(x).to_string(),
                        to: q.vertex_name(y).to_string(),
                        expected,
                        got,
                    });
                }
            }
        }
        if let Some(sigma) = sigma {
            for v in q.vertices() {
                let image = self.assign[&sigma.vertex(v)];
                if image != self.assign[&v].half_turn() {
                    out.push(ConfigViolation::NotEquivariant {
                        vertex: q.vertex_name(v).to_string(),
                    });
                }
                if sigma.vertex(v) == v && !self.assign[&v].is_diameter() {
                    out.push(ConfigViolation::FixedNotDiameter {
                        vertex: q.vertex_name(v).to_string(),
                    });
                }
            }
        }
        out
    }

    /// Vertices whose radical lines `gamma` crosses left-to-right: the
    /// projective cover of the module standing behind `gamma`.
    pub fn p0(&self, q: &Quiver, gamma: &Diag) -> Vec<VertexIx> {
        let mut out: Vec<VertexIx> = Vec::new();
        for v in q.vertices() {
            for _ in 0..gamma.crossing(&self.assign[&v]) {
                out.push(v);
            }
        }
        sort_by_name(q, &mut out);
        out
    }

    /// Vertices whose radical lines cross `gamma` left-to-right: the
    /// start of the two-term presentation over `gamma`.
    pub fn p1(&self, q: &Quiver, gamma: &Diag) -> Vec<VertexIx> {
        let mut out: Vec<VertexIx> = Vec::new();
        for v in q.vertices() {
            for _ in 0..self.assign[&v].crossing(gamma) {
                out.push(v);
            }
        }
        sort_by_name(q, &mut out);
        out
    }

    /// The covers along the rotation orbit of `start`: entry `k` is
    /// `p0` of the `k`-fold clockwise rotation.
    pub fn cover_sequence(&self, q: &Quiver, start: &Diag, steps: usize) -> Vec<Vec<VertexIx>> {
        let mut cur = *start;
        let mut out = Vec::with_capacity(steps);
        for _ in 0..steps {
            out.push(self.p0(q, &cur));
            cur = cur.syzygy();
        }
        out
    }

    /// Searches for a valid configuration by backtracking over the
    /// diagonals of the `2n`-gon, most constrained vertices first. The
    /// result is deterministic: domains are scanned in sorted order.
    pub fn solve(q: &Quiver, n: u32, sigma: Option<&SigmaAction>) -> Option<ConfigA> {
        let mut order: Vec<VertexIx> = q.vertices().collect();
        order.sort_by_key(|&v| {
            (
                usize::MAX - q.arrows_from(v).len() - q.arrows_into(v).len(),
                q.vertex_name(v).to_string(),
            )
        });
        let domain = Diag::all(n);
        let mut assign: BTreeMap<VertexIx, Diag> = BTreeMap::new();
        if solve_step(q, sigma, &order, &domain, &mut assign) {
            Some(ConfigA { n, assign })
        } else {
            None
        }
    }
}

fn consistent(
    q: &Quiver,
    assign: &BTreeMap<VertexIx, Diag>,
    v: VertexIx,
    d: Diag,
) -> bool {
    for (&w, &e) in assign {
        if w == v {
            continue;
        }
        if d == e {
            if !twins(q, v, w) {
                return false;
            }
            continue;
        }
        if d.crossing(&e) != u8::from(q.arrow_between(v, w).is_some()) {
            return false;
        }
        if e.crossing(&d) != u8::from(q.arrow_between(w, v).is_some()) {
            return false;
        }
    }
    true
}

fn solve_step(
    q: &Quiver,
    sigma: Option<&SigmaAction>,
    order: &[VertexIx],
    domain: &[Diag],
    assign: &mut BTreeMap<VertexIx, Diag>,
) -> bool {
    let Some(&v) = order.iter().find(|v| !assign.contains_key(v)) else {
        return true;
    };
    let partner = sigma.map(|s| s.vertex(v));
    for &d in domain {
        if partner == Some(v) && !d.is_diameter() {
            continue;
        }
        if !consistent(q, assign, v, d) {
            continue;
        }
        assign.insert(v, d);
        let mut placed_partner = false;
        let mut ok = true;
        if let Some(w) = partner {
            if w != v && !assign.contains_key(&w) {
                let m = d.half_turn();
                if consistent(q, assign, w, m) {
                    assign.insert(w, m);
                    placed_partner = true;
                } else {
                    ok = false;
                }
            } else if w != v && assign.get(&w) != Some(&d.half_turn()) {
                ok = false;
            }
        }
        if ok && solve_step(q, sigma, order, domain, assign) {
            return true;
        }
        assign.remove(&v);
        if placed_partner {
            assign.remove(&partner.unwrap());
        }
    }
    false
}

fn sort_by_name(q: &Quiver, vs: &mut [VertexIx]) {
    vs.sort_by(|a, b| q.vertex_name(*a).cmp(q.vertex_name(*b)));
}

/// Formats a multiset of vertices as sorted names with repeats.
pub fn names(q: &Quiver, vs: &[VertexIx]) -> Vec<String> {
    let mut out: Vec<String> = vs.iter().map(|&v| q.vertex_name(v).to_string()).collect();
    out.sort();
    out
}

/// A radical configuration on the punctured polygon side.
#[derive(Debug, Clone)]
pub struct ConfigD {
    pub n: u32,
    assign: BTreeMap<VertexIx, Arc>,
}

impl ConfigD {
    pub fn new(n: u32, assign: BTreeMap<VertexIx, Arc>) -> Self {
        ConfigD { n, assign }
    }

    pub fn from_names(q: &Quiver, n: u32, pairs: &[(&str, &str)]) -> Result<Self, ConfigError> {
        let mut assign = BTreeMap::new();
        for &(name, arc) in pairs {
            let v = q
                .vertex_by_name(name)
                .ok_or_else(|| ConfigError::UnknownVertex(name.to_string()))?;
            assign.insert(v, Arc::parse(n, arc)?);
        }
        Ok(ConfigD { n, assign })
    }

    pub fn arc(&self, v: VertexIx) -> Option<Arc> {
        self.assign.get(&v).copied()
    }

    pub fn assignments(&self) -> impl Iterator<Item = (VertexIx, Arc)> + '_ {
        self.assign.iter().map(|(&v, &a)| (v, a))
    }

    /// Derives the punctured-polygon configuration from the polygon one:
    /// non-split vertices project their diagonals, the split copies of
    /// the glue source take the signed loops matching their sign, and the
    /// split copies of the glue target take the loop signs forced by the
    /// arrows from the source copies.
    pub fn from_a(
        cfg: &ConfigA,
        q_glued: &Quiver,
        q_skew: &Quiver,
        glue_src: &str,
        glue_tgt: &str,
    ) -> Result<Self, ConfigError> {
        let n = cfg.n;
        let diagonal_of = |orig: &str| -> Result<Diag, ConfigError> {
            let v = q_glued
                .vertex_by_name(orig)
                .ok_or_else(|| ConfigError::UnknownVertex(orig.to_string()))?;
            cfg.diagonal(v)
                .ok_or_else(|| ConfigError::UnknownVertex(orig.to_string()))
        };
        let loop_foot = |orig: &str| -> Result<u32, ConfigError> {
            let d = diagonal_of(orig)?;
            if !d.is_diameter() {
                return Err(ConfigError::NotDiameter(orig.to_string()));
            }
            Ok((d.tail() - 1) % n + 1)
        };

        let src_foot = loop_foot(glue_src)?;
        let tgt_foot = loop_foot(glue_tgt)?;
        let src_plus = Arc::signed_loop(n, src_foot, Sign::Plus)?;
        let tgt_plus = Arc::signed_loop(n, tgt_foot, Sign::Plus)?;
        let tgt_minus = Arc::signed_loop(n, tgt_foot, Sign::Minus)?;
        let tgt_for_plus = match (
            src_plus.crossing(&tgt_plus),
            src_plus.crossing(&tgt_minus),
        ) {
            (1, 0) => tgt_plus,
            (0, 1) => tgt_minus,
            _ => return Err(ConfigError::AmbiguousSigns(glue_tgt.to_string())),
        };

        let mut assign = BTreeMap::new();
        for v in q_skew.vertices() {
            let name = q_skew.vertex_name(v);
            let arc = match q_skew.origins.get(name) {
                Some(orig) if orig == glue_src || orig == glue_tgt => {
                    let plus = name.ends_with('+');
                    if orig == glue_src {
                        Arc::signed_loop(n, src_foot, if plus { Sign::Plus } else { Sign::Minus })?
                    } else if plus {
                        tgt_for_plus
                    } else {
                        match tgt_for_plus {
                            Arc::Loop { sign, .. } => {
                                Arc::signed_loop(n, tgt_foot, sign.flip())?
                            }
                            Arc::Plain { .. } => unreachable!("loops stay loops"),
                        }
                    }
                }
                _ => match project(&diagonal_of(name)?) {
                    Projected::Plain(arc) => arc,
                    Projected::LoopPair(..) => {
                        return Err(ConfigError::UnexpectedDiameter(name.to_string()))
                    }
                },
            };
            assign.insert(v, arc);
        }
        Ok(ConfigD { n, assign })
    }

    /// Checks that pairwise crossings of the assigned arcs realize
    /// exactly the arrows of the skew quiver.
    pub fn validate(&self, q: &Quiver) -> Vec<ConfigViolation> {
        let mut out = Vec::new();
        for v in q.vertices() {
            match self.assign.get(&v) {
                None => out.push(ConfigViolation::Missing {
                    vertex: q.vertex_name(v).to_string(),
                }),
                Some(a) if a.marked_points() != self.n => {
                    out.push(ConfigViolation::WrongPolygon {
                        vertex: q.vertex_name(v).to_string(),
                    })
                }
                Some(_) => {}
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in q.vertices() {
            for y in q.vertices() {
                if x == y {
                    continue;
                }
                let gx = self.assign[&x];
                let gy = self.assign[&y];
                if gx == gy {
                    if x < y && !twins(q, x, y) {
                        out.push(ConfigViolation::NonTwinCollision {
                            a: q.vertex_name(x).to_string(),
                            b: q.vertex_name(y).to_string(),
                        });
                    }
                    continue;
                }
                let expected = u8::from(q.arrow_between(x, y).is_some());
                let got = gx.crossing(&gy);
                if got != expected {
                    out.push(ConfigViolation::CrossingMismatch {
                        from: q.vertex_name(x).to_string(),
                        to: q.vertex_name(y).to_string(),
                        expected,
                        got,
                    });
                }
            }
        }
        out
    }

    pub fn p0(&self, q: &Quiver, gamma: &Arc) -> Vec<VertexIx> {
        let mut out: Vec<VertexIx> = Vec::new();
        for v in q.vertices() {
            for _ in 0..gamma.crossing(&self.assign[&v]) {
                out.push(v);
            }
        }
        sort_by_name(q, &mut out);
        out
    }

    pub fn p1(&self, q: &Quiver, gamma: &Arc) -> Vec<VertexIx> {
        let mut out: Vec<VertexIx> = Vec::new();
        for v in q.vertices() {
            for _ in 0..self.assign[&v].crossing(gamma) {
                out.push(v);
            }
        }
        sort_by_name(q, &mut out);
        out
    }

    pub fn cover_sequence(&self, q: &Quiver, start: &Arc, steps: usize) -> Vec<Vec<VertexIx>> {
        let mut cur = *start;
        let mut out = Vec::with_capacity(steps);
        for _ in 0..steps {
            out.push(self.p0(q, &cur));
            cur = cur.syzygy();
        }
        out
    }

    /// Searches for a valid configuration by backtracking over the arcs
    /// of the punctured polygon, most constrained vertices first. The
    /// result is deterministic: domains are scanned in sorted order.
    pub fn solve(q: &Quiver, n: u32) -> Option<ConfigD> {
        let mut order: Vec<VertexIx> = q.vertices().collect();
        order.sort_by_key(|&v| {
            (
                usize::MAX - q.arrows_from(v).len() - q.arrows_into(v).len(),
                q.vertex_name(v).to_string(),
            )
        });
        let domain = Arc::all(n);
        let mut assign: BTreeMap<VertexIx, Arc> = BTreeMap::new();
        if solve_step_d(q, &order, &domain, &mut assign) {
            Some(ConfigD { n, assign })
        } else {
            None
        }
    }
}

fn consistent_d(q: &Quiver, assign: &BTreeMap<VertexIx, Arc>, v: VertexIx, d: Arc) -> bool {
    for (&w, &e) in assign {
        if w == v {
            continue;
        }
        if d == e {
            if !twins(q, v, w) {
                return false;
            }
            continue;
        }
        if d.crossing(&e) != u8::from(q.arrow_between(v, w).is_some()) {
            return false;
        }
        if e.crossing(&d) != u8::from(q.arrow_between(w, v).is_some()) {
            return false;
        }
    }
    true
}

fn solve_step_d(
    q: &Quiver,
    order: &[VertexIx],
    domain: &[Arc],
    assign: &mut BTreeMap<VertexIx, Arc>,
) -> bool {
    let Some(&v) = order.iter().find(|v| !assign.contains_key(v)) else {
        return true;
    };
    for &d in domain {
        if !consistent_d(q, assign, v, d) {
            continue;
        }
        assign.insert(v, d);
        if solve_step_d(q, order, domain, assign) {
            return true;
        }
        assign.remove(&v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaction::{glue, skew};

    const HALF_FIVE: &str = "\
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

    const CONFIG_EIGHT: &[(&str, (u32, u32))] = &[
        ("1", (3, 10)),
        ("2", (6, 13)),
        ("3", (2, 7)),
        ("4", (1, 4)),
        ("5", (5, 8)),
        ("3p", (9, 14)),
        ("4p", (8, 11)),
        ("5p", (12, 1)),
    ];

    const CONFIG_SKEW: &[(&str, &str)] = &[
        ("1+", "(3,3)+"),
        ("1-", "(3,3)-"),
        ("2+", "(6,6)-"),
        ("2-", "(6,6)+"),
        ("3", "(2,7)"),
        ("4", "(1,4)"),
        ("5", "(5,1)"),
    ];

    fn seq(expect: &[&[&str]]) -> Vec<Vec<String>> {
        expect
            .iter()
            .map(|step| step.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn reference_polygon_config_is_valid() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        let cfg = ConfigA::from_names(&glued.quiver, 7, CONFIG_EIGHT).unwrap();
        let violations = cfg.validate(&glued.quiver, Some(&glued.sigma));
        assert!(violations.is_empty(), "{violations:?}");
    }

    #[test]
    fn polygon_cover_sequences() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        let q = &glued.quiver;
        let cfg = ConfigA::from_names(q, 7, CONFIG_EIGHT).unwrap();

        let orbit = |a, b, steps| -> Vec<Vec<String>> {
            cfg.cover_sequence(q, &Diag::new(7, a, b).unwrap(), steps)
                .iter()
                .map(|vs| names(q, vs))
                .collect()
        };

        assert_eq!(
            orbit(5, 8, 14),
            seq(&[
                &["2"],
                &["3"],
                &["4p", "5"],
                &["3p"],
                &["1"],
                &["4p"],
                &["5p"],
                &["2"],
                &["3p"],
                &["4", "5p"],
                &["3"],
                &["1"],
                &["4"],
                &["5"],
            ])
        );
        assert_eq!(
            orbit(2, 7, 14),
            seq(&[
                &["1", "5"],
                &["2", "4"],
                &["3"],
                &["2", "4p"],
                &["3", "3p"],
                &["1", "5"],
                &["3p"],
                &["1", "5p"],
                &["2", "4p"],
                &["3p"],
                &["2", "4"],
                &["3", "3p"],
                &["1", "5p"],
                &["3"],
            ])
        );
        assert_eq!(
            orbit(3, 10, 7),
            seq(&[
                &["2", "4", "4p"],
                &["3", "3p"],
                &["1", "2"],
                &["3", "3p"],
                &["1", "5", "5p"],
                &["2"],
                &["1"],
            ])
        );
    }

    #[test]
    fn presentation_start_is_cover_of_rotation() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        let cfg = ConfigA::from_names(&glued.quiver, 7, CONFIG_EIGHT).unwrap();
        for d in Diag::all(7) {
            assert_eq!(
                cfg.p1(&glued.quiver, &d),
                cfg.p0(&glued.quiver, &d.syzygy()),
                "at {d}"
            );
        }
    }

    #[test]
    fn solver_finds_valid_equivariant_config() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        let cfg = ConfigA::solve(&glued.quiver, 7, Some(&glued.sigma)).expect("solvable");
        assert!(cfg.validate(&glued.quiver, Some(&glued.sigma)).is_empty());
    }

    #[test]
    fn solver_handles_twin_vertices() {
        let q = Quiver::parse(
            "quiver two-triangles\nvertices: a b c d\narrow s: a -> b\narrow bc: b -> c\narrow ca: c -> a\narrow bd: b -> d\narrow da: d -> a\n",
        )
        .unwrap();
        let cfg = ConfigA::solve(&q, 3, None).expect("solvable");
        assert!(cfg.validate(&q, None).is_empty());
        let c = q.vertex_by_name("c").unwrap();
        let d = q.vertex_by_name("d").unwrap();
        assert_eq!(cfg.diagonal(c), cfg.diagonal(d));
    }

    #[test]
    fn derived_punctured_config_matches_reference() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        let sk = skew(&q0, "alpha").unwrap();
        let cfg_a = ConfigA::from_names(&glued.quiver, 7, CONFIG_EIGHT).unwrap();
        let derived = ConfigD::from_a(&cfg_a, &glued.quiver, &sk.quiver, "1", "2").unwrap();
        let reference = ConfigD::from_names(&sk.quiver, 7, CONFIG_SKEW).unwrap();
        for v in sk.quiver.vertices() {
            assert_eq!(
                derived.arc(v),
                reference.arc(v),
                "at {}",
                sk.quiver.vertex_name(v)
            );
        }
        assert!(derived.validate(&sk.quiver).is_empty());
    }

    #[test]
    fn punctured_cover_sequences() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let sk = skew(&q0, "alpha").unwrap();
        let q = &sk.quiver;
        let cfg = ConfigD::from_names(q, 7, CONFIG_SKEW).unwrap();

        let orbit = |s: &str, steps| -> Vec<Vec<String>> {
            cfg.cover_sequence(q, &Arc::parse(7, s).unwrap(), steps)
                .iter()
                .map(|vs| names(q, vs))
                .collect()
        };

        assert_eq!(
            orbit("(5,1)", 7),
            seq(&[
                &["2+", "2-"],
                &["3"],
                &["4", "5"],
                &["3"],
                &["1+", "1-"],
                &["4"],
                &["5"],
            ])
        );
        assert_eq!(
            orbit("(3,3)+", 7),
            seq(&[
                &["2+", "4"],
                &["3"],
                &["1+", "2-"],
                &["3"],
                &["1-", "5"],
                &["2-"],
                &["1+"],
            ])
        );
        assert_eq!(
            orbit("(2,7)", 7),
            seq(&[
                &["1+", "1-", "5"],
                &["2+", "2-", "4"],
                &["3"],
                &["2+", "2-", "4"],
                &["3", "3"],
                &["1+", "1-", "5"],
                &["3"],
            ])
        );
    }

    #[test]
    fn punctured_solver_finds_valid_configs() {
        const HALF_SEVEN: &str = "\
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
        for (doc, n) in [(HALF_FIVE, 7), (HALF_SEVEN, 9)] {
            let q0 = Quiver::parse(doc).unwrap();
            let sk = skew(&q0, "alpha").unwrap();
            let cfg = ConfigD::solve(&sk.quiver, n).expect("solvable");
            assert!(cfg.validate(&sk.quiver).is_empty());
            let again = ConfigD::solve(&sk.quiver, n).unwrap();
            for v in sk.quiver.vertices() {
                assert_eq!(cfg.arc(v), again.arc(v));
            }
        }
    }
}
