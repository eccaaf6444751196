//! Doubling a quiver along a distinguished boundary arrow, the order-2
//! symmetry of the double, and the skew quiver of that symmetry.
//!
//! Gluing keeps the glue arrow and its two endpoints, mirrors everything
//! else into a primed copy (suffix `p`), and produces the swap action.
//! The skew quiver instead splits the two glue endpoints and every arrow
//! touching them into `+`/`-` copies and keeps the rest untouched.

use std::collections::BTreeMap;

use crate::cycles::{ArrowKind, ChordlessCycle, CycleData};
use crate::potential::{canonical_potential, PotentialError};
use crate::quiver::{canonical_rotation, ArrowIx, Potential, PotentialTerm, Quiver, VertexIx};

#[derive(Debug, thiserror::Error)]
pub enum GlueError {
    #[error("no arrow named `{0}`")]
    NoSuchArrow(String),
    #[error("glue arrow `{0}` must lie on exactly one chordless cycle")]
    GlueNotBoundary(String),
    #[error("generated name `{0}` collides with an existing one")]
    NameCollision(String),
    #[error("split copies of `{0}` disagree about their endpoints")]
    MergeConflict(String),
    #[error("expected exactly one doubled arrow between split vertices, found {0}")]
    AmbiguousMerge(usize),
    #[error("`{0}` is not the split of its own merged half")]
    NotASplit(String),
    #[error(transparent)]
    Quiver(#[from] crate::quiver::QuiverError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
}

/// An involution of a quiver, stored as vertex and arrow permutations.
#[derive(Debug, Clone)]
pub struct SigmaAction {
    vertex_map: Vec<VertexIx>,
    arrow_map: Vec<ArrowIx>,
}

impl SigmaAction {
    pub fn vertex(&self, v: VertexIx) -> VertexIx {
        self.vertex_map[v.0]
    }

    pub fn arrow(&self, a: ArrowIx) -> ArrowIx {
        self.arrow_map[a.0]
    }

    pub fn fixed_vertices(&self) -> Vec<VertexIx> {
        (0..self.vertex_map.len())
            .map(VertexIx)
            .filter(|&v| self.vertex_map[v.0] == v)
            .collect()
    }

    pub fn is_involution(&self) -> bool {
        self.vertex_map
            .iter()
            .enumerate()
            .all(|(i, &v)| self.vertex_map[v.0] == VertexIx(i))
            && self
                .arrow_map
                .iter()
                .enumerate()
                .all(|(i, &a)| self.arrow_map[a.0] == ArrowIx(i))
    }

    /// Checks compatibility with the quiver structure: sigma maps the
    /// arrow x -> y to an arrow sigma(x) -> sigma(y).
    pub fn respects(&self, q: &Quiver) -> bool {
        q.arrows().all(|a| {
            let arr = q.arrow(a);
            let img = q.arrow(self.arrow(a));
            img.src == self.vertex(arr.src) && img.tgt == self.vertex(arr.tgt)
        })
    }

    /// Applies sigma to every term of a potential.
    pub fn apply_potential(&self, q: &Quiver, pot: &Potential) -> Potential {
        let mut terms: Vec<PotentialTerm> = pot
            .terms
            .iter()
            .map(|t| {
                let mapped: Vec<ArrowIx> = t.arrows.iter().map(|&a| self.arrow(a)).collect();
                PotentialTerm {
                    sign: t.sign,
                    arrows: canonical_rotation(&mapped, |a| q.arrow(a).id.as_str()),
                }
            })
            .collect();
        terms.sort();
        Potential { terms }
    }
}

/// The doubled quiver together with its swap action and glue arrow.
#[derive(Debug, Clone)]
pub struct Glued {
    pub quiver: Quiver,
    pub sigma: SigmaAction,
    pub glue_arrow: ArrowIx,
}

fn glue_endpoints(q0: &Quiver, alpha_id: &str) -> Result<(ArrowIx, VertexIx, VertexIx), GlueError> {
    let alpha = q0
        .arrow_by_name(alpha_id)
        .ok_or_else(|| GlueError::NoSuchArrow(alpha_id.to_string()))?;
    let data = CycleData::new(q0);
    if data.arrow_kind(alpha) != Some(ArrowKind::Boundary) {
        return Err(GlueError::GlueNotBoundary(alpha_id.to_string()));
    }
    Ok((alpha, q0.arrow(alpha).src, q0.arrow(alpha).tgt))
}

/// Glues two copies of `q0` along `alpha_id`, producing the doubled
/// quiver and the order-2 action exchanging the copies.
pub fn glue(q0: &Quiver, alpha_id: &str) -> Result<Glued, GlueError> {
    let (alpha, src, tgt) = glue_endpoints(q0, alpha_id)?;
    let fixed = |v: VertexIx| v == src || v == tgt;

    let primed = |name: &str| format!("{name}p");
    let mut vertices: Vec<String> = q0.vertex_names().map(|s| s.to_string()).collect();
    for v in q0.vertices() {
        if !fixed(v) {
            let name = primed(q0.vertex_name(v));
            if q0.vertex_by_name(&name).is_some() {
                return Err(GlueError::NameCollision(name));
            }
            vertices.push(name);
        }
    }

    let mirror_vertex = |v: VertexIx| -> String {
        if fixed(v) {
            q0.vertex_name(v).to_string()
        } else {
            primed(q0.vertex_name(v))
        }
    };

    let mut arrows: Vec<(String, String, String)> = q0
        .arrows()
        .map(|a| {
            let arr = q0.arrow(a);
            (
                arr.id.clone(),
                q0.vertex_name(arr.src).to_string(),
                q0.vertex_name(arr.tgt).to_string(),
            )
        })
        .collect();
    let mut origins = BTreeMap::new();
    for a in q0.arrows() {
        if a == alpha {
            continue;
        }
        let arr = q0.arrow(a);
        let id = primed(&arr.id);
        if q0.arrow_by_name(&id).is_some() {
            return Err(GlueError::NameCollision(id));
        }
        origins.insert(id.clone(), arr.id.clone());
        arrows.push((id, mirror_vertex(arr.src), mirror_vertex(arr.tgt)));
    }
    for v in q0.vertices() {
        if !fixed(v) {
            origins.insert(
                primed(q0.vertex_name(v)),
                q0.vertex_name(v).to_string(),
            );
        }
    }

    let mut quiver = Quiver::new(format!("{}-glued", q0.name), vertices, arrows)?;
    quiver.origins = origins;

    let vertex_map: Vec<VertexIx> = quiver
        .vertices()
        .map(|v| {
            let name = quiver.vertex_name(v);
            let partner = match quiver.origins.get(name) {
                Some(orig) => orig.clone(),
                None if q0.vertex_by_name(name).map(fixed) == Some(false) => primed(name),
                None => name.to_string(),
            };
            quiver.vertex_by_name(&partner).expect("partner exists")
        })
        .collect();
    let arrow_map: Vec<ArrowIx> = quiver
        .arrows()
        .map(|a| {
            let id = &quiver.arrow(a).id;
            let partner = match quiver.origins.get(id) {
                Some(orig) => orig.clone(),
                None if *id != q0.arrow(alpha).id && q0.arrow_by_name(id).is_some() => primed(id),
                None => id.clone(),
            };
            quiver.arrow_by_name(&partner).expect("partner exists")
        })
        .collect();

    let sigma = SigmaAction {
        vertex_map,
        arrow_map,
    };
    debug_assert!(sigma.is_involution() && sigma.respects(&quiver));

    let glue_arrow = quiver
        .arrow_by_name(&q0.arrow(alpha).id)
        .expect("glue arrow is kept");
    Ok(Glued {
        quiver,
        sigma,
        glue_arrow,
    })
}

impl Glued {
    /// The potential `W - sigma(W)`, where `W` is the canonical potential
    /// of the original half embedded along the unprimed copy.
    pub fn reflected_potential(&self, q0: &Quiver) -> Result<Potential, GlueError> {
        let data0 = CycleData::new(q0);
        let w0 = canonical_potential(q0, &data0)?;
        let embed = |t: &PotentialTerm| -> PotentialTerm {
            let arrows: Vec<ArrowIx> = t
                .arrows
                .iter()
                .map(|&a| {
                    self.quiver
                        .arrow_by_name(&q0.arrow(a).id)
                        .expect("half embeds into the double")
                })
                .collect();
            PotentialTerm {
                sign: t.sign,
                arrows: canonical_rotation(&arrows, |a| self.quiver.arrow(a).id.as_str()),
            }
        };
        let mut terms: Vec<PotentialTerm> = w0.terms.iter().map(embed).collect();
        let mirrored = self.sigma.apply_potential(
            &self.quiver,
            &Potential {
                terms: terms.clone(),
            },
        );
        terms.extend(mirrored.terms.into_iter().map(|mut t| {
            t.sign = -t.sign;
            t
        }));
        terms.sort();
        Ok(Potential { terms })
    }
}

/// The skew quiver: vertices and arrows at the glue endpoints split into
/// plus and minus copies, everything else kept once.
#[derive(Debug, Clone)]
pub struct Skew {
    pub quiver: Quiver,
}

pub fn skew(q0: &Quiver, alpha_id: &str) -> Result<Skew, GlueError> {
    let (_, src, tgt) = glue_endpoints(q0, alpha_id)?;
    let fixed = |v: VertexIx| v == src || v == tgt;

    let mut vertices = Vec::new();
    let mut origins = BTreeMap::new();
    for v in q0.vertices() {
        let name = q0.vertex_name(v);
        if fixed(v) {
            for sign in ["+", "-"] {
                let split = format!("{name}{sign}");
                if q0.vertex_by_name(&split).is_some() {
                    return Err(GlueError::NameCollision(split));
                }
                origins.insert(split.clone(), name.to_string());
                vertices.push(split);
            }
        } else {
            vertices.push(name.to_string());
        }
    }

    let mut arrows = Vec::new();
    for a in q0.arrows() {
        let arr = q0.arrow(a);
        let (sname, tname) = (q0.vertex_name(arr.src), q0.vertex_name(arr.tgt));
        match (fixed(arr.src), fixed(arr.tgt)) {
            (false, false) => arrows.push((arr.id.clone(), sname.to_string(), tname.to_string())),
            _ => {
                for sign in ["+", "-"] {
                    let id = format!("{}{sign}", arr.id);
                    if q0.arrow_by_name(&id).is_some() {
                        return Err(GlueError::NameCollision(id));
                    }
                    let s = if fixed(arr.src) {
                        format!("{sname}{sign}")
                    } else {
                        sname.to_string()
                    };
                    let t = if fixed(arr.tgt) {
                        format!("{tname}{sign}")
                    } else {
                        tname.to_string()
                    };
                    origins.insert(id.clone(), arr.id.clone());
                    arrows.push((id, s, t));
                }
            }
        }
    }

    let mut quiver = Quiver::new(format!("{}-skew", q0.name), vertices, arrows)?;
    quiver.origins = origins;
    Ok(Skew { quiver })
}

/// The one-sided model recovered from a split quiver.
#[derive(Debug, Clone)]
pub struct Unskewed {
    pub half: Quiver,
    pub glue_id: String,
}

/// Merges the `+`/`-` copies of a split quiver back together,
/// recovering the one-sided model and its distinguished arrow. Split
/// names are read from the recorded origins when present and from the
/// trailing sign otherwise.
pub fn unskew(q: &Quiver) -> Result<Unskewed, GlueError> {
    let signed_partner = |name: &str| -> Option<String> {
        let (base, sign) = match name.strip_suffix('+') {
            Some(b) => (b, '-'),
            None => (name.strip_suffix('-')?, '+'),
        };
        Some(format!("{base}{sign}"))
    };
    let vertex_origin = |name: &str| -> String {
        if let Some(orig) = q.origins.get(name) {
            return orig.clone();
        }
        match signed_partner(name) {
            Some(p) if q.vertex_by_name(&p).is_some() => name[..name.len() - 1].to_string(),
            _ => name.to_string(),
        }
    };
    let arrow_origin = |name: &str| -> String {
        if let Some(orig) = q.origins.get(name) {
            return orig.clone();
        }
        match signed_partner(name) {
            Some(p) if q.arrow_by_name(&p).is_some() => name[..name.len() - 1].to_string(),
            _ => name.to_string(),
        }
    };

    let mut vertices: Vec<String> = Vec::new();
    let mut split_vertices: BTreeMap<String, usize> = BTreeMap::new();
    for v in q.vertices() {
        let orig = vertex_origin(q.vertex_name(v));
        let count = split_vertices.entry(orig.clone()).or_insert(0);
        *count += 1;
        if *count == 1 {
            vertices.push(orig);
        }
    }

    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut merged: BTreeMap<String, ((String, String), usize)> = BTreeMap::new();
    for a in q.arrows() {
        let arr = q.arrow(a);
        let id = arrow_origin(&arr.id);
        let ends = (
            vertex_origin(q.vertex_name(arr.src)),
            vertex_origin(q.vertex_name(arr.tgt)),
        );
        match merged.get_mut(&id) {
            Some((seen, count)) => {
                if *seen != ends {
                    return Err(GlueError::MergeConflict(id));
                }
                *count += 1;
            }
            None => {
                arrows.push((id.clone(), ends.0.clone(), ends.1.clone()));
                merged.insert(id, (ends, 1));
            }
        }
    }

    let glue_ids: Vec<&String> = merged
        .iter()
        .filter(|(_, ((s, t), count))| {
            *count == 2 && split_vertices[s] == 2 && split_vertices[t] == 2
        })
        .map(|(id, _)| id)
        .collect();
    let [glue_id] = glue_ids.as_slice() else {
        return Err(GlueError::AmbiguousMerge(glue_ids.len()));
    };
    let glue_id = (*glue_id).clone();

    let name = q
        .name
        .strip_suffix("-skew")
        .map(str::to_string)
        .unwrap_or_else(|| format!("{}-merged", q.name));
    let half = Quiver::new(name, vertices, arrows)?;
    if !skew(&half, &glue_id)?.quiver.is_isomorphic_to(q) {
        return Err(GlueError::NotASplit(q.name.clone()));
    }
    Ok(Unskewed { half, glue_id })
}

/// A recognized double: the swap action together with its glue arrow.
#[derive(Debug, Clone)]
pub struct Detected {
    pub sigma: SigmaAction,
    pub glue_arrow: ArrowIx,
}

enum Undo {
    Vertex(usize),
    Arrow(usize),
}

struct SwapSearch<'a> {
    q: &'a Quiver,
    vmap: Vec<Option<VertexIx>>,
    amap: Vec<Option<ArrowIx>>,
    found: Vec<SigmaAction>,
}

impl<'a> SwapSearch<'a> {
    fn new(q: &'a Quiver) -> Self {
        SwapSearch {
            q,
            vmap: vec![None; q.vertex_count()],
            amap: vec![None; q.arrow_count()],
            found: Vec::new(),
        }
    }

    /// Records `v <-> w` as a transposition (or fixed point when `v == w`).
    /// Pushes the slots written so the caller can undo them.
    fn pair_vertices(&mut self, v: VertexIx, w: VertexIx, undo: &mut Vec<Undo>) -> bool {
        for (x, y) in [(v, w), (w, v)] {
            match self.vmap[x.0] {
                Some(img) if img != y => return false,
                Some(_) => {}
                None => {
                    self.vmap[x.0] = Some(y);
                    undo.push(Undo::Vertex(x.0));
                }
            }
        }
        true
    }

    fn pair_arrows(&mut self, a: ArrowIx, b: ArrowIx, undo: &mut Vec<Undo>) -> bool {
        for (x, y) in [(a, b), (b, a)] {
            match self.amap[x.0] {
                Some(img) if img != y => return false,
                Some(_) => {}
                None => {
                    self.amap[x.0] = Some(y);
                    undo.push(Undo::Arrow(x.0));
                }
            }
        }
        let (src, tgt) = (self.q.arrow(a).src, self.q.arrow(a).tgt);
        let (isrc, itgt) = (self.q.arrow(b).src, self.q.arrow(b).tgt);
        self.pair_vertices(src, isrc, undo) && self.pair_vertices(tgt, itgt, undo)
    }

    fn unwind(&mut self, undo: Vec<Undo>) {
        for slot in undo {
            match slot {
                Undo::Vertex(i) => self.vmap[i] = None,
                Undo::Arrow(i) => self.amap[i] = None,
            }
        }
    }

    fn next_frontier_arrow(&self) -> Option<ArrowIx> {
        (0..self.q.arrow_count()).map(ArrowIx).find(|&a| {
            self.amap[a.0].is_none()
                && (self.vmap[self.q.arrow(a).src.0].is_some()
                    || self.vmap[self.q.arrow(a).tgt.0].is_some())
        })
    }

    fn extend(&mut self) {
        let a = match self.next_frontier_arrow() {
            Some(a) => a,
            None => {
                if self.amap.iter().all(Option::is_some) {
                    let sigma = SigmaAction {
                        vertex_map: self.vmap.iter().map(|v| v.unwrap()).collect(),
                        arrow_map: self.amap.iter().map(|a| a.unwrap()).collect(),
                    };
                    if sigma.is_involution() && sigma.respects(self.q) {
                        self.found.push(sigma);
                    }
                }
                return;
            }
        };
        let arr = self.q.arrow(a);
        for b in (0..self.q.arrow_count()).map(ArrowIx) {
            let img = self.q.arrow(b);
            let src_ok = match self.vmap[arr.src.0] {
                Some(v) => img.src == v,
                None => true,
            };
            let tgt_ok = match self.vmap[arr.tgt.0] {
                Some(v) => img.tgt == v,
                None => true,
            };
            if !src_ok || !tgt_ok {
                continue;
            }
            let mut undo = Vec::new();
            if self.pair_arrows(a, b, &mut undo) {
                self.extend();
            }
            self.unwind(undo);
        }
    }
}

/// True when deleting `fixed` from the underlying graph leaves two
/// connected components exchanged by `sigma`. Returns one component.
fn swapped_components(
    q: &Quiver,
    sigma: &SigmaAction,
    fixed: &[VertexIx],
) -> Option<Vec<VertexIx>> {
    let removed = |v: VertexIx| fixed.contains(&v);
    let mut seen = vec![false; q.vertex_count()];
    let mut components: Vec<Vec<VertexIx>> = Vec::new();
    for start in q.vertices() {
        if removed(start) || seen[start.0] {
            continue;
        }
        let mut comp = vec![start];
        seen[start.0] = true;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for a in q.arrows() {
                let arr = q.arrow(a);
                let next = if arr.src == v {
                    arr.tgt
                } else if arr.tgt == v {
                    arr.src
                } else {
                    continue;
                };
                if !removed(next) && !seen[next.0] {
                    seen[next.0] = true;
                    comp.push(next);
                    queue.push(next);
                }
            }
        }
        comp.sort();
        components.push(comp);
    }
    if components.len() != 2 {
        return None;
    }
    let mirrored: Vec<VertexIx> = {
        let mut m: Vec<VertexIx> = components[0].iter().map(|&v| sigma.vertex(v)).collect();
        m.sort();
        m
    };
    if mirrored == components[1] {
        components.sort_by(|x, y| {
            let names = |c: &Vec<VertexIx>| -> Vec<String> {
                c.iter().map(|&v| q.vertex_name(v).to_string()).collect()
            };
            names(x).cmp(&names(y))
        });
        Some(components.swap_remove(0))
    } else {
        None
    }
}

/// All ways of reading `q` as a double: interior arrows whose two cycles
/// are exchanged by an involution splitting the rest into mirror halves.
pub fn detect_involutions(q: &Quiver) -> Vec<Detected> {
    let data = CycleData::new(q);
    let mut out = Vec::new();
    for alpha in data.interior_arrows(q) {
        let through = data.cycles_through(alpha);
        let (c1, c2) = (&data.cycles[through[0]], &data.cycles[through[1]]);
        if c1.len() != c2.len() {
            continue;
        }
        let aligned = |c: &ChordlessCycle| -> Vec<ArrowIx> {
            let pos = c.arrows.iter().position(|&x| x == alpha).unwrap();
            let mut arrows = c.arrows.clone();
            arrows.rotate_left(pos);
            arrows
        };
        let mut search = SwapSearch::new(q);
        let mut undo = Vec::new();
        let mut seeded = true;
        for (&a, &b) in aligned(c1).iter().zip(aligned(c2).iter()) {
            if !search.pair_arrows(a, b, &mut undo) {
                seeded = false;
                break;
            }
        }
        if seeded {
            search.extend();
        }
        for sigma in search.found {
            let fixed = sigma.fixed_vertices();
            let endpoints = [q.arrow(alpha).src, q.arrow(alpha).tgt];
            let fixed_ok = fixed.len() == 2 && endpoints.iter().all(|v| fixed.contains(v));
            let single_fixed_arrow =
                q.arrows().filter(|&a| sigma.arrow(a) == a).eq([alpha]);
            if fixed_ok
                && single_fixed_arrow
                && swapped_components(q, &sigma, &fixed).is_some()
            {
                out.push(Detected {
                    sigma,
                    glue_arrow: alpha,
                });
            }
        }
    }
    out
}

/// The first decomposition of `q` as a double, if any.
pub fn detect_involution(q: &Quiver) -> Option<Detected> {
    detect_involutions(q).into_iter().next()
}

impl Detected {
    /// The half along the glue arrow: the induced subquiver on one mirror
    /// component together with the two fixed endpoints.
    pub fn half(&self, q: &Quiver) -> Result<Quiver, GlueError> {
        let fixed = self.sigma.fixed_vertices();
        let mut keep = swapped_components(q, &self.sigma, &fixed)
            .expect("a detected double splits into mirror halves");
        keep.extend(fixed);
        let kept = |v: VertexIx| keep.contains(&v);
        let vertices: Vec<String> = q
            .vertices()
            .filter(|&v| kept(v))
            .map(|v| q.vertex_name(v).to_string())
            .collect();
        let arrows: Vec<(String, String, String)> = q
            .arrows()
            .filter(|&a| kept(q.arrow(a).src) && kept(q.arrow(a).tgt))
            .map(|a| {
                let arr = q.arrow(a);
                (
                    arr.id.clone(),
                    q.vertex_name(arr.src).to_string(),
                    q.vertex_name(arr.tgt).to_string(),
                )
            })
            .collect();
        Ok(Quiver::new(format!("{}-half", q.name), vertices, arrows)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::validate;
    use crate::potential::alternates_on_interior_arrows;
    use crate::weight::{skew_weights, weights};

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

    #[test]
    fn unskew_inverts_skew() {
        for doc in [HALF_FIVE, HALF_SEVEN] {
            let q0 = Quiver::parse(doc).unwrap();
            let split = skew(&q0, "alpha").unwrap();
            let back = unskew(&split.quiver).unwrap();
            assert_eq!(back.glue_id, "alpha");
            assert_eq!(back.half.to_text(), q0.to_text());
        }
    }

    #[test]
    fn unskew_reads_the_sign_convention_without_origins() {
        let printed = Quiver::parse(crate::fixtures::SKEW_SEVEN).unwrap();
        assert!(printed.origins.is_empty());
        let back = unskew(&printed).unwrap();
        assert_eq!(back.glue_id, "alpha");
        let reference = Quiver::parse(HALF_SEVEN).unwrap();
        assert_eq!(
            back.half.vertex_names().collect::<Vec<_>>(),
            reference.vertex_names().collect::<Vec<_>>()
        );
        assert!(back.half.is_isomorphic_to(&reference));
    }

    #[test]
    fn unskew_rejects_an_undoubled_quiver() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        assert!(matches!(unskew(&q0), Err(GlueError::AmbiguousMerge(0))));
    }

    #[test]
    fn glue_half_five() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        assert_eq!(glued.quiver.vertex_count(), 8);
        assert_eq!(glued.quiver.arrow_count(), 13);
        assert!(glued.sigma.is_involution());
        assert!(glued.sigma.respects(&glued.quiver));
        assert_eq!(glued.sigma.fixed_vertices().len(), 2);
        assert!(validate(&glued.quiver).is_dimer_tree());
        let data = CycleData::new(&glued.quiver);
        assert_eq!(data.cycles.len(), 6);
        assert_eq!(weights(&glued.quiver, &data).unwrap().total, 14);
    }

    #[test]
    fn reflected_potential_matches_canonical_up_to_sign() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        let data = CycleData::new(&glued.quiver);
        let canonical = canonical_potential(&glued.quiver, &data).unwrap();
        let reflected = glued.reflected_potential(&q0).unwrap();
        assert!(alternates_on_interior_arrows(
            &glued.quiver,
            &data,
            &reflected
        ));
        let negated = Potential {
            terms: {
                let mut ts: Vec<PotentialTerm> = canonical
                    .terms
                    .iter()
                    .cloned()
                    .map(|mut t| {
                        t.sign = -t.sign;
                        t
                    })
                    .collect();
                ts.sort();
                ts
            },
        };
        assert!(
            reflected == canonical || reflected == negated,
            "reflected {reflected:?} vs canonical {canonical:?}"
        );
    }

    #[test]
    fn glue_half_seven() {
        let q0 = Quiver::parse(HALF_SEVEN).unwrap();
        let glued = glue(&q0, "alpha").unwrap();
        assert_eq!(glued.quiver.vertex_count(), 12);
        assert_eq!(glued.quiver.arrow_count(), 19);
        assert!(validate(&glued.quiver).is_dimer_tree());
        let data = CycleData::new(&glued.quiver);
        assert_eq!(data.cycles.len(), 8);
        assert_eq!(weights(&glued.quiver, &data).unwrap().total, 18);
    }

    #[test]
    fn skew_half_five() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let sk = skew(&q0, "alpha").unwrap();
        assert_eq!(sk.quiver.vertex_count(), 7);
        assert_eq!(sk.quiver.arrow_count(), 12);
        let report = validate(&sk.quiver);
        assert!(!report.is_dimer_tree());
        let expected = Quiver::parse(
            "quiver expected\nvertices: 1+ 1- 2+ 2- 3 4 5\narrow a43: 4 -> 3\narrow a31+: 3 -> 1+\narrow a31-: 3 -> 1-\narrow a35: 3 -> 5\narrow a52+: 5 -> 2+\narrow a52-: 5 -> 2-\narrow a14+: 1+ -> 4\narrow a14-: 1- -> 4\narrow alpha+: 1+ -> 2+\narrow alpha-: 1- -> 2-\narrow a23+: 2+ -> 3\narrow a23-: 2- -> 3\n",
        )
        .unwrap();
        assert!(sk.quiver.is_isomorphic_to(&expected));
    }

    #[test]
    fn skew_half_seven() {
        let q0 = Quiver::parse(HALF_SEVEN).unwrap();
        let sk = skew(&q0, "alpha").unwrap();
        assert_eq!(sk.quiver.vertex_count(), 9);
        assert_eq!(sk.quiver.arrow_count(), 16);
        for id in ["a74", "a34", "a35", "a65"] {
            assert!(sk.quiver.arrow_by_name(id).is_some());
        }
        for id in ["a41+", "a41-", "alpha+", "alpha-", "a17+", "a26-"] {
            assert!(sk.quiver.arrow_by_name(id).is_some(), "missing {id}");
        }
    }

    #[test]
    fn glued_total_weight_doubles_skew_total() {
        for doc in [HALF_FIVE, HALF_SEVEN] {
            let q0 = Quiver::parse(doc).unwrap();
            let data0 = CycleData::new(&q0);
            let alpha = q0.arrow_by_name("alpha").unwrap();
            let skew_total = skew_weights(&q0, &data0, alpha).unwrap().total;
            let glued = glue(&q0, "alpha").unwrap();
            let data = CycleData::new(&glued.quiver);
            let glued_total = weights(&glued.quiver, &data).unwrap().total;
            assert_eq!(glued_total, 2 * skew_total);
        }
    }

    #[test]
    fn glue_rejects_interior_arrow() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        let err = glue(&q0, "a31").unwrap_err();
        assert!(matches!(err, GlueError::GlueNotBoundary(_)));
    }

    #[test]
    fn detect_recovers_the_swap_after_gluing() {
        for doc in [HALF_FIVE, HALF_SEVEN] {
            let q0 = Quiver::parse(doc).unwrap();
            let glued = glue(&q0, "alpha").unwrap();
            let all = detect_involutions(&glued.quiver);
            assert_eq!(all.len(), 1, "expected a unique decomposition");
            let det = &all[0];
            assert_eq!(det.glue_arrow, glued.glue_arrow);
            for v in glued.quiver.vertices() {
                assert_eq!(det.sigma.vertex(v), glued.sigma.vertex(v));
            }
            for a in glued.quiver.arrows() {
                assert_eq!(det.sigma.arrow(a), glued.sigma.arrow(a));
            }
        }
    }

    #[test]
    fn detect_finds_nothing_on_a_half() {
        let q0 = Quiver::parse(HALF_FIVE).unwrap();
        assert!(detect_involution(&q0).is_none());
    }

    #[test]
    fn detected_half_restores_the_original() {
        for doc in [HALF_FIVE, HALF_SEVEN] {
            let q0 = Quiver::parse(doc).unwrap();
            let glued = glue(&q0, "alpha").unwrap();
            let det = detect_involution(&glued.quiver).unwrap();
            let half = det.half(&glued.quiver).unwrap();
            assert!(half.is_isomorphic_to(&q0));
            let mut names: Vec<&str> = half.vertex_names().collect();
            names.sort();
            let mut expected: Vec<&str> = q0.vertex_names().collect();
            expected.sort();
            assert_eq!(names, expected);
        }
    }

    #[test]
    fn swap_negates_the_glue_potential() {
        for doc in [HALF_FIVE, HALF_SEVEN] {
            let q0 = Quiver::parse(doc).unwrap();
            let glued = glue(&q0, "alpha").unwrap();
            let w = glued.reflected_potential(&q0).unwrap();
            let swapped = glued.sigma.apply_potential(&glued.quiver, &w);
            let negated = Potential {
                terms: {
                    let mut ts: Vec<PotentialTerm> = w
                        .terms
                        .iter()
                        .cloned()
                        .map(|mut t| {
                            t.sign = -t.sign;
                            t
                        })
                        .collect();
                    ts.sort();
                    ts
                },
            };
            assert_eq!(swapped, negated);
        }
    }
}
