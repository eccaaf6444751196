//! Quiver data model and the plain-text / JSON document formats.
//!
//! A quiver document lists vertices, arrows, and an optional potential:
//!
//! ```text
//! quiver example
//! vertices: 1 2 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! arrow c: 3 -> 1
//! potential:
//! + a b c
//! ```
//!
//! The same data can be given as JSON with keys `name`, `vertices`,
//! `arrows` and `potential`. Vertex and arrow names are free-form tokens
//! without whitespace or `:`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Index of a vertex inside a [`Quiver`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexIx(pub usize);

/// Index of an arrow inside a [`Quiver`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowIx(pub usize);

/// A directed arrow between two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: VertexIx,
    pub tgt: VertexIx,
}

/// One cyclic summand of a potential, with its sign.
///
/// The arrow list is stored rotated so that the lexicographically least
/// arrow id comes first, which makes term comparison canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PotentialTerm {
    pub sign: i8,
    pub arrows: Vec<ArrowIx>,
}

/// A linear combination of cycles used as the potential of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Potential {
    pub terms: Vec<PotentialTerm>,
}

/// Errors raised while reading or validating quiver documents.
#[derive(Debug, thiserror::Error)]
pub enum QuiverError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("arrow `{0}` is a loop")]
    LoopArrow(String),
    #[error("arrows `{0}` and `{1}` form a 2-cycle")]
    TwoCycle(String, String),
    #[error("potential term references unknown arrow `{0}`")]
    UnknownArrowInPotential(String),
    #[error("potential term `{0}` is not a closed cycle of composable arrows")]
    OpenPotentialTerm(String),
    #[error("invalid JSON quiver: {0}")]
    Json(String),
}

/// A finite quiver with named vertices and arrows and an optional potential.
///
/// Parallel arrows are representable but rejected by the dimer tree
/// validation; loops and 2-cycles are rejected already at parse time.
#[derive(Debug, Clone)]
pub struct Quiver {
    pub name: String,
    vertices: Vec<String>,
    vertex_ix: BTreeMap<String, VertexIx>,
    arrows: Vec<Arrow>,
    arrow_ix: BTreeMap<String, ArrowIx>,
    pub potential: Option<Potential>,
    /// Provenance notes attached by constructions (`new from old`).
    pub origins: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonArrow {
    id: String,
    src: String,
    tgt: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTerm {
    sign: i8,
    arrows: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonQuiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<JsonArrow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    potential: Option<Vec<JsonTerm>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    origins: BTreeMap<String, String>,
}

impl Quiver {
    /// Builds a quiver from raw parts, checking the structural rules that
    /// every operation in this crate relies on (no loops, no 2-cycles).
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, QuiverError> {
        let mut q = Quiver {
            name: name.into(),
            vertices: Vec::new(),
            vertex_ix: BTreeMap::new(),
            arrows: Vec::new(),
            arrow_ix: BTreeMap::new(),
            potential: None,
            origins: BTreeMap::new(),
        };
        for v in vertices {
            q.push_vertex(v)?;
        }
        for (id, src, tgt) in arrows {
            q.push_arrow(id, &src, &tgt)?;
        }
        Ok(q)
    }

    fn push_vertex(&mut self, name: String) -> Result<VertexIx, QuiverError> {
        if self.vertex_ix.contains_key(&name) {
            return Err(QuiverError::DuplicateVertex(name));
        }
        let ix = VertexIx(self.vertices.len());
        self.vertex_ix.insert(name.clone(), ix);
        self.vertices.push(name);
        Ok(ix)
    }

    fn push_arrow(&mut self, id: String, src: &str, tgt: &str) -> Result<ArrowIx, QuiverError> {
        if self.arrow_ix.contains_key(&id) {
            return Err(QuiverError::DuplicateArrow(id));
        }
        let src_ix = *self
            .vertex_ix
            .get(src)
            .ok_or_else(|| QuiverError::UnknownVertex {
                arrow: id.clone(),
                vertex: src.to_string(),
            })?;
        let tgt_ix = *self
            .vertex_ix
            .get(tgt)
            .ok_or_else(|| QuiverError::UnknownVertex {
                arrow: id.clone(),
                vertex: tgt.to_string(),
            })?;
        if src_ix == tgt_ix {
            return Err(QuiverError::LoopArrow(id));
        }
        if let Some(back) = self
            .arrows
            .iter()
            .find(|a| a.src == tgt_ix && a.tgt == src_ix)
        {
            return Err(QuiverError::TwoCycle(back.id.clone(), id));
        }
        let ix = ArrowIx(self.arrows.len());
        self.arrow_ix.insert(id.clone(), ix);
        self.arrows.push(Arrow {
            id,
            src: src_ix,
            tgt: tgt_ix,
        });
        Ok(ix)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexIx) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|s| s.as_str())
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexIx> {
        self.vertex_ix.get(name).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexIx> {
        (0..self.vertices.len()).map(VertexIx)
    }

    pub fn arrow(&self, a: ArrowIx) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrow_by_name(&self, id: &str) -> Option<ArrowIx> {
        self.arrow_ix.get(id).copied()
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowIx> {
        (0..self.arrows.len()).map(ArrowIx)
    }

    /// Looks up the unique arrow from `src` to `tgt`, if any.
    ///
    /// Callers that rely on uniqueness must have checked for parallel
    /// arrows beforehand; this returns the first match in arrow order.
    pub fn arrow_between(&self, src: VertexIx, tgt: VertexIx) -> Option<ArrowIx> {
        self.arrows()
            .find(|&a| self.arrow(a).src == src && self.arrow(a).tgt == tgt)
    }

    pub fn arrows_from(&self, v: VertexIx) -> Vec<ArrowIx> {
        self.arrows().filter(|&a| self.arrow(a).src == v).collect()
    }

    pub fn arrows_into(&self, v: VertexIx) -> Vec<ArrowIx> {
        self.arrows().filter(|&a| self.arrow(a).tgt == v).collect()
    }

    pub fn has_parallel_arrows(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.arrows.iter().any(|a| !seen.insert((a.src, a.tgt)))
    }

    /// Attaches a potential given as signed lists of arrow ids.
    pub fn set_potential(&mut self, terms: Vec<(i8, Vec<String>)>) -> Result<(), QuiverError> {
        let mut pot = Potential::default();
        for (sign, ids) in terms {
            let mut arrows = Vec::with_capacity(ids.len());
            for id in &ids {
                let ix = self
                    .arrow_by_name(id)
                    .ok_or_else(|| QuiverError::UnknownArrowInPotential(id.clone()))?;
                arrows.push(ix);
            }
            let display = ids.join(" ");
            if arrows.is_empty() {
                return Err(QuiverError::OpenPotentialTerm(display));
            }
            for k in 0..arrows.len() {
                let here = self.arrow(arrows[k]);
                let next = self.arrow(arrows[(k + 1) % arrows.len()]);
                if here.tgt != next.src {
                    return Err(QuiverError::OpenPotentialTerm(display));
                }
            }
            pot.terms.push(PotentialTerm {
                sign,
                arrows: canonical_rotation(&arrows, |ix| &self.arrows[ix.0].id),
            });
        }
        pot.terms.sort();
        self.potential = Some(pot);
        Ok(())
    }

    /// Reads a quiver from either document format, keyed off the first
    /// non-blank byte (`{` selects JSON).
    pub fn parse(input: &str) -> Result<Self, QuiverError> {
        if input.trim_start().starts_with('{') {
            Self::parse_json(input)
        } else {
            Self::parse_text(input)
        }
    }

    pub fn parse_json(input: &str) -> Result<Self, QuiverError> {
        let doc: JsonQuiver =
            serde_json::from_str(input).map_err(|e| QuiverError::Json(e.to_string()))?;
        let mut q = Quiver::new(
            doc.name,
            doc.vertices,
            doc.arrows
                .into_iter()
                .map(|a| (a.id, a.src, a.tgt))
                .collect(),
        )?;
        if let Some(terms) = doc.potential {
            q.set_potential(terms.into_iter().map(|t| (t.sign, t.arrows)).collect())?;
        }
        q.origins = doc.origins;
        Ok(q)
    }

    pub fn parse_text(input: &str) -> Result<Self, QuiverError> {
        #[derive(PartialEq)]
        enum Section {
            Head,
            Potential,
            Origins,
        }
        let syntax = |line: usize, msg: &str| QuiverError::Syntax {
            line,
            msg: msg.to_string(),
        };

        let mut name = None;
        let mut vertices: Vec<String> = Vec::new();
        let mut arrows: Vec<(String, String, String)> = Vec::new();
        let mut terms: Vec<(i8, Vec<String>)> = Vec::new();
        let mut origins = BTreeMap::new();
        let mut section = Section::Head;

        for (n, raw) in input.lines().enumerate() {
            let lineno = n + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("quiver ") {
                name = Some(rest.trim().to_string());
                section = Section::Head;
                continue;
            }
            if section == Section::Head {
                if let Some(rest) = line.strip_prefix("vertices:") {
                    vertices.extend(rest.split_whitespace().map(|s| s.to_string()));
                    continue;
                }
                if let Some(rest) = line.strip_prefix("arrow ") {
                    let (id, spec) = rest
                        .split_once(':')
                        .ok_or_else(|| syntax(lineno, "expected `arrow <id>: <src> -> <tgt>`"))?;
                    let (src, tgt) = spec
                        .split_once("->")
                        .ok_or_else(|| syntax(lineno, "expected `<src> -> <tgt>`"))?;
                    let (id, src, tgt) = (id.trim(), src.trim(), tgt.trim());
                    if id.is_empty() || src.is_empty() || tgt.is_empty() {
                        return Err(syntax(lineno, "empty arrow id or endpoint"));
                    }
                    arrows.push((id.to_string(), src.to_string(), tgt.to_string()));
                    continue;
                }
            }
            if line == "potential:" {
                section = Section::Potential;
                continue;
            }
            if line == "origins:" {
                section = Section::Origins;
                continue;
            }
            match section {
                Section::Potential => {
                    let (sign, rest) = match line.chars().next() {
                        Some('+') => (1, &line[1..]),
                        Some('-') => (-1, &line[1..]),
                        _ => return Err(syntax(lineno, "potential line must start with + or -")),
                    };
                    let ids: Vec<String> =
                        rest.split_whitespace().map(|s| s.to_string()).collect();
                    if ids.is_empty() {
                        return Err(syntax(lineno, "empty potential term"));
                    }
                    terms.push((sign, ids));
                }
                Section::Origins => {
                    let rest = line
                        .strip_prefix("vertex ")
                        .or_else(|| line.strip_prefix("arrow "))
                        .ok_or_else(|| syntax(lineno, "expected `vertex <new> from <old>`"))?;
                    let (new, old) = rest
                        .split_once(" from ")
                        .ok_or_else(|| syntax(lineno, "expected `<new> from <old>`"))?;
                    origins.insert(new.trim().to_string(), old.trim().to_string());
                }
                Section::Head => return Err(syntax(lineno, "unrecognized line")),
            }
        }

        let name = name.ok_or_else(|| syntax(1, "missing `quiver <name>` header"))?;
        let mut q = Quiver::new(name, vertices, arrows)?;
        if !terms.is_empty() {
            q.set_potential(terms)?;
        }
        q.origins = origins;
        Ok(q)
    }

    /// Serializes back to the plain-text document format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("quiver {}\n", self.name));
        out.push_str("vertices:");
        for v in &self.vertices {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.id,
                self.vertex_name(a.src),
                self.vertex_name(a.tgt)
            ));
        }
        if let Some(pot) = &self.potential {
            out.push_str("potential:\n");
            for t in &pot.terms {
                out.push_str(if t.sign >= 0 { "+" } else { "-" });
                for &ix in &t.arrows {
                    out.push_str(&format!(" {}", self.arrows[ix.0].id));
                }
                out.push('\n');
            }
        }
        if !self.origins.is_empty() {
            out.push_str("origins:\n");
            for (new, old) in &self.origins {
                let kind = if self.vertex_ix.contains_key(new) {
                    "vertex"
                } else {
                    "arrow"
                };
                out.push_str(&format!("{kind} {new} from {old}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonQuiver {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| JsonArrow {
                    id: a.id.clone(),
                    src: self.vertex_name(a.src).to_string(),
                    tgt: self.vertex_name(a.tgt).to_string(),
                })
                .collect(),
            potential: self.potential.as_ref().map(|p| {
                p.terms
                    .iter()
                    .map(|t| JsonTerm {
                        sign: t.sign,
                        arrows: t.arrows.iter().map(|&ix| self.arrows[ix.0].id.clone()).collect(),
                    })
                    .collect()
            }),
            origins: self.origins.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("quiver serialization cannot fail")
    }

    /// True when `other` is the same quiver up to renaming of vertices and
    /// arrow ids. Uses backtracking on vertex images with degree pruning,
    /// which is plenty for the quiver sizes this crate works with.
    pub fn is_isomorphic_to(&self, other: &Quiver) -> bool {
        if self.vertex_count() != other.vertex_count()
            || self.arrow_count() != other.arrow_count()
        {
            return false;
        }
        let profile = |q: &Quiver, v: VertexIx| (q.arrows_from(v).len(), q.arrows_into(v).len());
        let mut image: Vec<Option<usize>> = vec![None; self.vertex_count()];
        let mut used = vec![false; other.vertex_count()];

        fn consistent(a: &Quiver, b: &Quiver, image: &[Option<usize>]) -> bool {
            for ar in a.arrows() {
                let ar = a.arrow(ar);
                if let (Some(s), Some(t)) = (image[ar.src.0], image[ar.tgt.0]) {
                    if b.arrow_between(VertexIx(s), VertexIx(t)).is_none() {
                        return false;
                    }
                }
            }
            true
        }

        fn go(
            a: &Quiver,
            b: &Quiver,
            k: usize,
            image: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            profile: &dyn Fn(&Quiver, VertexIx) -> (usize, usize),
        ) -> bool {
            if k == a.vertex_count() {
                return true;
            }
            for cand in 0..b.vertex_count() {
                if used[cand] || profile(a, VertexIx(k)) != profile(b, VertexIx(cand)) {
                    continue;
                }
                image[k] = Some(cand);
                used[cand] = true;
                if consistent(a, b, image) && go(a, b, k + 1, image, used, profile) {
                    return true;
                }
                image[k] = None;
                used[cand] = false;
            }
            false
        }

        go(self, other, 0, &mut image, &mut used, &profile)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} vertices, {} arrows)",
            self.name,
            self.vertex_count(),
            self.arrow_count()
        )
    }
}

/// Rotates a cyclic arrow list so the smallest label (by `key`) comes first.
pub fn canonical_rotation<'a, K: Ord + ?Sized + 'a>(
    arrows: &[ArrowIx],
    key: impl Fn(ArrowIx) -> &'a K,
) -> Vec<ArrowIx> {
    if arrows.is_empty() {
        return Vec::new();
    }
    let start = (0..arrows.len())
        .min_by_key(|&i| key(arrows[i]))
        .expect("nonempty");
    let mut out = Vec::with_capacity(arrows.len());
    out.extend_from_slice(&arrows[start..]);
    out.extend_from_slice(&arrows[..start]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "\
quiver triangle
vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 1
potential:
+ a b c
";

    #[test]
    fn parses_text_document() {
        let q = Quiver::parse(TRIANGLE).unwrap();
        assert_eq!(q.name, "triangle");
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.arrow_count(), 3);
        let pot = q.potential.as_ref().unwrap();
        assert_eq!(pot.terms.len(), 1);
        assert_eq!(pot.terms[0].sign, 1);
    }

    #[test]
    fn text_roundtrip_is_stable() {
        let q = Quiver::parse(TRIANGLE).unwrap();
        let once = q.to_text();
        let twice = Quiver::parse(&once).unwrap().to_text();
        assert_eq!(once, twice);
    }

    #[test]
    fn text_roundtrip_keeps_origins() {
        let mut q = Quiver::parse(TRIANGLE).unwrap();
        q.origins.insert("b".into(), "a".into());
        q.origins.insert("2".into(), "1".into());
        let doc = q.to_text();
        let back = Quiver::parse(&doc).unwrap();
        assert_eq!(back.origins, q.origins);
        assert_eq!(back.to_text(), doc);
    }

    #[test]
    fn json_roundtrip_preserves_structure() {
        let q = Quiver::parse(TRIANGLE).unwrap();
        let j = q.to_json();
        let back = Quiver::parse(&j).unwrap();
        assert!(q.is_isomorphic_to(&back));
        assert_eq!(back.potential, q.potential);
    }

    #[test]
    fn rejects_loop() {
        let err = Quiver::new(
            "bad",
            vec!["1".into()],
            vec![("a".into(), "1".into(), "1".into())],
        )
        .unwrap_err();
        assert!(matches!(err, QuiverError::LoopArrow(_)));
    }

    #[test]
    fn rejects_two_cycle() {
        let err = Quiver::new(
            "bad",
            vec!["1".into(), "2".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "1".into()),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, QuiverError::TwoCycle(_, _)));
    }

    #[test]
    fn rejects_unknown_vertex() {
        let err = Quiver::new(
            "bad",
            vec!["1".into()],
            vec![("a".into(), "1".into(), "9".into())],
        )
        .unwrap_err();
        assert!(matches!(err, QuiverError::UnknownVertex { .. }));
    }

    #[test]
    fn rejects_open_potential_term() {
        let mut q = Quiver::new(
            "bad",
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        let err = q
            .set_potential(vec![(1, vec!["a".into(), "b".into()])])
            .unwrap_err();
        assert!(matches!(err, QuiverError::OpenPotentialTerm(_)));
    }

    #[test]
    fn syntax_error_carries_line_number() {
        let err = Quiver::parse("quiver x\nvertices: 1 2\nnonsense here\n").unwrap_err();
        match err {
            QuiverError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
