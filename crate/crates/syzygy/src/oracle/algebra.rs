//! The quotient of a path algebra by relations, computed through a
//! two-sided noncommutative Groebner basis.
//!
//! Monomials are composable paths ordered by length then by the arrow
//! sequence. The completion processes overlap ambiguities in ascending
//! word order and keeps the basis interreduced; it either terminates
//! with a confluent rewriting system or fails loudly at the word-length
//! cap. The quotient basis is the set of irreducible paths, which is
//! finite exactly when the algebra is finite dimensional.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::oracle::field::Field;
use crate::quiver::{ArrowIx, Quiver, VertexIx};
use crate::potential::Relation;

const WORD_CAP: usize = 40;
const PATH_CAP: usize = 200;

/// A composable path; an empty arrow list is the idempotent at `src`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    pub src: VertexIx,
    pub tgt: VertexIx,
    pub arrows: Vec<ArrowIx>,
}

impl Path {
    pub fn idempotent(v: VertexIx) -> Path {
        Path {
            src: v,
            tgt: v,
            arrows: Vec::new(),
        }
    }

    pub fn of_arrows(q: &Quiver, arrows: &[ArrowIx]) -> Path {
        assert!(!arrows.is_empty(), "empty arrow path needs a vertex");
        for pair in arrows.windows(2) {
            assert_eq!(
                q.arrow(pair[0]).tgt,
                q.arrow(pair[1]).src,
                "path not composable"
            );
        }
        Path {
            src: q.arrow(arrows[0]).src,
            tgt: q.arrow(*arrows.last().expect("nonempty")).tgt,
            arrows: arrows.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertex_name(self.src))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).id.clone())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.src.cmp(&other.src))
    }
}

type Poly<F> = BTreeMap<Path, F>;

#[derive(Debug, thiserror::Error)]
pub enum GroebnerError {
    #[error("completion exceeded the word length cap {0}")]
    WordCap(usize),
    #[error("irreducible paths exceed length {0}; the algebra is not finite dimensional")]
    PathCap(usize),
}

fn add_term<F: Field>(poly: &mut Poly<F>, path: Path, coeff: F) {
    if coeff.is_zero() {
        return;
    }
    match poly.entry(path) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&coeff);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

fn lead<F: Field>(poly: &Poly<F>) -> Option<(&Path, &F)> {
    poly.last_key_value()
}

/// Positions where `lead` occurs as a contiguous subword of `word`.
fn find_subword(word: &[ArrowIx], lead: &[ArrowIx]) -> Option<usize> {
    if lead.len() > word.len() {
        return None;
    }
    (0..=word.len() - lead.len()).find(|&k| &word[k..k + lead.len()] == lead)
}

/// The path algebra of `quiver` modulo the two-sided ideal generated
/// by `relations`, with a confluent rewriting system and the
/// irreducible-path basis.
pub struct Algebra<F> {
    pub quiver: Quiver,
    groebner: Vec<Poly<F>>,
    basis: Vec<Path>,
    index: BTreeMap<Path, usize>,
    by_src: BTreeMap<VertexIx, Vec<usize>>,
    by_pair: BTreeMap<(VertexIx, VertexIx), Vec<usize>>,
    idempotents: BTreeMap<VertexIx, usize>,
}

impl<F: Field> Algebra<F> {
    pub fn new(q: &Quiver, relations: &[Relation]) -> Result<Self, GroebnerError> {
        Self::with_path_cap(q, relations, PATH_CAP)
    }

    /// Like `new`, with an explicit bound on basis path length for
    /// algebras suspected of being infinite-dimensional.
    pub fn with_path_cap(
        q: &Quiver,
        relations: &[Relation],
        path_cap: usize,
    ) -> Result<Self, GroebnerError> {
        let mut polys: Vec<Poly<F>> = Vec::new();
        for rel in relations {
            let mut poly: Poly<F> = BTreeMap::new();
            for (sign, arrows) in &rel.terms {
                let path = Path::of_arrows(q, arrows);
                add_term(&mut poly, path, F::from_i64(*sign as i64));
            }
            if !poly.is_empty() {
                polys.push(poly);
            }
        }
        let groebner = complete(q, polys)?;
        let basis = irreducible_paths(q, &groebner, path_cap)?;
        let index: BTreeMap<Path, usize> =
            basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut by_src: BTreeMap<VertexIx, Vec<usize>> = BTreeMap::new();
        let mut by_pair: BTreeMap<(VertexIx, VertexIx), Vec<usize>> = BTreeMap::new();
        let mut idempotents = BTreeMap::new();
        for (i, p) in basis.iter().enumerate() {
            by_src.entry(p.src).or_default().push(i);
            by_pair.entry((p.src, p.tgt)).or_default().push(i);
            if p.is_empty() {
                idempotents.insert(p.src, i);
            }
        }
        Ok(Algebra {
            quiver: q.clone(),
            groebner,
            basis,
            index,
            by_src,
            by_pair,
            idempotents,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn path(&self, ix: usize) -> &Path {
        &self.basis[ix]
    }

    pub fn basis_from(&self, v: VertexIx) -> &[usize] {
        self.by_src.get(&v).map_or(&[], |v| v.as_slice())
    }

    pub fn basis_between(&self, src: VertexIx, tgt: VertexIx) -> &[usize] {
        self.by_pair.get(&(src, tgt)).map_or(&[], |v| v.as_slice())
    }

    pub fn idempotent(&self, v: VertexIx) -> usize {
        self.idempotents[&v]
    }

    pub fn groebner_leads(&self) -> Vec<&Path> {
        self.groebner
            .iter()
            .map(|g| lead(g).expect("nonzero").0)
            .collect()
    }

    pub fn groebner_basis(&self) -> Vec<Vec<(Path, F)>> {
        self.groebner
            .iter()
            .map(|g| g.iter().map(|(p, c)| (p.clone(), c.clone())).collect())
            .collect()
    }

    /// Normal form of an arbitrary path, in basis coordinates.
    pub fn normal_form(&self, path: &Path) -> Vec<(usize, F)> {
        let mut poly: Poly<F> = BTreeMap::new();
        add_term(&mut poly, path.clone(), F::one());
        reduce(&self.quiver, &mut poly, &self.groebner);
        poly.iter()
            .map(|(p, c)| (self.index[p], c.clone()))
            .collect()
    }

    /// Normal form of `p` followed by one arrow.
    pub fn right_mul_arrow(&self, ix: usize, a: ArrowIx) -> Vec<(usize, F)> {
        let p = &self.basis[ix];
        assert_eq!(p.tgt, self.quiver.arrow(a).src, "not composable");
        let mut arrows = p.arrows.clone();
        arrows.push(a);
        let path = Path {
            src: p.src,
            tgt: self.quiver.arrow(a).tgt,
            arrows,
        };
        self.normal_form(&path)
    }

    /// Normal form of one arrow followed by `p`.
    pub fn left_mul_arrow(&self, a: ArrowIx, ix: usize) -> Vec<(usize, F)> {
        let p = &self.basis[ix];
        assert_eq!(self.quiver.arrow(a).tgt, p.src, "not composable");
        let mut arrows = vec![a];
        arrows.extend_from_slice(&p.arrows);
        let path = Path {
            src: self.quiver.arrow(a).src,
            tgt: p.tgt,
            arrows,
        };
        self.normal_form(&path)
    }

    /// Normal form of the concatenation of two basis paths.
    pub fn product(&self, left: usize, right: usize) -> Vec<(usize, F)> {
        let p = &self.basis[left];
        let r = &self.basis[right];
        assert_eq!(p.tgt, r.src, "not composable");
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&r.arrows);
        let path = Path {
            src: p.src,
            tgt: r.tgt,
            arrows,
        };
        self.normal_form(&path)
    }
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {})", self.basis.len())
    }
}

fn reduce<F: Field>(q: &Quiver, poly: &mut Poly<F>, basis: &[Poly<F>]) {
    let _ = q;
    loop {
        let mut rewrite: Option<(Path, F, usize, usize)> = None;
        'outer: for (path, coeff) in poly.iter().rev() {
            for (gi, g) in basis.iter().enumerate() {
                let Some((glead, _)) = lead(g) else { continue };
                if let Some(pos) = find_subword(&path.arrows, &glead.arrows) {
                    rewrite = Some((path.clone(), coeff.clone(), gi, pos));
                    break 'outer;
                }
            }
        }
        let Some((path, coeff, gi, pos)) = rewrite else {
            return;
        };
        poly.remove(&path);
        let g = &basis[gi];
        let (glead, glc) = lead(g).expect("nonzero");
        let glen = glead.arrows.len();
        let scale = coeff.div(glc).neg();
        for (tpath, tcoeff) in g.iter() {
            if tpath == glead {
                continue;
            }
            let mut arrows = Vec::with_capacity(path.arrows.len() - glen + tpath.arrows.len());
            arrows.extend_from_slice(&path.arrows[..pos]);
            arrows.extend_from_slice(&tpath.arrows);
            arrows.extend_from_slice(&path.arrows[pos + glen..]);
            let replaced = if arrows.is_empty() {
                Path::idempotent(path.src)
            } else {
                Path {
                    src: path.src,
                    tgt: path.tgt,
                    arrows,
                }
            };
            add_term(poly, replaced, scale.mul(tcoeff));
        }
    }
}

fn make_monic<F: Field>(poly: &mut Poly<F>) {
    let Some((_, lc)) = lead(poly) else { return };
    let inv = lc.inv();
    for coeff in poly.values_mut() {
        *coeff = coeff.mul(&inv);
    }
}

fn complete<F: Field>(q: &Quiver, input: Vec<Poly<F>>) -> Result<Vec<Poly<F>>, GroebnerError> {
    let mut basis: Vec<Poly<F>> = Vec::new();
    let mut queue: Vec<Poly<F>> = input;

    loop {
        let mut progressed = false;
        while let Some(mut cand) = queue.pop() {
            reduce(q, &mut cand, &basis);
            if cand.is_empty() {
                continue;
            }
            make_monic(&mut cand);
            if lead(&cand).expect("nonzero").0.arrows.len() > WORD_CAP {
                return Err(GroebnerError::WordCap(WORD_CAP));
            }
            basis.push(cand);
            progressed = true;
        }
        if !progressed {
            break;
        }

        interreduce(q, &mut basis);

        let mut spolys: Vec<Poly<F>> = Vec::new();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                spolys.extend(overlap_spolys(q, &basis[i], &basis[j]));
            }
        }
        for mut s in spolys {
            reduce(q, &mut s, &basis);
            if !s.is_empty() {
                queue.push(s);
            }
        }
        if queue.is_empty() {
            break;
        }
    }
    basis.sort_by(|a, b| lead(a).expect("nonzero").0.cmp(lead(b).expect("nonzero").0));
    Ok(basis)
}

fn interreduce<F: Field>(q: &Quiver, basis: &mut Vec<Poly<F>>) {
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let taken = basis[i].clone();
            let others: Vec<Poly<F>> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let mut reduced = taken.clone();
            reduce(q, &mut reduced, &others);
            make_monic(&mut reduced);
            if reduced != taken {
                changed = true;
                basis[i] = reduced;
            }
        }
        basis.retain(|g| !g.is_empty());
        if !changed {
            return;
        }
    }
}

/// S-polynomials from proper overlaps: a suffix of `g`'s lead equals a
/// prefix of `h`'s lead.
fn overlap_spolys<F: Field>(q: &Quiver, g: &Poly<F>, h: &Poly<F>) -> Vec<Poly<F>> {
    let (gl, glc) = lead(g).expect("nonzero");
    let (hl, hlc) = lead(h).expect("nonzero");
    let gw = &gl.arrows;
    let hw = &hl.arrows;
    let mut out = Vec::new();
    for k in 1..gw.len().min(hw.len()) {
        if gw[gw.len() - k..] != hw[..k] {
            continue;
        }
        if gw.len() + hw.len() - k > WORD_CAP {
            continue;
        }
        let suffix = &hw[k..];
        let prefix = &gw[..gw.len() - k];
        let mut s: Poly<F> = BTreeMap::new();
        let ginv = glc.inv();
        for (tp, tc) in g.iter() {
            let mut arrows = tp.arrows.clone();
            arrows.extend_from_slice(suffix);
            let path = if arrows.is_empty() {
                Path::idempotent(tp.src)
            } else {
                Path {
                    src: tp.src,
                    tgt: if suffix.is_empty() {
                        tp.tgt
                    } else {
                        q.arrow(*suffix.last().expect("nonempty")).tgt
                    },
                    arrows,
                }
            };
            add_term(&mut s, path, tc.mul(&ginv));
        }
        let hinv = hlc.inv().neg();
        for (tp, tc) in h.iter() {
            let mut arrows = prefix.to_vec();
            arrows.extend_from_slice(&tp.arrows);
            let path = if arrows.is_empty() {
                Path::idempotent(tp.src)
            } else {
                Path {
                    src: if prefix.is_empty() {
                        tp.src
                    } else {
                        q.arrow(prefix[0]).src
                    },
                    tgt: tp.tgt,
                    arrows,
                }
            };
            add_term(&mut s, path, tc.mul(&hinv));
        }
        out.push(s);
    }
    out
}

fn irreducible_paths<F: Field>(
    q: &Quiver,
    groebner: &[Poly<F>],
    path_cap: usize,
) -> Result<Vec<Path>, GroebnerError> {
    let leads: Vec<Vec<ArrowIx>> = groebner
        .iter()
        .map(|g| lead(g).expect("nonzero").0.arrows.clone())
        .collect();
    let reducible_suffix = |arrows: &[ArrowIx]| -> bool {
        leads
            .iter()
            .any(|l| l.len() <= arrows.len() && arrows[arrows.len() - l.len()..] == l[..])
    };

    let mut out: Vec<Path> = Vec::new();
    let mut frontier: Vec<Path> = q.vertices().map(Path::idempotent).collect();
    while !frontier.is_empty() {
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            if p.len() >= path_cap {
                return Err(GroebnerError::PathCap(path_cap));
            }
            for a in q.arrows_from(p.tgt) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                if reducible_suffix(&arrows) {
                    continue;
                }
                next.push(Path {
                    src: p.src,
                    tgt: q.arrow(a).tgt,
                    arrows,
                });
            }
        }
        frontier = next;
    }
    out.sort();
    Ok(out)
}
