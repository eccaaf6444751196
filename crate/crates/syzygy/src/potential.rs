//! Potentials on dimer tree quivers and their cyclic derivatives.
//!
//! The canonical potential sums every chordless cycle with sign
//! `(-1)^d`, where `d` is the cycle's distance in the dual tree from a
//! root cycle containing exactly one interior arrow. Quivers whose dual
//! graph is not a tree (skew quivers, flower shapes) instead take the
//! uniform potential that sums every chordless cycle with `+1`.

use crate::cycles::{ArrowKind, CycleData};
use crate::quiver::{ArrowIx, Potential, PotentialTerm, Quiver};

#[derive(Debug, thiserror::Error)]
pub enum PotentialError {
    #[error("quiver has no chordless cycles")]
    NoCycles,
    #[error("no root candidate: no cycle has exactly one interior arrow")]
    NoRoot,
    #[error("cycle adjacency is disconnected; quiver is not a dimer tree")]
    Disconnected,
}

/// Picks the root cycle: the first cycle in canonical order that contains
/// exactly one interior arrow, or the unique cycle when there is only one.
pub fn root_cycle(data: &CycleData) -> Result<usize, PotentialError> {
    if data.cycles.is_empty() {
        return Err(PotentialError::NoCycles);
    }
    if data.cycles.len() == 1 {
        return Ok(0);
    }
    data.cycles
        .iter()
        .position(|c| {
            c.arrows
                .iter()
                .filter(|&&a| data.arrow_kind(a) == Some(ArrowKind::Interior))
                .count()
                == 1
        })
        .ok_or(PotentialError::NoRoot)
}

/// The alternating-sign potential of a dimer tree quiver.
pub fn canonical_potential(q: &Quiver, data: &CycleData) -> Result<Potential, PotentialError> {
    let root = root_cycle(data)?;
    let dist = data.cycle_distances(q, root);
    let mut terms = Vec::with_capacity(data.cycles.len());
    for (i, c) in data.cycles.iter().enumerate() {
        let d = dist[i].ok_or(PotentialError::Disconnected)?;
        terms.push(PotentialTerm {
            sign: if d % 2 == 0 { 1 } else { -1 },
            arrows: c.arrows.clone(),
        });
    }
    terms.sort();
    Ok(Potential { terms })
}

/// The potential a quiver document stands for: an embedded potential
/// wins, dimer trees take the canonical alternating potential, and
/// anything else the uniform one.
pub fn effective_potential(q: &Quiver, data: &CycleData) -> Result<Potential, PotentialError> {
    if let Some(pot) = &q.potential {
        return Ok(pot.clone());
    }
    if crate::cycles::validate(q).is_dimer_tree() {
        canonical_potential(q, data)
    } else {
        Ok(uniform_potential(data))
    }
}

/// The potential that sums every chordless cycle with coefficient `+1`.
pub fn uniform_potential(data: &CycleData) -> Potential {
    let mut terms: Vec<PotentialTerm> = data
        .cycles
        .iter()
        .map(|c| PotentialTerm {
            sign: 1,
            arrows: c.arrows.clone(),
        })
        .collect();
    terms.sort();
    Potential { terms }
}

/// One Jacobian relation: a signed sum of paths, each path a composable
/// arrow sequence read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// The arrow whose cyclic derivative produced this relation.
    pub arrow: ArrowIx,
    pub terms: Vec<(i8, Vec<ArrowIx>)>,
}

/// The cyclic derivative of `pot` with respect to `arrow`: for every
/// occurrence of the arrow in a term, the cyclic rotation starting right
/// after that occurrence.
pub fn cyclic_derivative(pot: &Potential, arrow: ArrowIx) -> Vec<(i8, Vec<ArrowIx>)> {
    let mut out = Vec::new();
    for term in &pot.terms {
        for (p, &a) in term.arrows.iter().enumerate() {
            if a != arrow {
                continue;
            }
            let k = term.arrows.len();
            let path: Vec<ArrowIx> = (1..k).map(|i| term.arrows[(p + i) % k]).collect();
            out.push((term.sign, path));
        }
    }
    out
}

/// All Jacobian relations of `(q, pot)`, one per arrow with a nonempty
/// derivative, in arrow order.
pub fn jacobian_relations(q: &Quiver, pot: &Potential) -> Vec<Relation> {
    q.arrows()
        .filter_map(|a| {
            let terms = cyclic_derivative(pot, a);
            (!terms.is_empty()).then_some(Relation { arrow: a, terms })
        })
        .collect()
}

/// Checks the seam structure of a potential: every arrow lying on exactly
/// two chordless cycles sees them with opposite signs.
pub fn alternates_on_interior_arrows(q: &Quiver, data: &CycleData, pot: &Potential) -> bool {
    let sign_of = |cycle_arrows: &[ArrowIx]| -> Option<i8> {
        pot.terms
            .iter()
            .find(|t| t.arrows == cycle_arrows)
            .map(|t| t.sign)
    };
    q.arrows().all(|a| {
        let through = data.cycles_through(a);
        if through.len() != 2 {
            return true;
        }
        match (
            sign_of(&data.cycles[through[0]].arrows),
            sign_of(&data.cycles[through[1]].arrows),
        ) {
            (Some(s0), Some(s1)) => s0 == -s1,
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn two_triangles() -> Quiver {
        Quiver::parse(
            "quiver two-triangles\nvertices: a b c d\narrow s: a -> b\narrow bc: b -> c\narrow ca: c -> a\narrow bd: b -> d\narrow da: d -> a\n",
        )
        .unwrap()
    }

    #[test]
    fn two_triangles_signs_alternate() {
        let q = two_triangles();
        let data = CycleData::new(&q);
        let pot = canonical_potential(&q, &data).unwrap();
        assert_eq!(pot.terms.len(), 2);
        assert_eq!(pot.terms[0].sign + pot.terms[1].sign, 0);
        assert!(alternates_on_interior_arrows(&q, &data, &pot));
    }

    #[test]
    fn shared_arrow_derivative_is_difference_of_paths() {
        let q = two_triangles();
        let data = CycleData::new(&q);
        let pot = canonical_potential(&q, &data).unwrap();
        let s = q.arrow_by_name("s").unwrap();
        let mut terms = cyclic_derivative(&pot, s);
        terms.sort();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].0 + terms[1].0, 0);
        let paths: Vec<Vec<&str>> = terms
            .iter()
            .map(|(_, p)| p.iter().map(|&a| q.arrow(a).id.as_str()).collect())
            .collect();
        assert!(paths.contains(&vec!["bc", "ca"]));
        assert!(paths.contains(&vec!["bd", "da"]));
    }

    #[test]
    fn derivative_paths_are_composable() {
        let q = two_triangles();
        let data = CycleData::new(&q);
        let pot = canonical_potential(&q, &data).unwrap();
        for a in q.arrows() {
            for (_, path) in cyclic_derivative(&pot, a) {
                for w in path.windows(2) {
                    assert_eq!(q.arrow(w[0]).tgt, q.arrow(w[1]).src);
                }
                if let (Some(first), Some(last)) = (path.first(), path.last()) {
                    assert_eq!(q.arrow(*first).src, q.arrow(a).tgt);
                    assert_eq!(q.arrow(*last).tgt, q.arrow(a).src);
                }
            }
        }
    }

    #[test]
    fn uniform_potential_takes_every_cycle_positively() {
        let q = two_triangles();
        let data = CycleData::new(&q);
        let pot = uniform_potential(&data);
        assert_eq!(pot.terms.len(), 2);
        assert!(pot.terms.iter().all(|t| t.sign == 1));
    }

    #[test]
    fn single_cycle_quiver_has_positive_potential() {
        let q = Quiver::parse(
            "quiver t\nvertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n",
        )
        .unwrap();
        let data = CycleData::new(&q);
        let pot = canonical_potential(&q, &data).unwrap();
        assert_eq!(pot.terms.len(), 1);
        assert_eq!(pot.terms[0].sign, 1);
    }
}
