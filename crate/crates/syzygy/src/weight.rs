//! Cycle paths of boundary arrows and the induced weight function.
//!
//! The cycle path of a boundary arrow walks around its chordless cycle,
//! crossing to the neighbouring cycle at every interior arrow, and stops
//! after the first boundary arrow it traverses. Its weight is 1 when the
//! path has odd length and 2 when even; the weights of all boundary
//! arrows sum to twice the polygon size of the geometric model.

use std::collections::BTreeMap;

use crate::cycles::{ArrowKind, CycleData};
use crate::quiver::{ArrowIx, Quiver};

/// The cycle path of a boundary arrow, starting with the arrow itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePath {
    pub arrows: Vec<ArrowIx>,
}

impl CyclePath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn weight(&self) -> usize {
        if self.len() % 2 == 1 {
            1
        } else {
            2
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).id.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("arrow `{0}` is not a boundary arrow")]
    NotBoundary(String),
    #[error("cycle path starting at `{0}` did not terminate; quiver is not a dimer tree")]
    WalkDidNotTerminate(String),
    #[error("total boundary weight {0} is odd; expected twice a polygon size")]
    OddTotal(usize),
}

fn walk(
    q: &Quiver,
    data: &CycleData,
    start: ArrowIx,
    reflect_at: Option<ArrowIx>,
) -> Result<CyclePath, WeightError> {
    if data.arrow_kind(start) != Some(ArrowKind::Boundary) {
        return Err(WeightError::NotBoundary(q.arrow(start).id.clone()));
    }
    let mut cycle = data.cycles_through(start)[0];
    let mut arrows = vec![start];
    let cap = 2 * q.arrow_count() + 2;
    loop {
        let next = data.cycles[cycle].successor_of(q, *arrows.last().unwrap());
        arrows.push(next);
        if Some(next) == reflect_at {
            continue;
        }
        match data.arrow_kind(next) {
            Some(ArrowKind::Boundary) => return Ok(CyclePath { arrows }),
            Some(ArrowKind::Interior) => {
                cycle = data
                    .other_cycle(next, cycle)
                    .expect("interior arrow lies on two cycles");
            }
            None => return Err(WeightError::NotBoundary(q.arrow(next).id.clone())),
        }
        if arrows.len() > cap {
            return Err(WeightError::WalkDidNotTerminate(q.arrow(start).id.clone()));
        }
    }
}

/// The cycle path of boundary arrow `alpha`.
pub fn cycle_path(q: &Quiver, data: &CycleData, alpha: ArrowIx) -> Result<CyclePath, WeightError> {
    walk(q, data, alpha, None)
}

/// The cycle path of `beta` in the one-sided model: the walk passes
/// straight through the glue arrow, staying in the glue arrow's cycle,
/// instead of stopping there.
pub fn skew_cycle_path(
    q: &Quiver,
    data: &CycleData,
    glue: ArrowIx,
    beta: ArrowIx,
) -> Result<CyclePath, WeightError> {
    walk(q, data, beta, Some(glue))
}

/// Weights of every boundary arrow, plus the total.
#[derive(Debug, Clone)]
pub struct WeightTable {
    pub paths: BTreeMap<ArrowIx, CyclePath>,
    pub total: usize,
}

impl WeightTable {
    pub fn weight(&self, a: ArrowIx) -> Option<usize> {
        self.paths.get(&a).map(|p| p.weight())
    }

    /// The polygon size `n` with total weight `2n`.
    pub fn polygon_size(&self) -> Result<usize, WeightError> {
        if !self.total.is_multiple_of(2) {
            return Err(WeightError::OddTotal(self.total));
        }
        Ok(self.total / 2)
    }
}

/// Computes the cycle path of every boundary arrow of a dimer tree.
pub fn weights(q: &Quiver, data: &CycleData) -> Result<WeightTable, WeightError> {
    let mut paths = BTreeMap::new();
    let mut total = 0;
    for a in data.boundary_arrows(q) {
        let p = cycle_path(q, data, a)?;
        total += p.weight();
        paths.insert(a, p);
    }
    Ok(WeightTable { paths, total })
}

/// Computes the one-sided cycle path of every boundary arrow other than
/// the glue arrow. The total equals the punctured polygon size.
pub fn skew_weights(
    q: &Quiver,
    data: &CycleData,
    glue: ArrowIx,
) -> Result<WeightTable, WeightError> {
    let mut paths = BTreeMap::new();
    let mut total = 0;
    for a in data.boundary_arrows(q) {
        if a == glue {
            continue;
        }
        let p = skew_cycle_path(q, data, glue, a)?;
        total += p.weight();
        paths.insert(a, p);
    }
    Ok(WeightTable { paths, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn weight_by_name(q: &Quiver, table: &WeightTable, id: &str) -> usize {
        table.weight(q.arrow_by_name(id).unwrap()).unwrap()
    }

    #[test]
    fn two_triangles_weights() {
        let q = Quiver::parse(
            "quiver two-triangles\nvertices: a b c d\narrow s: a -> b\narrow bc: b -> c\narrow ca: c -> a\narrow bd: b -> d\narrow da: d -> a\n",
        )
        .unwrap();
        let data = CycleData::new(&q);
        let table = weights(&q, &data).unwrap();
        assert_eq!(weight_by_name(&q, &table, "bc"), 2);
        assert_eq!(weight_by_name(&q, &table, "ca"), 1);
        assert_eq!(weight_by_name(&q, &table, "bd"), 2);
        assert_eq!(weight_by_name(&q, &table, "da"), 1);
        assert_eq!(table.total, 6);
        assert_eq!(table.polygon_size().unwrap(), 3);
    }

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

    #[test]
    fn half_five_plain_weights() {
        let q = Quiver::parse(HALF_FIVE).unwrap();
        let data = CycleData::new(&q);
        let table = weights(&q, &data).unwrap();
        assert_eq!(table.total, 8);
        assert_eq!(weight_by_name(&q, &table, "alpha"), 1);
        assert_eq!(weight_by_name(&q, &table, "a43"), 1);
        assert_eq!(weight_by_name(&q, &table, "a35"), 2);
        assert_eq!(weight_by_name(&q, &table, "a52"), 2);
        assert_eq!(weight_by_name(&q, &table, "a14"), 2);
    }

    #[test]
    fn half_five_skew_weights() {
        let q = Quiver::parse(HALF_FIVE).unwrap();
        let data = CycleData::new(&q);
        let glue = q.arrow_by_name("alpha").unwrap();
        let table = skew_weights(&q, &data, glue).unwrap();
        assert_eq!(weight_by_name(&q, &table, "a14"), 2);
        assert_eq!(weight_by_name(&q, &table, "a43"), 1);
        assert_eq!(weight_by_name(&q, &table, "a35"), 2);
        assert_eq!(weight_by_name(&q, &table, "a52"), 2);
        assert_eq!(table.total, 7);

        let path = skew_cycle_path(&q, &data, glue, q.arrow_by_name("a43").unwrap()).unwrap();
        assert_eq!(path.display(&q), "a43 a31 alpha a23 a35");
    }

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
    fn half_seven_skew_weights() {
        let q = Quiver::parse(HALF_SEVEN).unwrap();
        let data = CycleData::new(&q);
        assert_eq!(data.cycles.len(), 4);
        let glue = q.arrow_by_name("alpha").unwrap();
        let table = skew_weights(&q, &data, glue).unwrap();
        assert_eq!(weight_by_name(&q, &table, "a74"), 1);
        assert_eq!(weight_by_name(&q, &table, "a34"), 1);
        assert_eq!(weight_by_name(&q, &table, "a35"), 1);
        assert_eq!(weight_by_name(&q, &table, "a65"), 2);
        assert_eq!(weight_by_name(&q, &table, "a17"), 2);
        assert_eq!(weight_by_name(&q, &table, "a26"), 2);
        assert_eq!(table.total, 9);
    }

    #[test]
    fn glued_eight_weights() {
        let q = Quiver::parse(
            "quiver glued-eight\nvertices: 1 2 3 4 5 3p 4p 5p\narrow a43: 4 -> 3\narrow a31: 3 -> 1\narrow a35: 3 -> 5\narrow a52: 5 -> 2\narrow a14: 1 -> 4\narrow alpha: 1 -> 2\narrow a23: 2 -> 3\narrow b43: 4p -> 3p\narrow b31: 3p -> 1\narrow b35: 3p -> 5p\narrow b52: 5p -> 2\narrow b14: 1 -> 4p\narrow b23: 2 -> 3p\n",
        )
        .unwrap();
        let data = CycleData::new(&q);
        let table = weights(&q, &data).unwrap();
        assert_eq!(weight_by_name(&q, &table, "a43"), 1);
        assert_eq!(weight_by_name(&q, &table, "a35"), 2);
        assert_eq!(weight_by_name(&q, &table, "a52"), 2);
        assert_eq!(weight_by_name(&q, &table, "a14"), 2);
        assert_eq!(weight_by_name(&q, &table, "b43"), 1);
        assert_eq!(table.total, 14);
        assert_eq!(table.polygon_size().unwrap(), 7);

        let path = cycle_path(&q, &data, q.arrow_by_name("a43").unwrap()).unwrap();
        assert_eq!(path.display(&q), "a43 a31 alpha b23 b35");
    }
}
