//! Finite dimensional right modules over an `Algebra`, with the
//! functors the verification layer needs: radical, projective cover,
//! syzygy, hom spaces, stable homs, the transpose-dual translate, and
//! isomorphism testing.
//!
//! A module assigns to every vertex a based vector space and to every
//! arrow `a: s -> t` a matrix acting on row vectors, so path action is
//! left-to-right matrix composition.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use crate::gaction::SigmaAction;
use crate::oracle::algebra::Algebra;
use crate::oracle::field::Field;
use crate::oracle::linalg::Matrix;
use crate::quiver::VertexIx;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Module<F> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> Module<F> {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_at(&self, v: VertexIx) -> usize {
        self.dims[v.0]
    }
}

/// A homomorphism, one matrix per vertex acting on row vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleMap<F> {
    pub maps: Vec<Matrix<F>>,
}

/// A projective cover `P -> M` together with its top multiplicities.
pub struct Cover<F> {
    pub summands: Vec<VertexIx>,
    pub module: Module<F>,
    pub map: ModuleMap<F>,
    offsets: Vec<Vec<usize>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ModuleError {
    #[error("syzygies vanished after {0} steps; the module has finite projective dimension")]
    Vanished(usize),
    #[error("no syzygy period up to {0}")]
    NotPeriodic(usize),
}

impl<F: Field> Algebra<F> {
    pub fn zero_module(&self) -> Module<F> {
        let nv = self.quiver.vertex_count();
        Module {
            dims: vec![0; nv],
            maps: (0..self.quiver.arrow_count())
                .map(|_| Matrix::zero(0, 0))
                .collect(),
        }
    }

    pub fn simple(&self, v: VertexIx) -> Module<F> {
        let mut dims = vec![0; self.quiver.vertex_count()];
        dims[v.0] = 1;
        let maps = self
            .quiver
            .arrows()
            .map(|a| {
                let arrow = self.quiver.arrow(a);
                Matrix::zero(dims[arrow.src.0], dims[arrow.tgt.0])
            })
            .collect();
        Module { dims, maps }
    }

    /// The indecomposable projective `P(v)`, based on the irreducible
    /// paths out of `v`.
    pub fn projective(&self, v: VertexIx) -> Module<F> {
        let nv = self.quiver.vertex_count();
        let mut dims = vec![0; nv];
        let mut position: BTreeMap<usize, usize> = BTreeMap::new();
        for w in self.quiver.vertices() {
            let block = self.basis_between(v, w);
            dims[w.0] = block.len();
            for (pos, &bi) in block.iter().enumerate() {
                position.insert(bi, pos);
            }
        }
        let maps = self
            .quiver
            .arrows()
            .map(|a| {
                let arrow = self.quiver.arrow(a).clone();
                let mut mat = Matrix::zero(dims[arrow.src.0], dims[arrow.tgt.0]);
                for (row, &bi) in self.basis_between(v, arrow.src).iter().enumerate() {
                    for (ix, c) in self.right_mul_arrow(bi, a) {
                        *mat.at_mut(row, position[&ix]) = c;
                    }
                }
                mat
            })
            .collect();
        Module { dims, maps }
    }

    pub fn direct_sum(&self, parts: &[&Module<F>]) -> Module<F> {
        let nv = self.quiver.vertex_count();
        let mut dims = vec![0; nv];
        for p in parts {
            for v in 0..nv {
                dims[v] += p.dims[v];
            }
        }
        let maps = self
            .quiver
            .arrows()
            .map(|a| {
                let arrow = self.quiver.arrow(a);
                let mut mat = Matrix::zero(dims[arrow.src.0], dims[arrow.tgt.0]);
                let mut roff = 0;
                let mut coff = 0;
                for p in parts {
                    let block = &p.maps[a.0];
                    for r in 0..block.rows {
                        for c in 0..block.cols {
                            *mat.at_mut(roff + r, coff + c) = block.at(r, c).clone();
                        }
                    }
                    roff += p.dims[arrow.src.0];
                    coff += p.dims[arrow.tgt.0];
                }
                mat
            })
            .collect();
        Module { dims, maps }
    }

    /// Shape check plus every Groebner relation acting as zero.
    pub fn check_module(&self, m: &Module<F>) -> Result<(), String> {
        if m.dims.len() != self.quiver.vertex_count() || m.maps.len() != self.quiver.arrow_count()
        {
            return Err("vertex or arrow count mismatch".into());
        }
        for a in self.quiver.arrows() {
            let arrow = self.quiver.arrow(a);
            let mat = &m.maps[a.0];
            if mat.rows != m.dims[arrow.src.0] || mat.cols != m.dims[arrow.tgt.0] {
                return Err(format!("map for arrow {} has the wrong shape", arrow.id));
            }
        }
        for terms in self.groebner_basis() {
            let (p0, _) = &terms[0];
            let rows = m.dims[p0.src.0];
            let cols = m.dims[p0.tgt.0];
            let mut sum: Matrix<F> = Matrix::zero(rows, cols);
            for (path, coeff) in &terms {
                let mut acting = Matrix::identity(rows);
                for &arrow in &path.arrows {
                    acting = acting.mul(&m.maps[arrow.0]);
                }
                for r in 0..rows {
                    for c in 0..cols {
                        let add = coeff.mul(acting.at(r, c));
                        *sum.at_mut(r, c) = sum.at(r, c).add(&add);
                    }
                }
            }
            if !sum.is_zero_matrix() {
                return Err("a defining relation acts nontrivially".into());
            }
        }
        Ok(())
    }

    /// Row spans of `rad M` at every vertex: the images of all arrow
    /// actions into the vertex.
    fn radical_spans(&self, m: &Module<F>) -> Vec<Matrix<F>> {
        (0..self.quiver.vertex_count())
            .map(|v| {
                let mut stacked = Matrix::zero(0, m.dims[v]);
                for a in self.quiver.arrows_into(VertexIx(v)) {
                    let image = m.maps[a.0].row_basis();
                    stacked = Matrix::vstack(&stacked, &image);
                }
                stacked.row_basis()
            })
            .collect()
    }

    /// The submodule spanned rowwise by `spans`, with its embedding.
    /// The spans must be arrow-closed row bases.
    fn submodule(&self, m: &Module<F>, spans: Vec<Matrix<F>>) -> (Module<F>, ModuleMap<F>) {
        let dims: Vec<usize> = spans.iter().map(|s| s.rows).collect();
        let maps = self
            .quiver
            .arrows()
            .map(|a| {
                let arrow = self.quiver.arrow(a);
                let pushed = spans[arrow.src.0].mul(&m.maps[a.0]);
                spans[arrow.tgt.0]
                    .solve_left(&pushed)
                    .expect("spans are arrow-closed")
            })
            .collect();
        (Module { dims, maps }, ModuleMap { maps: spans })
    }

    pub fn radical(&self, m: &Module<F>) -> Module<F> {
        let spans = self.radical_spans(m);
        self.submodule(m, spans).0
    }

    /// The projective cover, built from standard-basis lifts of the top.
    pub fn cover(&self, m: &Module<F>) -> Cover<F> {
        let rad = self.radical_spans(m);
        let mut summands: Vec<VertexIx> = Vec::new();
        let mut lifts: Vec<(VertexIx, Vec<F>)> = Vec::new();
        for v in self.quiver.vertices() {
            let mut seen = rad[v.0].clone();
            for i in 0..m.dims[v.0] {
                let mut unit = vec![F::zero(); m.dims[v.0]];
                unit[i] = F::one();
                let extended = Matrix::vstack(&seen, &Matrix::from_rows(vec![unit.clone()]));
                if extended.rank() > seen.rank() {
                    summands.push(v);
                    lifts.push((v, unit));
                    seen = extended.row_basis();
                }
            }
        }
        let (module, offsets) = self.projective_sum(&summands);
        let map = ModuleMap {
            maps: self
                .quiver
                .vertices()
                .map(|w| {
                    let mut mat = Matrix::zero(module.dims[w.0], m.dims[w.0]);
                    for (u, (g, lift)) in lifts.iter().enumerate() {
                        for (pos, &bi) in self.basis_between(*g, w).iter().enumerate() {
                            let mut row = lift.clone();
                            for &arrow in &self.path(bi).arrows {
                                row = m.maps[arrow.0].apply_row(&row);
                            }
                            for (c, val) in row.into_iter().enumerate() {
                                *mat.at_mut(offsets[u][w.0] + pos, c) = val;
                            }
                        }
                    }
                    mat
                })
                .collect(),
        };
        Cover {
            summands,
            module,
            map,
            offsets,
        }
    }

    fn projective_sum(&self, summands: &[VertexIx]) -> (Module<F>, Vec<Vec<usize>>) {
        let parts: Vec<Module<F>> = summands.iter().map(|&v| self.projective(v)).collect();
        let refs: Vec<&Module<F>> = parts.iter().collect();
        let module = self.direct_sum(&refs);
        let nv = self.quiver.vertex_count();
        let mut offsets = vec![vec![0usize; nv]; summands.len()];
        for w in 0..nv {
            let mut off = 0;
            for (u, part) in parts.iter().enumerate() {
                offsets[u][w] = off;
                off += part.dims[w];
            }
        }
        (module, offsets)
    }

    fn kernel_module(&self, ambient: &Module<F>, map: &ModuleMap<F>) -> Module<F> {
        let spans: Vec<Matrix<F>> = (0..self.quiver.vertex_count())
            .map(|v| {
                let k = map.maps[v].left_kernel();
                if k.rows == 0 {
                    Matrix::zero(0, ambient.dims[v])
                } else {
                    k
                }
            })
            .collect();
        self.submodule(ambient, spans).0
    }

    pub fn syzygy(&self, m: &Module<F>) -> Module<F> {
        let cover = self.cover(m);
        self.kernel_module(&cover.module, &cover.map)
    }

    /// Cover summand lists along a projective resolution:
    /// entry `k` covers the `k`-th syzygy of `m`.
    pub fn resolution_tops(&self, m: &Module<F>, steps: usize) -> Vec<Vec<VertexIx>> {
        let mut out = Vec::with_capacity(steps);
        let mut current = m.clone();
        for _ in 0..steps {
            let cover = self.cover(&current);
            out.push(cover.summands.clone());
            current = self.kernel_module(&cover.module, &cover.map);
        }
        out
    }

    /// A basis of `Hom(M, N)`: solutions of the intertwining equations
    /// `M_a F_t = F_s N_a` over all arrows.
    pub fn hom_basis(&self, m: &Module<F>, n: &Module<F>) -> Vec<ModuleMap<F>> {
        let nv = self.quiver.vertex_count();
        let mut uoff = vec![0usize; nv + 1];
        for v in 0..nv {
            uoff[v + 1] = uoff[v] + m.dims[v] * n.dims[v];
        }
        let unknowns = uoff[nv];
        let mut eoff = Vec::with_capacity(self.quiver.arrow_count() + 1);
        eoff.push(0usize);
        for a in self.quiver.arrows() {
            let arrow = self.quiver.arrow(a);
            eoff.push(eoff.last().unwrap() + m.dims[arrow.src.0] * n.dims[arrow.tgt.0]);
        }
        let equations = *eoff.last().unwrap();

        let mut system: Matrix<F> = Matrix::zero(unknowns, equations);
        for a in self.quiver.arrows() {
            let arrow = self.quiver.arrow(a);
            let (s, t) = (arrow.src.0, arrow.tgt.0);
            let ma = &m.maps[a.0];
            let na = &n.maps[a.0];
            for i in 0..m.dims[s] {
                for l in 0..n.dims[t] {
                    let col = eoff[a.0] + i * n.dims[t] + l;
                    for k in 0..m.dims[t] {
                        let coeff = ma.at(i, k);
                        if !coeff.is_zero() {
                            let row = uoff[t] + k * n.dims[t] + l;
                            *system.at_mut(row, col) = system.at(row, col).add(coeff);
                        }
                    }
                    for j in 0..n.dims[s] {
                        let coeff = na.at(j, l);
                        if !coeff.is_zero() {
                            let row = uoff[s] + i * n.dims[s] + j;
                            *system.at_mut(row, col) = system.at(row, col).sub(coeff);
                        }
                    }
                }
            }
        }

        let kernel = system.left_kernel();
        (0..kernel.rows)
            .map(|r| {
                let flat = kernel.row(r);
                let maps = (0..nv)
                    .map(|v| {
                        let mut mat = Matrix::zero(m.dims[v], n.dims[v]);
                        for i in 0..m.dims[v] {
                            for j in 0..n.dims[v] {
                                *mat.at_mut(i, j) = flat[uoff[v] + i * n.dims[v] + j].clone();
                            }
                        }
                        mat
                    })
                    .collect();
                ModuleMap { maps }
            })
            .collect()
    }

    pub fn hom_dim(&self, m: &Module<F>, n: &Module<F>) -> usize {
        self.hom_basis(m, n).len()
    }

    fn flatten_map(&self, m: &Module<F>, n: &Module<F>, f: &ModuleMap<F>) -> Vec<F> {
        let mut out = Vec::new();
        for v in 0..self.quiver.vertex_count() {
            for i in 0..m.dims[v] {
                for j in 0..n.dims[v] {
                    out.push(f.maps[v].at(i, j).clone());
                }
            }
        }
        out
    }

    /// `dim Hom(M, N)` minus the maps that factor through a projective,
    /// which are exactly those lifting through the cover of `N`.
    pub fn stable_hom_dim(&self, m: &Module<F>, n: &Module<F>) -> usize {
        let total = self.hom_dim(m, n);
        if total == 0 {
            return 0;
        }
        let cover = self.cover(n);
        let through = self.hom_basis(m, &cover.module);
        let rows: Vec<Vec<F>> = through
            .iter()
            .map(|g| {
                let composed = ModuleMap {
                    maps: (0..self.quiver.vertex_count())
                        .map(|v| g.maps[v].mul(&cover.map.maps[v]))
                        .collect(),
                };
                self.flatten_map(m, n, &composed)
            })
            .collect();
        let factoring = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows).rank()
        };
        total - factoring
    }

    /// Exact dimension test plus a deterministic search for an
    /// invertible intertwiner.
    pub fn is_isomorphic(&self, m: &Module<F>, n: &Module<F>) -> bool {
        if m.dims != n.dims {
            return false;
        }
        if m.is_zero() {
            return true;
        }
        let homs = self.hom_basis(m, n);
        if homs.is_empty() {
            return false;
        }
        let invertible = |f: &ModuleMap<F>| {
            f.maps
                .iter()
                .enumerate()
                .all(|(v, mat)| m.dims[v] == 0 || mat.is_invertible())
        };
        for f in &homs {
            if invertible(f) {
                return true;
            }
        }
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for _ in 0..64 {
            let coeffs: Vec<i64> = (0..homs.len()).map(|_| next()).collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let maps = (0..self.quiver.vertex_count())
                .map(|v| {
                    let mut mat: Matrix<F> = Matrix::zero(m.dims[v], n.dims[v]);
                    for (f, &c) in homs.iter().zip(&coeffs) {
                        if c == 0 {
                            continue;
                        }
                        let scale = F::from_i64(c);
                        for i in 0..m.dims[v] {
                            for j in 0..n.dims[v] {
                                let add = scale.mul(f.maps[v].at(i, j));
                                *mat.at_mut(i, j) = mat.at(i, j).add(&add);
                            }
                        }
                    }
                    mat
                })
                .collect();
            if invertible(&ModuleMap { maps }) {
                return true;
            }
        }
        false
    }

    /// The translate `D Tr M` from a minimal projective presentation.
    pub fn tau(&self, m: &Module<F>) -> Module<F> {
        let c0 = self.cover(m);
        let syz = self.kernel_spans(&c0.map);
        let (s, emb) = self.submodule(&c0.module, syz);
        if s.is_zero() {
            return self.zero_module();
        }
        let c1 = self.cover(&s);
        let lift: Vec<Matrix<F>> = (0..self.quiver.vertex_count())
            .map(|v| c1.map.maps[v].mul(&emb.maps[v]))
            .collect();

        let gens = &c1.summands;
        let tops = &c0.summands;
        let nv = self.quiver.vertex_count();

        let mut amb = vec![0usize; nv];
        let mut goff = vec![vec![0usize; gens.len()]; nv];
        for i in 0..nv {
            let mut off = 0;
            for (u, &g) in gens.iter().enumerate() {
                goff[i][u] = off;
                off += self.basis_between(VertexIx(i), g).len();
            }
            amb[i] = off;
        }

        let entry = |u: usize, v: usize| -> Vec<(usize, F)> {
            let g = gens[u];
            let row_ix = c1.offsets[u][g.0]
                + self
                    .basis_between(g, g)
                    .iter()
                    .position(|&bi| bi == self.idempotent(g))
                    .expect("idempotent present");
            let row = lift[g.0].row(row_ix);
            let h = tops[v];
            let block = self.basis_between(h, g);
            let base = c0.offsets[v][g.0];
            block
                .iter()
                .enumerate()
                .filter_map(|(k, &bi)| {
                    let c = row[base + k].clone();
                    (!c.is_zero()).then_some((bi, c))
                })
                .collect()
        };

        let mut image_rows: Vec<Vec<Vec<F>>> = vec![Vec::new(); nv];
        for i in 0..nv {
            for (v, &h) in tops.iter().enumerate() {
                for &p in self.basis_between(VertexIx(i), h) {
                    let mut row = vec![F::zero(); amb[i]];
                    for (u, &g) in gens.iter().enumerate() {
                        let block = self.basis_between(VertexIx(i), g);
                        for (bi, c) in entry(u, v) {
                            for (ix, pc) in self.product(p, bi) {
                                let pos = block
                                    .iter()
                                    .position(|&b| b == ix)
                                    .expect("product stays in the span");
                                row[goff[i][u] + pos] =
                                    row[goff[i][u] + pos].add(&pc.mul(&c));
                            }
                        }
                    }
                    image_rows[i].push(row);
                }
            }
        }

        let mut reduced: Vec<Matrix<F>> = Vec::with_capacity(nv);
        let mut pivots: Vec<Vec<usize>> = Vec::with_capacity(nv);
        let mut free_cols: Vec<Vec<usize>> = Vec::with_capacity(nv);
        for i in 0..nv {
            let mut mat = if image_rows[i].is_empty() {
                Matrix::zero(0, amb[i])
            } else {
                Matrix::from_rows(image_rows[i].clone())
            };
            let piv = mat.rref();
            let pivset: std::collections::BTreeSet<usize> = piv.iter().copied().collect();
            free_cols.push((0..amb[i]).filter(|c| !pivset.contains(c)).collect());
            pivots.push(piv);
            reduced.push(mat);
        }

        let project = |i: usize, mut vec: Vec<F>| -> Vec<F> {
            for (r, &p) in pivots[i].iter().enumerate() {
                let coeff = vec[p].clone();
                if coeff.is_zero() {
                    continue;
                }
                for c in 0..amb[i] {
                    let sub = coeff.mul(reduced[i].at(r, c));
                    vec[c] = vec[c].sub(&sub);
                }
            }
            free_cols[i].iter().map(|&c| vec[c].clone()).collect()
        };

        let dims: Vec<usize> = free_cols.iter().map(|f| f.len()).collect();
        let maps = self
            .quiver
            .arrows()
            .map(|a| {
                let arrow = self.quiver.arrow(a);
                let (i, j) = (arrow.src.0, arrow.tgt.0);
                let mut act = Matrix::zero(dims[j], dims[i]);
                for (r, &c) in free_cols[j].iter().enumerate() {
                    let (u, pos) = locate_block(&goff[j], gens.len(), c);
                    let bi = self.basis_between(VertexIx(j), gens[u])[pos];
                    let mut row = vec![F::zero(); amb[i]];
                    let block = self.basis_between(VertexIx(i), gens[u]);
                    for (ix, coeff) in self.left_mul_arrow(a, bi) {
                        let p = block
                            .iter()
                            .position(|&b| b == ix)
                            .expect("left action stays in the span");
                        row[goff[i][u] + p] = coeff;
                    }
                    let proj = project(i, row);
                    for (cc, val) in proj.into_iter().enumerate() {
                        *act.at_mut(r, cc) = val;
                    }
                }
                act.transpose()
            })
            .collect();
        Module { dims, maps }
    }

    fn kernel_spans(&self, map: &ModuleMap<F>) -> Vec<Matrix<F>> {
        map.maps
            .iter()
            .map(|mat| {
                let k = mat.left_kernel();
                if k.rows == 0 {
                    Matrix::zero(0, mat.rows)
                } else {
                    k
                }
            })
            .collect()
    }

    /// Relabels a module along a quiver involution.
    pub fn sigma_twist(&self, m: &Module<F>, sigma: &SigmaAction) -> Module<F> {
        let dims: Vec<usize> = (0..self.quiver.vertex_count())
            .map(|v| m.dims[sigma.vertex(VertexIx(v)).0])
            .collect();
        let maps = self
            .quiver
            .arrows()
            .map(|a| m.maps[sigma.arrow(a).0].clone())
            .collect();
        Module { dims, maps }
    }

    /// The least `k >= 1` with the `k`-th syzygy isomorphic to `m`.
    pub fn omega_period(&self, m: &Module<F>, cap: usize) -> Result<usize, ModuleError> {
        let mut current = m.clone();
        for k in 1..=cap {
            current = self.syzygy(&current);
            if current.is_zero() {
                return Err(ModuleError::Vanished(k));
            }
            if self.is_isomorphic(&current, m) {
                return Ok(k);
            }
        }
        Err(ModuleError::NotPeriodic(cap))
    }

    pub fn is_tau_rigid(&self, m: &Module<F>) -> bool {
        self.hom_dim(m, &self.tau(m)) == 0
    }

    /// Whether the second syzygy of the translate returns the module.
    pub fn is_cohen_macaulay(&self, m: &Module<F>) -> bool {
        if m.is_zero() {
            return false;
        }
        let back = self.syzygy(&self.syzygy(&self.tau(m)));
        self.is_isomorphic(&back, m)
    }
}

fn locate_block(offsets: &[usize], blocks: usize, col: usize) -> (usize, usize) {
    let mut u = blocks - 1;
    for k in 0..blocks {
        if k + 1 == blocks || offsets[k + 1] > col {
            u = k;
            break;
        }
    }
    (u, col - offsets[u])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::CycleData;
    use crate::oracle::field::Rat;
    use crate::potential::{canonical_potential, jacobian_relations};
    use crate::quiver::Quiver;

    const TWO_TRIANGLES: &str = "\
quiver two-triangles
vertices: a b c d
arrow s: a -> b
arrow bc: b -> c
arrow ca: c -> a
arrow bd: b -> d
arrow da: d -> a
";

    fn algebra() -> Algebra<Rat> {
        let q = Quiver::parse(TWO_TRIANGLES).unwrap();
        let data = CycleData::new(&q);
        let pot = canonical_potential(&q, &data).unwrap();
        let rels = jacobian_relations(&q, &pot);
        Algebra::new(&q, &rels).unwrap()
    }

    fn v(alg: &Algebra<Rat>, name: &str) -> VertexIx {
        alg.quiver.vertex_by_name(name).unwrap()
    }

    #[test]
    fn projectives_satisfy_relations() {
        let alg = algebra();
        for w in alg.quiver.vertices() {
            let p = alg.projective(w);
            alg.check_module(&p).unwrap();
            assert_eq!(p.total_dim(), alg.basis_from(w).len());
        }
    }

    #[test]
    fn radicals_of_twin_projectives_are_isomorphic() {
        let alg = algebra();
        let rc = alg.radical(&alg.projective(v(&alg, "c")));
        let rd = alg.radical(&alg.projective(v(&alg, "d")));
        let sa = alg.simple(v(&alg, "a"));
        assert!(alg.is_isomorphic(&rc, &rd));
        assert!(alg.is_isomorphic(&rc, &sa));
        assert!(!alg.is_isomorphic(&rc, &alg.simple(v(&alg, "b"))));
    }

    #[test]
    fn syzygies_walk_the_diameter_orbit() {
        let alg = algebra();
        let sb = alg.simple(v(&alg, "b"));
        let rb = alg.radical(&alg.projective(v(&alg, "b")));
        let sa = alg.simple(v(&alg, "a"));
        assert!(alg.is_isomorphic(&alg.radical(&alg.projective(v(&alg, "a"))), &sb));
        let o1 = alg.syzygy(&sb);
        assert!(alg.is_isomorphic(&o1, &rb));
        let o2 = alg.syzygy(&o1);
        assert!(alg.is_isomorphic(&o2, &sa));
        let o3 = alg.syzygy(&o2);
        assert!(alg.is_isomorphic(&o3, &sb));
        assert_eq!(alg.omega_period(&sb, 12).unwrap(), 3);
    }

    #[test]
    fn cover_summands_match_the_top() {
        let alg = algebra();
        let rb = alg.radical(&alg.projective(v(&alg, "b")));
        let cover = alg.cover(&rb);
        assert_eq!(cover.summands, vec![v(&alg, "c"), v(&alg, "d")]);
        assert_eq!(cover.module.total_dim(), 4);
        for w in 0..alg.quiver.vertex_count() {
            assert_eq!(cover.map.maps[w].rank(), rb.dims[w]);
        }
        let steps = alg.resolution_tops(&alg.simple(v(&alg, "b")), 4);
        assert_eq!(
            steps,
            vec![
                vec![v(&alg, "b")],
                vec![v(&alg, "c"), v(&alg, "d")],
                vec![v(&alg, "a")],
                vec![v(&alg, "b")],
            ]
        );
    }

    #[test]
    fn hom_from_projective_evaluates_at_the_vertex() {
        let alg = algebra();
        let mut targets: Vec<Module<Rat>> = alg.quiver.vertices().map(|w| alg.projective(w)).collect();
        targets.push(alg.radical(&alg.projective(v(&alg, "b"))));
        targets.push(alg.simple(v(&alg, "a")));
        for w in alg.quiver.vertices() {
            let p = alg.projective(w);
            for t in &targets {
                assert_eq!(alg.hom_dim(&p, t), t.dims[w.0]);
                assert_eq!(alg.stable_hom_dim(&p, t), 0);
            }
        }
    }

    #[test]
    fn stable_homs_drop_maps_through_projectives() {
        let alg = algebra();
        let sb = alg.simple(v(&alg, "b"));
        assert_eq!(alg.hom_dim(&sb, &sb), 1);
        assert_eq!(alg.stable_hom_dim(&sb, &sb), 1);
        let rb = alg.radical(&alg.projective(v(&alg, "b")));
        assert_eq!(alg.stable_hom_dim(&sb, &rb), 0);
    }

    #[test]
    fn translate_of_a_simple_has_the_expected_support() {
        let alg = algebra();
        for w in alg.quiver.vertices() {
            assert!(alg.tau(&alg.projective(w)).is_zero());
        }
        let sb = alg.simple(v(&alg, "b"));
        let t = alg.tau(&sb);
        alg.check_module(&t).unwrap();
        let by_name: Vec<usize> = ["a", "b", "c", "d"]
            .iter()
            .map(|n| t.dims[v(&alg, n).0])
            .collect();
        assert_eq!(by_name, vec![0, 1, 1, 1]);
        let back = alg.syzygy(&alg.syzygy(&t));
        assert!(alg.is_isomorphic(&back, &sb));
        assert!(alg.is_cohen_macaulay(&sb));
    }

    #[test]
    fn non_periodic_modules_fail_the_return_test() {
        let alg = algebra();
        let sb = alg.simple(v(&alg, "b"));
        let x = alg.tau(&sb);
        assert!(!alg.is_cohen_macaulay(&x));
    }
}
