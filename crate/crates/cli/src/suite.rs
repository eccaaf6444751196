//! Bundled fixtures and the deterministic verification suite behind
//! `fixtures run`: every fixture is exercised end to end against both
//! the geometric model and the algebra oracle.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use syzygy::cycles::{validate, CycleData};
use syzygy::fixtures::{self, CONFIG_GLUED_FIVE, CONFIG_SKEW_FIVE};
use syzygy::gaction::{detect_involutions, glue, skew, SigmaAction};
use syzygy::geom::{
    arc_quiver, diag_quiver, mesh_hom_dim_arc, names, project, verify_branched_cover, Arc,
    ConfigA, ConfigD, Diag, Projected,
};
use syzygy::oracle::{Algebra, Field, Module};
use syzygy::quiver::{Quiver, VertexIx};
use syzygy::weight::{skew_weights, weights};

use crate::report::{algebra, usage, CliError, ConfigOverride};

/// Accumulated check lines of one `fixtures run` invocation.
pub struct Suite {
    lines: Vec<String>,
    passed: usize,
    failed: usize,
}

impl Suite {
    fn new() -> Suite {
        Suite {
            lines: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    fn section(&mut self, title: &str) {
        if !self.lines.is_empty() {
            self.lines.push(String::new());
        }
        self.lines.push(format!("# {title}"));
    }

    fn check(&mut self, ok: bool, label: impl Into<String>) {
        let label = label.into();
        if ok {
            self.passed += 1;
            self.lines.push(format!("ok - {label}"));
        } else {
            self.failed += 1;
            self.lines.push(format!("FAIL - {label}"));
        }
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push_str(&format!(
            "\n\nchecks: {} passed, {} failed\n",
            self.passed, self.failed
        ));
        out
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn diag_period(d: Diag) -> usize {
    let mut cur = d.syzygy();
    let mut k = 1;
    while cur != d {
        cur = cur.syzygy();
        k += 1;
    }
    k
}

fn arc_period(a: Arc) -> usize {
    let mut cur = a.syzygy();
    let mut k = 1;
    while cur != a {
        cur = cur.syzygy();
        k += 1;
    }
    k
}

fn covers_match_a<F: Field>(alg: &Algebra<F>, q: &Quiver, cfg: &ConfigA, steps: usize) -> bool {
    q.vertices().all(|v| {
        let Some(d) = cfg.diagonal(v) else {
            return false;
        };
        let geo: Vec<Vec<String>> = cfg
            .cover_sequence(q, &d, steps)
            .iter()
            .map(|c| names(q, c))
            .collect();
        let m = alg.radical(&alg.projective(v));
        let tops = alg.resolution_tops(&m, steps);
        tops.len() == steps && tops.iter().zip(geo.iter()).all(|(t, e)| &names(q, t) == e)
    })
}

fn covers_match_d<F: Field>(alg: &Algebra<F>, q: &Quiver, cfg: &ConfigD, steps: usize) -> bool {
    q.vertices().all(|v| {
        let Some(a) = cfg.arc(v) else {
            return false;
        };
        let geo: Vec<Vec<String>> = cfg
            .cover_sequence(q, &a, steps)
            .iter()
            .map(|c| names(q, c))
            .collect();
        let m = alg.radical(&alg.projective(v));
        let tops = alg.resolution_tops(&m, steps);
        tops.len() == steps && tops.iter().zip(geo.iter()).all(|(t, e)| &names(q, t) == e)
    })
}

fn period_by_name<F: Field>(alg: &Algebra<F>, q: &Quiver) -> BTreeMap<String, usize> {
    q.vertices()
        .map(|v| {
            let rad = alg.radical(&alg.projective(v));
            let period = alg.omega_period(&rad, 80).unwrap_or(0);
            (q.vertex_name(v).to_string(), period)
        })
        .collect()
}

fn ges_everywhere<F: Field>(alg: &Algebra<F>, q: &Quiver) -> bool {
    q.vertices()
        .all(|v| alg.is_cohen_macaulay(&alg.radical(&alg.projective(v))))
}

/// Basis sizes of the plain and twisted slices of the doubled algebra,
/// taken over the vertices of the one-sided half.
fn slice_split<F: Field>(
    alg: &Algebra<F>,
    doubled: &Quiver,
    sigma: &SigmaAction,
    half: &Quiver,
) -> (usize, usize) {
    let mut plain = 0;
    let mut cross = 0;
    for u in half.vertex_names() {
        for v in half.vertex_names() {
            let ui = doubled.vertex_by_name(u).expect("half vertex kept");
            let vi = doubled.vertex_by_name(v).expect("half vertex kept");
            plain += alg.basis_between(ui, vi).len();
            cross += alg.basis_between(ui, sigma.vertex(vi)).len();
        }
    }
    (plain, cross)
}

/// Walks every syzygy orbit and records the first module seen at each
/// curve, giving one representative module per curve of the model.
fn modules_by_diag<F: Field>(
    alg: &Algebra<F>,
    q: &Quiver,
    cfg: &ConfigA,
) -> Result<BTreeMap<Diag, Module<F>>, String> {
    let mut out = BTreeMap::new();
    let mut vs: Vec<VertexIx> = q.vertices().collect();
    vs.sort_by_key(|v| q.vertex_name(*v).to_string());
    for v in vs {
        let mut m = alg.radical(&alg.projective(v));
        let mut d = cfg.diagonal(v).ok_or("configuration misses a vertex")?;
        let start = d;
        loop {
            out.entry(d).or_insert_with(|| m.clone());
            m = alg.syzygy(&m);
            d = d.syzygy();
            if d == start {
                break;
            }
        }
    }
    Ok(out)
}

fn modules_by_arc<F: Field>(
    alg: &Algebra<F>,
    q: &Quiver,
    cfg: &ConfigD,
) -> Result<BTreeMap<Arc, Module<F>>, String> {
    let mut out = BTreeMap::new();
    let mut vs: Vec<VertexIx> = q.vertices().collect();
    vs.sort_by_key(|v| q.vertex_name(*v).to_string());
    for v in vs {
        let mut m = alg.radical(&alg.projective(v));
        let mut a = cfg.arc(v).ok_or("configuration misses a vertex")?;
        let start = a;
        loop {
            out.entry(a).or_insert_with(|| m.clone());
            m = alg.syzygy(&m);
            a = a.syzygy();
            if a == start {
                break;
            }
        }
    }
    Ok(out)
}

/// Compares tau rigidity of `M + twisted M` over the doubled algebra
/// with tau rigidity of the matched module over the split one, for
/// every curve of the polygon model. Returns (checked, mismatches).
#[allow(clippy::too_many_arguments)]
fn rigidity_transfer<F: Field>(
    alg_a: &Algebra<F>,
    doubled: &Quiver,
    sigma: &SigmaAction,
    cfg_a: &ConfigA,
    alg_b: &Algebra<F>,
    split: &Quiver,
    cfg_d: &ConfigD,
    n: u32,
) -> Result<(usize, usize), String> {
    let modules_a = modules_by_diag(alg_a, doubled, cfg_a)?;
    let modules_b = modules_by_arc(alg_b, split, cfg_d)?;
    let rigid_b: BTreeMap<Arc, bool> = modules_b
        .iter()
        .map(|(a, m)| (*a, alg_b.is_tau_rigid(m)))
        .collect();
    let mut total = 0;
    let mut mismatches = 0;
    for d in Diag::all(n) {
        let m = modules_a
            .get(&d)
            .ok_or_else(|| format!("no module reached for diagonal {d}"))?;
        let twisted = alg_a.sigma_twist(m, sigma);
        let sum = alg_a.direct_sum(&[m, &twisted]);
        let rigid_a = alg_a.is_tau_rigid(&sum);
        let rigid_below = match project(&d) {
            Projected::Plain(a) => *rigid_b
                .get(&a)
                .ok_or_else(|| format!("no module reached for arc {a}"))?,
            Projected::LoopPair(p, q) => {
                let rp = *rigid_b
                    .get(&p)
                    .ok_or_else(|| format!("no module reached for arc {p}"))?;
                let rq = *rigid_b
                    .get(&q)
                    .ok_or_else(|| format!("no module reached for arc {q}"))?;
                if rp != rq {
                    return Err(format!("loop pair {p} / {q} disagrees on rigidity"));
                }
                rp
            }
        };
        total += 1;
        if rigid_a != rigid_below {
            mismatches += 1;
        }
    }
    Ok((total, mismatches))
}

fn section(s: &mut Suite, title: &str, body: impl FnOnce(&mut Suite) -> Result<(), String>) {
    s.section(title);
    if let Err(e) = body(s) {
        s.check(false, format!("section aborted: {e}"));
    }
}

/// Runs the whole verification suite over every bundled fixture.
pub fn run<F: Field>(path_cap: usize) -> Suite {
    let mut s = Suite::new();
    section(&mut s, "five family", |s| five_family::<F>(s, path_cap));
    section(&mut s, "seven family", |s| seven_family::<F>(s, path_cap));
    section(&mut s, "triangle pair", |s| triangle_pair::<F>(s, path_cap));
    section(&mut s, "three-cycle chains", |s| e_family::<F>(s, path_cap));
    section(&mut s, "nine-cycle ring", |s| ring_nine::<F>(s, path_cap));
    s
}

fn doc(name: &str) -> &'static str {
    fixtures::ALL
        .iter()
        .find(|(id, _)| *id == name)
        .map(|(_, doc)| *doc)
        .expect("fixture name is bundled")
}

fn five_family<F: Field>(s: &mut Suite, path_cap: usize) -> Result<(), String> {
    let half = fixtures::parse(doc("half-five"));
    s.check(validate(&half).is_dimer_tree(), "half-five is a dimer tree");

    let data = CycleData::new(&half);
    let plain = weights(&half, &data).map_err(|e| e.to_string())?;
    s.check(
        plain.total == 8,
        format!("half-five weight total {} = 8", plain.total),
    );
    let glue_ix = half.arrow_by_name("alpha").ok_or("no arrow alpha")?;
    let one_sided = skew_weights(&half, &data, glue_ix).map_err(|e| e.to_string())?;
    s.check(
        one_sided.total == 7,
        format!("half-five one-sided weight total {} = 7", one_sided.total),
    );

    let glued = glue(&half, "alpha").map_err(|e| e.to_string())?;
    s.check(
        validate(&glued.quiver).is_dimer_tree(),
        "half-five-glued is a dimer tree",
    );
    let gdata = CycleData::new(&glued.quiver);
    let gtable = weights(&glued.quiver, &gdata).map_err(|e| e.to_string())?;
    let n = gtable.polygon_size().map_err(|e| e.to_string())?;
    s.check(
        gtable.total == 14 && n == 7,
        format!("half-five-glued weight total {} = 14, n {} = 7", gtable.total, n),
    );

    let found = detect_involutions(&glued.quiver);
    let round_trip = found.len() == 1
        && glued.quiver.arrow(found[0].glue_arrow).id == "alpha"
        && found[0]
            .half(&glued.quiver)
            .map(|h| h.is_isomorphic_to(&half))
            .unwrap_or(false);
    s.check(
        round_trip,
        "detected swap on half-five-glued names glue arrow alpha and recovers the half",
    );

    let skewed = skew(&half, "alpha").map_err(|e| e.to_string())?;
    let alg_a: Algebra<F> = algebra(&glued.quiver, path_cap).map_err(|e| e.to_string())?;
    s.check(
        alg_a.dim() == 34,
        format!("doubled algebra dimension {} = 34", alg_a.dim()),
    );
    let alg_b: Algebra<F> = algebra(&skewed.quiver, path_cap).map_err(|e| e.to_string())?;
    s.check(
        alg_b.dim() == 29,
        format!("split algebra dimension {} = 29", alg_b.dim()),
    );
    let (diag_slice, cross_slice) = slice_split(&alg_a, &glued.quiver, &glued.sigma, &half);
    s.check(
        diag_slice == 16 && cross_slice == 13 && diag_slice + cross_slice == alg_b.dim(),
        format!(
            "invariant slice {diag_slice} + twisted slice {cross_slice} = split dimension {}",
            alg_b.dim()
        ),
    );

    let cfg_a =
        ConfigA::from_names(&glued.quiver, 7, CONFIG_GLUED_FIVE).map_err(|e| e.to_string())?;
    s.check(
        cfg_a.validate(&glued.quiver, Some(&glued.sigma)).is_empty(),
        "reference diagonal configuration satisfies the crossing rules",
    );
    s.check(
        covers_match_a(&alg_a, &glued.quiver, &cfg_a, 14),
        "doubled-side projective covers match the polygon model for 14 steps",
    );
    let periods_a = period_by_name(&alg_a, &glued.quiver);
    let orbit_ok = glued.quiver.vertices().all(|v| {
        let d = cfg_a.diagonal(v).expect("reference assigns every vertex");
        periods_a.get(glued.quiver.vertex_name(v)) == Some(&diag_period(d))
    });
    s.check(orbit_ok, "doubled-side syzygy periods equal rotation orbit lengths");

    let cfg_d =
        ConfigD::from_names(&skewed.quiver, 7, CONFIG_SKEW_FIVE).map_err(|e| e.to_string())?;
    s.check(
        cfg_d.validate(&skewed.quiver).is_empty(),
        "reference arc configuration satisfies the crossing rules",
    );
    s.check(
        covers_match_d(&alg_b, &skewed.quiver, &cfg_d, 14),
        "split-side projective covers match the punctured model for 14 steps",
    );
    let periods_b = period_by_name(&alg_b, &skewed.quiver);
    s.check(
        periods_b.values().all(|&p| p == 7),
        "split-side syzygy periods all equal 7",
    );

    let derived = ConfigD::from_a(&cfg_a, &glued.quiver, &skewed.quiver, "1", "2")
        .map_err(|e| e.to_string())?;
    let same = derived.assignments().collect::<BTreeMap<_, _>>()
        == cfg_d.assignments().collect::<BTreeMap<_, _>>();
    s.check(
        same,
        "projecting the diagonal configuration recovers the arc configuration",
    );

    s.check(Diag::all(7).len() == 35, "35 diagonals in the 14-gon");
    s.check(Arc::all(7).len() == 28, "28 arcs in the punctured 7-gon");
    let gq = diag_quiver(7);
    s.check(
        gq.node_count() == 35 && gq.arrow_count() == 56 && gq.orbits(|d| d.tau()).len() == 5,
        "diagonal quiver has 35 nodes, 56 arrows, 5 tau orbits",
    );
    let aq = arc_quiver(7);
    let orbits = aq.orbits(|a| a.tau());
    s.check(
        aq.node_count() == 28
            && aq.arrow_count() == 42
            && orbits.len() == 4
            && orbits.iter().all(|o| o.len() == 7),
        "arc quiver has 28 nodes, 42 arrows, 4 tau orbits of size 7",
    );

    let base = Arc::parse(7, "(3,3)+").map_err(|e| e.to_string())?;
    let outs = ["(4,4)+", "(6,6)-", "(1,1)+"];
    let ins = ["(5,5)+", "(7,7)-", "(2,2)+"];
    let mut loops_ok = true;
    for l in Arc::all(7).into_iter().filter(|a| a.is_loop()) {
        if l == base {
            continue;
        }
        let label = l.to_string();
        loops_ok &= (base.crossing(&l) == 1) == outs.contains(&label.as_str());
        loops_ok &= (l.crossing(&base) == 1) == ins.contains(&label.as_str());
    }
    s.check(
        loops_ok,
        "loop crossings at (3,3)+ hit exactly the six expected neighbours",
    );

    s.check(
        verify_branched_cover(7).is_empty(),
        "double cover crossing identities hold for n = 7",
    );
    s.check(
        verify_branched_cover(9).is_empty(),
        "double cover crossing identities hold for n = 9",
    );

    let arcs = Arc::all(7);
    s.check(
        arcs.iter().all(|x| mesh_hom_dim_arc(x, &x.tau()) == Ok(0)),
        "no arc admits stable maps to its translate",
    );
    let diags = Diag::all(7);
    s.check(
        diags
            .iter()
            .all(|a| diags.iter().all(|b| a.crossing(b) + b.crossing(a) <= 1)),
        "diagonal crossing pairs sum to at most one",
    );
    s.check(
        arcs.iter().all(|a| {
            arcs.iter().all(|b| {
                let sum = a.crossing(b) + b.crossing(a);
                sum <= 2 && (sum != 2 || (!a.is_loop() && !b.is_loop()))
            })
        }),
        "arc crossing pairs sum to at most two, reaching two only for plain pairs",
    );
    let ok7 = Arc::all(7).into_iter().all(|a| arc_period(a) == 7);
    let ok9 = Arc::all(9)
        .into_iter()
        .all(|a| arc_period(a) == if a.is_loop() { 18 } else { 9 });
    s.check(
        ok7 && ok9,
        "rotation periods: all 7 at n = 7; 9 for plain arcs and 18 for loops at n = 9",
    );

    match rigidity_transfer(
        &alg_a,
        &glued.quiver,
        &glued.sigma,
        &cfg_a,
        &alg_b,
        &skewed.quiver,
        &cfg_d,
        7,
    ) {
        Ok((total, mismatches)) => s.check(
            total == 35 && mismatches == 0,
            format!("tau rigidity transfers across the cover for all {total} diagonals"),
        ),
        Err(e) => s.check(false, format!("tau rigidity transfer: {e}")),
    }
    Ok(())
}

fn seven_family<F: Field>(s: &mut Suite, path_cap: usize) -> Result<(), String> {
    let half = fixtures::parse(doc("half-seven"));
    s.check(validate(&half).is_dimer_tree(), "half-seven is a dimer tree");

    let data = CycleData::new(&half);
    let glue_ix = half.arrow_by_name("alpha").ok_or("no arrow alpha")?;
    let one_sided = skew_weights(&half, &data, glue_ix).map_err(|e| e.to_string())?;
    s.check(
        one_sided.total == 9,
        format!("half-seven one-sided weight total {} = 9", one_sided.total),
    );

    let glued = glue(&half, "alpha").map_err(|e| e.to_string())?;
    let gdata = CycleData::new(&glued.quiver);
    let gtable = weights(&glued.quiver, &gdata).map_err(|e| e.to_string())?;
    s.check(
        gtable.total == 18 && gtable.polygon_size() == Ok(9),
        format!("half-seven-glued weight total {} = 18, n = 9", gtable.total),
    );

    let skewed = skew(&half, "alpha").map_err(|e| e.to_string())?;
    s.check(
        skewed.quiver.is_isomorphic_to(&fixtures::parse(doc("skew-seven"))),
        "derived split quiver is isomorphic to the bundled skew-seven",
    );

    let found = detect_involutions(&glued.quiver);
    let round_trip = found.len() == 1
        && glued.quiver.arrow(found[0].glue_arrow).id == "alpha"
        && found[0]
            .half(&glued.quiver)
            .map(|h| h.is_isomorphic_to(&half))
            .unwrap_or(false);
    s.check(
        round_trip,
        "detected swap on half-seven-glued names glue arrow alpha and recovers the half",
    );

    let alg_a: Algebra<F> = algebra(&glued.quiver, path_cap).map_err(|e| e.to_string())?;
    s.check(
        alg_a.dim() == 80,
        format!("doubled algebra dimension {} = 80", alg_a.dim()),
    );
    let alg_b: Algebra<F> = algebra(&skewed.quiver, path_cap).map_err(|e| e.to_string())?;
    s.check(
        alg_b.dim() == 60,
        format!("split algebra dimension {} = 60", alg_b.dim()),
    );
    let (diag_slice, cross_slice) = slice_split(&alg_a, &glued.quiver, &glued.sigma, &half);
    s.check(
        diag_slice == 28 && cross_slice == 32 && diag_slice + cross_slice == alg_b.dim(),
        format!(
            "invariant slice {diag_slice} + twisted slice {cross_slice} = split dimension {}",
            alg_b.dim()
        ),
    );

    let periods_b = period_by_name(&alg_b, &skewed.quiver);
    let periods_ok = periods_b.iter().all(|(name, &p)| {
        let split_vertex = name.ends_with('+') || name.ends_with('-');
        p == if split_vertex { 18 } else { 9 }
    });
    s.check(
        periods_ok,
        "split-side syzygy periods: 18 at split vertices, 9 elsewhere",
    );

    let sigma = Some(&glued.sigma);
    let cfg_a = ConfigA::solve(&glued.quiver, 9, sigma).ok_or("no diagonal configuration")?;
    s.check(
        cfg_a.validate(&glued.quiver, sigma).is_empty(),
        "solved diagonal configuration satisfies the crossing rules",
    );
    s.check(
        covers_match_a(&alg_a, &glued.quiver, &cfg_a, 18),
        "doubled-side projective covers match the polygon model for 18 steps",
    );
    let periods_a = period_by_name(&alg_a, &glued.quiver);
    let orbit_ok = glued.quiver.vertices().all(|v| {
        let d = cfg_a.diagonal(v).expect("solver assigns every vertex");
        periods_a.get(glued.quiver.vertex_name(v)) == Some(&diag_period(d))
    });
    s.check(orbit_ok, "doubled-side syzygy periods equal rotation orbit lengths");

    let cfg_d = ConfigD::solve(&skewed.quiver, 9).ok_or("no arc configuration")?;
    s.check(
        cfg_d.validate(&skewed.quiver).is_empty(),
        "solved arc configuration satisfies the crossing rules",
    );
    s.check(
        covers_match_d(&alg_b, &skewed.quiver, &cfg_d, 18),
        "split-side projective covers match the punctured model for 18 steps",
    );
    Ok(())
}

fn triangle_pair<F: Field>(s: &mut Suite, path_cap: usize) -> Result<(), String> {
    let tp = fixtures::parse(doc("triangle-pair"));
    s.check(validate(&tp).is_dimer_tree(), "triangle-pair is a dimer tree");
    let data = CycleData::new(&tp);
    let table = weights(&tp, &data).map_err(|e| e.to_string())?;
    s.check(
        table.total == 6 && table.polygon_size() == Ok(3),
        format!("triangle-pair weight total {} = 6, n = 3", table.total),
    );

    let found = detect_involutions(&tp);
    let [det] = found.as_slice() else {
        return Err(format!("expected one swap, found {}", found.len()));
    };
    s.check(
        tp.arrow(det.glue_arrow).id == "s",
        "detected swap names glue arrow s",
    );
    let half = det.half(&tp).map_err(|e| e.to_string())?;
    let reglued = glue(&half, "s").map_err(|e| e.to_string())?;
    s.check(
        half.vertex_count() == 3 && reglued.quiver.is_isomorphic_to(&tp),
        "halving and regluing returns the triangle pair",
    );

    let skewed = skew(&half, "s").map_err(|e| e.to_string())?;
    let alg_a: Algebra<F> = algebra(&tp, path_cap).map_err(|e| e.to_string())?;
    let alg_b: Algebra<F> = algebra(&skewed.quiver, path_cap).map_err(|e| e.to_string())?;
    s.check(
        alg_a.dim() == 10 && alg_b.dim() == 13,
        format!("algebra dimensions {} = 10 and {} = 13", alg_a.dim(), alg_b.dim()),
    );
    let (diag_slice, cross_slice) = slice_split(&alg_a, &tp, &det.sigma, &half);
    s.check(
        diag_slice == 7 && cross_slice == 6 && diag_slice + cross_slice == alg_b.dim(),
        format!(
            "invariant slice {diag_slice} + twisted slice {cross_slice} = split dimension {}",
            alg_b.dim()
        ),
    );

    let cfg_a = ConfigA::solve(&tp, 3, Some(&det.sigma)).ok_or("no diagonal configuration")?;
    s.check(
        cfg_a.validate(&tp, Some(&det.sigma)).is_empty(),
        "solved diagonal configuration satisfies the crossing rules",
    );
    s.check(
        covers_match_a(&alg_a, &tp, &cfg_a, 6),
        "doubled-side projective covers match the polygon model for 6 steps",
    );
    let periods_a = period_by_name(&alg_a, &tp);
    s.check(
        periods_a.values().all(|&p| p == 3),
        "doubled-side syzygy periods all equal 3",
    );
    let periods_b = period_by_name(&alg_b, &skewed.quiver);
    s.check(
        periods_b.values().all(|&p| p == 3),
        "split-side syzygy periods all equal 3",
    );
    s.check(
        ges_everywhere(&alg_b, &skewed.quiver),
        "split-side radicals satisfy the stable equivalence criterion",
    );
    s.check(Arc::all(3).len() == 6, "6 arcs in the punctured triangle");
    s.check(
        ConfigD::solve(&skewed.quiver, 3).is_none(),
        "the punctured triangle admits no arc configuration (five vertices, three same-sign loops)",
    );
    Ok(())
}

fn e_family<F: Field>(s: &mut Suite, path_cap: usize) -> Result<(), String> {
    for (name, dim, period, divisor) in
        [("e6", 39, 26, 26), ("e7", 51, 19, 38), ("e8", 65, 31, 62)]
    {
        let q = fixtures::parse(doc(name));
        s.check(
            !validate(&q).is_dimer_tree(),
            format!("{name} is not a dimer tree (expected)"),
        );
        let alg: Algebra<F> = algebra(&q, path_cap).map_err(|e| e.to_string())?;
        s.check(
            alg.dim() == dim,
            format!("{name} algebra dimension {} = {dim}", alg.dim()),
        );
        let periods = period_by_name(&alg, &q);
        s.check(
            periods.values().all(|&p| p == period),
            format!("{name} radical syzygy periods all equal {period}"),
        );
        s.check(
            divisor % period == 0,
            format!("{name} period {period} divides {divisor}"),
        );
        s.check(
            ges_everywhere(&alg, &q),
            format!("{name} radicals satisfy the stable equivalence criterion"),
        );
    }
    Ok(())
}

fn ring_nine<F: Field>(s: &mut Suite, path_cap: usize) -> Result<(), String> {
    let q = fixtures::parse(doc("ring-nine"));
    s.check(
        !validate(&q).is_dimer_tree(),
        "ring-nine is not a dimer tree (expected)",
    );
    let alg: Algebra<F> = algebra(&q, path_cap).map_err(|e| e.to_string())?;
    s.check(
        alg.dim() == 55,
        format!("ring-nine algebra dimension {} = 55", alg.dim()),
    );
    let periods = period_by_name(&alg, &q);
    s.check(
        periods.values().all(|&p| p == 11),
        "ring-nine radical syzygy periods all equal 11",
    );
    s.check(
        ges_everywhere(&alg, &q),
        "ring-nine radicals satisfy the stable equivalence criterion",
    );
    Ok(())
}

/// One line per bundled fixture: name, size, and dimer tree status.
pub fn list_text() -> String {
    let mut out = String::new();
    for (name, doc) in fixtures::ALL {
        let q = fixtures::parse(doc);
        let rep = validate(&q);
        out.push_str(&format!(
            "{name}: {} vertices, {} arrows, dimer tree: {}\n",
            q.vertex_count(),
            q.arrow_count(),
            if rep.is_dimer_tree() { "yes" } else { "no" }
        ));
    }
    out
}

fn config_json(n: u32, curves: impl Iterator<Item = (String, String)>) -> String {
    let ov = serde_json::json!({
        "n": n,
        "curves": curves.collect::<BTreeMap<String, String>>(),
    });
    let mut out = serde_json::to_string_pretty(&ov).expect("config serialization cannot fail");
    out.push('\n');
    out
}

/// Writes every bundled fixture, the derived doubled and split quivers,
/// and the reference configurations into `dir`. Returns the file names.
pub fn export(dir: &Path) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
    let mut files = Vec::new();
    let mut put = |name: String, contents: String| -> Result<(), CliError> {
        let path = dir.join(&name);
        fs::write(&path, contents)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        files.push(name);
        Ok(())
    };

    for (name, doc) in fixtures::ALL {
        put(format!("{name}.quiver"), doc.to_string())?;
    }
    for half_name in ["half-five", "half-seven"] {
        let half = fixtures::parse(doc(half_name));
        let glued = glue(&half, "alpha")
            .map_err(|e| usage(format!("glue {half_name}: {e}")))?;
        put(format!("{}.quiver", glued.quiver.name), glued.quiver.to_text())?;
        let skewed = skew(&half, "alpha")
            .map_err(|e| usage(format!("skew {half_name}: {e}")))?;
        put(format!("{}.quiver", skewed.quiver.name), skewed.quiver.to_text())?;
    }
    put(
        "half-five-glued.config.json".to_string(),
        config_json(
            7,
            CONFIG_GLUED_FIVE
                .iter()
                .map(|(v, (a, b))| (v.to_string(), format!("({a},{b})"))),
        ),
    )?;
    put(
        "half-five-skew.config.json".to_string(),
        config_json(
            7,
            CONFIG_SKEW_FIVE
                .iter()
                .map(|(v, c)| (v.to_string(), c.to_string())),
        ),
    )?;
    files.sort();
    Ok(files)
}

/// Parses a configuration override file.
pub fn load_override(path: &Path) -> Result<ConfigOverride, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}
