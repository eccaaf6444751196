use std::time::Instant;

use syzygy::cycles::CycleData;
use syzygy::fixtures::{self, TRIANGLE_PAIR};
use syzygy::gaction::{detect_involution, glue, skew, unskew};
use syzygy::geom::{names, ConfigA, ConfigD};
use syzygy::oracle::{Algebra, Rat};
use syzygy::potential::{effective_potential, jacobian_relations};
use syzygy::quiver::Quiver;
use syzygy::weight::{skew_weights, weights};

fn algebra_of(q: &Quiver) -> Result<Algebra<Rat>, String> {
    let data = CycleData::new(q);
    let pot = effective_potential(q, &data).map_err(|e| e.to_string())?;
    Algebra::new(q, &jacobian_relations(q, &pot)).map_err(|e| e.to_string())
}

fn main() {
    let tp = fixtures::parse(TRIANGLE_PAIR);
    let det = detect_involution(&tp).expect("triangle pair has a swap");
    let half = det.half(&tp).expect("half extraction");
    println!("half name: {}", half.name);
    println!("half text:\n{}", half.to_text());

    let glued = glue(&half, "s").expect("reglue");
    println!("reglued name: {}", glued.quiver.name);
    println!("reglued iso to tp: {}", glued.quiver.is_isomorphic_to(&tp));

    let skewed = skew(&half, "s").expect("skew");
    println!("skew name: {}", skewed.quiver.name);
    println!("skew text:\n{}", skewed.quiver.to_text());

    let merged = unskew(&skewed.quiver).expect("unskew");
    println!("unskew glue id: {}, half name {}", merged.glue_id, merged.half.name);

    let data_b = CycleData::new(&half);
    let glue_ix = half.arrow_by_name("s").unwrap();
    let table = skew_weights(&half, &data_b, glue_ix).expect("skew weights");
    println!("skew weights total (n): {}", table.total);

    let alg_a = algebra_of(&tp).expect("A algebra");
    println!("tp dim A: {}", alg_a.dim());
    let alg_b = algebra_of(&skewed.quiver).expect("B algebra");
    println!("tp dim B: {}", alg_b.dim());

    let half_names: Vec<&str> = half.vertex_names().collect();
    let mut plain = 0;
    let mut cross = 0;
    for &u in &half_names {
        for &v in &half_names {
            let ui = tp.vertex_by_name(u).unwrap();
            let vi = tp.vertex_by_name(v).unwrap();
            plain += alg_a.basis_between(ui, vi).len();
            cross += alg_a.basis_between(ui, det.sigma.vertex(vi)).len();
        }
    }
    println!("tp slice: {plain} + {cross} = {} (dim B {})", plain + cross, alg_b.dim());

    for v in skewed.quiver.vertices() {
        let rad = alg_b.radical(&alg_b.projective(v));
        let period = alg_b.omega_period(&rad, 32);
        println!(
            "  B rad P({}) period {:?}, ges {}",
            skewed.quiver.vertex_name(v),
            period,
            alg_b.is_cohen_macaulay(&rad)
        );
    }

    let t = Instant::now();
    let cfg_d = ConfigD::solve(&skewed.quiver, 3);
    match &cfg_d {
        Some(cfg) => {
            println!("tp skew solve ok ({:?}):", t.elapsed());
            let mut rows: Vec<_> = cfg
                .assignments()
                .map(|(v, a)| (skewed.quiver.vertex_name(v).to_string(), a))
                .collect();
            rows.sort();
            for (name, a) in &rows {
                println!("  {name} -> {a}");
            }
            println!("  violations: {}", cfg.validate(&skewed.quiver).len());
            let ok = skewed.quiver.vertices().all(|v| {
                let a = cfg.arc(v).unwrap();
                let geo: Vec<Vec<String>> = cfg
                    .cover_sequence(&skewed.quiver, &a, 6)
                    .iter()
                    .map(|c| names(&skewed.quiver, c))
                    .collect();
                let m = alg_b.radical(&alg_b.projective(v));
                let tops = alg_b.resolution_tops(&m, 6);
                tops.len() == 6
                    && tops
                        .iter()
                        .zip(geo.iter())
                        .all(|(t, e)| &names(&skewed.quiver, t) == e)
            });
            println!("  covers match (B side): {ok}");
        }
        None => println!("tp skew solve returned none ({:?})", t.elapsed()),
    }

    let sigma = det.sigma;
    let cfg_a = ConfigA::solve(&tp, 3, Some(&sigma)).expect("A side solve");
    let ok_a = tp.vertices().all(|v| {
        let d = cfg_a.diagonal(v).unwrap();
        let geo: Vec<Vec<String>> = cfg_a
            .cover_sequence(&tp, &d, 6)
            .iter()
            .map(|c| names(&tp, c))
            .collect();
        let m = alg_a.radical(&alg_a.projective(v));
        let tops = alg_a.resolution_tops(&m, 6);
        tops.len() == 6
            && tops
                .iter()
                .zip(geo.iter())
                .all(|(t, e)| &names(&tp, t) == e)
    });
    println!("tp covers match (A side): {ok_a}");
    for v in tp.vertices() {
        let rad = alg_a.radical(&alg_a.projective(v));
        println!(
            "  A rad P({}) period {:?}",
            tp.vertex_name(v),
            alg_a.omega_period(&rad, 32)
        );
    }
}
