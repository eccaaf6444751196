use std::time::Instant;

use syzygy::cycles::CycleData;
use syzygy::fixtures;
use syzygy::gaction::{glue, skew};
use syzygy::geom::{names, ConfigA, ConfigD, Diag};
use syzygy::oracle::{Algebra, Rat};
use syzygy::potential::{effective_potential, jacobian_relations};
use syzygy::quiver::Quiver;

fn algebra_of(q: &Quiver) -> Algebra<Rat> {
    let data = CycleData::new(q);
    let pot = effective_potential(q, &data).unwrap();
    Algebra::new(q, &jacobian_relations(q, &pot)).unwrap()
}

fn main() {
    let t0 = Instant::now();
    let q0 = fixtures::parse(fixtures::HALF_FIVE);
    let glued = glue(&q0, "alpha").unwrap();
    let alg_a = algebra_of(&glued.quiver);
    println!("glued-five: dim {} ({:?})", alg_a.dim(), t0.elapsed());

    let t = Instant::now();
    let v5 = glued.quiver.vertex_by_name("5").unwrap();
    let v5p = glued.quiver.vertex_by_name("5p").unwrap();
    let rad5 = alg_a.radical(&alg_a.projective(v5));
    let rad5p = alg_a.radical(&alg_a.projective(v5p));
    let tops = alg_a.resolution_tops(&rad5, 15);
    for (k, t) in tops.iter().enumerate() {
        println!("  step {k}: {:?}", names(&glued.quiver, t));
    }
    let mut om7 = rad5.clone();
    for _ in 0..7 {
        om7 = alg_a.syzygy(&om7);
    }
    let mut om14 = om7.clone();
    for _ in 0..7 {
        om14 = alg_a.syzygy(&om14);
    }
    println!(
        "  omega7 = rad P(5p): {}; omega14 = rad P(5): {} ({:?})",
        alg_a.is_isomorphic(&om7, &rad5p),
        alg_a.is_isomorphic(&om14, &rad5),
        t.elapsed()
    );

    let t = Instant::now();
    let sk = skew(&q0, "alpha").unwrap();
    let alg_b = algebra_of(&sk.quiver);
    println!("skew-five: dim {} ({:?})", alg_b.dim(), t.elapsed());
    let t = Instant::now();
    for name in ["5", "3", "1+"] {
        let v = sk.quiver.vertex_by_name(name).unwrap();
        let rad = alg_b.radical(&alg_b.projective(v));
        let period = alg_b.omega_period(&rad, 40);
        println!("  rad P({name}) omega period {period:?}");
    }
    println!("  ({:?})", t.elapsed());

    let t = Instant::now();
    let q7 = fixtures::parse(fixtures::HALF_SEVEN);
    let glued7 = glue(&q7, "alpha").unwrap();
    let alg_a7 = algebra_of(&glued7.quiver);
    println!("glued-seven: dim {} ({:?})", alg_a7.dim(), t.elapsed());
    let t = Instant::now();
    let sk7 = skew(&q7, "alpha").unwrap();
    let alg_b7 = algebra_of(&sk7.quiver);
    println!("skew-seven: dim {} ({:?})", alg_b7.dim(), t.elapsed());
    let t = Instant::now();
    for v in sk7.quiver.vertices() {
        let rad = alg_b7.radical(&alg_b7.projective(v));
        let period = alg_b7.omega_period(&rad, 40);
        println!(
            "  rad P({}) omega period {period:?}",
            sk7.quiver.vertex_name(v)
        );
    }
    println!("  ({:?})", t.elapsed());

    for (label, doc, cap) in [
        ("e6", fixtures::E_SIX, 30),
        ("e7", fixtures::E_SEVEN, 42),
        ("e8", fixtures::E_EIGHT, 66),
    ] {
        let t = Instant::now();
        let q = fixtures::parse(doc);
        let alg = algebra_of(&q);
        println!("{label}: dim {} ({:?})", alg.dim(), t.elapsed());
        let t = Instant::now();
        for v in q.vertices() {
            let rad = alg.radical(&alg.projective(v));
            let period = alg.omega_period(&rad, cap);
            let ges = alg.is_cohen_macaulay(&rad);
            println!(
                "  rad P({}) period {period:?} ges {ges}",
                q.vertex_name(v)
            );
        }
        println!("  ({:?})", t.elapsed());
    }

    let t = Instant::now();
    for (a_name, b_name) in [("5", "5"), ("3", "3"), ("1", "1+")] {
        let va = glued.quiver.vertex_by_name(a_name).unwrap();
        let m = alg_a.radical(&alg_a.projective(va));
        let twisted = alg_a.sigma_twist(&m, &glued.sigma);
        let sum = alg_a.direct_sum(&[&m, &twisted]);
        let rigid_a = alg_a.is_tau_rigid(&sum);
        let vb = sk.quiver.vertex_by_name(b_name).unwrap();
        let mb = alg_b.radical(&alg_b.projective(vb));
        let rigid_b = alg_b.is_tau_rigid(&mb);
        println!("rigidity rad P({a_name}): A-side {rigid_a}, B-side {rigid_b}");
    }
    println!("rigidity sample ({:?})", t.elapsed());

    let block = |alg: &Algebra<Rat>, q: &Quiver, us: &[&str], vs: &[&str]| -> usize {
        us.iter()
            .flat_map(|u| vs.iter().map(move |v| (*u, *v)))
            .map(|(u, v)| {
                alg.basis_between(
                    q.vertex_by_name(u).unwrap(),
                    q.vertex_by_name(v).unwrap(),
                )
                .len()
            })
            .sum()
    };
    let unprimed = ["1", "2", "3", "4", "5"];
    let mirrored = ["1", "2", "3p", "4p", "5p"];
    let plain = block(&alg_a, &glued.quiver, &unprimed, &unprimed);
    let twisted = block(&alg_a, &glued.quiver, &unprimed, &mirrored);
    println!(
        "five: dim fAf {plain} + dim fA(sigma f) {twisted} = {} vs dim B {}",
        plain + twisted,
        alg_b.dim()
    );
    let unprimed7 = ["1", "2", "3", "4", "5", "6", "7"];
    let mirrored7 = ["1", "2", "3p", "4p", "5p", "6p", "7p"];
    let plain7 = block(&alg_a7, &glued7.quiver, &unprimed7, &unprimed7);
    let twisted7 = block(&alg_a7, &glued7.quiver, &unprimed7, &mirrored7);
    println!(
        "seven: dim fAf {plain7} + dim fA(sigma f) {twisted7} = {} vs dim B {}",
        plain7 + twisted7,
        alg_b7.dim()
    );

    let _ = (ConfigA::from_names(&glued.quiver, 7, fixtures::CONFIG_GLUED_FIVE).unwrap(),)
        .0
        .p0(&glued.quiver, &Diag::new(7, 5, 8).unwrap());
    let _ = ConfigD::from_names(&sk.quiver, 7, fixtures::CONFIG_SKEW_FIVE).unwrap();
    let _ = names(&glued.quiver, &[]);
}
