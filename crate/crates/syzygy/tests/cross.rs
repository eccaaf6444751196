//! Dual-route checks: every value here is computed once through the
//! geometric model and once through the linear-algebra oracle, and the
//! two answers are compared. Nothing in this file trusts one route to
//! validate the other.

use syzygy::cycles::CycleData;
use syzygy::fixtures::{self, CONFIG_GLUED_FIVE, CONFIG_SKEW_FIVE, HALF_FIVE, HALF_SEVEN};
use syzygy::gaction::{glue, skew, Glued, Skew};
use syzygy::geom::{mesh_hom_dim_arc, mesh_hom_dim_diag, ConfigA, ConfigD};
use syzygy::oracle::{Algebra, Rat};
use syzygy::potential::{effective_potential, jacobian_relations};
use syzygy::quiver::{Quiver, VertexIx};

fn algebra_of(q: &Quiver) -> Algebra<Rat> {
    let data = CycleData::new(q);
    let pot = effective_potential(q, &data).expect("fixture has a potential");
    Algebra::new(q, &jacobian_relations(q, &pot)).expect("finite dimensional")
}

fn names(q: &Quiver, vs: &[VertexIx]) -> Vec<String> {
    let mut out: Vec<String> = vs.iter().map(|&v| q.vertex_name(v).to_string()).collect();
    out.sort();
    out
}

fn glued_five() -> (Quiver, Glued) {
    let half = fixtures::parse(HALF_FIVE);
    let glued = glue(&half, "alpha").expect("alpha is interior");
    (half, glued)
}

fn skew_five() -> Skew {
    let half = fixtures::parse(HALF_FIVE);
    skew(&half, "alpha").expect("alpha is interior")
}

#[test]
fn skew_dimension_equals_the_invariant_slice_of_the_glued_algebra() {
    for (doc, expect_a, expect_b) in [(HALF_FIVE, 34, 29), (HALF_SEVEN, 80, 60)] {
        let half = fixtures::parse(doc);
        let glued = glue(&half, "alpha").unwrap();
        let skewed = skew(&half, "alpha").unwrap();
        let a = algebra_of(&glued.quiver);
        let b = algebra_of(&skewed.quiver);
        assert_eq!(a.dim(), expect_a, "{}: glued dimension", half.name);
        assert_eq!(b.dim(), expect_b, "{}: skew dimension", half.name);

        let unprimed: Vec<VertexIx> = half
            .vertex_names()
            .map(|n| glued.quiver.vertex_by_name(n).unwrap())
            .collect();
        let slice = |targets: &[VertexIx]| -> usize {
            unprimed
                .iter()
                .flat_map(|&u| targets.iter().map(move |&v| (u, v)))
                .map(|(u, v)| a.basis_between(u, v).len())
                .sum()
        };
        let mirrored: Vec<VertexIx> = unprimed.iter().map(|&v| glued.sigma.vertex(v)).collect();
        assert_eq!(
            b.dim(),
            slice(&unprimed) + slice(&mirrored),
            "{}: skew dimension against the two diagonal blocks",
            half.name
        );
    }
}

#[test]
fn polygon_covers_match_oracle_resolutions_on_the_glued_side() {
    let (_, glued) = glued_five();
    let q = &glued.quiver;
    let cfg = ConfigA::from_names(q, 7, CONFIG_GLUED_FIVE).unwrap();
    assert!(cfg.validate(q, Some(&glued.sigma)).is_empty());
    let a = algebra_of(q);
    for v in q.vertices() {
        let gamma = cfg.diagonal(v).unwrap();
        let rad = a.radical(&a.projective(v));
        let tops = a.resolution_tops(&rad, 14);
        let covers = cfg.cover_sequence(q, &gamma, 14);
        for (k, (t, c)) in tops.iter().zip(covers.iter()).enumerate() {
            assert_eq!(
                names(q, t),
                names(q, c),
                "cover of the {k}-th syzygy over vertex {}",
                q.vertex_name(v)
            );
        }
    }
}

#[test]
fn punctured_covers_match_oracle_resolutions_on_the_skew_side() {
    let skewed = skew_five();
    let q = &skewed.quiver;
    let cfg = ConfigD::from_names(q, 7, CONFIG_SKEW_FIVE).unwrap();
    assert!(cfg.validate(q).is_empty());
    let b = algebra_of(q);
    for v in q.vertices() {
        let gamma = cfg.arc(v).unwrap();
        let rad = b.radical(&b.projective(v));
        let tops = b.resolution_tops(&rad, 14);
        let covers = cfg.cover_sequence(q, &gamma, 14);
        for (k, (t, c)) in tops.iter().zip(covers.iter()).enumerate() {
            assert_eq!(
                names(q, t),
                names(q, c),
                "cover of the {k}-th syzygy over vertex {}",
                q.vertex_name(v)
            );
        }
    }
}

#[test]
fn projecting_the_polygon_configuration_recovers_the_punctured_one() {
    let (_, glued) = glued_five();
    let skewed = skew_five();
    let cfg_a = ConfigA::from_names(&glued.quiver, 7, CONFIG_GLUED_FIVE).unwrap();
    let derived = ConfigD::from_a(&cfg_a, &glued.quiver, &skewed.quiver, "1", "2").unwrap();
    let reference = ConfigD::from_names(&skewed.quiver, 7, CONFIG_SKEW_FIVE).unwrap();
    for v in skewed.quiver.vertices() {
        assert_eq!(
            derived.arc(v),
            reference.arc(v),
            "arc at {}",
            skewed.quiver.vertex_name(v)
        );
    }
}

#[test]
fn syzygy_periods_match_the_rotation_orbits() {
    let (_, glued) = glued_five();
    let q = &glued.quiver;
    let cfg = ConfigA::from_names(q, 7, CONFIG_GLUED_FIVE).unwrap();
    let a = algebra_of(q);
    for v in q.vertices() {
        let gamma = cfg.diagonal(v).unwrap();
        let mut cur = gamma;
        let mut orbit = 0;
        loop {
            cur = cur.syzygy();
            orbit += 1;
            if cur == gamma {
                break;
            }
        }
        let rad = a.radical(&a.projective(v));
        let period = a.omega_period(&rad, 32).unwrap();
        assert_eq!(period, orbit, "period over vertex {}", q.vertex_name(v));
    }
}

#[test]
fn half_rotation_twists_by_the_swap() {
    let (_, glued) = glued_five();
    let q = &glued.quiver;
    let a = algebra_of(q);
    for v in q.vertices() {
        let rad = a.radical(&a.projective(v));
        let mut omega = rad.clone();
        for _ in 0..7 {
            omega = a.syzygy(&omega);
        }
        let twisted = a.sigma_twist(&rad, &glued.sigma);
        assert!(
            a.is_isomorphic(&omega, &twisted),
            "seventh syzygy over {} against the swap twist",
            q.vertex_name(v)
        );
    }
}

#[test]
fn mesh_tables_match_oracle_stable_homs_on_the_glued_side() {
    let (_, glued) = glued_five();
    let q = &glued.quiver;
    let cfg = ConfigA::from_names(q, 7, CONFIG_GLUED_FIVE).unwrap();
    let a = algebra_of(q);
    let rads: Vec<_> = q
        .vertices()
        .map(|v| a.radical(&a.projective(v)))
        .collect();
    for x in q.vertices() {
        for y in q.vertices() {
            let gx = cfg.diagonal(x).unwrap();
            let gy = cfg.diagonal(y).unwrap();
            let mesh = mesh_hom_dim_diag(&gx, &gy).unwrap();
            let oracle = a.stable_hom_dim(&rads[x.0], &rads[y.0]);
            assert_eq!(
                mesh,
                oracle,
                "stable homs {} -> {}",
                q.vertex_name(x),
                q.vertex_name(y)
            );
        }
    }
}

#[test]
fn mesh_tables_match_oracle_stable_homs_on_the_skew_side() {
    let skewed = skew_five();
    let q = &skewed.quiver;
    let cfg = ConfigD::from_names(q, 7, CONFIG_SKEW_FIVE).unwrap();
    let b = algebra_of(q);
    let rads: Vec<_> = q
        .vertices()
        .map(|v| b.radical(&b.projective(v)))
        .collect();
    for x in q.vertices() {
        for y in q.vertices() {
            let gx = cfg.arc(x).unwrap();
            let gy = cfg.arc(y).unwrap();
            let mesh = mesh_hom_dim_arc(&gx, &gy).unwrap();
            let oracle = b.stable_hom_dim(&rads[x.0], &rads[y.0]);
            assert_eq!(
                mesh,
                oracle,
                "stable homs {} -> {}",
                q.vertex_name(x),
                q.vertex_name(y)
            );
        }
    }
}

#[test]
fn radicals_satisfy_the_stable_equivalence_criterion_on_both_sides() {
    let (_, glued) = glued_five();
    let skewed = skew_five();
    for q in [&glued.quiver, &skewed.quiver] {
        let alg = algebra_of(q);
        for v in q.vertices() {
            let rad = alg.radical(&alg.projective(v));
            assert!(
                alg.is_cohen_macaulay(&rad),
                "{}: radical over {}",
                q.name,
                q.vertex_name(v)
            );
        }
    }
}
