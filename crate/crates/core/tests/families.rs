mod common;

use common::*;
use proptest::prelude::*;
use specx_core::canon::is_isomorphic;
use specx_core::families::*;
use specx_core::graph::*;

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

#[test]
fn undirected_constructions_have_their_parameters() {
    for n in 5..=9 {
        for kappa_e in 1..=n - 4 {
            for delta in 1..n {
                let Ok(p) = UndirectedFamilyParams::new(n, kappa_e, delta) else { continue };
                let g = build_undirected_extremal(&p).unwrap();
                assert_eq!(g.order(), n);
                assert!(g.is_connected());
                assert_eq!(g.min_degree().unwrap(), delta, "{p}");
                assert_eq!(brute_essential(&matrix(&g)), Some(kappa_e), "{p}");
                let part = coarsest_equitable_refinement_of(&p, &g);
                assert!(part, "{p}: natural cells not equitable");
            }
        }
    }
}

fn coarsest_equitable_refinement_of(p: &UndirectedFamilyParams, g: &specx_core::Graph) -> bool {
    specx_core::quotient::is_equitable(g, &undirected_extremal_cells(p)).unwrap().is_equitable()
}

#[test]
fn join_case_edge_count() {
    for n in 6..=12 {
        for kappa_e in 1..=n - 4 {
            for delta in kappa_e + 1..n {
                let Ok(p) = UndirectedFamilyParams::new(n, kappa_e, delta) else { continue };
                let g = build_undirected_extremal(&p).unwrap();
                let (a, b) = (n - delta - 1, delta - kappa_e + 1);
                assert_eq!(g.edge_count(), choose2(kappa_e) + kappa_e * (a + b) + choose2(a) + choose2(b));
            }
        }
    }
    let g = build_undirected_extremal(&UndirectedFamilyParams::new(8, 2, 3).unwrap()).unwrap();
    assert_eq!(g.edge_count(), 20);
    assert!(is_isomorphic(&g, &build_join_family(2, &[4, 2]).unwrap()).is_some());
}

#[test]
fn digraph_constructions_have_their_parameters() {
    for n in 5..=8 {
        for k in 1..=n - 4 {
            for p in DigraphFamilyParams::all_m(n, k) {
                let d = build_digraph_extremal(&p).unwrap();
                let (m, r) = (p.m, n - k - p.m);
                let arcs = k * (k - 1) + m * (m - 1) + r * (r - 1) + 2 * k * (n - k) + m * r;
                assert_eq!(d.arc_count(), arcs, "{p}");
                let a = digraph_matrix(&d);
                assert!(is_strong(&a));
                assert_eq!(brute_essential_digraph(&a), Some(k), "{p}");
            }
        }
    }
    let d = build_digraph_extremal(&DigraphFamilyParams::new(5, 1, 2).unwrap()).unwrap();
    assert_eq!(d.arc_count(), 16);
    let base = digraph_nabla(&complete_digraph(1), &digraph_union(&complete_digraph(2), &complete_digraph(2)));
    assert_eq!(base.arc_count(), 12);
}

#[test]
fn lemma8_endpoints() {
    for n in 6..=200usize {
        for k in 1..=n - 4 {
            let top = ((n as i128) - 4).pow(2) + 8 * k as i128;
            assert_eq!(lemma8_f(n, k, 2).unwrap(), top);
            assert_eq!(lemma8_f(n, k, n - k - 2).unwrap(), top);
            for x in 3..n - k - 2 {
                assert!(lemma8_f(n, k, x).unwrap() < top);
            }
        }
    }
}

proptest! {
    #[test]
    fn join_edge_count_identity(n1 in 0usize..=8, n2 in 0usize..=8, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut random = |n: usize| {
            let mut g = specx_core::Graph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(a, b);
                    }
                }
            }
            g
        };
        let (g1, g2) = (random(n1), random(n2));
        let j = join(&g1, &g2);
        prop_assert_eq!(j.order(), n1 + n2);
        prop_assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + n1 * n2);
        let u = disjoint_union(&g1, &g2);
        prop_assert_eq!(u.edge_count(), g1.edge_count() + g2.edge_count());
    }

    #[test]
    fn digraph_family_rho_bounded_by_endpoints(n in 6usize..=40, k_frac in 0.0f64..1.0) {
        let k = 1 + ((n - 5) as f64 * k_frac) as usize;
        let top = closed_form_digraph_rho(&DigraphFamilyParams::new(n, k, 2).unwrap()).unwrap();
        let other = closed_form_digraph_rho(&DigraphFamilyParams::new(n, k, n - k - 2).unwrap()).unwrap();
        prop_assert_eq!(top, other);
        for p in DigraphFamilyParams::all_m(n, k) {
            prop_assert!(closed_form_digraph_rho(&p).unwrap() <= top);
        }
    }
}
