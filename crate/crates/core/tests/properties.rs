use clique_powers::complex::{clique_complex, cone, independence_complex, suspension};
use clique_powers::graph::{self, complement, power, Graph};
use clique_powers::homology::{betti_mod_p, clique_homology, integer_homology, rational_betti, Tier};
use clique_powers::{Limits, SimplicialComplex};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn lim() -> Limits {
    Limits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn independence_is_clique_of_complement(g in arb_graph(8)) {
        prop_assert_eq!(independence_complex(&g, &lim()).unwrap(), clique_complex(&complement(&g), None, &lim()).unwrap());
    }

    #[test]
    fn euler_characteristic_agrees(g in arb_graph(8)) {
        let k = clique_complex(&g, None, &lim()).unwrap();
        let p = integer_homology(&k).unwrap();
        prop_assert_eq!(p.reduced_euler_characteristic(), k.reduced_euler_characteristic());
    }

    #[test]
    fn field_betti_bracket_torsion(g in arb_graph(8)) {
        let k = clique_complex(&g, None, &lim()).unwrap();
        let p = integer_homology(&k).unwrap();
        let q = rational_betti(&k).unwrap();
        prop_assert_eq!(&q, &p.betti);
        if p.is_torsion_free() {
            prop_assert_eq!(betti_mod_p(&k, 2).unwrap(), q);
        }
    }

    #[test]
    fn folding_preserves_homology(g in arb_graph(9), r in 1u32..4) {
        let h = power(&g, r);
        let direct = integer_homology(&clique_complex(&h, None, &lim()).unwrap()).unwrap();
        prop_assert_eq!(clique_homology(&h, Tier::Exact, &lim()).unwrap().profile, direct);
    }

    #[test]
    fn suspension_shifts_and_cones_vanish(g in arb_graph(7)) {
        let k = clique_complex(&g, None, &lim()).unwrap();
        let p = integer_homology(&k).unwrap();
        prop_assert_eq!(integer_homology(&suspension(&k, &lim()).unwrap()).unwrap(), p.suspend());
        prop_assert!(integer_homology(&cone(&k, &lim()).unwrap()).unwrap().is_trivial());
    }

    #[test]
    fn powers_are_nested(g in arb_graph(9), r in 1u32..4) {
        let a = clique_complex(&power(&g, r), None, &lim()).unwrap();
        let b = clique_complex(&power(&g, r + 1), None, &lim()).unwrap();
        prop_assert!(a.is_subcomplex_of(&b));
    }

    #[test]
    fn facets_round_trip(g in arb_graph(8)) {
        let k = clique_complex(&g, None, &lim()).unwrap();
        let mut buf = Vec::new();
        k.write_facets(&mut buf).unwrap();
        prop_assert_eq!(SimplicialComplex::read_facets(&buf[..]).unwrap(), k);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(10)) {
        let text = graph::edge_list_string(&g);
        prop_assert_eq!(graph::read_edge_list(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn dismantlable_graphs_have_trivial_clique_homology(g in arb_graph(8)) {
        if graph::dismantle(&g).unwrap().is_some() {
            prop_assert!(clique_homology(&g, Tier::Exact, &lim()).unwrap().profile.is_trivial());
        }
    }
}
