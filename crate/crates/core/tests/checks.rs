use clique_powers::checks::{self, check_square_condition};
use clique_powers::complex::{barycentric_subdivision, clique_complex, independence_complex};
use clique_powers::families::{circular_complete, cycle, random_graph, random_tree, s_graph, three_sun};
use clique_powers::graph::{self, power};
use clique_powers::homology::integer_homology;
use clique_powers::{Limits, SimplicialComplex};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn square_condition_sampled_on_seven_and_eight_vertices() {
    let mut with_condition = 0;
    for seed in 0..150u64 {
        let n = 7 + (seed % 2) as usize;
        let g = random_graph(n, [0.25, 0.4, 0.6][seed as usize % 3], 9000 + seed).unwrap();
        let rep = checks::validate_square_condition(&g, &lim()).unwrap();
        assert!(rep.passed(), "seed {seed}: {}", rep.evidence);
        with_condition += check_square_condition(&g).holds as usize;
    }
    assert!(with_condition > 20);
}

#[test]
fn square_condition_regression_values() {
    // frozen outputs of the checker on the smallest forbidden graphs
    for m in [4, 5, 6] {
        assert!(!check_square_condition(&cycle(m).unwrap()).holds, "C_{m}");
    }
    assert!(!check_square_condition(&three_sun()).holds);
    assert!(check_square_condition(&cycle(3).unwrap()).holds);
    assert!(check_square_condition(&cycle(7).unwrap()).holds);
}

#[test]
fn trees_are_far_from_short_cycles() {
    for seed in 0..8 {
        let t = random_tree(14, seed).unwrap();
        for r in 2..=4 {
            let rep = checks::validate_girth_collapse(&t, r, &lim()).unwrap();
            assert!(rep.passed(), "{}", rep.evidence);
            assert!(checks::validate_fold_power(&t, r).unwrap().passed());
        }
        assert!(checks::validate_h1_surjectivity(&t, 2, &lim()).unwrap().passed());
    }
}

#[test]
fn star_cluster_on_the_circular_corpus() {
    for (n, k) in [(7, 2), (9, 2), (11, 2), (10, 3), (14, 3), (13, 4), (12, 1)] {
        let t = circular_complete(n, k).unwrap();
        assert!(checks::validate_star_cluster(&t, 0, &lim()).unwrap().passed(), "T_{n},{k}");
        let s = s_graph(n, k).unwrap();
        let v = s.index_of(-1).unwrap();
        assert!(checks::validate_star_cluster(&s.graph, v, &lim()).unwrap().passed(), "S_{n},{k}");
    }
}

#[test]
fn sgraph_with_k_two_is_a_cycle_up_to_homology() {
    for n in (7..=21).step_by(2) {
        let s = s_graph(n, 2).unwrap();
        let expected = integer_homology(&independence_complex(&cycle(n - 3).unwrap(), &lim()).unwrap()).unwrap();
        assert_eq!(integer_homology(&independence_complex(&s.graph, &lim()).unwrap()).unwrap(), expected, "n={n}");
        assert_eq!(s.graph.edge_count(), n - 3);
        assert!(s.graph.vertices().all(|v| s.graph.degree(v) == 2));
        assert!(s.graph.is_connected());
    }
}

#[test]
fn subdivision_preserves_homology() {
    let rp2 = SimplicialComplex::from_facets(
        6,
        &[
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
            vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![2, 4, 5], vec![1, 3, 5],
        ],
    )
    .unwrap();
    let mut corpus = vec![rp2, SimplicialComplex::boundary_of_simplex(4)];
    corpus.push(clique_complex(&power(&cycle(9).unwrap(), 3), None, &lim()).unwrap());
    corpus.push(clique_complex(&random_graph(8, 0.5, 11).unwrap(), None, &lim()).unwrap());
    for k in corpus {
        let sd = barycentric_subdivision(&k, &lim()).unwrap().complex;
        assert_eq!(integer_homology(&sd).unwrap(), integer_homology(&k).unwrap());
    }
}

#[test]
fn reports_serialise_with_schema_version() {
    let rep = checks::validate_kozlov(9, &lim()).unwrap();
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["evidence"]["predicted"], "v^2 S^2");
    let back: checks::TheoremReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn dismantlable_powers_of_cycles() {
    // C_n^r is dismantlable exactly when it is complete
    for n in 4..=12 {
        for r in 1..=(n / 2) as u32 {
            let g = power(&cycle(n).unwrap(), r);
            let complete = 2 * r as usize >= n - 1;
            assert_eq!(graph::dismantle(&g).unwrap().is_some(), complete, "n={n} r={r}");
        }
    }
}
