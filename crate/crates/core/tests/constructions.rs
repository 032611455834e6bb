use gturan::constructions::{
    double_star, g1, g2, g3, g4, g5, h_extremal, h_minus, h_minus_variants, pair_join_matching,
    turan, turan_union,
};
use gturan::detect::{has_clique, has_path, is_connected, is_free};
use gturan::formulas::{delta_k, has_h_minus};
use gturan::oracle::g3_block_family;
use gturan::Graph;

#[test]
fn h_graphs_are_free_connected_and_of_minimum_degree_delta() {
    for k in 4..=13 {
        let d = delta_k(k);
        for m in 3..k {
            for n in d + 2..=20 {
                let h = h_extremal(n, m, k).unwrap();
                assert_eq!(h.order(), n);
                assert!(is_free(&h, k, m), "H_{n}({m},{k})");
                assert!(is_connected(&h));
                if n >= 2 * d {
                    assert!(h.min_degree().unwrap() >= d);
                }
                assert!((0..n).any(|v| h.degree(v) == d) || n == d + 2);
            }
        }
    }
}

#[test]
fn h_minus_graphs_are_free_when_defined() {
    for k in (5..=13).step_by(2) {
        let d = delta_k(k);
        for m in 3..k {
            if !has_h_minus(m, k) {
                assert!(h_minus(d + 4, m, k).is_err());
                continue;
            }
            for n in d + 4..=20 {
                let base = h_extremal(n, m, k).unwrap();
                for g in h_minus_variants(n, m, k).unwrap() {
                    assert!(is_free(&g, k, m), "H^-_{n}({m},{k})");
                    assert!(is_connected(&g));
                    assert_eq!(g.size(), base.size());
                }
                assert!(h_minus_variants(n, m, k)
                    .unwrap()
                    .contains(&h_minus(n, m, k).unwrap()));
            }
        }
    }
}

#[test]
fn double_stars_avoid_p5_and_triangles() {
    for a in 1..=8 {
        for b in a..=8 {
            let g = double_star(a, b).unwrap();
            assert_eq!(g.order(), a + b);
            assert_eq!(g.size(), a + b - 1);
            assert!(is_free(&g, 5, 3));
            assert!(is_connected(&g));
        }
    }
}

#[test]
fn class_constructions_are_free_with_minimum_degree_delta() {
    for k in [7, 9, 11] {
        let d = delta_k(k);
        let m = d + 2;
        for t in 2..=4 {
            let n = 1 + t * d;
            let g = g1(n, k).unwrap();
            assert!(is_free(&g, k, m));
            assert_eq!(g.min_degree(), Some(d));
            let g = g2(n, n, k).unwrap();
            assert!(is_free(&g, k, m));
            assert_eq!(g.min_degree(), Some(d));
        }
    }
    for n1 in [5, 7, 9] {
        for n2 in [5, 6] {
            for g in [g4(n1, n2).unwrap(), g5(n1, n2).unwrap()] {
                assert!(!has_path(&g, 7), "{}", g.to_graph6());
                assert!(!has_clique(&g, 4));
                assert_eq!(g.min_degree(), Some(2));
            }
        }
    }
    for t in 2..=4 {
        for clique in [false, true] {
            let g = pair_join_matching(t, clique).unwrap();
            assert!(!has_path(&g, 9));
            assert!(!has_clique(&g, if clique { 5 } else { 4 }));
            assert!(has_clique(&g, if clique { 4 } else { 3 }));
            assert_eq!(g.min_degree(), Some(3));
        }
    }
}

#[test]
fn g3_with_every_block_of_the_family() {
    for (k, m) in [(5, 4), (7, 5), (9, 6)] {
        let d = delta_k(k);
        for block in g3_block_family(k, m).unwrap() {
            for t in 2..=3 {
                let g = g3(2 + t * d, k, &block, 0).unwrap();
                assert!(is_free(&g, k, m), "k={k} m={m} {}", g.to_graph6());
                assert!(is_connected(&g));
                assert!(g.min_degree().unwrap() >= d);
            }
        }
    }
}

#[test]
fn turan_union_is_free() {
    for k in 4..=9 {
        for m in 3..k {
            for t in 1..=3 {
                let g = turan_union(t * (k - 1), k, m).unwrap();
                assert!(is_free(&g, k, m));
                assert_eq!(g.size(), t * turan(k - 1, m - 1).unwrap().size());
            }
            assert!(turan_union(k, k, m).is_err());
        }
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(h_extremal(3, 3, 8).is_err());
    assert!(g1(8, 7).is_err());
    assert!(g2(7, 7, 8).is_err());
    assert!(g4(4, 3).is_err());
    assert!(g3(8, 7, &Graph::path(4).unwrap(), 0).is_err());
    assert!(double_star(0, 3).is_err());
}
