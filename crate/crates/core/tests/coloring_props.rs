use framebox_core::burling::{burling_abstract, probe_lemma_check};
use framebox_core::coloring::{chromatic_number, greedy_coloring, k_colorable, ColorStatus, DEFAULT_BUDGET};
use framebox_core::shipped::g1_graph;
use framebox_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest k admitting a proper assignment, by plain enumeration of k^n maps.
fn brute_force_chi(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<_> = g.edges().collect();
    for k in 1..=n {
        let mut col = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| col[u] != col[v]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                col[i] += 1;
                if col[i] < k {
                    break;
                }
                col[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice")
}

fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), Graph::cycle(n)));
        out.push((format!("P{n}"), Graph::path(n)));
    }
    for rim in 3..=7 {
        let spokes: Vec<_> = (0..rim).collect();
        out.push((format!("W{rim}"), Graph::wheel_on(rim, &spokes)));
    }
    out.push(("g1".into(), g1_graph()));
    out.push(("burling2".into(), burling_abstract(2).unwrap().graph));
    let k33 = Graph::from_edge_iter(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    out.push(("K3,3".into(), k33));
    let k44 = Graph::from_edge_iter(8, (0..4).flat_map(|u| (4..8).map(move |v| (u, v)))).unwrap();
    out.push(("K4,4".into(), k44));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..60 {
        let n = rng.gen_range(1..=8);
        let p = [0.2, 0.4, 0.6][i % 3];
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        out.push((format!("random{i}"), Graph::from_edges(n, &edges).unwrap()));
    }
    out
}

#[test]
fn solver_matches_brute_force_on_corpus() {
    for (name, g) in corpus() {
        let r = chromatic_number(&g, DEFAULT_BUDGET);
        let chi = r.exact().unwrap_or_else(|| panic!("{name}: solver gave a bracket"));
        assert_eq!(chi, brute_force_chi(&g), "{name}");
        r.coloring.verify(&g).unwrap();
        assert_eq!(r.coloring.colors_used(), chi, "{name}");
        if chi > 0 {
            let refutation = r.refutation.as_ref().expect("lower certificate");
            assert_eq!(refutation.k, chi - 1, "{name}");
            assert!(matches!(refutation.status, ColorStatus::NoComplete), "{name}");
        }
    }
}

#[test]
fn k_colorable_answers_match_brute_force() {
    for (name, g) in corpus().into_iter().take(40) {
        let chi = brute_force_chi(&g);
        for k in 0..=chi + 1 {
            let v = k_colorable(&g, k, DEFAULT_BUDGET);
            match v.status {
                ColorStatus::Yes(c) => {
                    assert!(k >= chi, "{name} k={k}");
                    c.verify(&g).unwrap();
                    assert!(c.colors_used() <= k);
                }
                ColorStatus::NoComplete => assert!(k < chi, "{name} k={k}"),
                ColorStatus::Unknown => panic!("{name}: budget"),
            }
        }
    }
}

#[test]
fn burling_levels_need_level_many_colors() {
    for k in 2..=4 {
        let lv = burling_abstract(k).unwrap();
        let v = k_colorable(&lv.graph, k - 1, 100_000_000);
        assert!(matches!(v.status, ColorStatus::NoComplete), "level {k}: {}", v.status_name());
    }
}

#[test]
fn random_greedy_colorings_satisfy_the_probe_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for k in 1..=5 {
        let lv = burling_abstract(k).unwrap();
        let mut order: Vec<usize> = (0..lv.graph.n()).collect();
        for _ in 0..100 {
            order.shuffle(&mut rng);
            let c = greedy_coloring(&lv.graph, &order).unwrap();
            let hit = probe_lemma_check(&lv, &c).unwrap();
            assert!(hit.is_some(), "level {k}: no special set with {k} colors");
        }
    }
}
