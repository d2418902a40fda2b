use std::collections::BTreeSet;

use framebox_core::cbu::{box_graph, lift_dim, rank_normalize, search_cbu, verify_cbu, BoxD, BoxFamily, SearchOutcome};
use framebox_core::graph::{graphs_equal_by_id, triangle_witness};
use framebox_core::{Graph, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Boxes are added one at a time and kept only if every contact with the
/// boxes already present is degenerate on axis 0.
fn sample_valid_family(rng: &mut ChaCha8Rng) -> BoxFamily {
    let dim = rng.gen_range(1..=3);
    let target = rng.gen_range(1..=9);
    let mut boxes: Vec<BoxD> = Vec::new();
    for _ in 0..200 {
        if boxes.len() == target {
            break;
        }
        let bounds: Vec<(i64, i64)> = (0..dim)
            .map(|_| {
                let lo = rng.gen_range(0..12);
                (lo, lo + rng.gen_range(1..5))
            })
            .collect();
        let cand = BoxD::ints(boxes.len(), &bounds);
        let fits = boxes.iter().all(|b| {
            let lo = b.intervals[0].lo().max(cand.intervals[0].lo());
            let hi = b.intervals[0].hi().min(cand.intervals[0].hi());
            !b.meets(&cand) || lo == hi
        });
        if fits {
            boxes.push(cand);
        }
    }
    BoxFamily::new(dim, boxes).unwrap()
}

#[test]
fn sampled_valid_families_are_triangle_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut with_edges = 0;
    for _ in 0..1000 {
        let f = sample_valid_family(&mut rng);
        let r = verify_cbu(&f).unwrap();
        assert!(r.valid);
        assert_eq!(triangle_witness(&r.graph), None);
        with_edges += usize::from(r.graph.m() > 0);
    }
    // the sampler must not degenerate into edgeless families
    assert!(with_edges > 500, "{with_edges}");
}

#[test]
fn rank_normalization_preserves_graph_and_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..1000 {
        let mut f = sample_valid_family(&mut rng);
        if round % 2 == 1 {
            // overlapping boxes too, so invalid verdicts are exercised
            f.boxes.push(BoxD::ints(f.boxes.len(), &vec![(3, 9); f.dim]));
        }
        // random positive rescaling first, so ranks differ from raw values
        let maps: Vec<_> = (0..f.dim)
            .map(|_| (Scalar::ratio(rng.gen_range(1..40), rng.gen_range(1..40)), Scalar::int(rng.gen_range(-50..50))))
            .collect();
        let scaled = f.map_axes(&maps);
        let norm = rank_normalize(&scaled);
        let (a, b) = (verify_cbu(&f).unwrap(), verify_cbu(&norm).unwrap());
        assert_eq!(a.valid, b.valid);
        assert!(graphs_equal_by_id(&a.graph, &b.graph));
        assert!(graphs_equal_by_id(&box_graph(&scaled), &a.graph));
    }
}

#[test]
fn repeated_lifting_preserves_graph_and_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let f = sample_valid_family(&mut rng);
        let g = box_graph(&f);
        let mut cur = f.clone();
        for depth in 1..=3 {
            cur = lift_dim(&cur);
            assert_eq!(cur.dim, f.dim + depth);
            let r = verify_cbu(&cur).unwrap();
            assert!(r.valid);
            assert!(graphs_equal_by_id(&r.graph, &g));
        }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// 0 empty, 1 single point, 2 segment.
fn meet_code(a: (i64, i64), b: (i64, i64)) -> u8 {
    let (lo, hi) = (a.0.max(b.0), a.1.min(b.1));
    match lo.cmp(&hi) {
        std::cmp::Ordering::Greater => 0,
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Less => 2,
    }
}

/// All per-pair meet patterns realizable by `n` proper integer intervals in
/// `0..=2n`.
fn realizable_patterns(n: usize) -> BTreeSet<Vec<u8>> {
    let top = 2 * n as i64;
    let ivs: Vec<(i64, i64)> = (0..=top).flat_map(|lo| (lo + 1..=top).map(move |hi| (lo, hi))).collect();
    let ps = pairs(n);
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; n];
    loop {
        out.insert(ps.iter().map(|&(u, v)| meet_code(ivs[idx[u]], ivs[idx[v]])).collect());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            idx[i] += 1;
            if idx[i] < ivs.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// A graph is 2-CBU on the grid iff some axis-0 pattern and some axis-1
/// pattern combine to exactly its edge set with point contacts on axis 0.
fn brute_force_2cbu(g: &Graph, patterns: &BTreeSet<Vec<u8>>) -> bool {
    let ps = pairs(g.n());
    patterns.iter().any(|x| {
        let x_ok = ps.iter().zip(x).all(|(&(u, v), &c)| !g.has_edge(u, v) || c == 1);
        x_ok && patterns.iter().any(|y| {
            ps.iter().zip(x).zip(y).all(|((&(u, v), &cx), &cy)| {
                let meet = cx != 0 && cy != 0;
                meet == g.has_edge(u, v)
            })
        })
    })
}

#[test]
fn search_agrees_with_brute_force_on_four_vertices() {
    for n in 1..=4 {
        let patterns = realizable_patterns(n);
        let ps = pairs(n);
        for mask in 0u32..(1 << ps.len()) {
            let edges: Vec<_> = ps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let expected = brute_force_2cbu(&g, &patterns);
            let r = search_cbu(&g, 2, u64::MAX).unwrap();
            match r.outcome {
                SearchOutcome::Representation(f) => {
                    assert!(expected, "n={n} edges={edges:?}");
                    let rep = verify_cbu(&f).unwrap();
                    assert!(rep.valid);
                    assert!(graphs_equal_by_id(&rep.graph, &g));
                    assert_eq!(triangle_witness(&rep.graph), None);
                }
                SearchOutcome::NoneComplete => assert!(!expected, "n={n} edges={edges:?}"),
                SearchOutcome::Unknown => panic!("unbounded budget"),
            }
        }
    }
}

#[test]
fn graphs_with_triangles_have_no_representation() {
    let k3_plus = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let r = search_cbu(&k3_plus, 2, u64::MAX).unwrap();
    assert!(matches!(r.outcome, SearchOutcome::NoneComplete));
}
