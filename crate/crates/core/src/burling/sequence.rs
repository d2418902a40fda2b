//! The abstract Burling sequence: triangle-free graphs carrying a family of
//! special stable sets, built so that every proper coloring of level `k`
//! puts at least `k` colors on some special set.
//!
//! Level 1 is a single vertex `v` with specials `{{v}}`. Level `k+1` takes
//! a base copy `B` of level `k` and, for every special `S` of `B`, a fresh
//! copy `C_S` of level `k`; for every special `S'` of `C_S` a new vertex
//! `v(S, S')` is joined to exactly the vertices of `S'`. The new specials
//! are `S ∪ {v(S, S')}` and `S ∪ S'`, in that order, for every pair.
//!
//! Ids are laid out as the base copy first, then one block per special `S`
//! of the base: the `n_k` vertices of `C_S` followed by its `p_k` new
//! vertices in special order.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Highest level generated unless a caller raises it.
pub const DEFAULT_MAX_LEVEL: usize = 5;

#[derive(Clone, Debug)]
pub struct BurlingLevel {
    pub level: usize,
    pub graph: Graph,
    /// Special stable sets, each sorted ascending.
    pub specials: Vec<Vec<usize>>,
}

/// `(n_k, p_k)` from the size recurrences.
pub fn level_sizes(k: usize) -> (u128, u128) {
    let (mut n, mut p) = (1u128, 1u128);
    for _ in 1..k {
        (n, p) = (n + p * (n + p), 2 * p * p);
    }
    (n, p)
}

/// Id of the first vertex of the block belonging to base special `i`.
pub(crate) fn block_offset(n: usize, p: usize, i: usize) -> usize {
    n + i * (n + p)
}

pub fn burling_abstract(k: usize) -> Result<BurlingLevel> {
    burling_abstract_with_max(k, DEFAULT_MAX_LEVEL)
}

pub fn burling_abstract_with_max(k: usize, max_level: usize) -> Result<BurlingLevel> {
    if k == 0 || k > max_level {
        return Err(Error::LevelOutOfRange { level: k, max: max_level });
    }
    let mut n = 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut specials: Vec<Vec<usize>> = vec![vec![0]];
    for _ in 1..k {
        let p = specials.len();
        let mut next_edges = Vec::with_capacity(edges.len() * (p + 1) + p * p * k);
        let mut next_specials = Vec::with_capacity(2 * p * p);
        next_edges.extend_from_slice(&edges);
        for (i, base_special) in specials.iter().enumerate() {
            let off = block_offset(n, p, i);
            next_edges.extend(edges.iter().map(|&(u, v)| (u + off, v + off)));
            for (j, copy_special) in specials.iter().enumerate() {
                let fresh = off + n + j;
                next_edges.extend(copy_special.iter().map(|&s| (s + off, fresh)));

                let mut with_fresh = base_special.clone();
                with_fresh.push(fresh);
                with_fresh.sort_unstable();
                next_specials.push(with_fresh);

                let mut union = base_special.clone();
                union.extend(copy_special.iter().map(|&s| s + off));
                union.sort_unstable();
                next_specials.push(union);
            }
        }
        n += p * (n + p);
        edges = next_edges;
        specials = next_specials;
    }
    Ok(BurlingLevel { level: k, graph: Graph::from_edges(n, &edges)?, specials })
}

/// Index of the first special set carrying at least `lv.level` distinct colors.
///
/// For a proper coloring such a set always exists; `Ok(None)` therefore
/// signals a broken construction.
pub fn probe_lemma_check(lv: &BurlingLevel, coloring: &Coloring) -> Result<Option<usize>> {
    coloring.verify(&lv.graph)?;
    let mut colors = Vec::new();
    Ok(lv.specials.iter().position(|special| {
        colors.clear();
        colors.extend(special.iter().map(|&v| coloring.color(v)));
        colors.sort_unstable();
        colors.dedup();
        colors.len() >= lv.level
    }))
}
