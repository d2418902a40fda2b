//! Exact chromatic and clique numbers with certificates.
//!
//! `k_colorable` is a saturation-ordered (DSATUR) backtracking search with
//! forward checking. Colors are introduced in increasing order, so the first
//! vertex always gets color 0 and permuting color names never creates a new
//! branch. The budget counts color assignments, which keeps runs
//! reproducible independent of machine speed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{triangle_witness, wheel_witness, Graph, WheelWitness};

/// Default decision-node budget for exact searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default vertex limit for exact clique search on graphs with triangles.
pub const DEFAULT_CLIQUE_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    colors_used: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let mut distinct = assignment.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Coloring { colors_used: distinct.len(), assignment }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn colors_used(&self) -> usize {
        self.colors_used
    }

    pub fn verify(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::ColoringSize { got: self.assignment.len(), n: g.n() });
        }
        match g.edges().find(|&(u, v)| self.assignment[u] == self.assignment[v]) {
            Some((u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn to_map(&self) -> BTreeMap<usize, usize> {
        self.assignment.iter().copied().enumerate().collect()
    }
}

/// First-fit coloring in the given vertex order.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::InvalidPermutation(n));
    }
    let mut color = vec![usize::MAX; n];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.extend(g.neighbors(v).iter().map(|&w| color[w]).filter(|&c| c != usize::MAX));
        taken.sort_unstable();
        taken.dedup();
        color[v] = taken.iter().enumerate().find(|&(i, &c)| i != c).map_or(taken.len(), |(i, _)| i);
    }
    Ok(Coloring::new(color))
}

/// Greedy DSATUR coloring (no backtracking), used as an upper bound.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (neighbor_colors[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = (0..).find(|c| neighbor_colors[v].binary_search(c).is_err()).unwrap();
        color[v] = c;
        for &w in g.neighbors(v) {
            if let Err(pos) = neighbor_colors[w].binary_search(&c) {
                neighbor_colors[w].insert(pos, c);
            }
        }
    }
    Coloring::new(color)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorStatus {
    Yes(Coloring),
    /// The search space was exhausted: no proper k-coloring exists.
    NoComplete,
    /// Budget ran out first.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorVerdict {
    pub k: usize,
    pub status: ColorStatus,
    pub nodes_explored: u64,
}

impl ColorVerdict {
    pub fn status_name(&self) -> &'static str {
        match self.status {
            ColorStatus::Yes(_) => "yes",
            ColorStatus::NoComplete => "no_complete",
            ColorStatus::Unknown => "unknown",
        }
    }
}

struct Frame {
    vertex: usize,
    next_color: usize,
    prev_used: usize,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // blocked[v * k + c]: number of neighbors of v colored c
    blocked: Vec<u32>,
    saturation: Vec<usize>,
    uncolored_degree: Vec<usize>,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.uncolored_degree[v], std::cmp::Reverse(v)))
    }

    /// Colors `v` with `c`; returns false if some uncolored neighbor is left
    /// without any admissible color (the assignment is still recorded).
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            self.uncolored_degree[w] -= 1;
            let slot = &mut self.blocked[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w] += 1;
                if self.color[w] == usize::MAX && self.saturation[w] == self.k {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.color[v], usize::MAX);
        for &w in self.g.neighbors(v) {
            self.uncolored_degree[w] += 1;
            let slot = &mut self.blocked[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }
}

/// Decides whether `g` has a proper coloring with at most `k` colors.
///
/// `k = 0` is answered directly (only the empty graph qualifies).
pub fn k_colorable(g: &Graph, k: usize, budget: u64) -> ColorVerdict {
    let n = g.n();
    let verdict = |status, nodes_explored| ColorVerdict { k, status, nodes_explored };
    if n == 0 {
        return verdict(ColorStatus::Yes(Coloring::new(Vec::new())), 0);
    }
    if k == 0 {
        return verdict(ColorStatus::NoComplete, 0);
    }
    let mut s = Search {
        g,
        k,
        color: vec![usize::MAX; n],
        blocked: vec![0; n * k],
        saturation: vec![0; n],
        uncolored_degree: (0..n).map(|v| g.degree(v)).collect(),
    };
    let mut stack: Vec<Frame> = Vec::with_capacity(n);
    let mut used = 0;
    let mut nodes = 0u64;

    loop {
        // descend: open a frame for the next vertex
        match s.pick() {
            None => return verdict(ColorStatus::Yes(Coloring::new(s.color)), nodes),
            Some(v) => stack.push(Frame { vertex: v, next_color: 0, prev_used: used }),
        }
        // advance the top frame to its next admissible color, backtracking as needed
        loop {
            let Some(top) = stack.last_mut() else {
                return verdict(ColorStatus::NoComplete, nodes);
            };
            let v = top.vertex;
            let limit = (top.prev_used + 1).min(k);
            let next = (top.next_color..limit).find(|&c| s.blocked[v * k + c] == 0);
            match next {
                Some(c) => {
                    nodes += 1;
                    if nodes > budget {
                        return verdict(ColorStatus::Unknown, budget);
                    }
                    top.next_color = c + 1;
                    used = top.prev_used.max(c + 1);
                    if s.assign(v, c) {
                        break;
                    }
                    s.unassign(v);
                }
                None => {
                    stack.pop();
                    match stack.last() {
                        Some(parent) => s.unassign(parent.vertex),
                        None => return verdict(ColorStatus::NoComplete, nodes),
                    }
                }
            }
        }
    }
}

/// Exact value or a bracket when the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiValue {
    Exact(usize),
    Bracket { lower: usize, upper: usize },
}

#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: ChiValue,
    /// Best proper coloring found; uses exactly `chi` colors when exact.
    pub coloring: Coloring,
    /// Exhaustive refusal at `chi - 1` (present whenever `chi` is exact and positive).
    pub refutation: Option<ColorVerdict>,
    pub nodes_explored: u64,
}

impl ChromaticResult {
    pub fn exact(&self) -> Option<usize> {
        match self.chi {
            ChiValue::Exact(c) => Some(c),
            ChiValue::Bracket { .. } => None,
        }
    }
}

pub fn chromatic_number(g: &Graph, budget: u64) -> ChromaticResult {
    let n = g.n();
    let mut best = dsatur_greedy(g);
    let mut upper = best.colors_used();
    let mut lower = match clique_number(g) {
        Ok(c) => c.size,
        Err(_) => usize::from(n > 0) + usize::from(g.m() > 0),
    };
    let mut refutation = None;
    let mut nodes = 0;
    while lower < upper {
        let verdict = k_colorable(g, lower, budget);
        nodes += verdict.nodes_explored;
        match verdict.status {
            ColorStatus::Yes(ref c) => {
                best = c.clone();
                upper = lower;
            }
            ColorStatus::NoComplete => {
                lower += 1;
                refutation = Some(verdict);
            }
            ColorStatus::Unknown => {
                return ChromaticResult {
                    chi: ChiValue::Bracket { lower, upper },
                    coloring: best,
                    refutation,
                    nodes_explored: nodes,
                };
            }
        }
    }
    let chi = upper;
    if chi > 0 && refutation.as_ref().is_none_or(|r| r.k != chi - 1) {
        let verdict = k_colorable(g, chi - 1, budget);
        nodes += verdict.nodes_explored;
        match verdict.status {
            ColorStatus::NoComplete => refutation = Some(verdict),
            // cannot happen when the clique bound is sound; report honestly anyway
            _ => {
                return ChromaticResult {
                    chi: ChiValue::Bracket { lower: chi.saturating_sub(1), upper: chi },
                    coloring: best,
                    refutation: None,
                    nodes_explored: nodes,
                }
            }
        }
    }
    ChromaticResult { chi: ChiValue::Exact(chi), coloring: best, refutation, nodes_explored: nodes }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
}

pub fn clique_number(g: &Graph) -> Result<CliqueResult> {
    clique_number_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<CliqueResult> {
    if triangle_witness(g).is_none() {
        let witness = match g.edges().next() {
            Some((u, v)) => vec![u, v],
            None if g.n() > 0 => vec![0],
            None => Vec::new(),
        };
        return Ok(CliqueResult { size: witness.len(), witness });
    }
    if g.n() > limit {
        return Err(Error::LimitExceeded(format!("exact clique search on {} vertices exceeds limit {limit}", g.n())));
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..g.n()).collect();
    grow_clique(g, &mut current, candidates, &mut best);
    best.sort_unstable();
    Ok(CliqueResult { size: best.len(), witness: best })
}

fn grow_clique(g: &Graph, current: &mut Vec<usize>, mut candidates: Vec<usize>, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    while let Some(v) = candidates.pop() {
        if current.len() + candidates.len() < best.len() {
            return;
        }
        let next: Vec<usize> = candidates.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        current.push(v);
        grow_clique(g, current, next, best);
        current.pop();
    }
}

/// χ, ω and the structural flags for one graph.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub chromatic: ChromaticResult,
    pub omega: CliqueResult,
    pub triangle: Option<(usize, usize, usize)>,
    pub wheel: Option<WheelWitness>,
}

impl AnalysisReport {
    pub fn triangle_free(&self) -> bool {
        self.triangle.is_none()
    }
}

pub fn analyze(g: &Graph, budget: u64) -> Result<AnalysisReport> {
    let omega = clique_number(g)?;
    Ok(AnalysisReport {
        n: g.n(),
        m: g.m(),
        chromatic: chromatic_number(g, budget),
        omega,
        triangle: triangle_witness(g),
        wheel: wheel_witness(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_examples() {
        let edge = Graph::complete(2);
        let c = greedy_coloring(&edge, &[0, 1]).unwrap();
        assert_eq!(c.assignment(), &[0, 1]);
        assert_eq!(c.colors_used(), 2);

        let c = greedy_coloring(&Graph::empty(3), &[0, 1, 2]).unwrap();
        assert_eq!(c.assignment(), &[0, 0, 0]);

        // C5 in natural order: 0,1,0,1 then vertex 4 sees 0 and 1
        let c = greedy_coloring(&Graph::cycle(5), &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.assignment(), &[0, 1, 0, 1, 2]);
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn greedy_rejects_bad_orders() {
        let g = Graph::cycle(4);
        assert!(greedy_coloring(&g, &[0, 1, 2]).is_err());
        assert!(greedy_coloring(&g, &[0, 1, 2, 2]).is_err());
        assert!(greedy_coloring(&g, &[0, 1, 2, 7]).is_err());
    }

    #[test]
    fn odd_cycle_decisions() {
        let c5 = Graph::cycle(5);
        assert_eq!(k_colorable(&c5, 2, 1000).status, ColorStatus::NoComplete);
        match k_colorable(&c5, 3, 1000).status {
            ColorStatus::Yes(c) => c.verify(&c5).unwrap(),
            other => panic!("expected a coloring, got {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let k6 = Graph::complete(6);
        let v = k_colorable(&k6, 5, 3);
        assert_eq!(v.status, ColorStatus::Unknown);
        assert_eq!(v.nodes_explored, 3);
    }

    #[test]
    fn chromatic_examples() {
        let r = chromatic_number(&Graph::complete(2), DEFAULT_BUDGET);
        assert_eq!(r.chi, ChiValue::Exact(2));
        assert_eq!(r.refutation.as_ref().unwrap().k, 1);

        let c5 = Graph::cycle(5);
        let r = chromatic_number(&c5, DEFAULT_BUDGET);
        assert_eq!(r.chi, ChiValue::Exact(3));
        r.coloring.verify(&c5).unwrap();
        assert_eq!(r.coloring.colors_used(), 3);
        assert_eq!(r.refutation.unwrap().status, ColorStatus::NoComplete);

        let r = chromatic_number(&Graph::empty(0), DEFAULT_BUDGET);
        assert_eq!(r.chi, ChiValue::Exact(0));
        assert!(r.refutation.is_none());

        let r = chromatic_number(&Graph::empty(4), DEFAULT_BUDGET);
        assert_eq!(r.chi, ChiValue::Exact(1));
        assert_eq!(r.refutation.unwrap().k, 0);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::cycle(6)).unwrap().size, 2);
        let k4 = clique_number(&Graph::complete(4)).unwrap();
        assert_eq!(k4.size, 4);
        assert_eq!(k4.witness, vec![0, 1, 2, 3]);
        assert_eq!(clique_number(&Graph::empty(1)).unwrap().size, 1);
        assert_eq!(clique_number(&Graph::empty(0)).unwrap().size, 0);
    }

    #[test]
    fn clique_limit_applies_only_with_triangles() {
        assert!(clique_number_with_limit(&Graph::complete(5), 4).is_err());
        assert_eq!(clique_number_with_limit(&Graph::cycle(50), 4).unwrap().size, 2);
    }

    #[test]
    fn wheel_analysis() {
        let w = Graph::wheel_on(6, &[0, 2, 4]);
        let r = analyze(&w, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.omega.size, 2);
        assert!(r.triangle_free());
        assert_eq!(r.wheel.unwrap().hub, 0);
        // spokes only reach one side of the even rim, so the wheel is bipartite
        assert_eq!(r.chromatic.exact(), Some(2));
    }
}
