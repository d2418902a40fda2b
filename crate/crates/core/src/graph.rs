//! Simple undirected graphs on dense ids `0..n`, plus the structural
//! predicates used by the certificate pipeline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0, labels: BTreeMap::new() }
    }

    /// Builds a graph from id pairs, dropping duplicates in either orientation.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_edge_iter(n, pairs.iter().copied())
    }

    pub fn from_edge_iter(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in pairs {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph { adj, edge_count: edge_count / 2, labels: BTreeMap::new() })
    }

    pub fn complete(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_edges(n, &pairs).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &pairs).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &pairs).expect("valid path")
    }

    /// Cycle `1..=rim` with hub `0` joined to the given rim positions
    /// (0-based positions on the cycle).
    pub fn wheel_on(rim: usize, spokes: &[usize]) -> Self {
        let mut pairs: Vec<_> = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)).collect();
        pairs.extend(spokes.iter().map(|&s| (0, 1 + s)));
        Self::from_edges(rim + 1, &pairs).expect("valid wheel")
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some(&id) = labels.keys().find(|&&id| id >= self.n()) {
            return Err(Error::VertexOutOfRange { id, n: self.n() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_stable(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

pub fn graph_from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, pairs)
}

/// Some triangle `(u, v, w)` with `u < v < w`, the lexicographically first one.
pub fn triangle_witness(g: &Graph) -> Option<(usize, usize, usize)> {
    for u in 0..g.n() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            let nu = g.neighbors(u);
            for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
                if nu.binary_search(&w).is_ok() {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// A hub vertex whose removal leaves a single cycle through every other vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelWitness {
    pub hub: usize,
    pub cycle: Vec<usize>,
}

impl WheelWitness {
    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let k = self.cycle.len();
        if k < 3 || k + 1 != n || g.degree(self.hub) < 3 {
            return false;
        }
        let mut seen = vec![false; n];
        seen[self.hub] = true;
        for &v in &self.cycle {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let cycle_ok = (0..k).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % k]));
        // a spanning cycle plus hub edges accounts for every edge
        cycle_ok && g.m() == k + g.degree(self.hub)
    }
}

pub fn wheel_witness(g: &Graph) -> Option<WheelWitness> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    (0..n).find_map(|hub| rim_cycle(g, hub).map(|cycle| WheelWitness { hub, cycle }))
}

fn rim_cycle(g: &Graph, hub: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if g.degree(hub) < 3 || g.m() - g.degree(hub) != n - 1 {
        return None;
    }
    let rim_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| w != hub).count();
    if (0..n).any(|v| v != hub && rim_degree(v) != 2) {
        return None;
    }
    let start = if hub == 0 { 1 } else { 0 };
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != hub && w != prev)?;
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
        if cycle.len() > n {
            return None;
        }
    }
    (cycle.len() == n - 1).then_some(cycle)
}

pub fn graphs_equal_by_id(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.adj == h.adj
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_dedups_and_validates() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { id: 3, n: 3 })));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn triangles() {
        assert_eq!(triangle_witness(&Graph::complete(3)), Some((0, 1, 2)));
        assert_eq!(triangle_witness(&Graph::cycle(5)), None);
        assert_eq!(triangle_witness(&Graph::wheel_on(6, &[0, 2, 4])), None);
    }

    #[test]
    fn wheels() {
        let w = wheel_witness(&Graph::wheel_on(6, &[0, 2, 4])).unwrap();
        assert_eq!(w.hub, 0);
        assert_eq!(w.cycle.len(), 6);
        assert!(w.verify(&Graph::wheel_on(6, &[0, 2, 4])));

        assert_eq!(wheel_witness(&Graph::cycle(6)), None);

        let k4 = Graph::complete(4);
        let w = wheel_witness(&k4).unwrap();
        assert_eq!(w.cycle.len(), 3);
        assert!(w.verify(&k4));
    }

    #[test]
    fn wheels_on_cycles_and_full_hubs() {
        for n in 3..=12 {
            assert_eq!(wheel_witness(&Graph::cycle(n)), None, "C{n}");
            let spokes: Vec<_> = (0..n).collect();
            let w = wheel_witness(&Graph::wheel_on(n, &spokes)).expect("full wheel");
            if n > 3 {
                // only the hub has degree > 3 once the rim is long enough
                assert_eq!(w.hub, 0, "W{n}");
            }
        }
    }

    #[test]
    fn wheel_rejects_two_cycles() {
        // hub joined to every vertex of two disjoint triangles
        let mut pairs = vec![(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)];
        pairs.extend((1..=6).map(|v| (0, v)));
        let g = Graph::from_edges(7, &pairs).unwrap();
        assert_eq!(wheel_witness(&g), None);
    }

    #[test]
    fn equality_by_id() {
        let g = Graph::path(3);
        assert!(graphs_equal_by_id(&g, &g));
        let h = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert!(!graphs_equal_by_id(&g, &h));
        assert!(graphs_equal_by_id(&Graph::empty(0), &Graph::empty(0)));
    }
}
