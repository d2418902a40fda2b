//! Contact graphs of boxes with unidirectional contacts (d-CBU).
//!
//! A family of closed, full-dimensional axis-parallel boxes is valid when
//! every pair of boxes that meets does so inside a hyperplane perpendicular
//! to axis 0, i.e. their axis-0 intervals share exactly one point.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{interval_meet, Interval, MeetKind, Scalar};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxD {
    pub id: usize,
    /// One interval per axis; axis 0 is the contact direction.
    pub intervals: Vec<Interval>,
}

impl BoxD {
    pub fn new(id: usize, intervals: Vec<Interval>) -> Self {
        BoxD { id, intervals }
    }

    /// Box from integer `(lo, hi)` pairs; panics on reversed pairs.
    pub fn ints(id: usize, bounds: &[(i64, i64)]) -> Self {
        BoxD { id, intervals: bounds.iter().map(|&(lo, hi)| Interval::ints(lo, hi)).collect() }
    }

    pub fn meets(&self, other: &BoxD) -> bool {
        self.intervals.iter().zip(&other.intervals).all(|(a, b)| !interval_meet(a, b).is_empty())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxFamily {
    pub dim: usize,
    pub boxes: Vec<BoxD>,
}

impl BoxFamily {
    pub fn new(dim: usize, boxes: Vec<BoxD>) -> Result<Self> {
        let f = BoxFamily { dim, boxes };
        f.check_shape()?;
        Ok(f)
    }

    /// Uniform dimension, unique ids, `dim >= 1`.
    pub fn check_shape(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Dimension("box families need dim >= 1".into()));
        }
        let mut ids = BTreeSet::new();
        for b in &self.boxes {
            if b.intervals.len() != self.dim {
                return Err(Error::Dimension(format!(
                    "box {} has {} intervals, family dim is {}",
                    b.id,
                    b.intervals.len(),
                    self.dim
                )));
            }
            if !ids.insert(b.id) {
                return Err(Error::DuplicateId(b.id));
            }
        }
        Ok(())
    }

    /// Shape check plus properness of every interval.
    pub fn validate(&self) -> Result<()> {
        self.check_shape()?;
        for b in &self.boxes {
            if let Some(axis) = b.intervals.iter().position(|iv| !iv.is_proper()) {
                return Err(Error::Geometry(format!("box {} is degenerate on axis {axis}", b.id)));
            }
        }
        Ok(())
    }

    pub fn sorted_boxes(&self) -> Vec<&BoxD> {
        let mut v: Vec<&BoxD> = self.boxes.iter().collect();
        v.sort_by_key(|b| b.id);
        v
    }

    /// Applies `t -> scale[a] * t + shift[a]` on each axis `a` (scales positive).
    pub fn map_axes(&self, maps: &[(Scalar, Scalar)]) -> BoxFamily {
        BoxFamily {
            dim: self.dim,
            boxes: self
                .boxes
                .iter()
                .map(|b| BoxD {
                    id: b.id,
                    intervals: b.intervals.iter().zip(maps).map(|(iv, (s, c))| iv.map_affine(s, c)).collect(),
                })
                .collect(),
        }
    }
}

/// Intersection graph of the boxes, vertices in id order.
pub fn box_graph(b: &BoxFamily) -> Graph {
    let boxes = b.sorted_boxes();
    let mut pairs = Vec::new();
    for (i, x) in boxes.iter().enumerate() {
        for (j, y) in boxes.iter().enumerate().skip(i + 1) {
            if x.meets(y) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(boxes.len(), &pairs).expect("pairs are in range")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbuViolation {
    pub pair: (usize, usize),
    pub axis0: MeetKind,
}

#[derive(Clone, Debug)]
pub struct CbuReport {
    pub valid: bool,
    pub violations: Vec<CbuViolation>,
    pub graph: Graph,
}

pub fn verify_cbu(b: &BoxFamily) -> Result<CbuReport> {
    b.validate()?;
    let boxes = b.sorted_boxes();
    let graph = box_graph(b);
    let violations: Vec<CbuViolation> = graph
        .edges()
        .filter_map(|(u, v)| {
            let axis0 = interval_meet(&boxes[u].intervals[0], &boxes[v].intervals[0]);
            matches!(axis0, MeetKind::Segment(..)).then(|| CbuViolation { pair: (boxes[u].id, boxes[v].id), axis0 })
        })
        .collect();
    Ok(CbuReport { valid: violations.is_empty(), violations, graph })
}

/// Appends `[0, 1]` as a new last axis to every box.
pub fn lift_dim(b: &BoxFamily) -> BoxFamily {
    BoxFamily {
        dim: b.dim + 1,
        boxes: b
            .boxes
            .iter()
            .map(|bx| {
                let mut intervals = bx.intervals.clone();
                intervals.push(Interval::ints(0, 1));
                BoxD { id: bx.id, intervals }
            })
            .collect(),
    }
}

/// Replaces each axis's coordinates by their ranks among that axis's
/// distinct endpoint values.
pub fn rank_normalize(b: &BoxFamily) -> BoxFamily {
    let ranks: Vec<BTreeMap<Scalar, i64>> = (0..b.dim)
        .map(|axis| {
            let values: BTreeSet<&Scalar> =
                b.boxes.iter().flat_map(|bx| [bx.intervals[axis].lo(), bx.intervals[axis].hi()]).collect();
            values.into_iter().cloned().zip(0..).collect()
        })
        .collect();
    BoxFamily {
        dim: b.dim,
        boxes: b
            .boxes
            .iter()
            .map(|bx| BoxD {
                id: bx.id,
                intervals: bx
                    .intervals
                    .iter()
                    .enumerate()
                    .map(|(a, iv)| Interval::ints(ranks[a][iv.lo()], ranks[a][iv.hi()]))
                    .collect(),
            })
            .collect(),
    }
}

/// Size limits for `search_cbu`.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub max_dim: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: 8, max_dim: 3 }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Representation(BoxFamily),
    /// Every placement on the normalized grid was ruled out.
    NoneComplete,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes_explored: u64,
    pub dim: usize,
}

impl SearchResult {
    pub fn outcome_name(&self) -> &'static str {
        match self.outcome {
            SearchOutcome::Representation(_) => "representation",
            SearchOutcome::NoneComplete => "none_complete",
            SearchOutcome::Unknown => "unknown",
        }
    }
}

pub fn search_cbu(g: &Graph, dim: usize, budget: u64) -> Result<SearchResult> {
    search_cbu_with_limits(g, dim, budget, SearchLimits::default())
}

/// Exhaustive search for a `dim`-CBU representation of `g` with integer
/// endpoints in `0..=2n`.
///
/// Any representation can be rank-normalized to at most `2n` distinct values
/// per axis without changing a single predicate, so the grid loses nothing.
/// Reflecting an axis maps the grid to itself, so the first placed box is
/// restricted to the lower half of the grid on every axis.
pub fn search_cbu_with_limits(g: &Graph, dim: usize, budget: u64, limits: SearchLimits) -> Result<SearchResult> {
    let n = g.n();
    if dim == 0 || dim > limits.max_dim {
        return Err(Error::LimitExceeded(format!("search dimension {dim} outside 1..={}", limits.max_dim)));
    }
    if n > limits.max_vertices {
        return Err(Error::LimitExceeded(format!("search on {n} vertices exceeds limit {}", limits.max_vertices)));
    }
    let top = 2 * n as i64;
    let mut intervals: Vec<(i64, i64)> = (0..=top).flat_map(|lo| (lo + 1..=top).map(move |hi| (lo, hi))).collect();
    // centered, short intervals first; completeness does not depend on order
    intervals.sort_by_key(|&(lo, hi)| ((lo + hi - top).abs(), hi - lo));
    let mut s =
        BoxSearch { g, dim, top, order: placement_order(g), placed: vec![None; n], intervals, nodes: 0, budget };
    let outcome = match s.place(0) {
        Some(true) => {
            let boxes = (0..n)
                .map(|v| {
                    let iv = s.placed[v].as_ref().expect("all placed");
                    BoxD::ints(v, iv)
                })
                .collect();
            SearchOutcome::Representation(BoxFamily { dim, boxes })
        }
        Some(false) => SearchOutcome::NoneComplete,
        None => SearchOutcome::Unknown,
    };
    Ok(SearchResult { outcome, nodes_explored: s.nodes, dim })
}

/// Highest degree first, then repeatedly the vertex with most placed
/// neighbors (ties: higher degree, lower id).
fn placement_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut in_order = vec![false; n];
    let mut placed_nbrs = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !in_order[v])
            .max_by_key(|&v| (placed_nbrs[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        in_order[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            placed_nbrs[w] += 1;
        }
    }
    order
}

struct BoxSearch<'a> {
    g: &'a Graph,
    dim: usize,
    top: i64,
    order: Vec<usize>,
    placed: Vec<Option<Vec<(i64, i64)>>>,
    intervals: Vec<(i64, i64)>,
    nodes: u64,
    budget: u64,
}

fn int_meet(a: (i64, i64), b: (i64, i64)) -> Option<i64> {
    let lo = a.0.max(b.0);
    let hi = a.1.min(b.1);
    (lo <= hi).then_some(hi - lo)
}

impl BoxSearch<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn place(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let v = self.order[depth];
        let mut current = Vec::with_capacity(self.dim);
        let found = self.choose_axis(depth, v, &mut current)?;
        Some(found)
    }

    fn choose_axis(&mut self, depth: usize, v: usize, current: &mut Vec<(i64, i64)>) -> Option<bool> {
        let axis = current.len();
        if axis == self.dim {
            self.placed[v] = Some(current.clone());
            let r = self.place(depth + 1);
            if r != Some(false) {
                return r;
            }
            self.placed[v] = None;
            return Some(false);
        }
        for idx in 0..self.intervals.len() {
            let iv = self.intervals[idx];
            if depth == 0 && iv.0 + iv.1 > self.top {
                continue;
            }
            let last = axis + 1 == self.dim;
            let ok = self.order[..depth].iter().all(|&u| {
                let ub = self.placed[u].as_ref().unwrap();
                let meet = int_meet(ub[axis], iv);
                if self.g.has_edge(u, v) {
                    return matches!(meet, Some(len) if axis != 0 || len == 0);
                }
                // a non-neighbor still overlapping on every earlier axis must
                // be separated here
                !last || meet.is_none() || ub.iter().zip(current.iter()).any(|(&a, &b)| int_meet(a, b).is_none())
            });
            if !ok {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            current.push(iv);
            let r = self.choose_axis(depth, v, current);
            current.pop();
            if r != Some(false) {
                return r;
            }
        }
        Some(false)
    }
}
