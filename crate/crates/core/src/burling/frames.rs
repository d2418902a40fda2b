//! Frames (rectangle boundaries), their intersection graph, and the checker
//! for the three Burling frame axioms.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rect_in_interior, seg_meet, AxisSegment, Interval, Rect};
use crate::graph::{triangle_witness, Graph};

/// The boundary of `rect`, as four closed axis-parallel sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub id: usize,
    pub x: Interval,
    pub y: Interval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
    Top,
    Bottom,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Right, Side::Top, Side::Bottom];

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Top => "top",
            Side::Bottom => "bottom",
        }
    }
}

impl Frame {
    pub fn new(id: usize, rect: Rect) -> Self {
        Frame { id, x: rect.x, y: rect.y }
    }

    pub fn rect(&self) -> Rect {
        Rect { x: self.x.clone(), y: self.y.clone() }
    }

    pub fn side(&self, side: Side) -> AxisSegment {
        let r = self.rect();
        match side {
            Side::Left => r.left(),
            Side::Right => r.right(),
            Side::Top => r.top(),
            Side::Bottom => r.bottom(),
        }
    }

    pub fn sides(&self) -> [AxisSegment; 4] {
        Side::ALL.map(|s| self.side(s))
    }

    pub fn is_proper(&self) -> bool {
        self.x.is_proper() && self.y.is_proper()
    }
}

/// Whether segment `seg` meets the boundary of `frame`.
pub fn segment_meets_frame(seg: &AxisSegment, frame: &Frame) -> bool {
    frame.sides().iter().any(|s| !seg_meet(seg, s).is_empty())
}

/// Boundary-boundary intersection, checked over all 16 side pairs.
pub fn frames_meet(a: &Frame, b: &Frame) -> bool {
    let sb = b.sides();
    a.sides().iter().any(|s| sb.iter().any(|t| !seg_meet(s, t).is_empty()))
}

/// Whether the boundary of `frame` meets the closed `region`.
pub fn frame_meets_region(frame: &Frame, region: &Rect) -> bool {
    // a convex region touching the closed rectangle but not sitting in its
    // open interior must cross the boundary
    let rect = frame.rect();
    rect.intersects(region) && !rect_in_interior(region, &rect)
}

/// A rectangle whose meeting frames are declared to be `members`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeRecord {
    pub id: usize,
    pub region: Rect,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameFamily {
    pub frames: Vec<Frame>,
    #[serde(default)]
    pub probes: Vec<ProbeRecord>,
}

impl FrameFamily {
    /// Checks id uniqueness and that every frame has a non-empty interior.
    pub fn validate(&self) -> Result<()> {
        let mut ids = BTreeSet::new();
        for f in &self.frames {
            if !ids.insert(f.id) {
                return Err(Error::DuplicateId(f.id));
            }
            if !f.is_proper() {
                return Err(Error::Geometry(format!("frame {} has empty interior", f.id)));
            }
        }
        let mut probe_ids = BTreeSet::new();
        for p in &self.probes {
            if !probe_ids.insert(p.id) {
                return Err(Error::DuplicateId(p.id));
            }
            if let Some(&m) = p.members.iter().find(|m| !ids.contains(m)) {
                return Err(Error::Geometry(format!("probe {} names unknown frame {m}", p.id)));
            }
        }
        Ok(())
    }

    /// Frames sorted by id; vertex `i` of `frame_graph` is the `i`-th entry.
    pub fn sorted_frames(&self) -> Vec<&Frame> {
        let mut v: Vec<&Frame> = self.frames.iter().collect();
        v.sort_by_key(|f| f.id);
        v
    }

    /// Map from frame id to graph vertex.
    pub fn vertex_of(&self) -> BTreeMap<usize, usize> {
        self.sorted_frames().iter().enumerate().map(|(i, f)| (f.id, i)).collect()
    }

    /// Affine image of the family under per-axis maps `t -> s * t + c` (`s > 0`).
    pub fn map_axes(&self, x: (&crate::Scalar, &crate::Scalar), y: (&crate::Scalar, &crate::Scalar)) -> FrameFamily {
        FrameFamily {
            frames: self
                .frames
                .iter()
                .map(|f| Frame { id: f.id, x: f.x.map_affine(x.0, x.1), y: f.y.map_affine(y.0, y.1) })
                .collect(),
            probes: self
                .probes
                .iter()
                .map(|p| ProbeRecord {
                    id: p.id,
                    region: Rect { x: p.region.x.map_affine(x.0, x.1), y: p.region.y.map_affine(y.0, y.1) },
                    members: p.members.clone(),
                })
                .collect(),
        }
    }
}

/// Intersection graph of the frame boundaries, vertices in id order.
pub fn frame_graph(f: &FrameFamily) -> Graph {
    let frames = f.sorted_frames();
    let mut pairs = Vec::new();
    for (i, a) in frames.iter().enumerate() {
        for (j, b) in frames.iter().enumerate().skip(i + 1) {
            if frames_meet(a, b) {
                pairs.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(frames.len(), &pairs).expect("pairs are in range");
    if frames.iter().enumerate().all(|(i, fr)| fr.id == i) {
        g
    } else {
        let labels = frames.iter().enumerate().map(|(i, fr)| (i, fr.id.to_string())).collect();
        g.with_labels(labels).expect("labels are in range")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    #[serde(rename = "triangle")]
    TriangleFree,
    A1,
    A2,
    A3,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Frame ids involved, in the order the reason mentions them.
    pub frames: Vec<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub triangle_free: bool,
    pub a1_ok: bool,
    pub a2_ok: bool,
    pub a3_ok: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.triangle_free && self.a1_ok && self.a2_ok && self.a3_ok
    }
}

pub fn verify_burling_axioms(f: &FrameFamily) -> AxiomReport {
    let frames = f.sorted_frames();
    let graph = frame_graph(f);
    let mut violations = Vec::new();

    if let Some((u, v, w)) = triangle_witness(&graph) {
        violations.push(Violation {
            axiom: Axiom::TriangleFree,
            frames: vec![frames[u].id, frames[v].id, frames[w].id],
            reason: "frames pairwise intersect".into(),
        });
    }

    // A1: left sides touch nothing; a right side meeting a frame crosses its
    // top and bottom
    for a in &frames {
        let left = a.side(Side::Left);
        let right = a.side(Side::Right);
        for b in frames.iter().filter(|b| b.id != a.id) {
            if segment_meets_frame(&left, b) {
                violations.push(Violation {
                    axiom: Axiom::A1,
                    frames: vec![a.id, b.id],
                    reason: format!("left side of {} meets frame {}", a.id, b.id),
                });
            }
            if segment_meets_frame(&right, b) {
                let top = !seg_meet(&right, &b.side(Side::Top)).is_empty();
                let bottom = !seg_meet(&right, &b.side(Side::Bottom)).is_empty();
                if !(top && bottom) {
                    violations.push(Violation {
                        axiom: Axiom::A1,
                        frames: vec![a.id, b.id],
                        reason: format!(
                            "right side of {} meets frame {} without crossing both its top and bottom",
                            a.id, b.id
                        ),
                    });
                }
            }
        }
    }

    // A2: no third frame inside the overlap of two intersecting frames' regions
    for (u, v) in graph.edges() {
        let (a, b) = (frames[u], frames[v]);
        let Some((ox, oy)) = a.rect().meet(&b.rect()) else { continue };
        for c in frames.iter().filter(|c| c.id != a.id && c.id != b.id) {
            if ox.contains_interval(&c.x) && oy.contains_interval(&c.y) {
                violations.push(Violation {
                    axiom: Axiom::A2,
                    frames: vec![a.id, b.id, c.id],
                    reason: format!("frame {} lies in the overlap of frames {} and {}", c.id, a.id, b.id),
                });
            }
        }
    }

    // A3: a frame meeting both members of a nested pair is met on its top
    // and bottom only
    for (ci, c) in frames.iter().enumerate() {
        for (di, d) in frames.iter().enumerate() {
            if ci == di || !rect_in_interior(&c.rect(), &d.rect()) {
                continue;
            }
            for (fi, fr) in frames.iter().enumerate() {
                if fi == ci || fi == di || !graph.has_edge(fi, ci) || !graph.has_edge(fi, di) {
                    continue;
                }
                let bad: Vec<&str> = [Side::Left, Side::Right]
                    .into_iter()
                    .filter(|&s| {
                        let seg = fr.side(s);
                        segment_meets_frame(&seg, c) || segment_meets_frame(&seg, d)
                    })
                    .map(Side::name)
                    .collect();
                if !bad.is_empty() {
                    violations.push(Violation {
                        axiom: Axiom::A3,
                        frames: vec![c.id, d.id, fr.id],
                        reason: format!(
                            "frame {} nested in {} and both meet the {} side of {}",
                            c.id,
                            d.id,
                            bad.join("/"),
                            fr.id
                        ),
                    });
                }
            }
        }
    }

    violations.sort();
    violations.dedup();
    let has = |ax: Axiom| violations.iter().any(|v| v.axiom == ax);
    AxiomReport {
        triangle_free: !has(Axiom::TriangleFree),
        a1_ok: !has(Axiom::A1),
        a2_ok: !has(Axiom::A2),
        a3_ok: !has(Axiom::A3),
        violations,
    }
}

/// Problems with the declared probe records of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeIssue {
    pub probe: usize,
    pub reason: String,
}

/// Checks each probe: declared members equal the frames meeting its region,
/// and they form a stable set.
pub fn verify_probes(f: &FrameFamily) -> Vec<ProbeIssue> {
    let graph = frame_graph(f);
    let vertex = f.vertex_of();
    let mut issues = Vec::new();
    for p in &f.probes {
        let mut declared = p.members.clone();
        declared.sort_unstable();
        let mut actual: Vec<usize> =
            f.frames.iter().filter(|fr| frame_meets_region(fr, &p.region)).map(|fr| fr.id).collect();
        actual.sort_unstable();
        if declared != actual {
            issues.push(ProbeIssue {
                probe: p.id,
                reason: format!("declared members {declared:?}, region meets {actual:?}"),
            });
        }
        let verts: Vec<usize> = declared.iter().filter_map(|id| vertex.get(id).copied()).collect();
        if !graph.is_stable(&verts) {
            issues.push(ProbeIssue { probe: p.id, reason: "members are not a stable set".into() });
        }
    }
    issues
}

/// True if all frame x-coordinates are pairwise distinct, and likewise for y.
pub fn in_generic_position(f: &FrameFamily) -> bool {
    let mut xs = BTreeSet::new();
    let mut ys = BTreeSet::new();
    f.frames.iter().all(|fr| {
        xs.insert(fr.x.lo().clone())
            && xs.insert(fr.x.hi().clone())
            && ys.insert(fr.y.lo().clone())
            && ys.insert(fr.y.hi().clone())
    })
}
