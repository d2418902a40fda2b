//! Frame realizations of the Burling sequence, one probe rectangle per
//! special set.
//!
//! Every probe produced here satisfies a stronger layout invariant than the
//! membership contract: each member frame meets the probe only through its
//! right side, which crosses the probe from bottom to top, and the probe
//! contains nothing else. Probes of one level are pairwise disjoint and all
//! end at the same right edge beyond every frame.
//!
//! Given that invariant, the region of a probe left of its leftmost member
//! crossing is empty, so a scaled copy of the previous level fits there.
//! Inside each probe of that copy a new wide, short frame is laid across the
//! member right sides (its top and bottom are crossed by them, nothing else
//! is touched). The two new probes are horizontal strips of the copy's probe:
//! one above the new frame, reaching back over the copy's members, and one
//! inside the new frame's height starting just right of those members, so it
//! meets only the new frame's right side. Both strips extend to the shared
//! right edge and therefore also cross the members of the base special.

use crate::burling::frames::{Frame, FrameFamily, ProbeRecord};
use crate::burling::sequence::block_offset;
use crate::error::{Error, Result};
use crate::exact::{Interval, Rect, Scalar};

/// Highest level realized unless a caller raises it.
pub const DEFAULT_MAX_REALIZATION: usize = 3;

pub fn realize_frames(k: usize) -> Result<FrameFamily> {
    realize_frames_with_max(k, DEFAULT_MAX_REALIZATION)
}

pub fn realize_frames_with_max(k: usize, max_level: usize) -> Result<FrameFamily> {
    if k == 0 || k > max_level {
        return Err(Error::LevelOutOfRange { level: k, max: max_level });
    }
    let mut family = level_one();
    for _ in 1..k {
        family = next_level(&family);
    }
    Ok(family)
}

fn level_one() -> FrameFamily {
    FrameFamily {
        frames: vec![Frame::new(0, Rect::ints(0, 1, 0, 1))],
        probes: vec![ProbeRecord {
            id: 0,
            region: Rect::from_bounds(Scalar::ratio(1, 2), Scalar::int(2), Scalar::ratio(1, 4), Scalar::ratio(3, 4))
                .unwrap(),
            members: vec![0],
        }],
    }
}

/// Bounding box of all frames and probe regions.
fn extent(f: &FrameFamily) -> (Interval, Interval) {
    let rects = f.frames.iter().map(Frame::rect).chain(f.probes.iter().map(|p| p.region.clone()));
    let mut x0: Option<Scalar> = None;
    let (mut x1, mut y0, mut y1) = (None::<Scalar>, None::<Scalar>, None::<Scalar>);
    for r in rects {
        let upd_min = |cur: &mut Option<Scalar>, v: &Scalar| {
            if cur.as_ref().is_none_or(|c| v < c) {
                *cur = Some(v.clone());
            }
        };
        let upd_max = |cur: &mut Option<Scalar>, v: &Scalar| {
            if cur.as_ref().is_none_or(|c| v > c) {
                *cur = Some(v.clone());
            }
        };
        upd_min(&mut x0, r.x.lo());
        upd_max(&mut x1, r.x.hi());
        upd_min(&mut y0, r.y.lo());
        upd_max(&mut y1, r.y.hi());
    }
    (Interval::new(x0.unwrap(), x1.unwrap()).unwrap(), Interval::new(y0.unwrap(), y1.unwrap()).unwrap())
}

/// `lo + (hi - lo) * t`.
fn lerp(iv: &Interval, t: Scalar) -> Scalar {
    iv.lo() + &((iv.hi() - iv.lo()) * t)
}

fn span(lo: Scalar, hi: Scalar) -> Interval {
    Interval::proper(lo, hi).expect("layout keeps intervals proper")
}

/// Affine map sending `from` onto `to`.
fn fit(from: &Interval, to: &Interval) -> (Scalar, Scalar) {
    let scale = (to.hi() - to.lo()) / (from.hi() - from.lo());
    let shift = to.lo() - &(from.lo() * &scale);
    (scale, shift)
}

fn next_level(prev: &FrameFamily) -> FrameFamily {
    let n = prev.frames.len();
    let p = prev.probes.len();
    let right_of = |f: &FrameFamily, id: usize| f.frames[id].x.hi().clone();
    let (ext_x, ext_y) = extent(prev);

    let mut frames = prev.frames.clone();
    let mut probes = Vec::with_capacity(2 * p * p);

    for (i, base_probe) in prev.probes.iter().enumerate() {
        let off = block_offset(n, p, i);
        let region = &base_probe.region;
        let first_crossing = base_probe.members.iter().map(|&m| right_of(prev, m)).min().expect("probes have members");

        // empty part of the probe left of every member crossing; the window
        // fractions vary slightly with i so copies never share coordinates
        let empty_x = span(region.x.lo().clone(), first_crossing);
        let skew = Scalar::ratio(1, 97 * (i as i64 + 2));
        let window_x = span(
            lerp(&empty_x, Scalar::ratio(2, 7) + skew.clone()),
            lerp(&empty_x, Scalar::ratio(5, 7) - skew.clone()),
        );
        let window_y =
            span(lerp(&region.y, Scalar::ratio(3, 11) - skew.clone()), lerp(&region.y, Scalar::ratio(8, 11) + skew));
        let (sx, cx) = fit(&ext_x, &window_x);
        let (sy, cy) = fit(&ext_y, &window_y);
        let copy = prev.map_axes((&sx, &cx), (&sy, &cy));

        frames.extend(copy.frames.iter().map(|f| Frame { id: f.id + off, x: f.x.clone(), y: f.y.clone() }));

        for (j, copy_probe) in copy.probes.iter().enumerate() {
            let fresh = off + n + j;
            let pr = &copy_probe.region;
            let rights: Vec<Scalar> = copy_probe.members.iter().map(|&m| right_of(&copy, m)).collect();
            let min_r = rights.iter().min().unwrap().clone();
            let max_r = rights.iter().max().unwrap().clone();

            // fractions near 1/2 that differ per id: affine copies preserve
            // ratios, so fixed fractions would repeat coordinates
            let t = fresh as i64;
            let fresh_x = span(
                lerp(&span(pr.x.lo().clone(), min_r), Scalar::ratio(t + 2, 2 * t + 7)),
                lerp(&span(max_r.clone(), pr.x.hi().clone()), Scalar::ratio(t + 3, 2 * t + 5)),
            );
            let wobble = Scalar::ratio(1, 50 * (t + 3));
            let fresh_y =
                span(lerp(&pr.y, Scalar::ratio(1, 5) - wobble.clone()), lerp(&pr.y, Scalar::ratio(2, 5) + wobble));
            let through_fresh_y = span(lerp(&pr.y, Scalar::ratio(1, 4)), lerp(&pr.y, Scalar::ratio(7, 20)));
            let above_fresh_y = span(lerp(&pr.y, Scalar::ratio(3, 5)), lerp(&pr.y, Scalar::ratio(4, 5)));
            let strip_start = max_r.mid(fresh_x.hi());

            let mut with_fresh = base_probe.members.clone();
            with_fresh.push(fresh);
            with_fresh.sort_unstable();
            probes.push(ProbeRecord {
                id: probes.len(),
                region: Rect { x: span(strip_start, region.x.hi().clone()), y: through_fresh_y },
                members: with_fresh,
            });

            let mut union = base_probe.members.clone();
            union.extend(copy_probe.members.iter().map(|&m| m + off));
            union.sort_unstable();
            probes.push(ProbeRecord {
                id: probes.len(),
                region: Rect { x: span(pr.x.lo().clone(), region.x.hi().clone()), y: above_fresh_y },
                members: union,
            });

            frames.push(Frame { id: fresh, x: fresh_x, y: fresh_y });
        }
    }
    frames.sort_by_key(|f| f.id);
    FrameFamily { frames, probes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burling::frames::{frame_graph, in_generic_position, verify_burling_axioms, verify_probes};
    use crate::burling::sequence::burling_abstract;
    use crate::graph::graphs_equal_by_id;

    #[test]
    fn realizations_certify_themselves() {
        for k in 1..=3 {
            let f = realize_frames(k).unwrap();
            f.validate().unwrap();
            let lv = burling_abstract(k).unwrap();
            let report = verify_burling_axioms(&f);
            assert!(report.pass(), "level {k}: {:?}", report.violations);
            assert!(graphs_equal_by_id(&frame_graph(&f), &lv.graph), "level {k}");
            assert_eq!(verify_probes(&f), vec![], "level {k}");
            let declared: Vec<_> = f.probes.iter().map(|p| p.members.clone()).collect();
            assert_eq!(declared, lv.specials, "level {k}");
            assert!(in_generic_position(&f), "level {k}");
        }
    }

    #[test]
    fn level_limits() {
        assert!(realize_frames(0).is_err());
        assert!(matches!(realize_frames(4), Err(Error::LevelOutOfRange { level: 4, max: 3 })));
    }
}
