//! SVG rendering of 2-D frame and box families.
//!
//! Coordinates are mapped exactly onto a fixed-width canvas and only then
//! printed as truncated decimals, so output is deterministic.

use std::fmt::Write as _;

use crate::burling::FrameFamily;
use crate::cbu::BoxFamily;
use crate::error::{Error, Result};
use crate::exact::{Interval, Rect, Scalar};

const CANVAS_WIDTH: i64 = 800;
const MAX_HEIGHT: i64 = 2400;

const PALETTE: [&str; 8] = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7"];

struct Viewport {
    x0: Scalar,
    y1: Scalar,
    scale_x: Scalar,
    scale_y: Scalar,
    width: i64,
    height: i64,
}

impl Viewport {
    /// Bounding box of `rects` plus a 5% margin on every side.
    fn fit<'a>(rects: impl Iterator<Item = &'a Interval>, ys: impl Iterator<Item = &'a Interval>) -> Viewport {
        let (x0, x1) = bounds(rects);
        let (y0, y1) = bounds(ys);
        let margin = |lo: &Scalar, hi: &Scalar| {
            let m = (hi - lo) * Scalar::ratio(1, 20);
            if m.is_zero() {
                Scalar::one()
            } else {
                m
            }
        };
        let (mx, my) = (margin(&x0, &x1), margin(&y0, &y1));
        let (x0, x1) = (&x0 - &mx, x1 + mx);
        let (y0, y1) = (&y0 - &my, y1 + my);
        let scale_x = Scalar::int(CANVAS_WIDTH) / (&x1 - &x0);
        // keep aspect ratio unless the drawing would be absurdly tall
        let natural = (&y1 - &y0) * scale_x.clone();
        let height = if natural > Scalar::int(MAX_HEIGHT) { MAX_HEIGHT } else { ceil_int(&natural).max(1) };
        let scale_y = Scalar::int(height) / (&y1 - &y0);
        Viewport { x0, y1, scale_x, scale_y, width: CANVAS_WIDTH, height }
    }

    fn px(&self, x: &Scalar) -> String {
        ((x - &self.x0) * self.scale_x.clone()).to_decimal(3)
    }

    fn py(&self, y: &Scalar) -> String {
        ((&self.y1 - y) * self.scale_y.clone()).to_decimal(3)
    }

    fn len_x(&self, iv: &Interval) -> String {
        ((iv.hi() - iv.lo()) * self.scale_x.clone()).to_decimal(3)
    }

    fn len_y(&self, iv: &Interval) -> String {
        ((iv.hi() - iv.lo()) * self.scale_y.clone()).to_decimal(3)
    }

    fn rect_attrs(&self, r: &Rect) -> String {
        format!(
            "x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"",
            self.px(r.x.lo()),
            self.py(r.y.hi()),
            self.len_x(&r.x),
            self.len_y(&r.y)
        )
    }

    fn header(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
            w = self.width,
            h = self.height
        );
        let _ =
            writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>", self.width, self.height);
    }
}

fn ceil_int(v: &Scalar) -> i64 {
    let c = v.as_rational().ceil().to_integer();
    i64::try_from(c).unwrap_or(i64::MAX)
}

fn bounds<'a>(ivs: impl Iterator<Item = &'a Interval>) -> (Scalar, Scalar) {
    let mut lo: Option<Scalar> = None;
    let mut hi: Option<Scalar> = None;
    for iv in ivs {
        if lo.as_ref().is_none_or(|l| iv.lo() < l) {
            lo = Some(iv.lo().clone());
        }
        if hi.as_ref().is_none_or(|h| iv.hi() > h) {
            hi = Some(iv.hi().clone());
        }
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => (Scalar::zero(), Scalar::one()),
    }
}

/// Frames as unfilled outlines; probe regions as dashed grey rectangles.
pub fn frames_svg(f: &FrameFamily) -> String {
    let vp = Viewport::fit(
        f.frames.iter().map(|fr| &fr.x).chain(f.probes.iter().map(|p| &p.region.x)),
        f.frames.iter().map(|fr| &fr.y).chain(f.probes.iter().map(|p| &p.region.y)),
    );
    let mut out = String::new();
    vp.header(&mut out);
    for p in &f.probes {
        let _ = writeln!(
            out,
            "<rect {} fill=\"none\" stroke=\"#aaaaaa\" stroke-dasharray=\"4 3\" stroke-width=\"0.75\"><title>probe {} {:?}</title></rect>",
            vp.rect_attrs(&p.region),
            p.id,
            p.members
        );
    }
    for fr in f.sorted_frames() {
        let color = PALETTE[fr.id % PALETTE.len()];
        let _ = writeln!(
            out,
            "<rect {} fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"><title>frame {}</title></rect>",
            vp.rect_attrs(&fr.rect()),
            fr.id
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Boxes as translucent filled rectangles with id labels; 2-D only.
pub fn boxes_svg(b: &BoxFamily) -> Result<String> {
    if b.dim != 2 {
        return Err(Error::Dimension(format!(
            "SVG rendering needs a 2-D family, got dim {}; render the box graph as DOT instead",
            b.dim
        )));
    }
    let vp = Viewport::fit(b.boxes.iter().map(|bx| &bx.intervals[0]), b.boxes.iter().map(|bx| &bx.intervals[1]));
    let mut out = String::new();
    vp.header(&mut out);
    for bx in b.sorted_boxes() {
        let r = Rect { x: bx.intervals[0].clone(), y: bx.intervals[1].clone() };
        let color = PALETTE[bx.id % PALETTE.len()];
        let _ = writeln!(
            out,
            "<rect {} fill=\"{color}\" fill-opacity=\"0.45\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            vp.rect_attrs(&r)
        );
        let cx = r.x.lo().mid(r.x.hi());
        let cy = r.y.lo().mid(r.y.hi());
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            vp.px(&cx),
            vp.py(&cy),
            bx.id
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
