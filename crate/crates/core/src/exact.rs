//! Exact rational scalars and the interval, rectangle and segment meet
//! predicates used by every geometric check in the crate.
//!
//! Nothing here touches floating point: contact between two boxes is a
//! matter of whether two endpoints are *equal*, which only exact arithmetic
//! can decide.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Scalar(BigRational::new(numer.into(), denom)))
    }

    pub fn int(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }

    /// `numer / denom`; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::new(numer, denom).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Midpoint of `self` and `other`.
    pub fn mid(&self, other: &Scalar) -> Scalar {
        (self + other) / Scalar::int(2)
    }

    /// Decimal rendering truncated toward negative infinity at `places`
    /// fractional digits. Used for presentation only (SVG coordinates).
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let scaled = (self.0.clone() * BigRational::from_integer(scale.clone())).floor();
        let v = scaled.to_integer();
        let neg = v.is_negative();
        let digits = v.abs().to_string();
        let places = places as usize;
        let padded = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        let frac_part = frac_part.trim_end_matches('0');
        let sign = if neg { "-" } else { "" };
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Scalar::new(n, d)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl Visitor<'_> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
                Ok(Scalar::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
                Ok(Scalar(BigRational::from_integer(BigInt::from(v))))
            }
        }

        d.deserialize_any(ScalarVisitor)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Scalar; 2]", into = "[Scalar; 2]")]
pub struct Interval {
    lo: Scalar,
    hi: Scalar,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar) -> Result<Self> {
        if lo > hi {
            return Err(Error::Geometry(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    /// A proper interval (`lo < hi`).
    pub fn proper(lo: Scalar, hi: Scalar) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Geometry(format!("interval [{lo}, {hi}] is not proper")));
        }
        Ok(Interval { lo, hi })
    }

    /// Integer endpoints; panics unless `lo <= hi`.
    pub fn ints(lo: i64, hi: i64) -> Self {
        Interval::new(Scalar::int(lo), Scalar::int(hi)).expect("lo <= hi")
    }

    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    pub fn is_proper(&self) -> bool {
        self.lo < self.hi
    }

    pub fn contains(&self, v: &Scalar) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// Open-interior containment `lo < v < hi`.
    pub fn contains_strictly(&self, v: &Scalar) -> bool {
        &self.lo < v && v < &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn meet(&self, other: &Interval) -> MeetKind {
        interval_meet(self, other)
    }

    /// Apply `x -> scale * x + shift` to both endpoints; `scale` must be positive.
    pub fn map_affine(&self, scale: &Scalar, shift: &Scalar) -> Interval {
        debug_assert!(!scale.is_negative() && !scale.is_zero());
        Interval { lo: &(&self.lo * scale) + shift, hi: &(&self.hi * scale) + shift }
    }
}

impl TryFrom<[Scalar; 2]> for Interval {
    type Error = Error;
    fn try_from([lo, hi]: [Scalar; 2]) -> Result<Self> {
        Interval::new(lo, hi)
    }
}

impl From<Interval> for [Scalar; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

/// Classification of the intersection of two closed intervals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MeetKind {
    Empty,
    Point(Scalar),
    Segment(Scalar, Scalar),
}

impl MeetKind {
    pub fn is_empty(&self) -> bool {
        matches!(self, MeetKind::Empty)
    }

    /// Short name of the variant, used in reports.
    pub fn kind_name(&self) -> &'static str {
        match self {
            MeetKind::Empty => "empty",
            MeetKind::Point(_) => "point",
            MeetKind::Segment(..) => "segment",
        }
    }

    pub fn as_interval(&self) -> Option<Interval> {
        match self {
            MeetKind::Empty => None,
            MeetKind::Point(c) => Some(Interval { lo: c.clone(), hi: c.clone() }),
            MeetKind::Segment(lo, hi) => Some(Interval { lo: lo.clone(), hi: hi.clone() }),
        }
    }
}

impl fmt::Display for MeetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeetKind::Empty => f.write_str("empty"),
            MeetKind::Point(c) => write!(f, "point({c})"),
            MeetKind::Segment(lo, hi) => write!(f, "segment({lo},{hi})"),
        }
    }
}

pub fn interval_meet(a: &Interval, b: &Interval) -> MeetKind {
    let lo = std::cmp::max(&a.lo, &b.lo);
    let hi = std::cmp::min(&a.hi, &b.hi);
    match lo.cmp(hi) {
        Ordering::Greater => MeetKind::Empty,
        Ordering::Equal => MeetKind::Point(lo.clone()),
        Ordering::Less => MeetKind::Segment(lo.clone(), hi.clone()),
    }
}

/// A closed axis-aligned rectangle with non-empty interior.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub x: Interval,
    pub y: Interval,
}

impl Rect {
    pub fn new(x: Interval, y: Interval) -> Result<Self> {
        if !x.is_proper() || !y.is_proper() {
            return Err(Error::Geometry(format!(
                "rectangle [{}, {}]x[{}, {}] has empty interior",
                x.lo, x.hi, y.lo, y.hi
            )));
        }
        Ok(Rect { x, y })
    }

    /// `[x0, x1] x [y0, y1]` from integers; panics if the result is degenerate.
    pub fn ints(x0: i64, x1: i64, y0: i64, y1: i64) -> Self {
        Rect::new(Interval::ints(x0, x1), Interval::ints(y0, y1)).expect("proper rectangle")
    }

    pub fn from_bounds(x0: Scalar, x1: Scalar, y0: Scalar, y1: Scalar) -> Result<Self> {
        Rect::new(Interval::new(x0, x1)?, Interval::new(y0, y1)?)
    }

    pub fn left(&self) -> AxisSegment {
        AxisSegment::vertical(self.x.lo.clone(), self.y.clone())
    }

    pub fn right(&self) -> AxisSegment {
        AxisSegment::vertical(self.x.hi.clone(), self.y.clone())
    }

    pub fn top(&self) -> AxisSegment {
        AxisSegment::horizontal(self.y.hi.clone(), self.x.clone())
    }

    pub fn bottom(&self) -> AxisSegment {
        AxisSegment::horizontal(self.y.lo.clone(), self.x.clone())
    }

    /// The closed intersection of two rectangles, possibly degenerate.
    pub fn meet(&self, other: &Rect) -> Option<(Interval, Interval)> {
        let x = interval_meet(&self.x, &other.x).as_interval()?;
        let y = interval_meet(&self.y, &other.y).as_interval()?;
        Some((x, y))
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.meet(other).is_some()
    }

    pub fn contains_point(&self, x: &Scalar, y: &Scalar) -> bool {
        self.x.contains(x) && self.y.contains(y)
    }
}

pub fn rect_in_interior(inner: &Rect, outer: &Rect) -> bool {
    outer.x.lo < inner.x.lo && inner.x.hi < outer.x.hi && outer.y.lo < inner.y.lo && inner.y.hi < outer.y.hi
}

pub fn rect_contains_rect(inner: &Rect, outer: &Rect) -> bool {
    outer.x.contains_interval(&inner.x) && outer.y.contains_interval(&inner.y)
}

/// A closed horizontal or vertical segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AxisSegment {
    /// `y = level`, `x` ranging over `span`.
    Horizontal { level: Scalar, span: Interval },
    /// `x = level`, `y` ranging over `span`.
    Vertical { level: Scalar, span: Interval },
}

impl AxisSegment {
    pub fn horizontal(y: Scalar, x: Interval) -> Self {
        debug_assert!(x.is_proper());
        AxisSegment::Horizontal { level: y, span: x }
    }

    pub fn vertical(x: Scalar, y: Interval) -> Self {
        debug_assert!(y.is_proper());
        AxisSegment::Vertical { level: x, span: y }
    }

    pub fn contains_point(&self, x: &Scalar, y: &Scalar) -> bool {
        match self {
            AxisSegment::Horizontal { level, span } => level == y && span.contains(x),
            AxisSegment::Vertical { level, span } => level == x && span.contains(y),
        }
    }
}

/// Intersection of two axis-parallel segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegMeet {
    Empty,
    Point(Scalar, Scalar),
    /// Collinear overlap of positive length; `horizontal` tells which
    /// coordinate `level` fixes.
    Overlap {
        horizontal: bool,
        level: Scalar,
        lo: Scalar,
        hi: Scalar,
    },
}

impl SegMeet {
    pub fn is_empty(&self) -> bool {
        matches!(self, SegMeet::Empty)
    }
}

pub fn seg_meet(s: &AxisSegment, t: &AxisSegment) -> SegMeet {
    use AxisSegment::*;
    match (s, t) {
        (Horizontal { level: a, span: sa }, Horizontal { level: b, span: sb })
        | (Vertical { level: a, span: sa }, Vertical { level: b, span: sb }) => {
            if a != b {
                return SegMeet::Empty;
            }
            let horizontal = matches!(s, Horizontal { .. });
            match interval_meet(sa, sb) {
                MeetKind::Empty => SegMeet::Empty,
                MeetKind::Point(c) if horizontal => SegMeet::Point(c, a.clone()),
                MeetKind::Point(c) => SegMeet::Point(a.clone(), c),
                MeetKind::Segment(lo, hi) => SegMeet::Overlap { horizontal, level: a.clone(), lo, hi },
            }
        }
        (Horizontal { level: y, span: xs }, Vertical { level: x, span: ys })
        | (Vertical { level: x, span: ys }, Horizontal { level: y, span: xs }) => {
            if xs.contains(x) && ys.contains(y) {
                SegMeet::Point(x.clone(), y.clone())
            } else {
                SegMeet::Empty
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::ints(lo, hi)
    }

    #[test]
    fn interval_meet_examples() {
        assert_eq!(interval_meet(&iv(0, 1), &iv(1, 2)), MeetKind::Point(Scalar::int(1)));
        assert_eq!(interval_meet(&iv(0, 1), &iv(2, 3)), MeetKind::Empty);
        assert_eq!(interval_meet(&iv(0, 2), &iv(1, 3)), MeetKind::Segment(Scalar::int(1), Scalar::int(2)));
    }

    #[test]
    fn interior_and_containment() {
        let outer = Rect::ints(0, 3, 0, 3);
        assert!(rect_in_interior(&Rect::ints(1, 2, 1, 2), &outer));
        assert!(!rect_in_interior(&Rect::ints(0, 2, 1, 2), &outer));
        assert!(!rect_in_interior(&outer, &outer));

        assert!(rect_contains_rect(&Rect::ints(1, 2, 1, 2), &outer));
        assert!(rect_contains_rect(&outer, &outer));
        assert!(!rect_contains_rect(&Rect::ints(0, 4, 1, 2), &outer));
    }

    #[test]
    fn seg_meet_examples() {
        let v1 = AxisSegment::vertical(Scalar::int(1), iv(0, 2));
        let h1 = AxisSegment::horizontal(Scalar::int(1), iv(0, 2));
        assert_eq!(seg_meet(&v1, &h1), SegMeet::Point(Scalar::int(1), Scalar::int(1)));

        let v2 = AxisSegment::vertical(Scalar::int(2), iv(0, 2));
        assert_eq!(seg_meet(&v1, &v2), SegMeet::Empty);

        let a = AxisSegment::horizontal(Scalar::int(0), iv(0, 2));
        let b = AxisSegment::horizontal(Scalar::int(0), iv(1, 3));
        assert_eq!(
            seg_meet(&a, &b),
            SegMeet::Overlap { horizontal: true, level: Scalar::int(0), lo: Scalar::int(1), hi: Scalar::int(2) }
        );
    }

    #[test]
    fn scalar_text_form() {
        assert_eq!(Scalar::ratio(2, 4).to_string(), "1/2");
        assert_eq!(Scalar::ratio(6, -3).to_string(), "-2");
        assert_eq!("4/-6".parse::<Scalar>().unwrap().to_string(), "-2/3");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Scalar::ratio(1, 3).to_decimal(4), "0.3333");
        assert_eq!(Scalar::ratio(-1, 2).to_decimal(3), "-0.5");
        assert_eq!(Scalar::int(7).to_decimal(2), "7");
        assert_eq!(Scalar::ratio(-1, 3).to_decimal(2), "-0.34");
    }

    #[test]
    fn rect_rejects_degenerate() {
        assert!(Rect::new(iv(0, 0), iv(0, 1)).is_err());
        assert!(Interval::new(Scalar::int(2), Scalar::int(1)).is_err());
        assert!(Interval::proper(Scalar::int(1), Scalar::int(1)).is_err());
    }
}
