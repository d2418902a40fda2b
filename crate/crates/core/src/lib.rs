//! Exact geometry and graph tools for frame (Burling) and box (CBU)
//! intersection graphs.
//!
//! All coordinates are exact rationals. Closed sets throughout: two shapes
//! meet when they share at least one point, corners included.

pub mod burling;
pub mod cbu;
pub mod certify;
pub mod coloring;
pub mod doc;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph_io;
pub mod render;
pub mod shipped;

pub use error::{Error, Result};
pub use exact::{interval_meet, seg_meet, AxisSegment, Interval, MeetKind, Rect, Scalar, SegMeet};
pub use graph::Graph;
