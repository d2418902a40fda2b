//! Built-in witnesses: a 7-vertex wheel with a 2-CBU box representation and
//! the default Burling side of the certificate.

use crate::burling::{burling_abstract, realize_frames, FrameFamily};
use crate::cbu::{BoxD, BoxFamily};
use crate::certify::Theorem1Inputs;
use crate::error::Result;
use crate::graph::Graph;

/// Level used for the Burling side when no files are given.
pub const DEFAULT_G2_LEVEL: usize = 3;

/// Hub 0 on the rim cycle 1-2-3-4-5-6, spokes to 1, 3 and 5.
pub fn g1_graph() -> Graph {
    Graph::wheel_on(6, &[0, 2, 4])
}

/// Unit-width columns and rows touching only along vertical lines.
pub fn g1_boxes() -> BoxFamily {
    BoxFamily::new(
        2,
        vec![
            BoxD::ints(0, &[(0, 1), (2, 6)]),
            BoxD::ints(1, &[(1, 2), (0, 3)]),
            BoxD::ints(2, &[(2, 3), (2, 6)]),
            BoxD::ints(3, &[(1, 2), (5, 8)]),
            BoxD::ints(4, &[(0, 1), (7, 9)]),
            BoxD::ints(5, &[(-1, 0), (0, 9)]),
            BoxD::ints(6, &[(0, 1), (0, 1)]),
        ],
    )
    .expect("shipped family is well formed")
}

pub fn g2_frames() -> FrameFamily {
    realize_frames(DEFAULT_G2_LEVEL).expect("default level is realizable")
}

pub fn default_inputs() -> Result<Theorem1Inputs> {
    Ok(Theorem1Inputs {
        g1_graph: g1_graph(),
        g1_boxes: g1_boxes(),
        g2_graph: burling_abstract(DEFAULT_G2_LEVEL)?.graph,
        g2_frames: g2_frames(),
    })
}
