//! Burling graphs: the recursive construction, frame families and the
//! frame-axiom checker, and frame realizations of the construction.

mod frames;
mod realize;
mod sequence;

pub use frames::{
    frame_graph, frame_meets_region, frames_meet, in_generic_position, segment_meets_frame, verify_burling_axioms,
    verify_probes, Axiom, AxiomReport, Frame, FrameFamily, ProbeIssue, ProbeRecord, Side, Violation,
};
pub use realize::{realize_frames, realize_frames_with_max, DEFAULT_MAX_REALIZATION};
pub use sequence::{
    burling_abstract, burling_abstract_with_max, level_sizes, probe_lemma_check, BurlingLevel, DEFAULT_MAX_LEVEL,
};
