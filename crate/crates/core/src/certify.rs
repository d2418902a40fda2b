//! The incomparability certificate: a wheel with a 2-CBU box representation
//! on one side, a Burling frame family on the other.
//!
//! Every claim is either re-checked here from the supplied data or recorded
//! as resting on a published theorem. Nothing in the verdict depends on
//! timing or scheduling.

use serde::Serialize;

use crate::burling::{frame_graph, verify_burling_axioms, FrameFamily};
use crate::cbu::{box_graph, lift_dim, search_cbu_with_limits, verify_cbu, BoxFamily, SearchLimits, SearchOutcome};
use crate::coloring::DEFAULT_BUDGET;
use crate::graph::{graphs_equal_by_id, triangle_witness, wheel_witness, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimStatus {
    MachineChecked { pass: bool },
    CitedTheorem { reference: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub status: ClaimStatus,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateVerdict {
    pub claims: Vec<Claim>,
    pub overall_pass: bool,
}

impl CertificateVerdict {
    pub fn cited_count(&self) -> usize {
        self.claims.iter().filter(|c| matches!(c.status, ClaimStatus::CitedTheorem { .. })).count()
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

pub struct Theorem1Inputs {
    pub g1_graph: Graph,
    pub g1_boxes: BoxFamily,
    pub g2_graph: Graph,
    pub g2_frames: FrameFamily,
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Dimension for the bounded search refuting a CBU representation of G2.
    pub refute_dim: Option<usize>,
    pub budget: u64,
    pub limits: SearchLimits,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { refute_dim: None, budget: DEFAULT_BUDGET, limits: SearchLimits::default() }
    }
}

fn checked(id: &str, statement: &str, pass: bool, details: String) -> Claim {
    Claim { id: id.into(), statement: statement.into(), status: ClaimStatus::MachineChecked { pass }, details }
}

fn cited(id: &str, statement: &str, reference: &str, details: &str) -> Claim {
    Claim {
        id: id.into(),
        statement: statement.into(),
        status: ClaimStatus::CitedTheorem { reference: reference.into() },
        details: details.into(),
    }
}

pub fn certify_theorem1(inputs: &Theorem1Inputs, opts: &CertifyOptions) -> CertificateVerdict {
    let mut claims = Vec::new();

    // G1 has a valid 2-CBU representation
    let g1_rep = match (inputs.g1_boxes.dim, verify_cbu(&inputs.g1_boxes)) {
        (2, Ok(report)) => {
            let same = graphs_equal_by_id(&report.graph, &inputs.g1_graph);
            let details = if !report.valid {
                let v = &report.violations[0];
                format!("boxes {} and {} meet along {} on axis 0", v.pair.0, v.pair.1, v.axis0)
            } else if !same {
                "box intersection graph differs from the supplied G1 graph".to_string()
            } else {
                format!("{} boxes, {} contacts, all axis-0 degenerate", inputs.g1_boxes.boxes.len(), report.graph.m())
            };
            checked("g1_is_2cbu", "G1 is a 2-CBU graph", report.valid && same, details)
        }
        (d, Ok(_)) => {
            checked("g1_is_2cbu", "G1 is a 2-CBU graph", false, format!("box family has dim {d}, expected 2"))
        }
        (_, Err(e)) => checked("g1_is_2cbu", "G1 is a 2-CBU graph", false, format!("malformed box family: {e}")),
    };
    let g1_ok = matches!(g1_rep.status, ClaimStatus::MachineChecked { pass: true });
    claims.push(g1_rep);

    // lifting preserves the representation, so G1 is d-CBU for every d >= 2
    let lifted = lift_dim(&inputs.g1_boxes);
    let lift_ok = g1_ok
        && verify_cbu(&lifted).is_ok_and(|r| r.valid)
        && graphs_equal_by_id(&box_graph(&lifted), &inputs.g1_graph);
    claims.push(checked(
        "g1_is_3cbu",
        "G1 is a d-CBU graph for d >= 3 (lifted representation)",
        lift_ok,
        format!("appending [0,1] as axis {} keeps every contact and its axis-0 degeneracy", inputs.g1_boxes.dim),
    ));

    let wheel = wheel_witness(&inputs.g1_graph);
    claims.push(checked(
        "g1_is_wheel",
        "G1 is a wheel",
        wheel.is_some(),
        match &wheel {
            Some(w) => format!("hub {} on rim cycle {:?}", w.hub, w.cycle),
            None => "no vertex leaves a single spanning cycle when removed".into(),
        },
    ));

    let t1 = triangle_witness(&inputs.g1_graph);
    let t2 = triangle_witness(&inputs.g2_graph);
    claims.push(checked(
        "triangle_free",
        "G1 and G2 are triangle-free",
        t1.is_none() && t2.is_none(),
        match (t1, t2) {
            (None, None) => "exhaustive scan found no triangle in either graph".into(),
            (Some(t), _) => format!("G1 triangle {t:?}"),
            (_, Some(t)) => format!("G2 triangle {t:?}"),
        },
    ));

    let axioms =
        if inputs.g2_frames.validate().is_ok() { Some(verify_burling_axioms(&inputs.g2_frames)) } else { None };
    let frames_match = graphs_equal_by_id(&frame_graph(&inputs.g2_frames), &inputs.g2_graph);
    let g2_pass = axioms.as_ref().is_some_and(|a| a.pass()) && frames_match;
    claims.push(checked(
        "g2_is_burling",
        "G2 is represented as a Burling graph by frames",
        g2_pass,
        match &axioms {
            None => "malformed frame family".into(),
            Some(a) if !a.pass() => format!(
                "{} axiom violation(s); first: {}",
                a.violations.len(),
                a.violations.first().map(|v| v.reason.as_str()).unwrap_or("")
            ),
            Some(_) if !frames_match => "frame intersection graph differs from the supplied G2 graph".into(),
            Some(_) => format!("{} frames satisfy all three frame axioms", inputs.g2_frames.frames.len()),
        },
    ));

    if let Some(d) = opts.refute_dim {
        match search_cbu_with_limits(&inputs.g2_graph, d, opts.budget, opts.limits) {
            Ok(r) => {
                let pass = matches!(r.outcome, SearchOutcome::NoneComplete);
                claims.push(checked(
                    &format!("g2_not_{d}cbu"),
                    &format!("G2 has no {d}-CBU representation"),
                    pass,
                    format!("bounded grid search: {} after {} nodes", r.outcome_name(), r.nodes_explored),
                ));
            }
            Err(e) => {
                // out of the search's size limits: nothing is claimed
                let _ = e;
            }
        }
    }

    claims.push(cited(
        "wheels_not_burling",
        "Wheels are not Burling graphs",
        "Trotignon and coauthor (2020), wheels are not Burling graphs; see also J. Davies (2021)",
        "combined with g1_is_wheel: G1 is not a Burling graph",
    ));
    claims.push(cited(
        "g2_not_cbu",
        "G2 is not a CBU graph for any dimension",
        "Goncalves, Limouzy, Ochem (2023), Lemma 16",
        "applies to the graph of the cited lemma; a user-supplied G2 inherits it only if it is that graph",
    ));
    claims.push(cited(
        "cbu_hierarchy_strict",
        "d-CBU graphs form a strict subclass of (d+1)-CBU graphs",
        "Goncalves, Limouzy, Ochem (2023), Theorem 19",
        "the inclusion half is witnessed by g1_is_3cbu; strictness is cited",
    ));

    let overall_pass = claims.iter().all(|c| !matches!(c.status, ClaimStatus::MachineChecked { pass: false }));
    CertificateVerdict { claims, overall_pass }
}

pub fn search_limit_note(g2: &Graph, opts: &CertifyOptions) -> Option<String> {
    let d = opts.refute_dim?;
    (g2.n() > opts.limits.max_vertices || d > opts.limits.max_dim).then(|| {
        format!(
            "refutation search skipped: G2 has {} vertices at dim {d}, limits are {} vertices and dim {}",
            g2.n(),
            opts.limits.max_vertices,
            opts.limits.max_dim
        )
    })
}
