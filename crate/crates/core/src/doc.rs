//! Canonical JSON documents: sorted keys, two-space indentation, scalars as
//! `"p/q"` strings, trailing newline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::burling::{AxiomReport, BurlingLevel, FrameFamily, ProbeIssue};
use crate::cbu::{BoxFamily, CbuReport, SearchOutcome, SearchResult};
use crate::coloring::{AnalysisReport, ChiValue, ColorStatus, ColorVerdict};
use crate::error::Result;
use crate::graph::Graph;

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn canonical_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect(), labels: g.labels().clone() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let pairs: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &pairs)?.with_labels(self.labels.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A generated Burling level: graph plus its special stable sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurlingDoc {
    pub level: usize,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub specials: Vec<Vec<usize>>,
}

impl BurlingDoc {
    pub fn from_level(lv: &BurlingLevel) -> Self {
        BurlingDoc {
            level: lv.level,
            n: lv.graph.n(),
            edges: lv.graph.edges().map(|(u, v)| [u, v]).collect(),
            specials: lv.specials.clone(),
        }
    }
}

pub fn parse_box_family(text: &str) -> Result<BoxFamily> {
    let f: BoxFamily = serde_json::from_str(text)?;
    f.check_shape()?;
    Ok(f)
}

pub fn parse_frame_family(text: &str) -> Result<FrameFamily> {
    let f: FrameFamily = serde_json::from_str(text)?;
    f.validate()?;
    Ok(f)
}

pub fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(GraphDoc::from_graph(g)).expect("graph documents serialize")
}

pub fn cbu_report_value(r: &CbuReport) -> Value {
    json!({
        "valid": r.valid,
        "violations": r.violations.iter().map(|v| json!({
            "pair": [v.pair.0, v.pair.1],
            "axis0": v.axis0.to_string(),
        })).collect::<Vec<_>>(),
        "graph": graph_value(&r.graph),
    })
}

pub fn axiom_report_value(r: &AxiomReport, probe_issues: &[ProbeIssue]) -> Value {
    json!({
        "pass": r.pass() && probe_issues.is_empty(),
        "triangle_free": r.triangle_free,
        "a1_ok": r.a1_ok,
        "a2_ok": r.a2_ok,
        "a3_ok": r.a3_ok,
        "violations": r.violations,
        "probe_issues": probe_issues,
    })
}

pub fn verdict_value(v: &ColorVerdict) -> Value {
    let mut out = json!({
        "k": v.k,
        "status": v.status_name(),
        "nodes_explored": v.nodes_explored,
    });
    if let ColorStatus::Yes(c) = &v.status {
        out["coloring"] = json!(c.to_map());
    }
    out
}

pub fn analysis_value(r: &AnalysisReport) -> Value {
    let chi = match r.chromatic.chi {
        ChiValue::Exact(c) => json!({ "exact": c }),
        ChiValue::Bracket { lower, upper } => json!({ "lower": lower, "upper": upper, "status": "unknown" }),
    };
    json!({
        "n": r.n,
        "m": r.m,
        "chi": chi,
        "coloring": r.chromatic.coloring.to_map(),
        "refutation": r.chromatic.refutation.as_ref().map(verdict_value),
        "nodes_explored": r.chromatic.nodes_explored,
        "omega": r.omega.size,
        "clique": r.omega.witness,
        "triangle_free": r.triangle_free(),
        "triangle": r.triangle.map(|(a, b, c)| [a, b, c]),
        "wheel": r.wheel,
    })
}

pub fn search_value(r: &SearchResult) -> Value {
    let mut out = json!({
        "dim": r.dim,
        "outcome": r.outcome_name(),
        "nodes_explored": r.nodes_explored,
    });
    if let SearchOutcome::Representation(f) = &r.outcome {
        out["representation"] = serde_json::to_value(f).expect("families serialize");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cbu::BoxD;
    use crate::exact::Scalar;

    #[test]
    fn box_family_document_shape() {
        let f = BoxFamily::new(2, vec![BoxD::ints(0, &[(0, 1), (-1, 2)])]).unwrap();
        let text = canonical_json(&f).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["dim"], 2);
        assert_eq!(v["boxes"][0]["intervals"][1], json!(["-1", "2"]));
        assert_eq!(parse_box_family(&text).unwrap(), f);
    }

    #[test]
    fn scalars_normalize_on_read() {
        let text = r#"{"dim":1,"boxes":[{"id":0,"intervals":[["2/4","3"]]}]}"#;
        let f = parse_box_family(text).unwrap();
        assert_eq!(f.boxes[0].intervals[0].lo(), &Scalar::ratio(1, 2));
        assert!(canonical_json(&f).unwrap().contains("\"1/2\""));
        assert!(parse_box_family(r#"{"dim":1,"boxes":[{"id":0,"intervals":[["1/0","3"]]}]}"#).is_err());
    }

    #[test]
    fn keys_are_sorted() {
        let text = canonical_json(&json!({"b": 1, "a": {"d": 2, "c": 3}})).unwrap();
        assert_eq!(text, "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
    }
}
