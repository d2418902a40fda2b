//! Browser bindings for the workbench demo page.
//!
//! Each exported function has a plain-Rust twin returning `Result<String,
//! String>` so the logic is testable off the browser.

use framebox_core::burling::{realize_frames, verify_burling_axioms, verify_probes};
use framebox_core::cbu::verify_cbu;
use framebox_core::coloring::{analyze, DEFAULT_BUDGET};
use framebox_core::doc::{analysis_value, axiom_report_value, canonical_json, cbu_report_value, parse_box_family};
use framebox_core::graph_io::parse_graph_auto;
use framebox_core::render::{boxes_svg, frames_svg};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest budget the page accepts, to keep the tab responsive.
pub const MAX_PAGE_BUDGET: u64 = 50_000_000;

/// SVG of the frame realization of a level, plus its axiom report.
pub fn frames_demo(level: usize) -> Result<String, String> {
    let f = realize_frames(level).map_err(|e| e.to_string())?;
    let report = verify_burling_axioms(&f);
    let issues = verify_probes(&f);
    let out = json!({
        "svg": frames_svg(&f),
        "frames": f.frames.len(),
        "probes": f.probes.len(),
        "report": axiom_report_value(&report, &issues),
    });
    canonical_json(&out).map_err(|e| e.to_string())
}

/// Verification report for a box family document, with an SVG when 2-D.
pub fn boxes_demo(doc: &str) -> Result<String, String> {
    let f = parse_box_family(doc).map_err(|e| e.to_string())?;
    let report = verify_cbu(&f).map_err(|e| e.to_string())?;
    let mut out = json!({ "report": cbu_report_value(&report) });
    if f.dim == 2 {
        out["svg"] = json!(boxes_svg(&f).map_err(|e| e.to_string())?);
    }
    canonical_json(&out).map_err(|e| e.to_string())
}

/// χ, ω, triangle and wheel report for graph6, edge-list or JSON text.
pub fn analyze_demo(text: &str, budget: u64) -> Result<String, String> {
    let g = parse_graph_auto(text).map_err(|e| e.to_string())?;
    let report = analyze(&g, budget.clamp(1, MAX_PAGE_BUDGET)).map_err(|e| e.to_string())?;
    canonical_json(&analysis_value(&report)).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn burling_frames(level: u32) -> Result<String, JsValue> {
    frames_demo(level as usize).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify_boxes(doc: &str) -> Result<String, JsValue> {
    boxes_demo(doc).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze_graph(text: &str, budget: Option<f64>) -> Result<String, JsValue> {
    let budget = budget.filter(|b| b.is_finite() && *b >= 1.0).map_or(DEFAULT_BUDGET, |b| b as u64);
    analyze_demo(text, budget).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use framebox_core::shipped::g1_boxes;
    use serde_json::Value;

    #[test]
    fn frames_demo_reports_a_clean_level() {
        let v: Value = serde_json::from_str(&frames_demo(2).unwrap()).unwrap();
        assert_eq!(v["frames"], 3);
        assert_eq!(v["report"]["pass"], true);
        assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
        assert!(frames_demo(9).is_err());
    }

    #[test]
    fn boxes_demo_verifies_and_draws() {
        let doc = canonical_json(&g1_boxes()).unwrap();
        let v: Value = serde_json::from_str(&boxes_demo(&doc).unwrap()).unwrap();
        assert_eq!(v["report"]["valid"], true);
        assert_eq!(v["svg"].as_str().unwrap().matches("<text").count(), 7);
        assert!(boxes_demo("{").is_err());
    }

    #[test]
    fn analyze_demo_reads_graph6() {
        let v: Value = serde_json::from_str(&analyze_demo("Dhc", 1000).unwrap()).unwrap();
        assert_eq!(v["chi"]["exact"], 3);
        assert_eq!(v["omega"], 2);
        assert!(analyze_demo("not a graph", 10).is_err());
    }
}
