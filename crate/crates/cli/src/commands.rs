use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use framebox_core::burling::{
    burling_abstract_with_max, frame_graph, realize_frames_with_max, verify_burling_axioms, verify_probes,
    DEFAULT_MAX_LEVEL, DEFAULT_MAX_REALIZATION,
};
use framebox_core::cbu::{box_graph, lift_dim, search_cbu_with_limits, verify_cbu, SearchLimits};
use framebox_core::certify::{certify_theorem1, search_limit_note, CertifyOptions, Theorem1Inputs};
use framebox_core::coloring::{analyze, k_colorable};
use framebox_core::doc::{
    analysis_value, axiom_report_value, canonical_json, cbu_report_value, parse_box_family, parse_frame_family,
    search_value, verdict_value, BurlingDoc,
};
use framebox_core::graph_io::{parse_graph_auto, to_dot, to_graph6};
use framebox_core::render::{boxes_svg, frames_svg};
use framebox_core::{shipped, Graph};
use serde_json::Value;

/// Semantic result of a command; malformed input is an `Err` instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_pass(pass: bool) -> Status {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Writes to `out` if given, stdout otherwise.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph_auto(&read(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

pub struct GenBurling {
    pub level: usize,
    pub frames: bool,
    pub out_dir: PathBuf,
    pub realization_max: usize,
}

pub fn gen_burling(opts: &GenBurling) -> Result<Vec<PathBuf>> {
    let lv = burling_abstract_with_max(opts.level, DEFAULT_MAX_LEVEL)?;
    let family = if opts.frames { Some(realize_frames_with_max(opts.level, opts.realization_max)?) } else { None };
    fs::create_dir_all(&opts.out_dir).with_context(|| format!("creating {}", opts.out_dir.display()))?;
    let stem = format!("burling{}", opts.level);
    let mut written = Vec::new();
    let mut put = |name: String, text: String| -> Result<()> {
        let p = opts.out_dir.join(name);
        write(&p, &text)?;
        written.push(p);
        Ok(())
    };
    put(format!("{stem}.g6"), format!("{}\n", to_graph6(&lv.graph)))?;
    put(format!("{stem}.json"), canonical_json(&BurlingDoc::from_level(&lv))?)?;
    if let Some(f) = family {
        put(format!("{stem}_frames.json"), canonical_json(&f)?)?;
    }
    Ok(written)
}

pub fn gen_g1(out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let g6 = out_dir.join("g1.g6");
    write(&g6, &format!("{}\n", to_graph6(&shipped::g1_graph())))?;
    let boxes = out_dir.join("g1_boxes.json");
    write(&boxes, &canonical_json(&shipped::g1_boxes())?)?;
    Ok(vec![g6, boxes])
}

pub fn verify_burling(path: &Path) -> Result<(Status, String)> {
    let f = parse_frame_family(&read(path)?).with_context(|| format!("parsing frame family {}", path.display()))?;
    let report = verify_burling_axioms(&f);
    let issues = verify_probes(&f);
    let pass = report.pass() && issues.is_empty();
    let mut v = axiom_report_value(&report, &issues);
    v["graph"] = framebox_core::doc::graph_value(&frame_graph(&f));
    Ok((Status::from_pass(pass), canonical_json(&v)?))
}

pub fn verify_cbu_file(path: &Path) -> Result<(Status, String)> {
    let f = parse_box_family(&read(path)?).with_context(|| format!("parsing box family {}", path.display()))?;
    let report = verify_cbu(&f)?;
    Ok((Status::from_pass(report.valid), canonical_json(&cbu_report_value(&report))?))
}

pub fn analyze_file(path: &Path, budget: u64, k: Option<usize>) -> Result<String> {
    let g = load_graph(path)?;
    let report = analyze(&g, budget)?;
    let mut v = analysis_value(&report);
    if let Some(k) = k {
        v["k_colorable"] = verdict_value(&k_colorable(&g, k, budget));
    }
    Ok(canonical_json(&v)?)
}

pub fn search_file(path: &Path, dim: usize, budget: u64, limits: SearchLimits) -> Result<String> {
    let g = load_graph(path)?;
    let r = search_cbu_with_limits(&g, dim, budget, limits)?;
    Ok(canonical_json(&search_value(&r))?)
}

pub fn lift_file(path: &Path) -> Result<String> {
    let f = parse_box_family(&read(path)?).with_context(|| format!("parsing box family {}", path.display()))?;
    Ok(canonical_json(&lift_dim(&f))?)
}

pub struct CertifyFiles {
    pub g1_graph: Option<PathBuf>,
    pub g1_boxes: Option<PathBuf>,
    pub g2_graph: Option<PathBuf>,
    pub g2_frames: Option<PathBuf>,
}

/// Missing files fall back to the built-in wheel and the level-3 realization.
pub fn certify(files: &CertifyFiles, opts: &CertifyOptions) -> Result<(Status, String)> {
    let defaults = shipped::default_inputs()?;
    let inputs = Theorem1Inputs {
        g1_graph: match &files.g1_graph {
            Some(p) => load_graph(p)?,
            None => defaults.g1_graph,
        },
        g1_boxes: match &files.g1_boxes {
            Some(p) => parse_box_family(&read(p)?).with_context(|| format!("parsing box family {}", p.display()))?,
            None => defaults.g1_boxes,
        },
        g2_graph: match &files.g2_graph {
            Some(p) => load_graph(p)?,
            None => defaults.g2_graph,
        },
        g2_frames: match &files.g2_frames {
            Some(p) => {
                parse_frame_family(&read(p)?).with_context(|| format!("parsing frame family {}", p.display()))?
            }
            None => defaults.g2_frames,
        },
    };
    let verdict = certify_theorem1(&inputs, opts);
    let mut v = serde_json::to_value(&verdict)?;
    if let Some(note) = search_limit_note(&inputs.g2_graph, opts) {
        v["notes"] = Value::from(vec![note]);
    }
    Ok((Status::from_pass(verdict.overall_pass), canonical_json(&v)?))
}

/// SVG for 2-D box or frame families, DOT for graphs or when `out` ends in `.dot`.
pub fn render(path: &Path, out: &Path) -> Result<()> {
    let text = read(path)?;
    let want_dot = out.extension().is_some_and(|e| e == "dot");
    let json: Option<Value> = serde_json::from_str(&text).ok();
    let kind = json.as_ref().and_then(|v| {
        if v.get("boxes").is_some() {
            Some("boxes")
        } else if v.get("frames").is_some() {
            Some("frames")
        } else {
            None
        }
    });
    let rendered = match kind {
        Some("boxes") => {
            let f = parse_box_family(&text).with_context(|| format!("parsing box family {}", path.display()))?;
            if want_dot {
                f.validate()?;
                to_dot(&box_graph(&f), "boxes")
            } else {
                boxes_svg(&f)?
            }
        }
        Some(_) => {
            let f = parse_frame_family(&text).with_context(|| format!("parsing frame family {}", path.display()))?;
            if want_dot {
                to_dot(&frame_graph(&f), "frames")
            } else {
                frames_svg(&f)
            }
        }
        None => {
            if out.extension().is_some_and(|e| e == "svg") {
                bail!("graphs render as DOT; choose an output ending in .dot");
            }
            to_dot(&load_graph(path)?, "g")
        }
    };
    write(out, &rendered)
}

pub fn default_realization_max() -> usize {
    DEFAULT_MAX_REALIZATION
}
