//! Optional JSON config document. Every field mirrors a command-line flag;
//! an explicit flag (or its environment variable) wins over the document.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub budget: Option<u64>,
    pub k: Option<usize>,
    pub dim: Option<usize>,
    pub level: Option<usize>,
    pub frames: Option<bool>,
    pub out_dir: Option<PathBuf>,
    pub refute_dim: Option<usize>,
    pub realization_max: Option<usize>,
    pub search_max_vertices: Option<usize>,
    pub search_max_dim: Option<usize>,
    pub g1_graph: Option<PathBuf>,
    pub g1_boxes: Option<PathBuf>,
    pub g2_graph: Option<PathBuf>,
    pub g2_frames: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}
