//! Graph text formats: graph6, a plain edge list, and DOT export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes `g` in graph6, without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(b: u8) -> Result<usize> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as usize)
    } else {
        Err(Error::Parse(format!("graph6: byte {b} outside 63..=126")))
    }
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("graph6: empty input".into()));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes[0])?, 1)
    } else if bytes.get(1) != Some(&126) {
        let digits = bytes.get(1..4).ok_or_else(|| Error::Parse("graph6: truncated size".into()))?;
        (digits.iter().try_fold(0, |acc, &b| Ok::<_, Error>((acc << 6) | sextet(b)?))?, 4)
    } else {
        let digits = bytes.get(2..8).ok_or_else(|| Error::Parse("graph6: truncated size".into()))?;
        (digits.iter().try_fold(0, |acc, &b| Ok::<_, Error>((acc << 6) | sextet(b)?))?, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if bytes.len() - pos != expected {
        return Err(Error::Parse(format!(
            "graph6: expected {expected} data bytes for n={n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    let mut word = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                word = sextet(bytes[pos])?;
                pos += 1;
            }
            if (word >> (5 - k % 6)) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if k % 6 != 0 && word & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::Parse("graph6: nonzero padding bits".into()));
    }
    Graph::from_edges(n, &pairs)
}

/// `"n m"` header followed by one `"u v"` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("edge list: missing header".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        let [u, v] = parse_pair(line)?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse(format!("edge list: header declares {m} edges, found {}", pairs.len())));
    }
    Graph::from_edges(n, &pairs)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse(format!("edge list: bad line {line:?}"))),
    }
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        match g.labels().get(&v) {
            Some(label) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Graph text in one of the accepted encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    Json,
}

pub fn detect_format(text: &str) -> GraphFormat {
    let t = text.trim_start();
    if t.starts_with('{') {
        GraphFormat::Json
    } else if t
        .lines()
        .next()
        .is_some_and(|l| l.split_whitespace().count() == 2 && l.split_whitespace().all(|w| w.parse::<usize>().is_ok()))
    {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

/// Parses graph6, an edge list, or a JSON graph document, chosen by content.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    match detect_format(text) {
        GraphFormat::Graph6 => from_graph6(text),
        GraphFormat::EdgeList => from_edge_list(text),
        GraphFormat::Json => crate::doc::GraphDoc::parse(text)?.to_graph(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
    }

    #[test]
    fn graph6_parse_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("A`").is_err()); // padding bit set
        assert!(from_graph6("A_x").is_err());
        assert_eq!(from_graph6(">>graph6<<DQc\n").unwrap().m(), 4);
    }

    #[test]
    fn graph6_long_header() {
        let g = Graph::path(100);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(&s[1..4], "?@c"); // 100 = 0b000000_000001_100100
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5);
        let text = to_edge_list(&g);
        assert!(text.starts_with("5 5\n"));
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(from_edge_list("3 1\n0 5\n").is_err());
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&Graph::path(3), "p3");
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.starts_with("graph p3 {"));
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("DQc"), GraphFormat::Graph6);
        assert_eq!(detect_format("5 4\n0 1\n"), GraphFormat::EdgeList);
        assert_eq!(detect_format("{\"n\":1}"), GraphFormat::Json);
    }
}
