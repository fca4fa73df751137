//! graph6 and edge-list text formats.
//!
//! graph6 (n ≤ 62): one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), …`) packed
//! six bits per byte, most significant bit first, each byte offset by 63.
//!
//! Edge lists: optional header lines `n=<k>` and `labels=<a> <b> …`, then one
//! `u v` pair per line; `#` starts a comment. A header line appearing after
//! edges starts the next graph of a stream.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edge-list" | "edges" | "edgelist" => Ok(Format::EdgeList),
            other => Err(Error::InvalidParams(format!("unknown format `{other}`"))),
        }
    }
}

/// A graph read from an edge list, with its optional label table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text).map(|l| l.graph),
    }
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g, None),
    }
}

fn bit_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= GRAPH6_MAX_ORDER, "graph6 output supports n ≤ 62");
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in bit_pairs(n) {
        acc = acc << 1 | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses a single graph6 line. An optional `>>graph6<<` prefix and
/// surrounding whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if !(63..=126).contains(&header) {
        return Err(Error::Graph6(format!("invalid header byte {header:#04x}")));
    }
    if header == 126 {
        return Err(Error::Graph6("orders above 62 are not supported".into()));
    }
    let n = (header - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    if let Some(&c) = body.iter().find(|c| !(63..=126).contains(*c)) {
        return Err(Error::Graph6(format!("invalid data byte {c:#04x}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut b = GraphBuilder::new(n);
    for (k, (i, j)) in bit_pairs(n).enumerate() {
        if bit(k) {
            b.add_edge(i, j)?;
        }
    }
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(b.build())
}

/// Parses a graph6 stream: one graph per nonblank line, each result tagged
/// with its 1-based line number.
pub fn parse_graph6_stream(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l)))
        .collect()
}

pub fn to_edge_list(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    writeln!(out, "n={}", g.order()).unwrap();
    match labels {
        Some(labels) => {
            writeln!(out, "labels={}", labels.join(" ")).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{} {}", labels[u], labels[v]).unwrap();
            }
        }
        None => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out
}

enum Line<'a> {
    Order(&'a str),
    Labels(&'a str),
    Edge(&'a str),
}

fn classify(line: &str) -> Line<'_> {
    if let Some((key, value)) = line.split_once('=') {
        match key.trim() {
            "n" => return Line::Order(value.trim()),
            "labels" => return Line::Labels(value.trim()),
            _ => {}
        }
    }
    Line::Edge(line)
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(l, _)| l).trim()
}

/// Parses exactly one graph from edge-list text.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    parse_edge_block(&lines)
}

/// Splits an edge-list stream into graphs; a header line after an edge line
/// begins a new graph. Results carry the line number where each graph starts.
pub fn parse_edge_list_stream(text: &str) -> Vec<(usize, Result<LabeledGraph>)> {
    let mut blocks: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut has_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        let header = !matches!(classify(l), Line::Edge(_));
        if blocks.is_empty() || (header && has_edges) {
            blocks.push(Vec::new());
            has_edges = false;
        }
        has_edges |= !header;
        blocks.last_mut().unwrap().push((i + 1, l));
    }
    blocks
        .into_iter()
        .map(|b| (b[0].0, parse_edge_block(&b)))
        .collect()
}

fn parse_edge_block(lines: &[(usize, &str)]) -> Result<LabeledGraph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut order: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    for &(ln, l) in lines {
        match classify(l) {
            Line::Order(v) => {
                if !edges.is_empty() || order.is_some() {
                    return Err(err(ln, "order header must precede edges".into()));
                }
                order = Some(v.parse().map_err(|_| err(ln, format!("bad order `{v}`")))?);
            }
            Line::Labels(v) => {
                if !edges.is_empty() || labels.is_some() {
                    return Err(err(ln, "label header must precede edges".into()));
                }
                let table: Vec<String> = v.split_whitespace().map(str::to_owned).collect();
                for (i, a) in table.iter().enumerate() {
                    if table[..i].contains(a) {
                        return Err(err(ln, format!("duplicate label `{a}`")));
                    }
                }
                labels = Some(table);
            }
            Line::Edge(e) => {
                let toks: Vec<&str> = e.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(err(ln, format!("expected `u v`, found `{e}`")));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks) {
                    *slot = match &labels {
                        Some(table) => table
                            .iter()
                            .position(|a| a == tok)
                            .ok_or_else(|| err(ln, format!("unknown label `{tok}`")))?,
                        None => tok
                            .parse()
                            .map_err(|_| err(ln, format!("bad vertex `{tok}`")))?,
                    };
                }
                if ends[0] == ends[1] {
                    return Err(err(ln, format!("loop at vertex {}", toks[0])));
                }
                edges.push((ln, ends[0], ends[1]));
            }
        }
    }
    if let (Some(k), Some(table)) = (order, &labels) {
        if k != table.len() {
            return Err(err(
                lines[0].0,
                format!("n={k} disagrees with {} labels", table.len()),
            ));
        }
    }
    let n = order
        .or(labels.as_ref().map(Vec::len))
        .unwrap_or_else(|| edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));
    let mut b = GraphBuilder::new(n);
    for (ln, u, v) in edges {
        b.add_edge(u, v).map_err(|e| err(ln, e.to_string()))?;
    }
    Ok(LabeledGraph {
        graph: b.build(),
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    /// Independent graph6 decoder written straight from the bit layout, used
    /// to derive the expected strings below.
    fn decode_reference(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bits = Vec::new();
        for &c in &b[1..] {
            for k in (0..6).rev() {
                bits.push((c - 63) >> k & 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn reference_decoder_agrees_on_examples() {
        assert_eq!(decode_reference("A_"), (2, vec![(0, 1)]));
        assert_eq!(
            decode_reference("Dhc"),
            (5, vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])
        );
        assert_eq!(decode_reference("Bw"), (3, vec![(0, 1), (0, 2), (1, 2)]));
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("Dhc").unwrap(), cycle(5).unwrap());
        assert_eq!(to_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(" \x01"), Err(Error::Graph6(_))));
        // K2 with a stray padding bit
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(
            parse(
                "0 1\n1 2",
                Format::EdgeList
            )
            .unwrap(),
            path(3).unwrap()
        );
        assert_eq!(to_edge_list(&complete(2).unwrap(), None), "n=2\n0 1\n");
        let g = parse_edge_list("# fig\nn=4\n0 1 # first\n1 0\n").unwrap();
        assert_eq!(g.graph.order(), 4);
        assert_eq!(g.graph.edge_count(), 1);
        let l = parse_edge_list("labels=a b c\na b\nb c\n").unwrap();
        assert_eq!(l.graph, path(3).unwrap());
        assert_eq!(l.labels.unwrap(), vec!["a", "b", "c"]);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=2\n0 2"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("0 x").is_err());
        assert!(parse_edge_list("0 1 2").is_err());
        assert!(parse_edge_list("n=two").is_err());
        assert!(parse_edge_list("labels=a b\na c").is_err());
        assert!(parse_edge_list("n=3\nlabels=a b\n").is_err());
    }

    #[test]
    fn edge_list_stream_splits_on_headers() {
        let text = "n=2\n0 1\nn=3\n0 1\n1 2\n";
        let gs = parse_edge_list_stream(text);
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].0, 1);
        assert_eq!(gs[1].0, 3);
        assert_eq!(gs[1].1.as_ref().unwrap().graph, path(3).unwrap());
        assert!(parse_edge_list_stream("").is_empty());
    }
}
