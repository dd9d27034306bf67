//! Graph file formats: plain edge lists, the DIMACS `p edge` variant, and
//! graph6.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `n m` header, then `u v` per line, 0-based; `#` comments.
    EdgeList,
    /// `p edge n m` header, then `e u v` per line, 1-based; `c` comments.
    Dimacs,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edges" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::Input(format!("unknown graph format `{other}`"))),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: Some(line),
        msg: msg.into(),
    }
}

/// Picks a format from the file name, falling back to the first meaningful
/// line of the content.
pub fn detect_format(name: Option<&str>, text: &str) -> GraphFormat {
    if let Some(ext) = name.and_then(|n| n.rsplit_once('.')).map(|(_, e)| e.to_ascii_lowercase()) {
        match ext.as_str() {
            "g6" | "graph6" => return GraphFormat::Graph6,
            "dimacs" | "col" => return GraphFormat::Dimacs,
            "edges" | "el" => return GraphFormat::EdgeList,
            _ => {}
        }
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("c ") && *l != "c");
    match first {
        Some(l) if l.starts_with("p ") => GraphFormat::Dimacs,
        Some(l) if l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("`{t}` is not a vertex id"))))
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = match numbers(header, hl)?[..] {
        [n, m] => (n, m),
        _ => return Err(parse_err(hl, "header must be `n m`")),
    };
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (lineno, line) in lines {
        match numbers(line, lineno)?[..] {
            [u, v] => g.add_edge(u, v).map_err(|e| parse_err(lineno, e.to_string()))?,
            _ => return Err(parse_err(lineno, "edge line must be `u v`")),
        }
        count += 1;
    }
    if count != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut count = 0;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some(t) if t.starts_with('#') => continue,
            Some("p") => {
                let rest: Vec<&str> = toks.collect();
                let (n, m) = match rest[..] {
                    [_, n, m] => (n, m),
                    _ => return Err(parse_err(lineno, "header must be `p edge n m`")),
                };
                let n = n.parse().map_err(|_| parse_err(lineno, "bad vertex count"))?;
                let m = m.parse().map_err(|_| parse_err(lineno, "bad edge count"))?;
                graph = Some((Graph::empty(n), m));
            }
            Some("e") => {
                let (g, _) = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(lineno, "edge before `p` header"))?;
                let ids = numbers(&toks.collect::<Vec<_>>().join(" "), lineno)?;
                match ids[..] {
                    [u, v] if u >= 1 && v >= 1 => {
                        g.add_edge(u - 1, v - 1).map_err(|e| parse_err(lineno, e.to_string()))?
                    }
                    _ => return Err(parse_err(lineno, "edge line must be `e u v` with 1-based ids")),
                }
                count += 1;
            }
            Some(other) => return Err(parse_err(lineno, format!("unexpected line kind `{other}`"))),
        }
    }
    let (g, m) = graph.ok_or_else(|| parse_err(1, "missing `p edge n m` header"))?;
    if count != m {
        return Err(parse_err(1, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

/// Reads the first graph6 string in `text` (an optional `>>graph6<<` header
/// is skipped).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (lineno, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "empty graph6 input"))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(lineno, "graph6 bytes must lie in 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(parse_err(lineno, "empty graph6 string")),
        Some(126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(parse_err(lineno, "graph6 vertex counts above 258047 are not supported"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() != bits_needed.div_ceil(6) {
        return Err(parse_err(
            lineno,
            format!("graph6 body has {} bytes, expected {}", body.len(), bits_needed.div_ceil(6)),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
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
    String::from_utf8(out).unwrap()
}

/// Edge-list text: `n m` then one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::{generate_family, Family};
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# a path\n3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g, generate_family(Family::Path, 3).unwrap());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_dimacs("c cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
        assert_eq!(g, generate_family(Family::Cycle, 4).unwrap());
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // DQc: edges 0-2, 0-4, 1-3, 3-4
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g, Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap());
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(write_graph6(&generate_family(Family::Complete, 4).unwrap()), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
        assert_eq!(parse_graph6("@").unwrap().vertex_count(), 1);
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format(Some("g.g6"), "3 2"), GraphFormat::Graph6);
        assert_eq!(detect_format(None, "# x\n3 2\n0 1\n1 2"), GraphFormat::EdgeList);
        assert_eq!(detect_format(None, "c hi\np edge 2 1\ne 1 2"), GraphFormat::Dimacs);
        assert_eq!(detect_format(None, "DQc"), GraphFormat::Graph6);
    }

    #[test]
    fn example1_through_all_formats() {
        let g = fixtures::example1();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..70, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 3 == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
