//! Canonical text format.
//!
//! ```text
//! # comment
//! minecc <n> <m> <k> [unweighted]
//! <color> [<weight>] <node> <node> ...
//! ```
//!
//! Nodes are 1-based. The weight column is absent iff the header carries the
//! `unweighted` flag, in which case every weight is 1.

use std::fmt::{self, Write as _};
use std::io::BufRead;

use super::{Color, ColoredHypergraph, HyperEdge, NodeId, Weight};
use crate::error::{Error, Result};

struct Header {
    nodes: usize,
    edges: usize,
    colors: Color,
    unweighted: bool,
}

fn parse_header(line: usize, text: &str) -> Result<Header> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.first() != Some(&"minecc") {
        return Err(Error::parse(line, "malformed header: expected `minecc <n> <m> <k>`"));
    }
    let unweighted = match tokens.len() {
        4 => false,
        5 if tokens[4] == "unweighted" => true,
        _ => {
            return Err(Error::parse(
                line,
                "malformed header: expected `minecc <n> <m> <k> [unweighted]`",
            ))
        }
    };
    let count = |tok: &str, what: &str| {
        tok.parse::<usize>()
            .map_err(|_| Error::parse(line, format!("malformed header: bad {what} `{tok}`")))
    };
    let colors = count(tokens[3], "color count")?;
    Ok(Header {
        nodes: count(tokens[1], "node count")?,
        edges: count(tokens[2], "edge count")?,
        colors: Color::try_from(colors)
            .map_err(|_| Error::parse(line, "malformed header: color count too large"))?,
        unweighted,
    })
}

fn parse_edge(line: usize, text: &str, header: &Header, label: usize) -> Result<HyperEdge> {
    let mut tokens = text.split_whitespace();
    let color_tok = tokens.next().ok_or_else(|| Error::parse(line, "empty edge line"))?;
    let color: Color = color_tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad color `{color_tok}`")))?;
    if color == 0 || color > header.colors {
        return Err(Error::parse(
            line,
            format!("color out of range: {color} not in 1..={}", header.colors),
        ));
    }

    let weight: Weight = if header.unweighted {
        1
    } else {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::parse(line, "missing weight"))?;
        if tok.starts_with('-') {
            return Err(Error::parse(line, format!("negative weight `{tok}`")));
        }
        tok.parse()
            .map_err(|_| Error::parse(line, format!("bad weight `{tok}`")))?
    };

    let mut nodes: Vec<NodeId> = Vec::new();
    for tok in tokens {
        let id: i64 = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("bad node id `{tok}`")))?;
        if id < 1 || id as u64 > header.nodes as u64 {
            return Err(Error::parse(
                line,
                format!("node out of range: {id} not in 1..={}", header.nodes),
            ));
        }
        nodes.push(id as usize - 1);
    }
    if nodes.is_empty() {
        return Err(Error::parse(line, "edge has no nodes"));
    }
    nodes.sort_unstable();
    if let Some(w) = nodes.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::parse(line, format!("repeated node {} in edge", w[0] + 1)));
    }
    Ok(HyperEdge {
        label,
        color,
        weight,
        nodes,
    })
}

/// Reads an instance in the canonical format.
pub fn parse_hypergraph<R: BufRead>(reader: R) -> Result<ColoredHypergraph> {
    let mut header: Option<Header> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.map_err(|e| Error::parse(lineno, format!("read error: {e}")))?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match &header {
            None => header = Some(parse_header(lineno, text)?),
            Some(h) => {
                if edges.len() == h.edges {
                    return Err(Error::parse(
                        lineno,
                        format!("more edge lines than the {} declared", h.edges),
                    ));
                }
                edges.push(parse_edge(lineno, text, h, edges.len() + 1)?);
            }
        }
    }
    let header = header.ok_or_else(|| Error::parse(last_line.max(1), "missing header"))?;
    if edges.len() != header.edges {
        return Err(Error::parse(
            last_line.max(1),
            format!("expected {} edge lines, found {}", header.edges, edges.len()),
        ));
    }
    ColoredHypergraph::from_validated(header.nodes, header.colors, edges, header.unweighted)
}

pub fn parse_hypergraph_str(text: &str) -> Result<ColoredHypergraph> {
    parse_hypergraph(text.as_bytes())
}

impl ColoredHypergraph {
    /// Serializes in canonical form: edges in `(color, label)` order.
    ///
    /// The weight column is omitted only for instances read as `unweighted`
    /// whose weights are still all 1.
    pub fn to_canonical_string(&self) -> String {
        let unweighted = self.unweighted && self.edges.iter().all(|e| e.weight == 1);
        let mut out = String::new();
        write!(
            out,
            "minecc {} {} {}",
            self.node_count,
            self.edges.len(),
            self.color_count
        )
        .unwrap();
        if unweighted {
            out.push_str(" unweighted");
        }
        out.push('\n');
        for e in &self.edges {
            write!(out, "{}", e.color).unwrap();
            if !unweighted {
                write!(out, " {}", e.weight).unwrap();
            }
            for &u in &e.nodes {
                write!(out, " {}", u + 1).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ColoredHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}
