//! graph6 / digraph6 (as distributed with nauty), plain edge lists and DOT.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Digraph6,
    EdgeList,
    Dot,
}

/// A serialized graph together with its format tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphText {
    pub format: GraphFormat,
    pub payload: Vec<u8>,
}

/// Guesses the format of one line: a leading `&` means digraph6, a line made
/// only of bytes 63..=126 is graph6, anything else is an edge list. The
/// optional `>>graph6<<` / `>>digraph6<<` headers are recognized.
pub fn detect_format(line: &[u8]) -> GraphFormat {
    let line = trim(line);
    if line.starts_with(b">>digraph6<<") {
        return GraphFormat::Digraph6;
    }
    let line = line.strip_prefix(b">>graph6<<").unwrap_or(line);
    if line.first() == Some(&b'&') {
        GraphFormat::Digraph6
    } else if !line.is_empty() && line.iter().all(|b| (63..=126).contains(b)) {
        GraphFormat::Graph6
    } else {
        GraphFormat::EdgeList
    }
}

fn trim(s: &[u8]) -> &[u8] {
    let start = s.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(s.len());
    let end = s.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(start, |e| e + 1);
    &s[start..end]
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

fn write_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Reads N(n) starting at `pos`; returns (n, next position).
fn read_size(text: &[u8], pos: usize) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<usize> {
        let b = *text.get(i).ok_or_else(|| parse_err(i, "truncated size field"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b} outside 63..=126")));
        }
        Ok((b - 63) as usize)
    };
    let first = byte(pos)?;
    if first < 63 {
        return Ok((first, pos + 1));
    }
    if byte(pos + 1)? < 63 {
        let n = (0..3).try_fold(0usize, |acc, i| Ok::<_, Error>((acc << 6) | byte(pos + 1 + i)?))?;
        return Ok((n, pos + 4));
    }
    let n = (0..6).try_fold(0usize, |acc, i| Ok::<_, Error>((acc << 6) | byte(pos + 2 + i)?))?;
    Ok((n, pos + 8))
}

fn pack_bits(out: &mut Vec<u8>, bits: impl Iterator<Item = bool>) {
    let mut acc = 0u8;
    let mut k = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        k += 1;
        if k == 6 {
            out.push(acc + 63);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
}

/// Unpacks exactly `count` bits from `text[pos..]`; rejects trailing bytes.
fn unpack_bits(text: &[u8], pos: usize, count: usize) -> Result<Vec<bool>> {
    let need = count.div_ceil(6);
    let body = &text[pos..];
    if body.len() < need {
        return Err(parse_err(text.len(), format!("truncated bit vector: need {need} bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(parse_err(pos + need, format!("{} unexpected trailing bytes (n mismatch)", body.len() - need)));
    }
    let mut bits = Vec::with_capacity(need * 6);
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(pos + i, format!("byte {b} outside 63..=126")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|s| (v >> s) & 1 == 1));
    }
    bits.truncate(count);
    Ok(bits)
}

/// graph6: N(n) followed by the upper triangle in column-major order
/// (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, offset 63.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    write_size(&mut out, n);
    pack_bits(&mut out, (1..n).flat_map(|j| (0..j).map(move |i| g.has_edge(i, j))));
    out
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = trim(text);
    let text = text.strip_prefix(b">>graph6<<").unwrap_or(text);
    let (n, pos) = read_size(text, 0)?;
    let bits = unpack_bits(text, pos, n * n.saturating_sub(1) / 2)?;
    let mut g = Graph::new(n);
    let mut it = bits.into_iter();
    for j in 1..n {
        for i in 0..j {
            if it.next() == Some(true) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// digraph6: `&`, N(n), then the full adjacency matrix row by row.
pub fn write_digraph6(d: &Digraph) -> Vec<u8> {
    let n = d.order();
    let mut out = vec![b'&'];
    write_size(&mut out, n);
    pack_bits(&mut out, (0..n).flat_map(|i| (0..n).map(move |j| d.has_arc(i, j))));
    out
}

pub fn parse_digraph6(text: &[u8]) -> Result<Digraph> {
    let text = trim(text);
    let text = text.strip_prefix(b">>digraph6<<").unwrap_or(text);
    if text.first() != Some(&b'&') {
        return Err(parse_err(0, "missing '&' header"));
    }
    let (n, pos) = read_size(text, 1)?;
    let bits = unpack_bits(text, pos, n * n)?;
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return Err(parse_err(pos + (i * n + j) / 6, format!("loop at vertex {i}")));
                }
                d.add_arc(i, j);
            }
        }
    }
    Ok(d)
}

/// Parses `u v` lines with an optional `n=<k>` header. `#` starts a comment.
fn parse_pairs(text: &str, directed: bool, strict: bool) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut declared: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("n=") {
            let n = rest.trim().parse::<usize>().map_err(|_| parse_err(start, format!("bad order header {body:?}")))?;
            declared = Some(n);
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(start, format!("expected two labels, found {:?}", body)));
        }
        let label = |s: &str| -> Result<usize> {
            if s.starts_with('-') {
                return Err(parse_err(start, format!("negative label {s}")));
            }
            s.parse::<usize>().map_err(|_| parse_err(start, format!("bad label {s:?}")))
        };
        let (u, v) = (label(fields[0])?, label(fields[1])?);
        if u == v {
            return Err(parse_err(start, format!("self-loop at {u}")));
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            if strict {
                return Err(parse_err(start, format!("duplicate edge {u} {v}")));
            }
            continue;
        }
        pairs.push((u, v));
    }
    let needed = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < needed => return Err(parse_err(0, format!("header n={n} but label {} used", needed - 1))),
        Some(n) => n,
        None => needed,
    };
    Ok((n, pairs))
}

pub fn parse_edge_list(text: &str, strict: bool) -> Result<Graph> {
    let (n, pairs) = parse_pairs(text, false, strict)?;
    Ok(Graph::from_edges(n, pairs))
}

pub fn parse_arc_list(text: &str, strict: bool) -> Result<Digraph> {
    let (n, pairs) = parse_pairs(text, true, strict)?;
    Ok(Digraph::from_arcs(n, pairs))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_arc_list(d: &Digraph) -> String {
    let mut s = format!("n={}\n", d.order());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

pub fn write_dot_digraph(d: &Digraph) -> String {
    let mut s = String::from("digraph D {\n");
    for v in 0..d.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "  {u} -> {v};");
    }
    s.push_str("}\n");
    s
}
