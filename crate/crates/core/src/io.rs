//! graph6 text encoding and Graphviz DOT export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

/// graph6 encoding: size prefix, then the upper triangle in column order
/// (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) packed six bits per byte.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + BIAS) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + BIAS) as char);
    }
    out
}

fn decode_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(decode_error(base + i, format!("byte 0x{b:02x} outside 63..=126")));
        }
    }
    let six = |i: usize| (bytes[i] - BIAS) as usize;
    let (n, mut pos) = match bytes {
        [] => return Err(decode_error(base, "empty input")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(decode_error(base + bytes.len(), "truncated size field"));
            }
            ((2..8).fold(0, |acc, i| (acc << 6) | six(i)), 8)
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(decode_error(base + bytes.len(), "truncated size field"));
            }
            ((1..4).fold(0, |acc, i| (acc << 6) | six(i)), 4)
        }
        _ => (six(0), 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        let offset = base + bytes.len().min(expected);
        return Err(decode_error(
            offset,
            format!("expected {expected} bytes for n={n}, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(pos + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    if bits % 6 != 0 {
        let pad = six(pos - 1) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(decode_error(base + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Undirected DOT; when `highlight` is a cycle its edges are drawn red.
pub fn dot_export(g: &Graph, highlight: Option<&[usize]>) -> String {
    let mut cycle_edges = Vec::new();
    if let Some(cycle) = highlight {
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            cycle_edges.push((u.min(v), u.max(v)));
        }
        cycle_edges.sort_unstable();
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        if cycle_edges.binary_search(&(u, v)).is_ok() {
            writeln!(out, "  {u} -- {v} [color=red, penwidth=2];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
