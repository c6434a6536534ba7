//! graph6 for orders up to 62: one order byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), ...`, six bits per byte (most significant first), each `+ 63`.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Encode(format!("graph6 order {n} exceeds {MAX_ORDER}")));
    }
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.into(),
    };
    let first = *bytes.first().ok_or_else(|| err(0, "empty graph6 line"))?;
    if !(63..=63 + MAX_ORDER as u8).contains(&first) {
        return Err(err(0, "unsupported graph6 order byte"));
    }
    let n = (first - 63) as usize;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != 1 + needed {
        return Err(err(bytes.len().min(1 + needed), "graph6 length does not match order"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = bytes[1 + k / 6];
            if !(63..=126).contains(&b) {
                return Err(err(1 + k / 6, "byte outside graph6 range"));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Writes one graph per line; returns the line count.
pub fn write_graph6<'a, I, W>(graphs: I, mut dest: W) -> Result<usize>
where
    I: IntoIterator<Item = &'a Graph>,
    W: Write,
{
    let mut lines = 0;
    for g in graphs {
        let line = encode_graph6(g)?;
        writeln!(dest, "{line}").map_err(|e| Error::Io {
            path: "<graph6 output>".into(),
            message: e.to_string(),
        })?;
        lines += 1;
    }
    Ok(lines)
}

pub fn read_graph6<R: BufRead>(source: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for line in source.lines() {
        let line = line.map_err(|e| Error::Io {
            path: "<graph6 input>".into(),
            message: e.to_string(),
        })?;
        if !line.trim().is_empty() {
            out.push(decode_graph6(&line)?);
        }
    }
    Ok(out)
}
