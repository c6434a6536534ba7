//! `planar_code`: the rotation-preserving binary format used by plantri.
//!
//! Optional header `>>planar_code<<`, then per graph one byte with the
//! vertex count `n` followed, for each vertex `1..=n`, by its neighbours
//! (1-based) in rotation order and a terminating zero byte.

use std::io::{Read, Write};

use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};

pub const HEADER: &[u8] = b">>planar_code<<";

/// Appends one record for `eg` to `out`.
pub fn encode_record(eg: &EmbeddedGraph, out: &mut Vec<u8>) -> Result<()> {
    let n = eg.order();
    if n > 255 {
        return Err(Error::Encode(format!(
            "planar_code supports at most 255 vertices, got {n}"
        )));
    }
    out.push(n as u8);
    for rot in eg.rotations() {
        out.extend(rot.iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(())
}

/// Decodes one record starting at `offset`; returns the graph and the offset
/// just past the record. Offsets in errors are absolute.
pub fn decode_record(bytes: &[u8], offset: usize) -> Result<(EmbeddedGraph, usize)> {
    let err = |at: usize, message: String| Error::Parse { offset: at, message };
    let n = *bytes
        .get(offset)
        .ok_or_else(|| err(offset, "missing vertex count".into()))? as usize;
    if n == 0 {
        return Err(err(offset, "zero vertex count".into()));
    }
    let mut pos = offset + 1;
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let mut rot = Vec::new();
        loop {
            let b = *bytes
                .get(pos)
                .ok_or_else(|| err(pos, format!("truncated record in vertex {}", v + 1)))?
                as usize;
            if b == 0 {
                pos += 1;
                break;
            }
            if b > n {
                return Err(err(pos, format!("neighbour {b} exceeds vertex count {n}")));
            }
            if b - 1 == v {
                return Err(err(pos, format!("self-loop at vertex {b}")));
            }
            if rot.contains(&(b - 1)) {
                return Err(err(pos, format!("repeated neighbour {b} at vertex {}", v + 1)));
            }
            rot.push(b - 1);
            pos += 1;
        }
        rotation.push(rot);
    }
    for (v, rot) in rotation.iter().enumerate() {
        for &w in rot {
            if !rotation[w].contains(&v) {
                return Err(err(
                    offset,
                    format!("asymmetric adjacency: {} lists {} but not conversely", v + 1, w + 1),
                ));
            }
        }
    }
    let eg = EmbeddedGraph::from_rotation(rotation).map_err(|e| err(offset, e.to_string()))?;
    Ok((eg, pos))
}

/// Encodes a stream with header. Returns the number of bytes produced.
pub fn encode<'a, I>(graphs: I) -> Result<Vec<u8>>
where
    I: IntoIterator<Item = &'a EmbeddedGraph>,
{
    let mut out = HEADER.to_vec();
    for g in graphs {
        encode_record(g, &mut out)?;
    }
    Ok(out)
}

pub fn write_planar_code<'a, I, W>(graphs: I, mut dest: W) -> Result<usize>
where
    I: IntoIterator<Item = &'a EmbeddedGraph>,
    W: Write,
{
    let bytes = encode(graphs)?;
    dest.write_all(&bytes).map_err(|e| Error::Io {
        path: "<planar_code output>".into(),
        message: e.to_string(),
    })?;
    Ok(bytes.len())
}

/// Decodes a whole buffer; the header is optional.
pub fn decode(bytes: &[u8]) -> Result<Vec<EmbeddedGraph>> {
    let mut pos = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut out = Vec::new();
    while pos < bytes.len() {
        let (g, next) = decode_record(bytes, pos)?;
        out.push(g);
        pos = next;
    }
    Ok(out)
}

pub fn read_planar_code<R: Read>(mut source: R) -> Result<Vec<EmbeddedGraph>> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes).map_err(|e| Error::Io {
        path: "<planar_code input>".into(),
        message: e.to_string(),
    })?;
    decode(&bytes)
}
