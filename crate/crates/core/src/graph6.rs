//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, packed six bits per byte and
//! offset by 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
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
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn decode(s: &str) -> Result<Graph> {
    decode_bytes(s.as_bytes())
}

pub fn decode_bytes(raw: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if raw.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let mut end = raw.len();
    while end > start && (raw[end - 1] == b'\n' || raw[end - 1] == b'\r') {
        end -= 1;
    }
    let bytes = &raw[start..end];
    let digit = |i: usize| -> Result<u64> {
        match bytes.get(i) {
            None => Err(parse_err(start + i, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(&b) => Err(parse_err(start + i, format!("byte 0x{b:02x} outside graph6 range"))),
        }
    };
    if bytes.is_empty() {
        return Err(parse_err(start, "empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(parse_err(start + 1, "eight-byte size header exceeds capacity"));
        }
        let n = (digit(1)? << 12) | (digit(2)? << 6) | digit(3)?;
        (n as usize, 4)
    } else {
        (digit(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            requested: n,
            limit: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(parse_err(
            start + bytes.len().min(pos + nbytes),
            format!("expected {} bytes for n={n}, found {}", pos + nbytes, bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut cur = 0u64;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = digit(pos)?;
                pos += 1;
            }
            if (cur >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = 6 - k % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(parse_err(start + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes a newline-delimited graph6 stream, skipping blank lines.
pub fn read_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        out.push(decode(t).map_err(|e| match e {
            Error::Parse { offset, message } => parse_err(offset, format!("line {}: {message}", lineno + 1)),
            other => other,
        })?);
    }
    Ok(out)
}
