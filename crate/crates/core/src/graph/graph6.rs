//! graph6 encoding.
//!
//! The order `n` is written as one byte `n+63` for `n ≤ 62`, and as `~`
//! followed by three 6-bit groups for `63 ≤ n ≤ 258047` (the eight-byte
//! form `~~` is accepted on input). The upper triangle follows in column
//! order `x(0,1), x(0,2), x(1,2), x(0,3), …`, packed big-endian into 6-bit
//! groups and zero padded; each group is emitted as `value + 63`.

use super::{check_cap, Graph};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(fmt_err(format!("byte 0x{b:02x} outside the graph6 range")))
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes {
        [] => Err(fmt_err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(fmt_err("truncated 8-byte order"));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)? as usize;
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(fmt_err("truncated 4-byte order"));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)? as usize;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(*b)? as usize, 1)),
    }
}

/// Parses one graph6 line; surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut text = text.trim();
    if let Some(rest) = text.strip_prefix(HEADER) {
        text = rest;
    }
    let bytes = text.as_bytes();
    let (n, header_len) = decode_order(bytes)?;
    check_cap(n)?;
    let body = &bytes[header_len..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() < expect {
        return Err(fmt_err(format!(
            "expected {expect} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    if body.len() > expect {
        return Err(fmt_err("trailing bytes after adjacency data"));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    // padding bits past the triangle must be clear
    if nbits % 6 != 0 {
        let last = sextet(body[expect - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(fmt_err("bit set beyond the upper triangle"));
        }
    }
    Ok(g)
}

/// Encodes `g` without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
