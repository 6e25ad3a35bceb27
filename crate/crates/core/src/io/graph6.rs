//! graph6 and sparse6 text encodings.
//!
//! Both pack bits into 6-bit big-endian chunks written as bytes 63..=126 and
//! start with the vertex count `N(n)`: one byte for `n <= 62`, otherwise `~`
//! followed by three bytes holding 18 bits.

use super::IoError;
use crate::graph::Graph;

const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const SPARSE6_HEADER: &[u8] = b">>sparse6<<";
const MAX_SHORT_N: usize = 62;
const MAX_MEDIUM_N: usize = 258_047;

fn trim(line: &[u8]) -> &[u8] {
    let mut end = line.len();
    while end > 0 && matches!(line[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    &line[..end]
}

fn check_chars(data: &[u8], offset: usize) -> Result<(), IoError> {
    match data.iter().position(|&b| !(63..=126).contains(&b)) {
        Some(i) => Err(IoError::BadChar {
            position: offset + i,
            byte: data[i],
        }),
        None => Ok(()),
    }
}

/// Decodes `N(n)`, returning `n` and the number of bytes consumed.
fn decode_size(data: &[u8]) -> Result<(usize, usize), IoError> {
    match data {
        [] => Err(IoError::TruncatedBits),
        [126, 126, ..] => Err(IoError::OversizeN),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(IoError::TruncatedBits);
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= MAX_SHORT_N {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= MAX_MEDIUM_N, "vertex count beyond the 4-byte header range");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

fn pack_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for i in 0..6 {
            byte = (byte << 1) | u8::from(chunk.get(i).copied().unwrap_or(false));
        }
        out.push(byte + 63);
    }
}

fn unpack_bits(data: &[u8]) -> impl Iterator<Item = bool> + '_ {
    data.iter()
        .flat_map(|&b| (0..6).rev().map(move |i| ((b - 63) >> i) & 1 == 1))
}

pub fn parse_graph6(line: &[u8]) -> Result<Graph, IoError> {
    let line = trim(line);
    let (data, offset) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, GRAPH6_HEADER.len()),
        None => (line, 0),
    };
    check_chars(data, offset)?;
    let (n, used) = decode_size(data)?;
    if n > crate::graph::MAX_VERTICES {
        return Err(IoError::OversizeN);
    }
    let body = &data[used..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if body.len() < needed {
        return Err(IoError::TruncatedBits);
    }
    if body.len() > needed {
        return Err(IoError::TrailingData);
    }
    let mut bits = unpack_bits(body);
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits.next() == Some(true) {
                pairs.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, &pairs)?)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Bits needed to write `n - 1` in binary.
fn sparse6_width(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

pub fn parse_sparse6(line: &[u8]) -> Result<Graph, IoError> {
    let line = trim(line);
    let line = line.strip_prefix(SPARSE6_HEADER).unwrap_or(line);
    let Some(data) = line.strip_prefix(b":") else {
        return Err(IoError::Malformed {
            line: 0,
            reason: "sparse6 must start with ':'".into(),
        });
    };
    let offset = line.len() - data.len();
    check_chars(data, offset)?;
    let (n, used) = decode_size(data)?;
    if n > crate::graph::MAX_VERTICES {
        return Err(IoError::OversizeN);
    }
    let k = sparse6_width(n);
    let bits: Vec<bool> = unpack_bits(&data[used..]).collect();
    let mut pos = 0;
    let mut v = 0usize;
    let mut pairs = Vec::new();
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| (acc << 1) | usize::from(bit));
        pos += 1 + k;
        if b {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            pairs.push((x, v));
        }
    }
    Ok(Graph::from_edges(n, &pairs)?)
}

pub fn encode_sparse6(g: &Graph) -> String {
    let n = g.n();
    let k = sparse6_width(n);
    let mut out = vec![b':'];
    encode_size(n, &mut out);

    let mut bits: Vec<bool> = Vec::new();
    let push_value = |bits: &mut Vec<bool>, x: usize| {
        for i in (0..k).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (b, a)).collect();
    edges.sort_unstable();
    let mut current = 0;
    for (v, u) in edges {
        if v == current {
            bits.push(false);
            push_value(&mut bits, u);
        } else if v == current + 1 {
            current = v;
            bits.push(true);
            push_value(&mut bits, u);
        } else {
            current = v;
            bits.push(true);
            push_value(&mut bits, v);
            bits.push(false);
            push_value(&mut bits, u);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    // a padding run of ones could otherwise be read back as an edge to n-1
    if k < 6 && n == (1 << k) && pad >= k && current + 1 < n {
        bits.push(false);
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(true);
    }
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("sparse6 is ASCII")
}
