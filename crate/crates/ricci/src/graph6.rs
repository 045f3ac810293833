//! The graph6 text encoding.

use ricci_core::{Graph, GraphError, WeightScheme};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(&'static str),
    #[error("graph6 data ends after {got} of {need} bytes")]
    TruncatedBits { need: usize, got: usize },
    #[error("byte {0:#04x} outside the printable graph6 range")]
    InvalidByte(u8),
    #[error("{0} unexpected trailing bytes")]
    TrailingBytes(usize),
    #[error("graph: {0}")]
    Graph(GraphError),
}

const HEADER: &str = ">>graph6<<";

fn sixes(bytes: &[u8]) -> Result<Vec<u8>, Graph6Error> {
    bytes.iter().map(|&b| if (63..=126).contains(&b) { Ok(b - 63) } else { Err(Graph6Error::InvalidByte(b)) }).collect()
}

/// Decodes one graph6 line into a vertex count and an edge list.
pub fn decode(text: &str) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader("empty input"));
    }
    let (n, rest) = match bytes[0] {
        126 if bytes.get(1) == Some(&126) => {
            if bytes.len() < 8 {
                return Err(Graph6Error::MalformedHeader("short 8-byte size field"));
            }
            let n = sixes(&bytes[2..8])?.iter().fold(0usize, |acc, &d| acc << 6 | d as usize);
            (n, &bytes[8..])
        }
        126 => {
            if bytes.len() < 4 {
                return Err(Graph6Error::MalformedHeader("short 4-byte size field"));
            }
            let n = sixes(&bytes[1..4])?.iter().fold(0usize, |acc, &d| acc << 6 | d as usize);
            (n, &bytes[4..])
        }
        b @ 63..=125 => ((b - 63) as usize, &bytes[1..]),
        _ => return Err(Graph6Error::MalformedHeader("size byte out of range")),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() < need {
        return Err(Graph6Error::TruncatedBits { need, got: rest.len() });
    }
    if rest.len() > need {
        return Err(Graph6Error::TrailingBytes(rest.len() - need));
    }
    let data = sixes(rest)?;
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

/// Encodes a vertex count and edge list as one graph6 line, without newline.
pub fn encode(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(a, b) in edges {
        let (i, j) = (a.min(b), a.max(b));
        let k = j * (j - 1) / 2 + i;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|d| d + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn parse_graph6(text: &str, scheme: WeightScheme) -> Result<Graph, Graph6Error> {
    let (n, edges) = decode(text)?;
    Graph::from_edges(n, &edges, scheme).map_err(Graph6Error::Graph)
}

pub fn emit_graph6(g: &Graph) -> String {
    encode(g.n(), &g.edges())
}
