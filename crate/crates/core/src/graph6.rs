//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use crate::error::GraphError;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_bits(&mut out, n as u64, 18);
    } else {
        out.push(126);
        out.push(126);
        push_bits(&mut out, n as u64, 36);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_bits(out: &mut Vec<u8>, value: u64, bits: u32) {
    let mut shift = bits;
    while shift > 0 {
        shift -= 6;
        out.push(((value >> shift) & 0x3f) as u8 + 63);
    }
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty string".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("byte {bad} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(GraphError::Graph6("truncated size header".into()));
        }
        (read_bits(&bytes[1..4]) as usize, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::Graph6("truncated size header".into()));
        }
        let n = read_bits(&bytes[2..8]);
        if n as usize > MAX_ORDER {
            return Err(GraphError::Graph6(format!("unsupported order {n}")));
        }
        (n as usize, &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} adjacency bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let pad = 6 - pairs % 6;
        if (body[body.len() - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::new(n, &edges)
}

fn read_bits(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63))
}
