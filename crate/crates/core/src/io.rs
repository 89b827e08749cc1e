//! File formats: the signed edge-list format (`sg` header, one `e u v +|-`
//! line per edge, `#` comments) and read-only graph6 ingestion for unsigned
//! graphs.

use crate::error::{Result, SgError};
use crate::graph::{SignedGraph, UGraph, MAX_ORDER};

/// Parse the signed edge-list format. Errors carry the 1-based line number.
pub fn parse_sg(text: &str) -> Result<SignedGraph> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize, i8)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| SgError::Parse {
            line: lineno,
            msg,
        };
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("sg") => {
                if order.is_some() {
                    return Err(err("duplicate header".into()));
                }
                let n: usize = tok
                    .next()
                    .ok_or_else(|| err("missing order after 'sg'".into()))?
                    .parse()
                    .map_err(|_| err("order is not a number".into()))?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after header".into()));
                }
                order = Some(n);
            }
            Some("e") => {
                if order.is_none() {
                    return Err(err("edge before 'sg' header".into()));
                }
                let mut field = || tok.next().ok_or_else(|| err("incomplete edge line".into()));
                let u: usize = field()?
                    .parse()
                    .map_err(|_| err("bad vertex number".into()))?;
                let v: usize = field()?
                    .parse()
                    .map_err(|_| err("bad vertex number".into()))?;
                let s = match field()? {
                    "+" => 1,
                    "-" => -1,
                    other => return Err(err(format!("bad sign token '{other}'"))),
                };
                if tok.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                edges.push((u, v, s));
            }
            Some(other) => return Err(err(format!("unknown directive '{other}'"))),
            None => unreachable!(),
        }
    }
    let order = order.ok_or(SgError::Parse {
        line: text.lines().count() + 1,
        msg: "missing 'sg <order>' header".into(),
    })?;
    SignedGraph::new(order, &edges).map_err(|e| match e {
        SgError::Parse { .. } => e,
        other => SgError::Parse {
            line: 0,
            msg: other.to_string(),
        },
    })
}

/// Serialize to the canonical text form: header, then edges sorted by (u, v).
pub fn serialize_sg(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.order());
    for (u, v, s) in g.edges() {
        let sign = if s > 0 { '+' } else { '-' };
        out.push_str(&format!("e {u} {v} {sign}\n"));
    }
    out
}

/// Parse one graph6-encoded unsigned graph (short form, n <= 62; larger
/// orders exceed the graph type's capacity anyway).
pub fn parse_graph6(text: &str) -> Result<UGraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| SgError::Parse {
        line: 1,
        msg: msg.into(),
    };
    if bytes.is_empty() {
        return Err(bad("empty graph6 input"));
    }
    if bytes[0] == b'~' {
        return Err(bad("long-form graph6 orders are not supported"));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(bad("invalid graph6 order byte"));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(SgError::OrderTooLarge(n, MAX_ORDER));
    }
    let npairs = n * (n - 1) / 2;
    let nbytes = npairs.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(bad("graph6 body has the wrong length"));
    }
    let mut bits = 0u128;
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad("invalid graph6 body byte"));
        }
        let v = (b - 63) as u128;
        for t in 0..6 {
            let idx = k * 6 + t;
            if idx < npairs && v >> (5 - t) & 1 == 1 {
                bits |= 1 << idx;
            }
        }
    }
    UGraph::from_bits(n, bits)
}

/// Encode in graph6 short form (test support for the round-trip law).
pub fn encode_graph6(g: &UGraph) -> String {
    let n = g.order();
    let npairs = n * (n - 1) / 2;
    let mut out = vec![(n as u8) + 63];
    let bits = g.bits();
    for k in 0..npairs.div_ceil(6) {
        let mut b = 0u8;
        for t in 0..6 {
            let idx = k * 6 + t;
            if idx < npairs && bits >> idx & 1 == 1 {
                b |= 1 << (5 - t);
            }
        }
        out.push(b + 63);
    }
    String::from_utf8(out).unwrap()
}
