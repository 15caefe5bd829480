//! Plain-text file formats for instances, maps, graphs, layouts and role
//! sidecars. Encoders emit LF line endings and decimal integers; decoders
//! report 1-based line numbers.
//!
//! Long runs of equal weights or positions may be written `value*count`;
//! the encoders use this only in the `compact` variants.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Digraph, Graph, GraphError, Layout, LayoutError, RoleParseError, RoleTable, VertexRole};
use crate::sat2wpe::WpeConstruction;
use crate::wpe::{EmulationMap, End, InstanceError, Pins, WpeInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecErrorKind {
    #[error("expected header `{expected}`, found `{found}`")]
    Header { expected: &'static str, found: String },
    #[error("{0}")]
    Syntax(String),
    #[error("expected {expected} {what}, found {got}")]
    Count { what: &'static str, expected: u64, got: u64 },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Role(#[from] RoleParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct CodecError {
    pub line: usize,
    pub kind: CodecErrorKind,
}

fn err(line: usize, kind: impl Into<CodecErrorKind>) -> CodecError {
    CodecError { line, kind: kind.into() }
}

fn syntax(line: usize, msg: impl Into<String>) -> CodecError {
    err(line, CodecErrorKind::Syntax(msg.into()))
}

/// Non-blank lines with their 1-based numbers; `#` starts a comment.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn number(line: usize, tok: &str) -> Result<u64, CodecError> {
    tok.parse::<u64>().map_err(|_| syntax(line, format!("`{tok}` is not a decimal integer")))
}

/// Reads `v` or `v*count` tokens into runs.
fn runs(line: usize, toks: &[&str], out: &mut Vec<(u64, u64)>) -> Result<(), CodecError> {
    for tok in toks {
        let run = match tok.split_once('*') {
            Some((v, n)) => (number(line, v)?, number(line, n)?),
            None => (number(line, tok)?, 1),
        };
        out.push(run);
    }
    Ok(())
}

fn write_values(out: &mut String, runs: &[(u64, u64)], compact: bool) {
    let mut first = true;
    for &(v, n) in runs {
        if compact && n > 1 {
            if !first {
                out.push(' ');
            }
            write!(out, "{v}*{n}").unwrap();
            first = false;
            continue;
        }
        for _ in 0..n {
            if !first {
                out.push(' ');
            }
            write!(out, "{v}").unwrap();
            first = false;
        }
    }
    out.push('\n');
}

// ---------------------------------------------------------------------------
// weighted path emulation

pub fn encode_wpe(inst: &WpeInstance) -> String {
    encode_wpe_with(inst, false)
}

pub fn encode_wpe_compact(inst: &WpeInstance) -> String {
    encode_wpe_with(inst, true)
}

fn encode_wpe_with(inst: &WpeInstance, compact: bool) -> String {
    let mut out = format!("wpe {} {} {}\n", inst.n(), inst.m(), inst.c());
    let pins = inst.pins();
    if pins != Pins::FREE {
        let mut parts = vec!["pin".to_string()];
        if let Some(e) = pins.first {
            parts.push(format!("first={e}"));
        }
        if let Some(e) = pins.last {
            parts.push(format!("last={e}"));
        }
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    write_values(&mut out, inst.runs(), compact);
    out
}

fn parse_end(line: usize, v: &str) -> Result<End, CodecError> {
    match v {
        "1" => Ok(End::One),
        "M" => Ok(End::M),
        _ => Err(syntax(line, format!("pin end must be 1 or M, found `{v}`"))),
    }
}

pub fn decode_wpe(text: &str) -> Result<WpeInstance, CodecError> {
    let mut it = lines(text).peekable();
    let (hl, header) = it.next().ok_or_else(|| err(1, CodecErrorKind::Header { expected: "wpe", found: String::new() }))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h[0] != "wpe" {
        return Err(err(hl, CodecErrorKind::Header { expected: "wpe", found: h[0].to_string() }));
    }
    if h.len() != 4 {
        return Err(syntax(hl, "header must be `wpe N M c`"));
    }
    let (n, m, c) = (number(hl, h[1])?, number(hl, h[2])?, number(hl, h[3])?);
    let mut pins = Pins::FREE;
    if let Some(&(pl, l)) = it.peek() {
        if let Some(rest) = l.strip_prefix("pin") {
            it.next();
            for kv in rest.split_whitespace() {
                match kv.split_once('=') {
                    Some(("first", v)) if pins.first.is_none() => pins.first = Some(parse_end(pl, v)?),
                    Some(("last", v)) if pins.last.is_none() => pins.last = Some(parse_end(pl, v)?),
                    _ => return Err(syntax(pl, format!("bad pin field `{kv}`"))),
                }
            }
        }
    }
    let mut weights = Vec::new();
    let mut last = hl;
    for (ln, l) in it {
        runs(ln, &l.split_whitespace().collect::<Vec<_>>(), &mut weights)?;
        last = ln;
    }
    let got: u64 = weights.iter().map(|r| r.1).sum();
    if got != n {
        return Err(err(last, CodecErrorKind::Count { what: "weights", expected: n, got }));
    }
    WpeInstance::from_runs(weights, m, c, pins).map_err(|e| err(last, e))
}

pub fn encode_map(f: &EmulationMap) -> String {
    let mut out = String::new();
    write_values(&mut out, f.runs(), false);
    out
}

pub fn encode_map_compact(f: &EmulationMap) -> String {
    let mut out = String::new();
    write_values(&mut out, f.runs(), true);
    out
}

pub fn decode_map(text: &str) -> Result<EmulationMap, CodecError> {
    let mut f = EmulationMap::new();
    for (ln, l) in lines(text) {
        let mut rs = Vec::new();
        runs(ln, &l.split_whitespace().collect::<Vec<_>>(), &mut rs)?;
        for (p, n) in rs {
            f.push_run(p, n);
        }
    }
    Ok(f)
}

/// Sidecar listing the gadget role of every path vertex, one line per run:
/// `idx role detail` or `first-last role detail`, `-` when there is no detail.
pub fn encode_wpe_roles(con: &WpeConstruction) -> String {
    let mut out = String::new();
    let mut next = 1u64;
    for (role, count) in &con.roles {
        let detail = match (role.detail(), role.name().starts_with("var")) {
            (Some(d), true) => format!("part={d}"),
            (Some(d), false) => format!("level={d}"),
            (None, _) => "-".to_string(),
        };
        if *count == 1 {
            writeln!(out, "{next} {} {detail}", role.name()).unwrap();
        } else {
            writeln!(out, "{next}-{} {} {detail}", next + count - 1, role.name()).unwrap();
        }
        next += count;
    }
    out
}

// ---------------------------------------------------------------------------
// graphs

fn encode_pairs(kind: &str, tag: char, n: usize, pairs: &[(u32, u32)], roles: Option<&RoleTable>) -> String {
    let mut out = String::with_capacity(16 * (pairs.len() + n));
    writeln!(out, "p {kind} {n} {}", pairs.len()).unwrap();
    if let Some(roles) = roles {
        for (v, r) in roles.iter() {
            writeln!(out, "c role {} {r}", v + 1).unwrap();
        }
    }
    for &(u, v) in pairs {
        writeln!(out, "{tag} {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn encode_graph(g: &Graph, roles: Option<&RoleTable>) -> String {
    encode_pairs("edge", 'e', g.n(), g.edges(), roles)
}

pub fn encode_digraph(d: &Digraph, roles: Option<&RoleTable>) -> String {
    encode_pairs("arc", 'a', d.n(), d.arcs(), roles)
}

type Pairs = (usize, Vec<(u32, u32)>, RoleTable, usize);

fn decode_pairs(text: &str, kind: &'static str, tag: &str) -> Result<Pairs, CodecError> {
    let mut header: Option<(usize, u64)> = None;
    let mut pairs = Vec::new();
    let mut roles = RoleTable::default();
    let mut last = 1;
    for (ln, l) in lines(text) {
        last = ln;
        let t: Vec<&str> = l.split_whitespace().collect();
        match t[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(ln, "second `p` line"));
                }
                if t.len() != 4 {
                    return Err(syntax(ln, format!("header must be `p {kind} n m`")));
                }
                if t[1] != kind {
                    return Err(err(ln, CodecErrorKind::Header { expected: kind, found: t[1].to_string() }));
                }
                let n = number(ln, t[2])? as usize;
                header = Some((n, number(ln, t[3])?));
                roles = RoleTable::new(n);
                pairs.reserve(number(ln, t[3])? as usize);
            }
            "c" => {
                if t.get(1) == Some(&"role") {
                    let (n, _) = header.ok_or_else(|| syntax(ln, "role before header"))?;
                    if t.len() != 4 {
                        return Err(syntax(ln, "role line must be `c role <id> <label>`"));
                    }
                    let v = number(ln, t[2])?;
                    if v == 0 || v > n as u64 {
                        return Err(err(ln, GraphError::VertexOutOfRange { vertex: v as u32, n }));
                    }
                    let r: VertexRole = t[3].parse().map_err(|e| err(ln, CodecErrorKind::Role(e)))?;
                    roles.set(v as u32 - 1, r);
                }
            }
            x if x == tag => {
                let (n, _) = header.ok_or_else(|| syntax(ln, format!("`{tag}` line before header")))?;
                if t.len() != 3 {
                    return Err(syntax(ln, format!("expected `{tag} u v`")));
                }
                let (u, v) = (number(ln, t[1])?, number(ln, t[2])?);
                for x in [u, v] {
                    if x == 0 || x > n as u64 {
                        return Err(err(ln, GraphError::VertexOutOfRange { vertex: x as u32, n }));
                    }
                }
                pairs.push((u as u32 - 1, v as u32 - 1));
            }
            other => return Err(syntax(ln, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| err(1, CodecErrorKind::Header { expected: kind, found: String::new() }))?;
    if pairs.len() as u64 != m {
        return Err(err(last, CodecErrorKind::Count { what: "pairs", expected: m, got: pairs.len() as u64 }));
    }
    Ok((n, pairs, roles, last))
}

pub fn decode_graph(text: &str) -> Result<(Graph, RoleTable), CodecError> {
    let (n, edges, roles, last) = decode_pairs(text, "edge", "e")?;
    Ok((Graph::new(n, edges).map_err(|e| err(last, e))?, roles))
}

pub fn decode_digraph(text: &str) -> Result<(Digraph, RoleTable), CodecError> {
    let (n, arcs, roles, last) = decode_pairs(text, "arc", "a")?;
    Ok((Digraph::new(n, arcs).map_err(|e| err(last, e))?, roles))
}

/// One `l <vertex> <position>` line per vertex, in vertex order.
pub fn encode_layout(l: &Layout) -> String {
    let mut out = String::with_capacity(16 * l.len());
    for (v, p) in l.positions().iter().enumerate() {
        writeln!(out, "l {} {p}", v + 1).unwrap();
    }
    out
}

pub fn decode_layout(text: &str) -> Result<Layout, CodecError> {
    let mut entries = Vec::new();
    let mut last = 1;
    for (ln, l) in lines(text) {
        last = ln;
        let t: Vec<&str> = l.split_whitespace().collect();
        if t[0] != "l" || t.len() != 3 {
            return Err(syntax(ln, "expected `l <vertex> <position>`"));
        }
        entries.push((ln, number(ln, t[1])?, number(ln, t[2])?));
    }
    let n = entries.len();
    let mut pos = vec![0u32; n];
    for &(ln, v, p) in &entries {
        if v == 0 || v > n as u64 {
            return Err(syntax(ln, format!("vertex {v} out of range 1..{n}")));
        }
        if pos[v as usize - 1] != 0 {
            return Err(syntax(ln, format!("vertex {v} listed twice")));
        }
        pos[v as usize - 1] = p.min(u32::MAX as u64) as u32;
    }
    Layout::from_positions(pos).map_err(|e| err(last, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig() -> WpeInstance {
        WpeInstance::new(&[2, 1, 2, 1], 3, 2, Pins::FREE).unwrap()
    }

    #[test]
    fn wpe_round_trip() {
        let text = encode_wpe(&fig());
        assert_eq!(text, "wpe 4 3 2\n2 1 2 1\n");
        assert_eq!(decode_wpe(&text).unwrap(), fig());
        let pinned = fig().with_pins(Pins { first: Some(End::M), last: None });
        let text = encode_wpe(&pinned);
        assert_eq!(text, "wpe 4 3 2\npin first=M\n2 1 2 1\n");
        assert_eq!(decode_wpe(&text).unwrap(), pinned);
        let long = WpeInstance::from_runs([(1, 1000), (2, 500)], 1000, 2, Pins::FREE).unwrap();
        assert_eq!(encode_wpe_compact(&long), "wpe 1500 1000 2\n1*1000 2*500\n");
        assert_eq!(decode_wpe(&encode_wpe_compact(&long)).unwrap(), long);
        assert_eq!(decode_wpe(&encode_wpe(&long)).unwrap(), long);
    }

    #[test]
    fn wpe_rejections() {
        let e = decode_wpe("wpe 3 2 2\n1 2 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, CodecErrorKind::Instance(InstanceError::WeightSum { total: 5, expected: 4 })));
        let e = decode_wpe("wpx 1 1 1\n1\n").unwrap_err();
        assert!(matches!(e.kind, CodecErrorKind::Header { .. }));
        let e = decode_wpe("wpe 2 1 2\n\n1 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(decode_wpe("wpe 2 1 2\npin first=2\n1 1\n").is_err());
        assert!(decode_wpe("wpe 3 1 2\n1 1\n").is_err());
    }

    #[test]
    fn map_round_trip() {
        let f = EmulationMap::from_positions(&[3, 2, 1, 2]);
        assert_eq!(encode_map(&f), "3 2 1 2\n");
        assert_eq!(decode_map("3 2 1 2\n").unwrap(), f);
        assert_eq!(decode_map(&encode_map_compact(&f)).unwrap(), f);
    }

    #[test]
    fn graph_round_trip() {
        let g = Graph::path(4);
        let mut roles = RoleTable::new(4);
        roles.set(0, VertexRole::Floor(0));
        roles.set(3, VertexRole::GadgetHair(7));
        let text = encode_graph(&g, Some(&roles));
        assert!(text.starts_with("p edge 4 3\nc role 1 p0\nc role 4 y7-hair\ne 1 2\n"));
        assert_eq!(decode_graph(&text).unwrap(), (g, roles));
        let d = Digraph::new(3, vec![(0, 1), (2, 1)]).unwrap();
        let text = encode_digraph(&d, None);
        assert_eq!(decode_digraph(&text).unwrap().0, d);
        let e = decode_graph(&text).unwrap_err();
        assert!(matches!(e.kind, CodecErrorKind::Header { expected: "edge", .. }));
        assert_eq!(decode_graph("p edge 2 1\ne 1 3\n").unwrap_err().line, 2);
        assert_eq!(decode_graph("p edge 2 2\ne 1 2\n").unwrap_err().line, 2);
    }

    #[test]
    fn layout_round_trip() {
        let l = Layout::from_order(&[2, 0, 1]).unwrap();
        let text = encode_layout(&l);
        assert_eq!(text, "l 1 2\nl 2 3\nl 3 1\n");
        assert_eq!(decode_layout(&text).unwrap(), l);
        assert!(decode_layout("l 1 1\nl 1 2\n").is_err());
        assert!(decode_layout("l 1 1\nl 2 1\n").is_err());
    }
}
