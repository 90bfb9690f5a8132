//! The `.sym` text format.
//!
//! ```text
//! name: fig8_tau
//! base: PD[X(5,10,6,1), ...]
//! iota: c1=c5, c2=c2, 1=9, 5=5
//! axis: fix 10, fix 5, B c2, C c3
//! ```
//!
//! Crossings are 1-based `cN`; fixed points on crossingless components are
//! written `fix O1`. Events are listed from the top of the axis downward.

use super::{AxisEvent, FixSite, OnAxisKind, SymError, SymmetricDiagram};
use crate::linkdiag::{format_pd, parse_pd};

fn parse_err(line: usize, msg: impl Into<String>) -> SymError {
    SymError::Parse { line, msg: msg.into() }
}

fn crossing_id(line: usize, s: &str) -> Result<usize, SymError> {
    let n: usize = s
        .trim()
        .strip_prefix('c')
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line, format!("expected a crossing `cN`, found `{s}`")))?;
    if n == 0 {
        return Err(parse_err(line, "crossings are numbered from 1"));
    }
    Ok(n - 1)
}

fn edge_id(line: usize, s: &str) -> Result<u32, SymError> {
    s.trim().parse().map_err(|_| parse_err(line, format!("expected an edge label, found `{s}`")))
}

fn entries(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

pub fn parse_sym(text: &str) -> Result<SymmetricDiagram, SymError> {
    let mut name = String::new();
    let mut base = None;
    let mut iota = None;
    let mut axis = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "name" => name = value.to_string(),
            "base" => {
                let d = parse_pd(value).map_err(|e| parse_err(line, e.to_string()))?;
                base = Some(d);
            }
            "iota" => iota = Some((line, value.to_string())),
            "axis" => axis = Some((line, value.to_string())),
            other => return Err(parse_err(line, format!("unknown key `{other}`"))),
        }
    }
    let base = base.ok_or_else(|| parse_err(0, "missing `base:`"))?;
    let (iline, ivalue) = iota.unwrap_or((0, String::new()));
    let mut cpairs = Vec::new();
    let mut epairs = Vec::new();
    for entry in entries(&ivalue) {
        let (a, b) = entry
            .split_once('=')
            .ok_or_else(|| parse_err(iline, format!("expected `x=y`, found `{entry}`")))?;
        if a.trim().starts_with('c') {
            cpairs.push((crossing_id(iline, a)?, crossing_id(iline, b)?));
        } else {
            epairs.push((edge_id(iline, a)?, edge_id(iline, b)?));
        }
    }
    let (aline, avalue) = axis.ok_or_else(|| parse_err(0, "missing `axis:`"))?;
    let mut events = Vec::new();
    for entry in entries(&avalue) {
        let mut words = entry.split_whitespace();
        let (kind, arg) = match (words.next(), words.next(), words.next()) {
            (Some(k), Some(a), None) => (k, a),
            _ => return Err(parse_err(aline, format!("malformed axis event `{entry}`"))),
        };
        let ev = match kind {
            "fix" => match arg.strip_prefix('O') {
                Some(k) => AxisEvent::FixedPoint(FixSite::FreeLoop(
                    k.parse().map_err(|_| parse_err(aline, format!("bad free loop `{arg}`")))?,
                )),
                None => AxisEvent::FixedPoint(FixSite::Edge(edge_id(aline, arg)?)),
            },
            "B" => AxisEvent::OnAxis { crossing: crossing_id(aline, arg)?, kind: OnAxisKind::B },
            "C" => AxisEvent::OnAxis { crossing: crossing_id(aline, arg)?, kind: OnAxisKind::C },
            other => return Err(parse_err(aline, format!("unknown axis event `{other}`"))),
        };
        events.push(ev);
    }
    SymmetricDiagram::new(name, base, &cpairs, &epairs, events)
}

pub fn format_sym(sd: &SymmetricDiagram) -> String {
    let mut iota: Vec<String> = sd.crossing_pairs().iter().map(|(a, b)| format!("c{}=c{}", a + 1, b + 1)).collect();
    iota.extend(sd.edge_pairs().iter().map(|(e, f)| format!("{e}={f}")));
    let axis: Vec<String> = sd
        .axis
        .iter()
        .map(|ev| match ev {
            AxisEvent::FixedPoint(FixSite::Edge(e)) => format!("fix {e}"),
            AxisEvent::FixedPoint(FixSite::FreeLoop(k)) => format!("fix O{k}"),
            AxisEvent::OnAxis { crossing, kind: OnAxisKind::B } => format!("B c{}", crossing + 1),
            AxisEvent::OnAxis { crossing, kind: OnAxisKind::C } => format!("C c{}", crossing + 1),
        })
        .collect();
    let mut out = String::new();
    if !sd.name.is_empty() {
        out.push_str(&format!("name: {}\n", sd.name));
    }
    out.push_str(&format!("base: {}\n", format_pd(&sd.base)));
    out.push_str(&format!("iota: {}\n", iota.join(", ")));
    out.push_str(&format!("axis: {}\n", axis.join(", ")));
    out
}
