//! Text and DOT forms of plumbings.
//!
//! ```text
//! name: s2xs2_tau1
//! ambient: s2xs2_tau1
//! sphere 1 0 S2x{pt}
//! sphere 2 0 {pt}xS2
//! point 1 2 B+
//! sigma 1 2
//! ```
//!
//! `sphere N FRAMING [NAME]`; spheres missing from `sigma` lines are fixed.

use std::fmt::Write as _;

use super::{ambient, PlumbingError, PlumbingPoint, PlumbingTree, Sphere};

pub fn parse_plumbing(text: &str) -> Result<PlumbingTree, PlumbingError> {
    let mut name = String::from("plumbing");
    let mut tag = None;
    let mut spheres: Vec<(usize, Sphere)> = Vec::new();
    let mut points = Vec::new();
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| PlumbingError::Parse { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("name:") {
            name = rest.trim().to_string();
            continue;
        }
        if let Some(rest) = body.strip_prefix("ambient:") {
            let t = rest.trim();
            tag = Some(ambient(t).ok_or_else(|| PlumbingError::UnknownAmbient(t.to_string()))?);
            continue;
        }
        let words: Vec<&str> = body.split_whitespace().collect();
        let id = |s: &str| match s.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(err(format!("bad sphere {s:?}"))),
        };
        match words.as_slice() {
            ["sphere", n, framing, rest @ ..] => {
                let framing = framing.parse().map_err(|_| err(format!("bad framing {framing:?}")))?;
                let label = if rest.is_empty() { format!("S{n}") } else { rest.join(" ") };
                spheres.push((id(n)?, Sphere { name: label, framing }));
            }
            ["point", a, b, kind] => {
                let kind = kind.parse().map_err(|e| err(format!("{e}")))?;
                points.push(PlumbingPoint { a: id(a)?, b: id(b)?, kind });
            }
            ["sigma", a, b] => pairs.push((id(a)?, id(b)?, line)),
            _ => return Err(err(format!("cannot read {body:?}"))),
        }
    }
    spheres.sort_by_key(|(i, _)| *i);
    if spheres.iter().enumerate().any(|(k, (i, _))| k != *i) {
        return Err(PlumbingError::Parse { line: 0, msg: "spheres must be numbered 1..=n without repeats".into() });
    }
    let n = spheres.len();
    let mut sigma: Vec<usize> = (0..n).collect();
    for (a, b, line) in pairs {
        if a >= n || b >= n {
            return Err(PlumbingError::Parse { line, msg: "sigma names an unknown sphere".into() });
        }
        sigma[a] = b;
        sigma[b] = a;
    }
    let ambient = tag.ok_or(PlumbingError::Parse { line: 0, msg: "missing ambient".into() })?;
    Ok(PlumbingTree { name, spheres: spheres.into_iter().map(|(_, s)| s).collect(), points, sigma, ambient })
}

pub fn format_plumbing(pt: &PlumbingTree) -> String {
    let mut out = format!("name: {}\nambient: {}\n", pt.name, pt.ambient.tag);
    for (i, s) in pt.spheres.iter().enumerate() {
        let _ = writeln!(out, "sphere {} {} {}", i + 1, s.framing, s.name);
    }
    for p in &pt.points {
        let _ = writeln!(out, "point {} {} {}", p.a + 1, p.b + 1, p.kind);
    }
    for (i, &s) in pt.sigma.iter().enumerate() {
        if i < s {
            let _ = writeln!(out, "sigma {} {}", i + 1, s + 1);
        }
    }
    out
}

/// Graphviz form: spheres are nodes, points are edges labelled by type,
/// the fixed point is drawn red and sigma pairs dashed.
pub fn plumbing_to_dot(pt: &PlumbingTree) -> String {
    let rho = pt.point_involution();
    let mut out = format!("graph \"{}\" {{\n", pt.name);
    for (i, s) in pt.spheres.iter().enumerate() {
        let _ = writeln!(out, "  s{} [label=\"{} ({})\"];", i + 1, s.name, s.framing);
    }
    for (i, p) in pt.points.iter().enumerate() {
        let fixed = rho.as_ref().is_some_and(|r| r[i] == i);
        let color = if fixed { ", color=red, penwidth=2" } else { "" };
        let _ = writeln!(out, "  s{} -- s{} [label=\"{}\"{color}];", p.a + 1, p.b + 1, p.kind);
    }
    for (i, &s) in pt.sigma.iter().enumerate() {
        if i < s {
            let _ = writeln!(out, "  s{} -- s{} [style=dashed, constraint=false];", i + 1, s + 1);
        }
    }
    out.push_str("}\n");
    out
}
