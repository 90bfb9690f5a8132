//! Named ambient manifolds and their symmetric plumbings.

use std::fmt;

use serde::Serialize;

use super::{PlumbingError, PlumbingPoint, PlumbingTree, Sphere};
use crate::IntersectionType;

/// The quotient of the ambient manifold by its involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientTag {
    #[serde(rename = "CP2")]
    Cp2,
    /// CP2 with the opposite orientation.
    #[serde(rename = "CP2-bar")]
    Cp2Bar,
    S4,
    Unknown,
}

impl fmt::Display for QuotientTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientTag::Cp2 => "CP2",
            QuotientTag::Cp2Bar => "CP2-bar",
            QuotientTag::S4 => "S4",
            QuotientTag::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceComponent {
    pub name: String,
    pub genus: u32,
    /// False when the component is recorded without a source.
    pub verified: bool,
}

/// A symbolic record of a manifold with involution. Nothing here is
/// modelled geometrically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientDescriptor {
    pub tag: String,
    pub manifold: String,
    pub involution: String,
    pub fixed_surface: Vec<SurfaceComponent>,
    pub quotient: QuotientTag,
}

pub const AMBIENT_TAGS: [&str; 4] = ["s2xs2_tau1", "s2xs2_tau2", "three_s2xs2", "s4"];

fn sphere_fixed(verified: bool) -> Vec<SurfaceComponent> {
    vec![SurfaceComponent { name: "S2".into(), genus: 0, verified }]
}

pub fn ambient(tag: &str) -> Option<AmbientDescriptor> {
    let (manifold, involution, fixed_surface, quotient) = match tag {
        "s2xs2_tau1" => ("S2xS2", "swap of factors", sphere_fixed(true), QuotientTag::Cp2),
        "s2xs2_tau2" => ("S2xS2", "swap composed with reflection", sphere_fixed(false), QuotientTag::Cp2Bar),
        "three_s2xs2" => ("#3(S2xS2)", "symmetric Kirby diagram involution", sphere_fixed(true), QuotientTag::Unknown),
        "s4" => ("S4", "rotation", sphere_fixed(true), QuotientTag::S4),
        _ => return None,
    };
    Some(AmbientDescriptor {
        tag: tag.to_string(),
        manifold: manifold.to_string(),
        involution: involution.to_string(),
        fixed_surface,
        quotient,
    })
}

impl AmbientDescriptor {
    /// The builtin simple symmetric plumbings this manifold contains.
    pub fn plumbings(&self) -> Vec<PlumbingTree> {
        let spec = match self.tag.as_str() {
            "s2xs2_tau1" => "s2xs2_tau1",
            "s2xs2_tau2" => "s2xs2_tau2",
            "three_s2xs2" => "three_s2xs2(2)",
            _ => return Vec::new(),
        };
        vec![builtin(spec).expect("table entries are builtins")]
    }
}

fn zero(name: String) -> Sphere {
    Sphere { name, framing: 0 }
}

fn pair_of_factors(tag: &str, kind: IntersectionType) -> PlumbingTree {
    PlumbingTree {
        name: tag.to_string(),
        spheres: vec![zero("S2x{pt}".into()), zero("{pt}xS2".into())],
        points: vec![PlumbingPoint { a: 0, b: 1, kind }],
        sigma: vec![1, 0],
        ambient: ambient(tag).expect("tag in table"),
    }
}

/// Spheres 1 and 2 meet at the fixed C point and are each preserved.
/// Spheres `L_i` form a chain hanging off sphere 1, `R_i` its image.
fn three_s2xs2(n: usize) -> PlumbingTree {
    let mut spheres = vec![zero("F1".into()), zero("F2".into())];
    let mut points = vec![PlumbingPoint { a: 0, b: 1, kind: IntersectionType::C }];
    let mut sigma = vec![0, 1];
    let (mut prev_l, mut prev_r) = (0, 0);
    for i in 1..=n {
        let l = spheres.len();
        spheres.push(zero(format!("L{i}")));
        spheres.push(zero(format!("R{i}")));
        sigma.extend([l + 1, l]);
        points.push(PlumbingPoint { a: prev_l, b: l, kind: IntersectionType::A });
        points.push(PlumbingPoint { a: prev_r, b: l + 1, kind: IntersectionType::A });
        (prev_l, prev_r) = (l, l + 1);
    }
    PlumbingTree {
        name: format!("three_s2xs2({n})"),
        spheres,
        points,
        sigma,
        ambient: ambient("three_s2xs2").expect("tag in table"),
    }
}

/// `s2xs2_tau1`, `s2xs2_tau2`, or `three_s2xs2(n)` with `n >= 1`.
pub fn builtin(spec: &str) -> Result<PlumbingTree, PlumbingError> {
    let spec = spec.trim();
    match spec {
        "s2xs2_tau1" => return Ok(pair_of_factors(spec, IntersectionType::BPlus)),
        "s2xs2_tau2" => return Ok(pair_of_factors(spec, IntersectionType::BMinus)),
        _ => {}
    }
    let n = spec
        .strip_prefix("three_s2xs2(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|r| r.trim().parse::<usize>().ok())
        .ok_or_else(|| PlumbingError::UnknownBuiltin(spec.to_string()))?;
    if n == 0 {
        return Err(PlumbingError::BadParameter { name: "three_s2xs2".into(), n });
    }
    Ok(three_s2xs2(n))
}
