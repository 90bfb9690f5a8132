//! Non-sliceness from quotient knots that are known not to be slice downstairs.

use serde::Serialize;

use super::{CertifyError, Conclusion, Verdict};
use crate::invariants::{goeritz, jones};
use crate::plumbing::{AmbientDescriptor, QuotientTag};
use crate::symdiag::{quotient, HalfAxis};
use crate::{Laurent, SymmetricDiagram};

/// Knots not slice in CP2, one per line: `name | jones | det | citation`.
pub const DEFAULT_DATABASE: &str = include_str!("../../corpus/nonslice_cp2.db");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DatabaseEntry {
    pub name: String,
    #[serde(serialize_with = "crate::serde_display")]
    pub jones: Laurent,
    pub determinant: u64,
    pub citation: String,
}

pub fn parse_database(text: &str) -> Result<Vec<DatabaseEntry>, CertifyError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |msg: String| CertifyError::Database { line: i + 1, msg };
        let fields: Vec<&str> = body.split('|').map(str::trim).collect();
        let [name, poly, det, citation] = fields.as_slice() else {
            return Err(err(format!("expected 4 fields, found {}", fields.len())));
        };
        out.push(DatabaseEntry {
            name: name.to_string(),
            jones: poly.parse().map_err(|e| err(format!("{e}")))?,
            determinant: det.parse().map_err(|_| err(format!("bad determinant {det:?}")))?,
            citation: citation.to_string(),
        });
    }
    Ok(out)
}

/// Why a quotient rules out sliceness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    #[serde(serialize_with = "crate::serde_display")]
    pub half_axis: HalfAxis,
    /// The quotient's Jones polynomial as computed, before any mirroring.
    #[serde(serialize_with = "crate::serde_display")]
    pub quotient_jones: Laurent,
    pub quotient_determinant: u64,
    /// Set when the quotient was mirrored to compare against a CP2 entry.
    pub mirrored: bool,
    pub entry: DatabaseEntry,
}

fn no_obstruction(ambient: &AmbientDescriptor, reason: String) -> Verdict {
    Verdict::new(Conclusion::Inconclusive(reason), ambient)
}

/// Compares both quotients against `db`. CP2-bar quotients are mirrored
/// first, since a knot is slice in CP2-bar exactly when its mirror is slice
/// in CP2.
pub fn quotient_obstruction_with(
    sd: &SymmetricDiagram,
    ambient: &AmbientDescriptor,
    db: &[DatabaseEntry],
) -> Result<Verdict, CertifyError> {
    let mirror = match ambient.quotient {
        QuotientTag::Cp2 => false,
        QuotientTag::Cp2Bar => true,
        tag => return Ok(no_obstruction(ambient, format!("no obstruction data for quotient {tag}"))),
    };
    if !ambient.fixed_surface.iter().any(|s| s.genus == 0) {
        return Ok(no_obstruction(ambient, "fixed surface has no sphere component".into()));
    }
    for half_axis in [HalfAxis::H1, HalfAxis::H2] {
        let q = quotient(sd, half_axis)?;
        let quotient_jones = jones(&q)?;
        let (quotient_determinant, _) = goeritz(&q);
        let key = if mirror { quotient_jones.invert() } else { quotient_jones.clone() };
        if let Some(entry) = db.iter().find(|e| e.jones == key && e.determinant == quotient_determinant) {
            let ob = Obstruction { half_axis, quotient_jones, quotient_determinant, mirrored: mirror, entry: entry.clone() };
            return Ok(Verdict::new(Conclusion::NotSlice(ob), ambient));
        }
    }
    Ok(no_obstruction(ambient, "neither quotient matches the database".into()))
}

/// [`quotient_obstruction_with`] against the bundled database.
pub fn quotient_obstruction(sd: &SymmetricDiagram, ambient: &AmbientDescriptor) -> Result<Verdict, CertifyError> {
    let db = parse_database(DEFAULT_DATABASE).expect("bundled database parses");
    quotient_obstruction_with(sd, ambient, &db)
}
