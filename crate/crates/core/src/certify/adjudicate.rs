//! The full pipeline: obstruction and certificate search side by side.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use super::{check_theorem, disk_from_sequence, quotient_obstruction, Certificate, Convention, Obstruction};
use crate::invariants::{try_unknot, InvariantError, UnknotStatus, DEFAULT_BUDGET};
use crate::plumbing::AmbientDescriptor;
use crate::symdiag::{equivariant_unknotting_search, SearchOutcome, SymError};
use crate::{IntersectionType, SymmetricDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("database line {line}: {msg}")]
    Database { line: usize, msg: String },
    #[error("soundness conflict: certificate against {plumbing} but quotient matches {entry}")]
    Conflict { plumbing: String, entry: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum Conclusion {
    Slice(Box<Certificate>),
    NotSlice(Obstruction),
    Inconclusive(String),
}

impl Conclusion {
    pub fn label(&self) -> &'static str {
        match self {
            Conclusion::Slice(_) => "slice",
            Conclusion::NotSlice(_) => "not-slice",
            Conclusion::Inconclusive(_) => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub ambient: String,
    pub quotient: String,
    pub sigma_component: String,
}

impl Verdict {
    pub fn new(conclusion: Conclusion, ambient: &AmbientDescriptor) -> Self {
        let sigma = ambient.fixed_surface.iter().find(|s| s.genus == 0).or(ambient.fixed_surface.first());
        Self {
            conclusion,
            ambient: ambient.tag.clone(),
            quotient: ambient.quotient.to_string(),
            sigma_component: sigma.map_or_else(|| "none".to_string(), |s| s.name.clone()),
        }
    }

    pub fn is_slice(&self) -> bool {
        matches!(self.conclusion, Conclusion::Slice(_))
    }

    pub fn is_not_slice(&self) -> bool {
        matches!(self.conclusion, Conclusion::NotSlice(_))
    }

    /// `key: value` lines in a fixed order, then the transcript.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "conclusion: {}\nambient: {}\nquotient: {}\nsigma: {}\n",
            self.conclusion.label(),
            self.ambient,
            self.quotient,
            self.sigma_component
        );
        match &self.conclusion {
            Conclusion::Slice(cert) => {
                let d = &cert.disk;
                let _ = writeln!(out, "convention: {}", cert.convention);
                let _ = writeln!(out, "plumbing: {}", cert.plumbing.as_ref().map_or("none", |p| p.name.as_str()));
                let _ = writeln!(
                    out,
                    "disk: k={} a_pairs={} b_plus={} b_minus={} c={} mirrored={}",
                    d.k, d.a_pairs, d.b_plus, d.b_minus, d.c, d.mirrored
                );
                let _ = writeln!(out, "tree_vertices: {}", cert.tree.as_ref().map_or(0, |t| t.n()));
                let emb: Vec<String> = cert.embedding.iter().map(|p| (p + 1).to_string()).collect();
                let _ = writeln!(out, "embedding: [{}]", emb.join(", "));
                for (i, step) in cert.transcript.iter().enumerate() {
                    let _ = writeln!(out, "step {}: {step}", i + 1);
                }
            }
            Conclusion::NotSlice(ob) => {
                let _ = writeln!(out, "half_axis: {}", ob.half_axis);
                let _ = writeln!(out, "quotient_jones: {}", ob.quotient_jones);
                let _ = writeln!(out, "quotient_determinant: {}", ob.quotient_determinant);
                let _ = writeln!(out, "mirrored: {}", ob.mirrored);
                let _ = writeln!(out, "entry: {}", ob.entry.name);
                let _ = writeln!(out, "citation: {}", ob.entry.citation);
            }
            Conclusion::Inconclusive(reason) => {
                let _ = writeln!(out, "reason: {reason}");
            }
        }
        out
    }
}

/// Looks for a certificate against each builtin plumbing of the ambient.
fn certificate_search(
    sd: &SymmetricDiagram,
    ambient: &AmbientDescriptor,
    budget: usize,
    convention: Convention,
) -> Result<Certificate, String> {
    if try_unknot(&sd.base, DEFAULT_BUDGET) == UnknotStatus::ProvenUnknot {
        return Ok(Certificate::unknotted(&sd.name, convention));
    }
    let mut notes = Vec::new();
    for pt in ambient.plumbings() {
        let omega = pt.plumbing_type().map_err(|e| e.to_string())?;
        let max_moves = budget.min(pt.n_spheres() - 1);
        let SearchOutcome::Found(seq) = equivariant_unknotting_search(sd, max_moves, &[IntersectionType::A, omega]) else {
            notes.push(format!("{}: no type A/{omega} unknotting sequence within {max_moves} moves", pt.name));
            continue;
        };
        let literal = disk_from_sequence(&seq);
        let disk = match convention {
            Convention::AsStated => literal,
            Convention::Mirrored => literal.mirror(),
        };
        match check_theorem(&disk, &pt, convention) {
            Ok(mut cert) => {
                cert.knot = Some(sd.name.clone());
                let moves: Vec<String> = seq.moves.iter().map(|m| format!("{} at {}", m.kind, m.site)).collect();
                cert.transcript.insert(0, format!("unknotting sequence: [{}]", moves.join(", ")));
                if disk.mirrored {
                    cert.transcript.insert(1, "disk descriptor mirrored: the tubing is applied to the mirror".into());
                }
                return Ok(cert);
            }
            Err(r) => notes.push(format!("{}: {r}", pt.name)),
        }
    }
    if notes.is_empty() {
        notes.push(format!("ambient {} has no builtin plumbings", ambient.tag));
    }
    Err(notes.join("; "))
}

/// Runs the quotient obstruction and the certificate search concurrently.
/// A certificate and an obstruction for the same input is an error.
pub fn adjudicate(
    sd: &SymmetricDiagram,
    ambient: &AmbientDescriptor,
    budget: usize,
    convention: Convention,
) -> Result<Verdict, CertifyError> {
    sd.check()?;
    let (obstruction, search) =
        rayon::join(|| quotient_obstruction(sd, ambient), || certificate_search(sd, ambient, budget, convention));
    let obstruction = obstruction?;
    match (obstruction.conclusion, search) {
        (Conclusion::NotSlice(ob), Ok(cert)) => Err(CertifyError::Conflict {
            plumbing: cert.plumbing.map_or_else(|| "unknot".to_string(), |p| p.name),
            entry: ob.entry.name,
        }),
        (Conclusion::NotSlice(ob), _) => Ok(Verdict::new(Conclusion::NotSlice(ob), ambient)),
        (_, Ok(cert)) => Ok(Verdict::new(Conclusion::Slice(Box::new(cert)), ambient)),
        (Conclusion::Inconclusive(why), Err(notes)) => {
            Ok(Verdict::new(Conclusion::Inconclusive(format!("{why}; {notes}")), ambient))
        }
        (Conclusion::Slice(_), _) => unreachable!("the obstruction never certifies"),
    }
}
