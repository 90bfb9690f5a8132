//! Strongly invertible knot diagrams, equivariant trees and plumbings, and
//! certificates of equivariant sliceness.

pub mod certify;
pub mod cli;
pub mod corpus;
pub mod eqtree;
pub mod invariants;
pub mod laurent;
pub mod linkdiag;
pub mod plumbing;
pub mod symdiag;
pub mod types;

pub use laurent::Laurent;
pub use linkdiag::LinkDiagram;
pub use symdiag::SymmetricDiagram;
pub use types::IntersectionType;

pub(crate) fn serde_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
