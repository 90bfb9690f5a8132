//! Exact classical invariants used as verification oracles.

mod bracket;
mod goeritz;
mod unknot;

use serde::Serialize;
use thiserror::Error;

pub use bracket::{
    crossing_limit, jones, jones_from_bracket, jones_with_limit, kauffman_bracket,
    kauffman_bracket_with_limit, loop_value, DEFAULT_LIMIT, LIMIT_ENV,
};
pub use goeritz::{checkerboard, connected_goeritz, connected_goeritz_with, det_and_signature, goeritz};
pub use unknot::{simplifies_to_trivial, try_unknot, UnknotStatus, DEFAULT_BUDGET};

use crate::{Laurent, LinkDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{crossings} crossings exceed the state-sum limit of {limit}")]
    LimitExceeded { crossings: usize, limit: usize },
    #[error("expected a knot, found {0} components")]
    NotAKnot(usize),
}

pub fn arf(d: &LinkDiagram) -> Result<u8, InvariantError> {
    if d.n_components() != 1 {
        return Err(InvariantError::NotAKnot(d.n_components()));
    }
    let (det, _) = goeritz(d);
    Ok(arf_from_determinant(det))
}

pub fn arf_from_determinant(det: u64) -> u8 {
    match det % 8 {
        1 | 7 => 0,
        _ => 1,
    }
}

/// |V(-1)|, evaluating t^(1/2) at i.
pub fn jones_determinant(j: &Laurent) -> u64 {
    let (re, im) = j.eval_at_i();
    ((re * re + im * im) as f64).sqrt().round() as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub components: usize,
    pub crossings: usize,
    #[serde(serialize_with = "crate::serde_display")]
    pub jones: Laurent,
    pub determinant: u64,
    pub signature: i64,
    pub arf: Option<u8>,
    pub unknot_status: UnknotStatus,
}

impl InvariantReport {
    pub fn compute(d: &LinkDiagram) -> Result<Self, InvariantError> {
        let jones = jones(d)?;
        let (determinant, signature) = goeritz(d);
        let arf = (d.n_components() == 1).then(|| arf_from_determinant(determinant));
        let unknot_status = try_unknot(d, DEFAULT_BUDGET);
        Ok(Self {
            components: d.n_components(),
            crossings: d.n_crossings(),
            jones,
            determinant,
            signature,
            arf,
            unknot_status,
        })
    }

    /// `key: value` lines in a fixed order.
    pub fn to_text(&self) -> String {
        let arf = self.arf.map_or("n/a".to_string(), |a| a.to_string());
        format!(
            "components: {}\ncrossings: {}\njones: {}\ndeterminant: {}\nsignature: {}\narf: {}\nunknot_status: {:?}\n",
            self.components, self.crossings, self.jones, self.determinant, self.signature, arf, self.unknot_status
        )
    }
}
