//! The four kinds of symmetric self-intersection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Off-axis pair (A), on-axis with the strands exchanged (B, signed), or
/// on-axis with each strand preserved (C).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntersectionType {
    A,
    #[serde(rename = "B+")]
    BPlus,
    #[serde(rename = "B-")]
    BMinus,
    C,
}

impl IntersectionType {
    pub const ALL: [IntersectionType; 4] = [Self::A, Self::BPlus, Self::BMinus, Self::C];

    /// The type seen in the mirror image: B+ and B- swap.
    pub fn mirror(self) -> Self {
        match self {
            Self::BPlus => Self::BMinus,
            Self::BMinus => Self::BPlus,
            other => other,
        }
    }

    pub fn is_on_axis(self) -> bool {
        self != Self::A
    }

    pub fn is_b(self) -> bool {
        matches!(self, Self::BPlus | Self::BMinus)
    }

    /// Self-intersections contributed by one move of this type.
    pub fn multiplicity(self) -> usize {
        if self == Self::A {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for IntersectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A => "A",
            Self::BPlus => "B+",
            Self::BMinus => "B-",
            Self::C => "C",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown intersection type `{0}` (expected A, B+, B- or C)")]
pub struct ParseTypeError(pub String);

impl FromStr for IntersectionType {
    type Err = ParseTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Self::A),
            "B+" | "B₊" | "b+" | "Bp" => Ok(Self::BPlus),
            "B-" | "B₋" | "b-" | "Bm" => Ok(Self::BMinus),
            "C" | "c" => Ok(Self::C),
            other => Err(ParseTypeError(other.to_string())),
        }
    }
}
