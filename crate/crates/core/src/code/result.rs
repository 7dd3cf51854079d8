use serde::{Deserialize, Serialize};

use crate::gf::Elem;

/// How much of the minimum distance a search established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Certainty {
    Exact,
    LowerBoundOnly,
    UpperBoundOnly,
    Interval { lo: usize, hi: usize },
}

/// Outcome of a distance engine. `value` is the exact distance, the
/// single bound, or the upper end of an interval; it is absent for the
/// zero code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub schema: u32,
    pub value: Option<usize>,
    pub certainty: Certainty,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Elem>>,
    pub enumerated: u128,
    pub millis: u64,
}

impl DistanceResult {
    pub(crate) fn new(value: Option<usize>, certainty: Certainty, witness: Option<Vec<Elem>>, enumerated: u128) -> Self {
        DistanceResult { schema: 1, value, certainty, witness, enumerated, millis: 0 }
    }

    pub fn is_exact(&self) -> bool {
        self.certainty == Certainty::Exact
    }

    /// Largest proven lower bound.
    pub fn lower(&self) -> Option<usize> {
        match self.certainty {
            Certainty::Exact | Certainty::LowerBoundOnly => self.value,
            Certainty::Interval { lo, .. } => Some(lo),
            Certainty::UpperBoundOnly => None,
        }
    }

    /// Smallest upper bound, witnessed when `witness` is present.
    pub fn upper(&self) -> Option<usize> {
        match self.certainty {
            Certainty::Exact | Certainty::UpperBoundOnly => self.value,
            Certainty::Interval { hi, .. } => Some(hi),
            Certainty::LowerBoundOnly => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}
