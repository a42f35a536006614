use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Coloring, Graph};

/// What a check ran on.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct InstanceDescription {
    pub graph: Option<Graph>,
    pub k: Option<usize>,
    pub r: Option<usize>,
    /// Clique size, for the independent-set reduction.
    pub q: Option<usize>,
    pub seed: Option<u64>,
}

/// A concrete counterexample. Re-running the same check on `graph` (with
/// the instance parameters) reproduces it; `coloring`, when present, is the
/// offending input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub graph: Option<Graph>,
    pub coloring: Option<Coloring>,
    pub detail: String,
}

/// Outcome of an oracle-backed property check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub property: String,
    pub instance: InstanceDescription,
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub witness: Option<Witness>,
    pub measured_alpha: Option<f64>,
    pub measured_beta: Option<f64>,
    /// Named tallies: cases examined, branches taken, bounds used.
    pub counts: BTreeMap<String, u64>,
}

impl ReductionCertificate {
    pub(crate) fn new(property: &str, instance: InstanceDescription) -> Self {
        ReductionCertificate {
            property: property.to_string(),
            instance,
            holds: true,
            witness: None,
            measured_alpha: None,
            measured_beta: None,
            counts: BTreeMap::new(),
        }
    }

    pub(crate) fn tally(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    /// Records the first violation; later ones only bump the counter.
    pub(crate) fn violate(&mut self, witness: Witness) {
        self.tally("violations");
        if self.holds {
            self.holds = false;
            self.witness = Some(witness);
        }
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }
}
