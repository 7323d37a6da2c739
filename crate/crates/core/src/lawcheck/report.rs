use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cli::documents::{DocumentError, GraphDocument, RelationDocument};
use crate::graphcat::Graph;
use crate::relcore::{CpMorphism, Relation};

/// The inputs of a failing instance, as interchange documents.
///
/// CP morphisms are recorded by their underlying relation `A×A → B×B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub graphs: Vec<GraphDocument>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationDocument>,
}

impl Instance {
    pub fn graphs(&self) -> Result<Vec<Graph>, DocumentError> {
        self.graphs.iter().map(GraphDocument::to_graph).collect()
    }

    pub fn relations(&self) -> Result<Vec<Relation>, DocumentError> {
        self.relations.iter().map(RelationDocument::to_relation).collect()
    }

    pub fn cp_morphisms(&self) -> Result<Vec<CpMorphism>, DocumentError> {
        self.relations()?.into_iter().map(|r| Ok(CpMorphism::from_relation(r)?)).collect()
    }
}

/// Something that can be written into a counterexample.
pub trait Witness {
    fn record(&self, instance: &mut Instance);
}

impl Witness for Graph {
    fn record(&self, instance: &mut Instance) {
        instance.graphs.push(GraphDocument::from_graph(self));
    }
}

impl Witness for Relation {
    fn record(&self, instance: &mut Instance) {
        instance.relations.push(RelationDocument::from_relation(self));
    }
}

impl Witness for CpMorphism {
    fn record(&self, instance: &mut Instance) {
        self.rel().record(instance);
    }
}

impl<T: Witness + ?Sized> Witness for &T {
    fn record(&self, instance: &mut Instance) {
        (**self).record(instance);
    }
}

pub fn instance_of(items: &[&dyn Witness]) -> Instance {
    let mut instance = Instance::default();
    for item in items {
        item.record(&mut instance);
    }
    instance
}

/// The first violation found by a law check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    /// Position of the instance in the check's deterministic instance order.
    pub ordinal: u64,
    pub detail: String,
    pub instance: Instance,
}

/// Outcome of one law check.
///
/// `passed` holds exactly when `counterexample` is absent. `seed` is set when
/// some part of the check was sampled rather than enumerated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LawReport {
    pub law_name: String,
    pub size_bound: usize,
    pub instances_checked: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub seed: Option<u64>,
}

impl LawReport {
    /// Merges reports of the same law over disjoint parts of the instance
    /// space. Associative and commutative: counts add, and the counterexample
    /// with the smallest ordinal wins.
    pub fn merge(self, other: LawReport) -> LawReport {
        let counterexample = match (self.counterexample, other.counterexample) {
            (Some(a), Some(b)) => Some(if (b.ordinal, &b.detail) < (a.ordinal, &a.detail) { b } else { a }),
            (a, b) => a.or(b),
        };
        LawReport {
            law_name: self.law_name,
            size_bound: self.size_bound.max(other.size_bound),
            instances_checked: self.instances_checked + other.instances_checked,
            passed: counterexample.is_none(),
            counterexample,
            seed: self.seed.or(other.seed),
        }
    }

    /// Folds several sub-law reports into one report under `law_name`.
    pub fn combine(law_name: &str, reports: impl IntoIterator<Item = LawReport>) -> LawReport {
        let mut out = LawReport {
            law_name: law_name.to_string(),
            size_bound: 0,
            instances_checked: 0,
            passed: true,
            counterexample: None,
            seed: None,
        };
        for r in reports {
            let mut r = r;
            if let Some(c) = r.counterexample.as_mut() {
                c.detail = format!("{}: {}", r.law_name, c.detail);
            }
            out = out.merge(r);
        }
        out
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} bound={} instances={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.law_name,
            self.size_bound,
            self.instances_checked
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " #{}: {}", c.ordinal, c.detail)?;
        }
        Ok(())
    }
}
