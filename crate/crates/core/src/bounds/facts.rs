//! Structured bound facts with provenance, and their consistency rules.

use crate::error::Error;
use crate::geometry::SpaceDescriptor;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which invariant a fact is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Hash)]
pub enum Quantity {
    /// Topological complexity.
    #[serde(rename = "TC")]
    Tc,
    /// Symmetric topological complexity.
    #[serde(rename = "TCS")]
    Tcs,
    /// Euclidean embedding dimension E(r).
    #[serde(rename = "EMB_DIM")]
    EmbDim,
    /// Level of the coordinate-switching involution.
    #[serde(rename = "LEVEL")]
    Level,
    /// Smallest target parameter of a symmetric biequivariant map.
    #[serde(rename = "B_SNM")]
    BSnm,
    /// Euclidean immersion dimension (external tables only).
    #[serde(rename = "IMM")]
    Imm,
}

impl Quantity {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "TC" => Ok(Quantity::Tc),
            "TCS" => Ok(Quantity::Tcs),
            "EMB_DIM" => Ok(Quantity::EmbDim),
            "LEVEL" => Ok(Quantity::Level),
            "B_SNM" => Ok(Quantity::BSnm),
            "IMM" => Ok(Quantity::Imm),
            _ => Err(Error::Parse(format!("unknown quantity `{s}`"))),
        }
    }
}

/// How a fact constrains its quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactKind {
    Exact,
    Lower,
    Upper,
    Relation,
}

impl FactKind {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "exact" => Ok(FactKind::Exact),
            "lower" => Ok(FactKind::Lower),
            "upper" => Ok(FactKind::Upper),
            "relation" => Ok(FactKind::Relation),
            _ => Err(Error::Parse(format!("unknown fact kind `{s}`"))),
        }
    }
}

/// An integer value or a symbolic relation (e.g. `E(r)+1`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Symbolic(String),
}

impl Value {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(v) => Some(*v),
            Value::Symbolic(_) => None,
        }
    }
}

/// One sourced statement about one quantity of one space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fact {
    pub quantity: Quantity,
    pub kind: FactKind,
    pub value: Value,
    pub provenance: String,
}

impl Fact {
    pub fn exact(quantity: Quantity, value: i64, provenance: &str) -> Self {
        Fact {
            quantity,
            kind: FactKind::Exact,
            value: Value::Int(value),
            provenance: provenance.to_string(),
        }
    }

    pub fn lower(quantity: Quantity, value: i64, provenance: &str) -> Self {
        Fact {
            quantity,
            kind: FactKind::Lower,
            value: Value::Int(value),
            provenance: provenance.to_string(),
        }
    }

    pub fn upper(quantity: Quantity, value: i64, provenance: &str) -> Self {
        Fact {
            quantity,
            kind: FactKind::Upper,
            value: Value::Int(value),
            provenance: provenance.to_string(),
        }
    }

    pub fn relation(quantity: Quantity, relation: &str, provenance: &str) -> Self {
        Fact {
            quantity,
            kind: FactKind::Relation,
            value: Value::Symbolic(relation.to_string()),
            provenance: provenance.to_string(),
        }
    }
}

/// All facts known for one space. One-sided knowledge stays one-sided:
/// a missing bound is never fabricated.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub space: SpaceDescriptor,
    pub facts: Vec<Fact>,
}

impl BoundReport {
    pub fn new(space: SpaceDescriptor, facts: Vec<Fact>) -> Self {
        BoundReport { space, facts }
    }

    /// Every lower must sit at or below every upper of the same quantity,
    /// exact values must lie inside all stated intervals, and two exact
    /// claims must agree.
    pub fn check_consistency(&self) -> Result<(), String> {
        // Per quantity: (best lower, best upper, all exact claims).
        type Bounds = (Option<i64>, Option<i64>, Vec<i64>);
        let mut by_quantity: BTreeMap<Quantity, Bounds> = BTreeMap::new();
        for fact in &self.facts {
            if fact.provenance.is_empty() {
                return Err(format!("fact {fact:?} has no provenance"));
            }
            let Some(v) = fact.value.as_int() else {
                continue;
            };
            let entry = by_quantity.entry(fact.quantity).or_default();
            match fact.kind {
                FactKind::Lower => entry.0 = Some(entry.0.map_or(v, |cur: i64| cur.max(v))),
                FactKind::Upper => entry.1 = Some(entry.1.map_or(v, |cur: i64| cur.min(v))),
                FactKind::Exact => entry.2.push(v),
                FactKind::Relation => {}
            }
        }
        for (quantity, (lower, upper, exacts)) in &by_quantity {
            if let (Some(l), Some(u)) = (lower, upper) {
                if l > u {
                    return Err(format!("{quantity:?}: lower {l} exceeds upper {u}"));
                }
            }
            if let Some((first, rest)) = exacts.split_first() {
                if rest.iter().any(|v| v != first) {
                    return Err(format!("{quantity:?}: conflicting exact values {exacts:?}"));
                }
                if lower.is_some_and(|l| *first < l) || upper.is_some_and(|u| *first > u) {
                    return Err(format!(
                        "{quantity:?}: exact {first} outside [{lower:?}, {upper:?}]"
                    ));
                }
            }
        }
        Ok(())
    }

    /// The strongest integer bounds recorded for a quantity:
    /// (best lower, best upper, exact).
    pub fn interval(&self, quantity: Quantity) -> (Option<i64>, Option<i64>, Option<i64>) {
        let mut lower = None;
        let mut upper = None;
        let mut exact = None;
        for fact in self.facts.iter().filter(|f| f.quantity == quantity) {
            let Some(v) = fact.value.as_int() else {
                continue;
            };
            match fact.kind {
                FactKind::Lower => lower = Some(lower.map_or(v, |cur: i64| cur.max(v))),
                FactKind::Upper => upper = Some(upper.map_or(v, |cur: i64| cur.min(v))),
                FactKind::Exact => exact = Some(v),
                FactKind::Relation => {}
            }
        }
        (lower, upper, exact)
    }
}

/// Appends `fact` unless an identical (quantity, kind, value) statement is
/// already present; the first provenance wins.
pub(crate) fn push_dedup(facts: &mut Vec<Fact>, fact: Fact) {
    let duplicate = facts
        .iter()
        .any(|f| f.quantity == fact.quantity && f.kind == fact.kind && f.value == fact.value);
    if !duplicate {
        facts.push(fact);
    }
}
