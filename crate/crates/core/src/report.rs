//! Model reports, scoring criteria and the JSON report format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::TruthValue;
use crate::semantics::Interpretation;
use crate::syntax::{parse_literal, Assumed, Atom, HypothesisSet, Literal};

/// One generated model with what produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelReport {
    pub model: Interpretation,
    pub values: BTreeMap<Atom, TruthValue>,
    /// Hypotheses of the first run that produced this model.
    pub hypotheses: Option<HypothesisSet>,
    pub contradicted: Vec<Literal>,
    pub scores: BTreeMap<String, u64>,
    /// Every hypothesis set that produced this model.
    pub generated_by: Vec<HypothesisSet>,
}

impl ModelReport {
    /// Report for `model` over the given atoms; scores are filled in.
    pub fn new<'a>(model: Interpretation, atoms: impl IntoIterator<Item = &'a Atom>) -> Self {
        let values = model.valuation_map(atoms);
        let scores = Criterion::ALL
            .iter()
            .filter(|c| **c != Criterion::Lexicographic)
            .map(|c| (c.name().to_string(), c.count(&values)))
            .collect();
        ModelReport {
            model,
            values,
            hypotheses: None,
            contradicted: Vec::new(),
            scores,
            generated_by: Vec::new(),
        }
    }

    pub fn with_hypotheses(mut self, hyps: HypothesisSet, contradicted: Vec<Literal>) -> Self {
        self.generated_by = vec![hyps.clone()];
        self.hypotheses = Some(hyps);
        self.contradicted = contradicted;
        self
    }
}

/// How to order models, best first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Fewest inconsistent atoms.
    InconsistentCount,
    /// Fewest unknown atoms.
    UnknownCount,
    /// Canonical order of the models alone.
    Lexicographic,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [
        Criterion::InconsistentCount,
        Criterion::UnknownCount,
        Criterion::Lexicographic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::InconsistentCount => "inconsistent-count",
            Criterion::UnknownCount => "unknown-count",
            Criterion::Lexicographic => "lexicographic",
        }
    }

    fn count(self, values: &BTreeMap<Atom, TruthValue>) -> u64 {
        let target = match self {
            Criterion::InconsistentCount => TruthValue::Inconsistent,
            Criterion::UnknownCount => TruthValue::Unknown,
            Criterion::Lexicographic => return 0,
        };
        values.values().filter(|v| **v == target).count() as u64
    }

    pub fn score(self, report: &ModelReport) -> u64 {
        self.count(&report.values)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCriterion(s.to_string()))
    }
}

/// Sort best first. Equal scores fall back to the canonical model order.
pub fn rank_models(mut reports: Vec<ModelReport>, criterion: Criterion) -> Vec<ModelReport> {
    reports.sort_by(|a, b| {
        criterion
            .score(a)
            .cmp(&criterion.score(b))
            .then_with(|| a.model.cmp(&b.model))
    });
    reports
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub program: String,
    pub mode: String,
    pub models: Vec<JsonModel>,
    pub stats: JsonStats,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonModel {
    pub literals: Vec<String>,
    pub values: BTreeMap<String, TruthValue>,
    pub hypotheses: Option<BTreeMap<String, TruthValue>>,
    #[serde(default)]
    pub contradicted: Vec<String>,
    #[serde(default)]
    pub scores: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generated_by: Vec<BTreeMap<String, TruthValue>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonStats {
    pub atoms: usize,
    pub rules: usize,
    pub iterations: u64,
}

fn hyps_to_json(h: &HypothesisSet) -> BTreeMap<String, TruthValue> {
    h.iter().map(|(l, a)| (l.to_string(), a.value())).collect()
}

fn hyps_from_json(m: &BTreeMap<String, TruthValue>) -> Result<HypothesisSet> {
    let mut h = HypothesisSet::new();
    for (l, v) in m {
        let a = match v {
            TruthValue::True => Assumed::TRUE,
            TruthValue::False => Assumed::FALSE,
            TruthValue::Inconsistent => Assumed::BOTH,
            TruthValue::Unknown => Assumed::default(),
        };
        h.add(parse_literal(l)?, a);
    }
    Ok(h)
}

impl From<&ModelReport> for JsonModel {
    fn from(r: &ModelReport) -> Self {
        JsonModel {
            literals: r.model.to_strings(),
            values: r.values.iter().map(|(a, v)| (a.to_string(), *v)).collect(),
            hypotheses: r.hypotheses.as_ref().map(hyps_to_json),
            contradicted: r.contradicted.iter().map(Literal::to_string).collect(),
            scores: r.scores.clone(),
            generated_by: if r.generated_by.len() > 1 {
                r.generated_by.iter().map(hyps_to_json).collect()
            } else {
                Vec::new()
            },
        }
    }
}

impl JsonModel {
    /// Rebuild the report. Scores are recomputed from the atom values.
    pub fn to_report(&self) -> Result<ModelReport> {
        let model: Interpretation = self
            .literals
            .iter()
            .map(|s| parse_literal(s))
            .collect::<Result<_>>()?;
        let atoms: BTreeSet<Atom> = self
            .values
            .keys()
            .map(|s| parse_literal(s).map(|l| l.atom))
            .collect::<Result<_>>()?;
        let mut report = ModelReport::new(model, &atoms);
        report.hypotheses = self.hypotheses.as_ref().map(hyps_from_json).transpose()?;
        report.contradicted = self
            .contradicted
            .iter()
            .map(|s| parse_literal(s))
            .collect::<Result<_>>()?;
        report.generated_by = self
            .generated_by
            .iter()
            .map(hyps_from_json)
            .collect::<Result<_>>()?;
        if report.generated_by.is_empty() {
            report.generated_by.extend(report.hypotheses.clone());
        }
        Ok(report)
    }
}

impl JsonReport {
    pub fn new(program: String, mode: &str, reports: &[ModelReport], stats: JsonStats) -> Self {
        JsonReport {
            program,
            mode: mode.to_string(),
            models: reports.iter().map(JsonModel::from).collect(),
            stats,
        }
    }

    pub fn model_reports(&self) -> Result<Vec<ModelReport>> {
        self.models.iter().map(JsonModel::to_report).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn parse_report(text: &str) -> Result<JsonReport> {
    Ok(serde_json::from_str(text)?)
}
