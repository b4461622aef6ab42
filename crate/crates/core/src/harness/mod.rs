//! Desk-scale verification of the spectral extremal theorem and its lemmas.

mod cosparse;
mod lemmas;
mod theorem;

pub use cosparse::{enumerate_cosparse, CosparseEnumerator, CosparseIter};
pub use lemmas::{verify_lemma_no_factor, verify_spectral_lemmas, verify_zhw};
pub use theorem::{verify_main_theorem, ScanMode, TheoremScan, EXHAUSTIVE_LIMIT};

use serde::Serialize;
use std::ops::AddAssign;

/// How threshold comparisons were settled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecisionCounts {
    pub float: u64,
    pub exact: u64,
}

impl AddAssign for DecisionCounts {
    fn add_assign(&mut self, o: Self) {
        self.float += o.float;
        self.exact += o.exact;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanParams {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub mode: ScanMode,
    pub requested_mode: ScanMode,
    pub seed: u64,
    pub samples: usize,
    pub n_bound: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Disposition of every scanned graph.
///
/// `scanned = below_threshold + recognized_extremal + factor_yes + violations`
/// and `spectral_candidates = recognized_extremal + factor_yes + violations`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    pub scanned: u64,
    pub below_threshold: u64,
    pub spectral_candidates: u64,
    pub recognized_extremal: u64,
    pub factor_yes: u64,
    pub violations: u64,
}

impl ScanCounts {
    pub fn reconciles(&self) -> bool {
        self.scanned == self.below_threshold + self.spectral_candidates
            && self.spectral_candidates == self.recognized_extremal + self.factor_yes + self.violations
    }
}

impl AddAssign for ScanCounts {
    fn add_assign(&mut self, o: Self) {
        self.scanned += o.scanned;
        self.below_threshold += o.below_threshold;
        self.spectral_candidates += o.spectral_candidates;
        self.recognized_extremal += o.recognized_extremal;
        self.factor_yes += o.factor_yes;
        self.violations += o.violations;
    }
}

/// The extremal graph itself, checked whether or not the scanned family
/// contains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalCheck {
    pub graph6: String,
    pub recognized: bool,
    pub has_factor: bool,
    pub in_family: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub kind: &'static str,
    pub params: ScanParams,
    pub threshold: ThresholdInfo,
    pub counts: ScanCounts,
    pub extremal: ExtremalCheck,
    pub violations: Vec<String>,
    pub decisions: DecisionCounts,
    pub runtime_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ThresholdInfo {
    pub lo: f64,
    pub hi: f64,
}

impl ScanReport {
    /// No violations and the extremal graph behaves as expected.
    pub fn confirmed(&self) -> bool {
        self.violations.is_empty() && self.extremal.recognized && !self.extremal.has_factor
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// JSON without the runtime, byte-identical across repeated runs.
    pub fn to_stable_json(&self) -> String {
        stable_json(self)
    }

    pub fn to_csv(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            kind: &'a str,
            a: usize,
            b: usize,
            n: usize,
            mode: ScanMode,
            seed: u64,
            samples: usize,
            scanned: u64,
            below_threshold: u64,
            spectral_candidates: u64,
            recognized_extremal: u64,
            factor_yes: u64,
            violations: u64,
            float: u64,
            exact: u64,
            confirmed: bool,
            runtime_ms: u64,
        }
        let p = &self.params;
        let c = &self.counts;
        to_csv(&[Row {
            kind: self.kind,
            a: p.a,
            b: p.b,
            n: p.n,
            mode: p.mode,
            seed: p.seed,
            samples: p.samples,
            scanned: c.scanned,
            below_threshold: c.below_threshold,
            spectral_candidates: c.spectral_candidates,
            recognized_extremal: c.recognized_extremal,
            factor_yes: c.factor_yes,
            violations: c.violations,
            float: self.decisions.float,
            exact: self.decisions.exact,
            confirmed: self.confirmed(),
            runtime_ms: self.runtime_ms,
        }])
    }
}

/// One checked parameter point of a lemma sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaPoint {
    /// Human-readable parameter tuple, e.g. `"n=13,s=3"`.
    pub point: String,
    pub pass: bool,
    /// Margin by which the inequality holds (negative on failure).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCounts {
    pub points: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub kind: &'static str,
    pub lemma: &'static str,
    pub params: serde_json::Value,
    pub counts: LemmaCounts,
    pub min_slack: Option<f64>,
    pub max_slack: Option<f64>,
    pub points: Vec<LemmaPoint>,
    /// Failing points, by their parameter tuple.
    pub violations: Vec<String>,
    pub decisions: DecisionCounts,
    pub runtime_ms: u64,
}

impl LemmaReport {
    pub(crate) fn new(lemma: &'static str, params: serde_json::Value, points: Vec<LemmaPoint>, decisions: DecisionCounts, runtime_ms: u64) -> Self {
        let passed = points.iter().filter(|p| p.pass).count();
        let slacks = points.iter().filter_map(|p| p.slack);
        let min_slack = slacks.clone().reduce(f64::min);
        let max_slack = slacks.reduce(f64::max);
        LemmaReport {
            kind: "lemma",
            lemma,
            params,
            counts: LemmaCounts {
                points: points.len(),
                passed,
                failed: points.len() - passed,
            },
            min_slack,
            max_slack,
            violations: points.iter().filter(|p| !p.pass).map(|p| p.point.clone()).collect(),
            points,
            decisions,
            runtime_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_stable_json(&self) -> String {
        stable_json(self)
    }

    /// One row per parameter point.
    pub fn to_csv(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            lemma: &'a str,
            point: &'a str,
            pass: bool,
            slack: Option<f64>,
            detail: &'a str,
        }
        let rows: Vec<Row> = self
            .points
            .iter()
            .map(|p| Row {
                lemma: self.lemma,
                point: &p.point,
                pass: p.pass,
                slack: p.slack,
                detail: &p.detail,
            })
            .collect();
        to_csv(&rows)
    }
}

fn stable_json<T: Serialize>(r: &T) -> String {
    let mut v = serde_json::to_value(r).expect("report serializes");
    if let Some(obj) = v.as_object_mut() {
        obj.remove("runtime_ms");
    }
    serde_json::to_string(&v).expect("report serializes")
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
