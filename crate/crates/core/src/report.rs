//! Machine-readable report shared by every CLI command.
//!
//! Counts are serialized as decimal strings so values beyond 64 bits survive
//! any JSON reader. Field order is fixed by the struct layout, which makes
//! parse-then-serialize byte-identical.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::compositions::RankProfile;
use crate::{Count, Params, SignedCount};

pub const TOOL_NAME: &str = "sumrank";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which formula produced a record's value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaVariant {
    Sphere,
    Ball,
    Exact,
    Thm1Literal,
    Thm2Literal,
    Thm2Profile,
    Thm3Literal,
    Thm3Aggregate,
    Lemma8,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 9] = [
        FormulaVariant::Sphere,
        FormulaVariant::Ball,
        FormulaVariant::Exact,
        FormulaVariant::Thm1Literal,
        FormulaVariant::Thm2Literal,
        FormulaVariant::Thm2Profile,
        FormulaVariant::Thm3Literal,
        FormulaVariant::Thm3Aggregate,
        FormulaVariant::Lemma8,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FormulaVariant::Sphere => "sphere",
            FormulaVariant::Ball => "ball",
            FormulaVariant::Exact => "exact",
            FormulaVariant::Thm1Literal => "thm1-literal",
            FormulaVariant::Thm2Literal => "thm2-literal",
            FormulaVariant::Thm2Profile => "thm2-profile",
            FormulaVariant::Thm3Literal => "thm3-literal",
            FormulaVariant::Thm3Aggregate => "thm3-aggregate",
            FormulaVariant::Lemma8 => "lemma8",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchStatus {
    Yes,
    No,
    NotRun,
}

impl MatchStatus {
    pub fn tag(self) -> &'static str {
        match self {
            MatchStatus::Yes => "yes",
            MatchStatus::No => "no",
            MatchStatus::NotRun => "not-run",
        }
    }
}

/// The inputs of one evaluated quantity. Unused fields are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    /// Block-wise distance profile of the two centers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<RankProfile>,
}

/// A single count or a table of counts, as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Single(String),
    Many(Vec<String>),
}

impl Value {
    pub fn count(c: &Count) -> Self {
        Value::Single(c.to_string())
    }

    pub fn signed(c: &SignedCount) -> Self {
        Value::Single(c.to_string())
    }

    pub fn counts(cs: &[Count]) -> Self {
        Value::Many(cs.iter().map(ToString::to_string).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    pub query: Query,
    pub formula_variant: FormulaVariant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(default)]
    pub oracle_value: Option<String>,
    #[serde(rename = "match")]
    pub matched: MatchStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    /// A record with no oracle comparison.
    pub fn computed(params: Option<Params>, query: Query, variant: FormulaVariant, value: Value) -> Self {
        Record {
            params,
            query,
            formula_variant: variant,
            value: Some(value),
            oracle_value: None,
            matched: MatchStatus::NotRun,
            error: None,
        }
    }

    /// A record comparing a formula value against an oracle count.
    pub fn compared(
        params: Option<Params>,
        query: Query,
        variant: FormulaVariant,
        value: Value,
        oracle: &Count,
    ) -> Self {
        let oracle_value = oracle.to_string();
        let matched = if value == Value::Single(oracle_value.clone()) {
            MatchStatus::Yes
        } else {
            MatchStatus::No
        };
        Record {
            params,
            query,
            formula_variant: variant,
            value: Some(value),
            oracle_value: Some(oracle_value),
            matched,
            error: None,
        }
    }

    /// The formula failed outright; counted as a mismatch.
    pub fn failed(params: Option<Params>, query: Query, variant: FormulaVariant, oracle: &Count, error: String) -> Self {
        Record {
            params,
            query,
            formula_variant: variant,
            value: None,
            oracle_value: Some(oracle.to_string()),
            matched: MatchStatus::No,
            error: Some(error),
        }
    }
}

/// Exact intersection volumes that differ between center pairs at the same
/// total distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDependence {
    pub params: Params,
    pub u: u32,
    pub s: u32,
    pub t: u32,
    pub values: Vec<ProfileValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileValue {
    pub profile: RankProfile,
    pub value: String,
}

/// A grid cell the oracle refused to enumerate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedCell {
    pub params: Params,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cells_run: usize,
    pub cells_skipped: usize,
    pub required_checks: usize,
    pub required_failures: usize,
    pub findings: usize,
    pub finding_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub timestamp: String,
    #[serde(default)]
    pub params: Option<Params>,
    pub records: Vec<Record>,
    /// Literal closed forms compared against the oracle. Mismatches here are
    /// findings, not failures.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Record>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub profile_dependence: Vec<ProfileDependence>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<SkippedCell>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
}

/// Process exit codes used by the CLI.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INVALID_ARGUMENTS: i32 = 2;
    pub const BUDGET_REFUSAL: i32 = 3;
    pub const REQUIRED_CHECK_FAILED: i32 = 4;
}

impl Report {
    pub fn new(timestamp: impl Into<String>, params: Option<Params>) -> Self {
        Report {
            tool: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
            timestamp: timestamp.into(),
            params,
            records: Vec::new(),
            discrepancies: Vec::new(),
            profile_dependence: Vec::new(),
            skipped: Vec::new(),
            summary: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Failures take precedence over skips.
    pub fn exit_code(&self) -> i32 {
        let failures = self.records.iter().any(|r| r.matched == MatchStatus::No);
        if failures {
            exit::REQUIRED_CHECK_FAILED
        } else if !self.skipped.is_empty() {
            exit::BUDGET_REFUSAL
        } else {
            exit::SUCCESS
        }
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} ({})", self.tool, self.version, self.timestamp);
        if let Some(p) = &self.params {
            let _ = writeln!(out, "{}", describe_params(p));
        }
        render_rows(&mut out, &self.records, self.params.is_none());
        if !self.discrepancies.is_empty() {
            let _ = writeln!(out, "\npaper-variant discrepancies (findings, not failures):");
            render_rows(&mut out, &self.discrepancies, true);
        }
        if !self.profile_dependence.is_empty() {
            let _ = writeln!(out, "\nintersection volumes that depend on the distance profile:");
            for dep in &self.profile_dependence {
                let values: Vec<String> =
                    dep.values.iter().map(|v| format!("{}={}", v.profile, v.value)).collect();
                let _ = writeln!(
                    out,
                    "  {} u={} s={} t={}: {}",
                    describe_params(&dep.params),
                    dep.u,
                    dep.s,
                    dep.t,
                    values.join(" ")
                );
            }
        }
        for skip in &self.skipped {
            let _ = writeln!(out, "skipped {}: {}", describe_params(&skip.params), skip.reason);
        }
        if let Some(s) = &self.summary {
            let _ = writeln!(
                out,
                "\ncells run {}, skipped {}; required checks {} ({} failed); findings {} ({} mismatched)",
                s.cells_run,
                s.cells_skipped,
                s.required_checks,
                s.required_failures,
                s.findings,
                s.finding_mismatches
            );
        }
        out
    }
}

fn describe_params(p: &Params) -> String {
    format!("q={} m={} eta={} ell={} (n={}, mu={})", p.q(), p.m(), p.eta(), p.ell(), p.n(), p.mu())
}

fn describe_query(q: &Query) -> String {
    let mut parts = Vec::new();
    for (name, v) in [
        ("t", q.t),
        ("u", q.u),
        ("s", q.s),
        ("gamma", q.gamma),
        ("delta", q.delta),
        ("rank", q.rank),
    ] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    if let Some(p) = &q.profile {
        parts.push(format!("profile={p}"));
    }
    if parts.is_empty() {
        return "-".to_string();
    }
    parts.join(" ")
}

fn render_rows(out: &mut String, records: &[Record], with_params: bool) {
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            let mut query = describe_query(&r.query);
            if with_params {
                if let Some(p) = &r.params {
                    query = format!("[{} {} {} {}] {query}", p.q(), p.m(), p.eta(), p.ell());
                }
            }
            let value = match (&r.value, &r.error) {
                (Some(Value::Single(v)), _) => v.clone(),
                (Some(Value::Many(vs)), _) => vs.join(" "),
                (None, Some(e)) => format!("error: {e}"),
                (None, None) => String::new(),
            };
            [
                r.formula_variant.tag().to_string(),
                query,
                value,
                r.oracle_value.clone().unwrap_or_else(|| "-".into()),
                r.matched.tag().to_string(),
            ]
        })
        .collect();
    let header = ["variant", "query", "value", "oracle", "match"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
}
