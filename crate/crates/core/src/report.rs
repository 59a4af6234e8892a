//! Verification outcomes and their JSON / CSV / plain renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Violated,
}

/// What a claim is expected to do. Negative controls and known misprints are
/// shipped as `Violated`; `Informational` outcomes never fail a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Holds,
    Violated,
    Informational,
}

/// Coefficients at `step * n + residue` for `n` in the checked range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Progression {
    pub step: u64,
    pub residue: u64,
}

impl Progression {
    pub fn new(step: u64, residue: u64) -> Self {
        assert!(step >= 1 && residue < step, "need 0 <= residue < step");
        Self { step, residue }
    }

    pub fn at(&self, n: u64) -> u64 {
        self.step * n + self.residue
    }
}

/// Inclusive range of the running index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NRange {
    pub from: u64,
    pub to: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    /// Argument of the counting function (or exponent, for identities).
    pub n: u64,
    /// Offending value; a residue for congruences, a difference for identities.
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub label: String,
    pub description: String,
    pub params: BTreeMap<String, i64>,
    pub progression: Option<Progression>,
    pub modulus: Option<u64>,
    pub n_checked: NRange,
    pub order: usize,
    pub expectation: Expectation,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// Start a report; call [`VerificationReport::finish`] with the findings.
    pub fn start(label: impl Into<String>, description: impl Into<String>) -> ReportBuilder {
        ReportBuilder {
            report: VerificationReport {
                label: label.into(),
                description: description.into(),
                params: BTreeMap::new(),
                progression: None,
                modulus: None,
                n_checked: NRange { from: 0, to: 0 },
                order: 0,
                expectation: Expectation::Holds,
                status: Status::Verified,
                counterexamples: Vec::new(),
                elapsed_ms: 0,
                note: None,
            },
            started: Instant::now(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Whether the outcome is the expected one.
    pub fn meets_expectation(&self) -> bool {
        match self.expectation {
            Expectation::Holds => self.status == Status::Verified,
            Expectation::Violated => self.status == Status::Violated,
            Expectation::Informational => true,
        }
    }

    fn sort_key(&self) -> (&str, &BTreeMap<String, i64>, Option<Progression>, Option<u64>) {
        (&self.label, &self.params, self.progression, self.modulus)
    }

    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "[{}] {} ({}) {} n={}..={}",
            match self.status {
                Status::Verified => "verified",
                Status::Violated => "violated",
            },
            self.label,
            params.join(", "),
            self.description,
            self.n_checked.from,
            self.n_checked.to,
        );
        if !self.counterexamples.is_empty() {
            let shown: Vec<String> = self
                .counterexamples
                .iter()
                .take(5)
                .map(|c| format!("{}:{}", c.n, c.value))
                .collect();
            let _ = write!(
                line,
                " counterexamples={} [{}{}]",
                self.counterexamples.len(),
                shown.join(" "),
                if self.counterexamples.len() > 5 { " ..." } else { "" }
            );
        }
        match self.expectation {
            Expectation::Holds => {}
            Expectation::Violated => line.push_str(" (expected violation)"),
            Expectation::Informational => line.push_str(" (informational)"),
        }
        if let Some(note) = &self.note {
            let _ = write!(line, "; {note}");
        }
        line
    }
}

pub struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
}

impl ReportBuilder {
    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.report.params.insert(key.to_string(), value);
        self
    }

    pub fn params(mut self, params: &BTreeMap<String, i64>) -> Self {
        self.report.params.extend(params.iter().map(|(k, v)| (k.clone(), *v)));
        self
    }

    pub fn progression(mut self, p: Progression) -> Self {
        self.report.progression = Some(p);
        self
    }

    pub fn modulus(mut self, m: u64) -> Self {
        self.report.modulus = Some(m);
        self
    }

    pub fn expect(mut self, e: Expectation) -> Self {
        self.report.expectation = e;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.report.note = Some(note.into());
        self
    }

    pub fn finish(mut self, n_checked: NRange, order: usize, counterexamples: Vec<Counterexample>) -> VerificationReport {
        self.report.n_checked = n_checked;
        self.report.order = order;
        self.report.status = if counterexamples.is_empty() {
            Status::Verified
        } else {
            Status::Violated
        };
        self.report.counterexamples = counterexamples;
        self.report.elapsed_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}

/// A suite's claims plus run metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub timestamp: String,
    pub order: usize,
    pub grid: BTreeMap<String, String>,
    pub claims: Vec<VerificationReport>,
}

impl SuiteReport {
    /// Collect claims, sorting them by label then parameters so the output
    /// does not depend on execution order.
    pub fn new(suite: &str, grid: BTreeMap<String, String>, mut claims: Vec<VerificationReport>) -> Self {
        claims.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let order = claims.iter().map(|c| c.order).max().unwrap_or(0);
        Self {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339(),
            order,
            grid,
            claims,
        }
    }

    pub fn all_as_expected(&self) -> bool {
        self.claims.iter().all(VerificationReport::meets_expectation)
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &VerificationReport> {
        self.claims.iter().filter(|c| !c.meets_expectation())
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn csv_rows(&self) -> Vec<CsvRow> {
        self.claims.iter().map(CsvRow::from).collect()
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.csv_rows() {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_plain(&self) -> String {
        let mut out = format!("suite {} (order {})\n", self.suite, self.order);
        for c in &self.claims {
            out.push_str(&c.summary_line());
            out.push('\n');
        }
        let unexpected = self.unexpected().count();
        let _ = writeln!(
            out,
            "{} claims, {} as expected, {} unexpected",
            self.claims.len(),
            self.claims.len() - unexpected,
            unexpected
        );
        out
    }
}

/// Flat CSV rendering of one claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub label: String,
    pub params: String,
    pub step: Option<u64>,
    pub residue: Option<u64>,
    pub modulus: Option<u64>,
    pub n_from: u64,
    pub n_to: u64,
    pub order: usize,
    pub expectation: Expectation,
    pub status: Status,
    pub counterexample_count: usize,
    pub counterexamples: String,
    pub description: String,
    pub note: String,
}

impl From<&VerificationReport> for CsvRow {
    fn from(c: &VerificationReport) -> Self {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let cex: Vec<String> = c.counterexamples.iter().map(|x| format!("{}:{}", x.n, x.value)).collect();
        Self {
            label: c.label.clone(),
            params: params.join(";"),
            step: c.progression.map(|p| p.step),
            residue: c.progression.map(|p| p.residue),
            modulus: c.modulus,
            n_from: c.n_checked.from,
            n_to: c.n_checked.to,
            order: c.order,
            expectation: c.expectation,
            status: c.status,
            counterexample_count: c.counterexamples.len(),
            counterexamples: cex.join(";"),
            description: c.description.clone(),
            note: c.note.clone().unwrap_or_default(),
        }
    }
}
