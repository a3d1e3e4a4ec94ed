//! The verification report: one row per grid cell, emitted as JSON
//! (schema version below) or a human-readable table. Timing fields are
//! wall-clock milliseconds and are excluded from reproducibility
//! comparisons.

use fourfold_core::{EnumerationOutcome, EnumerationStats, FormClass, IrreducibilityVerdict};
use serde::{Deserialize, Serialize};

use crate::config::Check;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub outcome: EnumerationOutcome,
    pub stats: EnumerationStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Report {
    pub free_rank: usize,
    /// Invariant factors as decimal strings.
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub euler: i64,
    pub signature: i64,
    pub b1: usize,
    pub b2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub even: bool,
    pub signature: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<FormClass>,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwReport {
    pub candidates: Vec<Vec<i64>>,
    pub rendered: Vec<String>,
    pub dimensions: Vec<i64>,
    /// Invariant value on the surviving classes; set at p = 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeoReportDto {
    pub simply_connected: bool,
    pub spin: bool,
    pub s2xs2: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u64,
    pub p: u64,
    pub label: String,
    pub order: OrderReport,
    pub h1: H1Report,
    pub invariants: InvariantReport,
    pub form: FormReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sw: Option<SwReport>,
    pub homeomorphism: HomeoReportDto,
    pub irreducibility: IrreducibilityVerdict,
    pub checks: Vec<CheckResult>,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub max_cosets: usize,
    pub checks: Vec<Check>,
    pub rows: Vec<ReportRow>,
    pub all_passed: bool,
    pub inconclusive: usize,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:>3} {:>3}  {:<12} {:<10} {:<14} {:<5} {:<18} {:>5}  {:<8} {:<12} {}\n",
            "n",
            "p",
            "order",
            "H1",
            "(e,s,b1,b2)",
            "form",
            "SW candidates",
            "SW",
            "homeo",
            "irreducible",
            "checks"
        ));
        for row in &self.rows {
            let order = match &row.order.outcome {
                EnumerationOutcome::Finished { order } => format!("{order} (closed)"),
                EnumerationOutcome::Exhausted { limit } => format!("exhausted@{limit}"),
            };
            let h1 = {
                let mut parts = Vec::new();
                match row.h1.free_rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                for t in &row.h1.torsion {
                    parts.push(format!("Z/{t}"));
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join("x")
                }
            };
            let inv = format!(
                "({},{},{},{})",
                row.invariants.euler,
                row.invariants.signature,
                row.invariants.b1,
                row.invariants.b2
            );
            let sw = row
                .sw
                .as_ref()
                .map(|s| s.rendered.join(", "))
                .unwrap_or_else(|| "-".to_string());
            let sw_value = row
                .sw
                .as_ref()
                .and_then(|s| s.value)
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".to_string());
            let homeo = if row.homeomorphism.s2xs2 {
                "S2xS2"
            } else {
                "none"
            };
            let irr = match row.irreducibility {
                IrreducibilityVerdict::Irreducible => "irreducible",
                IrreducibilityVerdict::Unknown => "unknown",
            };
            let checks = row
                .checks
                .iter()
                .map(|c| {
                    let name = match c.check {
                        Check::Order => "order",
                        Check::Abelianization => "abelianization",
                        Check::Betti => "betti",
                        Check::Form => "form",
                        Check::Sw => "sw",
                        Check::ProofWords => "proof_words",
                    };
                    let mark = match c.status {
                        CheckStatus::Pass => "ok",
                        CheckStatus::Fail => "FAIL",
                        CheckStatus::Inconclusive => "inconclusive",
                    };
                    format!("{name}={mark}")
                })
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!(
                "{:>3} {:>3}  {:<12} {:<10} {:<14} {:<5} {:<18} {:>5}  {:<8} {:<12} {}\n",
                row.n, row.p, order, h1, inv, row.form.rendered, sw, sw_value, homeo, irr, checks
            ));
        }
        out.push_str(&format!(
            "{} rows, all checks passed: {}, inconclusive: {}\n",
            self.rows.len(),
            self.all_passed,
            self.inconclusive
        ));
        out
    }
}
