//! Audit report types and their JSON form.

use serde::Serialize;

use crate::bounds::Bounds;

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClaimKind {
    /// Decided exactly over the stated finite range.
    ExactTheorem,
    /// Floating-point or search-based evidence over a sampled range.
    EmpiricalSweep,
    /// An inferential step no computation here can decide.
    NarrativeUnchecked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Verified,
    Falsified,
    Unchecked,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Evidence {
    pub scope: String,
    pub cases_checked: u64,
    pub counterexamples: Vec<String>,
    /// Hits that the check expects (validation-mode sweeps).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expected_findings: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Evidence {
    pub fn new(scope: impl Into<String>) -> Self {
        Evidence {
            scope: scope.into(),
            ..Evidence::default()
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimRecord {
    pub id: String,
    pub paper_ref: String,
    pub kind: ClaimKind,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Tolerances {
    pub relative_float: f64,
    pub angle_deg: f64,
    pub right_exponent: f64,
    pub exponent_bracket_width: f64,
    pub relative_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Parameters {
    pub bounds: Bounds,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub parameters: Parameters,
    pub claims: Vec<ClaimRecord>,
    pub dependency_edges: Vec<(String, String)>,
}

/// Process exit status for a finished audit or check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Falsified = 1,
    Usage = 2,
    Io = 3,
    Partial = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

impl AuditReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// 1 if anything is falsified, 4 if a checkable claim stayed unchecked, else 0.
    pub fn exit_status(&self) -> ExitStatus {
        if self.claims.iter().any(|c| c.verdict == Verdict::Falsified) {
            ExitStatus::Falsified
        } else if self
            .claims
            .iter()
            .any(|c| c.kind != ClaimKind::NarrativeUnchecked && c.verdict != Verdict::Verified)
        {
            ExitStatus::Partial
        } else {
            ExitStatus::Ok
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per claim, for terminals.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "fermatlab {} audit (schema {})\n",
            self.tool_version, self.schema_version
        );
        for c in &self.claims {
            out.push_str(&format!(
                "{:<20} {:<18} {:<10} {} [{} cases]\n",
                c.id,
                format!("{:?}", c.kind),
                format!("{:?}", c.verdict),
                c.evidence.scope,
                c.evidence.cases_checked
            ));
            for cx in c.evidence.counterexamples.iter().take(5) {
                out.push_str(&format!("    counterexample: {cx}\n"));
            }
        }
        out
    }
}
