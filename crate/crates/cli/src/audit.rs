//! Runs every registered claim and assembles the report.

use fermatlab_core::explorer::{EXPONENT_BRACKET_WIDTH, RELATIVE_RESIDUAL_BOUND};
use fermatlab_core::geometry::{ANGLE_TOLERANCE_DEG, RIGHT_EXPONENT_TOLERANCE};
use fermatlab_core::lemmas::FLOAT_TOLERANCE;

use crate::bounds::Bounds;
use crate::parallel;
use crate::registry::{Outcome, CLAIMS, EDGES};
use crate::report::{
    AuditReport, ClaimKind, ClaimRecord, Evidence, Parameters, Tolerances, Verdict,
    SCHEMA_VERSION, TOOL_VERSION,
};

pub fn tolerances() -> Tolerances {
    Tolerances {
        relative_float: FLOAT_TOLERANCE,
        angle_deg: ANGLE_TOLERANCE_DEG,
        right_exponent: RIGHT_EXPONENT_TOLERANCE,
        exponent_bracket_width: EXPONENT_BRACKET_WIDTH,
        relative_residual: RELATIVE_RESIDUAL_BOUND,
    }
}

/// Evaluates all claims in registry order. Fails only on malformed bounds.
pub fn run_audit(bounds: &Bounds) -> Result<AuditReport, String> {
    bounds.validate()?;
    let exceeded = bounds.exceeded();
    let claims = parallel::install(|| {
        CLAIMS
            .iter()
            .map(|spec| {
                let over: Vec<&str> = spec
                    .uses
                    .iter()
                    .copied()
                    .filter(|f| exceeded.contains(f))
                    .collect();
                let Outcome { verdict, evidence } = if !over.is_empty() {
                    Outcome {
                        verdict: Verdict::Unchecked,
                        evidence: Evidence::new("not run")
                            .note(format!("bounds above the supported limit: {}", over.join(", "))),
                    }
                } else {
                    (spec.gather)(bounds)
                };
                let verdict = if spec.kind == ClaimKind::NarrativeUnchecked {
                    Verdict::Unchecked
                } else {
                    verdict
                };
                ClaimRecord {
                    id: spec.id.to_string(),
                    paper_ref: spec.paper_ref.to_string(),
                    kind: spec.kind,
                    verdict,
                    evidence,
                }
            })
            .collect()
    });
    Ok(AuditReport {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        parameters: Parameters {
            bounds: bounds.clone(),
            tolerances: tolerances(),
        },
        claims,
        dependency_edges: EDGES
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    })
}
