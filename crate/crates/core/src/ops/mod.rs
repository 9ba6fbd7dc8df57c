//! Diagram-to-diagram operations: capping, connected and boundary connected
//! sums, relative stabilizations, and parameter audits.

mod audit;
mod cap;
mod stabilize;
mod sum;

use thiserror::Error;

use crate::diagram::{DiagramError, DiagramParams};

pub use audit::{
    audit_boundary_sum_claim, audit_connected_sum_claim, audit_move_sequence, EulerAudit,
    MoveAudit, MoveEquation, MoveSequence,
};
pub use cap::{cap_all, cap_component, HandleSummary};
pub use stabilize::{
    hopf_piece, stabilize, stabilize_diagram, Direction, HopfSign, StabilizationKind,
    StabilizationMove,
};
pub use sum::{boundary_connected_sum, connected_sum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error(
        "{operation} needs page genus p = 0, got p = {p}: curve families of size g−p < g \
         cannot form a closed diagram"
    )]
    PageGenusNonzero { operation: &'static str, p: usize },
    #[error("diagram has a single boundary component; use cap_all to close it")]
    LastBoundary,
    #[error("boundary component {component} out of range 1..={boundary_count}")]
    BadIndex {
        component: usize,
        boundary_count: usize,
    },
    #[error("{operation} needs a relative diagram")]
    NotRelative { operation: &'static str },
    #[error("interior connected sum of two diagrams with boundary is not defined")]
    TwoRelativeSummands,
    #[error("resulting parameters {params} violate the parameter window: {detail}")]
    WindowViolation { params: String, detail: String },
    #[error("destabilization is only available at the parameter level")]
    DiagramDestabilization,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

pub(crate) fn window_violation(params: &DiagramParams, detail: impl Into<String>) -> OpsError {
    OpsError::WindowViolation {
        params: params.to_string(),
        detail: detail.into(),
    }
}

/// Rebuilds `d` on a new surface by transforming every curve vector.
pub(crate) fn transport(
    d: &crate::diagram::Diagram,
    name: String,
    params: DiagramParams,
    f: impl Fn(&[num_bigint::BigInt]) -> Vec<num_bigint::BigInt>,
) -> Result<crate::diagram::Diagram, OpsError> {
    use crate::diagram::{CurveClass, Diagram, FamilyLabel};
    let map = |label: FamilyLabel| -> Vec<CurveClass> {
        d.family(label)
            .members()
            .iter()
            .map(|c| CurveClass::new(f(c.coords())))
            .collect()
    };
    Ok(Diagram::from_params(
        name,
        params,
        map(FamilyLabel::Alpha),
        map(FamilyLabel::Beta),
        map(FamilyLabel::Gamma),
    )?)
}
