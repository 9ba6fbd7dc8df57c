//! Homeomorphism invariants of the closed 4-manifold `X` presented by a closed
//! trisection diagram, and the capping-based distinguishing test.
//!
//! With `L_α, L_β, L_γ ⊂ H₁(Σ)` the spans of the three families:
//!
//! * `H₁(X) = H₁(Σ) / (L_α + L_β + L_γ)`;
//! * `H₂(X) ≅ (L_γ ∩ (L_α + L_β)) / ((L_γ ∩ L_α) + (L_γ ∩ L_β))`;
//! * for `x, y` in that quotient write `y = y_α + y_β`; then
//!   `Q(x, y) = ⟨x, y_β⟩`.
//!
//! The sign of `Q` is the one that gives the standard `CP²` diagram
//! (`α = a`, `β = b`, `γ = a + b`) the form `[+1]`.

mod distinguish;
mod form;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{Diagram, DiagramParams, FamilyLabel};
use crate::linalg::{cokernel_invariants, Cokernel, IntegerMatrix};
use crate::ops::OpsError;

pub use distinguish::{distinguish, Verdict, VerdictValue, Witness};
pub use form::{intersection_form, FormReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("diagram {0:?} is not closed; cap it first")]
    NotClosed(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Cap(#[from] OpsError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
    Zero,
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Definiteness::Positive => "positive",
            Definiteness::Negative => "negative",
            Definiteness::Indefinite => "indefinite",
            Definiteness::Zero => "zero",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub euler: i64,
    pub b1: usize,
    pub h1_torsion: Vec<BigInt>,
    pub b2: usize,
    pub b3: usize,
}

/// Everything the tool knows about a closed trisected 4-manifold.
///
/// `form_matrix` depends on the basis chosen for `H₂/torsion`; it is kept
/// for inspection. [`InvariantReport::same_invariants`] compares the
/// basis-free fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub name: String,
    pub params: DiagramParams,
    pub euler: i64,
    pub b1: usize,
    pub h1_torsion: Vec<BigInt>,
    pub b2: usize,
    pub b3: usize,
    pub form_matrix: IntegerMatrix,
    pub signature: i64,
    pub parity: Parity,
    pub definiteness: Definiteness,
}

impl InvariantReport {
    pub fn same_invariants(&self, other: &InvariantReport) -> bool {
        self.params == other.params
            && self.euler == other.euler
            && self.b1 == other.b1
            && self.h1_torsion == other.h1_torsion
            && self.b2 == other.b2
            && self.b3 == other.b3
            && self.signature == other.signature
            && self.parity == other.parity
            && self.definiteness == other.definiteness
    }
}

fn all_curves_matrix(d: &Diagram) -> IntegerMatrix {
    let cols: Vec<Vec<BigInt>> = FamilyLabel::ALL
        .iter()
        .flat_map(|&l| d.family(l).vectors())
        .collect();
    IntegerMatrix::from_columns(d.surface().h1_rank(), &cols).expect("diagram vectors have h1_rank entries")
}

/// `H₁(Σ) / (L_α + L_β + L_γ)` for any diagram. For a closed diagram this is
/// `H₁(X)`; for a relative one it is `H₁` of the trisected manifold with
/// boundary.
pub fn first_homology(d: &Diagram) -> Cokernel {
    cokernel_invariants(&all_curves_matrix(d))
}

pub fn homology_report(d: &Diagram) -> Result<HomologyReport, InvariantError> {
    if !d.is_closed() {
        return Err(InvariantError::NotClosed(d.name().to_string()));
    }
    let h1 = first_homology(d);
    let euler = d.euler_characteristic();
    // χ = 2 − 2 b1 + b2
    let b2 = euler - 2 + 2 * h1.free_rank as i64;
    let b2 = usize::try_from(b2).map_err(|_| {
        InvariantError::InternalInconsistency(format!(
            "χ = {euler} and b1 = {} force b2 = {b2} < 0",
            h1.free_rank
        ))
    })?;
    Ok(HomologyReport {
        euler,
        b1: h1.free_rank,
        h1_torsion: h1.torsion,
        b2,
        b3: h1.free_rank,
    })
}

/// Full report for a closed diagram.
pub fn invariant_report(d: &Diagram) -> Result<InvariantReport, InvariantError> {
    let homology = homology_report(d)?;
    let form = intersection_form(d)?;
    if form.rank != homology.b2 {
        return Err(InvariantError::InternalInconsistency(format!(
            "intersection form has rank {} but b2 = {}",
            form.rank, homology.b2
        )));
    }
    Ok(InvariantReport {
        name: d.name().to_string(),
        params: d.params(),
        euler: homology.euler,
        b1: homology.b1,
        h1_torsion: homology.h1_torsion,
        b2: homology.b2,
        b3: homology.b3,
        form_matrix: form.matrix,
        signature: form.signature,
        parity: form.parity,
        definiteness: form.definiteness,
    })
}
