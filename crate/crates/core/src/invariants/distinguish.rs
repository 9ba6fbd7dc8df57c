use std::fmt;

use super::{invariant_report, InvariantError, InvariantReport};
use crate::diagram::Diagram;
use crate::ops::cap_all;

/// Name of the first field in which two capped reports differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    Parameters,
    B1,
    H1Torsion,
    B2,
    Signature,
    Parity,
}

impl Witness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Witness::Parameters => "parameters",
            Witness::B1 => "b1",
            Witness::H1Torsion => "h1_torsion",
            Witness::B2 => "b2",
            Witness::Signature => "signature",
            Witness::Parity => "parity",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictValue {
    /// The diagrams are not diffeomorphism and handleslide equivalent.
    Distinct,
    /// Nothing is claimed.
    Inconclusive,
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictValue::Distinct => "DISTINCT",
            VerdictValue::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub value: VerdictValue,
    pub witness: Option<Witness>,
    /// Reports of the (capped) closed diagrams, when they were computed.
    pub reports: Option<(InvariantReport, InvariantReport)>,
}

impl Verdict {
    pub fn is_distinct(&self) -> bool {
        self.value == VerdictValue::Distinct
    }
}

fn closed_report(d: &Diagram) -> Result<InvariantReport, InvariantError> {
    if d.is_closed() {
        invariant_report(d)
    } else {
        let (capped, _) = cap_all(d)?;
        invariant_report(&capped)
    }
}

/// First differing field among b1, torsion, b2, signature, parity.
pub fn first_difference(a: &InvariantReport, b: &InvariantReport) -> Option<Witness> {
    if a.b1 != b.b1 {
        Some(Witness::B1)
    } else if a.h1_torsion != b.h1_torsion {
        Some(Witness::H1Torsion)
    } else if a.b2 != b.b2 {
        Some(Witness::B2)
    } else if a.signature != b.signature {
        Some(Witness::Signature)
    } else if a.parity != b.parity {
        Some(Witness::Parity)
    } else {
        None
    }
}

/// Refutes diffeomorphism-and-handleslide equivalence when possible.
///
/// Diagrams with different parameters are never equivalent. Otherwise
/// relative diagrams are capped (equivalent `(g,k;0,b)` diagrams have
/// equivalent caps, hence homeomorphic closed manifolds) and the closed
/// invariants are compared in a fixed order.
pub fn distinguish(d1: &Diagram, d2: &Diagram) -> Result<Verdict, InvariantError> {
    if d1.params() != d2.params() {
        return Ok(Verdict {
            value: VerdictValue::Distinct,
            witness: Some(Witness::Parameters),
            reports: None,
        });
    }
    let r1 = closed_report(d1)?;
    let r2 = closed_report(d2)?;
    let witness = first_difference(&r1, &r2);
    Ok(Verdict {
        value: if witness.is_some() {
            VerdictValue::Distinct
        } else {
            VerdictValue::Inconclusive
        },
        witness,
        reports: Some((r1, r2)),
    })
}
