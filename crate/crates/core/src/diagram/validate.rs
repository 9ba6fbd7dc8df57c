use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Diagram, FamilyLabel};
use crate::linalg::{cokernel_invariants, rank, IntegerMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ParameterWindow {
        detail: String,
    },
    FamilySize {
        family: FamilyLabel,
        expected: usize,
        found: usize,
    },
    /// Two members of one family have nonzero algebraic intersection.
    Isotropy {
        family: FamilyLabel,
        first: usize,
        second: usize,
        pairing: BigInt,
    },
    Independence {
        family: FamilyLabel,
        rank: usize,
        size: usize,
    },
    /// The family spans a non-saturated sublattice, so the quotient by it has
    /// torsion; a cut system always has a free quotient.
    Primitivity {
        family: FamilyLabel,
        torsion: Vec<BigInt>,
    },
    /// `H₁(Σ) / (L_x + L_y)` is not free of rank `k`.
    PairCokernel {
        first: FamilyLabel,
        second: FamilyLabel,
        expected_rank: usize,
        free_rank: usize,
        torsion: Vec<BigInt>,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::ParameterWindow { .. } => "WINDOW",
            Violation::FamilySize { .. } => "FAMILY_SIZE",
            Violation::Isotropy { .. } => "ISOTROPY",
            Violation::Independence { .. } => "INDEPENDENCE",
            Violation::Primitivity { .. } => "PRIMITIVITY",
            Violation::PairCokernel { .. } => "PAIR_COKERNEL",
        }
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.kind())?;
        match self {
            Violation::ParameterWindow { detail } => f.write_str(detail),
            Violation::FamilySize { family, expected, found } => {
                write!(f, "{family} has {found} curves, expected {expected}")
            }
            Violation::Isotropy { family, first, second, pairing } => write!(
                f,
                "{family} curves {} and {} have algebraic intersection {pairing} ≠ 0",
                first + 1,
                second + 1
            ),
            Violation::Independence { family, rank, size } => {
                write!(f, "{family} curves span rank {rank} < {size}")
            }
            Violation::Primitivity { family, torsion } => {
                write!(f, "{family} span is not primitive (quotient torsion [{}])", join(torsion))
            }
            Violation::PairCokernel { first, second, expected_rank, free_rank, torsion } => write!(
                f,
                "H1/(L_{first}+L_{second}) should be Z^{expected_rank}, got Z^{free_rank} torsion [{}]",
                join(torsion)
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

/// Checks every homological necessary condition and collects all failures.
pub fn validate_diagram(d: &Diagram) -> ValidationReport {
    let mut violations = Vec::new();
    let params = d.params();
    let surface = d.surface();
    let n = surface.h1_rank();

    if let Err(detail) = params.check_window() {
        violations.push(Violation::ParameterWindow { detail });
    }

    let expected_size = params.family_size();
    for label in FamilyLabel::ALL {
        let fam = d.family(label);
        if fam.len() != expected_size {
            violations.push(Violation::FamilySize {
                family: label,
                expected: expected_size,
                found: fam.len(),
            });
        }
        let members = fam.members();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let pairing = surface.pairing(members[i].coords(), members[j].coords());
                if !pairing.is_zero() {
                    violations.push(Violation::Isotropy {
                        family: label,
                        first: i,
                        second: j,
                        pairing,
                    });
                }
            }
        }
        let m = IntegerMatrix::from_columns(n, &fam.vectors()).expect("shape checked at construction");
        let r = rank(&m);
        if r < fam.len() {
            violations.push(Violation::Independence {
                family: label,
                rank: r,
                size: fam.len(),
            });
        }
        let coker = cokernel_invariants(&m);
        if !coker.is_free() {
            violations.push(Violation::Primitivity {
                family: label,
                torsion: coker.torsion,
            });
        }
    }

    for (x, y) in FamilyLabel::PAIRS {
        let mut cols = d.family(x).vectors();
        cols.extend(d.family(y).vectors());
        let m = IntegerMatrix::from_columns(n, &cols).expect("shape checked at construction");
        let coker = cokernel_invariants(&m);
        if coker.free_rank != params.k || !coker.is_free() {
            violations.push(Violation::PairCokernel {
                first: x,
                second: y,
                expected_rank: params.k,
                free_rank: coker.free_rank,
                torsion: coker.torsion,
            });
        }
    }

    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{CurveClass, DiagramParams};

    fn closed(g: usize, k: usize, a: &[&[i64]], b: &[&[i64]], c: &[&[i64]]) -> Diagram {
        let f = |v: &[&[i64]]| v.iter().map(|x| CurveClass::from_i64(x)).collect();
        Diagram::from_params("t", DiagramParams::closed(g, k), f(a), f(b), f(c)).unwrap()
    }

    #[test]
    fn cp2_passes() {
        let d = closed(1, 0, &[&[1, 0]], &[&[0, 1]], &[&[1, 1]]);
        assert!(validate_diagram(&d).ok());
    }

    #[test]
    fn s1xs3_passes() {
        let d = closed(1, 1, &[&[1, 0]], &[&[1, 0]], &[&[1, 0]]);
        assert!(validate_diagram(&d).ok());
    }

    #[test]
    fn dual_pair_in_one_family_breaks_isotropy() {
        let d = closed(1, 0, &[&[1, 0], &[0, 1]], &[&[0, 1]], &[&[1, 1]]);
        let report = validate_diagram(&d);
        assert!(report.has("ISOTROPY"));
        assert!(report.has("FAMILY_SIZE"));
    }

    #[test]
    fn wrong_k_is_a_cokernel_violation() {
        let d = closed(1, 1, &[&[1, 0]], &[&[0, 1]], &[&[1, 1]]);
        let report = validate_diagram(&d);
        assert_eq!(
            report.violations.iter().filter(|v| v.kind() == "PAIR_COKERNEL").count(),
            3
        );
    }

    #[test]
    fn torsion_is_rejected() {
        // α = 2a is not a cut curve; (α,β) quotient is Z/2.
        let d = closed(1, 0, &[&[2, 0]], &[&[0, 1]], &[&[1, 1]]);
        let report = validate_diagram(&d);
        assert!(report.has("PRIMITIVITY"));
        assert!(report.has("PAIR_COKERNEL"));
    }

    #[test]
    fn zero_curve_is_dependent() {
        let d = closed(1, 1, &[&[0, 0]], &[&[1, 0]], &[&[1, 0]]);
        assert!(validate_diagram(&d).has("INDEPENDENCE"));
    }

    #[test]
    fn window_failure_is_reported() {
        let d = Diagram::from_params("w", DiagramParams::relative(0, 5, 0, 2), vec![], vec![], vec![]).unwrap();
        let report = validate_diagram(&d);
        assert!(report.has("WINDOW"));
    }
}
