use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::sum::boundary_sum_unchecked;
use super::{transport, window_violation, OpsError};
use crate::diagram::{CurveClass, Diagram, DiagramParams, FamilyLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilizationKind {
    TypeI,
    TypeII,
}

impl StabilizationKind {
    /// Change of `(g, k, p, b)` under one stabilization.
    pub fn delta(self) -> [i64; 4] {
        match self {
            StabilizationKind::TypeI => [1, 1, 0, 1],
            StabilizationKind::TypeII => [2, 1, 1, -1],
        }
    }
}

impl fmt::Display for StabilizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilizationKind::TypeI => "I",
            StabilizationKind::TypeII => "II",
        })
    }
}

impl FromStr for StabilizationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" | "1" | "i" => Ok(StabilizationKind::TypeI),
            "II" | "2" | "ii" => Ok(StabilizationKind::TypeII),
            other => Err(format!("unknown stabilization type {other:?} (expected I or II)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Stabilize,
    Destabilize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StabilizationMove {
    pub kind: StabilizationKind,
    pub direction: Direction,
}

impl StabilizationMove {
    pub fn new(kind: StabilizationKind, direction: Direction) -> Self {
        Self { kind, direction }
    }

    pub fn delta(&self) -> [i64; 4] {
        let d = self.kind.delta();
        match self.direction {
            Direction::Stabilize => d,
            Direction::Destabilize => d.map(|x| -x),
        }
    }
}

/// Applies a stabilization or destabilization to relative parameters.
pub fn stabilize(params: DiagramParams, mv: StabilizationMove) -> Result<DiagramParams, OpsError> {
    if params.is_closed() {
        return Err(OpsError::NotRelative { operation: "stabilize" });
    }
    let cur = params.as_signed();
    let delta = mv.delta();
    let next = [0, 1, 2, 3].map(|i| cur[i] + delta[i]);
    let shown = format!("({},{};{},{})", next[0], next[1], next[2], next[3]);
    let out = DiagramParams::from_signed(next).ok_or_else(|| OpsError::WindowViolation {
        params: shown.clone(),
        detail: "negative entry".into(),
    })?;
    if out.b == 0 {
        return Err(OpsError::WindowViolation {
            params: shown,
            detail: "a relative trisection needs b ≥ 1".into(),
        });
    }
    out.check_window().map_err(|detail| window_violation(&out, detail))?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopfSign {
    Positive,
    Negative,
}

/// The `(1,1;0,2)` diagram on `Σ_{1,2}` with `α = a`, `β = b + c₁`,
/// `γ = a ± b`. Capping it gives the `±CP²` diagram.
pub fn hopf_piece(sign: HopfSign) -> Diagram {
    let s = match sign {
        HopfSign::Positive => 1,
        HopfSign::Negative => -1,
    };
    let name = match sign {
        HopfSign::Positive => "DPLUS",
        HopfSign::Negative => "DMINUS",
    };
    Diagram::from_params(
        name,
        DiagramParams::relative(1, 1, 0, 2),
        vec![CurveClass::from_i64(&[1, 0, 0])],
        vec![CurveClass::from_i64(&[0, 1, 1])],
        vec![CurveClass::from_i64(&[1, s, 0])],
    )
    .expect("fixed shape")
}

/// Stabilizes a diagram by one of the homology-level conventions below.
///
/// * Type I: boundary connected sum with the positive Hopf piece.
/// * Type II: two symplectic pairs `a′, b′, a″, b″` are appended and the
///   last boundary class `c_{b−1}` is identified with `a″` (two boundary
///   components join into one and the page gains a handle). Each family
///   gains one curve: `α′ = a′`, `β′ = b′`, `γ′ = a′ + b′`.
///
/// Destabilization needs to recognise a stabilized summand and is only
/// offered at the parameter level.
pub fn stabilize_diagram(d: &Diagram, mv: StabilizationMove) -> Result<Diagram, OpsError> {
    let params = stabilize(d.params(), mv)?;
    if mv.direction == Direction::Destabilize {
        return Err(OpsError::DiagramDestabilization);
    }
    match mv.kind {
        StabilizationKind::TypeI => {
            let out = boundary_sum_unchecked(d, &hopf_piece(HopfSign::Positive))?;
            Ok(out.with_name(format!("{}+I", d.name())))
        }
        StabilizationKind::TypeII => {
            let old = d.params();
            let sym = 2 * old.g;
            let nb = old.b - 1;
            let base = transport(d, format!("{}+II", d.name()), params, |v| {
                let mut out = v[..sym].to_vec();
                out.extend([BigInt::zero(), BigInt::zero()]);
                out.extend([v[sym + nb - 1].clone(), BigInt::zero()]);
                out.extend(v[sym..sym + nb - 1].iter().cloned());
                out
            })?;
            let len = base.surface().h1_rank();
            let unit = |i: usize, j: Option<usize>| {
                let mut v = vec![BigInt::zero(); len];
                v[i] = BigInt::from(1);
                if let Some(j) = j {
                    v[j] = BigInt::from(1);
                }
                CurveClass::new(v)
            };
            let (ap, bp) = (sym, sym + 1);
            let extra = [unit(ap, None), unit(bp, None), unit(ap, Some(bp))];
            let fams: Vec<Vec<CurveClass>> = FamilyLabel::ALL
                .iter()
                .zip(extra)
                .map(|(&l, e)| {
                    let mut m = base.family(l).members().to_vec();
                    m.push(e);
                    m
                })
                .collect();
            let [a, b, c]: [Vec<CurveClass>; 3] = fams.try_into().expect("three families");
            Ok(Diagram::from_params(base.name(), params, a, b, c)?)
        }
    }
}
