//! Built-in named diagrams.
//!
//! `EXACT` entries are determined by their parameters or are the standard
//! genus-per-summand closed diagrams. `RECONSTRUCTION` entries are
//! homology-level stand-ins for diagrams that are only available as
//! pictures: they have the right parameters, validate, have trivial `H₁`
//! where the manifold is contractible or simply connected, and cap to a
//! closed diagram with the expected invariants. Each carries its
//! obligations in [`CatalogEntry::expect`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::diagram::{CurveClass, Diagram, DiagramParams};
use crate::invariants::Parity;
use crate::ops::{hopf_piece, HopfSign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Exact,
    Reconstruction,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Exact => "EXACT",
            Provenance::Reconstruction => "RECONSTRUCTION",
        })
    }
}

/// Invariants the (capped) closed diagram must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expectation {
    /// `H₁` of the entry itself (before capping) is trivial.
    pub h1_trivial: bool,
    pub b2: usize,
    pub signature: i64,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub diagram: Diagram,
    pub provenance: Provenance,
    pub notes: String,
    pub expect: Option<Expectation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
}

pub const MAX_TRIVIAL_BOUNDARY: usize = 8;
pub const MAX_NCP2: usize = 256;

const FIXED: [&str; 16] = [
    "S4", "CP2", "CP2BAR", "S2xS2", "S1xS3", "D4", "DPLUS", "DMINUS", "S2xD2_A", "S2xD2_B",
    "E2_A", "E2_B", "CORK_A", "CORK_B", "W01_A", "W01_B",
];

/// Names of every concrete entry, in listing order.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = FIXED.iter().map(|s| s.to_string()).collect();
    names.extend((1..=MAX_TRIVIAL_BOUNDARY).map(|b| format!("TRIVIAL({b})")));
    names.extend((2..=8).map(|n| format!("NCP2({n})")));
    names
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    catalog_names()
        .iter()
        .map(|n| catalog_get(n).expect("listed names resolve"))
        .collect()
}

/// Index of symplectic basis vectors: `a(i)`, `b(i)` for 1-based handle `i`,
/// `c(j)` for boundary class `j`.
struct Basis {
    g: usize,
    len: usize,
}

impl Basis {
    fn new(g: usize, b: usize) -> Self {
        Self {
            g,
            len: 2 * g + b.saturating_sub(1),
        }
    }

    /// Builds a vector from `(coefficient, index)` terms.
    fn vec(&self, terms: &[(i64, usize)]) -> CurveClass {
        let mut v = vec![BigInt::zero(); self.len];
        for &(c, i) in terms {
            v[i] += c;
        }
        CurveClass::new(v)
    }

    fn a(&self, i: usize) -> usize {
        2 * (i - 1)
    }

    fn b(&self, i: usize) -> usize {
        2 * (i - 1) + 1
    }

    fn c(&self, j: usize) -> usize {
        2 * self.g + j - 1
    }
}

fn build(name: &str, params: DiagramParams, a: Vec<CurveClass>, b: Vec<CurveClass>, c: Vec<CurveClass>) -> Diagram {
    Diagram::from_params(name, params, a, b, c).expect("catalog data has consistent shapes")
}

/// Closed diagram with one symplectic pair per summand; `signs[i] = ±1`
/// gives `γ_i = a_i ± b_i`.
fn sum_of_projective_planes(name: &str, signs: &[i64]) -> Diagram {
    let g = signs.len();
    let s = Basis::new(g, 0);
    build(
        name,
        DiagramParams::closed(g, 0),
        (1..=g).map(|i| s.vec(&[(1, s.a(i))])).collect(),
        (1..=g).map(|i| s.vec(&[(1, s.b(i))])).collect(),
        (1..=g).map(|i| s.vec(&[(1, s.a(i)), (signs[i - 1], s.b(i))])).collect(),
    )
}

/// Relative `(g, b−1; 0, b)` diagram whose cap is the closed diagram with
/// `α_i = a_i`, `β_i = b_i` and the given `γ`; `γ_i` additionally gets
/// `+c_{lift[i]}` where `lift[i]` is set. The lifts are chosen so the
/// boundary classes are killed and `H₁` of the entry is trivial.
fn lifted(name: &str, g: usize, b: usize, gamma: &[Vec<(i64, usize)>], lift: &[Option<usize>]) -> Diagram {
    let s = Basis::new(g, b);
    let gamma = gamma
        .iter()
        .zip(lift)
        .map(|(terms, l)| {
            let mut t: Vec<(i64, usize)> = terms
                .iter()
                .map(|&(c, i)| (c, if i % 2 == 1 { s.a(i / 2 + 1) } else { s.b(i / 2) }))
                .collect();
            if let Some(j) = l {
                t.push((1, s.c(*j)));
            }
            s.vec(&t)
        })
        .collect();
    build(
        name,
        DiagramParams::relative(g, b - 1, 0, b),
        (1..=g).map(|i| s.vec(&[(1, s.a(i))])).collect(),
        (1..=g).map(|i| s.vec(&[(1, s.b(i))])).collect(),
        gamma,
    )
}

// Compact term notation for `lifted`: odd codes are `a_i` (code 2i−1),
// even codes are `b_i` (code 2i).
const fn ai(i: usize) -> usize {
    2 * i - 1
}

const fn bi(i: usize) -> usize {
    2 * i
}

fn entry(
    name: &str,
    diagram: Diagram,
    provenance: Provenance,
    notes: &str,
    expect: Option<Expectation>,
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        diagram: diagram.with_name(name),
        provenance,
        notes: notes.to_string(),
        expect,
    }
}

fn expect(b2: usize, signature: i64, parity: Parity) -> Option<Expectation> {
    Some(Expectation {
        h1_trivial: true,
        b2,
        signature,
        parity,
    })
}

fn parse_indexed(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner.trim().parse().ok()
}

/// Looks up an entry by name (case-insensitive). Besides the fixed names,
/// `TRIVIAL(b)` for `1 ≤ b ≤ 8` and `NCP2(n)` for `n ≤ 256` resolve.
pub fn catalog_get(name: &str) -> Result<CatalogEntry, CatalogError> {
    use Parity::{Even, Odd};
    use Provenance::{Exact, Reconstruction};
    let upper = name.trim().to_ascii_uppercase();
    let unknown = || CatalogError::UnknownName(name.to_string());

    if let Some(bc) = parse_indexed(&upper, "TRIVIAL") {
        if !(1..=MAX_TRIVIAL_BOUNDARY).contains(&bc) {
            return Err(unknown());
        }
        let d = build("", DiagramParams::relative(0, bc - 1, 0, bc), vec![], vec![], vec![]);
        return Ok(entry(
            &format!("TRIVIAL({bc})"),
            d,
            Exact,
            "planar surface with no curves; the boundary sum of b−1 copies of S1xD3, capping to S4",
            Some(Expectation {
                h1_trivial: bc == 1,
                b2: 0,
                signature: 0,
                parity: Even,
            }),
        ));
    }
    if let Some(n) = parse_indexed(&upper, "NCP2") {
        if n > MAX_NCP2 {
            return Err(unknown());
        }
        let d = sum_of_projective_planes("", &vec![1; n]);
        let parity = if n == 0 { Even } else { Odd };
        return Ok(entry(
            &format!("NCP2({n})"),
            d,
            Exact,
            "standard (n,0) diagram of the connected sum of n copies of CP2",
            expect(n, n as i64, parity),
        ));
    }

    let e = match upper.as_str() {
        "S4" => entry(
            "S4",
            build("", DiagramParams::closed(0, 0), vec![], vec![], vec![]),
            Exact,
            "genus-0 diagram of the 4-sphere",
            expect(0, 0, Even),
        ),
        "CP2" => entry("CP2", sum_of_projective_planes("", &[1]), Exact, "standard (1,0) diagram", expect(1, 1, Odd)),
        "CP2BAR" => entry(
            "CP2BAR",
            sum_of_projective_planes("", &[-1]),
            Exact,
            "standard (1,0) diagram of the orientation reversal of CP2",
            expect(1, -1, Odd),
        ),
        "S1XS3" => {
            let s = Basis::new(1, 0);
            let x = || vec![s.vec(&[(1, s.a(1))])];
            entry(
                "S1xS3",
                build("", DiagramParams::closed(1, 1), x(), x(), x()),
                Exact,
                "standard (1,1) diagram: the three curves coincide",
                Some(Expectation {
                    h1_trivial: false,
                    b2: 0,
                    signature: 0,
                    parity: Even,
                }),
            )
        }
        "S2XS2" => {
            let s = Basis::new(2, 0);
            entry(
                "S2xS2",
                build(
                    "",
                    DiagramParams::closed(2, 0),
                    vec![s.vec(&[(1, s.a(1))]), s.vec(&[(1, s.a(2))])],
                    vec![s.vec(&[(1, s.b(1))]), s.vec(&[(1, s.b(2))])],
                    vec![
                        s.vec(&[(1, s.a(1)), (1, s.b(2))]),
                        s.vec(&[(1, s.a(2)), (1, s.b(1))]),
                    ],
                ),
                Exact,
                "(2,0) diagram with γ = {a1+b2, a2+b1}; intersection form is the hyperbolic plane",
                expect(2, 0, Even),
            )
        }
        "D4" => entry(
            "D4",
            build("", DiagramParams::relative(0, 0, 0, 1), vec![], vec![], vec![]),
            Exact,
            "disk with no curves; caps to S4",
            expect(0, 0, Even),
        ),
        "DPLUS" => entry(
            "DPLUS",
            hopf_piece(HopfSign::Positive),
            Reconstruction,
            "(1,1;0,2) piece of D4 with α = a1, β = b1 + c1, γ = a1 + b1; H1 = 0 and the cap is the CP2 entry",
            expect(1, 1, Odd),
        ),
        "DMINUS" => entry(
            "DMINUS",
            hopf_piece(HopfSign::Negative),
            Reconstruction,
            "(1,1;0,2) piece of D4 with α = a1, β = b1 + c1, γ = a1 − b1; H1 = 0 and the cap is the CP2BAR entry",
            expect(1, -1, Odd),
        ),
        "S2XD2_A" => entry(
            "S2xD2_A",
            lifted("", 2, 2, &[vec![(1, ai(1)), (1, bi(2))], vec![(1, ai(2)), (1, bi(1))]], &[Some(1), None]),
            Reconstruction,
            "(2,1;0,2) stand-in for S2xD2 whose cap is S2xS2: b2 = 2, signature 0, even",
            expect(2, 0, Even),
        ),
        "S2XD2_B" => entry(
            "S2xD2_B",
            lifted("", 2, 2, &[vec![(1, ai(1)), (1, bi(1))], vec![(1, ai(2)), (-1, bi(2))]], &[Some(1), None]),
            Reconstruction,
            "(2,1;0,2) stand-in for S2xD2 whose cap is the twisted bundle CP2#CP2BAR: b2 = 2, signature 0, odd",
            expect(2, 0, Odd),
        ),
        "E2_A" => entry(
            "E2_A",
            lifted("", 2, 2, &[vec![(1, ai(1)), (1, bi(1))], vec![(1, ai(2)), (1, bi(2))]], &[Some(1), None]),
            Reconstruction,
            "(2,1;0,2) stand-in for the Euler number 2 disk bundle over S2 whose cap is 2CP2: b2 = 2, signature 2",
            expect(2, 2, Odd),
        ),
        "E2_B" => entry(
            "E2_B",
            lifted("", 2, 2, &[vec![(1, ai(1)), (1, bi(2))], vec![(1, ai(2)), (1, bi(1))]], &[None, Some(1)]),
            Reconstruction,
            "(2,1;0,2) stand-in for the Euler number 2 disk bundle over S2 whose cap is S2xS2: b2 = 2, signature 0",
            expect(2, 0, Even),
        ),
        "CORK_A" => entry(
            "CORK_A",
            lifted(
                "",
                3,
                4,
                &[
                    vec![(1, ai(1)), (-1, bi(1))],
                    vec![(1, ai(2)), (-1, bi(2))],
                    vec![(1, ai(3)), (-1, bi(3))],
                ],
                &[Some(1), Some(2), Some(3)],
            ),
            Reconstruction,
            "(3,3;0,4) stand-in for the contractible cork whose cap is the standard 3CP2BAR diagram: b2 = 3, signature −3",
            expect(3, -3, Odd),
        ),
        "CORK_B" => entry(
            "CORK_B",
            lifted(
                "",
                3,
                4,
                &[
                    vec![(1, ai(1)), (1, bi(1))],
                    vec![(1, ai(2)), (-1, bi(2))],
                    vec![(1, ai(3)), (-1, bi(3))],
                ],
                &[Some(1), Some(2), Some(3)],
            ),
            Reconstruction,
            "(3,3;0,4) stand-in for the contractible cork whose cap is CP2#2CP2BAR: b2 = 3, signature −1",
            expect(3, -1, Odd),
        ),
        "W01_A" => entry(
            "W01_A",
            lifted(
                "",
                3,
                4,
                &[
                    vec![(1, ai(1)), (1, bi(2))],
                    vec![(1, ai(2)), (1, bi(1))],
                    vec![(1, ai(3)), (-1, bi(3))],
                ],
                &[Some(1), Some(2), Some(3)],
            ),
            Reconstruction,
            "(3,3;0,4) stand-in for a contractible manifold with χ = 1; cap chosen as S2xS2#CP2BAR (b2 = 3, signature −1)",
            expect(3, -1, Odd),
        ),
        "W01_B" => {
            let s = Basis::new(3, 1);
            entry(
                "W01_B",
                build(
                    "",
                    DiagramParams::relative(3, 2, 1, 1),
                    vec![s.vec(&[(1, s.a(1))]), s.vec(&[(1, s.a(2))])],
                    vec![s.vec(&[(1, s.b(1))]), s.vec(&[(1, s.b(2))])],
                    vec![
                        s.vec(&[(1, s.a(3)), (1, s.b(1))]),
                        s.vec(&[(1, s.a(1)), (1, s.b(3))]),
                    ],
                ),
                Reconstruction,
                "(3,2;1,1) stand-in for the same manifold as W01_A (χ = 1, H1 = 0); page genus 1, so it cannot be capped",
                None,
            )
        }
        _ => return Err(unknown()),
    };
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::validate_diagram;

    #[test]
    fn every_entry_validates() {
        for e in catalog_entries() {
            let r = validate_diagram(&e.diagram);
            assert!(r.ok(), "{}: {:?}", e.name, r.violations);
            assert_eq!(e.diagram.name(), e.name);
        }
    }

    #[test]
    fn lookup_variants() {
        assert_eq!(catalog_get("cp2").unwrap().name, "CP2");
        assert_eq!(catalog_get("TRIVIAL(2)").unwrap().diagram.params(), DiagramParams::relative(0, 1, 0, 2));
        assert!(catalog_get("TRIVIAL(9)").is_err());
        assert!(catalog_get("TRIVIAL(0)").is_err());
        assert_eq!(catalog_get("NCP2(3)").unwrap().diagram.params(), DiagramParams::closed(3, 0));
        assert!(matches!(catalog_get("nope"), Err(CatalogError::UnknownName(_))));
    }

    #[test]
    fn stated_parameters_and_euler() {
        let p = |n: &str| catalog_get(n).unwrap().diagram.params();
        for n in ["S2xD2_A", "S2xD2_B", "E2_A", "E2_B"] {
            assert_eq!(p(n), DiagramParams::relative(2, 1, 0, 2));
            assert_eq!(p(n).euler_characteristic(), 2);
        }
        for n in ["CORK_A", "CORK_B", "W01_A"] {
            assert_eq!(p(n), DiagramParams::relative(3, 3, 0, 4));
        }
        assert_eq!(p("W01_B"), DiagramParams::relative(3, 2, 1, 1));
        assert_eq!(p("W01_A").euler_characteristic(), 1);
        assert_eq!(p("W01_B").euler_characteristic(), 1);
    }
}
