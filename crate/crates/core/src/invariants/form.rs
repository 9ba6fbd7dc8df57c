use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{first_homology, Definiteness, InvariantError, Parity};
use crate::diagram::{Diagram, FamilyLabel};
use crate::linalg::{
    column_span_basis, inertia, kernel_basis, rational_decompose, rank, smith_normal_form,
    solve_integral, IntegerMatrix,
};

/// The intersection form on `H₂(X)/torsion` with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub matrix: IntegerMatrix,
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
    pub definiteness: Definiteness,
}

impl FormReport {
    pub fn classify(matrix: IntegerMatrix) -> Self {
        let (pos, neg) = inertia(&matrix);
        let n = matrix.rows();
        let parity = if (0..n).all(|i| matrix.get(i, i).is_even()) {
            Parity::Even
        } else {
            Parity::Odd
        };
        let definiteness = match (pos, neg) {
            (0, 0) => Definiteness::Zero,
            (p, 0) if p == n => Definiteness::Positive,
            (0, q) if q == n => Definiteness::Negative,
            _ => Definiteness::Indefinite,
        };
        Self {
            matrix,
            rank: pos + neg,
            signature: pos as i64 - neg as i64,
            parity,
            definiteness,
        }
    }
}

fn inconsistent(msg: impl Into<String>) -> InvariantError {
    InvariantError::InternalInconsistency(msg.into())
}

/// Lattice of `u ∈ Z^{|γ|}` with `Γu` in the span of `others`, returned as
/// generators (not necessarily independent).
fn gamma_coefficients_into(
    dim: usize,
    gamma: &[Vec<BigInt>],
    others: &[Vec<BigInt>],
) -> Vec<Vec<BigInt>> {
    let mut cols = gamma.to_vec();
    cols.extend(others.iter().map(|v| v.iter().map(|x| -x).collect()));
    let m = IntegerMatrix::from_columns(dim, &cols).expect("consistent vector lengths");
    kernel_basis(&m)
        .into_iter()
        .map(|k| k[..gamma.len()].to_vec())
        .filter(|u| u.iter().any(|x| !x.is_zero()))
        .collect()
}

fn combine(gamma: &[Vec<BigInt>], u: &[BigInt], dim: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    for (g, c) in gamma.iter().zip(u) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(g) {
            *o += c * x;
        }
    }
    out
}

/// Computes `Q` on a basis of `H₂(X)/torsion` for a closed diagram.
///
/// Fails with `InternalInconsistency` if the torsion of the `H₂`
/// presentation differs from that of `H₁` or a pairing comes out
/// non-integral; both would mean the three spans do not come from a
/// trisection.
pub fn intersection_form(d: &Diagram) -> Result<FormReport, InvariantError> {
    if !d.is_closed() {
        return Err(InvariantError::NotClosed(d.name().to_string()));
    }
    let surface = d.surface();
    let dim = surface.h1_rank();
    let alpha = d.family(FamilyLabel::Alpha).vectors();
    let beta = d.family(FamilyLabel::Beta).vectors();
    let gamma = d.family(FamilyLabel::Gamma).vectors();
    let ng = gamma.len();

    // Everything below is expressed in coefficients with respect to γ.
    let mut alpha_beta = alpha.clone();
    alpha_beta.extend(beta.iter().cloned());
    let into_sum = gamma_coefficients_into(dim, &gamma, &alpha_beta);
    let into_alpha = gamma_coefficients_into(dim, &gamma, &alpha);
    let into_beta = gamma_coefficients_into(dim, &gamma, &beta);

    let numerator_basis = if into_sum.is_empty() {
        Vec::new()
    } else {
        column_span_basis(&IntegerMatrix::from_columns(ng, &into_sum).expect("lengths"))
    };
    let r = numerator_basis.len();
    let basis_matrix = IntegerMatrix::from_columns(ng, &numerator_basis).expect("lengths");

    let mut relation_coords = Vec::new();
    for u in into_alpha.iter().chain(&into_beta) {
        let c = solve_integral(&basis_matrix, u)
            .ok_or_else(|| inconsistent("intersection with L_α or L_β escapes L_γ ∩ (L_α+L_β)"))?;
        relation_coords.push(c);
    }
    let relations = IntegerMatrix::from_columns(r, &relation_coords).expect("lengths");
    let snf = smith_normal_form(&relations);
    let h2_torsion: Vec<BigInt> = snf
        .nonzero_factors()
        .iter()
        .filter(|x| *x != &BigInt::from(1))
        .cloned()
        .collect();
    let h1_torsion = first_homology(d).torsion;
    if h2_torsion != h1_torsion {
        return Err(inconsistent(format!(
            "torsion of H2 presentation {h2_torsion:?} differs from torsion of H1 {h1_torsion:?}"
        )));
    }

    // Free generators of the quotient, pushed back to H₁(Σ).
    let classes: Vec<Vec<BigInt>> = (snf.rank..r)
        .map(|i| {
            let w = snf.left_inv.column(i);
            let u = basis_matrix.mul_vec(&w);
            combine(&gamma, &u, dim)
        })
        .collect();

    let mut beta_parts = Vec::with_capacity(classes.len());
    for y in &classes {
        let (_, y_beta) = rational_decompose(y, &alpha, &beta)
            .map_err(|_| inconsistent("H2 class not in L_α + L_β"))?;
        beta_parts.push(y_beta);
    }

    let n = classes.len();
    let mut q = IntegerMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let value: BigRational = (0..surface.genus())
                .map(|h| {
                    let (a, b) = (2 * h, 2 * h + 1);
                    BigRational::from_integer(classes[i][a].clone()) * &beta_parts[j][b]
                        - BigRational::from_integer(classes[i][b].clone()) * &beta_parts[j][a]
                })
                .sum();
            if !value.is_integer() {
                return Err(inconsistent(format!("pairing Q({i},{j}) = {value} is not integral")));
            }
            q.set(i, j, value.to_integer());
        }
    }
    if !q.is_symmetric() {
        return Err(inconsistent(format!("intersection form {q} is not symmetric")));
    }
    let report = FormReport::classify(q);
    debug_assert_eq!(report.rank, rank(&report.matrix));
    Ok(report)
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
    fn cp2_form_is_plus_one() {
        // x = a + b = a + b with x_β = b, Q = ⟨a + b, b⟩ = 1
        let d = closed(1, 0, &[&[1, 0]], &[&[0, 1]], &[&[1, 1]]);
        let f = intersection_form(&d).unwrap();
        assert_eq!(f.matrix, IntegerMatrix::from_rows_i64(&[&[1]]));
        assert_eq!(f.signature, 1);
        assert_eq!(f.parity, Parity::Odd);
        assert_eq!(f.definiteness, Definiteness::Positive);
    }

    #[test]
    fn cp2bar_form_is_minus_one() {
        let d = closed(1, 0, &[&[1, 0]], &[&[0, 1]], &[&[1, -1]]);
        let f = intersection_form(&d).unwrap();
        assert_eq!(f.matrix, IntegerMatrix::from_rows_i64(&[&[-1]]));
        assert_eq!(f.definiteness, Definiteness::Negative);
    }

    #[test]
    fn s4_form_is_empty() {
        let d = closed(0, 0, &[], &[], &[]);
        let f = intersection_form(&d).unwrap();
        assert_eq!(f.rank, 0);
        assert_eq!(f.signature, 0);
        assert_eq!(f.parity, Parity::Even);
        assert_eq!(f.definiteness, Definiteness::Zero);
    }

    #[test]
    fn s2xs2_form_is_hyperbolic() {
        let d = closed(
            2,
            0,
            &[&[1, 0, 0, 0], &[0, 0, 1, 0]],
            &[&[0, 1, 0, 0], &[0, 0, 0, 1]],
            &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
        );
        let f = intersection_form(&d).unwrap();
        assert_eq!(f.matrix, IntegerMatrix::from_rows_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(f.parity, Parity::Even);
        assert_eq!(f.definiteness, Definiteness::Indefinite);
    }

    #[test]
    fn s1xs3_has_no_h2() {
        let d = closed(1, 1, &[&[1, 0]], &[&[1, 0]], &[&[1, 0]]);
        assert_eq!(intersection_form(&d).unwrap().rank, 0);
    }
}
