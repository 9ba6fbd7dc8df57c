use num_bigint::BigInt;
use num_traits::Zero;

use super::OpsError;
use crate::diagram::{CurveClass, Diagram, DiagramParams, FamilyLabel};

fn embed(d: &Diagram, len: usize, map: impl Fn(&[BigInt], &mut [BigInt])) -> [Vec<CurveClass>; 3] {
    FamilyLabel::ALL.map(|label| {
        d.family(label)
            .members()
            .iter()
            .map(|c| {
                let mut out = vec![BigInt::zero(); len];
                map(c.coords(), &mut out);
                CurveClass::new(out)
            })
            .collect()
    })
}

fn join(left: [Vec<CurveClass>; 3], right: [Vec<CurveClass>; 3]) -> [Vec<CurveClass>; 3] {
    let [la, lb, lc] = left;
    let [ra, rb, rc] = right;
    [[la, ra].concat(), [lb, rb].concat(), [lc, rc].concat()]
}

/// Interior connected sum. At most one summand may have boundary; the
/// result carries its boundary data.
///
/// The basis of the summed surface is the left symplectic block, then the
/// right symplectic block, then the boundary classes of the relative summand.
pub fn connected_sum(left: &Diagram, right: &Diagram) -> Result<Diagram, OpsError> {
    let (lp, rp) = (left.params(), right.params());
    if !lp.is_closed() && !rp.is_closed() {
        return Err(OpsError::TwoRelativeSummands);
    }
    let boundary = if lp.is_closed() { rp } else { lp };
    let params = DiagramParams::relative(lp.g + rp.g, lp.k + rp.k, boundary.p, boundary.b);
    let (ls, rs) = (2 * lp.g, 2 * rp.g);
    let nb = boundary.b.saturating_sub(1);
    let len = ls + rs + nb;
    let left_is_relative = !lp.is_closed();
    let l = embed(left, len, |v, out| {
        out[..ls].clone_from_slice(&v[..ls]);
        if left_is_relative {
            out[ls + rs..].clone_from_slice(&v[ls..]);
        }
    });
    let r = embed(right, len, |v, out| {
        out[ls..ls + rs].clone_from_slice(&v[..rs]);
        if !left_is_relative {
            out[ls + rs..].clone_from_slice(&v[rs..]);
        }
    });
    let [a, b, c] = join(l, r);
    Ok(Diagram::from_params(
        format!("{}#{}", left.name(), right.name()),
        params,
        a,
        b,
        c,
    )?)
}

/// Boundary connected sum without the page-genus check on the left summand.
/// Used by Type I stabilization, which plumbs a Hopf piece onto any page.
pub(crate) fn boundary_sum_unchecked(left: &Diagram, right: &Diagram) -> Result<Diagram, OpsError> {
    let (lp, rp) = (left.params(), right.params());
    for p in [lp, rp] {
        if p.is_closed() {
            return Err(OpsError::NotRelative {
                operation: "boundary_connected_sum",
            });
        }
    }
    let params = DiagramParams::relative(lp.g + rp.g, lp.k + rp.k, lp.p + rp.p, lp.b + rp.b - 1);
    let (ls, rs) = (2 * lp.g, 2 * rp.g);
    let (lnb, rnb) = (lp.b - 1, rp.b - 1);
    // Boundary block: L_1..L_{b−1}, then (if the right side has c_1) the
    // merged component M, then R_2..R_{b′−1}.
    let off = ls + rs;
    let len = off + lnb + rnb;
    let l = embed(left, len, |v, out| {
        out[..ls].clone_from_slice(&v[..ls]);
        out[off..off + lnb].clone_from_slice(&v[ls..]);
    });
    let r = embed(right, len, |v, out| {
        out[ls..off].clone_from_slice(&v[..rs]);
        if rnb > 0 {
            let t = &v[rs];
            for x in &mut out[off..off + lnb] {
                *x = t.clone();
            }
            out[off + lnb..].clone_from_slice(&v[rs..]);
        }
    });
    let [a, b, c] = join(l, r);
    Ok(Diagram::from_params(
        format!("{}♮{}", left.name(), right.name()),
        params,
        a,
        b,
        c,
    )?)
}

/// Boundary connected sum of two page-genus-zero relative diagrams.
///
/// Boundary component `b` of the left summand is merged with component 1
/// of the right. The result has parameters `(g+g′, k+k′; 0, b+b′−1)`.
pub fn boundary_connected_sum(left: &Diagram, right: &Diagram) -> Result<Diagram, OpsError> {
    for d in [left, right] {
        let p = d.params();
        if p.is_closed() {
            return Err(OpsError::NotRelative {
                operation: "boundary_connected_sum",
            });
        }
        if p.p != 0 {
            return Err(OpsError::PageGenusNonzero {
                operation: "boundary_connected_sum",
                p: p.p,
            });
        }
    }
    boundary_sum_unchecked(left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::validate_diagram;

    fn cp2() -> Diagram {
        Diagram::from_params(
            "CP2",
            DiagramParams::closed(1, 0),
            vec![CurveClass::from_i64(&[1, 0])],
            vec![CurveClass::from_i64(&[0, 1])],
            vec![CurveClass::from_i64(&[1, 1])],
        )
        .unwrap()
    }

    fn trivial(b: usize) -> Diagram {
        Diagram::from_params("T", DiagramParams::relative(0, b - 1, 0, b), vec![], vec![], vec![]).unwrap()
    }

    fn dplus() -> Diagram {
        Diagram::from_params(
            "D+",
            DiagramParams::relative(1, 1, 0, 2),
            vec![CurveClass::from_i64(&[1, 0, 0])],
            vec![CurveClass::from_i64(&[0, 1, 1])],
            vec![CurveClass::from_i64(&[1, 1, 0])],
        )
        .unwrap()
    }

    #[test]
    fn closed_sum_with_trivial() {
        let d = connected_sum(&cp2(), &trivial(2)).unwrap();
        assert_eq!(d.params(), DiagramParams::relative(1, 1, 0, 2));
        assert_eq!(d.alpha().members()[0], CurveClass::from_i64(&[1, 0, 0]));
        assert!(validate_diagram(&d).ok());
        assert_eq!(d.name(), "CP2#T");
    }

    #[test]
    fn relative_on_the_left() {
        let d = connected_sum(&dplus(), &cp2()).unwrap();
        assert_eq!(d.params(), DiagramParams::relative(2, 1, 0, 2));
        assert_eq!(d.beta().members()[0], CurveClass::from_i64(&[0, 1, 0, 0, 1]));
        assert_eq!(d.beta().members()[1], CurveClass::from_i64(&[0, 0, 0, 1, 0]));
        assert!(validate_diagram(&d).ok());
    }

    #[test]
    fn two_relative_rejected() {
        assert_eq!(connected_sum(&trivial(2), &trivial(2)), Err(OpsError::TwoRelativeSummands));
    }

    #[test]
    fn trivial_bsum_is_trivial() {
        let d = boundary_connected_sum(&trivial(2), &trivial(2)).unwrap();
        assert!(d.same_data(&trivial(3)));
    }

    #[test]
    fn bsum_with_hopf_piece_validates() {
        let d = boundary_connected_sum(&dplus(), &dplus()).unwrap();
        assert_eq!(d.params(), DiagramParams::relative(2, 2, 0, 3));
        // Right β = b' + c_1' with c_1' ↦ M + L_1.
        assert_eq!(d.beta().members()[1], CurveClass::from_i64(&[0, 0, 0, 1, 1, 1]));
        assert!(validate_diagram(&d).ok());
    }

    #[test]
    fn bsum_needs_page_zero() {
        let p1 = Diagram::from_params("p", DiagramParams::relative(2, 2, 1, 1), vec![], vec![], vec![]).unwrap();
        assert!(matches!(
            boundary_connected_sum(&p1, &trivial(2)),
            Err(OpsError::PageGenusNonzero { .. })
        ));
        assert!(matches!(
            boundary_connected_sum(&cp2(), &trivial(2)),
            Err(OpsError::NotRelative { .. })
        ));
    }
}
