use num_bigint::BigInt;
use num_traits::Zero;

use super::{transport, OpsError};
use crate::diagram::{Diagram, DiagramParams};

/// Handles attached when a relative diagram is capped off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleSummary {
    pub two_handle_count: usize,
    pub four_handle_count: usize,
    /// Boundary classes along which the 2-handles are attached, as vectors
    /// in `H₁` of the uncapped surface.
    pub attaching_classes: Vec<Vec<BigInt>>,
}

fn require_page_zero(d: &Diagram, operation: &'static str) -> Result<DiagramParams, OpsError> {
    let params = d.params();
    if params.is_closed() {
        return Err(OpsError::NotRelative { operation });
    }
    if params.p != 0 {
        return Err(OpsError::PageGenusNonzero { operation, p: params.p });
    }
    Ok(params)
}

/// Glues a disk to boundary component `component` (1-based).
///
/// For `component < b` the class `c_component` is dropped. For the last
/// component, `c_b = 0` forces `c_{b−1} = −(c_1 + … + c_{b−2})`, which is
/// substituted before dropping `c_{b−1}`.
pub fn cap_component(d: &Diagram, component: usize) -> Result<Diagram, OpsError> {
    let params = require_page_zero(d, "cap_component")?;
    if params.b == 1 {
        return Err(OpsError::LastBoundary);
    }
    if component == 0 || component > params.b {
        return Err(OpsError::BadIndex {
            component,
            boundary_count: params.b,
        });
    }
    let sym = 2 * params.g;
    let nb = params.b - 1;
    let out_params = DiagramParams::relative(params.g, params.k - 1, 0, params.b - 1);
    transport(d, d.name().to_string(), out_params, |v| {
        let mut out = v[..sym].to_vec();
        if component < params.b {
            out.extend(
                (0..nb)
                    .filter(|&j| j != component - 1)
                    .map(|j| v[sym + j].clone()),
            );
        } else {
            let t = &v[sym + nb - 1];
            out.extend((0..nb - 1).map(|j| &v[sym + j] - t));
        }
        out
    })
}

/// Caps every boundary component, producing a closed `(g, k − b + 1)`
/// diagram. Requires page genus zero: otherwise each family has only
/// `g − p` curves and cannot be a closed cut system.
pub fn cap_all(d: &Diagram) -> Result<(Diagram, HandleSummary), OpsError> {
    let params = require_page_zero(d, "cap_all")?;
    let sym = 2 * params.g;
    let nb = params.b - 1;
    let attaching_classes = (0..nb)
        .map(|i| {
            let mut v = vec![BigInt::zero(); sym + nb];
            v[sym + i] = BigInt::from(1);
            v
        })
        .collect();
    let out_params = DiagramParams::closed(params.g, params.k + 1 - params.b);
    let capped = transport(d, d.name().to_string(), out_params, |v| v[..sym].to_vec())?;
    Ok((
        capped,
        HandleSummary {
            two_handle_count: nb,
            four_handle_count: 1,
            attaching_classes,
        },
    ))
}
