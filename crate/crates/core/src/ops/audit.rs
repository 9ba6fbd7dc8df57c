use crate::diagram::DiagramParams;

/// Counts of relative (de)stabilizations: `l` for Type I, `m` for Type II.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveSequence {
    pub l_plus: usize,
    pub l_minus: usize,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl MoveSequence {
    /// Net change of `(g, k, p, b)` predicted by the counts.
    pub fn predicted_delta(&self) -> [i64; 4] {
        let l = self.l_plus as i64 - self.l_minus as i64;
        let m = self.m_plus as i64 - self.m_minus as i64;
        [l + 2 * m, l + m, m, l - m]
    }
}

/// One row of the linear system: `observed = predicted`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveEquation {
    pub quantity: &'static str,
    pub observed: i64,
    pub predicted: i64,
}

impl MoveEquation {
    pub fn holds(&self) -> bool {
        self.observed == self.predicted
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveAudit {
    pub start: DiagramParams,
    pub end: DiagramParams,
    pub sequence: MoveSequence,
    pub equations: Vec<MoveEquation>,
    /// All four equations hold.
    pub consistent: bool,
    /// `1 − b − 3p` from the start parameters, when the end is `(g′,k′;0,1)`.
    pub defect: Option<i64>,
    /// Whether the observed `g′ − g` equals the defect.
    pub defect_matches: Option<bool>,
}

/// Checks the four equations relating a move sequence to the change in
/// parameters, and the genus defect for sequences ending at `(·,·;0,1)`.
pub fn audit_move_sequence(start: DiagramParams, seq: MoveSequence, end: DiagramParams) -> MoveAudit {
    let s = start.as_signed();
    let e = end.as_signed();
    let predicted = seq.predicted_delta();
    let equations: Vec<MoveEquation> = ["g", "k", "p", "b"]
        .iter()
        .enumerate()
        .map(|(i, &quantity)| MoveEquation {
            quantity,
            observed: e[i] - s[i],
            predicted: predicted[i],
        })
        .collect();
    let consistent = equations.iter().all(MoveEquation::holds);
    let defect = (!start.is_closed() && end.p == 0 && end.b == 1)
        .then(|| 1 - start.b as i64 - 3 * start.p as i64);
    let defect_matches = defect.map(|d| d == e[0] - s[0]);
    MoveAudit {
        start,
        end,
        sequence: seq,
        equations,
        consistent,
        defect,
        defect_matches,
    }
}

/// Euler-characteristic check of a claimed parameter tuple for a sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerAudit {
    pub operation: &'static str,
    /// χ forced by the summands.
    pub expected_euler: i64,
    /// Parameters produced by the implemented rule.
    pub implemented: DiagramParams,
    pub implemented_euler: i64,
    pub claimed: Option<DiagramParams>,
    pub claimed_euler: Option<i64>,
}

impl EulerAudit {
    pub fn implemented_passes(&self) -> bool {
        self.implemented_euler == self.expected_euler
    }

    /// `None` when no claim was supplied.
    pub fn claim_passes(&self) -> Option<bool> {
        self.claimed_euler.map(|c| c == self.expected_euler)
    }
}

fn euler_audit(
    operation: &'static str,
    expected_euler: i64,
    implemented: DiagramParams,
    claimed: Option<DiagramParams>,
) -> EulerAudit {
    EulerAudit {
        operation,
        expected_euler,
        implemented,
        implemented_euler: implemented.euler_characteristic(),
        claimed,
        claimed_euler: claimed.map(|c| c.euler_characteristic()),
    }
}

/// `χ(X # Y) = χ(X) + χ(Y) − 2`. The implemented rule is
/// `(g+g′, k+k′; p, b)` with the boundary data of the relative summand.
pub fn audit_connected_sum_claim(
    left: DiagramParams,
    right: DiagramParams,
    claimed: Option<DiagramParams>,
) -> EulerAudit {
    let boundary = if left.is_closed() { right } else { left };
    let implemented = DiagramParams::relative(left.g + right.g, left.k + right.k, boundary.p, boundary.b);
    let expected = left.euler_characteristic() + right.euler_characteristic() - 2;
    euler_audit("connected_sum", expected, implemented, claimed)
}

/// `χ(W ♮ W′) = χ(W) + χ(W′) − 1`. The implemented rule is
/// `(g+g′, k+k′; 0, b+b′−1)`.
pub fn audit_boundary_sum_claim(
    left: DiagramParams,
    right: DiagramParams,
    claimed: Option<DiagramParams>,
) -> EulerAudit {
    let implemented = DiagramParams::relative(
        left.g + right.g,
        left.k + right.k,
        left.p + right.p,
        (left.b + right.b).saturating_sub(1),
    );
    let expected = left.euler_characteristic() + right.euler_characteristic() - 1;
    euler_audit("boundary_connected_sum", expected, implemented, claimed)
}
