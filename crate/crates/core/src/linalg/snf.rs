use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// Smith normal form `left · A · right = diag(d)` together with the inverse
/// transforms, which the lattice routines need to read off quotient bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal entries, `min(rows, cols)` of them, nonnegative, each nonzero
    /// entry dividing the next; zeros trail.
    pub d: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
    pub left_inv: IntegerMatrix,
    pub right_inv: IntegerMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// The nonzero invariant factors.
    pub fn nonzero_factors(&self) -> &[BigInt] {
        &self.d[..self.rank]
    }
}

struct Reduction {
    w: IntegerMatrix,
    left: IntegerMatrix,
    left_inv: IntegerMatrix,
    right: IntegerMatrix,
    right_inv: IntegerMatrix,
}

impl Reduction {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        self.left.swap_rows(a, b);
        self.left_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.w.swap_cols(a, b);
        self.right.swap_cols(a, b);
        self.right_inv.swap_rows(a, b);
    }

    // row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.w.add_row_multiple(dst, src, q);
        self.left.add_row_multiple(dst, src, q);
        self.left_inv.add_col_multiple(src, dst, &-q);
    }

    // col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.w.add_col_multiple(dst, src, q);
        self.right.add_col_multiple(dst, src, q);
        self.right_inv.add_row_multiple(src, dst, &-q);
    }

    fn negate_row(&mut self, r: usize) {
        self.w.negate_row(r);
        self.left.negate_row(r);
        self.left_inv.negate_col(r);
    }

    /// Smallest nonzero |entry| in the trailing submatrix starting at (t, t),
    /// first in row-major order on ties.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.w.rows() {
            for j in t..self.w.cols() {
                let v = self.w.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn smallest_in_col(&self, t: usize) -> Option<usize> {
        (t..self.w.rows())
            .filter(|&i| !self.w.get(i, t).is_zero())
            .min_by(|&a, &b| self.w.get(a, t).abs().cmp(&self.w.get(b, t).abs()))
    }

    fn smallest_in_row(&self, t: usize) -> Option<usize> {
        (t..self.w.cols())
            .filter(|&j| !self.w.get(t, j).is_zero())
            .min_by(|&a, &b| self.w.get(t, a).abs().cmp(&self.w.get(t, b).abs()))
    }

    /// Clears row and column `t` and enforces divisibility of the trailing block.
    fn settle(&mut self, t: usize) {
        let (m, n) = (self.w.rows(), self.w.cols());
        loop {
            let p = self.w.get(t, t).clone();
            let mut residue = false;
            for i in t + 1..m {
                if self.w.get(i, t).is_zero() {
                    continue;
                }
                let q = self.w.get(i, t) / &p;
                self.add_row(i, t, &-q);
                residue |= !self.w.get(i, t).is_zero();
            }
            if residue {
                let i = self.smallest_in_col(t).expect("nonzero column");
                self.swap_rows(t, i);
                continue;
            }
            for j in t + 1..n {
                if self.w.get(t, j).is_zero() {
                    continue;
                }
                let q = self.w.get(t, j) / &p;
                self.add_col(j, t, &-q);
                residue |= !self.w.get(t, j).is_zero();
            }
            if residue {
                let j = self.smallest_in_row(t).expect("nonzero row");
                self.swap_cols(t, j);
                continue;
            }
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !(self.w.get(i, j) % &p).is_zero())
            });
            match offender {
                Some(i) => self.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if self.w.get(t, t).is_negative() {
            self.negate_row(t);
        }
    }
}

/// Smith normal form with deterministic pivoting: at every stage the pivot
/// is the smallest nonzero entry of the remaining block, ties broken in
/// row-major order.
pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reduction {
        w: a.clone(),
        left: IntegerMatrix::identity(m),
        left_inv: IntegerMatrix::identity(m),
        right: IntegerMatrix::identity(n),
        right_inv: IntegerMatrix::identity(n),
    };
    let mut rank = 0;
    while rank < m.min(n) {
        let Some((i, j)) = r.pivot(rank) else { break };
        r.swap_rows(rank, i);
        r.swap_cols(rank, j);
        r.settle(rank);
        rank += 1;
    }
    let d = (0..m.min(n)).map(|i| r.w.get(i, i).clone()).collect();
    SnfResult {
        d,
        left: r.left,
        right: r.right,
        left_inv: r.left_inv,
        right_inv: r.right_inv,
        rank,
    }
}

/// Free rank and torsion of `Z^rows / (column span of A)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cokernel {
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl Cokernel {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

pub fn cokernel_invariants(a: &IntegerMatrix) -> Cokernel {
    cokernel_from_snf(a.rows(), &smith_normal_form(a))
}

pub(crate) fn cokernel_from_snf(rows: usize, snf: &SnfResult) -> Cokernel {
    Cokernel {
        free_rank: rows - snf.rank,
        torsion: snf
            .nonzero_factors()
            .iter()
            .filter(|x| !x.is_one())
            .cloned()
            .collect(),
    }
}

/// A Z-basis of the integer kernel `{x : A x = 0}`.
pub fn kernel_basis(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank..a.cols()).map(|j| snf.right.column(j)).collect()
}

/// A Z-basis of the lattice spanned by the columns of `a`.
pub fn column_span_basis(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (0..snf.rank)
        .map(|i| {
            snf.left_inv
                .column(i)
                .into_iter()
                .map(|x| x * &snf.d[i])
                .collect()
        })
        .collect()
}

pub fn rank(a: &IntegerMatrix) -> usize {
    smith_normal_form(a).rank
}
