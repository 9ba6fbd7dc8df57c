use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::IntegerMatrix;

/// First homology of `Σ_{g,b}` with its intersection pairing.
///
/// Basis order is `a_1, b_1, …, a_g, b_g, c_1, …, c_{b-1}`. The last boundary
/// class is not a basis element: `c_b = −(c_1 + … + c_{b-1})`. Boundary classes
/// lie in the radical of the pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    genus: usize,
    boundary_count: usize,
}

impl SurfaceModel {
    pub fn new(genus: usize, boundary_count: usize) -> Self {
        Self { genus, boundary_count }
    }

    pub fn closed(genus: usize) -> Self {
        Self::new(genus, 0)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count == 0
    }

    /// Number of explicit boundary coordinates, `max(b − 1, 0)`.
    pub fn boundary_rank(&self) -> usize {
        self.boundary_count.saturating_sub(1)
    }

    pub fn symplectic_rank(&self) -> usize {
        2 * self.genus
    }

    pub fn h1_rank(&self) -> usize {
        self.symplectic_rank() + self.boundary_rank()
    }

    /// ⟨x, y⟩ with ⟨a_i, b_i⟩ = 1 = −⟨b_i, a_i⟩.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        debug_assert_eq!(x.len(), self.h1_rank());
        debug_assert_eq!(y.len(), self.h1_rank());
        (0..self.genus)
            .map(|i| &x[2 * i] * &y[2 * i + 1] - &x[2 * i + 1] * &y[2 * i])
            .sum()
    }

    pub fn pairing_matrix(&self) -> IntegerMatrix {
        let n = self.h1_rank();
        let mut j = IntegerMatrix::zeros(n, n);
        for i in 0..self.genus {
            j.set(2 * i, 2 * i + 1, BigInt::from(1));
            j.set(2 * i + 1, 2 * i, BigInt::from(-1));
        }
        j
    }

    /// Homology class of boundary component `component` (1-based).
    pub fn boundary_class(&self, component: usize) -> Option<Vec<BigInt>> {
        if component == 0 || component > self.boundary_count {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.h1_rank()];
        let offset = self.symplectic_rank();
        if component < self.boundary_count {
            v[offset + component - 1] = BigInt::from(1);
        } else {
            for x in v[offset..].iter_mut() {
                *x = BigInt::from(-1);
            }
        }
        Some(v)
    }

    /// Coordinate vector of a single basis element: `a_i` (`which = 0`) or
    /// `b_i` (`which = 1`), 1-based handle index.
    pub fn symplectic_class(&self, handle: usize, which: usize) -> Vec<BigInt> {
        assert!(handle >= 1 && handle <= self.genus && which < 2);
        let mut v = vec![BigInt::zero(); self.h1_rank()];
        v[2 * (handle - 1) + which] = BigInt::from(1);
        v
    }
}
