use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntegerMatrix, LinalgError};

pub type RationalVector = Vec<BigRational>;

fn to_rational(v: &[BigInt]) -> RationalVector {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Reduced row echelon form of an augmented rational system. Returns the
/// reduced rows and the pivot column of each nonzero row.
fn rref(mut rows: Vec<RationalVector>, ncols: usize) -> (Vec<RationalVector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..rows[i].len() {
                let delta = &f * &rows[r][j];
                rows[i][j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (rows, pivots)
}

/// Rank over the rationals.
pub fn rational_rank(a: &IntegerMatrix) -> usize {
    let rows = (0..a.rows()).map(|i| to_rational(a.row(i))).collect();
    rref(rows, a.cols()).1.len()
}

/// Solves `A x = y` over Q. Free variables are set to zero, which makes the
/// answer a deterministic function of `(A, y)`. `None` if inconsistent.
pub fn solve_rational(a: &IntegerMatrix, y: &[BigInt]) -> Option<RationalVector> {
    assert_eq!(a.rows(), y.len(), "right-hand side has wrong length");
    let n = a.cols();
    let rows: Vec<RationalVector> = (0..a.rows())
        .map(|i| {
            let mut row = to_rational(a.row(i));
            row.push(BigRational::from_integer(y[i].clone()));
            row
        })
        .collect();
    let (reduced, pivots) = rref(rows, n);
    if reduced
        .iter()
        .skip(pivots.len())
        .any(|row| !row[n].is_zero())
    {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &c) in reduced.iter().zip(&pivots) {
        x[c] = row[n].clone();
    }
    Some(x)
}

/// Solves `A x = y` and insists on an integral answer.
pub fn solve_integral(a: &IntegerMatrix, y: &[BigInt]) -> Option<Vec<BigInt>> {
    let x = solve_rational(a, y)?;
    x.into_iter()
        .map(|q| q.is_integer().then(|| q.to_integer()))
        .collect()
}

/// Splits `y` as `y_a + y_b` with `y_a` in the rational span of `basis_a`
/// and `y_b` in that of `basis_b`. The coefficient system
/// `[basis_a | basis_b] (s, t) = y` is solved with free variables set to
/// zero, so overlaps between the spans are resolved in favour of `basis_a`.
pub fn rational_decompose(
    y: &[BigInt],
    basis_a: &[Vec<BigInt>],
    basis_b: &[Vec<BigInt>],
) -> Result<(RationalVector, RationalVector), LinalgError> {
    let dim = y.len();
    let columns: Vec<Vec<BigInt>> = basis_a.iter().chain(basis_b).cloned().collect();
    let m = IntegerMatrix::from_columns(dim, &columns)?;
    let coeffs = solve_rational(&m, y).ok_or(LinalgError::NotInSpan)?;
    let combine = |vectors: &[Vec<BigInt>], cs: &[BigRational]| -> RationalVector {
        let mut out = vec![BigRational::zero(); dim];
        for (v, c) in vectors.iter().zip(cs) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * BigRational::from_integer(x.clone());
            }
        }
        out
    };
    let (ca, cb) = coeffs.split_at(basis_a.len());
    Ok((combine(basis_a, ca), combine(basis_b, cb)))
}

/// Diagonal of a rational congruence diagonalization `Pᵀ Q P = D` of a
/// symmetric integer matrix. The number of positive and negative entries is
/// the inertia of `Q`.
pub fn congruence_diagonal(q: &IntegerMatrix) -> RationalVector {
    assert!(q.is_symmetric(), "congruence diagonalization needs a symmetric matrix");
    let n = q.rows();
    let mut a: Vec<RationalVector> = (0..n).map(|i| to_rational(q.row(i))).collect();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                // symmetric swap of k and j
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // x_k <- x_k + x_j makes the pivot 2 a_kj (a_jj = a_kk = 0)
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            }
        }
        let p = a[k][k].clone();
        if !p.is_zero() {
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &p;
                for c in k..n {
                    let delta = &f * &a[k][c];
                    a[i][c] -= delta;
                }
                for row in a.iter_mut().skip(k) {
                    let delta = &f * &row[k];
                    row[i] -= delta;
                }
            }
        }
        diag.push(p);
    }
    diag
}

/// `(positive, negative)` counts of a symmetric integer matrix.
pub fn inertia(q: &IntegerMatrix) -> (usize, usize) {
    let d = congruence_diagonal(q);
    let pos = d.iter().filter(|x| x.is_positive()).count();
    let neg = d.iter().filter(|x| x.is_negative()).count();
    (pos, neg)
}
