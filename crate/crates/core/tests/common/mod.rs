//! Independent oracles and generators shared by the integration tests.
//!
//! The oracles deliberately avoid the library's own algorithms: invariant
//! factors come from gcds of minors, inertia from the characteristic
//! polynomial and Descartes' rule of signs (exact for real-rooted
//! polynomials, which the characteristic polynomial of a symmetric matrix is).
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use trisect::catalog::{catalog_entries, catalog_get, CatalogEntry};
use trisect::diagram::{validate_diagram, Diagram, FamilyLabel, SlideSign};
use trisect::linalg::IntegerMatrix;
use trisect::ops::{cap_all, connected_sum};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Determinant by cofactor expansion.
pub fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Nonzero invariant factors from determinantal divisors `d_k = gcd(k×k minors)`.
pub fn oracle_invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let (r, c) = (a.rows(), a.cols());
    let mut divisors = vec![BigInt::one()];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in combinations(r, k) {
            for cols in combinations(c, k) {
                let m: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
                    .collect();
                g = g.gcd(&det_cofactor(&m));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Characteristic polynomial coefficients `c_0..c_n` of `det(xI − A)`
/// by Faddeev–LeVerrier.
pub fn char_poly(a: &IntegerMatrix) -> Vec<BigRational> {
    let n = a.rows();
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let am: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| q(a.get(i, j))).collect()).collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum()).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am_k = mul(&am, &m);
        let trace: BigRational = (0..n).map(|i| am_k[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k as i64));
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, negative)` eigenvalue counts of a symmetric integer matrix.
pub fn oracle_inertia(a: &IntegerMatrix) -> (usize, usize) {
    let c = char_poly(a);
    let pos = sign_changes(&c);
    let flipped: Vec<BigRational> = c
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() })
        .collect();
    (pos, sign_changes(&flipped))
}

pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntegerMatrix {
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            rows[0][0] = BigInt::from(-1);
        }
    } else {
        for _ in 0..steps {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let f = BigInt::from(rng.gen_range(-2i64..=2));
            let src = rows[j].clone();
            for (x, y) in rows[i].iter_mut().zip(&src) {
                *x += &f * y;
            }
            if rng.gen_ratio(1, 5) {
                rows.swap(i, j);
            }
        }
    }
    let entries = rows.into_iter().flatten().collect();
    IntegerMatrix::new(n, n, entries).unwrap()
}

/// Applies `count` random handleslides within families.
pub fn random_slides<R: Rng>(d: &Diagram, rng: &mut R, count: usize) -> Diagram {
    let mut out = d.clone();
    let size = d.params().family_size();
    if size < 2 {
        return out;
    }
    for _ in 0..count {
        let label = *FamilyLabel::ALL.choose(rng).unwrap();
        let i = rng.gen_range(0..size);
        let mut j = rng.gen_range(0..size);
        while j == i {
            j = rng.gen_range(0..size);
        }
        let sign = if rng.gen_bool(0.5) { SlideSign::Plus } else { SlideSign::Minus };
        out = out.slide(label, i, j, sign).unwrap();
    }
    out
}

pub fn closed_catalog() -> Vec<CatalogEntry> {
    catalog_entries().into_iter().filter(|e| e.diagram.is_closed()).collect()
}

pub fn page_zero_relative_catalog() -> Vec<CatalogEntry> {
    catalog_entries()
        .into_iter()
        .filter(|e| !e.diagram.is_closed() && e.diagram.params().p == 0)
        .collect()
}

pub fn entry(name: &str) -> Diagram {
    catalog_get(name).unwrap().diagram
}

/// A random valid closed diagram built from catalog pieces by sums, caps
/// and slides.
pub fn fuzz_closed<R: Rng>(rng: &mut R) -> Diagram {
    let closed = closed_catalog();
    let relative = page_zero_relative_catalog();
    let mut d = entry("S4");
    for _ in 0..rng.gen_range(1..=3) {
        let piece = if rng.gen_bool(0.5) {
            closed.choose(rng).unwrap().diagram.clone()
        } else {
            cap_all(&relative.choose(rng).unwrap().diagram).unwrap().0
        };
        if d.params().g + piece.params().g > 7 {
            break;
        }
        d = connected_sum(&d, &piece).unwrap();
    }
    let n = rng.gen_range(0..12);
    let d = random_slides(&d, rng, n);
    assert!(validate_diagram(&d).ok());
    d
}
