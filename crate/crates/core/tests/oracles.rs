mod common;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use trisect::catalog::catalog_entries;
use trisect::diagram::{validate_diagram, FamilyLabel};
use trisect::invariants::{first_homology, intersection_form, invariant_report};
use trisect::linalg::{cokernel_invariants, inertia, smith_normal_form, IntegerMatrix};
use trisect::ops::{cap_all, cap_component, connected_sum};

fn random_matrix<R: Rng>(rng: &mut R, r: usize, c: usize) -> IntegerMatrix {
    let entries = (0..r * c).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
    IntegerMatrix::new(r, c, entries).unwrap()
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = random_matrix(&mut rng, r, c);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.nonzero_factors(), &oracle_invariant_factors(&a)[..], "{a}");
    }
}

#[test]
fn known_smith_forms() {
    let a = IntegerMatrix::from_rows_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let expected: Vec<BigInt> = [2, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(oracle_invariant_factors(&a), expected);
    assert_eq!(smith_normal_form(&a).nonzero_factors(), &expected[..]);
}

#[test]
fn inertia_matches_characteristic_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.gen_range(1..=5);
        let mut q = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = BigInt::from(rng.gen_range(-4i64..=4));
                q.set(i, j, x.clone());
                q.set(j, i, x);
            }
        }
        assert_eq!(inertia(&q), oracle_inertia(&q), "{q}");
    }
}

#[test]
fn cp2_first_homology_by_hand() {
    // Z^2 / <a, b, a+b> = 0
    let d = entry("CP2");
    let m = IntegerMatrix::from_rows_i64(&[&[1, 0, 1], &[0, 1, 1]]);
    assert!(oracle_invariant_factors(&m).iter().all(|x| x == &BigInt::from(1)));
    assert!(first_homology(&d).is_trivial());
    // S1xS3: Z^2 / <a> = Z
    let h = first_homology(&entry("S1xS3"));
    assert_eq!((h.free_rank, h.torsion.len()), (1, 0));
}

#[test]
fn pair_cokernels_match_oracle_on_catalog() {
    for e in catalog_entries() {
        let d = &e.diagram;
        let n = d.surface().h1_rank();
        for (x, y) in FamilyLabel::PAIRS {
            let mut cols = d.family(x).vectors();
            cols.extend(d.family(y).vectors());
            let m = IntegerMatrix::from_columns(n, &cols).unwrap();
            if m.cols() > 6 || n > 8 {
                continue;
            }
            let oracle = oracle_invariant_factors(&m);
            let coker = cokernel_invariants(&m);
            assert_eq!(coker.free_rank, n - oracle.len(), "{}", e.name);
            assert!(oracle.iter().all(|x| x == &BigInt::from(1)), "{}", e.name);
        }
    }
}

#[test]
fn forms_are_unimodular_and_match_oracle_inertia() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut diagrams: Vec<_> = closed_catalog().into_iter().map(|e| e.diagram).collect();
    diagrams.extend(page_zero_relative_catalog().iter().map(|e| cap_all(&e.diagram).unwrap().0));
    diagrams.extend((0..40).map(|_| fuzz_closed(&mut rng)));
    for d in diagrams {
        let f = intersection_form(&d).unwrap();
        if f.matrix.rows() > 0 {
            assert_eq!(f.matrix.determinant().abs(), BigInt::from(1), "{}: {}", d.name(), f.matrix);
        }
        let (p, n) = oracle_inertia(&f.matrix);
        assert_eq!(f.signature, p as i64 - n as i64, "{}", d.name());
        assert_eq!(f.rank, p + n);
    }
}

#[test]
fn s2xs2_form_is_even_unimodular_rank_two() {
    let f = intersection_form(&entry("S2xS2")).unwrap();
    assert_eq!(f.matrix.rows(), 2);
    assert_eq!(f.matrix.determinant(), BigInt::from(-1));
    assert!((0..2).all(|i| f.matrix.get(i, i) % 2 == BigInt::from(0)));
}

#[test]
fn dplus_caps_to_cp2_by_either_route() {
    for (rel, closed) in [("DPLUS", "CP2"), ("DMINUS", "CP2BAR")] {
        let d = entry(rel);
        let via_component = cap_component(&d, 2).unwrap();
        let s = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(via_component.alpha().vectors(), vec![s(&[1, 0])]);
        assert_eq!(via_component.beta().vectors(), vec![s(&[0, 1])]);
        let (c, _) = cap_all(&via_component).unwrap();
        assert!(c.same_data(&entry(closed)), "{rel}");
        let (c2, _) = cap_all(&d).unwrap();
        assert!(c2.same_data(&entry(closed)));
    }
}

#[test]
fn connected_sum_block_structure() {
    // Oracle: the sum of CP2 and CP2BAR is the block diagram by construction.
    let d = connected_sum(&entry("CP2"), &entry("CP2BAR")).unwrap();
    let s = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(d.gamma().vectors(), vec![s(&[1, 1, 0, 0]), s(&[0, 0, 1, -1])]);
    assert!(validate_diagram(&d).ok());
    let r = invariant_report(&d).unwrap();
    assert_eq!((r.b2, r.signature), (2, 0));
}
