mod common;

use a1weyl::{
    enumerate_roots, height, height_radical, is_negative, is_positive, pi0_coordinates,
    LatticeVector, RootVector,
};
use common::*;
use proptest::prelude::*;

/// Brute force over the `(k, σ)` box `|σ_i| ≤ H`, independent of the
/// `Π₀`-coordinate box used by `enumerate_roots`.
fn scan(nullity: usize, h: i64) -> Vec<RootVector> {
    let side = (2 * h + 1) as usize;
    let mut out = Vec::new();
    for idx in 0..side.pow(nullity as u32) {
        let mut rest = idx;
        let s: Vec<i64> = (0..nullity)
            .map(|_| {
                let c = (rest % side) as i64 - h;
                rest /= side;
                c
            })
            .collect();
        for k in -1..=1 {
            let r = RootVector::from_parts(k, &s).unwrap();
            if height(&r).unwrap().abs() <= h {
                out.push(r);
            }
        }
    }
    out.sort();
    out
}

/// Nonzero isotropic roots with `m⁺ = |m⁻|`, where the height is not odd
/// under negation.
fn balanced_isotropic(r: &RootVector) -> bool {
    let (p, m) = a1weyl::m_plus_minus(r.sigma()).unwrap();
    r.is_isotropic() && !r.is_zero() && p == -m
}

#[test]
fn balanced_isotropic_heights() {
    let a = RootVector::from_parts(0, &[1, -1]).unwrap();
    let b = RootVector::from_parts(0, &[-1, 1]).unwrap();
    assert_eq!(height(&a).unwrap(), 2);
    assert_eq!(height(&b).unwrap(), 2);
    assert!(is_positive(&a).unwrap() && is_positive(&b).unwrap());
}

#[test]
fn enumeration_matches_scan() {
    for nullity in 1..=3 {
        for h in 0..=5 {
            let mut got = enumerate_roots(nullity, h as u64).unwrap();
            got.sort();
            assert_eq!(got, scan(nullity, h), "nullity {nullity}, height {h}");
        }
    }
}

#[test]
fn coordinate_norm_parity_and_sign() {
    for nullity in 1..=3 {
        let roots = enumerate_roots(nullity, 7).unwrap();
        let mut positives = 0;
        let mut negatives = 0;
        for r in &roots {
            let h = height(r).unwrap();
            let l1: i64 = pi0_coordinates(r).unwrap().iter().map(|c| c.abs()).sum();
            assert_eq!(l1, h.abs(), "{r}");
            assert_eq!(l1 % 2 == 1, !r.is_isotropic(), "{r}");
            if r.is_zero() {
                assert_eq!(h, 0);
                assert!(is_positive(r).is_err());
                continue;
            }
            assert_ne!(h, 0, "{r}");
            let neg = r.checked_neg().unwrap();
            let pos = is_positive(r).unwrap();
            assert_eq!(pos, h > 0, "{r}");
            assert!(pos ^ is_negative(r).unwrap());
            if balanced_isotropic(r) {
                // both σ and −σ have height 2m⁺ > 0
                assert_eq!(height(&neg).unwrap(), h);
                assert!(pos && is_positive(&neg).unwrap());
            } else {
                assert_eq!(height(&neg).unwrap(), -h);
                assert_eq!(pos, is_negative(&neg).unwrap());
            }
            if pos {
                positives += 1;
            } else {
                negatives += 1;
            }
        }
        let balanced = roots
            .iter()
            .filter(|r| !r.is_zero() && balanced_isotropic(r))
            .count();
        assert_eq!(positives, negatives + balanced);
        assert_eq!(positives + negatives + 1, roots.len());
    }
}

#[test]
fn height_one_roots_are_the_fundamental_basis() {
    for nullity in 1..=3 {
        let ones: Vec<_> = enumerate_roots(nullity, 1)
            .unwrap()
            .into_iter()
            .filter(|r| height(r).unwrap() == 1)
            .collect();
        let basis = a1weyl::fundamental_basis(nullity).unwrap();
        assert_eq!(ones.len(), nullity + 1);
        for r in basis.iter() {
            assert!(ones.contains(r));
        }
    }
}

proptest! {
    #[test]
    fn weyl_orbit_stays_in_root_system(w in element(3, 30), alpha in root(3, 30)) {
        let image = w.act(&alpha)?;
        prop_assert!((-1..=1).contains(&image.k()));
        prop_assert_eq!(image.is_isotropic(), alpha.is_isotropic());
        if alpha.is_isotropic() {
            prop_assert_eq!(image, alpha);
        }
    }

    #[test]
    fn radical_height_is_coordinate_norm(sigma in lattice(4, 40)) {
        let coords = pi0_coordinates(&RootVector::isotropic(sigma.clone()))?;
        let l1: i64 = coords.iter().map(|c| c.abs()).sum();
        prop_assert_eq!(height_radical(&sigma)?.abs(), l1);
    }

    #[test]
    fn height_antisymmetric(alpha in root(4, 40)) {
        prop_assume!(!balanced_isotropic(&alpha));
        prop_assert_eq!(height(&alpha.checked_neg()?)?, -height(&alpha)?);
    }
}

#[test]
fn radical_height_overflow_is_an_error() {
    let v = LatticeVector::new(vec![i64::MAX]).unwrap();
    assert_eq!(height_radical(&v), Err(a1weyl::Error::Overflow));
}
