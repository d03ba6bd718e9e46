#![allow(dead_code)]

use a1weyl::{LatticeVector, Parity, RootVector, WeylElement};
use proptest::prelude::*;

pub fn lattice(nullity: usize, bound: i64) -> impl Strategy<Value = LatticeVector> {
    prop::collection::vec(-bound..=bound, nullity).prop_map(|c| LatticeVector::new(c).unwrap())
}

pub fn element(nullity: usize, bound: i64) -> impl Strategy<Value = WeylElement> {
    (any::<bool>(), lattice(nullity, bound))
        .prop_map(|(odd, t)| WeylElement::new(if odd { Parity::Odd } else { Parity::Even }, t))
}

pub fn root(nullity: usize, bound: i64) -> impl Strategy<Value = RootVector> {
    (-1i64..=1, lattice(nullity, bound)).prop_map(|(k, s)| RootVector::new(k, s).unwrap())
}

pub fn real_root(nullity: usize, bound: i64) -> impl Strategy<Value = RootVector> {
    (
        prop_oneof![Just(-1i64), Just(1i64)],
        lattice(nullity, bound),
    )
        .prop_map(|(k, s)| RootVector::new(k, s).unwrap())
}

/// Integer matrix of the automorphism `w_α` on the basis `(ε, σ₁, …, σ_ν)`,
/// stored by columns, built from `w_α(β) = β − (β, α)α`.
pub fn reflection_matrix(alpha: &RootVector) -> Vec<Vec<i64>> {
    let n = alpha.nullity() + 1;
    let a: Vec<i64> = std::iter::once(alpha.k())
        .chain(alpha.sigma().coords().iter().copied())
        .collect();
    (0..n)
        .map(|j| {
            let sgn_e = i64::from(j == 0);
            (0..n)
                .map(|i| i64::from(i == j) - 2 * sgn_e * alpha.k() * a[i])
                .collect()
        })
        .collect()
}

pub fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
        .collect()
}

pub fn compose(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| (0..n).map(|k| a[k][i] * b[j][k]).sum())
                .collect()
        })
        .collect()
}

/// `(ε(w), T(w))` from the image of `ε`, which is `ε(w)ε − 2T(w)`.
pub fn matrix_canonical(m: &[Vec<i64>]) -> (i64, Vec<i64>) {
    let img = &m[0];
    (img[0], img[1..].iter().map(|c| -c / 2).collect())
}

pub fn matrix_of_word(nullity: usize, letters: &[RootVector]) -> Vec<Vec<i64>> {
    letters.iter().fold(identity_matrix(nullity + 1), |acc, l| {
        compose(&acc, &reflection_matrix(l))
    })
}

pub fn canonical(w: &WeylElement) -> (i64, Vec<i64>) {
    (w.parity().sign(), w.translation().coords().to_vec())
}
