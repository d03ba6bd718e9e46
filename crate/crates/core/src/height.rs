//! Height, positivity and membership predicates for roots of the toroidal
//! and baby systems.
//!
//! For `σ = Σ m_i σ_i` write `m⁺` for the sum of the positive coordinates and
//! `m⁻` for the sum of the negative ones. The radical height is `2m⁺` when
//! `m⁺ ≥ |m⁻|` and `2m⁻` otherwise; the height of `kε + σ` adds `k`, except
//! for `k = −1, m⁺ = |m⁻|` where it subtracts the radical height instead.
//! The absolute height equals the `ℓ¹` norm of the coordinates in the
//! fundamental basis `Π₀ = {ε, σ₁−ε, …, σ_ν−ε}`.

use crate::error::{Error, Result};
use crate::group::RootVector;
use crate::lattice::LatticeVector;

/// `m⁺`, `m⁻` and the height of a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeightBreakdown {
    pub m_plus: i64,
    pub m_minus: i64,
    pub height: i64,
}

/// `(m⁺, m⁻)`; empty sums are zero.
pub fn m_plus_minus(sigma: &LatticeVector) -> Result<(i64, i64)> {
    let mut plus = 0i64;
    let mut minus = 0i64;
    for &c in sigma.coords() {
        if c > 0 {
            plus = plus.checked_add(c).ok_or(Error::Overflow)?;
        } else {
            minus = minus.checked_add(c).ok_or(Error::Overflow)?;
        }
    }
    Ok((plus, minus))
}

fn radical_height_from(m_plus: i64, m_minus: i64) -> Result<i64> {
    let dominant = if m_plus >= m_minus.checked_neg().ok_or(Error::Overflow)? {
        m_plus
    } else {
        m_minus
    };
    dominant.checked_mul(2).ok_or(Error::Overflow)
}

/// Height of an isotropic root `σ` with respect to `σ₁, …, σ_ν`.
pub fn height_radical(sigma: &LatticeVector) -> Result<i64> {
    let (p, m) = m_plus_minus(sigma)?;
    radical_height_from(p, m)
}

pub fn height_breakdown(alpha: &RootVector) -> Result<HeightBreakdown> {
    let (m_plus, m_minus) = m_plus_minus(alpha.sigma())?;
    let radical = radical_height_from(m_plus, m_minus)?;
    let k = alpha.k();
    let height = if k == -1 && m_plus == -m_minus {
        k.checked_sub(radical)
    } else {
        k.checked_add(radical)
    }
    .ok_or(Error::Overflow)?;
    Ok(HeightBreakdown {
        m_plus,
        m_minus,
        height,
    })
}

/// Height of a root. Nonzero for every nonzero root and odd for every
/// non-isotropic root; `height(0) = 0`.
pub fn height(alpha: &RootVector) -> Result<i64> {
    height_breakdown(alpha).map(|b| b.height)
}

/// Coordinates `(n₀, n₁, …, n_ν)` of `α` in `Π₀`: `n₀ = k + Σ m_i`,
/// `n_i = m_i`.
pub fn pi0_coordinates(alpha: &RootVector) -> Result<Vec<i64>> {
    let n0 = alpha
        .k()
        .checked_add(alpha.sigma().coordinate_sum()?)
        .ok_or(Error::Overflow)?;
    Ok(std::iter::once(n0)
        .chain(alpha.sigma().coords().iter().copied())
        .collect())
}

/// Positivity through the Euclidean pairing of `p(α)` with `Σ σ_i`.
pub fn is_positive(alpha: &RootVector) -> Result<bool> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let s = alpha.sigma().coordinate_sum()?;
    Ok(if alpha.k() == -1 { s > 0 } else { s >= 0 })
}

pub fn is_negative(alpha: &RootVector) -> Result<bool> {
    is_positive(alpha).map(|p| !p)
}

pub fn is_strictly_positive_isotropic(sigma: &LatticeVector) -> bool {
    !sigma.is_zero() && sigma.coords().iter().all(|&c| c >= 0)
}

/// Membership of `kε + σ` in `Λ ∪ (±ε + Λ)`.
pub fn is_in_toroidal(k: i64, _sigma: &LatticeVector) -> bool {
    (-1..=1).contains(&k)
}

fn odd_coordinate_count(sigma: &LatticeVector) -> usize {
    sigma.coords().iter().filter(|c| *c % 2 != 0).count()
}

/// Membership in the baby system `(S_b + S_b) ∪ (±ε + S_b)` with
/// `S_b = ⋃ (σ_i + 2Λ)`, `σ₀ = 0`: a non-isotropic root needs at most one odd
/// coordinate, an isotropic one at most two.
pub fn is_in_baby(alpha: &RootVector) -> bool {
    let odd = odd_coordinate_count(alpha.sigma());
    if alpha.is_isotropic() {
        odd <= 2
    } else {
        odd <= 1
    }
}

/// Every root of the toroidal system with `|height| ≤ max_abs_height`,
/// ordered by absolute height, then height, then `(k, σ)`.
///
/// Since `|height|` is the `ℓ¹` norm of the `Π₀` coordinates, scanning the
/// box `|n_i| ≤ H` is exhaustive.
pub fn enumerate_roots(nullity: usize, max_abs_height: u64) -> Result<Vec<RootVector>> {
    if nullity == 0 {
        return Err(Error::ZeroNullity);
    }
    let bound = i64::try_from(max_abs_height).map_err(|_| Error::Overflow)?;
    let dim = nullity + 1;
    let mut found = Vec::new();
    let mut coords = vec![-bound; dim];
    loop {
        // σ_i = n_i and k = n₀ − Σ n_i
        let sigma_sum: i64 = coords[1..].iter().sum();
        let k = coords[0] - sigma_sum;
        if (-1..=1).contains(&k) {
            let l1: u64 = coords.iter().map(|c| c.unsigned_abs()).sum();
            if l1 <= max_abs_height {
                let root = RootVector::new(k, LatticeVector::new(coords[1..].to_vec())?)?;
                let h = height(&root)?;
                found.push((h.unsigned_abs(), h, root));
            }
        }
        // odometer
        let mut i = 0;
        while i < dim {
            if coords[i] < bound {
                coords[i] += 1;
                break;
            }
            coords[i] = -bound;
            i += 1;
        }
        if i == dim {
            break;
        }
    }
    found.sort();
    Ok(found.into_iter().map(|(_, _, r)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.to_vec()).unwrap()
    }

    fn root(k: i64, s: &[i64]) -> RootVector {
        RootVector::from_parts(k, s).unwrap()
    }

    #[test]
    fn m_plus_minus_examples() {
        assert_eq!(m_plus_minus(&lv(&[0, 0, 0])).unwrap(), (0, 0));
        assert_eq!(m_plus_minus(&lv(&[3, -2])).unwrap(), (3, -2));
        assert_eq!(m_plus_minus(&lv(&[1, 1, -5])).unwrap(), (2, -5));
    }

    #[test]
    fn height_radical_examples() {
        assert_eq!(height_radical(&lv(&[0, 0])).unwrap(), 0);
        // σ₁ − σ₂ = (α₀+α₁) − (α₀+α₂) has Π₀ coordinates (0, 1, −1)
        assert_eq!(height_radical(&lv(&[1, -1])).unwrap(), 2);
        assert_eq!(pi0_coordinates(&root(0, &[1, -1])).unwrap(), vec![0, 1, -1]);
        // σ₁ − 3σ₂ has coordinates (−2, 1, −3), ℓ¹ = 6
        assert_eq!(height_radical(&lv(&[1, -3])).unwrap(), -6);
        assert_eq!(
            pi0_coordinates(&root(0, &[1, -3])).unwrap(),
            vec![-2, 1, -3]
        );
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&root(1, &[0, 0, 0])).unwrap(), 1);
        for i in 0..3 {
            let mut s = vec![0; 3];
            s[i] = 1;
            assert_eq!(height(&root(-1, &s)).unwrap(), 1);
        }
        assert_eq!(height(&root(-1, &[1, -1])).unwrap(), -3);
        assert_eq!(height(&root(1, &[2])).unwrap(), 5);
        assert_eq!(pi0_coordinates(&root(1, &[2])).unwrap(), vec![3, 2]);
        assert_eq!(height(&root(0, &[0, 0])).unwrap(), 0);
        assert_eq!(height(&root(-1, &[0])).unwrap(), -1);
    }

    #[test]
    fn pi0_coordinate_examples() {
        assert_eq!(pi0_coordinates(&root(1, &[0, 0])).unwrap(), vec![1, 0, 0]);
        assert_eq!(pi0_coordinates(&root(0, &[1, 0])).unwrap(), vec![1, 1, 0]);
        let alpha = root(-1, &[1, -1]);
        let n = pi0_coordinates(&alpha).unwrap();
        assert_eq!(n, vec![-1, 1, -1]);
        // Σ n_j α_j with α₀ = ε, α_j = σ_j − ε
        let k = n[0] - n[1] - n[2];
        assert_eq!((k, n[1], n[2]), (-1, 1, -1));
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive(&root(1, &[0, 0])).unwrap());
        assert!(is_positive(&root(-1, &[1, 0])).unwrap());
        assert_eq!(height(&root(-1, &[1, 0])).unwrap(), 1);
        assert!(is_negative(&root(-1, &[1, -1])).unwrap());
        assert!(is_negative(&root(-1, &[0, 0])).unwrap());
        assert_eq!(is_positive(&root(0, &[0, 0])), Err(Error::ZeroRoot));
    }

    #[test]
    fn strictly_positive_isotropic_examples() {
        assert!(is_strictly_positive_isotropic(&lv(&[1, 0])));
        assert!(!is_strictly_positive_isotropic(&lv(&[0, 0])));
        assert!(!is_strictly_positive_isotropic(&lv(&[1, -1])));
    }

    #[test]
    fn membership_examples() {
        let b0 = root(1, &[2, 2]);
        assert!(is_in_toroidal(b0.k(), b0.sigma()) && is_in_baby(&b0));
        let r = root(1, &[1, 1]);
        assert!(is_in_toroidal(r.k(), r.sigma()) && !is_in_baby(&r));
        assert!(is_in_baby(&root(0, &[1, 1])));
        assert!(!is_in_baby(&root(0, &[1, 1, 1])));
        assert!(!is_in_toroidal(2, &lv(&[0])));
        // ν = 1: every root is in the baby system
        for s in -5..=5 {
            for k in -1..=1 {
                assert!(is_in_baby(&root(k, &[s])));
            }
        }
    }

    /// Brute-force membership in `S_b + S_b` and `±ε + S_b` by expanding
    /// cosets over a small window.
    #[test]
    fn baby_membership_matches_coset_expansion() {
        let nu = 3usize;
        let reps: Vec<Vec<i64>> = std::iter::once(vec![0; nu])
            .chain((0..nu).map(|i| {
                let mut v = vec![0; nu];
                v[i] = 1;
                v
            }))
            .collect();
        let in_sb = |s: &[i64]| {
            reps.iter()
                .any(|r| s.iter().zip(r).all(|(a, b)| (a - b).rem_euclid(2) == 0))
        };
        let in_sb_sb = |s: &[i64]| {
            reps.iter().any(|r| {
                let d: Vec<i64> = s.iter().zip(r).map(|(a, b)| a - b).collect();
                in_sb(&d)
            })
        };
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let s = [a, b, c];
                    assert_eq!(is_in_baby(&root(1, &s)), in_sb(&s));
                    assert_eq!(is_in_baby(&root(-1, &s)), in_sb(&s));
                    assert_eq!(is_in_baby(&root(0, &s)), in_sb_sb(&s));
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_roots(2, 0).unwrap(), vec![root(0, &[0, 0])]);
        let one = enumerate_roots(1, 1).unwrap();
        let expect = [
            root(0, &[0]),
            root(-1, &[0]),
            root(1, &[-1]),
            root(-1, &[1]),
            root(1, &[0]),
        ];
        assert_eq!(one.len(), 5);
        for r in &expect {
            assert!(one.contains(r));
        }
        // scan oracle: the box |σ| ≤ 2, k ∈ {−1,0,1}, filtered by height
        let mut scan = Vec::new();
        for k in -1..=1 {
            for m in -2..=2 {
                let r = root(k, &[m]);
                if height(&r).unwrap().abs() <= 2 {
                    scan.push(r);
                }
            }
        }
        let two = enumerate_roots(1, 2).unwrap();
        assert_eq!(two.len(), scan.len());
        assert_eq!(two.len(), 7);
    }
}
