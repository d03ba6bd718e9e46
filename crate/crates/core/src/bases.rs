//! Root bases, their `W`-conjugates and the non-conjugate family `Π_n`.
//!
//! A root basis is a ℤ-basis of `A` made of non-isotropic roots of the baby
//! system in which every strictly positive isotropic root has non-negative
//! coordinates. Strictly positive isotropic roots are the non-negative
//! combinations of `σ₁, …, σ_ν` and coordinates are additive, so it is
//! enough to check the `σ_j` themselves.

use std::ops::Deref;

use serde::{Serialize, Serializer};

use crate::error::{check_nullity, Error, Result};
use crate::group::{Parity, RootVector, WeylElement};
use crate::height::is_in_baby;
use crate::intmat::{determinant, solve_integral};
use crate::lattice::LatticeVector;
use crate::length::fundamental_root;

/// An ordered root basis `(α₀, …, α_ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootBasis {
    elements: Vec<RootVector>,
}

impl RootBasis {
    pub fn new(elements: Vec<RootVector>) -> Result<Self> {
        if is_root_basis(&elements)? {
            Ok(RootBasis { elements })
        } else {
            Err(Error::NotRootBasis)
        }
    }

    pub fn elements(&self) -> &[RootVector] {
        &self.elements
    }

    pub fn nullity(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn into_elements(self) -> Vec<RootVector> {
        self.elements
    }
}

impl Deref for RootBasis {
    type Target = [RootVector];
    fn deref(&self) -> &[RootVector] {
        &self.elements
    }
}

impl Serialize for RootBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

fn column(root: &RootVector) -> Vec<i64> {
    std::iter::once(root.k())
        .chain(root.sigma().coords().iter().copied())
        .collect()
}

fn check_shape(roots: &[RootVector]) -> Result<usize> {
    let Some(first) = roots.first() else {
        return Err(Error::WrongArity {
            expected: 2,
            found: 0,
        });
    };
    let nullity = first.nullity();
    if roots.len() != nullity + 1 {
        return Err(Error::WrongArity {
            expected: nullity + 1,
            found: roots.len(),
        });
    }
    for r in roots {
        check_nullity(nullity, r.nullity())?;
    }
    Ok(nullity)
}

/// Coordinates of `target` in the ordered list `roots`, if it is integral.
pub fn coordinates_in(roots: &[RootVector], target: &RootVector) -> Result<Option<Vec<i64>>> {
    check_shape(roots)?;
    check_nullity(roots[0].nullity(), target.nullity())?;
    let cols: Vec<Vec<i64>> = roots.iter().map(column).collect();
    solve_integral(&cols, &column(target))
}

/// Rows are the coordinates of `σ₁, …, σ_ν` in `roots`; `None` when some
/// `σ_j` is not an integral combination.
fn sigma_rows(roots: &[RootVector]) -> Result<Option<Vec<Vec<i64>>>> {
    let nullity = check_shape(roots)?;
    let mut rows = Vec::with_capacity(nullity);
    for j in 1..=nullity {
        let sigma = RootVector::isotropic(LatticeVector::sigma(nullity, j)?);
        match coordinates_in(roots, &sigma)? {
            Some(c) => rows.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(rows))
}

/// Whether `pi` (of length `ν+1`) is a root basis.
pub fn is_root_basis(pi: &[RootVector]) -> Result<bool> {
    check_shape(pi)?;
    if !pi.iter().all(|r| !r.is_isotropic() && is_in_baby(r)) {
        return Ok(false);
    }
    let rows: Vec<Vec<i64>> = {
        let cols: Vec<Vec<i64>> = pi.iter().map(column).collect();
        (0..cols.len())
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect()
    };
    if determinant(&rows)?.abs() != 1 {
        return Ok(false);
    }
    Ok(match sigma_rows(pi)? {
        Some(rows) => rows.iter().flatten().all(|&c| c >= 0),
        None => false,
    })
}

/// `Π₀ = (ε, σ₁−ε, …, σ_ν−ε)`.
pub fn fundamental_basis(nullity: usize) -> Result<RootBasis> {
    let elements = (0..=nullity)
        .map(|j| fundamental_root(nullity, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootBasis { elements })
}

/// `w(Π)`, elementwise.
pub fn apply_to_basis(w: &WeylElement, pi: &RootBasis) -> Result<RootBasis> {
    let elements = pi.iter().map(|a| w.act(a)).collect::<Result<Vec<_>>>()?;
    // W fixes every σ_j, so the coordinates of σ_j are unchanged and the
    // image is again a root basis.
    Ok(RootBasis { elements })
}

/// The `ν × (ν+1)` matrix whose row `j` holds the coordinates of `σ_j` in
/// `pi`. Constant along `W`-orbits.
pub fn invariant_matrix(pi: &RootBasis) -> Result<Vec<Vec<i64>>> {
    sigma_rows(pi)?.ok_or(Error::NotRootBasis)
}

/// The unique candidate `w` with `w(α) = α'`, for non-isotropic `α`, `α'`.
fn solve_single(alpha: &RootVector, image: &RootVector) -> Result<Option<WeylElement>> {
    let parity = Parity::from_sign(alpha.k() * image.k())?;
    let diff = alpha.sigma().checked_sub(image.sigma())?;
    if diff.coords().iter().any(|c| c % 2 != 0) {
        return Ok(None);
    }
    let half = LatticeVector::new(diff.coords().iter().map(|c| c / 2).collect())?;
    Ok(Some(WeylElement::new(
        parity,
        half.checked_scale(alpha.k())?,
    )))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| p[j] > p[i])
        .expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Some `w` with `w(pi1) = pi2` as sets, or `None`.
///
/// Bijections are tried in lexicographic order. For each, the first
/// non-isotropic pair fixes the only possible `w` (its sign and translation
/// are read off `w(α) = ε(w)sgn(α)ε + p(α) − 2sgn(α)T(w)`), which is then
/// checked on every pair.
pub fn find_conjugator(pi1: &[RootVector], pi2: &[RootVector]) -> Result<Option<WeylElement>> {
    let nullity = check_shape(pi1)?;
    check_shape(pi2)?;
    check_nullity(nullity, pi2[0].nullity())?;
    let mut perm: Vec<usize> = (0..pi1.len()).collect();
    loop {
        if let Some(w) = try_bijection(pi1, pi2, &perm)? {
            return Ok(Some(w));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn try_bijection(
    pi1: &[RootVector],
    pi2: &[RootVector],
    perm: &[usize],
) -> Result<Option<WeylElement>> {
    let pairs = || pi1.iter().zip(perm.iter().map(|&j| &pi2[j]));
    if pairs().any(|(a, b)| a.is_isotropic() != b.is_isotropic()) {
        return Ok(None);
    }
    let candidate = match pairs().find(|(a, _)| !a.is_isotropic()) {
        Some((a, b)) => match solve_single(a, b)? {
            Some(w) => w,
            None => return Ok(None),
        },
        None => WeylElement::identity(pi1[0].nullity())?,
    };
    for (a, b) in pairs() {
        if candidate.act(a)? != *b {
            return Ok(None);
        }
    }
    Ok(Some(candidate))
}

/// `Π_n = (ε+2σ₁+2σ₂, −ε−σ₁−2nσ₂, −ε−2σ₁−σ₂, −ε−2σ₁−2σ₂+σ_i (i ≥ 3))`,
/// defined for `ν ≥ 2`, `n ≥ 2`. Different `n` give non-conjugate bases.
pub fn pi_n_family(nullity: usize, n: i64) -> Result<RootBasis> {
    if nullity < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Π_n family needs nullity at least 2, got {nullity}"
        )));
    }
    if n <= 1 {
        return Err(Error::InvalidParameter(format!(
            "the Π_n family needs n > 1, got {n}"
        )));
    }
    let two_n = n.checked_mul(2).ok_or(Error::Overflow)?;
    let with_head = |k: i64, s1: i64, s2: i64, extra: Option<usize>| {
        let mut s = vec![0; nullity];
        s[0] = s1;
        s[1] = s2;
        if let Some(i) = extra {
            s[i - 1] += 1;
        }
        RootVector::from_parts(k, &s)
    };
    let mut elements = vec![
        with_head(1, 2, 2, None)?,
        with_head(-1, -1, -two_n, None)?,
        with_head(-1, -2, -1, None)?,
    ];
    for i in 3..=nullity {
        elements.push(with_head(-1, -2, -2, Some(i))?);
    }
    RootBasis::new(elements)
}
