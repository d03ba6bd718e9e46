//! Brute-force checks that do not go through the closed-form length:
//! breadth-first search in the Cayley graph, inversion counting in the
//! affine (`ν = 1`) case and the classical affine formulas.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Parity, RootVector, WeylElement};
use crate::length::{length_pi0, pi0_generators, Pi0Word};

/// Minimal distance from the identity and one witness word, as generator
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsEntry {
    pub distance: usize,
    pub witness: Vec<usize>,
}

/// The ball of radius `depth` around the identity in a Cayley graph.
#[derive(Clone, Debug)]
pub struct BfsBall {
    pub depth: usize,
    pub entries: BTreeMap<WeylElement, BfsEntry>,
    level_sizes: Vec<usize>,
}

impl BfsBall {
    /// Number of elements at each distance `0..=depth`.
    pub fn level_sizes(&self) -> &[usize] {
        &self.level_sizes
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, w: &WeylElement) -> Option<&BfsEntry> {
        self.entries.get(w)
    }
}

/// Shortest words over `generators` for every element within `depth` of the
/// identity. Generators must be involutions.
pub fn bfs_lengths(generators: &[WeylElement], depth: usize) -> Result<BfsBall> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidParameter("no generators".into()));
    };
    let nullity = first.nullity();
    for (i, g) in generators.iter().enumerate() {
        if !g.multiply(g)?.is_identity() {
            return Err(Error::NotInvolution(i));
        }
    }

    let identity = WeylElement::identity(nullity)?;
    // element -> (distance, parent, generator used)
    let mut seen: HashMap<WeylElement, (usize, Option<(WeylElement, usize)>)> = HashMap::new();
    seen.insert(identity.clone(), (0, None));
    let mut frontier = vec![identity];
    let mut level_sizes = vec![1];

    for d in 1..=depth {
        let mut next = Vec::new();
        for w in &frontier {
            for (i, g) in generators.iter().enumerate() {
                let v = w.multiply(g)?;
                if !seen.contains_key(&v) {
                    seen.insert(v.clone(), (d, Some((w.clone(), i))));
                    next.push(v);
                }
            }
        }
        level_sizes.push(next.len());
        frontier = next;
    }

    let mut entries = BTreeMap::new();
    for (w, (distance, _)) in &seen {
        let mut witness = Vec::with_capacity(*distance);
        let mut cur = w;
        while let Some((_, Some((parent, gen)))) = seen.get(cur) {
            witness.push(*gen);
            cur = parent;
        }
        witness.reverse();
        entries.insert(
            w.clone(),
            BfsEntry {
                distance: *distance,
                witness,
            },
        );
    }
    Ok(BfsBall {
        depth,
        entries,
        level_sizes,
    })
}

/// Comparison of the closed-form length with the search distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    pub element: WeylElement,
    pub formula_length: u64,
    pub bfs_distance: u64,
    pub witness: Pi0Word,
    pub agree: bool,
}

/// One report per element within `depth` of the identity over the `Π₀`
/// generators; disagreements first, then canonical element order.
pub fn verify_theorem_lft(nullity: usize, depth: usize) -> Result<Vec<LengthReport>> {
    let ball = bfs_lengths(&pi0_generators(nullity)?, depth)?;
    let mut reports = ball
        .entries
        .into_iter()
        .map(|(element, entry)| {
            let formula_length = length_pi0(&element)?;
            let bfs_distance = entry.distance as u64;
            Ok(LengthReport {
                formula_length,
                bfs_distance,
                witness: Pi0Word::new(nullity, entry.witness)?,
                agree: formula_length == bfs_distance,
                element,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.agree);
    Ok(reports)
}

fn require_affine(w: &WeylElement) -> Result<()> {
    if w.nullity() != 1 {
        return Err(Error::NullityMismatch {
            expected: 1,
            found: w.nullity(),
        });
    }
    Ok(())
}

/// Classical positivity for `ν = 1`: both coordinates of
/// `kε + mσ₁ = (k+m)α₀ + mα₁` are non-negative (and not both zero).
fn classically_positive(k: i64, m: i64) -> bool {
    (k + m >= 0 && m >= 0) && !(k == 0 && m == 0)
}

fn classically_negative(k: i64, m: i64) -> bool {
    (k + m <= 0 && m <= 0) && !(k == 0 && m == 0)
}

/// Number of positive roots `kε + mσ₁`, `|m| ≤ bound`, sent to negative roots
/// by `w`. Requires `ν = 1`.
pub fn inversion_count_nu1(w: &WeylElement, bound: u64) -> Result<u64> {
    require_affine(w)?;
    let b = i64::try_from(bound).map_err(|_| Error::Overflow)?;
    let mut count = 0;
    for m in -b..=b {
        for k in -1..=1 {
            if !classically_positive(k, m) {
                continue;
            }
            let image = w.act(&RootVector::from_parts(k, &[m])?)?;
            if classically_negative(image.k(), image.sigma().coords()[0]) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `ℓ(w_ε^s t₁^n)`: `2|n|` for `s = 0`, `|2n+1|` for `s = 1`.
pub fn classical_affine_length(s: u8, n: i64) -> Result<u64> {
    let two_n = n.checked_mul(2).ok_or(Error::Overflow)?;
    match s {
        0 => Ok(two_n.unsigned_abs()),
        1 => Ok(two_n.checked_add(1).ok_or(Error::Overflow)?.unsigned_abs()),
        _ => Err(Error::InvalidParameter(format!(
            "s must be 0 or 1, got {s}"
        ))),
    }
}

/// The element `w_ε^s t₁^n` with `t₁ = w_{α₁}w_{α₀}`, in canonical form:
/// sign `(−1)^s`, translation `nσ₁`.
pub fn affine_element(s: u8, n: i64) -> Result<WeylElement> {
    let parity = match s {
        0 => Parity::Even,
        1 => Parity::Odd,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "s must be 0 or 1, got {s}"
            )))
        }
    };
    WeylElement::from_parts(parity.sign(), &[n])
}

fn check_k(k: i64) -> Result<()> {
    if (-1..=1).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidEpsilonCoefficient(k))
    }
}

/// `Π₀`-coordinates of `t₁^n(kε + mσ₁)`: `(m − (2n−1)k, m − 2nk)`.
pub fn affine_translation_action(n: i64, m: i64, k: i64) -> Result<(i64, i64)> {
    check_k(k)?;
    let two_nk = n
        .checked_mul(2)
        .and_then(|x| x.checked_mul(k))
        .ok_or(Error::Overflow)?;
    let second = m.checked_sub(two_nk).ok_or(Error::Overflow)?;
    Ok((second.checked_add(k).ok_or(Error::Overflow)?, second))
}

/// `Π₀`-coordinates of `w_ε t₁^n(kε + mσ₁)`: `(m − (2n+1)k, m − 2nk)`.
pub fn affine_twisted_action(n: i64, m: i64, k: i64) -> Result<(i64, i64)> {
    check_k(k)?;
    let two_nk = n
        .checked_mul(2)
        .and_then(|x| x.checked_mul(k))
        .ok_or(Error::Overflow)?;
    let second = m.checked_sub(two_nk).ok_or(Error::Overflow)?;
    Ok((second.checked_sub(k).ok_or(Error::Overflow)?, second))
}
