//! Length with respect to the fundamental root basis `Π₀` and explicit
//! reduced words.
//!
//! With `h = height(ε + T(w))` and `d = 1` for even `w` (`0` for odd `w`),
//! the length is `|h| − sign(h)·d`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Parity, RootVector, WeylElement, Word};
use crate::height::{height, m_plus_minus};
use crate::lattice::LatticeVector;

/// The root `α_j` of `Π₀`: `α₀ = ε`, `α_j = σ_j − ε`.
pub fn fundamental_root(nullity: usize, j: usize) -> Result<RootVector> {
    if j > nullity {
        return Err(Error::GeneratorOutOfRange { index: j, nullity });
    }
    if j == 0 {
        RootVector::epsilon(nullity)
    } else {
        RootVector::new(-1, LatticeVector::sigma(nullity, j)?)
    }
}

/// The reflections at `α₀, …, α_ν`, in index order.
pub fn pi0_generators(nullity: usize) -> Result<Vec<WeylElement>> {
    (0..=nullity)
        .map(|j| WeylElement::reflection(&fundamental_root(nullity, j)?))
        .collect()
}

/// A word in the generators of `Π₀`, stored as indices `0..=ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Pi0Word {
    indices: Vec<usize>,
}

impl Pi0Word {
    pub fn new(nullity: usize, indices: Vec<usize>) -> Result<Self> {
        if nullity == 0 {
            return Err(Error::ZeroNullity);
        }
        if let Some(&index) = indices.iter().find(|&&i| i > nullity) {
            return Err(Error::GeneratorOutOfRange { index, nullity });
        }
        Ok(Pi0Word { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn to_word(&self, nullity: usize) -> Result<Word> {
        let letters = self
            .indices
            .iter()
            .map(|&j| fundamental_root(nullity, j))
            .collect::<Result<Vec<_>>>()?;
        Word::new(nullity, letters)
    }

    pub fn evaluate(&self, nullity: usize) -> Result<WeylElement> {
        self.to_word(nullity)?.evaluate()
    }
}

/// Occurrences of each generator in odd (`P`) and even (`N`) positions,
/// counting positions from 1.
pub fn word_position_counts(word: &Pi0Word, nullity: usize) -> (Vec<u64>, Vec<u64>) {
    let mut odd = vec![0u64; nullity + 1];
    let mut even = vec![0u64; nullity + 1];
    for (pos, &j) in word.indices.iter().enumerate() {
        if pos % 2 == 0 {
            odd[j] += 1;
        } else {
            even[j] += 1;
        }
    }
    (odd, even)
}

fn sign(x: i64) -> i64 {
    x.signum()
}

/// `ℓ_{Π₀}(w)`.
pub fn length_pi0(w: &WeylElement) -> Result<u64> {
    let h = height(&RootVector::new(1, w.translation().clone())?)?;
    let d = match w.parity() {
        Parity::Even => 1,
        Parity::Odd => 0,
    };
    // h is odd, so |h| − sign(h)·d never goes negative
    let len = (h.unsigned_abs() as i128) - i128::from(sign(h) * d);
    u64::try_from(len).map_err(|_| Error::Overflow)
}

/// `ℓ_{Π₀}(w_α) = |height(α)|`.
pub fn reflection_length(alpha: &RootVector) -> Result<u64> {
    if alpha.is_isotropic() {
        return Err(Error::IsotropicRoot);
    }
    Ok(height(alpha)?.unsigned_abs())
}

/// Generator indices `i` repeated `|m_i|` times, for the coordinates selected
/// by `keep`.
fn repeated_indices(t: &LatticeVector, keep: impl Fn(i64) -> bool) -> Vec<usize> {
    t.coords()
        .iter()
        .enumerate()
        .filter(|(_, &m)| keep(m))
        .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m.unsigned_abs() as usize))
        .collect()
}

/// Pad with `α₀` up to `slots` entries and sort ascending.
fn fill_slots(mut indices: Vec<usize>, slots: usize) -> Vec<usize> {
    debug_assert!(indices.len() <= slots);
    indices.resize(slots, 0);
    indices.sort_unstable();
    indices
}

/// A reduced `Π₀`-word for `w`.
///
/// Letters are distributed over odd and even positions so that the signed
/// position counts reproduce `T(w)`; unused positions hold `α₀`, whose
/// reflection has no radical part. Within each parity class generators are
/// placed in ascending index order, left to right.
pub fn reduced_word_pi0(w: &WeylElement) -> Result<Pi0Word> {
    let nullity = w.nullity();
    let t = w.translation();
    let (m_plus, m_minus) = m_plus_minus(t)?;
    let plus_dominant = m_plus >= -m_minus;
    let positives = repeated_indices(t, |m| m > 0);
    let negatives = repeated_indices(t, |m| m < 0);
    let p = usize::try_from(m_plus).map_err(|_| Error::Overflow)?;
    let n = usize::try_from(m_minus.unsigned_abs()).map_err(|_| Error::Overflow)?;

    let (odd, even) = match (w.parity(), plus_dominant) {
        // w = w_{ε+t}, length 2m⁺ + 1
        (Parity::Odd, true) => (fill_slots(negatives, p + 1), fill_slots(positives, p)),
        // w = w_{ε+t}, length 2|m⁻| − 1
        (Parity::Odd, false) => (fill_slots(negatives, n), fill_slots(positives, n - 1)),
        // even elements: the sign of every position flips
        (Parity::Even, true) => (fill_slots(positives, p), fill_slots(negatives, p)),
        (Parity::Even, false) => (fill_slots(positives, n), fill_slots(negatives, n)),
    };

    let mut indices = Vec::with_capacity(odd.len() + even.len());
    let mut evens = even.into_iter();
    for o in odd {
        indices.push(o);
        if let Some(e) = evens.next() {
            indices.push(e);
        }
    }
    indices.extend(evens);
    Pi0Word::new(nullity, indices)
}

/// Length of `w` over the reflections at `w₀(Π₀)`, computed as
/// `ℓ_{Π₀}(w₀⁻¹ w w₀)`.
pub fn length_wrt_conjugated_basis(w0: &WeylElement, w: &WeylElement) -> Result<u64> {
    length_pi0(&w0.inverse()?.conjugate(w)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(e: i64, t: &[i64]) -> WeylElement {
        WeylElement::from_parts(e, t).unwrap()
    }

    fn root(k: i64, s: &[i64]) -> RootVector {
        RootVector::from_parts(k, s).unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(length_pi0(&WeylElement::identity(2).unwrap()).unwrap(), 0);
        assert_eq!(length_pi0(&el(-1, &[0, 0])).unwrap(), 1);
        for n in -6i64..=6 {
            assert_eq!(length_pi0(&el(1, &[n])).unwrap(), 2 * n.unsigned_abs());
            assert_eq!(
                length_pi0(&el(-1, &[n])).unwrap(),
                (2 * n + 1).unsigned_abs()
            );
        }
    }

    #[test]
    fn reflection_length_examples() {
        for j in 0..=3 {
            assert_eq!(
                reflection_length(&fundamental_root(3, j).unwrap()).unwrap(),
                1
            );
        }
        assert_eq!(reflection_length(&root(1, &[1])).unwrap(), 3);
        assert_eq!(reflection_length(&root(-1, &[1, -1])).unwrap(), 3);
        assert_eq!(reflection_length(&root(0, &[1])), Err(Error::IsotropicRoot));
        let r = root(-1, &[1, -1]);
        assert_eq!(
            reflection_length(&r).unwrap(),
            length_pi0(&WeylElement::reflection(&r).unwrap()).unwrap()
        );
    }

    #[test]
    fn reduced_word_examples() {
        assert!(reduced_word_pi0(&WeylElement::identity(1).unwrap())
            .unwrap()
            .is_empty());
        let w = WeylElement::reflection(&root(1, &[1])).unwrap();
        assert_eq!(reduced_word_pi0(&w).unwrap().indices(), &[0, 1, 0]);
        assert_eq!(
            reduced_word_pi0(&el(1, &[1, -1])).unwrap().indices(),
            &[1, 2]
        );
        let check = Word::new(
            2,
            vec![
                fundamental_root(2, 1).unwrap(),
                fundamental_root(2, 2).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(check.evaluate().unwrap(), el(1, &[1, -1]));
        assert_eq!(reduced_word_pi0(&el(-1, &[0, 0])).unwrap().indices(), &[0]);
    }

    #[test]
    fn reduced_word_round_trip_small_box() {
        for parity in [1, -1] {
            for a in -3..=3 {
                for b in -3..=3 {
                    let w = el(parity, &[a, b]);
                    let word = reduced_word_pi0(&w).unwrap();
                    assert_eq!(word.evaluate(2).unwrap(), w, "{w}");
                    assert_eq!(word.len() as u64, length_pi0(&w).unwrap(), "{w}");
                }
            }
        }
    }

    #[test]
    fn position_counts() {
        let w = Pi0Word::new(1, vec![]).unwrap();
        assert_eq!(word_position_counts(&w, 1), (vec![0, 0], vec![0, 0]));
        let w = Pi0Word::new(1, vec![0, 1, 0]).unwrap();
        assert_eq!(word_position_counts(&w, 1), (vec![2, 0], vec![0, 1]));
        assert_eq!(
            Pi0Word::new(1, vec![2]),
            Err(Error::GeneratorOutOfRange {
                index: 2,
                nullity: 1
            })
        );
    }

    #[test]
    fn conjugated_basis_examples() {
        let w = el(-1, &[2, -1]);
        let id = WeylElement::identity(2).unwrap();
        assert_eq!(
            length_wrt_conjugated_basis(&id, &w).unwrap(),
            length_pi0(&w).unwrap()
        );
        assert_eq!(length_wrt_conjugated_basis(&w, &id).unwrap(), 0);
        let w0 = el(-1, &[0, 0]);
        let conj = w0.inverse().unwrap().conjugate(&el(1, &[1, 0])).unwrap();
        assert_eq!(conj, el(1, &[-1, 0]));
        assert_eq!(
            length_wrt_conjugated_basis(&w0, &el(1, &[1, 0])).unwrap(),
            2
        );
    }
}
