//! Integer vectors in the radical `Λ = ℤσ₁ ⊕ … ⊕ ℤσ_ν`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_nullity, Error, Result};

/// Coordinates of an isotropic vector in the fixed basis `σ₁, …, σ_ν`.
///
/// The length of the coordinate vector is the nullity `ν` and is always at
/// least one. All arithmetic is checked; overflow surfaces as
/// [`Error::Overflow`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroNullity);
        }
        Ok(LatticeVector(coords))
    }

    pub fn zero(nullity: usize) -> Result<Self> {
        Self::new(vec![0; nullity])
    }

    /// The basis vector `σ_i`, with `i` in `1..=nullity`.
    pub fn sigma(nullity: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nullity {
            return Err(Error::InvalidParameter(format!(
                "sigma index {i} out of range 1..={nullity}"
            )));
        }
        let mut v = Self::zero(nullity)?;
        v.0[i - 1] = 1;
        Ok(v)
    }

    pub fn nullity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn max_abs(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    /// Sum of the coordinates, i.e. the Euclidean pairing with `σ₁ + … + σ_ν`.
    pub fn coordinate_sum(&self) -> Result<i64> {
        self.0
            .iter()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Result<Self> {
        check_nullity(self.nullity(), other.nullity())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(LatticeVector)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|&c| c.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(LatticeVector)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        self.checked_scale(-1)
    }
}

impl TryFrom<Vec<i64>> for LatticeVector {
    type Error = Error;

    fn try_from(coords: Vec<i64>) -> Result<Self> {
        Self::new(coords)
    }
}

impl From<LatticeVector> for Vec<i64> {
    fn from(v: LatticeVector) -> Self {
        v.0
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}σ{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}σ{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
