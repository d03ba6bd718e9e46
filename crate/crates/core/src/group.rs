//! The `A₁`-type Weyl group `W` acting on `A = ℤε ⊕ Λ`.
//!
//! Every element is stored in canonical form `(ε(w), T(w))`: its sign and
//! its translation part. Two elements are equal as automorphisms of `A`
//! exactly when these fields agree, so equality, hashing and ordering are
//! structural.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_nullity, Error, Result};
use crate::lattice::LatticeVector;

/// The sign `ε(w) ∈ {±1}` of a Weyl group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    /// `ε(w) = +1`: products of an even number of reflections.
    Even,
    /// `ε(w) = −1`: reflections and other odd products.
    Odd,
}

impl Parity {
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Parity::Even),
            -1 => Ok(Parity::Odd),
            other => Err(Error::InvalidParity(other)),
        }
    }

    /// Parity of a product of `n` reflections.
    pub fn of_len(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn combine(self, other: Parity) -> Self {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A root `kε + σ` of the toroidal system, `k ∈ {−1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRoot", into = "RawRoot")]
pub struct RootVector {
    k: i64,
    sigma: LatticeVector,
}

#[derive(Serialize, Deserialize)]
struct RawRoot {
    k: i64,
    sigma: LatticeVector,
}

impl TryFrom<RawRoot> for RootVector {
    type Error = Error;
    fn try_from(raw: RawRoot) -> Result<Self> {
        RootVector::new(raw.k, raw.sigma)
    }
}

impl From<RootVector> for RawRoot {
    fn from(r: RootVector) -> Self {
        RawRoot {
            k: r.k,
            sigma: r.sigma,
        }
    }
}

impl RootVector {
    pub fn new(k: i64, sigma: LatticeVector) -> Result<Self> {
        if !(-1..=1).contains(&k) {
            return Err(Error::InvalidEpsilonCoefficient(k));
        }
        Ok(RootVector { k, sigma })
    }

    /// Shorthand for `RootVector::new(k, LatticeVector::new(sigma)?)`.
    pub fn from_parts(k: i64, sigma: &[i64]) -> Result<Self> {
        Self::new(k, LatticeVector::new(sigma.to_vec())?)
    }

    /// The root `ε`.
    pub fn epsilon(nullity: usize) -> Result<Self> {
        Self::new(1, LatticeVector::zero(nullity)?)
    }

    pub fn isotropic(sigma: LatticeVector) -> Self {
        RootVector { k: 0, sigma }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn sigma(&self) -> &LatticeVector {
        &self.sigma
    }

    pub fn nullity(&self) -> usize {
        self.sigma.nullity()
    }

    pub fn is_isotropic(&self) -> bool {
        self.k == 0
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0 && self.sigma.is_zero()
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Ok(RootVector {
            k: -self.k,
            sigma: self.sigma.checked_neg()?,
        })
    }

    /// `sgn(α)·p(α)`, the radical contribution of a reflection letter.
    fn signed_radical(&self) -> Result<LatticeVector> {
        self.sigma.checked_scale(self.k)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = match self.k {
            1 => "ε",
            -1 => "-ε",
            _ => "",
        };
        match (eps.is_empty(), self.sigma.is_zero()) {
            (true, _) => write!(f, "{}", self.sigma),
            (false, true) => write!(f, "{eps}"),
            (false, false) => {
                let s = self.sigma.to_string();
                if s.starts_with('-') {
                    write!(f, "{eps}{s}")
                } else {
                    write!(f, "{eps}+{s}")
                }
            }
        }
    }
}

/// The pairing `(β, α∨) = (β, α) = 2·sgn(β)·sgn(α)`.
pub fn pairing(beta: &RootVector, alpha: &RootVector) -> i64 {
    2 * beta.k * alpha.k
}

/// An element of `W` in canonical form `(ε(w), T(w))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct WeylElement {
    parity: Parity,
    t: LatticeVector,
}

#[derive(Serialize, Deserialize)]
struct RawElement {
    eps: i64,
    t: LatticeVector,
}

impl TryFrom<RawElement> for WeylElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        Ok(WeylElement::new(Parity::from_sign(raw.eps)?, raw.t))
    }
}

impl From<WeylElement> for RawElement {
    fn from(w: WeylElement) -> Self {
        RawElement {
            eps: w.parity.sign(),
            t: w.t,
        }
    }
}

impl WeylElement {
    pub fn new(parity: Parity, t: LatticeVector) -> Self {
        WeylElement { parity, t }
    }

    pub fn from_parts(sign: i64, t: &[i64]) -> Result<Self> {
        Ok(Self::new(
            Parity::from_sign(sign)?,
            LatticeVector::new(t.to_vec())?,
        ))
    }

    pub fn identity(nullity: usize) -> Result<Self> {
        Ok(Self::new(Parity::Even, LatticeVector::zero(nullity)?))
    }

    /// The reflection `w_α`; it has sign `−1` and translation `sgn(α)p(α)`.
    pub fn reflection(alpha: &RootVector) -> Result<Self> {
        if alpha.is_isotropic() {
            return Err(Error::IsotropicRoot);
        }
        Ok(Self::new(Parity::Odd, alpha.signed_radical()?))
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn translation(&self) -> &LatticeVector {
        &self.t
    }

    pub fn nullity(&self) -> usize {
        self.t.nullity()
    }

    pub fn is_identity(&self) -> bool {
        self.parity == Parity::Even && self.t.is_zero()
    }

    /// `w₁w₂ = (ε₁ε₂, ε₂T₁ + T₂)`.
    pub fn multiply(&self, other: &WeylElement) -> Result<Self> {
        check_nullity(self.nullity(), other.nullity())?;
        let t = self
            .t
            .checked_scale(other.parity.sign())?
            .checked_add(&other.t)?;
        Ok(Self::new(self.parity.combine(other.parity), t))
    }

    /// `w⁻¹ = (ε, −ε·T)`.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::new(
            self.parity,
            self.t.checked_scale(-self.parity.sign())?,
        ))
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &WeylElement) -> Result<Self> {
        self.multiply(other)?.multiply(&self.inverse()?)
    }

    /// `w^n` for any integer `n`; negative powers use the inverse.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let mut base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = Self::identity(self.nullity())?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// `w(α) = ε(w)sgn(α)ε + p(α) − 2sgn(α)T(w)`.
    pub fn act(&self, alpha: &RootVector) -> Result<RootVector> {
        check_nullity(self.nullity(), alpha.nullity())?;
        let shift = self
            .t
            .checked_scale(2)
            .and_then(|t2| t2.checked_scale(alpha.k))?;
        RootVector::new(
            self.parity.sign() * alpha.k,
            alpha.sigma.checked_sub(&shift)?,
        )
    }

    /// The image `ε(w)(ε + T(w))` in `±ε + Λ`; a bijection from `W`.
    pub fn signed_root(&self) -> Result<RootVector> {
        RootVector::new(
            self.parity.sign(),
            self.t.checked_scale(self.parity.sign())?,
        )
    }

    /// Inverse of [`WeylElement::signed_root`].
    pub fn from_signed_root(root: &RootVector) -> Result<Self> {
        let parity = Parity::from_sign(root.k)?;
        Ok(Self::new(parity, root.sigma.checked_scale(root.k)?))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+}, {})", self.parity.sign(), self.t)
    }
}

/// A product `w_{α₁}⋯w_{α_n}` of reflections at non-isotropic roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<RootVector>")]
pub struct Word {
    nullity: usize,
    letters: Vec<RootVector>,
}

impl From<Word> for Vec<RootVector> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

impl Word {
    pub fn new(nullity: usize, letters: Vec<RootVector>) -> Result<Self> {
        if nullity == 0 {
            return Err(Error::ZeroNullity);
        }
        for letter in &letters {
            check_nullity(nullity, letter.nullity())?;
            if letter.is_isotropic() {
                return Err(Error::IsotropicRoot);
            }
        }
        Ok(Word { nullity, letters })
    }

    pub fn empty(nullity: usize) -> Result<Self> {
        Self::new(nullity, Vec::new())
    }

    /// The two-letter-at-most expression `w_ε^δ w_{ε+T(w)}` of `w`, or the
    /// empty word for the identity.
    pub fn canonical(w: &WeylElement) -> Result<Self> {
        let nullity = w.nullity();
        if w.is_identity() {
            return Self::empty(nullity);
        }
        let tail = RootVector::new(1, w.t.clone())?;
        let letters = match w.parity {
            Parity::Odd => vec![tail],
            Parity::Even => vec![RootVector::epsilon(nullity)?, tail],
        };
        Self::new(nullity, letters)
    }

    pub fn nullity(&self) -> usize {
        self.nullity
    }

    pub fn letters(&self) -> &[RootVector] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Left-to-right product of the letters' reflections.
    pub fn evaluate(&self) -> Result<WeylElement> {
        self.letters
            .iter()
            .try_fold(WeylElement::identity(self.nullity)?, |acc, letter| {
                acc.multiply(&WeylElement::reflection(letter)?)
            })
    }

    /// `((−1)^n, Σᵢ (−1)^{n−i} sgn(αᵢ)p(αᵢ))` computed directly from the
    /// letters, without composing group elements.
    pub fn epsilon_t(&self) -> Result<(Parity, LatticeVector)> {
        let n = self.letters.len();
        let mut sum = LatticeVector::zero(self.nullity)?;
        for (i, letter) in self.letters.iter().enumerate() {
            // 1-based position i+1, exponent n-(i+1)
            let sign = if (n - i - 1).is_multiple_of(2) { 1 } else { -1 };
            sum = sum.checked_add(&letter.signed_radical()?.checked_scale(sign)?)?;
        }
        Ok((Parity::of_len(n), sum))
    }

    /// Whether the letters form an alternating tuple: even length and
    /// `Σᵢ (−1)^i sgn(αᵢ)p(αᵢ) = 0`. This holds exactly when the word
    /// evaluates to the identity.
    pub fn is_alternating(&self) -> Result<bool> {
        if !self.letters.len().is_multiple_of(2) {
            return Ok(false);
        }
        let mut sum = LatticeVector::zero(self.nullity)?;
        for (i, letter) in self.letters.iter().enumerate() {
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            sum = sum.checked_add(&letter.signed_radical()?.checked_scale(sign)?)?;
        }
        Ok(sum.is_zero())
    }
}
