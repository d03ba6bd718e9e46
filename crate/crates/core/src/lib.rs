//! Exact arithmetic for the Weyl group of extended affine root systems of
//! type `A₁` in nullity `ν`.
//!
//! `A = ℤε ⊕ ℤσ₁ ⊕ … ⊕ ℤσ_ν` carries the form `(α, β) = 2·sgn(α)·sgn(β)`; the
//! radical is `Λ = ℤσ₁ ⊕ … ⊕ ℤσ_ν`. The toroidal root system is
//! `Λ ∪ (±ε + Λ)` and its Weyl group `W` is generated by the reflections
//! `w_α(β) = β − (β, α)α` at non-isotropic roots.
//!
//! * [`group`]: canonical form `(ε(w), T(w))`, products, inverses, action.
//! * [`height`]: the height function and positivity.
//! * [`length`]: closed-form length over the fundamental basis `Π₀` and
//!   reduced words.
//! * [`bases`]: root bases, `W`-conjugacy, the family `Π_n`.
//! * [`oracle`]: Cayley-graph search and affine (`ν = 1`) cross-checks.

pub mod bases;
pub mod error;
pub mod group;
pub mod height;
mod intmat;
pub mod lattice;
pub mod length;
pub mod oracle;

pub use bases::{
    apply_to_basis, coordinates_in, find_conjugator, fundamental_basis, invariant_matrix,
    is_root_basis, pi_n_family, RootBasis,
};
pub use error::{Error, Result};
pub use group::{pairing, Parity, RootVector, WeylElement, Word};
pub use height::{
    enumerate_roots, height, height_breakdown, height_radical, is_in_baby, is_in_toroidal,
    is_negative, is_positive, is_strictly_positive_isotropic, m_plus_minus, pi0_coordinates,
    HeightBreakdown,
};
pub use lattice::LatticeVector;
pub use length::{
    fundamental_root, length_pi0, length_wrt_conjugated_basis, pi0_generators, reduced_word_pi0,
    reflection_length, word_position_counts, Pi0Word,
};
pub use oracle::{
    affine_element, affine_translation_action, affine_twisted_action, bfs_lengths,
    classical_affine_length, inversion_count_nu1, verify_theorem_lft, BfsBall, BfsEntry,
    LengthReport,
};
