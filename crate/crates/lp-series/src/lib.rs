//! Classification of the completely irreducible isometric representations of
//! rank-one simple Lie groups on `L_p` spaces, `p ∈ (1, ∞) \ {2}`.
//!
//! Every such representation is a twisted principal series `π(P, χ, λ, p)`
//! attached to the minimal parabolic `P = MAN`, a unitary character `χ` of
//! `M`, a spectral parameter `λ ∈ ℝ` and the exponent `p`. Its infinitesimal
//! character is `ν = iλ + (2/p − 1)·ρ₂`, which places the whole family inside
//! the nonunitary principal series strip; irreducibility and equivalence are
//! therefore decided by classical criteria evaluated at `ν`, in exact rational
//! arithmetic.
//!
//! The crate is organised as follows:
//!
//! * [`structure`] — exact structural constants (root-space dimensions, `t_α`,
//!   `n_α`, `ρ₂`) for each supported group and the derived quantities
//!   `ρ_{Q,p}`, `δ_p`, `ν`.
//! * [`classifier`] — the irreducibility verdicts (Kostant, Kraljević s-vector,
//!   Thieleker), the finite exceptional p-sets at `λ = 0`, and the equivalence
//!   relation `(χ, λ, p) ~ (χ̄, λ, p) ~ (χ̄, −λ, q)` with `q` the conjugate
//!   exponent.
//! * [`gk`] — the symbolic `(g, K)`-module of `SL₂(ℝ)`: K-type ladder with
//!   raising/lowering coefficients `(ν + 1 ± n)/2`, reducibility detection by
//!   vanishing ladder coefficients, and exact bracket checks.
//! * [`numerics`] — the concrete `L_p` operator picture for `SL₂(ℝ)` on the
//!   projective line and on the circle, with spectrally accurate quadrature
//!   used to verify isometry, the homomorphism and cocycle identities, the
//!   `L_p × L_q` duality pairing, and the ladder coefficients by finite
//!   differences.
//!
//! The `parallel` feature (on by default) runs the Monte-Carlo verification
//! trials of [`numerics::verify_suite`] on a rayon thread pool; without it the
//! sequential fallback is used. The two paths produce identical reports.
//!
//! ```
//! use lp_series::classifier::{decide, exceptional_p_set, CharacterLabel, ReprParams};
//! use lp_series::structure::GroupId;
//! use num_rational::Rational64;
//!
//! // F4 at lambda = 0 is reducible exactly at six exponents, 11/2 among them.
//! let p = Rational64::new(11, 2);
//! let params = ReprParams::new(GroupId::F4, CharacterLabel::Trivial, 0.0, p).unwrap();
//! assert!(!decide(&params).unwrap().irreducible);
//! assert!(exceptional_p_set(&GroupId::F4, &CharacterLabel::Trivial)
//!     .unwrap()
//!     .contains(&p));
//! ```

pub mod classifier;
mod error;
pub mod gk;
pub mod numerics;
pub mod structure;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
