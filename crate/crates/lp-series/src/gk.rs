//! Symbolic `(𝔤, K)`-module of the `SL₂(ℝ)` principal series `I_{P,χ,ν}`.
//!
//! The K-finite vectors are spanned by the Fourier modes `f_n`, `n` even for
//! the trivial character and odd for the sign character. In the complexified
//! basis
//!
//! ```text
//! W  = [[0, 1], [-1, 0]]            (rotation generator, W·f_n = i n f_n)
//! E± = ([[1, 0], [0, -1]] ± i [[0, 1], [1, 0]]) / 2
//! ```
//!
//! the module action is `E±·f_n = ½(ν + 1 ± n)·f_{n±2}`, with the bracket
//! relations `[W, E±] = ±2i E±` and `[E₊, E₋] = −i W`. The raising and
//! lowering coefficients are held exactly over the Gaussian rationals, so a
//! vanishing coefficient — the reducibility mechanism — is detected without
//! tolerance. The scale of `E±` is pinned by the finite-difference oracle in
//! [`crate::numerics`], which recovers the same coefficients from the
//! derivative of the operator picture along the three real one-parameter
//! subgroups.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::classifier::{CharacterLabel, Parity};
use crate::{Error, Result};

/// Exact complex scalar with rational real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussRational {
    pub re: Rational64,
    pub im: Rational64,
}

impl GaussRational {
    pub const fn new(re: Rational64, im: Rational64) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rational64::zero(), Rational64::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rational64::one(), Rational64::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::new(Rational64::zero(), Rational64::one())
    }

    pub fn from_integer(v: i64) -> Self {
        GaussRational::new(Rational64::from_integer(v), Rational64::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `max(|re|, |im|)`, an exact norm adequate for zero tests.
    pub fn sup_norm(&self) -> Rational64 {
        self.re.abs().max(self.im.abs())
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            *self.re.numer() as f64 / *self.re.denom() as f64,
            *self.im.numer() as f64 / *self.im.denom() as f64,
        )
    }
}

impl From<Rational64> for GaussRational {
    fn from(re: Rational64) -> Self {
        GaussRational::new(re, Rational64::zero())
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussRational::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// Basis element of the complexified Lie algebra acting on the ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieElement {
    W,
    EPlus,
    EMinus,
}

/// Finite formal linear combination of K-type basis vectors `f_n`.
///
/// Zero coefficients are pruned, so `terms` holds the support.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LadderVector {
    terms: BTreeMap<i64, GaussRational>,
}

impl LadderVector {
    pub fn zero() -> Self {
        LadderVector::default()
    }

    pub fn basis(n: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(n, GaussRational::one());
        LadderVector { terms }
    }

    pub fn from_terms(entries: impl IntoIterator<Item = (i64, GaussRational)>) -> Self {
        let mut v = LadderVector::zero();
        for (n, c) in entries {
            v.add_term(n, c);
        }
        v
    }

    fn add_term(&mut self, n: i64, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(n).or_insert_with(GaussRational::zero);
        *entry = *entry + c;
        if entry.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn coefficient(&self, n: i64) -> GaussRational {
        self.terms.get(&n).copied().unwrap_or_else(GaussRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, GaussRational)> + '_ {
        self.terms.iter().map(|(n, c)| (*n, *c))
    }

    pub fn scale(&self, s: GaussRational) -> Self {
        LadderVector::from_terms(self.iter().map(|(n, c)| (n, c * s)))
    }

    /// Largest coefficient sup-norm; zero for the zero vector.
    pub fn max_coeff_norm(&self) -> Rational64 {
        self.terms
            .values()
            .map(GaussRational::sup_norm)
            .max()
            .unwrap_or_else(Rational64::zero)
    }

    fn matches_parity(&self, parity: Parity) -> bool {
        self.indices().all(|n| parity.matches(n))
    }
}

impl Add for &LadderVector {
    type Output = LadderVector;
    fn add(self, rhs: &LadderVector) -> LadderVector {
        let mut out = self.clone();
        for (n, c) in rhs.iter() {
            out.add_term(n, c);
        }
        out
    }
}

impl Sub for &LadderVector {
    type Output = LadderVector;
    fn sub(self, rhs: &LadderVector) -> LadderVector {
        let mut out = self.clone();
        for (n, c) in rhs.iter() {
            out.add_term(n, -c);
        }
        out
    }
}

fn chi_parity(chi: &CharacterLabel) -> Result<Parity> {
    chi.sl2r_parity().ok_or(Error::NotAnSl2Character)
}

/// The raising/lowering coefficient `½(ν + 1 ± n)` of `E±` at `f_n`.
pub fn ladder_coefficient(nu: &GaussRational, n: i64, raising: bool) -> GaussRational {
    let shift = if raising { n } else { -n };
    let half = GaussRational::from(Rational64::new(1, 2));
    (*nu + GaussRational::from_integer(1 + shift)) * half
}

/// Same coefficient over floating complex scalars, for the finite-difference
/// validation path.
pub fn ladder_coefficient_f64(nu: Complex64, n: i64, raising: bool) -> Complex64 {
    let shift = if raising { n } else { -n } as f64;
    0.5 * (nu + Complex64::new(1.0 + shift, 0.0))
}

/// Applies a Lie algebra basis element to a ladder vector:
/// `W·f_n = i n f_n` and `E±·f_n = ½(ν + 1 ± n)·f_{n±2}`, extended linearly.
pub fn act(
    x: LieElement,
    chi: &CharacterLabel,
    nu: &GaussRational,
    v: &LadderVector,
) -> Result<LadderVector> {
    let parity = chi_parity(chi)?;
    if !v.matches_parity(parity) {
        return Err(Error::ParityMismatch);
    }
    let terms = v.iter().map(|(n, c)| match x {
        LieElement::W => (
            n,
            c * GaussRational::new(Rational64::zero(), Rational64::from_integer(n)),
        ),
        LieElement::EPlus => (n + 2, c * ladder_coefficient(nu, n, true)),
        LieElement::EMinus => (n - 2, c * ladder_coefficient(nu, n, false)),
    });
    Ok(LadderVector::from_terms(terms))
}

/// Reducibility of `I_{P,χ,ν}` by a vanishing ladder coefficient: `ν` an odd
/// integer for the trivial character, an even integer (zero included) for
/// the sign character.
pub fn detect_reducible(chi: &CharacterLabel, nu: &GaussRational) -> Result<bool> {
    let parity = chi_parity(chi)?;
    if !nu.im.is_zero() || !nu.re.is_integer() {
        return Ok(false);
    }
    let v = nu.re.to_integer();
    Ok(match parity {
        Parity::Even => v.rem_euclid(2) == 1,
        Parity::Odd => v.rem_euclid(2) == 0,
    })
}

/// Residual of the bracket identities `[W, E±] = ±2i E±` and
/// `[E₊, E₋] = −i W` evaluated through [`act`] on `f_n`; exactly zero for
/// every `(χ, ν, n)` of matching parity.
pub fn bracket_check(chi: &CharacterLabel, nu: &GaussRational, n: i64) -> Result<Rational64> {
    let v = LadderVector::basis(n);
    let apply = |x: LieElement, w: &LadderVector| act(x, chi, nu, w);
    let commutator = |x: LieElement, y: LieElement| -> Result<LadderVector> {
        let xy = apply(x, &apply(y, &v)?)?;
        let yx = apply(y, &apply(x, &v)?)?;
        Ok(&xy - &yx)
    };
    let two_i = GaussRational::new(Rational64::zero(), Rational64::from_integer(2));

    let r_plus = &commutator(LieElement::W, LieElement::EPlus)?
        - &apply(LieElement::EPlus, &v)?.scale(two_i);
    let r_minus = &commutator(LieElement::W, LieElement::EMinus)?
        - &apply(LieElement::EMinus, &v)?.scale(-two_i);
    let r_cartan = &commutator(LieElement::EPlus, LieElement::EMinus)?
        + &apply(LieElement::W, &v)?.scale(GaussRational::i());

    Ok(r_plus
        .max_coeff_norm()
        .max(r_minus.max_coeff_norm())
        .max(r_cartan.max_coeff_norm()))
}
