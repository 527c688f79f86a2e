//! Exact structural constants of the supported rank-one groups and the
//! spectral data derived from them.
//!
//! The restricted root system of a rank-one group is `{±α}` or `{±α, ±2α}`.
//! We normalise `α(H) = 1`, so linear functionals on the split Cartan are
//! plain numbers and `ρ_{Q,p}` evaluates to `(dim 𝔤_α + 2·dim 𝔤_{2α})/p`
//! (the `2α` space enters with weight two). With this normalisation the
//! classical families carry the constants
//!
//! | group      | dim 𝔤_α | dim 𝔤_{2α} | t_α      | n_α | ρ₂       |
//! |------------|----------|-------------|----------|-----|----------|
//! | SO₀(n,1)   | n − 1    | 0           | (n−1)/2  | 1   | (n−1)/2  |
//! | SU(n,1)    | 2(n−1)   | 1           | n        | 2   | n        |
//! | Sp(n,1)    | 4(n−1)   | 3           | 2n − 1   | 2   | 2n + 1   |
//! | F₄₍₋₂₀₎    | 8        | 7           | 5        | 2   | 11       |
//! | SL₂(ℂ)     | 2        | 0           | 1        | 1   | 1        |
//!
//! `SL₂(ℝ)` is the one exception: as the double cover of `SO₀(2,1)` it is
//! kept on the doubled scale in which `ρ₂ = 1` and `ν = iλ + 2/p − 1`, i.e.
//! twice the `SO₀(2,1)` values. Its table row stores the doubled constants
//! `(dim 𝔤_α, dim 𝔤_{2α}) = (2, 0)`; lattice-sensitive criteria are applied
//! through the correspondence `ν ↦ ν/2` with `SO₀(2,1)` (see [`crate::gk`]
//! and [`crate::classifier`]).

use std::fmt;

use num_rational::Rational64;
use num_traits::One;

use crate::{Error, Result};

/// A supported rank-one group. `n` is the series parameter of the three
/// classical families and must be at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupId {
    So0(u32),
    Su(u32),
    Sp(u32),
    F4,
    Sl2R,
    Sl2C,
}

impl GroupId {
    /// Checks the series-parameter constraint `n ≥ 2`.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupId::So0(n) | GroupId::Su(n) | GroupId::Sp(n) if *n < 2 => {
                Err(Error::UnsupportedGroup(format!(
                    "{}: series parameter must be at least 2, got {n}",
                    self.family_name()
                )))
            }
            _ => Ok(()),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GroupId::So0(_) => "SO0",
            GroupId::Su(_) => "SU",
            GroupId::Sp(_) => "Sp",
            GroupId::F4 => "F4",
            GroupId::Sl2R => "SL2R",
            GroupId::Sl2C => "SL2C",
        }
    }

    pub fn n(&self) -> Option<u32> {
        match self {
            GroupId::So0(n) | GroupId::Su(n) | GroupId::Sp(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::So0(n) => write!(f, "SO0({n},1)"),
            GroupId::Su(n) => write!(f, "SU({n},1)"),
            GroupId::Sp(n) => write!(f, "Sp({n},1)"),
            GroupId::F4 => write!(f, "F4(-20)"),
            GroupId::Sl2R => write!(f, "SL2(R)"),
            GroupId::Sl2C => write!(f, "SL2(C)"),
        }
    }
}

/// Root-system constants of a rank-one group, on the `α(H) = 1` scale
/// (doubled scale for `SL₂(ℝ)`, see the module docs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    pub dim_g_alpha: u32,
    pub dim_g_2alpha: u32,
    /// `dim 𝔤_α / 2`, plus one when `2α` is a root.
    pub t_alpha: Rational64,
    /// Integrality lattice `n_α·ℤ`: 1 without a `2α` root, 2 with one.
    pub n_alpha: i64,
    /// Half-sum of positive roots: `dim 𝔤_α / 2 + dim 𝔤_{2α}`.
    pub rho2: Rational64,
}

impl RootData {
    fn from_dims(dim_g_alpha: u32, dim_g_2alpha: u32) -> Self {
        let half = Rational64::new(i64::from(dim_g_alpha), 2);
        let (t_alpha, n_alpha) = if dim_g_2alpha == 0 {
            (half, 1)
        } else {
            (half + Rational64::one(), 2)
        };
        RootData {
            dim_g_alpha,
            dim_g_2alpha,
            t_alpha,
            n_alpha,
            rho2: half + Rational64::from_integer(i64::from(dim_g_2alpha)),
        }
    }
}

/// Returns the table row for the group.
pub fn root_data(group: &GroupId) -> Result<RootData> {
    group.validate()?;
    let n = i64::from(group.n().unwrap_or(0));
    Ok(match group {
        GroupId::So0(_) => RootData::from_dims((n - 1) as u32, 0),
        GroupId::Su(_) => RootData::from_dims((2 * (n - 1)) as u32, 1),
        GroupId::Sp(_) => RootData::from_dims((4 * (n - 1)) as u32, 3),
        GroupId::F4 => RootData::from_dims(8, 7),
        // Double-cover scale: twice the SO0(2,1) row, so that rho2 = 1 and
        // nu = i*lambda + 2/p - 1.
        GroupId::Sl2R => RootData::from_dims(2, 0),
        GroupId::Sl2C => RootData::from_dims(2, 0),
    })
}

/// `δ_p = 2/p − 1`, the shift placing the `L_p` series inside the strip
/// `(−1, 1)` of the nonunitary principal series.
pub fn delta_p(p: &Rational64) -> Rational64 {
    Rational64::new(2, 1) / p - Rational64::one()
}

/// The p-weighted half-sum `ρ_{Q,p} = (dim 𝔤_α + 2·dim 𝔤_{2α})/p`.
///
/// Satisfies `rho_p(g, 2) = rho2(g)` and more generally
/// `rho_p(g, p) = (2/p)·rho2(g)`.
pub fn rho_p(group: &GroupId, p: &Rational64) -> Result<Rational64> {
    if *p <= Rational64::one() {
        return Err(Error::ExponentOutOfRange(*p));
    }
    let rd = root_data(group)?;
    let weighted = i64::from(rd.dim_g_alpha) + 2 * i64::from(rd.dim_g_2alpha);
    Ok(Rational64::from_integer(weighted) / p)
}

/// The spectral parameter `ν = iλ + δ_p·ρ₂`: exact rational real part,
/// floating imaginary part `λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRational {
    pub re: Rational64,
    pub im: f64,
}

impl ComplexRational {
    pub fn real(re: Rational64) -> Self {
        ComplexRational { re, im: 0.0 }
    }

    pub fn im_is_zero(&self) -> bool {
        self.im == 0.0
    }

    pub fn re_f64(&self) -> f64 {
        *self.re.numer() as f64 / *self.re.denom() as f64
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im_is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

/// `ν(λ, p) = iλ + (2/p − 1)·ρ₂` for the group's normalisation.
pub fn nu(group: &GroupId, lambda: f64, p: &Rational64) -> Result<ComplexRational> {
    if *p <= Rational64::one() {
        return Err(Error::ExponentOutOfRange(*p));
    }
    let rd = root_data(group)?;
    Ok(ComplexRational {
        re: delta_p(p) * rd.rho2,
        im: lambda,
    })
}
