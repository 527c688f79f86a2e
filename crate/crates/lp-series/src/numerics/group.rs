//! Real 2×2 unimodular matrices: Möbius action on the extended line, the
//! Radon–Nikodym derivative, and the Iwasawa decomposition.

use std::ops::Mul;

use crate::{Error, Result};

const DET_TOLERANCE: f64 = 1e-12;

/// Element of `SL₂(ℝ)` as the matrix `[[a, b], [c, d]]`, `ad − bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement2x2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GroupElement2x2 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if (det - 1.0).abs() > DET_TOLERANCE {
            return Err(Error::NotUnimodular(det));
        }
        Ok(GroupElement2x2 { a, b, c, d })
    }

    pub fn identity() -> Self {
        GroupElement2x2 {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    /// `[[cos θ, −sin θ], [sin θ, cos θ]]`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        GroupElement2x2 {
            a: c,
            b: -s,
            c: s,
            d: c,
        }
    }

    /// `diag(eᵗ, e⁻ᵗ)`.
    pub fn diagonal(t: f64) -> Self {
        GroupElement2x2 {
            a: t.exp(),
            b: 0.0,
            c: 0.0,
            d: (-t).exp(),
        }
    }

    /// Upper-triangular unipotent `[[1, x], [0, 1]]`.
    pub fn shear(x: f64) -> Self {
        GroupElement2x2 {
            a: 1.0,
            b: x,
            c: 0.0,
            d: 1.0,
        }
    }

    /// `[[cosh t, sinh t], [sinh t, cosh t]]`, the symmetric hyperbolic
    /// one-parameter subgroup.
    pub fn symmetric(t: f64) -> Self {
        let (ch, sh) = (t.cosh(), t.sinh());
        GroupElement2x2 {
            a: ch,
            b: sh,
            c: sh,
            d: ch,
        }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Adjugate; exact inverse for unimodular matrices.
    pub fn inverse(&self) -> Self {
        GroupElement2x2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn max_entry(&self) -> f64 {
        self.a
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max(self.d.abs())
    }
}

impl Mul for &GroupElement2x2 {
    type Output = GroupElement2x2;
    fn mul(self, rhs: &GroupElement2x2) -> GroupElement2x2 {
        GroupElement2x2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// Möbius action `x ↦ (ax + b)/(cx + d)` on the projective line; the single
/// point at infinity is represented by `f64::INFINITY` in either direction.
pub fn mobius(g: &GroupElement2x2, x: f64) -> f64 {
    if x.is_infinite() {
        return if g.c != 0.0 { g.a / g.c } else { f64::INFINITY };
    }
    let den = g.c * x + g.d;
    if den == 0.0 {
        f64::INFINITY
    } else {
        (g.a * x + g.b) / den
    }
}

/// The derivative `1/(cx + d)²` of the Möbius map of `g` at `x`.
pub fn radon_nikodym(g: &GroupElement2x2, x: f64) -> Result<f64> {
    let den = g.c * x + g.d;
    if den == 0.0 {
        return Err(Error::RadonNikodymPole);
    }
    Ok(1.0 / (den * den))
}

/// Components of `g = κ · μ · exp(H·H₀) · n` with `κ` a rotation by an angle
/// in `[0, π)` (a fundamental domain for `K/M`), `μ = ±1` the `M`-part,
/// `H₀ = diag(1, −1)` and `n` upper-triangular unipotent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IwasawaComponents {
    pub kappa: f64,
    pub h: f64,
    pub n_part: f64,
    pub mu_sign: i8,
}

impl IwasawaComponents {
    pub fn recompose(&self) -> GroupElement2x2 {
        let mu = f64::from(self.mu_sign);
        let a = &GroupElement2x2 {
            a: mu * self.h.exp(),
            b: 0.0,
            c: 0.0,
            d: mu * (-self.h).exp(),
        };
        &(&GroupElement2x2::rotation(self.kappa) * a) * &GroupElement2x2::shear(self.n_part)
    }
}

/// Iwasawa KMAN decomposition of `g`.
pub fn iwasawa(g: &GroupElement2x2) -> IwasawaComponents {
    // First column of g is mu * e^h * (cos kappa, sin kappa).
    let r = g.a.hypot(g.c);
    let theta = g.c.atan2(g.a);
    let (kappa, mu_sign) = if (0.0..std::f64::consts::PI).contains(&theta) {
        (theta, 1i8)
    } else if theta < 0.0 {
        (theta + std::f64::consts::PI, -1i8)
    } else {
        // theta == pi exactly
        (0.0, -1i8)
    };
    let h = r.ln();
    // n = a^{-1} mu^{-1} kappa^{-1} g; its (1,2) entry is the shear.
    let (s, c) = kappa.sin_cos();
    let m12 = c * g.b + s * g.d;
    let n_part = f64::from(mu_sign) * m12 / r;
    IwasawaComponents {
        kappa,
        h,
        n_part,
        mu_sign,
    }
}
