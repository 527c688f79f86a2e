//! The principal series operators in the line and the circle pictures, the
//! cotangent-chart identification between them, and the finite-difference
//! generator oracle.

use std::sync::Arc;

use num_complex::Complex64;

use crate::classifier::CharacterLabel;
use crate::gk::LieElement;
use crate::{Error, Result};

use super::fourier::{Quadrature, TestFunction};
use super::group::GroupElement2x2;

/// Pointwise-evaluable complex function (of a line point or of an angle).
pub type EvalFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// Wraps a closure as an [`EvalFn`].
pub fn eval_fn(f: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> EvalFn {
    Arc::new(f)
}

/// The sign cocycle `c(g, x) = sgn(cx + d)` of the Möbius action; `None` at
/// the pole and at infinity (a null set for every fixed `g`).
pub fn sign_cocycle(g: &GroupElement2x2, x: f64) -> Option<f64> {
    if x.is_infinite() {
        return None;
    }
    let den = g.c * x + g.d;
    if den == 0.0 {
        None
    } else {
        Some(den.signum())
    }
}

/// Line picture operator
/// `π(P, χ, λ, p)(g) f(x) = sgn(cx+d)^ε |cx+d|^{−iλ−2/p} f((ax+b)/(cx+d))`
/// with `[[a, b], [c, d]] = g⁻¹`; `χ` must be trivial or sign. Evaluation at
/// the multiplier's pole returns NaN, which quadrature callers treat as a
/// node collision (the node set is then jittered).
pub fn apply_pi(
    chi: &CharacterLabel,
    lambda: f64,
    p: f64,
    g: &GroupElement2x2,
    f: EvalFn,
) -> Result<EvalFn> {
    let sign_twist = match chi {
        CharacterLabel::Trivial => false,
        CharacterLabel::Sign => true,
        _ => return Err(Error::NotAnSl2Character),
    };
    let inv = g.inverse();
    let exponent = Complex64::new(-2.0 / p, -lambda);
    Ok(Arc::new(move |x: f64| {
        if x.is_infinite() {
            return Complex64::new(f64::NAN, f64::NAN);
        }
        let den = inv.c * x + inv.d;
        if den == 0.0 {
            return Complex64::new(f64::NAN, f64::NAN);
        }
        let mut multiplier = (exponent * den.abs().ln()).exp();
        if sign_twist && den < 0.0 {
            multiplier = -multiplier;
        }
        multiplier * f((inv.a * x + inv.b) / den)
    }))
}

/// Compact picture operator on the circle (the double cover of the
/// projective line): `Π(g) F(φ) = j_{g⁻¹}(φ)^{(ν+1)/2} F(φ_{g⁻¹}(φ))` with
/// `j_h(φ) = |h·u(φ)|⁻²` and `φ_h` the lifted angle action. The character
/// enters only through the parity of `F`.
pub fn circle_pi(nu: Complex64, g: &GroupElement2x2, f: EvalFn) -> EvalFn {
    let inv = g.inverse();
    let s = 0.5 * (nu + 1.0);
    Arc::new(move |phi: f64| {
        let (sin, cos) = phi.sin_cos();
        let v1 = inv.a * cos + inv.b * sin;
        let v2 = inv.c * cos + inv.d * sin;
        let r2 = v1 * v1 + v2 * v2;
        let psi = v2.atan2(v1);
        (-s * r2.ln()).exp() * f(psi)
    })
}

/// Transports a circle function to the line chart `x = cot φ` with the
/// weight `(π(1 + x²))^{−(ν+1)/2}`. The weight's modulus matches `L_p`
/// norms (`Re(ν+1)/2 = 1/p`) and its phase intertwines the two operator
/// pictures exactly.
pub fn pull_circle(f: EvalFn, nu: Complex64) -> EvalFn {
    let s = 0.5 * (nu + 1.0);
    Arc::new(move |x: f64| {
        if x.is_infinite() {
            return Complex64::new(0.0, 0.0);
        }
        let phi = 1.0f64.atan2(x);
        let w = (-s * (std::f64::consts::PI * (1.0 + x * x)).ln()).exp();
        w * f(phi)
    })
}

/// [`pull_circle`] of a Fourier series.
pub fn pull_to_line(f: &TestFunction, nu: Complex64) -> EvalFn {
    let f = f.clone();
    pull_circle(Arc::new(move |phi| f.eval(phi)), nu)
}

/// Real one-parameter subgroups along which generator derivatives are taken.
#[derive(Debug, Clone, Copy)]
pub enum GeneratorPath {
    /// `exp(tW) = [[cos t, sin t], [−sin t, cos t]]`.
    Rotation,
    /// `exp(t·diag(1, −1)) = diag(eᵗ, e⁻ᵗ)`.
    Diagonal,
    /// `exp(t·[[0,1],[1,0]]) = [[cosh t, sinh t], [sinh t, cosh t]]`.
    Symmetric,
}

impl GeneratorPath {
    fn element(&self, t: f64) -> GroupElement2x2 {
        match self {
            GeneratorPath::Rotation => GroupElement2x2::rotation(-t),
            GeneratorPath::Diagonal => GroupElement2x2::diagonal(t),
            GeneratorPath::Symmetric => GroupElement2x2::symmetric(t),
        }
    }
}

/// Samples of `d/dt Π(exp(tX)) f |_{t=0}` on the quadrature nodes, by a
/// fourth-order central difference along a real path.
fn path_derivative_samples(
    path: GeneratorPath,
    nu: Complex64,
    f: &EvalFn,
    quad: &Quadrature,
    step: f64,
) -> Vec<Complex64> {
    let at = |t: f64| -> Vec<Complex64> {
        let op = circle_pi(nu, &path.element(t), f.clone());
        quad.nodes().iter().map(|&phi| op(phi)).collect()
    };
    let p2 = at(2.0 * step);
    let p1 = at(step);
    let m1 = at(-step);
    let m2 = at(-2.0 * step);
    (0..quad.len())
        .map(|k| (-p2[k] + 8.0 * p1[k] - 8.0 * m1[k] + m2[k]) / (12.0 * step))
        .collect()
}

/// Finite-difference oracle for the ladder action: the Fourier coefficient
/// at `target_mode` of `dΠ(X)·e^{inφ}`, where `X` is one of the complexified
/// basis elements of [`crate::gk`] and `Π` the compact picture at `ν`.
/// `E± = (D ± i S)/2` assembles the derivative along the diagonal path `D`
/// and the symmetric path `S`.
pub fn generator_coefficient_fd(
    x: LieElement,
    nu: Complex64,
    n: i64,
    target_mode: i64,
    quad: &Quadrature,
    step: f64,
) -> Complex64 {
    let mode = TestFunction::mode(n);
    let f: EvalFn = Arc::new(move |phi| mode.eval(phi));
    let samples: Vec<Complex64> = match x {
        LieElement::W => path_derivative_samples(GeneratorPath::Rotation, nu, &f, quad, step),
        LieElement::EPlus | LieElement::EMinus => {
            let diag = path_derivative_samples(GeneratorPath::Diagonal, nu, &f, quad, step);
            let sym = path_derivative_samples(GeneratorPath::Symmetric, nu, &f, quad, step);
            let i = Complex64::new(0.0, 1.0);
            let sign = if matches!(x, LieElement::EPlus) {
                1.0
            } else {
                -1.0
            };
            diag.iter()
                .zip(&sym)
                .map(|(d, s)| 0.5 * (d + sign * i * s))
                .collect()
        }
    };
    let weight = quad.weight();
    quad.nodes()
        .iter()
        .zip(&samples)
        .map(|(&phi, &v)| v * Complex64::new(0.0, -(target_mode as f64) * phi).exp())
        .sum::<Complex64>()
        * weight
}
