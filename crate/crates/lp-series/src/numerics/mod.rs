//! Concrete `L_p` operator realization of the `SL₂(ℝ)` principal series and
//! its quadrature-based verification.
//!
//! Two equivalent pictures are implemented. In the line picture the group
//! acts on functions on the projective line by
//!
//! ```text
//! π(P, χ, λ, p)(g) f(x) = sgn(cx+d)^ε · |cx+d|^{−iλ−2/p} · f((ax+b)/(cx+d)),
//! ```
//!
//! where `[[a, b], [c, d]]` are the entries of `g⁻¹` and `ε` is 1 for the
//! sign character; this is an isometry of `L_p(ℝ, dx)`. In the compact
//! picture the same operators act on functions on the circle (the double
//! cover of the projective line) through the Iwasawa cocycle
//! `j_h(φ) = |h·u(φ)|⁻²`; there the character enters only through the parity
//! of the function. Functions are evaluable truncated Fourier series, never
//! grid samples, so Möbius pullbacks cost no interpolation and the uniform
//! trapezoid rule keeps spectral accuracy.

mod fourier;
mod group;
mod pi;
mod suite;

pub use fourier::{lp_norm, Quadrature, TestFunction};
pub use group::{iwasawa, mobius, radon_nikodym, GroupElement2x2, IwasawaComponents};
pub use pi::{
    apply_pi, circle_pi, eval_fn, generator_coefficient_fd, pull_circle, pull_to_line,
    sign_cocycle, EvalFn, GeneratorPath,
};
pub use suite::{verify_suite, verify_suite_sequential, PropertyReport, SuiteConfig};

#[cfg(feature = "parallel")]
pub use suite::verify_suite_parallel;
