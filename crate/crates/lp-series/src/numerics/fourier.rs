//! Truncated Fourier series on the circle and the uniform trapezoid
//! quadrature against the rotation-invariant probability measure.

use num_complex::Complex64;
use rand::Rng;

use crate::classifier::Parity;
use crate::{Error, Result};

/// Truncated Fourier series `Σ_{|n| ≤ B} c_n e^{inφ}`, evaluable exactly at
/// any angle (and, through the cotangent chart, at any point of the line).
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    bandlimit: usize,
    /// Coefficient of mode `n` lives at index `n + bandlimit`.
    coeffs: Vec<Complex64>,
}

impl TestFunction {
    pub fn new(bandlimit: usize, coeffs: Vec<Complex64>) -> Self {
        assert_eq!(coeffs.len(), 2 * bandlimit + 1);
        TestFunction { bandlimit, coeffs }
    }

    /// The single mode `e^{inφ}`.
    pub fn mode(n: i64) -> Self {
        let b = n.unsigned_abs() as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * b + 1];
        coeffs[(n + b as i64) as usize] = Complex64::new(1.0, 0.0);
        TestFunction {
            bandlimit: b,
            coeffs,
        }
    }

    pub fn bandlimit(&self) -> usize {
        self.bandlimit
    }

    pub fn coefficient(&self, n: i64) -> Complex64 {
        let idx = n + self.bandlimit as i64;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[idx as usize]
        }
    }

    pub fn eval(&self, phi: f64) -> Complex64 {
        let z = Complex64::new(0.0, phi).exp();
        let mut w = Complex64::new(0.0, -(self.bandlimit as f64) * phi).exp();
        let mut sum = Complex64::new(0.0, 0.0);
        for c in &self.coeffs {
            sum += c * w;
            w *= z;
        }
        sum
    }

    /// Seeded random series with a unit dominant mode and a tail of total
    /// mass at most 0.6, so the modulus stays bounded away from zero and
    /// integrands of `|F|^p` keep an analyticity strip. With `Some(parity)`
    /// only modes of that parity are populated.
    pub fn random<R: Rng>(rng: &mut R, bandlimit: usize, parity: Option<Parity>) -> Self {
        let keep = |n: i64| match parity {
            None => true,
            Some(p) => p.matches(n),
        };
        let dominant: i64 = match parity {
            Some(Parity::Odd) => 1,
            _ => 0,
        };
        assert!(bandlimit as i64 >= dominant);
        let b = bandlimit as i64;
        let modes: Vec<i64> = (-b..=b).filter(|&n| keep(n) && n != dominant).collect();
        let weights: Vec<f64> = modes
            .iter()
            .map(|&n| 1.0 / (1.0 + ((n - dominant) as f64).powi(2)))
            .collect();
        let total: f64 = weights.iter().sum();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * bandlimit + 1];
        coeffs[(dominant + b) as usize] = Complex64::new(1.0, 0.0);
        for (n, w) in modes.into_iter().zip(weights) {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let radius: f64 = rng.gen_range(0.0..1.0);
            coeffs[(n + b) as usize] =
                0.6 * w / total * radius * Complex64::new(0.0, angle).exp();
        }
        TestFunction {
            bandlimit,
            coeffs,
        }
    }
}

/// Uniform quadrature `φ_k = 2π(k + offset)/N`, weight `1/N`, against the
/// rotation-invariant probability measure on the circle. The default offset
/// `1/2` keeps `cot φ_k` finite for even `N`, so the same node set serves
/// the line picture through `x_k = cot φ_k`.
#[derive(Debug, Clone)]
pub struct Quadrature {
    nodes: Vec<f64>,
    offset: f64,
}

impl Quadrature {
    pub fn circle(n: usize) -> Self {
        Quadrature::with_offset(n, 0.5)
    }

    pub fn with_offset(n: usize, offset: f64) -> Self {
        assert!(n >= 2);
        let nodes = (0..n)
            .map(|k| std::f64::consts::TAU * (k as f64 + offset) / n as f64)
            .collect();
        Quadrature { nodes, offset }
    }

    /// Node count rule for exactness on trigonometric polynomials through
    /// the `|·|^p` compositions used here: `N ≥ 4B + 4`.
    pub fn for_bandlimit(n: usize, bandlimit: usize) -> Result<Self> {
        let required = 4 * bandlimit + 4;
        if n < required {
            return Err(Error::QuadratureTooCoarse {
                nodes: n,
                bandlimit,
                required,
            });
        }
        Ok(Quadrature::circle(n))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// The uniform weight `1/N`.
    pub fn weight(&self) -> f64 {
        1.0 / self.nodes.len() as f64
    }

    /// Circle nodes mapped to the line chart `x = cot φ`.
    pub fn line_nodes(&self) -> impl Iterator<Item = f64> + '_ {
        self.nodes.iter().map(|phi| phi.cos() / phi.sin())
    }

    /// `((1/N) Σ |f(φ_k)|^p)^{1/p}` — the `L_p` norm on the circle.
    pub fn norm_circle(&self, f: impl Fn(f64) -> Complex64, p: f64) -> f64 {
        debug_assert!(p >= 1.0);
        let sum: f64 = self
            .nodes
            .iter()
            .map(|&phi| f(phi).norm().powf(p))
            .sum();
        (self.weight() * sum).powf(1.0 / p)
    }

    /// `L_p(ℝ, dx)` norm through the cotangent substitution:
    /// `∫|f|^p dx = ∫ |f(cot φ)|^p / sin²φ dφ` over a half turn.
    pub fn norm_line(&self, f: impl Fn(f64) -> Complex64, p: f64) -> f64 {
        debug_assert!(p >= 1.0);
        let sum: f64 = self
            .nodes
            .iter()
            .map(|&phi| {
                let s = phi.sin();
                f(phi.cos() / s).norm().powf(p) / (s * s)
            })
            .sum();
        (std::f64::consts::PI * self.weight() * sum).powf(1.0 / p)
    }

    /// Bilinear pairing `∫ f(x) h(x) dx` on the line, same substitution.
    pub fn pair_line(
        &self,
        f: impl Fn(f64) -> Complex64,
        h: impl Fn(f64) -> Complex64,
    ) -> Complex64 {
        let sum: Complex64 = self
            .nodes
            .iter()
            .map(|&phi| {
                let s = phi.sin();
                let x = phi.cos() / s;
                f(x) * h(x) / (s * s)
            })
            .sum();
        std::f64::consts::PI * self.weight() * sum
    }

    /// Fourier coefficient `(1/N) Σ f(φ_k) e^{−i·mode·φ_k}`.
    pub fn fourier_coefficient(&self, f: impl Fn(f64) -> Complex64, mode: i64) -> Complex64 {
        let sum: Complex64 = self
            .nodes
            .iter()
            .map(|&phi| f(phi) * Complex64::new(0.0, -(mode as f64) * phi).exp())
            .sum();
        self.weight() * sum
    }
}

/// `L_p` norm against the rotation-invariant probability measure on the
/// circle (the quadrature's native picture).
pub fn lp_norm(f: impl Fn(f64) -> Complex64, p: f64, quad: &Quadrature) -> f64 {
    quad.norm_circle(f, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weights_sum_to_one() {
        for n in [4usize, 7, 64, 1024] {
            let q = Quadrature::circle(n);
            assert_abs_diff_eq!(q.weight() * q.len() as f64, 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn bandlimit_rule_is_enforced() {
        assert!(Quadrature::for_bandlimit(68, 16).is_ok());
        assert!(matches!(
            Quadrature::for_bandlimit(67, 16),
            Err(Error::QuadratureTooCoarse { required: 68, .. })
        ));
    }

    #[test]
    fn norm_examples() {
        let q = Quadrature::circle(64);
        let one = |_: f64| Complex64::new(1.0, 0.0);
        for p in [1.0, 2.0, 3.5, 7.0] {
            assert_abs_diff_eq!(q.norm_circle(one, p), 1.0, epsilon = 1e-14);
        }

        let cos = |phi: f64| Complex64::new(phi.cos(), 0.0);
        assert_abs_diff_eq!(
            q.norm_circle(cos, 2.0),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-10
        );
        // ∫ cos⁴ = 3/8 on the normalized circle.
        assert_abs_diff_eq!(
            q.norm_circle(cos, 4.0),
            (3.0f64 / 8.0).powf(0.25),
            epsilon = 1e-8
        );

        let q8 = Quadrature::circle(8);
        assert_abs_diff_eq!(
            q8.norm_circle(cos, 2.0),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-10
        );
    }

    #[test]
    fn mode_evaluation_and_projection() {
        let f = TestFunction::mode(3);
        let q = Quadrature::circle(32);
        let c3 = q.fourier_coefficient(|phi| f.eval(phi), 3);
        let c1 = q.fourier_coefficient(|phi| f.eval(phi), 1);
        assert_abs_diff_eq!(c3.re, 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(c3.im, 0.0, epsilon = 1e-13);
        assert!(c1.norm() < 1e-13);
    }

    #[test]
    fn random_series_respects_parity_and_stays_away_from_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for parity in [Parity::Even, Parity::Odd] {
            let f = TestFunction::random(&mut rng, 16, Some(parity));
            for n in -16i64..=16 {
                if !parity.matches(n) {
                    assert_eq!(f.coefficient(n).norm(), 0.0);
                }
            }
            let q = Quadrature::circle(256);
            for &phi in q.nodes() {
                assert!(f.eval(phi).norm() >= 0.35);
            }
        }
    }

    #[test]
    fn p_two_norm_matches_parseval_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for bandlimit in [4usize, 9, 16] {
            let f = TestFunction::random(&mut rng, bandlimit, None);
            let q = Quadrature::for_bandlimit(4 * bandlimit + 4, bandlimit).unwrap();
            let parseval: f64 = (-(bandlimit as i64)..=bandlimit as i64)
                .map(|n| f.coefficient(n).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert_abs_diff_eq!(
                q.norm_circle(|phi| f.eval(phi), 2.0),
                parseval,
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn line_norm_agrees_with_circle_norm_for_pulled_functions() {
        // Checked thoroughly in pi.rs; here only the substitution identity
        // for the flat weight (p-independent decay).
        let q = Quadrature::circle(512);
        let f = TestFunction::mode(2);
        let p = 2.7;
        let pulled = move |x: f64| {
            let phi = 1.0f64.atan2(x);
            let w = (std::f64::consts::PI * (1.0 + x * x)).powf(-1.0 / p);
            w * f.eval(phi)
        };
        let circle = q.norm_circle(|phi| TestFunction::mode(2).eval(phi), p);
        assert_abs_diff_eq!(q.norm_line(pulled, p), circle, epsilon = 1e-10);
    }
}
