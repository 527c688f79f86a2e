//! Irreducibility and equivalence of the `L_p` principal series
//! `π(P, χ, λ, p)` for the rank-one groups, and the finite exceptional p-sets
//! at `λ = 0`.
//!
//! Routing: `SO₀(n,1)` with `n ≠ 3`, `Sp(n,1)` and `F₄₍₋₂₀₎` are decided by
//! the Kostant criterion for the spherical series; `SU(n,1)` by the Kraljević
//! s-vector criterion; `SO₀(3,1)` and `SL₂(ℂ)` by the Thieleker factor
//! criterion; `SL₂(ℝ)` by the vanishing of its ladder coefficients (the
//! Kostant criterion transported to the double-cover scale, see
//! [`crate::gk`]). A nonreal `ν` (that is, `λ ≠ 0`) short-circuits every
//! integrality clause to "irreducible", so floating `λ` never contaminates
//! the exact tests.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::structure::{self, ComplexRational, GroupId, RootData};
use crate::{Error, Result};

/// Unitary character of `M` (or of `M^Ab`), as a label.
///
/// `IntChar(m)` denotes `σ = m/(n+1)` for `SU(n,1)` and the integer weight
/// `m` for `SO₀(3,1)`; `HalfIntChar(t)` denotes the half-odd-integer weight
/// `t/2` (`t` odd) on the double cover `SL₂(ℂ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterLabel {
    Trivial,
    Sign,
    IntChar(i64),
    HalfIntChar(i64),
}

/// K-type parity class of an `SL₂(ℝ)` character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(&self, index: i64) -> bool {
        match self {
            Parity::Even => index % 2 == 0,
            Parity::Odd => index % 2 != 0,
        }
    }
}

impl CharacterLabel {
    /// Builds a label from the rational weight `w`; integers become
    /// `IntChar`, half-odd-integers `HalfIntChar`.
    pub fn from_weight(w: Rational64) -> Result<Self> {
        if w.is_integer() {
            Ok(CharacterLabel::IntChar(w.to_integer()))
        } else if *w.denom() == 2 {
            Ok(CharacterLabel::HalfIntChar(*w.numer()))
        } else {
            Err(Error::UnsupportedGroup(format!(
                "character weight must be integral or half-integral, got {w}"
            )))
        }
    }

    /// The complex-conjugate character: negates integer and half-integer
    /// weights, fixes the real characters.
    pub fn conjugate(&self) -> Self {
        match self {
            CharacterLabel::Trivial => CharacterLabel::Trivial,
            CharacterLabel::Sign => CharacterLabel::Sign,
            CharacterLabel::IntChar(m) => CharacterLabel::IntChar(-m),
            CharacterLabel::HalfIntChar(t) => CharacterLabel::HalfIntChar(-t),
        }
    }

    /// The weight as a rational, where defined (`Sign` carries none).
    pub fn weight(&self) -> Option<Rational64> {
        match self {
            CharacterLabel::Trivial => Some(Rational64::zero()),
            CharacterLabel::Sign => None,
            CharacterLabel::IntChar(m) => Some(Rational64::from_integer(*m)),
            CharacterLabel::HalfIntChar(t) => Some(Rational64::new(*t, 2)),
        }
    }

    /// K-type parity of the `SL₂(ℝ)` module induced from this character.
    pub fn sl2r_parity(&self) -> Option<Parity> {
        match self {
            CharacterLabel::Trivial => Some(Parity::Even),
            CharacterLabel::Sign => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn compatible_with(&self, group: &GroupId) -> bool {
        match (group, self) {
            (_, CharacterLabel::Trivial) => true,
            (GroupId::Sl2R, CharacterLabel::Sign) => true,
            (GroupId::Su(_), CharacterLabel::IntChar(_)) => true,
            (GroupId::So0(3), CharacterLabel::IntChar(_)) => true,
            (GroupId::Sl2C, CharacterLabel::IntChar(_)) => true,
            (GroupId::Sl2C, CharacterLabel::HalfIntChar(t)) => t % 2 != 0,
            _ => false,
        }
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterLabel::Trivial => write!(f, "trivial"),
            CharacterLabel::Sign => write!(f, "sign"),
            CharacterLabel::IntChar(m) => write!(f, "{m}"),
            CharacterLabel::HalfIntChar(t) => write!(f, "{t}/2"),
        }
    }
}

/// A point of the `L_p`-dual: group, character, spectral parameter, exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct ReprParams {
    pub group: GroupId,
    pub chi: CharacterLabel,
    pub lambda: f64,
    pub p: Rational64,
}

impl ReprParams {
    pub fn new(group: GroupId, chi: CharacterLabel, lambda: f64, p: Rational64) -> Result<Self> {
        let params = ReprParams {
            group,
            chi,
            lambda,
            p,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        self.group.validate()?;
        if self.p <= Rational64::one() {
            return Err(Error::ExponentOutOfRange(self.p));
        }
        if self.p == Rational64::from_integer(2) {
            return Err(Error::ExponentIsTwo);
        }
        if !self.chi.compatible_with(&self.group) {
            return Err(Error::IncompatibleCharacter {
                group: self.group.to_string(),
                chi: self.chi.to_string(),
            });
        }
        Ok(())
    }
}

/// Which criterion produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Criterion {
    Kostant,
    Kraljevic,
    Thieleker,
    ClosedForm,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Criterion::Kostant => "Kostant",
            Criterion::Kraljevic => "Kraljevic",
            Criterion::Thieleker => "Thieleker",
            Criterion::ClosedForm => "ClosedForm",
        };
        write!(f, "{s}")
    }
}

/// Irreducibility decision together with the clause that fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub irreducible: bool,
    pub criterion: Criterion,
    pub clause: &'static str,
}

fn in_lattice(r: &Rational64, n_alpha: i64) -> bool {
    r.is_integer() && r.to_integer().rem_euclid(n_alpha) == 0
}

/// Kostant criterion for the spherical principal series: the module at `ν`
/// is reducible exactly when `ν` is real, lies outside the open interval
/// `(−t_α, t_α)`, and `ν + ρ₂` belongs to the lattice `n_α·ℤ` (zero
/// included).
pub fn kostant_irreducible(nu: &ComplexRational, rd: &RootData) -> Verdict {
    if !nu.im_is_zero() {
        return Verdict {
            irreducible: true,
            criterion: Criterion::Kostant,
            clause: "nu_nonreal",
        };
    }
    if nu.re.abs() < rd.t_alpha {
        return Verdict {
            irreducible: true,
            criterion: Criterion::Kostant,
            clause: "nu_inside_interval",
        };
    }
    if in_lattice(&(nu.re + rd.rho2), rd.n_alpha) {
        Verdict {
            irreducible: false,
            criterion: Criterion::Kostant,
            clause: "nu_outside_interval_and_in_lattice",
        }
    } else {
        Verdict {
            irreducible: true,
            criterion: Criterion::Kostant,
            clause: "nu_plus_rho2_not_in_lattice",
        }
    }
}

/// The Kraljević s-vector of `SU(n,1)` for `σ = m/(n+1)`:
/// `s₁ = (ν − (n−1)σ)/2`, `sᵢ = σ + n/2 − i + 1` for `2 ≤ i ≤ n`, and
/// `s_{n+1} = −(ν + (n−1)σ)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct KraljevicData {
    pub s: Vec<ComplexRational>,
}

impl KraljevicData {
    pub fn new(n: i64, m: i64, nu: &ComplexRational) -> Self {
        debug_assert!(n >= 2);
        let sigma = Rational64::new(m, n + 1);
        let half = Rational64::new(1, 2);
        let nm1 = Rational64::from_integer(n - 1);
        let mut s = Vec::with_capacity((n + 1) as usize);
        s.push(ComplexRational {
            re: (nu.re - nm1 * sigma) * half,
            im: nu.im / 2.0,
        });
        for i in 2..=n {
            s.push(ComplexRational::real(
                sigma + Rational64::new(n, 2) - Rational64::from_integer(i - 1),
            ));
        }
        s.push(ComplexRational {
            re: -(nu.re + nm1 * sigma) * half,
            im: -nu.im / 2.0,
        });
        KraljevicData { s }
    }
}

/// Kraljević criterion for `SU(n,1)` with `σ = m/(n+1)`: the series at `ν`
/// is reducible exactly when `s₁ − sᵢ ∈ ℤ \ {0}` for all `2 ≤ i ≤ n`, or
/// `s_{n+1} − sᵢ ∈ ℤ \ {0}` for all `2 ≤ i ≤ n`. A nonreal `ν` makes both
/// chains fail.
pub fn kraljevic_reducible(n: i64, m: i64, nu: &ComplexRational) -> bool {
    debug_assert!(n >= 2);
    if !nu.im_is_zero() {
        return false;
    }
    let data = KraljevicData::new(n, m, nu);
    let chain = |endpoint: &ComplexRational| {
        (2..=n).all(|i| {
            let diff = endpoint.re - data.s[(i - 1) as usize].re;
            diff.is_integer() && !diff.is_zero()
        })
    };
    chain(&data.s[0]) || chain(&data.s[n as usize])
}

/// Thieleker criterion for `SL₂(ℂ)` (and `SO₀(3,1)`): the series with
/// half-integral weight `m` is irreducible exactly when
/// `(ν + l + 1)(ν − l − 1) ≠ 0` for every `l ∈ {|m|, |m|+1, …}`. Only
/// `|ν| ≥ |m| + 1` with `|ν| − |m|` integral can fail.
pub fn thieleker_irreducible(m: Rational64, nu: &ComplexRational) -> bool {
    if !nu.im_is_zero() {
        return true;
    }
    let gap = nu.re.abs() - m.abs();
    !(gap.is_integer() && gap >= Rational64::one())
}

/// Decides irreducibility of `π(P, χ, λ, p)`, routing to the criterion for
/// the group.
pub fn decide(params: &ReprParams) -> Result<Verdict> {
    params.validate()?;
    let nu = structure::nu(&params.group, params.lambda, &params.p)?;
    let verdict = match params.group {
        GroupId::So0(3) | GroupId::Sl2C => {
            let m = params.chi.weight().expect("validated character");
            thieleker_verdict(m, &nu)
        }
        GroupId::So0(_) | GroupId::Sp(_) | GroupId::F4 => {
            kostant_irreducible(&nu, &structure::root_data(&params.group)?)
        }
        GroupId::Su(n) => {
            let m = params
                .chi
                .weight()
                .expect("validated character")
                .to_integer();
            kraljevic_verdict(i64::from(n), m, &nu)
        }
        GroupId::Sl2R => sl2r_verdict(&params.chi, &nu)?,
    };
    Ok(verdict)
}

fn thieleker_verdict(m: Rational64, nu: &ComplexRational) -> Verdict {
    let irreducible = thieleker_irreducible(m, nu);
    Verdict {
        irreducible,
        criterion: Criterion::Thieleker,
        clause: if !nu.im_is_zero() {
            "nu_nonreal"
        } else if irreducible {
            "no_thieleker_factor_vanishes"
        } else {
            "thieleker_factor_vanishes"
        },
    }
}

fn kraljevic_verdict(n: i64, m: i64, nu: &ComplexRational) -> Verdict {
    let reducible = kraljevic_reducible(n, m, nu);
    Verdict {
        irreducible: !reducible,
        criterion: Criterion::Kraljevic,
        clause: if !nu.im_is_zero() {
            "nu_nonreal"
        } else if reducible {
            "s_difference_chain_integral_nonzero"
        } else {
            "s_difference_chain_broken"
        },
    }
}

/// `SL₂(ℝ)` on the double-cover scale: reducible exactly when a ladder
/// coefficient `(ν + 1 ± n)/2` vanishes on the K-types of the character's
/// parity, i.e. `ν` an odd integer for the trivial character, an even
/// integer (zero included) for the sign character.
fn sl2r_verdict(chi: &CharacterLabel, nu: &ComplexRational) -> Result<Verdict> {
    if !nu.im_is_zero() {
        return Ok(Verdict {
            irreducible: true,
            criterion: Criterion::Kostant,
            clause: "nu_nonreal",
        });
    }
    let reducible = crate::gk::detect_reducible(chi, &crate::gk::GaussRational::from(nu.re))?;
    Ok(Verdict {
        irreducible: !reducible,
        criterion: Criterion::Kostant,
        clause: if reducible {
            "ladder_coefficient_vanishes"
        } else {
            "ladder_coefficients_nonvanishing"
        },
    })
}

/// Closed form of the `SU(n,1)` exceptional set, obtained by solving the
/// s-vector criterion at `ν = (2/p − 1)·n`: writing `k = 2n/p`, the series
/// is reducible exactly when `k` is an integer in `[1, 2n−1]` with
/// `k ≡ m (mod 2)` and `k ≤ |m|` or `k ≥ 2n − |m|` (equivalently
/// `|ν| ≥ n − |m|` with `ν ≡ n + m` mod 2); `k = n` is the excluded
/// exponent `p = 2`.
fn su_exceptional_set(n: i64, m: i64) -> BTreeSet<Rational64> {
    let mut out = BTreeSet::new();
    let am = m.abs();
    for k in 1..=(2 * n - 1) {
        if k == n || (k - m).rem_euclid(2) != 0 {
            continue;
        }
        if k <= am || k >= 2 * n - am {
            out.insert(Rational64::new(2 * n, k));
        }
    }
    out
}

/// The finite set of `p ∈ (1, ∞) \ {2}` at which `π(P, χ, 0, p)` fails to be
/// irreducible, in closed form per group.
pub fn exceptional_p_set(group: &GroupId, chi: &CharacterLabel) -> Result<BTreeSet<Rational64>> {
    group.validate()?;
    if !chi.compatible_with(group) {
        return Err(Error::IncompatibleCharacter {
            group: group.to_string(),
            chi: chi.to_string(),
        });
    }
    Ok(match group {
        // |nu| < rho2 = t_alpha for SO0, and |nu| < 1 <= |m| + 1 for the
        // Thieleker-routed groups: never reducible in range.
        GroupId::So0(_) | GroupId::Sl2C | GroupId::Sl2R => BTreeSet::new(),
        GroupId::Su(n) => {
            let m = chi.weight().expect("validated character").to_integer();
            su_exceptional_set(i64::from(*n), m)
        }
        GroupId::Sp(n) => {
            let n = i64::from(*n);
            [
                Rational64::new(2 * n + 1, 2 * n),
                Rational64::from_integer(2 * n + 1),
            ]
            .into_iter()
            .collect()
        }
        GroupId::F4 => [1, 2, 3, 8, 9, 10]
            .into_iter()
            .map(|k| Rational64::new(11, k))
            .collect(),
    })
}

/// The conjugate exponent `q = p/(p − 1)`.
pub fn conjugate_exponent(p: &Rational64) -> Rational64 {
    *p / (*p - Rational64::one())
}

/// Equivalence of two irreducible parameter tuples: `a ~ b` exactly when the
/// tuples coincide, or `b = (χ̄, λ, p)`, or `b = (χ̄, −λ, q)` with `q` the
/// conjugate exponent of `p`. Distinct groups are never equivalent.
pub fn equivalent(a: &ReprParams, b: &ReprParams) -> Result<bool> {
    a.validate()?;
    b.validate()?;
    if a.group != b.group {
        return Ok(false);
    }
    if !decide(a)?.irreducible || !decide(b)?.irreducible {
        return Err(Error::NotIrreducible);
    }
    let conj = a.chi.conjugate();
    Ok(
        (b.chi == a.chi && b.lambda == a.lambda && b.p == a.p)
            || (b.chi == conj && b.lambda == a.lambda && b.p == a.p)
            || (b.chi == conj && b.lambda == -a.lambda && b.p == conjugate_exponent(&a.p)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{nu, root_data};
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn kostant_examples() {
        let f4 = root_data(&GroupId::F4).unwrap();
        let v = kostant_irreducible(&ComplexRational::real(rat(-9, 1)), &f4);
        assert!(!v.irreducible);
        assert_eq!(v.clause, "nu_outside_interval_and_in_lattice");

        let nonreal = ComplexRational {
            re: rat(-9, 1),
            im: 2.5,
        };
        assert!(kostant_irreducible(&nonreal, &f4).irreducible);

        let so4 = root_data(&GroupId::So0(4)).unwrap();
        assert_eq!(so4.t_alpha, rat(3, 2));
        assert!(kostant_irreducible(&ComplexRational::real(rat(0, 1)), &so4).irreducible);
    }

    #[test]
    fn kostant_interval_is_open() {
        // On the boundary |nu| = t_alpha the interval clause no longer
        // protects; lattice membership decides.
        let su2 = root_data(&GroupId::Su(2)).unwrap();
        let v = kostant_irreducible(&ComplexRational::real(rat(2, 1)), &su2);
        assert!(!v.irreducible);
    }

    #[test]
    fn kraljevic_data_matches_defining_formulas() {
        let n = 4;
        let m = 3;
        let nu = ComplexRational {
            re: rat(5, 7),
            im: 0.25,
        };
        let sigma = rat(m, n + 1);
        let d = KraljevicData::new(n, m, &nu);
        assert_eq!(d.s.len(), (n + 1) as usize);
        assert_eq!(d.s[0].re, (nu.re - rat(n - 1, 1) * sigma) / rat(2, 1));
        assert_eq!(d.s[0].im, nu.im / 2.0);
        for i in 2..=n {
            assert_eq!(
                d.s[(i - 1) as usize],
                ComplexRational::real(sigma + rat(n, 2) - rat(i - 1, 1))
            );
        }
        assert_eq!(
            d.s[n as usize].re,
            -(nu.re + rat(n - 1, 1) * sigma) / rat(2, 1)
        );
        assert_eq!(d.s[n as usize].im, -nu.im / 2.0);
    }

    #[test]
    fn kraljevic_examples() {
        // p = 4/3 gives nu = 1 for SU(2,1); the m = 1 series is reducible.
        assert!(kraljevic_reducible(2, 1, &ComplexRational::real(rat(1, 1))));
        // Nonreal nu: integrality impossible.
        let nonreal = ComplexRational {
            re: rat(0, 1),
            im: 1.0,
        };
        assert!(!kraljevic_reducible(2, 0, &nonreal));
        // p = 3/2 gives nu = 1 for SU(3,1); the m = 2 series is reducible.
        assert!(kraljevic_reducible(3, 2, &ComplexRational::real(rat(1, 1))));
    }

    #[test]
    fn kraljevic_agrees_with_kostant_for_trivial_character() {
        // For m = 0 both criteria apply; they must agree on the whole real
        // nu-line, not just the L_p strip.
        for n in 2..=6i64 {
            let rd = root_data(&GroupId::Su(n as u32)).unwrap();
            for num in -120..=120 {
                for den in 1..=6 {
                    let v = ComplexRational::real(rat(num, den));
                    assert_eq!(
                        kraljevic_reducible(n, 0, &v),
                        !kostant_irreducible(&v, &rd).irreducible,
                        "n={n} nu={}",
                        v.re
                    );
                }
            }
        }
    }

    #[test]
    fn kraljevic_is_conjugation_symmetric() {
        for n in 2..=5i64 {
            for m in -2 * n..=2 * n {
                for num in -60..=60 {
                    for den in 1..=4 {
                        let v = ComplexRational::real(rat(num, den));
                        assert_eq!(
                            kraljevic_reducible(n, m, &v),
                            kraljevic_reducible(n, -m, &v),
                            "n={n} m={m} nu={}",
                            v.re
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn thieleker_examples() {
        assert!(thieleker_irreducible(
            rat(0, 1),
            &ComplexRational::real(rat(1, 3))
        ));
        assert!(!thieleker_irreducible(
            rat(0, 1),
            &ComplexRational::real(rat(1, 1))
        ));
        let nonreal = ComplexRational {
            re: rat(2, 1),
            im: 0.5,
        };
        assert!(thieleker_irreducible(rat(1, 2), &nonreal));
        // Half-integral weight: reducible exactly at half-odd nu beyond |m|.
        assert!(!thieleker_irreducible(
            rat(1, 2),
            &ComplexRational::real(rat(3, 2))
        ));
        assert!(thieleker_irreducible(
            rat(1, 2),
            &ComplexRational::real(rat(1, 1))
        ));
    }

    #[test]
    fn decide_examples() {
        // Sp(2,1): exceptional exactly at p in {5/4, 5}.
        let sp = |p: Rational64| {
            decide(&ReprParams {
                group: GroupId::Sp(2),
                chi: CharacterLabel::Trivial,
                lambda: 0.0,
                p,
            })
            .unwrap()
        };
        assert!(!sp(rat(5, 1)).irreducible);
        assert!(!sp(rat(5, 4)).irreducible);
        assert!(sp(rat(3, 1)).irreducible);
        assert!(sp(rat(10, 3)).irreducible);

        let so = decide(&ReprParams {
            group: GroupId::So0(2),
            chi: CharacterLabel::Trivial,
            lambda: 7.0,
            p: rat(3, 1),
        })
        .unwrap();
        assert!(so.irreducible);
        assert_eq!(so.clause, "nu_nonreal");
    }

    #[test]
    fn decide_rejects_out_of_scope_parameters() {
        let base = ReprParams {
            group: GroupId::Sp(2),
            chi: CharacterLabel::Trivial,
            lambda: 0.0,
            p: rat(2, 1),
        };
        assert_eq!(decide(&base), Err(Error::ExponentIsTwo));

        let low = ReprParams {
            p: rat(1, 2),
            ..base.clone()
        };
        assert!(matches!(decide(&low), Err(Error::ExponentOutOfRange(_))));

        let bad_chi = ReprParams {
            chi: CharacterLabel::Sign,
            p: rat(3, 1),
            ..base
        };
        assert!(matches!(
            decide(&bad_chi),
            Err(Error::IncompatibleCharacter { .. })
        ));
    }

    #[test]
    fn nonzero_lambda_is_always_irreducible() {
        let cases: Vec<(GroupId, Vec<CharacterLabel>)> = vec![
            (GroupId::So0(2), vec![CharacterLabel::Trivial]),
            (
                GroupId::So0(3),
                vec![CharacterLabel::Trivial, CharacterLabel::IntChar(2)],
            ),
            (
                GroupId::Su(3),
                vec![CharacterLabel::Trivial, CharacterLabel::IntChar(-4)],
            ),
            (GroupId::Sp(4), vec![CharacterLabel::Trivial]),
            (GroupId::F4, vec![CharacterLabel::Trivial]),
            (
                GroupId::Sl2R,
                vec![CharacterLabel::Trivial, CharacterLabel::Sign],
            ),
            (
                GroupId::Sl2C,
                vec![CharacterLabel::IntChar(1), CharacterLabel::HalfIntChar(3)],
            ),
        ];
        for (group, chis) in cases {
            for chi in chis {
                for lambda in [0.3, -2.0, 11.5] {
                    for p in [rat(5, 4), rat(3, 1), rat(11, 1)] {
                        let v = decide(&ReprParams {
                            group,
                            chi,
                            lambda,
                            p,
                        })
                        .unwrap();
                        assert!(v.irreducible, "{group} {chi} lambda={lambda} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_set_examples() {
        let f4 = exceptional_p_set(&GroupId::F4, &CharacterLabel::Trivial).unwrap();
        let expected: BTreeSet<_> = [1, 2, 3, 8, 9, 10].map(|k| rat(11, k)).into();
        assert_eq!(f4, expected);

        assert!(exceptional_p_set(&GroupId::So0(5), &CharacterLabel::Trivial)
            .unwrap()
            .is_empty());

        // SU(2,1), m = 0: the only integrality candidate is p = 2, which is
        // out of range.
        assert!(
            exceptional_p_set(&GroupId::Su(2), &CharacterLabel::IntChar(0))
                .unwrap()
                .is_empty()
        );

        let su21 = exceptional_p_set(&GroupId::Su(2), &CharacterLabel::IntChar(1)).unwrap();
        let expected: BTreeSet<_> = [rat(4, 3), rat(4, 1)].into();
        assert_eq!(su21, expected);
    }

    #[test]
    fn exceptional_set_matches_decide_on_candidates() {
        // decide() at lambda = 0 must flag exactly the closed-form set among
        // all candidate rationals 2*rho2/k.
        let groups: Vec<(GroupId, Vec<CharacterLabel>)> = vec![
            (GroupId::So0(4), vec![CharacterLabel::Trivial]),
            (
                GroupId::So0(3),
                vec![CharacterLabel::Trivial, CharacterLabel::IntChar(1)],
            ),
            (
                GroupId::Su(3),
                (-6..=6).map(CharacterLabel::IntChar).collect(),
            ),
            (GroupId::Sp(2), vec![CharacterLabel::Trivial]),
            (GroupId::F4, vec![CharacterLabel::Trivial]),
            (
                GroupId::Sl2R,
                vec![CharacterLabel::Trivial, CharacterLabel::Sign],
            ),
            (GroupId::Sl2C, vec![CharacterLabel::HalfIntChar(1)]),
        ];
        for (group, chis) in groups {
            let two_rho2 = rat(2, 1) * root_data(&group).unwrap().rho2;
            let kmax = (4.0 * two_rho2.re_f64_for_test()).ceil() as i64;
            for chi in chis {
                let set = exceptional_p_set(&group, &chi).unwrap();
                for k in 1..=kmax {
                    let p = two_rho2 / rat(k, 1);
                    if p <= Rational64::one() || p == rat(2, 1) {
                        continue;
                    }
                    let verdict = decide(&ReprParams {
                        group,
                        chi,
                        lambda: 0.0,
                        p,
                    })
                    .unwrap();
                    assert_eq!(
                        !verdict.irreducible,
                        set.contains(&p),
                        "{group} {chi} p={p}"
                    );
                }
            }
        }
    }

    trait ReF64 {
        fn re_f64_for_test(&self) -> f64;
    }
    impl ReF64 for Rational64 {
        fn re_f64_for_test(&self) -> f64 {
            *self.numer() as f64 / *self.denom() as f64
        }
    }

    #[test]
    fn equivalence_examples() {
        let a = ReprParams {
            group: GroupId::Su(2),
            chi: CharacterLabel::IntChar(1),
            lambda: 1.0,
            p: rat(3, 1),
        };
        let b = ReprParams {
            group: GroupId::Su(2),
            chi: CharacterLabel::IntChar(-1),
            lambda: -1.0,
            p: rat(3, 2),
        };
        assert!(equivalent(&a, &b).unwrap());
        assert!(equivalent(&a, &a).unwrap());

        let c = ReprParams {
            group: GroupId::Sl2R,
            chi: CharacterLabel::Trivial,
            lambda: 1.0,
            p: rat(3, 1),
        };
        let d = ReprParams {
            p: rat(4, 1),
            ..c.clone()
        };
        assert!(!equivalent(&c, &d).unwrap());

        let other_group = ReprParams {
            group: GroupId::Sp(2),
            chi: CharacterLabel::Trivial,
            lambda: 1.0,
            p: rat(3, 1),
        };
        assert!(!equivalent(&c, &other_group).unwrap());
    }

    #[test]
    fn equivalence_requires_irreducibility() {
        let reducible = ReprParams {
            group: GroupId::F4,
            chi: CharacterLabel::Trivial,
            lambda: 0.0,
            p: rat(11, 1),
        };
        assert_eq!(
            equivalent(&reducible, &reducible),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn duality_produces_identical_verdicts() {
        for (group, chi) in [
            (GroupId::Su(3), CharacterLabel::IntChar(2)),
            (GroupId::Sp(2), CharacterLabel::Trivial),
            (GroupId::F4, CharacterLabel::Trivial),
            (GroupId::Sl2R, CharacterLabel::Sign),
        ] {
            for lambda in [0.0, 1.25] {
                for p in [rat(5, 4), rat(5, 1), rat(11, 8), rat(7, 3)] {
                    let v1 = decide(&ReprParams {
                        group,
                        chi,
                        lambda,
                        p,
                    })
                    .unwrap();
                    let v2 = decide(&ReprParams {
                        group,
                        chi: chi.conjugate(),
                        lambda: -lambda,
                        p: conjugate_exponent(&p),
                    })
                    .unwrap();
                    assert_eq!(v1.irreducible, v2.irreducible, "{group} {chi} {lambda} {p}");
                }
            }
        }
    }

    #[test]
    fn su_set_is_conjugation_symmetric_and_matches_criterion_window() {
        for n in 2..=6i64 {
            for m in -2 * n..=2 * n {
                assert_eq!(su_exceptional_set(n, m), su_exceptional_set(n, -m));
                for p in su_exceptional_set(n, m) {
                    let v = nu(&GroupId::Su(n as u32), 0.0, &p).unwrap();
                    assert!(kraljevic_reducible(n, m, &v), "n={n} m={m} p={p}");
                }
            }
        }
    }

    #[test]
    fn clause_is_consistent_with_criterion() {
        let allowed = |criterion: Criterion| -> &'static [&'static str] {
            match criterion {
                Criterion::Kostant => &[
                    "nu_nonreal",
                    "nu_inside_interval",
                    "nu_plus_rho2_not_in_lattice",
                    "nu_outside_interval_and_in_lattice",
                    "ladder_coefficients_nonvanishing",
                    "ladder_coefficient_vanishes",
                ],
                Criterion::Kraljevic => &[
                    "nu_nonreal",
                    "s_difference_chain_broken",
                    "s_difference_chain_integral_nonzero",
                ],
                Criterion::Thieleker => &[
                    "nu_nonreal",
                    "no_thieleker_factor_vanishes",
                    "thieleker_factor_vanishes",
                ],
                Criterion::ClosedForm => &[],
            }
        };
        let cases = [
            (GroupId::So0(2), CharacterLabel::Trivial),
            (GroupId::So0(3), CharacterLabel::IntChar(1)),
            (GroupId::Su(4), CharacterLabel::IntChar(-3)),
            (GroupId::Sp(3), CharacterLabel::Trivial),
            (GroupId::F4, CharacterLabel::Trivial),
            (GroupId::Sl2R, CharacterLabel::Sign),
            (GroupId::Sl2C, CharacterLabel::HalfIntChar(1)),
        ];
        for (group, chi) in cases {
            for lambda in [0.0, 2.0] {
                for p in [rat(11, 8), rat(3, 1), rat(7, 1), rat(7, 6)] {
                    let v = decide(&ReprParams {
                        group,
                        chi,
                        lambda,
                        p,
                    })
                    .unwrap();
                    assert!(
                        allowed(v.criterion).contains(&v.clause),
                        "{group} {chi}: {:?} / {}",
                        v.criterion,
                        v.clause
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn conjugate_exponent_is_an_involution(num in 2i64..400, den in 1i64..400) {
            let p = Rational64::new(num, den);
            prop_assume!(p > Rational64::one());
            let q = conjugate_exponent(&p);
            prop_assert!(q > Rational64::one());
            prop_assert_eq!(conjugate_exponent(&q), p);
            // 1/p + 1/q = 1
            prop_assert_eq!(p.recip() + q.recip(), Rational64::one());
        }

        #[test]
        fn equivalence_is_symmetric(m in -4i64..=4, num in 3i64..40, den in 1i64..40, lambda in -3.0f64..3.0) {
            let p = Rational64::new(num, den);
            prop_assume!(p > Rational64::one() && p != Rational64::from_integer(2));
            let a = ReprParams { group: GroupId::Su(2), chi: CharacterLabel::IntChar(m), lambda, p };
            prop_assume!(decide(&a).unwrap().irreducible);
            for b in [
                a.clone(),
                ReprParams { chi: a.chi.conjugate(), ..a.clone() },
                ReprParams { chi: a.chi.conjugate(), lambda: -a.lambda, p: conjugate_exponent(&a.p), ..a.clone() },
            ] {
                prop_assert!(equivalent(&a, &b).unwrap());
                prop_assert!(equivalent(&b, &a).unwrap());
            }
        }
    }
}
