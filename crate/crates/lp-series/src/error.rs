use num_rational::Rational64;
use thiserror::Error;

/// Errors reported by the classification and numerics layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported group parameter: {0}")]
    UnsupportedGroup(String),

    #[error("exponent p must lie in (1, \u{221e}), got {0}")]
    ExponentOutOfRange(Rational64),

    #[error("exponent p = 2 is outside the classification range (1, \u{221e}) \\ {{2}}")]
    ExponentIsTwo,

    #[error("character {chi} is not defined for {group}")]
    IncompatibleCharacter { group: String, chi: String },

    #[error("ladder vector parity does not match the character")]
    ParityMismatch,

    #[error("character must be trivial or sign for the SL2(R) modules")]
    NotAnSl2Character,

    #[error("equivalence is defined on irreducible parameters only")]
    NotIrreducible,

    #[error("Radon-Nikodym derivative has a pole at cx + d = 0")]
    RadonNikodymPole,

    #[error("matrix is not unimodular: det = {0}")]
    NotUnimodular(f64),

    #[error("quadrature with {nodes} nodes is too coarse for bandlimit {bandlimit} (need at least {required})")]
    QuadratureTooCoarse {
        nodes: usize,
        bandlimit: usize,
        required: usize,
    },

    #[error("quadrature node collided with a multiplier pole and jittering failed")]
    PoleCollision,
}
