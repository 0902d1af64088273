use thiserror::Error;

use crate::angle::Angle;
use crate::chord::{Chord, LengthClass};
use crate::legality::LegalityVerdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(String),

    #[error("malformed fraction {0:?}")]
    Parse(String),

    #[error("{0} is not periodic under tripling")]
    NotPeriodic(Angle),

    #[error("chord {0} is degenerate")]
    DegenerateChord(Chord),

    #[error("chord {chord} is {class:?}; expected {expected}")]
    LengthClass {
        chord: Chord,
        class: LengthClass,
        expected: &'static str,
    },

    #[error("{0} is a diameter")]
    Diameter(Chord),

    #[error("{point} is an endpoint of {chord}")]
    EndpointCollision { point: Angle, chord: Chord },

    #[error("orbit of {chord} did not close within {max_steps} steps")]
    OrbitNotClosed { chord: Chord, max_steps: usize },

    #[error("period {0} is too large to enumerate")]
    PeriodTooLarge(u32),

    #[error("a component holds an odd number ({len}) of candidate points, first {first}")]
    OddGroup { first: Angle, len: usize },

    #[error("paired leaf {0} is longer than 1/6")]
    LeafTooLong(Chord),

    #[error("new leaf {new} crosses leaf {old}")]
    LeafCrossing { new: Chord, old: Chord },

    #[error("leaves {0} and {1} share an endpoint")]
    SharedEndpoint(Chord, Chord),

    #[error("cannot run step {block}: state has completed block {completed}")]
    StepOutOfOrder { block: u32, completed: u32 },

    #[error("block period must be at least 1")]
    ZeroBlock,

    #[error("leaf {chord} failed certification: {verdict}")]
    VerificationFailed {
        chord: Chord,
        verdict: Box<LegalityVerdict>,
    },

    #[error("{count} candidate points were not used exactly once at block {block}")]
    UnusedPoints { block: u32, count: usize },

    #[error("same-type, same-block nesting: {inner} is under {outer}")]
    SameTypeNesting { inner: Chord, outer: Chord },

    #[error("seed {chord} is not a legal pair: {verdict}")]
    IllegalSeed {
        chord: Chord,
        verdict: Box<LegalityVerdict>,
    },

    #[error("{0} is not a co-periodic chord")]
    NotCoPeriodic(Chord),

    #[error("serialization: {0}")]
    Serde(String),
}
