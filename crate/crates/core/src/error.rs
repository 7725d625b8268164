use alloc::string::String;

use crate::exact_arith::Var;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero polynomial has all roots")]
    ZeroPolynomialRoots,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole")]
    Pole,
    #[error("unbound variable {0}")]
    UnboundVariable(Var),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} takes {expected} parameters, got {got}")]
    ArityMismatch {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("degenerate argument: {0}")]
    DegenerateArgument(String),
    #[error("not hypergeometric in k")]
    NotHypergeometricInK,
    #[error("not hypergeometric in n with shift {r}")]
    NotHypergeometricInN { r: u32 },
    #[error("pole in term ratio at k = {k}")]
    PoleAtK { k: u64 },
    #[error("p2 vanishes on the progression at j = {j}")]
    P2PoleOnProgression { j: u64 },
    #[error("remainder does not vanish")]
    RemainderDoesNotVanish,
    #[error("divergent acceleration")]
    DivergentAcceleration,
    #[error("non-Chu-normalizable")]
    NonChuNormalizable,
    #[error("series ratio limit |z| >= 1")]
    NotConvergent,
    #[error("pole in summand denominator at j = {j}")]
    SeriesPole { j: u64 },
    #[error("requested digits unreachable within {cap} terms")]
    TermCapExceeded { cap: usize },
    #[error("oracle unavailable")]
    OracleUnavailable,
    #[error("negative base")]
    NegativeBase,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry `{0}` has no series")]
    NoSeries(String),
    #[error("entry `{0}` has no derivation")]
    NoDerivation(String),
    #[error("no two-term recurrence found")]
    NoRecurrence,
}

pub type Result<T> = core::result::Result<T, Error>;
