use thiserror::Error;

use crate::bits::ElementSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground sets differ ({0} vs {1} elements)")]
    GroundMismatch(usize, usize),

    #[error("ground set of {0} elements exceeds the supported maximum of 64")]
    GroundTooLarge(usize),

    #[error("empty ground set rejected at construction")]
    EmptyGround,

    #[error("operation requires rank >= 1")]
    RankZero,

    #[error("budget exceeded during {op}: {detail}")]
    BudgetExceeded { op: &'static str, detail: String },

    #[error("pattern does not fit in the host graph")]
    PatternTooLarge,

    #[error("rooted copies need a bipartite host with sides >= (s, t)")]
    DimensionMismatch,

    #[error("family is not uniform (member sizes {0} and {1})")]
    NonUniformFamily(usize, usize),

    #[error("family is empty, so its uniform size is ambiguous")]
    EmptyFamily,

    #[error("family is not union-stable: members {x1:?} and {x2:?} drop {e} to a set outside the family")]
    NotUnionStable {
        x1: ElementSet,
        x2: ElementSet,
        e: usize,
    },

    #[error("sequence member {index} is contained in the union of its predecessors")]
    ImproperSequence { index: usize },

    #[error("step {index} adds {added} new elements, expected exactly 1")]
    NotWeaklySaturated { index: usize, added: usize },

    #[error("val is not submodular: F={f:?} e={e} f={f2} values ({v_fe},{v_ff},{v_fef},{v_f})")]
    NotSubmodular {
        f: ElementSet,
        e: usize,
        f2: usize,
        v_fe: i64,
        v_ff: i64,
        v_fef: i64,
        v_f: i64,
    },

    #[error("count function parameters out of range: {0}")]
    ParamRange(String),

    #[error("random rank trials disagree: {values:?}; raise trials or change the prime")]
    TrialDisagreement { values: Vec<usize> },

    #[error("matroid axioms violated: {0}")]
    AxiomViolation(String),

    #[error("certificate does not verify: {0}")]
    BadCertificate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
