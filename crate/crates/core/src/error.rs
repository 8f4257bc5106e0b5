use std::fmt;

use thiserror::Error;

use crate::measures::DistanceMeasureId;

/// Which label namespace a duplicate or empty label was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelScope {
    Element,
    Parameter,
    PrimaryParameter,
    UnderlyingParameter,
}

impl fmt::Display for LabelScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelScope::Element => "universe element",
            LabelScope::Parameter => "parameter",
            LabelScope::PrimaryParameter => "primary parameter",
            LabelScope::UnderlyingParameter => "underlying parameter",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("duplicate {scope} label `{label}`")]
    DuplicateLabel { scope: LabelScope, label: String },
    #[error("empty {scope} label")]
    EmptyLabel { scope: LabelScope },
    #[error("the universe must contain at least one element")]
    EmptyUniverse,
    #[error("image of `{param}` contains `{element}`, which is not in the universe")]
    ImageOutsideUniverse { param: String, element: String },
    #[error("parameter `{param}` has no image")]
    MissingImage { param: String },
    #[error("image given for `{param}`, which is not a declared parameter")]
    UnknownParameter { param: String },
    #[error("inner soft set of `{param}` is over a different universe")]
    InconsistentUniverse { param: String },
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("`{0}` is not an element of the universe")]
    ElementNotInUniverse(String),
    #[error(
        "equivalence search over {primary} primary / {underlying} underlying parameters exceeds the limit of {limit}"
    )]
    SearchBudgetExceeded {
        primary: usize,
        underlying: usize,
        limit: usize,
    },
    #[error("measure `{0}` does not apply to this kind of soft set")]
    WrongMeasureArity(DistanceMeasureId),
    #[error("at least one candidate is required")]
    NoCandidates,
    #[error("search space of {instances} instances exceeds the cap ({cap} pairs)")]
    BoundsTooLarge { instances: u128, cap: u128 },
    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),
    #[error("the witness does not violate its axiom")]
    NotAViolation,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
