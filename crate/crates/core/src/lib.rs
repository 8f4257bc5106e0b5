//! Type-1 and Type-2 soft sets: validation and algebra, distance, entropy
//! and similarity measures, an axiom-checking lab over small soft-set
//! spaces, and a multi-source decision procedure.

pub mod cli;
pub mod decision;
pub mod equivalence;
pub mod error;
pub mod examples;
pub mod io;
pub mod lab;
pub mod measures;
pub mod t1;
pub mod t2;
pub mod universe;

pub use decision::{decide, DecisionReport, ParameterDecision};
pub use equivalence::{are_equivalent, EquivalenceWitness, TraceProfile};
pub use error::{Error, LabelScope, Result};
pub use t1::{validate_t1ss, Containment, RawSoftSet, TypeOneSoftSet};
pub use t2::{validate_t2ss, DisjointnessClass, RawTypeTwo, TraceSets, TypeTwoSoftSet};
pub use universe::{ElementSet, Universe};
