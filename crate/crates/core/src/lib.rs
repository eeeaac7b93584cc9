//! A calculus engine for finite quasi-set theory.
//!
//! Quasi-sets may contain m-atoms, objects that can be indistinguishable
//! without being identical. The crate models them over a declared finite
//! [`Universe`], stores quasi-sets as canonical class/count maps, provides the
//! axiom-level operations, enumerates finite quasi-sets and answers membership
//! questions with a three-valued [`Tri`].

pub mod computability;
pub mod dsl;
pub mod element;
pub mod equiv;
pub mod error;
pub mod qops;
pub mod qset;
pub mod universe;

pub use computability::{
    decide_membership, enumerate, exhaustive_undecidability_check, game_accuracy, observation_of,
    EmissionToken, HiddenConfiguration, Observation, Report,
};
pub use element::{ClassDescriptor, Element};
pub use equiv::{extensional_equal, indistinguishable, qsim, quotient, sim, Tri};
pub use error::{QsetError, UniverseError};
pub use qops::{
    n_singleton, ordered_pair, power_qc, quasi_cardinal, separation, strong_difference,
    strong_singleton, sub_qset, weak_class, weak_pair, Cardinal, CmpOp, Predicate,
};
pub use qset::{canonicalize, QSet, QSetBuilder};
pub use universe::Universe;
