//! Incidence Hopf algebras of finite intervals: chain and forest formulas
//! for the antipode, centers and factorization, and cancellation analysis.

pub mod cancel;
pub mod canonical;
pub mod coloring;
pub mod decompose;
pub mod error;
pub mod families;
pub mod forest;
pub mod hopf;
pub mod json;
pub mod poset;

pub use cancel::{CancellationReport, FamilyReport};
pub use canonical::{
    are_equivalent, canonical_form, isomorphism, CanonicalForm, ClassId, ClassRecord, ClassRegistry,
};
pub use coloring::{Coloring, Token};
pub use error::{HopfError, Result};
pub use forest::{Filtration, Forest, ForestMode, ForestTerm, JMap};
pub use hopf::{HopfElement, Incidence, Monomial, TensorElement};
pub use json::{interval_from_json, interval_to_json, poset_from_json};
pub use poset::{Chain, ElementId, FinitePoset, Interval, Product};
