//! Zeroth-order general Randić index of connected graphs.
//!
//! For a graph `G` and a nonzero real `gamma`, the index is the sum of
//! `d(v)^gamma` over all vertices. This crate provides
//!
//! * small immutable graphs with graph6 I/O and canonical forms ([`graph`],
//!   [`graph6`], [`canonical`]),
//! * exact invariants: chromatic and clique numbers, vertex and edge
//!   connectivity, cut edges ([`invariants`]),
//! * the extremal families and their closed-form indices ([`families`]),
//! * the sharp bounds, their witnesses and the supporting lemma functions
//!   ([`bounds`]),
//! * the graph edits used to prove them ([`surgery`]),
//! * exhaustive enumeration of connected graphs ([`enumeration`]), and
//! * a verifier that checks every bound against the full corpus ([`verifier`]).
//!
//! Numeric code is generic over [`scalar::Scalar`]; the aliases below fix
//! `f64`, which is what the verifier and the command line use.

pub mod bounds;
pub mod canonical;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod scalar;
pub mod surgery;
pub mod verifier;

pub use bounds::{BoundError, BoundQuery, ExtremalCharacterization, Extremum, GammaRange, Theorem};
pub use canonical::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use enumeration::{enumerate_connected, CorpusSource, EnumerationError};
pub use families::{FamilyError, FamilySpec};
pub use graph::{Graph, GraphError};
pub use graph6::Graph6Error;
pub use invariants::{zeroth_order_general_randic, InvariantError, InvariantProfile};
pub use scalar::{GammaError, GammaExponent, Scalar};
pub use verifier::{
    verify, verify_suite, SuiteConfig, TheoremCase, VerificationReport, Verdict, VerifyError,
};

/// Exponent in double precision.
pub type Gamma = GammaExponent<f64>;
/// Bound query in double precision.
pub type Query = BoundQuery<f64>;
/// Exponent in single precision.
pub type Gamma32 = GammaExponent<f32>;
