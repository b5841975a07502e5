//! Certified root-separation analysis for integer polynomials.
//!
//! The crate computes rigorous enclosures of the root separation
//! `sep(P) = min |α−β|` over distinct complex roots and of the separation
//! exponent `e(P)` defined by `sep(P) = H(P)^{-e(P)}`, where `H` is the naive
//! height. Around that core it provides:
//!
//! - exact integer-polynomial arithmetic (heights, resultants, discriminants,
//!   gcd/squarefree decomposition, rigorous ball evaluation) in [`poly`];
//! - certified complex root isolation with adaptive precision in [`roots`];
//! - generators and verified bounds for parametric families of reducible
//!   polynomials with pathologically close roots in [`families`];
//! - exact integer LLL reduction and a close-root search that reconstructs
//!   quadratics sharing a near-root with a given cubic in [`lattice`];
//! - enumeration, sampling and inequality surveys (Gelfond products, Mahler
//!   separation floors, linear-factor ceilings, log-log exponent fits) in
//!   [`survey`].
//!
//! The `rootsep` binary exposes all of it as batch subcommands; the crate's
//! `examples/` directory shows one runnable program per capability.

pub mod cbox;
pub mod cli;
pub mod dyadic;
pub mod families;
pub mod interval;
pub mod lattice;
pub mod poly;
pub mod roots;
pub mod survey;

pub use cbox::{ComplexBall, ComplexBox};
pub use dyadic::{Dyadic, Round};
pub use families::{FamilyError, FamilyId, FamilyRecord, SweepRow};
pub use interval::RealInterval;
pub use lattice::{LatticeBasis, LatticeError, SearchHit};
pub use poly::{FactoredPolynomial, IntegerPolynomial, PolyError};
pub use roots::{RootEnclosure, RootSet, SepError, SeparationReport};
pub use survey::{FitResult, GelfondCheck, SuiteReport, SurveyError, SurveyRecord};
