//! Representation-ring arithmetic for `GL_r` with Borel–Weil–Bott on
//! Grassmannians layered on top.
//!
//! Elements of the ring are finite integer combinations of Schur functors
//! indexed by dominant weights ([`Weight`]). Products go through the
//! Littlewood–Richardson rule and are cross-checked against characters.

pub mod audit;
pub mod bwb;
pub mod error;
pub mod normal_bundle;
pub mod partitions;
pub mod rep_ring;
pub mod soc;

pub use audit::{AuditBounds, CheckResult};
pub use bwb::{bwb_single, bwb_weight, cohomology, BundleExpr, BwbOutcome, GradedCohomology};
pub use error::{Error, Result};
pub use partitions::{compare, precedes, Hook, Weight, WeylVector};
pub use rep_ring::{
    char_of, decompose, ext_power, schur_power, sym_power, weyl_dim, CharPoly, RepElement,
};
pub use soc::{
    check_cotangent_simple, check_exceptional, check_exceptional_pair, check_fully_faithful,
    check_semiorthogonal, enumerate_ff, enumerate_sos, kummer_count, CotangentReport,
    FunctorLabel, Verdict, VerificationReport,
};
