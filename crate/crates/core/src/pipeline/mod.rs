//! Witness bundles, fixtures, the end-to-end verification pipeline, and the
//! construction pipeline that projects the genus-7 K3 model down to the
//! degree-10 witness surface.

pub mod construct;
pub mod k3gen;
pub mod report;
pub mod verify;
pub mod witness;

pub use construct::{construct_witness, ConstructConfig};
pub use report::{Check, VerificationReport};
pub use verify::{run_verification, verify_k3_fixture, VerifyConfig};
pub use witness::{ExpectedInvariants, HistoryStep, WitnessBundle};
