//! Exact-arithmetic commutative algebra and projective geometry over GF(p),
//! built around the verification of a degree-10 non-minimal K3 surface lying
//! on a special cubic fourfold of discriminant 14.
//!
//! The crate is organized as an engine stack: sparse polynomial arithmetic
//! over a prime field, Gröbner bases for ideals and graded modules, ideal
//! operations with Hilbert series, graded homological algebra (resolutions,
//! Hom modules, sheaf sections), projective-scheme geometry (smoothness,
//! projections, rational points), exact integer invariant arithmetic, and a
//! witness pipeline with a JSON report format.

pub mod error;
pub mod linalg;
pub mod field_poly;
pub mod geometry;
pub mod groebner;
pub mod homological;
pub mod ideal_ops;
pub mod numerics;
pub mod pipeline;

pub use error::Error;
pub use field_poly::field::FieldConfig;
pub use field_poly::monomial::Monomial;
pub use field_poly::order::MonomialOrder;
pub use field_poly::poly::{Polynomial, Ring};
pub use groebner::basis::GroebnerBasis;
pub use groebner::module::{FreeModule, FreeModuleElement};
pub use ideal_ops::hilbert::{HilbertPoly, HilbertSeries};
pub use ideal_ops::ideal::Ideal;
pub use homological::graded_module::GradedModule;
pub use geometry::scheme::{ProjectiveScheme, RationalPoint};
pub use numerics::invariants::SurfaceInvariants;
pub use numerics::lattice::RankTwoLattice;
pub use numerics::ledger::DimensionLedger;
pub use pipeline::report::VerificationReport;
pub use pipeline::witness::WitnessBundle;
