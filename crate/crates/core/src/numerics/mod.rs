//! Exact integer arithmetic for surface invariants, lattice discriminants,
//! and the dimension-count ledger.

pub mod invariants;
pub mod lattice;
pub mod ledger;

pub use invariants::{chi_ideal_twist, noether_c2, sectional_invariants, self_intersection_in_cubic, SurfaceInvariants};
pub use lattice::{hassett_admissible_divisor, hassett_discriminant, residual_class_solver, RankTwoLattice};
pub use ledger::{flag_dimension_ledger, DimensionLedger};
