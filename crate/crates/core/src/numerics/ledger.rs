//! The dimension-count ledger behind the flag-scheme argument: tangent
//! space of the surface Hilbert scheme, cubics through the surface, and the
//! group/divisor dimensions that bound the fiber dimension from below.

use serde::{Deserialize, Serialize};

/// Dimension of PGL(6) acting on P^5.
pub const PGL6_DIM: i64 = 35;

/// Dimension of the moduli of smooth cubic fourfolds (20) minus one: the
/// discriminant-14 divisor.
pub const HASSETT_DIVISOR_DIM: i64 = 19;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionLedger {
    /// Tangent-space dimension of the surface Hilbert scheme at the witness.
    pub hilb_tangent_dim: i64,
    /// h0 of the twisted ideal sheaf I_S(3): cubics through the surface.
    pub h0_ideal_cubics: i64,
    /// dim PGL(6).
    pub pgl_dim: i64,
    /// Dimension of the discriminant divisor in the moduli of cubics.
    pub divisor_dim: i64,
}

impl DimensionLedger {
    pub fn witness(hilb_tangent_dim: i64, h0_ideal_cubics: i64) -> Self {
        DimensionLedger {
            hilb_tangent_dim,
            h0_ideal_cubics,
            pgl_dim: PGL6_DIM,
            divisor_dim: HASSETT_DIVISOR_DIM,
        }
    }
}

/// (flag dimension, fiber bound): the flag scheme over the surface locus has
/// dimension tangent + cubics - 1, and its image in the cubic moduli is at
/// most divisor + group dimensional, so fibers have dimension at least the
/// difference.
pub fn flag_dimension_ledger(ledger: &DimensionLedger) -> (i64, i64) {
    let flag_dim = ledger.hilb_tangent_dim + ledger.h0_ideal_cubics - 1;
    let fiber_bound = flag_dim - (ledger.divisor_dim + ledger.pgl_dim);
    (flag_dim, fiber_bound)
}
