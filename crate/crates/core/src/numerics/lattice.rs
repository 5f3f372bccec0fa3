//! Rank-2 lattice arithmetic in the middle cohomology of a cubic fourfold:
//! discriminants, admissible divisors, and the residual-class solver.

use crate::error::{Error, Result};
use crate::field_poly::field::is_square_free;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Gram matrix of the sublattice spanned by h^2 and a surface class S:
/// ((h^4, h^2·S), (h^2·S, S^2)). For a cubic fourfold h^4 = 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankTwoLattice {
    pub h4: i64,
    pub h2s: i64,
    pub s2: i64,
}

impl RankTwoLattice {
    pub fn cubic_fourfold(h2s: i64, s2: i64) -> Self {
        RankTwoLattice { h4: 3, h2s, s2 }
    }
}

/// Discriminant of the lattice: det of the Gram matrix, 3 S^2 - (h^2·S)^2
/// for a cubic fourfold.
pub fn hassett_discriminant(lattice: &RankTwoLattice) -> i64 {
    lattice.h4 * lattice.s2 - lattice.h2s * lattice.h2s
}

/// Saturation of the sublattice is automatic when the discriminant is
/// square-free; surfaced as a report note.
pub fn discriminant_square_free_note(d: i64) -> (bool, String) {
    let sf = d > 0 && is_square_free(d as u64);
    let note = if sf {
        format!("{d} is square-free, so the rank-2 sublattice is saturated")
    } else {
        format!("{d} is not square-free; saturation is not automatic")
    };
    (sf, note)
}

/// Hassett divisors exist exactly for d > 6 with d = 0 or 2 mod 6.
pub fn hassett_admissible_divisor(d: i64) -> bool {
    d > 6 && (d % 6 == 0 || d % 6 == 2)
}

/// Solves deg(S) = h4·a + deg(D)·b with b = ±1 (unimodular base change).
/// When both signs admit an integer solution, b = +1 is preferred.
pub fn residual_class_solver(deg_s: i64, deg_d: i64, h4: i64) -> Result<(i64, i64)> {
    if h4 == 0 {
        return Err(Error::InvalidArgument("h^4 must be nonzero".into()));
    }
    for b in [1i64, -1] {
        let num = deg_s - deg_d * b;
        if num % h4 == 0 {
            let a = num / h4;
            debug_assert_eq!(h4 * a + deg_d * b, deg_s);
            return Ok((a, b));
        }
    }
    Err(Error::Contract(format!(
        "no integer solution of {deg_s} = {h4}*a + {deg_d}*b with b = ±1"
    )))
}

/// Exact big-integer determinant helper for ledger cross-checks.
pub fn det2(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> i64 {
    (a * d - b * c).to_i64().expect("determinant fits i64")
}
