//! Surface invariant arithmetic: sectional invariants from the Hilbert
//! polynomial, Noether's formula, Euler characteristics of twisted ideal
//! sheaves, and self-intersection inside a cubic fourfold.

use crate::error::{Error, Result};
use crate::ideal_ops::hilbert::HilbertPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

/// Numerical invariants of a smooth projective surface: degree, sectional
/// genus, chi(O), hyperplane-times-canonical, canonical self-intersection,
/// and topological Euler number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub degree: i64,
    pub sectional_genus: i64,
    pub chi_o: i64,
    pub hk: i64,
    pub k2: i64,
    pub c2: i64,
}

impl SurfaceInvariants {
    /// Validates Noether's formula 12 chi(O) = K^2 + c2 and adjunction on
    /// the hyperplane section 2 pi - 2 = d + hK.
    pub fn new(degree: i64, sectional_genus: i64, chi_o: i64, hk: i64, k2: i64, c2: i64) -> Result<Self> {
        let inv = SurfaceInvariants { degree, sectional_genus, chi_o, hk, k2, c2 };
        inv.check()?;
        Ok(inv)
    }

    pub fn check(&self) -> Result<()> {
        if 12 * self.chi_o != self.k2 + self.c2 {
            return Err(Error::Contract(format!(
                "Noether violated: 12*{} != {} + {}",
                self.chi_o, self.k2, self.c2
            )));
        }
        if 2 * self.sectional_genus - 2 != self.degree + self.hk {
            return Err(Error::Contract(format!(
                "adjunction violated: 2*{} - 2 != {} + {}",
                self.sectional_genus, self.degree, self.hk
            )));
        }
        Ok(())
    }
}

/// (degree, sectional genus, chi(O)) from a surface Hilbert polynomial
/// P(t) = (d/2) t^2 + (d/2 + 1 - pi) t + chi.
pub fn sectional_invariants(p: &HilbertPoly) -> Result<(i64, i64, i64)> {
    if p.degree() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a surface Hilbert polynomial of degree 2, got degree {}",
            p.degree()
        )));
    }
    let two = BigRational::from(BigInt::from(2));
    let d_r = p.coeff(2) * &two;
    if !d_r.denom().is_one() {
        return Err(Error::InvalidArgument("degree is not an integer".into()));
    }
    let d = d_r.numer().to_i64().ok_or_else(|| Error::InvalidArgument("degree overflow".into()))?;
    // pi = d/2 + 1 - (linear coefficient)
    let pi_r = p.coeff(2) + BigRational::one() - p.coeff(1);
    if !pi_r.denom().is_one() {
        return Err(Error::InvalidArgument("sectional genus is not an integer".into()));
    }
    let pi = pi_r.numer().to_i64().unwrap();
    let chi = p.coeff_i64(0)?;
    Ok((d, pi, chi))
}

/// chi(I_S(d)) for the degree-10 surface in P^5 with P(t) = 5t^2 - t + 2:
/// binom(d+5, 5) - P(d).
pub fn chi_ideal_twist(d: i64) -> i64 {
    let p = HilbertPoly::surface(10, 7, 2);
    let binom = if d + 5 >= 5 {
        crate::ideal_ops::hilbert::binomial_u64((d + 5) as u64, 5) as i64
    } else {
        0
    };
    binom - p.eval_i64(d)
}

/// Topological Euler number from Noether's formula: c2 = 12 chi(O) - K^2.
pub fn noether_c2(chi_o: i64, k2: i64) -> i64 {
    12 * chi_o - k2
}

/// Self-intersection of the surface class inside a smooth cubic fourfold:
/// S^2 = c2(N_{S/X}) = 6 deg + 3 hK + K^2 - c2.
pub fn self_intersection_in_cubic(inv: &SurfaceInvariants) -> Result<i64> {
    inv.check()?;
    Ok(6 * inv.degree + 3 * inv.hk + inv.k2 - inv.c2)
}
