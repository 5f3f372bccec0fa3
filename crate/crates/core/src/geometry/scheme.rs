//! Projective schemes: a saturated homogeneous ideal plus cached numerical
//! invariants, and rational points with normalized coordinates.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::poly::Ring;
use crate::ideal_ops::hilbert::HilbertPoly;
use crate::ideal_ops::ideal::Ideal;
use crate::linalg;
use std::sync::{Arc, OnceLock};

/// A closed subscheme of P^n over GF(p), carried by its saturated ideal.
#[derive(Debug, Clone)]
pub struct ProjectiveScheme {
    pub ideal: Ideal,
    hp: OnceLock<HilbertPoly>,
}

impl ProjectiveScheme {
    /// Saturates the ideal and wraps it.
    pub fn new(ideal: Ideal) -> Result<ProjectiveScheme> {
        let sat = ideal.saturate()?;
        Ok(ProjectiveScheme { ideal: sat, hp: OnceLock::new() })
    }

    /// Wraps an ideal already known to be saturated.
    pub fn from_saturated(ideal: Ideal) -> ProjectiveScheme {
        ProjectiveScheme { ideal, hp: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ideal.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.ideal.ring.nvars - 1
    }

    pub fn hilbert_polynomial(&self) -> &HilbertPoly {
        self.hp.get_or_init(|| self.ideal.hilbert_polynomial())
    }

    /// (dimension, degree); empty schemes report dimension -1.
    pub fn dim_deg(&self) -> (i64, u64) {
        self.ideal.dim_deg()
    }

    pub fn dim(&self) -> i64 {
        self.dim_deg().0
    }

    pub fn degree(&self) -> u64 {
        self.dim_deg().1
    }

    pub fn codim(&self) -> i64 {
        self.ambient_dim() as i64 - self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.dim() < 0
    }

    /// h0 of the twisted ideal sheaf: the degree-d slice of the saturated
    /// ideal.
    pub fn h0_ideal(&self, d: i64) -> u64 {
        self.ideal.slice_dim(d)
    }

    pub fn contains_point(&self, p: &RationalPoint) -> bool {
        self.ideal.gens.iter().all(|g| g.evaluate(&p.coords) == 0)
    }

    /// other ⊆ self, i.e. I_self ⊆ I_other.
    pub fn contains_scheme(&self, other: &ProjectiveScheme) -> bool {
        other.ideal.contains_ideal(&self.ideal)
    }

    /// Jacobian matrix of the given generators evaluated at a point.
    pub fn jacobian_at(&self, p: &RationalPoint) -> Vec<Vec<Coeff>> {
        let n = self.ideal.ring.nvars;
        self.ideal
            .gens
            .iter()
            .map(|g| (0..n).map(|v| g.partial_derivative(v).evaluate(&p.coords)).collect())
            .collect()
    }

    /// Smoothness at a single point of the scheme: the Jacobian has rank
    /// exactly the codimension there.
    pub fn is_smooth_at(&self, p: &RationalPoint) -> Result<bool> {
        if !self.contains_point(p) {
            return Err(Error::InvalidArgument("point does not lie on the scheme".into()));
        }
        let jac = self.jacobian_at(p);
        Ok(linalg::rank(self.ideal.ring.field, &jac) as i64 == self.codim())
    }

    /// Checks that the scheme is a line: dimension 1, degree 1.
    pub fn is_line(&self) -> bool {
        self.dim_deg() == (1, 1)
    }
}

/// A point of P^n(GF(p)); coordinates are scaled so the first nonzero entry
/// is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: Vec<Coeff>,
}

impl RationalPoint {
    pub fn new(ring: &Arc<Ring>, mut coords: Vec<Coeff>) -> Result<RationalPoint> {
        let f = ring.field;
        for c in coords.iter_mut() {
            *c %= f.prime();
        }
        let Some(first) = coords.iter().position(|&c| c != 0) else {
            return Err(Error::InvalidArgument("the zero vector is not a projective point".into()));
        };
        let inv = f.inv(coords[first])?;
        for c in coords.iter_mut() {
            *c = f.mul(*c, inv);
        }
        Ok(RationalPoint { coords })
    }
}
