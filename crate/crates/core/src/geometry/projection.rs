//! Internal projection of a surface from one of its smooth points, with
//! exceptional-line tracking, plus line utilities and the skewness test.
//!
//! The center is moved to the coordinate point e0 by a linear change of
//! variables; the image ideal is the elimination of the first coordinate,
//! saturated. The exceptional line is the image of the projectivized
//! tangent plane at the center: by the Euler relation the Jacobian rows at
//! e0 have no e0-component, so they descend verbatim to the target space.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::Monomial;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::geometry::scheme::{ProjectiveScheme, RationalPoint};
use crate::ideal_ops::ideal::{eliminate_polys, Ideal};
use crate::linalg::{self, SpanBasis};
use std::sync::Arc;

/// The result of one internal projection: the image surface, the
/// exceptional line on it, and the linear data needed to transport points
/// and lines through this projection.
#[derive(Debug, Clone)]
pub struct InternalProjection {
    pub image: ProjectiveScheme,
    pub exceptional_line: ProjectiveScheme,
    /// Inverse of the coordinate change: maps ambient source coordinates to
    /// the frame where the center is e0.
    pub frame_inv: Vec<Vec<Coeff>>,
}

impl InternalProjection {
    /// Image of a source-space point (None when it is the center).
    pub fn project_point(&self, p: &RationalPoint) -> Option<Vec<Coeff>> {
        let field = self.image.ring().field;
        let n = self.frame_inv.len();
        let mut y = vec![0 as Coeff; n];
        for (i, row) in self.frame_inv.iter().enumerate() {
            let mut acc = 0;
            for (j, &m) in row.iter().enumerate() {
                acc = field.add(acc, field.mul(m, p.coords[j]));
            }
            y[i] = acc;
        }
        if y[1..].iter().all(|&c| c == 0) {
            return None;
        }
        Some(y[1..].to_vec())
    }

    /// Transports a line of the source space (not through the center) to
    /// its image line.
    pub fn transport_line(&self, line: &ProjectiveScheme) -> Result<ProjectiveScheme> {
        let (a, b) = line_spanning_points(line)?;
        let target = self.image.ring().clone();
        let pa = self
            .project_point(&a)
            .ok_or_else(|| Error::Contract("line passes through the projection center".into()))?;
        let pb = self
            .project_point(&b)
            .ok_or_else(|| Error::Contract("line passes through the projection center".into()))?;
        let qa = RationalPoint::new(&target, pa)?;
        let qb = RationalPoint::new(&target, pb)?;
        line_through(&target, &qa, &qb)
    }
}

/// Projects the surface from a smooth point on it. Contract: the image has
/// degree one less, the same sectional genus, and contains the exceptional
/// line; violations are reported as errors so callers can retry with a
/// fresh center.
pub fn internal_projection(
    surface: &ProjectiveScheme,
    center: &RationalPoint,
) -> Result<InternalProjection> {
    if !surface.contains_point(center) {
        return Err(Error::InvalidArgument("projection center is not on the surface".into()));
    }
    if !surface.is_smooth_at(center)? {
        return Err(Error::InvalidArgument("projection center is a singular point".into()));
    }
    let ring = surface.ring().clone();
    let n = ring.nvars;
    let field = ring.field;

    // frame: invertible M with first column the center, padded greedily
    // with standard basis vectors
    let pivot = center.coords.iter().position(|&c| c != 0).expect("projective point");
    let mut columns: Vec<Vec<Coeff>> = vec![center.coords.clone()];
    for j in 0..n {
        if j != pivot {
            let mut e = vec![0; n];
            e[j] = 1;
            columns.push(e);
        }
    }
    // M[i][j] = columns[j][i]; substitution x_i -> sum_j M[i][j] y_j
    let mat: Vec<Vec<Coeff>> = (0..n).map(|i| (0..n).map(|j| columns[j][i]).collect()).collect();
    let mat_inv = invert_matrix(&field, &mat)
        .ok_or_else(|| Error::Contract("projection frame is singular".into()))?;

    let transformed: Vec<Polynomial> = surface.ideal.gens.iter().map(|g| g.linear_substitute(&mat)).collect();

    // image: eliminate the center coordinate, then saturate
    let (small, image_gens) = eliminate_polys(&transformed, &ring, 1)?;
    let image = ProjectiveScheme::new(Ideal::new(&small, image_gens)?)?;

    // exceptional line: row space of the Jacobian at e0; Euler kills the
    // first column, so rows are forms in the target coordinates
    let e0: Vec<Coeff> = {
        let mut v = vec![0; n];
        v[0] = 1;
        v
    };
    let mut span = SpanBasis::new(field, n - 1);
    for g in &transformed {
        let row: Vec<Coeff> =
            (1..n).map(|v| g.partial_derivative(v).evaluate(&e0)).collect();
        span.insert(row);
    }
    if span.rank() as i64 != surface.codim() {
        return Err(Error::Contract("tangent space has unexpected dimension at the center".into()));
    }
    let line_forms: Vec<Polynomial> = span
        .basis_rows()
        .map(|row| {
            Polynomial::from_terms(
                &small,
                row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(v, &c)| (Monomial::var(v, 1), c)).collect(),
            )
        })
        .collect();
    let exceptional_line = ProjectiveScheme::new(Ideal::new(&small, line_forms)?)?;

    // projection contract
    let (sd, sdeg) = surface.dim_deg();
    let (id, ideg) = image.dim_deg();
    if (id, ideg) != (sd, sdeg - 1) {
        return Err(Error::Contract(format!(
            "projection image has (dim, deg) = ({id}, {ideg}), expected ({sd}, {})",
            sdeg - 1
        )));
    }
    if sd == 2 {
        let before = crate::numerics::invariants::sectional_invariants(surface.hilbert_polynomial())?;
        let after = crate::numerics::invariants::sectional_invariants(image.hilbert_polynomial())?;
        if before.1 != after.1 {
            return Err(Error::Contract(format!(
                "sectional genus changed under projection: {} -> {}",
                before.1, after.1
            )));
        }
    }
    if !exceptional_line.is_line() {
        return Err(Error::Contract("exceptional locus is not a line".into()));
    }
    if !image.contains_scheme(&exceptional_line) {
        return Err(Error::Contract("exceptional line does not lie on the image".into()));
    }

    let frame_inv = mat_inv;
    Ok(InternalProjection { image, exceptional_line, frame_inv })
}

/// True iff two lines are disjoint: the saturation of the ideal sum is the
/// unit ideal.
pub fn are_skew_lines(l1: &ProjectiveScheme, l2: &ProjectiveScheme) -> Result<bool> {
    if !l1.is_line() || !l2.is_line() {
        return Err(Error::InvalidArgument("skewness test expects two lines".into()));
    }
    let sum = l1.ideal.sum(&l2.ideal)?;
    Ok(sum.saturate()?.is_unit())
}

/// The line through two distinct points: all linear forms vanishing on both.
pub fn line_through(
    ring: &Arc<Ring>,
    a: &RationalPoint,
    b: &RationalPoint,
) -> Result<ProjectiveScheme> {
    let n = ring.nvars;
    let rows = vec![a.coords.clone(), b.coords.clone()];
    if linalg::rank(ring.field, &rows) != 2 {
        return Err(Error::InvalidArgument("points do not span a line".into()));
    }
    let forms = linalg::nullspace(ring.field, &rows, n);
    let gens: Vec<Polynomial> = forms
        .iter()
        .map(|f| {
            Polynomial::from_terms(
                ring,
                f.iter().enumerate().filter(|(_, &c)| c != 0).map(|(v, &c)| (Monomial::var(v, 1), c)).collect(),
            )
        })
        .collect();
    ProjectiveScheme::new(Ideal::new(ring, gens)?)
}

/// Two distinct points spanning a line given by its ideal.
pub fn line_spanning_points(line: &ProjectiveScheme) -> Result<(RationalPoint, RationalPoint)> {
    let ring = line.ring().clone();
    let n = ring.nvars;
    // coefficient matrix of the linear forms
    let mut rows = Vec::new();
    for g in &line.ideal.gens {
        if g.degree() != Some(1) {
            return Err(Error::InvalidArgument("line ideal must be generated by linear forms".into()));
        }
        let mut row = vec![0 as Coeff; n];
        for &(m, c) in &g.terms {
            let v = (0..n).find(|&v| m.exp[v] == 1).unwrap();
            row[v] = c;
        }
        rows.push(row);
    }
    let ns = linalg::nullspace(ring.field, &rows, n);
    if ns.len() != 2 {
        return Err(Error::InvalidArgument("ideal does not cut out a line".into()));
    }
    Ok((RationalPoint::new(&ring, ns[0].clone())?, RationalPoint::new(&ring, ns[1].clone())?))
}

fn invert_matrix(field: &crate::field_poly::field::FieldConfig, mat: &[Vec<Coeff>]) -> Option<Vec<Vec<Coeff>>> {
    let n = mat.len();
    let mut a: Vec<Vec<Coeff>> = mat.to_vec();
    let mut inv: Vec<Vec<Coeff>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let pinv = field.inv(a[col][col]).ok()?;
        for j in 0..n {
            a[col][j] = field.mul(a[col][j], pinv);
            inv[col][j] = field.mul(inv[col][j], pinv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..n {
                    a[r][j] = field.sub(a[r][j], field.mul(f, a[col][j]));
                    inv[r][j] = field.sub(inv[r][j], field.mul(f, inv[col][j]));
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;
    use crate::field_poly::parse::parse;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::new(n, FieldConfig::default(), MonomialOrder::grevlex())
    }

    fn scheme(r: &Arc<Ring>, gens: &[&str]) -> ProjectiveScheme {
        let ideal = Ideal::new(r, gens.iter().map(|s| parse(s, r).unwrap()).collect()).unwrap();
        ProjectiveScheme::new(ideal).unwrap()
    }

    #[test]
    fn coordinate_lines_meeting_are_not_skew() {
        let r = ring(4);
        // both lines pass through (0:0:0:1)
        let l1 = scheme(&r, &["x0", "x1"]);
        let l2 = scheme(&r, &["x0", "x2"]);
        assert!(!are_skew_lines(&l1, &l2).unwrap());
    }

    #[test]
    fn disjoint_coordinate_lines_are_skew() {
        let r = ring(6);
        let l1 = scheme(&r, &["x0", "x1", "x2", "x3"]);
        let l2 = scheme(&r, &["x2", "x3", "x4", "x5"]);
        assert!(are_skew_lines(&l1, &l2).unwrap());
    }

    #[test]
    fn non_line_input_errors() {
        let r = ring(4);
        let plane = scheme(&r, &["x0"]);
        let l = scheme(&r, &["x0", "x1"]);
        assert!(are_skew_lines(&plane, &l).is_err());
    }

    #[test]
    fn line_points_roundtrip() {
        let r = ring(4);
        let l = scheme(&r, &["x0 - x1", "x2"]);
        let (a, b) = line_spanning_points(&l).unwrap();
        assert!(l.contains_point(&a));
        assert!(l.contains_point(&b));
        let back = line_through(&r, &a, &b).unwrap();
        assert!(back.ideal.equals(&l.ideal));
    }

    #[test]
    fn projection_of_veronese_from_point_on_it() {
        // Veronese surface in P^5 (degree 4, genus 0); internal projection
        // gives a cubic surface in P^4 with the exceptional line on it
        let r = ring(6);
        let v = scheme(
            &r,
            &[
                "x1^2 - x0*x3",
                "x1*x2 - x0*x4",
                "x2^2 - x0*x5",
                "x1*x4 - x2*x3",
                "x1*x5 - x2*x4",
                "x3*x5 - x4^2",
            ],
        );
        assert_eq!(v.dim_deg(), (2, 4));
        let p = RationalPoint::new(&r, vec![1, 0, 0, 0, 0, 0]).unwrap();
        let proj = internal_projection(&v, &p).unwrap();
        assert_eq!(proj.image.dim_deg(), (2, 3));
        assert!(proj.exceptional_line.is_line());
        assert!(proj.image.contains_scheme(&proj.exceptional_line));
    }

    #[test]
    fn projection_rejects_bad_centers() {
        let r = ring(6);
        let q = scheme(&r, &["x0*x1 + x2*x3 + x4*x5"]);
        let off = RationalPoint::new(&r, vec![1, 1, 0, 0, 0, 0]).unwrap();
        assert!(internal_projection(&q, &off).is_err());
    }
}
