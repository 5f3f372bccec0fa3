//! Sections of the normal sheaf N_{S/X} = Hom(I_{S/X}/I_{S/X}^2, O_S).
//!
//! An R-linear map out of I_S/I_X automatically kills I_S^2, so the normal
//! module is Hom_R(I_S/I_X, R/I_S); its degree-0 slice counts first-order
//! deformations of S inside X. For the ambient projective space pass no
//! hypersurface.

use crate::error::{Error, Result};
use crate::geometry::scheme::ProjectiveScheme;
use crate::homological::graded_module::GradedModule;
use crate::homological::hom::hom_slice_dim;
use crate::ideal_ops::ideal::Ideal;

/// h0 of the normal sheaf of the surface inside the ambient scheme (or
/// inside the full projective space when `ambient` is None).
pub fn h0_normal_sheaf(
    surface: &ProjectiveScheme,
    ambient: Option<&ProjectiveScheme>,
) -> Result<u64> {
    let ring = surface.ring().clone();
    let denominator = match ambient {
        None => Ideal::zero(&ring),
        Some(x) => {
            if !x.contains_scheme(surface) {
                return Err(Error::InvalidArgument(
                    "the surface is not contained in the ambient scheme".into(),
                ));
            }
            x.ideal.clone()
        }
    };
    let gens = surface.ideal.minimal_generators();
    let conormal = GradedModule::from_subquotient(&ring, &gens, &denominator)?;
    let structure = GradedModule::quotient_of_ring(&surface.ideal);
    Ok(hom_slice_dim(&conormal, &structure, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;
    use crate::field_poly::parse::parse;
    use crate::field_poly::poly::Ring;

    fn scheme(n: usize, gens: &[&str]) -> ProjectiveScheme {
        let r = Ring::new(n, FieldConfig::default(), MonomialOrder::grevlex());
        let ideal = Ideal::new(&r, gens.iter().map(|s| parse(s, &r).unwrap()).collect()).unwrap();
        ProjectiveScheme::new(ideal).unwrap()
    }

    #[test]
    fn normal_bundle_of_line_in_p3() {
        // N_{L/P^3} = O(1)^2: h0 = 4
        let l = scheme(4, &["x0", "x1"]);
        assert_eq!(h0_normal_sheaf(&l, None).unwrap(), 4);
    }

    #[test]
    fn normal_bundle_of_line_in_quadric_surface() {
        // a ruling line of the smooth quadric surface in P^3 moves in a
        // 1-parameter family: N_{L/Q} = O on the line, h0 = 1... the ruling
        // through V(x0, x1) on V(x0 x3 - x1 x2): h0(N) = 2
        let q = scheme(4, &["x0*x3 - x1*x2"]);
        let l = scheme(4, &["x0", "x1"]);
        assert!(q.contains_scheme(&l));
        let h = h0_normal_sheaf(&l, Some(&q)).unwrap();
        // N_{L/Q} is O_L(0) ⊕ nothing? rank 1, degree 0: h0 = 1; but the
        // Hilbert scheme of ruling lines is 1-dimensional: h0 = 1
        assert_eq!(h, 1);
    }

    #[test]
    fn normal_bundle_of_twisted_cubic() {
        // N of the twisted cubic in P^3: O(5) ⊕ O(5); h0 = 12 matches the
        // 12-dimensional family of twisted cubics
        let c = scheme(4, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        assert_eq!(h0_normal_sheaf(&c, None).unwrap(), 12);
    }

    #[test]
    fn non_containment_errors() {
        let q = scheme(4, &["x0*x3 - x1*x2"]);
        let l = scheme(4, &["x1", "x2"]);
        assert!(!q.contains_scheme(&l));
        assert!(h0_normal_sheaf(&l, Some(&q)).is_err());
    }
}
