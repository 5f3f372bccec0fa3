//! Random hypersurfaces through a subscheme, and quadric ranks.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::Monomial;
use crate::field_poly::poly::Polynomial;
use crate::geometry::scheme::ProjectiveScheme;
use crate::geometry::singular::singular_locus;
use crate::ideal_ops::ideal::Ideal;
use crate::linalg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// A hypersurface of degree d containing the scheme: a random GF(p)-linear
/// combination of a basis of the degree-d slice of the saturated ideal.
/// Containment holds by construction; the defining form is returned with
/// the scheme.
pub fn random_hypersurface_containing(
    scheme: &ProjectiveScheme,
    d: u16,
    seed: u64,
) -> Result<(ProjectiveScheme, Polynomial)> {
    let basis = scheme.ideal.slice_basis(d);
    if basis.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "the degree-{d} linear system through the scheme is empty"
        )));
    }
    let ring = scheme.ring().clone();
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x48b8_21c3_55d1_aa01);
    let p = ring.field.prime();
    let mut f = Polynomial::zero(&ring);
    while f.is_zero() {
        f = basis.iter().fold(Polynomial::zero(&ring), |acc, b| {
            acc.add(&b.scale(rng.gen_range(0..p)))
        });
    }
    let f = f.monic();
    let hyp = ProjectiveScheme::new(Ideal::new(&ring, vec![f.clone()])?)?;
    Ok((hyp, f))
}

/// Random smooth hypersurface through the scheme; singular draws are
/// redrawn with a reseeded generator, up to the cap.
pub fn random_smooth_hypersurface(
    scheme: &ProjectiveScheme,
    d: u16,
    seed: u64,
    cap: usize,
) -> Result<(ProjectiveScheme, Polynomial)> {
    let mut last = None;
    for t in 0..cap.max(1) {
        let (hyp, f) = random_hypersurface_containing(scheme, d, seed.wrapping_add(t as u64))?;
        if singular_locus(&hyp)?.is_empty() {
            return Ok((hyp, f));
        }
        last = Some((hyp, f));
    }
    let _ = last;
    Err(Error::Contract(format!(
        "no smooth degree-{d} hypersurface found within {cap} draws"
    )))
}

/// Rank of the symmetric Gram matrix of a quadric hypersurface; 6 means
/// smooth in P^5. Requires odd characteristic.
pub fn quadric_rank(q: &ProjectiveScheme) -> Result<u32> {
    let ring = q.ring().clone();
    if ring.field.prime() == 2 {
        return Err(Error::InvalidArgument("quadric rank needs odd characteristic".into()));
    }
    let gens = q.ideal.minimal_generators();
    if gens.len() != 1 || gens[0].degree() != Some(2) {
        return Err(Error::InvalidArgument(
            "quadric rank expects a hypersurface cut by a single quadratic form".into(),
        ));
    }
    let f = &gens[0];
    let n = ring.nvars;
    let half = ring.field.inv(2)?;
    let mut gram = vec![vec![0 as Coeff; n]; n];
    for i in 0..n {
        for j in i..n {
            let mut e = [0u8; crate::field_poly::monomial::MAX_VARS];
            e[i] += 1;
            e[j] += 1;
            let c = f.coeff_of(&Monomial::from_exponents(&e[..n]));
            if i == j {
                gram[i][i] = c;
            } else {
                let h = ring.field.mul(c, half);
                gram[i][j] = h;
                gram[j][i] = h;
            }
        }
    }
    Ok(linalg::symmetric_rank(ring.field, &gram) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
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
    fn plane_through_line() {
        let l = scheme(4, &["x0", "x1"]);
        let (h, f) = random_hypersurface_containing(&l, 1, 5).unwrap();
        assert_eq!(h.dim_deg(), (2, 1));
        // containment: the form lies in the degree-1 slice of the ideal
        assert!(l.ideal.gb().contains(&f));
        assert!(h.contains_scheme(&l));
    }

    #[test]
    fn empty_system_errors() {
        let l = scheme(4, &["x0", "x1"]);
        // no hypersurface of degree 0 through anything
        assert!(random_hypersurface_containing(&l, 0, 1).is_err());
    }

    #[test]
    fn quadric_ranks() {
        let full = scheme(6, &["x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2"]);
        assert_eq!(quadric_rank(&full).unwrap(), 6);
        let two = scheme(6, &["x0*x1"]);
        assert_eq!(quadric_rank(&two).unwrap(), 2);
        let five = scheme(6, &["x0*x1 + x2*x3 + x4^2"]);
        assert_eq!(quadric_rank(&five).unwrap(), 5);
        let hyperbolic = scheme(6, &["x0*x1 + x2*x3 + x4*x5"]);
        assert_eq!(quadric_rank(&hyperbolic).unwrap(), 6);
    }

    #[test]
    fn quadric_rank_invariant_under_coordinate_change() {
        let r = Ring::new(6, FieldConfig::default(), MonomialOrder::grevlex());
        let q = parse("x0*x1 + x2*x3 + x4^2", &r).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(99);
        for _ in 0..10 {
            // random invertible change: permutation + unipotent shear
            let n = 6;
            let mut mat: Vec<Vec<Coeff>> =
                (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
            for _ in 0..8 {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b {
                    let c = rng.gen_range(1..r.field.prime());
                    for col in 0..n {
                        let add = r.field.mul(c, mat[b][col]);
                        mat[a][col] = r.field.add(mat[a][col], add);
                    }
                }
            }
            let moved = q.linear_substitute(&mat);
            let qs = ProjectiveScheme::new(
                Ideal::new(&r, vec![moved]).unwrap(),
            )
            .unwrap();
            assert_eq!(quadric_rank(&qs).unwrap(), 5);
        }
    }

    #[test]
    fn non_quadric_rejected() {
        let cubic = scheme(6, &["x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3"]);
        assert!(quadric_rank(&cubic).is_err());
    }

}
