//! Rational point sampling on positive-dimensional schemes over GF(p):
//! slice down to dimension zero with random hyperplanes, then solve the
//! finite system by univariate eliminants and back-substitution.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::Monomial;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::field_poly::uv_roots::{uv_roots, UniPoly};
use crate::geometry::scheme::{ProjectiveScheme, RationalPoint};
use crate::ideal_ops::ideal::eliminate_polys;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::sync::Arc;

const SLICE_RETRY_CAP: usize = 64;

/// A random GF(p)-point of the scheme, found by slicing with a random
/// linear subspace of complementary dimension and solving the resulting
/// zero-dimensional system. Deterministic for a fixed seed.
pub fn sample_rational_point(
    scheme: &ProjectiveScheme,
    seed: u64,
) -> Result<RationalPoint> {
    let dim = scheme.dim();
    if dim < 0 {
        return Err(Error::InvalidArgument("cannot sample a point of the empty scheme".into()));
    }
    let ring = scheme.ring().clone();
    let p = ring.field.prime();
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..SLICE_RETRY_CAP {
        // random linear slice of complementary dimension
        let mut sliced: Vec<Polynomial> = scheme.ideal.gens.clone();
        for _ in 0..dim {
            let terms: Vec<(Monomial, Coeff)> =
                (0..ring.nvars).map(|v| (Monomial::var(v, 1), rng.gen_range(0..p))).collect();
            let h = Polynomial::from_terms(&ring, terms);
            if h.is_zero() {
                continue;
            }
            sliced.push(h);
        }
        // random chart
        let mut charts: Vec<usize> = (0..ring.nvars).collect();
        charts.shuffle(&mut rng);
        for &chart in charts.iter().take(2) {
            let affine = dehomogenize(&sliced, &ring, chart);
            let small = Ring::new(ring.nvars - 1, ring.field, ring.order.clone());
            if let Some(sol) = solve_affine(&affine, &small, &mut rng)? {
                let mut coords = Vec::with_capacity(ring.nvars);
                let mut it = sol.into_iter();
                for v in 0..ring.nvars {
                    if v == chart {
                        coords.push(1);
                    } else {
                        coords.push(it.next().unwrap());
                    }
                }
                let pt = RationalPoint::new(&ring, coords)?;
                if scheme.contains_point(&pt) {
                    return Ok(pt);
                }
            }
        }
    }
    Err(Error::NoRationalPoint { tries: SLICE_RETRY_CAP })
}

/// Samples a point at which the scheme is smooth; retries with fresh seeds.
pub fn sample_smooth_point(
    scheme: &ProjectiveScheme,
    seed: u64,
    tries: usize,
) -> Result<RationalPoint> {
    let mut last_err = None;
    for t in 0..tries {
        match sample_rational_point(scheme, seed.wrapping_add(t as u64 * 0x517c_c1b7)) {
            Ok(pt) => {
                if scheme.is_smooth_at(&pt)? {
                    return Ok(pt);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or(Error::NoRationalPoint { tries }))
}

fn dehomogenize(gens: &[Polynomial], ring: &Arc<Ring>, chart: usize) -> Vec<Polynomial> {
    // substitute x_chart = 1, renumber the remaining variables
    let small = Ring::new(ring.nvars - 1, ring.field, ring.order.clone());
    let images: Vec<Polynomial> = (0..ring.nvars)
        .map(|v| {
            if v == chart {
                Polynomial::one(&small)
            } else {
                let nv = if v > chart { v - 1 } else { v };
                Polynomial::var(&small, nv)
            }
        })
        .collect();
    gens.iter().map(|g| g.substitute(&small, &images)).collect()
}

/// Solves an affine polynomial system expected to be zero-dimensional;
/// returns one GF(p)-solution if any. Recursive: eliminate down to the last
/// variable, enumerate its rational roots, substitute, recurse.
fn solve_affine(
    gens: &[Polynomial],
    ring: &Arc<Ring>,
    rng: &mut ChaCha20Rng,
) -> Result<Option<Vec<Coeff>>> {
    let live: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if live.iter().any(|g| g.degree() == Some(0)) {
        return Ok(None); // inconsistent system
    }
    if ring.nvars == 0 {
        return Ok(Some(vec![]));
    }
    if ring.nvars == 1 {
        let Some(univ) = to_univariate(&live, ring)? else {
            // no constraint: pick anything
            return Ok(Some(vec![rng.gen_range(0..ring.field.prime())]));
        };
        let roots = uv_roots(&univ)?;
        let Some(&root) = roots.first() else { return Ok(None) };
        return Ok(Some(vec![root]));
    }
    // eliminate all but the last variable
    let (_, elim) = eliminate_polys(&live, ring, ring.nvars - 1)?;
    let last_ring = Ring::new(1, ring.field, ring.order.clone());
    let keep: Vec<Polynomial> = elim.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut candidates: Vec<Coeff> = match to_univariate_reindexed(&keep, &last_ring)? {
        Some(univ) => uv_roots(&univ)?,
        None => (0..ring.field.prime().min(16)).collect(),
    };
    candidates.shuffle(rng);
    for root in candidates {
        // substitute the last variable and recurse
        let small = Ring::new(ring.nvars - 1, ring.field, ring.order.clone());
        let images: Vec<Polynomial> = (0..ring.nvars)
            .map(|v| {
                if v == ring.nvars - 1 {
                    Polynomial::constant(&small, root)
                } else {
                    Polynomial::var(&small, v)
                }
            })
            .collect();
        let reduced: Vec<Polynomial> = live.iter().map(|g| g.substitute(&small, &images)).collect();
        if let Some(mut sol) = solve_affine(&reduced, &small, rng)? {
            sol.push(root);
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

fn to_univariate(gens: &[Polynomial], ring: &Arc<Ring>) -> Result<Option<UniPoly>> {
    let mut acc: Option<UniPoly> = None;
    for g in gens {
        let mut coeffs = vec![0; g.degree().unwrap_or(0) as usize + 1];
        for &(m, c) in &g.terms {
            coeffs[m.exp[0] as usize] = c;
        }
        let u = UniPoly::new(ring.field, coeffs);
        acc = Some(match acc {
            None => u,
            Some(prev) => prev.gcd(&u),
        });
    }
    Ok(acc)
}

fn to_univariate_reindexed(gens: &[Polynomial], ring: &Arc<Ring>) -> Result<Option<UniPoly>> {
    // generators live in a 1-variable ring already
    to_univariate(gens, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;
    use crate::field_poly::parse::parse;
    use crate::ideal_ops::ideal::Ideal;

    fn scheme(n: usize, p: u32, gens: &[&str]) -> ProjectiveScheme {
        let r = Ring::new(n, FieldConfig::new(p).unwrap(), MonomialOrder::grevlex());
        let ideal = Ideal::new(&r, gens.iter().map(|s| parse(s, &r).unwrap()).collect()).unwrap();
        ProjectiveScheme::new(ideal).unwrap()
    }

    #[test]
    fn point_of_projective_plane() {
        let p2 = scheme(3, 65521, &[]);
        let pt = sample_rational_point(&p2, 1).unwrap();
        assert!(p2.contains_point(&pt));
    }

    #[test]
    fn point_of_smooth_quadric() {
        let q = scheme(6, 65521, &["x0*x1 + x2*x3 + x4*x5"]);
        let pt = sample_rational_point(&q, 7).unwrap();
        assert!(q.contains_point(&pt));
        assert!(q.is_smooth_at(&pt).unwrap());
    }

    #[test]
    fn point_of_twisted_cubic() {
        let c = scheme(4, 101, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let pt = sample_rational_point(&c, 3).unwrap();
        assert!(c.contains_point(&pt));
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let q = scheme(6, 65521, &["x0*x1 + x2*x3 + x4*x5"]);
        let a = sample_rational_point(&q, 42).unwrap();
        let b = sample_rational_point(&q, 42).unwrap();
        assert_eq!(a, b);
    }
}
