//! Native construction of the degree-12 genus-7 K3 surface in P^7 carrying
//! an elliptic curve of degree 5.
//!
//! The construction realizes the surface as a linear section of the
//! ten-dimensional variety of pure even spinors in P^15. In split
//! coordinates (a : B : c) with B a 5x5 skew matrix, that variety is cut by
//! ten quadrics: a·c_m equals the signed 4x4 sub-Pfaffian of B omitting
//! index m, and B·c = 0. An elliptic normal quintic is planted on it as
//! (0 : u∧v : c) with u, v, c sections of degree 2, 3, 5 line bundles on a
//! Weierstrass cubic and u·c = v·c = 0; a general P^7 through the span of
//! the quintic then meets the spinor variety in the wanted K3. The quintic
//! has square zero and degree 5 against the hyperplane class, which is
//! exactly the rank-2 lattice the downstream projections need.

use crate::error::{Error, Result};
use crate::field_poly::field::{Coeff, FieldConfig};
use crate::field_poly::monomial::Monomial;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::field_poly::uv_roots::{uv_roots, UniPoly};
use crate::geometry::scheme::{ProjectiveScheme, RationalPoint};
use crate::geometry::singular::singular_locus;
use crate::ideal_ops::ideal::Ideal;
use crate::linalg;
use crate::numerics::invariants::sectional_invariants;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::sync::Arc;

/// Position of b_{ij} (1 <= i < j <= 5) in the spinor coordinate order
/// (a, b_12, b_13, b_14, b_15, b_23, b_24, b_25, b_34, b_35, b_45, c_1..c_5).
fn b_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let offset = [0usize, 4, 7, 9][i - 1];
    offset + (j - i - 1) + 1
}

fn c_index(m: usize) -> usize {
    10 + m
}

/// The ten quadrics cutting the pure spinor variety, in a 16-variable ring.
pub fn spinor_quadrics(ring: &Arc<Ring>) -> Vec<Polynomial> {
    assert_eq!(ring.nvars, 16);
    let var = |i: usize| Polynomial::var(ring, i);
    let b = |i: usize, j: usize| -> Polynomial {
        // b_{ji} = -b_{ij}
        if i < j {
            var(b_index(i, j))
        } else {
            var(b_index(j, i)).neg()
        }
    };
    // signed sub-Pfaffian omitting m: for complement i<j<k<l,
    // Pf = b_ij b_kl - b_ik b_jl + b_il b_jk, with sign (-1)^(m-1)
    let pf = |m: usize| -> Polynomial {
        let comp: Vec<usize> = (1..=5).filter(|&t| t != m).collect();
        let (i, j, k, l) = (comp[0], comp[1], comp[2], comp[3]);
        let t1 = b(i, j).mul_unchecked(&b(k, l));
        let t2 = b(i, k).mul_unchecked(&b(j, l));
        let t3 = b(i, l).mul_unchecked(&b(j, k));
        let raw = t1.sub(&t2).add(&t3);
        if m % 2 == 1 {
            raw
        } else {
            raw.neg()
        }
    };
    let mut eqs = Vec::with_capacity(10);
    for m in 1..=5 {
        // a c_m = kappa_m(B)
        eqs.push(var(0).mul_unchecked(&var(c_index(m))).sub(&pf(m)));
    }
    for m in 1..=5 {
        // row m of B·c
        let mut acc = Polynomial::zero(ring);
        for j in 1..=5 {
            if j != m {
                acc = acc.add(&b(m, j).mul_unchecked(&var(c_index(j))));
            }
        }
        eqs.push(acc);
    }
    eqs
}

/// Functions on the Weierstrass cubic y^2 = x^3 + a4 x + a6, represented as
/// px(x) + y*py(x); the pole order at infinity is max(2 deg px, 3 + 2 deg py).
#[derive(Debug, Clone)]
struct CurveFn {
    px: Vec<Coeff>,
    py: Vec<Coeff>,
}

struct Curve {
    field: FieldConfig,
    a4: Coeff,
    a6: Coeff,
}

impl Curve {
    fn reduce(&self, mut px: Vec<Coeff>, mut py: Vec<Coeff>) -> CurveFn {
        while px.last() == Some(&0) {
            px.pop();
        }
        while py.last() == Some(&0) {
            py.pop();
        }
        CurveFn { px, py }
    }

    fn mul(&self, f: &CurveFn, g: &CurveFn) -> CurveFn {
        let fld = self.field;
        let mulp = |a: &[Coeff], b: &[Coeff]| -> Vec<Coeff> {
            if a.is_empty() || b.is_empty() {
                return vec![];
            }
            let mut out = vec![0u64; a.len() + b.len() - 1];
            let p = fld.prime() as u64;
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
                }
            }
            out.into_iter().map(|v| v as Coeff).collect()
        };
        let addp = |a: &[Coeff], b: &[Coeff]| -> Vec<Coeff> {
            let n = a.len().max(b.len());
            (0..n)
                .map(|i| {
                    fld.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0))
                })
                .collect()
        };
        // (f.px + y f.py)(g.px + y g.py)
        //   = f.px g.px + y^2 f.py g.py + y (f.px g.py + f.py g.px)
        // with y^2 = x^3 + a4 x + a6
        let rhs = vec![self.a6, self.a4, 0, 1];
        let mut px = mulp(&f.px, &g.px);
        let cross = mulp(&f.py, &g.py);
        px = addp(&px, &mulp(&cross, &rhs));
        let py = addp(&mulp(&f.px, &g.py), &mulp(&f.py, &g.px));
        self.reduce(px, py)
    }

    /// Coordinates of f in the basis {1, x, .., x^dx} ∪ {y, yx, .., y x^dy}
    /// of the Riemann-Roch space with px degree ≤ dx and py degree ≤ dy;
    /// None when f falls outside.
    fn coords(&self, f: &CurveFn, dx: usize, dy: usize) -> Option<Vec<Coeff>> {
        if f.px.len() > dx + 1 || f.py.len() > dy + 1 {
            return None;
        }
        let mut out = vec![0; dx + 1 + dy + 1];
        for (i, &c) in f.px.iter().enumerate() {
            out[i] = c;
        }
        for (i, &c) in f.py.iter().enumerate() {
            out[dx + 1 + i] = c;
        }
        Some(out)
    }
}

/// Everything the generator certifies about one constructed surface.
#[derive(Debug)]
pub struct K3Construction {
    pub scheme: ProjectiveScheme,
    pub seed: u64,
    /// Sampled GF(p)-points of the elliptic quintic, for containment spots.
    pub quintic_points: Vec<RationalPoint>,
    pub smooth_certified: bool,
}

/// Constructs a smooth degree-12 sectional-genus-7 surface in P^7 over the
/// given field, containing an explicit elliptic curve of degree 5; retries
/// with fresh randomness until every invariant check passes.
pub fn construct_genus7_k3(
    field: FieldConfig,
    seed: u64,
    max_tries: usize,
    check_smooth: bool,
) -> Result<K3Construction> {
    let mut last = String::new();
    for t in 0..max_tries.max(1) {
        let attempt_seed = seed.wrapping_add((t as u64) << 32);
        match try_construct(field, attempt_seed, check_smooth) {
            Ok(res) => return Ok(res),
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::Contract(format!(
        "K3 construction failed after {max_tries} attempts; last: {last}"
    )))
}

fn try_construct(field: FieldConfig, seed: u64, check_smooth: bool) -> Result<K3Construction> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x6b33_6765_6e21_0001);
    let p = field.prime();

    // smooth Weierstrass cubic
    let (a4, a6) = loop {
        let a4 = rng.gen_range(0..p);
        let a6 = rng.gen_range(0..p);
        // discriminant-like check: 4 a4^3 + 27 a6^2 != 0
        let d = field.add(
            field.mul(4, field.pow(a4, 3)),
            field.mul(27, field.mul(a6, a6)),
        );
        if d != 0 {
            break (a4, a6);
        }
    };
    let curve = Curve { field, a4, a6 };

    // u in H0(O(2p))^5, v in H0(O(3p))^5
    let u: Vec<CurveFn> = (0..5)
        .map(|_| curve.reduce(vec![rng.gen_range(0..p), rng.gen_range(0..p)], vec![]))
        .collect();
    let v: Vec<CurveFn> = (0..5)
        .map(|_| {
            curve.reduce(
                vec![rng.gen_range(0..p), rng.gen_range(0..p)],
                vec![rng.gen_range(0..p)],
            )
        })
        .collect();

    // c in H0(O(5p))^5 with u·c = v·c = 0: 15 linear conditions on 25
    // unknowns (5 coefficients per c_i over {1, x, y, x^2, xy})
    let c_basis: Vec<CurveFn> = vec![
        curve.reduce(vec![1], vec![]),
        curve.reduce(vec![0, 1], vec![]),
        curve.reduce(vec![], vec![1]),
        curve.reduce(vec![0, 0, 1], vec![]),
        curve.reduce(vec![], vec![0, 1]),
    ];
    // condition rows: for each unknown (i, basis element), coordinates of
    // u_i * basis and v_i * basis in the pole-7 and pole-8 spaces
    let n_unknowns = 25;
    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    // u·c lands in the pole-7 space: px deg <= 3, py deg <= 2 (7 coords)
    // v·c lands in the pole-8 space: px deg <= 4, py deg <= 2 (8 coords)
    let mut cols_u: Vec<Vec<Coeff>> = Vec::with_capacity(n_unknowns);
    let mut cols_v: Vec<Vec<Coeff>> = Vec::with_capacity(n_unknowns);
    for i in 0..5 {
        for be in &c_basis {
            let pu = curve.mul(&u[i], be);
            let pv = curve.mul(&v[i], be);
            cols_u.push(curve.coords(&pu, 3, 2).ok_or_else(|| {
                Error::Contract("u·c product escaped its Riemann-Roch space".into())
            })?);
            cols_v.push(curve.coords(&pv, 4, 2).ok_or_else(|| {
                Error::Contract("v·c product escaped its Riemann-Roch space".into())
            })?);
        }
    }
    for r in 0..7 {
        rows.push((0..n_unknowns).map(|cidx| cols_u[cidx][r]).collect());
    }
    for r in 0..8 {
        rows.push((0..n_unknowns).map(|cidx| cols_v[cidx][r]).collect());
    }
    let ns = linalg::nullspace(field, &rows, n_unknowns);
    if ns.len() < 2 {
        return Err(Error::Contract("orthogonality system unexpectedly rigid".into()));
    }
    let mut c_coords = vec![0 as Coeff; n_unknowns];
    for basis_vec in &ns {
        let lambda = rng.gen_range(0..p);
        for (o, &bvc) in c_coords.iter_mut().zip(basis_vec.iter()) {
            *o = field.add(*o, field.mul(lambda, bvc));
        }
    }
    let c: Vec<CurveFn> = (0..5)
        .map(|i| {
            let mut px = vec![0; 3];
            let mut py = vec![0; 2];
            px[0] = c_coords[5 * i];
            px[1] = c_coords[5 * i + 1];
            py[0] = c_coords[5 * i + 2];
            px[2] = c_coords[5 * i + 3];
            py[1] = c_coords[5 * i + 4];
            curve.reduce(px, py)
        })
        .collect();

    // coordinate matrix W of the sixteen spinor functions over the basis
    // {1, x, y, x^2, xy}
    let mut w: Vec<Vec<Coeff>> = vec![vec![0; 5]; 16];
    for i in 1..=5 {
        for j in (i + 1)..=5 {
            let bij = {
                let t1 = curve.mul(&u[i - 1], &v[j - 1]);
                let t2 = curve.mul(&u[j - 1], &v[i - 1]);
                // t1 - t2
                let neg: Vec<Coeff> = t2.px.iter().map(|&cc| field.neg(cc)).collect();
                let negy: Vec<Coeff> = t2.py.iter().map(|&cc| field.neg(cc)).collect();
                let sum_px: Vec<Coeff> = (0..t1.px.len().max(neg.len()))
                    .map(|k| {
                        field.add(
                            t1.px.get(k).copied().unwrap_or(0),
                            neg.get(k).copied().unwrap_or(0),
                        )
                    })
                    .collect();
                let sum_py: Vec<Coeff> = (0..t1.py.len().max(negy.len()))
                    .map(|k| {
                        field.add(
                            t1.py.get(k).copied().unwrap_or(0),
                            negy.get(k).copied().unwrap_or(0),
                        )
                    })
                    .collect();
                curve.reduce(sum_px, sum_py)
            };
            let coords = curve
                .coords(&bij, 2, 1)
                .ok_or_else(|| Error::Contract("u∧v escaped the degree-5 space".into()))?;
            // coords layout: 1, x, x^2 | y, xy -> basis order 1, x, y, x^2, xy
            w[b_index(i, j)] = vec![coords[0], coords[1], coords[3], coords[2], coords[4]];
        }
    }
    for m in 1..=5 {
        let coords = curve
            .coords(&c[m - 1], 2, 1)
            .ok_or_else(|| Error::Contract("c escaped the degree-5 space".into()))?;
        w[c_index(m)] = vec![coords[0], coords[1], coords[3], coords[2], coords[4]];
    }
    if linalg::rank(field, &w) != 5 {
        return Err(Error::Contract("quintic does not span a 4-plane".into()));
    }

    // extend the span to a P^7
    let mut w8: Vec<Vec<Coeff>> = w.iter().map(|row| row.clone()).collect();
    for row in w8.iter_mut() {
        row.extend((0..3).map(|_| rng.gen_range(0..p)));
    }
    if linalg::rank(field, &w8) != 8 {
        return Err(Error::Contract("linear section is degenerate".into()));
    }

    // pull the spinor quadrics back to P^7
    let spinor_ring = Ring::new(16, field, crate::field_poly::order::MonomialOrder::grevlex());
    let quadrics16 = spinor_quadrics(&spinor_ring);
    let ring8 = Ring::new(8, field, crate::field_poly::order::MonomialOrder::grevlex());
    let images: Vec<Polynomial> = (0..16)
        .map(|idx| {
            Polynomial::from_terms(
                &ring8,
                (0..8).map(|k| (Monomial::var(k, 1), w8[idx][k])).collect(),
            )
        })
        .collect();
    let gens: Vec<Polynomial> = quadrics16
        .iter()
        .map(|q| q.substitute(&ring8, &images))
        .filter(|g| !g.is_zero())
        .collect();
    let scheme = ProjectiveScheme::new(Ideal::new(&ring8, gens)?)?;

    // invariant gate
    let (dim, deg) = scheme.dim_deg();
    if (dim, deg) != (2, 12) {
        return Err(Error::Contract(format!("section has (dim, deg) = ({dim}, {deg})")));
    }
    let (d, pi, chi) = sectional_invariants(scheme.hilbert_polynomial())?;
    if (d, pi, chi) != (12, 7, 2) {
        return Err(Error::Contract(format!("section invariants ({d}, {pi}, {chi})")));
    }
    if scheme.h0_ideal(1) != 0 || scheme.h0_ideal(2) != 10 || scheme.h0_ideal(3) != 64 {
        return Err(Error::Contract("wrong quadric or cubic count through the section".into()));
    }

    // the quintic sits in {z5 = z6 = z7 = 0}: sample curve points and check
    let quintic_points = sample_quintic_points(&curve, &ring8, 5, &mut rng)?;
    for pt in &quintic_points {
        if !scheme.contains_point(pt) {
            return Err(Error::Contract("elliptic quintic point misses the section".into()));
        }
    }

    let smooth_certified = if check_smooth {
        if !singular_locus(&scheme)?.is_empty() {
            return Err(Error::Contract("section is singular".into()));
        }
        true
    } else {
        false
    };

    Ok(K3Construction { scheme, seed, quintic_points, smooth_certified })
}

/// Points of the Weierstrass cubic embedded through {1, x, y, x^2, xy} into
/// the first five coordinates of P^7.
fn sample_quintic_points(
    curve: &Curve,
    ring8: &Arc<Ring>,
    count: usize,
    rng: &mut ChaCha20Rng,
) -> Result<Vec<RationalPoint>> {
    let field = curve.field;
    let p = field.prime();
    let mut out = Vec::with_capacity(count);
    let mut guard = 0;
    while out.len() < count && guard < 10_000 {
        guard += 1;
        let x = rng.gen_range(0..p);
        let rhs = field.add(field.add(field.pow(x, 3), field.mul(curve.a4, x)), curve.a6);
        // roots of Y^2 - rhs
        let ys = uv_roots(&UniPoly::new(field, vec![field.neg(rhs), 0, 1]))?;
        let Some(&y) = ys.first() else { continue };
        let coords = vec![1, x, y, field.mul(x, x), field.mul(x, y), 0, 0, 0];
        out.push(RationalPoint::new(ring8, coords)?);
    }
    if out.len() < count {
        return Err(Error::NoRationalPoint { tries: guard });
    }
    Ok(out)
}
