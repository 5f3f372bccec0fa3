//! Singular locus via the Jacobian criterion: the scheme cut by the ideal
//! together with the codimension-sized minors of the Jacobian matrix.
//!
//! Smooth inputs are certified empty quickly through random constant
//! compressions of the Jacobian: rank(A·J·B) ≤ rank(J), so minors of a few
//! compressed matrices cut out a superset of the singular locus. When the
//! compressed locus is empty the scheme is smooth; otherwise the honest full
//! minor enumeration runs.

use crate::error::Result;
use crate::field_poly::field::Coeff;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::geometry::scheme::ProjectiveScheme;
use crate::ideal_ops::ideal::Ideal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::sync::Arc;

/// Determinant of a square polynomial matrix by Laplace expansion.
pub fn poly_det(ring: &Arc<Ring>, mat: &[Vec<Polynomial>]) -> Polynomial {
    let n = mat.len();
    match n {
        0 => Polynomial::one(ring),
        1 => mat[0][0].clone(),
        _ => {
            let mut acc = Polynomial::zero(ring);
            for (j, entry) in mat[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = mat[1..]
                    .iter()
                    .map(|row| {
                        row.iter().enumerate().filter(|(jj, _)| *jj != j).map(|(_, e)| e.clone()).collect()
                    })
                    .collect();
                let sub = poly_det(ring, &minor);
                let term = entry.mul_unchecked(&sub);
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn jacobian(gens: &[Polynomial], ring: &Arc<Ring>) -> Vec<Vec<Polynomial>> {
    gens.iter()
        .map(|g| (0..ring.nvars).map(|v| g.partial_derivative(v)).collect())
        .collect()
}

fn all_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn minors_of(ring: &Arc<Ring>, jac: &[Vec<Polynomial>], size: usize) -> Vec<Polynomial> {
    let rows = all_subsets(jac.len(), size);
    let cols = all_subsets(ring.nvars, size);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for rs in &rows {
        for cs in &cols {
            let sub: Vec<Vec<Polynomial>> =
                rs.iter().map(|&r| cs.iter().map(|&c| jac[r][c].clone()).collect()).collect();
            out.push(poly_det(ring, &sub));
        }
    }
    out
}

fn random_matrix(rng: &mut ChaCha20Rng, rows: usize, cols: usize, p: u32) -> Vec<Vec<Coeff>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect()).collect()
}

fn compress(
    ring: &Arc<Ring>,
    jac: &[Vec<Polynomial>],
    a: &[Vec<Coeff>],
    b: &[Vec<Coeff>],
) -> Vec<Vec<Polynomial>> {
    // A (s x rows) · J (rows x n) · B (n x s)
    let s = a.len();
    let n = ring.nvars;
    let mut out = vec![vec![Polynomial::zero(ring); s]; s];
    for (i, arow) in a.iter().enumerate() {
        // row_i = Σ_r a[i][r] J[r]
        let mut row: Vec<Polynomial> = vec![Polynomial::zero(ring); n];
        for (r, jrow) in jac.iter().enumerate() {
            if arow[r] == 0 {
                continue;
            }
            for (c, e) in jrow.iter().enumerate() {
                if !e.is_zero() {
                    row[c] = row[c].add(&e.scale(arow[r]));
                }
            }
        }
        for (j, oentry) in out[i].iter_mut().enumerate() {
            let mut acc = Polynomial::zero(ring);
            for (c, rowc) in row.iter().enumerate() {
                if b[c][j] != 0 && !rowc.is_zero() {
                    acc = acc.add(&rowc.scale(b[c][j]));
                }
            }
            *oentry = acc;
        }
    }
    out
}

/// Cap on the number of honest minors before the compression strategy is
/// used for emptiness certification.
const FULL_MINOR_CAP: usize = 4000;
const COMPRESSION_TRIES: usize = 5;

/// The singular locus of an equidimensional scheme: cut by the ideal plus
/// the codim-sized minors of the Jacobian, saturated. Empty locus reports
/// dimension -1.
pub fn singular_locus(scheme: &ProjectiveScheme) -> Result<ProjectiveScheme> {
    let ring = scheme.ring().clone();
    let gens = scheme.ideal.minimal_generators();
    let codim = scheme.codim();
    if gens.is_empty() || codim <= 0 {
        // all of P^n, which is smooth
        return ProjectiveScheme::new(unit_ideal(&ring));
    }
    let c = codim as usize;
    let jac = jacobian(&gens, &ring);
    let n_minors = all_subsets(gens.len(), c).len() * all_subsets(ring.nvars, c).len();

    if n_minors > FULL_MINOR_CAP {
        // compression pre-pass: sound for certifying emptiness
        let mut rng = ChaCha20Rng::seed_from_u64(0x5a5a_0001);
        let mut acc = scheme.ideal.gens.clone();
        for _ in 0..COMPRESSION_TRIES {
            let a = random_matrix(&mut rng, c + 1, gens.len(), ring.field.prime());
            let b = random_matrix(&mut rng, ring.nvars, c + 1, ring.field.prime());
            let small = compress(&ring, &jac, &a, &b);
            for rs in all_subsets(c + 1, c) {
                for cs in all_subsets(c + 1, c) {
                    let sub: Vec<Vec<Polynomial>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&cc| small[r][cc].clone()).collect())
                        .collect();
                    let det = poly_det(&ring, &sub);
                    if !det.is_zero() {
                        acc.push(det);
                    }
                }
            }
            let candidate = ProjectiveScheme::new(Ideal::new(&ring, acc.clone())?)?;
            if candidate.is_empty() {
                return Ok(candidate);
            }
        }
    }

    // honest full enumeration
    let mut acc = scheme.ideal.gens.clone();
    let base_gb = scheme.ideal.gb();
    for det in minors_of(&ring, &jac, c) {
        if det.is_zero() {
            continue;
        }
        // drop minors already in the ideal to keep the basis small
        if !base_gb.contains(&det) {
            acc.push(det);
        }
    }
    ProjectiveScheme::new(Ideal::new(&ring, acc)?)
}

fn unit_ideal(ring: &Arc<Ring>) -> Ideal {
    Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;
    use crate::field_poly::parse::parse;

    fn scheme(n: usize, gens: &[&str]) -> ProjectiveScheme {
        let r = Ring::new(n, FieldConfig::default(), MonomialOrder::grevlex());
        let ideal = Ideal::new(&r, gens.iter().map(|s| parse(s, &r).unwrap()).collect()).unwrap();
        ProjectiveScheme::new(ideal).unwrap()
    }

    #[test]
    fn smooth_quadric_has_empty_singular_locus() {
        let q = scheme(6, &["x0*x1 + x2*x3 + x4*x5"]);
        let sing = singular_locus(&q).unwrap();
        assert_eq!(sing.dim(), -1);
    }

    #[test]
    fn rank5_quadric_vertex() {
        let q = scheme(6, &["x0*x1 + x2*x3 + x4^2"]);
        let sing = singular_locus(&q).unwrap();
        assert_eq!(sing.dim_deg(), (0, 1));
        // the vertex is (0:0:0:0:0:1)
        let r = q.ring().clone();
        let vertex = crate::geometry::scheme::RationalPoint::new(&r, vec![0, 0, 0, 0, 0, 1]).unwrap();
        assert!(sing.contains_point(&vertex));
    }

    #[test]
    fn smooth_twisted_cubic() {
        let c = scheme(4, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let sing = singular_locus(&c).unwrap();
        assert_eq!(sing.dim(), -1);
    }

    #[test]
    fn nodal_cubic_curve_detected() {
        // nodal plane cubic: zy^2 = x^3 + x^2 z has a node at (0:0:1)
        let c = scheme(3, &["x1^2*x2 - x0^3 - x0^2*x2"]);
        let sing = singular_locus(&c).unwrap();
        assert_eq!(sing.dim_deg(), (0, 1));
    }

    #[test]
    fn poly_det_small() {
        let r = Ring::new(3, FieldConfig::default(), MonomialOrder::grevlex());
        let x0 = Polynomial::var(&r, 0);
        let x1 = Polynomial::var(&r, 1);
        let det = poly_det(
            &r,
            &[vec![x0.clone(), x1.clone()], vec![x1.clone(), x0.clone()]],
        );
        assert_eq!(det, x0.pow(2).sub(&x1.pow(2)));
    }
}
