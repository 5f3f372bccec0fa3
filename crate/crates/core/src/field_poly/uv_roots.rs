//! Univariate root finding over GF(p): gcd with x^p - x isolates the
//! rational roots, then equal-degree splitting separates them.

use crate::error::{Error, Result};
use crate::field_poly::field::{Coeff, FieldConfig};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Dense univariate polynomial over GF(p); coeffs[i] is the x^i coefficient,
/// trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub field: FieldConfig,
    pub coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(field: FieldConfig, mut coeffs: Vec<Coeff>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.prime();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldConfig) -> Self {
        UniPoly { field, coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn evaluate(&self, a: Coeff) -> Coeff {
        let f = self.field;
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, a), c);
        }
        acc
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let f = self.field;
        let inv = f.inv(*self.coeffs.last().unwrap()).unwrap();
        UniPoly::new(f, self.coeffs.iter().map(|&c| f.mul(c, inv)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        let p = f.prime() as u64;
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        UniPoly::new(f, out.into_iter().map(|v| v as Coeff).collect())
    }

    /// Remainder of self modulo m (m nonzero).
    pub fn rem(&self, m: &UniPoly) -> UniPoly {
        let f = self.field;
        let md = m.degree().expect("modulus must be nonzero");
        let mut r = self.coeffs.clone();
        let lead_inv = f.inv(*m.coeffs.last().unwrap()).unwrap();
        while r.len() > md {
            let c = *r.last().unwrap();
            let k = r.len() - 1 - md;
            if c != 0 {
                let q = f.mul(c, lead_inv);
                for (i, &mc) in m.coeffs.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(q, mc));
                }
            }
            r.pop();
        }
        UniPoly::new(f, r)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e modulo m.
    pub fn powmod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::new(self.field, vec![1]);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    fn sub(&self, other: &UniPoly) -> UniPoly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out[i] = f.sub(a, b);
        }
        UniPoly::new(f, out)
    }
}

/// All roots of f in GF(p), deterministic output order (ascending).
///
/// Computes gcd(f, x^p - x), whose roots are exactly the GF(p)-roots of f,
/// then splits it by gcds with random (x + a)^((p-1)/2) - 1.
pub fn uv_roots(f: &UniPoly) -> Result<Vec<Coeff>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("uv_roots of the zero polynomial".into()));
    }
    let field = f.field;
    let p = field.prime();
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    // tiny fields: exhaustive evaluation (the quadratic-residue splitting
    // below degenerates at p = 2)
    if p < 16 {
        return Ok((0..p).filter(|&a| f.evaluate(a) == 0).collect());
    }
    // x^p - x mod f, computed by modular exponentiation.
    let x = UniPoly::new(field, vec![0, 1]);
    let xp = x.powmod(p as u64, f);
    let split_input = xp.sub(&x.rem(f));
    let mut radical = f.gcd(&split_input);
    // constant gcd: no rational roots
    if radical.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    // Handle a root at zero up front so splitting only sees units.
    let mut roots = Vec::new();
    if radical.coeffs[0] == 0 {
        roots.push(0);
        radical = UniPoly::new(field, radical.coeffs[1..].to_vec());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000_u64 ^ p as u64);
    let mut stack = vec![radical];
    while let Some(g) = stack.pop() {
        match g.degree() {
            None | Some(0) => continue,
            Some(1) => {
                // monic x + c => root -c
                let g = g.monic();
                roots.push(field.neg(g.coeffs[0]));
                continue;
            }
            Some(_) => {}
        }
        // Random shift: h = (x + a)^((p-1)/2) - 1 splits the roots into
        // quadratic residues vs non-residues of the shifted values.
        loop {
            let a = rng.gen_range(0..p);
            let shifted = UniPoly::new(field, vec![a, 1]);
            let h = shifted.powmod((p as u64 - 1) / 2, &g);
            let h1 = h.sub(&UniPoly::new(field, vec![1]));
            let d = g.gcd(&h1);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                // divide g by dted via repeated gcd-complement
                let mut quot = divide_exact(&g, &d);
                quot = quot.monic();
                stack.push(d);
                stack.push(quot);
                break;
            }
        }
    }
    roots.sort_unstable();
    Ok(roots)
}

fn divide_exact(num: &UniPoly, den: &UniPoly) -> UniPoly {
    let f = num.field;
    let dd = den.degree().unwrap();
    let mut r = num.coeffs.clone();
    let mut q = vec![0u32; r.len().saturating_sub(dd)];
    let lead_inv = f.inv(*den.coeffs.last().unwrap()).unwrap();
    while r.len() > dd {
        let c = *r.last().unwrap();
        let k = r.len() - 1 - dd;
        if c != 0 {
            let qc = f.mul(c, lead_inv);
            q[k] = qc;
            for (i, &mc) in den.coeffs.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(qc, mc));
            }
        }
        r.pop();
    }
    UniPoly::new(f, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_quadratic() {
        let f = FieldConfig::default();
        // x^2 - 1
        let poly = UniPoly::new(f, vec![f.neg(1), 0, 1]);
        assert_eq!(uv_roots(&poly).unwrap(), vec![1, 65520]);
    }

    #[test]
    fn no_roots_mod_7() {
        let f = FieldConfig::new(7).unwrap();
        // x^2 + 1; -1 is not a square mod 7
        let poly = UniPoly::new(f, vec![1, 0, 1]);
        assert_eq!(uv_roots(&poly).unwrap(), Vec::<Coeff>::new());
    }

    #[test]
    fn zero_polynomial_errors() {
        let f = FieldConfig::new(7).unwrap();
        assert!(uv_roots(&UniPoly::zero(f)).is_err());
    }

    #[test]
    fn random_cubics_vs_exhaustive() {
        let f = FieldConfig::new(101).unwrap();
        let mut state = 0xdeadbeefu64;
        for _ in 0..50 {
            let mut coeffs = vec![0u32; 4];
            for c in coeffs.iter_mut() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                *c = (state >> 33) as u32 % 101;
            }
            coeffs[3] = coeffs[3] % 100 + 1;
            let poly = UniPoly::new(f, coeffs);
            let mut expected: Vec<u32> = (0..101).filter(|&a| poly.evaluate(a) == 0).collect();
            expected.sort_unstable();
            assert_eq!(uv_roots(&poly).unwrap(), expected);
        }
    }

    #[test]
    fn multiple_roots_counted_once() {
        let f = FieldConfig::new(13).unwrap();
        // (x-2)^2 (x-5)
        let a = UniPoly::new(f, vec![f.neg(2), 1]);
        let b = UniPoly::new(f, vec![f.neg(5), 1]);
        let poly = a.mul(&a).mul(&b);
        assert_eq!(uv_roots(&poly).unwrap(), vec![2, 5]);
    }
}
