//! Hilbert series, Hilbert functions, and Hilbert polynomials of graded
//! quotients R/I, computed from the leading-term ideal by the standard
//! pivot-variable recursion with memoization.

use crate::error::{Error, Result};
use crate::field_poly::monomial::{Monomial, MAX_VARS};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

/// Hilbert series of R/I as numerator / (1-t)^nvars, numerator exact with
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: Vec<i64>,
}

/// A polynomial in t with rational coefficients that takes integer values on
/// integers; coeffs[k] multiplies t^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPoly {
    pub coeffs: Vec<BigRational>,
}

/// Numerator of the Hilbert series of R/⟨gens⟩ for a monomial ideal given by
/// minimal generators.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let mut memo: HashMap<Vec<[u8; MAX_VARS]>, Vec<i64>> = HashMap::new();
    let mut mins: Vec<Monomial> = minimalize(gens.to_vec());
    sort_key(&mut mins);
    numerator_rec(&mins, nvars, &mut memo)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    'next: for g in gens {
        for h in &out {
            if h.divides(&g) {
                continue 'next;
            }
        }
        out.push(g);
    }
    out
}

fn sort_key(gens: &mut [Monomial]) {
    gens.sort_by(|a, b| a.exp.cmp(&b.exp));
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += sign * c;
    }
}

fn numerator_rec(
    gens: &[Monomial],
    nvars: usize,
    memo: &mut HashMap<Vec<[u8; MAX_VARS]>, Vec<i64>>,
) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.degree() == 0) {
        return vec![0];
    }
    // pairwise coprime generators: numerator is a product of (1 - t^deg)
    if gens.iter().enumerate().all(|(i, a)| gens.iter().skip(i + 1).all(|b| a.gcd_is_one(b))) {
        let mut num = vec![1i64];
        for m in gens {
            // num *= (1 - t^deg)
            let d = m.degree() as usize;
            let mut next = vec![0i64; num.len() + d];
            for (i, &c) in num.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            num = next;
        }
        return num;
    }
    let key: Vec<[u8; MAX_VARS]> = gens.iter().map(|m| m.exp).collect();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // pivot: variable occurring in the most generators (lowest index wins)
    let mut counts = [0usize; MAX_VARS];
    for m in gens {
        for v in m.support(nvars) {
            counts[v] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| (counts[v], usize::MAX - v)).unwrap();
    // N(I) = N(I + <x>) + t * N(I : x)
    let mut plus: Vec<Monomial> = vec![Monomial::var(pivot, 1)];
    plus.extend(gens.iter().filter(|m| m.exp[pivot] == 0).cloned());
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp[pivot] > 0 {
                let mut e = m.exp;
                e[pivot] -= 1;
                Monomial::from_exponents(&e[..nvars])
            } else {
                *m
            }
        })
        .collect();
    let mut plus = minimalize(plus);
    colon = minimalize(colon);
    sort_key(&mut plus);
    sort_key(&mut colon);
    let n_plus = numerator_rec(&plus, nvars, memo);
    let n_colon = numerator_rec(&colon, nvars, memo);
    let mut out = n_plus;
    poly_add(&mut out, &n_colon, 1, 1);
    while out.last() == Some(&0) {
        out.pop();
    }
    memo.insert(key, out.clone());
    out
}

impl HilbertSeries {
    pub fn of_monomial_ideal(gens: &[Monomial], nvars: usize) -> Self {
        HilbertSeries { nvars, numerator: monomial_numerator(gens, nvars) }
    }

    pub fn is_zero_module(&self) -> bool {
        self.numerator.iter().all(|&c| c == 0)
    }

    /// Cancels all (1-t) factors; returns (reduced numerator, remaining
    /// denominator exponent). The reduced numerator has N(1) != 0.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut num = self.numerator.clone();
        let mut d = self.nvars;
        if self.is_zero_module() {
            return (vec![0], 0);
        }
        while d > 0 && num.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t): q_i = sum_{j<=i} n_j
            let mut acc = 0i64;
            let mut q = Vec::with_capacity(num.len().saturating_sub(1));
            for &c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            num = q;
            if num.is_empty() {
                num = vec![0];
            }
            d -= 1;
        }
        (num, d)
    }

    /// (projective dimension, degree); the empty scheme reports dimension -1
    /// and degree 0 (finite-length modules are projectively invisible).
    pub fn dim_deg(&self) -> (i64, u64) {
        let (num, d) = self.reduced();
        if d == 0 || num.iter().all(|&c| c == 0) {
            return (-1, 0);
        }
        let deg: i64 = num.iter().sum();
        debug_assert!(deg > 0, "degree of a nonzero module is positive");
        (d as i64 - 1, deg as u64)
    }

    /// Value of the Hilbert function of R/I at degree d (exact count).
    pub fn hilbert_function(&self, d: i64) -> u64 {
        if d < 0 {
            return 0;
        }
        let mut acc = BigInt::zero();
        for (i, &c) in self.numerator.iter().enumerate() {
            let shift = d - i as i64;
            if shift >= 0 {
                acc += BigInt::from(c) * binomial_bigint(shift + self.nvars as i64 - 1, self.nvars as i64 - 1);
            }
        }
        acc.to_u64().expect("hilbert function value is a non-negative machine integer")
    }

    /// The Hilbert polynomial: agrees with the Hilbert function for large
    /// degrees; exact rational coefficients.
    pub fn hilbert_polynomial(&self) -> HilbertPoly {
        let (num, dpow) = self.reduced();
        if dpow == 0 {
            // finite length module: polynomial 0
            return HilbertPoly { coeffs: vec![] };
        }
        // P(t) = sum_i num[i] * C(t - i + dpow - 1, dpow - 1)
        let mut coeffs = vec![BigRational::zero(); dpow];
        for (i, &c) in num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = binomial_poly(dpow - 1, (dpow as i64 - 1) - i as i64);
            for (k, t) in term.iter().enumerate() {
                coeffs[k] += BigRational::from(BigInt::from(c)) * t;
            }
        }
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        HilbertPoly { coeffs }
    }
}

/// Coefficients of the polynomial C(t + a, k) in t: degree k, a an integer
/// offset; expanded exactly as prod_{j=0}^{k-1} (t + a - j) / k!.
fn binomial_poly(k: usize, a: i64) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for j in 0..k {
        // multiply by (t + a - j)
        let c = BigRational::from(BigInt::from(a - j as i64));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, p) in poly.iter().enumerate() {
            next[i + 1] += p;
            next[i] += p * &c;
        }
        poly = next;
    }
    let kfact: BigInt = (1..=k as i64).map(BigInt::from).product::<BigInt>().max(BigInt::one());
    poly.into_iter().map(|c| c / BigRational::from(kfact.clone())).collect()
}

fn binomial_bigint(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Exact binomial C(n, k) as u64 for report arithmetic.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    binomial_bigint(n as i64, k as i64).to_u64().unwrap()
}

impl HilbertPoly {
    pub fn zero() -> Self {
        HilbertPoly { coeffs: vec![] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        let mut c: Vec<BigRational> =
            coeffs.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        HilbertPoly { coeffs: c }
    }

    /// Builds (d/2) t^2 + (d/2 + 1 - pi) t + chi, the Hilbert polynomial of
    /// a surface of degree d, sectional genus pi, with chi(O) = chi.
    pub fn surface(d: i64, pi: i64, chi: i64) -> Self {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let dd = BigRational::from(BigInt::from(d));
        let lead = &dd * &half;
        let lin = &lead + BigRational::one() - BigRational::from(BigInt::from(pi));
        HilbertPoly { coeffs: vec![BigRational::from(BigInt::from(chi)), lin, lead] }
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let mut acc = BigRational::zero();
        let tv = BigRational::from(BigInt::from(t));
        for c in self.coeffs.iter().rev() {
            acc = acc * &tv + c;
        }
        debug_assert!(acc.denom().is_one(), "Hilbert polynomial must be integer-valued");
        acc.numer().clone()
    }

    pub fn eval_i64(&self, t: i64) -> i64 {
        self.eval(t).to_i64().expect("value fits i64")
    }

    /// (projective dimension, degree) by the leading-coefficient rule.
    pub fn dim_deg(&self) -> (i64, u64) {
        if self.is_zero() {
            return (-1, 0);
        }
        let dim = self.degree();
        let fact: BigInt = (1..=dim.max(0)).map(BigInt::from).product::<BigInt>().max(BigInt::one());
        let deg = self.leading() * BigRational::from(fact);
        debug_assert!(deg.denom().is_one());
        (dim, deg.numer().to_u64().expect("positive degree"))
    }

    /// Coefficient as an exact rational (zero if absent).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exact i64 coefficient; errors when the coefficient is not an integer.
    pub fn coeff_i64(&self, k: usize) -> Result<i64> {
        let c = self.coeff(k);
        if !c.denom().is_one() {
            return Err(Error::InvalidArgument(format!("coefficient {k} is not an integer: {c}")));
        }
        c.numer().to_i64().ok_or_else(|| Error::InvalidArgument("coefficient overflow".into()))
    }
}

impl std::fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "t")?
                    } else {
                        write!(f, "{mag}*t")?
                    }
                }
                _ => {
                    if mag.is_one() {
                        write!(f, "t^{k}")?
                    } else {
                        write!(f, "{mag}*t^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_ideal_in_p5() {
        let hs = HilbertSeries::of_monomial_ideal(&[], 6);
        let hp = hs.hilbert_polynomial();
        assert_eq!(hp.eval_i64(2), 21);
        assert_eq!(hp.eval_i64(3), 56);
        assert_eq!(hs.dim_deg(), (5, 1));
    }

    #[test]
    fn irrelevant_ideal() {
        let gens: Vec<Monomial> = (0..6).map(|i| Monomial::var(i, 1)).collect();
        let hs = HilbertSeries::of_monomial_ideal(&gens, 6);
        assert_eq!(hs.numerator, vec![1, -6, 15, -20, 15, -6, 1]);
        let hp = hs.hilbert_polynomial();
        assert!(hp.is_zero());
        assert_eq!(hs.dim_deg(), (-1, 0));
        assert_eq!(hs.hilbert_function(0), 1);
        assert_eq!(hs.hilbert_function(1), 0);
    }

    #[test]
    fn twisted_cubic_lt_ideal() {
        // LT ideal of the twisted cubic under grevlex: <x1^2, x1 x2, x2^2>
        let gens = vec![
            Monomial::from_exponents(&[0, 2, 0, 0]),
            Monomial::from_exponents(&[0, 1, 1, 0]),
            Monomial::from_exponents(&[0, 0, 2, 0]),
        ];
        let hs = HilbertSeries::of_monomial_ideal(&gens, 4);
        assert_eq!(hs.dim_deg(), (1, 3));
        let hp = hs.hilbert_polynomial();
        // 3t + 1
        assert_eq!(hp.eval_i64(0), 1);
        assert_eq!(hp.eval_i64(5), 16);
    }

    #[test]
    fn staircase_bruteforce_agreement() {
        // random-ish monomial ideal in 3 vars; compare series-driven HF with
        // a direct staircase count
        let gens = vec![
            Monomial::from_exponents(&[3, 0, 0]),
            Monomial::from_exponents(&[1, 2, 0]),
            Monomial::from_exponents(&[0, 1, 2]),
            Monomial::from_exponents(&[2, 1, 1]),
        ];
        let hs = HilbertSeries::of_monomial_ideal(&gens, 3);
        for d in 0..=8i64 {
            let count = crate::field_poly::monomial::monomials_of_degree(3, d as u16)
                .into_iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as u64;
            assert_eq!(hs.hilbert_function(d), count, "degree {d}");
        }
    }

    #[test]
    fn surface_polynomial_roundtrip() {
        let hp = HilbertPoly::surface(10, 7, 2);
        assert_eq!(hp.eval_i64(0), 2);
        assert_eq!(hp.eval_i64(1), 6);
        assert_eq!(hp.eval_i64(2), 20);
        assert_eq!(hp.eval_i64(3), 44);
        assert_eq!(hp.dim_deg(), (2, 10));
    }
}
