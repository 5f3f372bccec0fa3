//! Sparse distributed polynomials over GF(p), sorted descending under the
//! ambient ring's monomial order.

use crate::error::{Error, Result};
use crate::field_poly::field::{Coeff, FieldConfig};
use crate::field_poly::monomial::Monomial;
use crate::field_poly::order::MonomialOrder;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Ambient polynomial ring: variable count, coefficient field, monomial
/// order, and display names. Shared behind an `Arc`; polynomials from
/// different rings refuse to combine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub nvars: usize,
    pub field: FieldConfig,
    pub order: MonomialOrder,
    pub names: Vec<String>,
}

impl Ring {
    pub fn new(nvars: usize, field: FieldConfig, order: MonomialOrder) -> Arc<Ring> {
        let names = (0..nvars).map(|i| format!("x{i}")).collect();
        Arc::new(Ring { nvars, field, order, names })
    }

    pub fn with_order(self: &Arc<Ring>, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { order, ..(**self).clone() })
    }

    /// Same ring up to the monomial order.
    pub fn same_ambient(&self, other: &Ring) -> bool {
        self.nvars == other.nvars && self.field == other.field
    }

    #[inline]
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.nvars)
    }

    pub fn check_compatible(&self, other: &Ring) -> Result<()> {
        if !self.same_ambient(other) {
            return Err(Error::RingMismatch(format!(
                "{} vars over GF({}) vs {} vars over GF({})",
                self.nvars,
                self.field.prime(),
                other.nvars,
                other.field.prime()
            )));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch("polynomials carry different orders".into()));
        }
        Ok(())
    }
}

#[derive(Clone)]
pub struct Polynomial {
    pub ring: Arc<Ring>,
    /// Sorted strictly descending under the ring order; no zero coefficients.
    pub terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        let c = c % ring.field.prime();
        if c == 0 {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(), c)] }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.nvars);
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(i, 1), 1)] }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        let c = c % ring.field.prime();
        if c == 0 {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds from unsorted (monomial, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % ring.field.prime();
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = ring.field.add(last.1, c);
                    if last.1 == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            if c != 0 {
                out.push((m, c));
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() || self.is_zero()
    }

    /// Leading term under the ring order.
    #[inline]
    pub fn lt(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Total degree (of the leading term; equals max over terms).
    pub fn degree(&self) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let ring = &self.ring;
        let f = ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ring.cmp_mono(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        let f = self.ring.field;
        let c = c % f.prime();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    /// self - c * m * other; the workhorse of division and Buchberger.
    pub fn sub_mul_term(&self, c: Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let ring = &self.ring;
        let f = ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let om = other.terms[j].0.mul(m);
            match ring.cmp_mono(&self.terms[i].0, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((om, f.neg(f.mul(c, other.terms[j].1))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub(self.terms[i].1, f.mul(c, other.terms[j].1));
                    if v != 0 {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let om = other.terms[j].0.mul(m);
            out.push((om, f.neg(f.mul(c, other.terms[j].1))));
            j += 1;
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_compatible(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let ring = &self.ring;
        let f = ring.field;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(ring);
        }
        let mut acc: Vec<(Monomial, Coeff)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                acc.push((ma.mul(&mb), f.mul(ca, cb)));
            }
        }
        Polynomial::from_terms(ring, acc)
    }

    pub fn mul_term(&self, c: Coeff, m: &Monomial) -> Polynomial {
        let f = self.ring.field;
        let c = c % f.prime();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(tm, tc)| (tm.mul(m), f.mul(tc, c))).collect(),
        }
    }

    pub fn pow(&self, e: u16) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.lt() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field.inv(c).expect("nonzero lc")),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let f = self.ring.field;
        let mut terms = Vec::new();
        for &(m, c) in &self.terms {
            let e = m.exp[var];
            if e > 0 {
                let mut nm = m;
                nm = nm.without_var(var);
                let mut back = Monomial::var(var, e - 1);
                back = nm.mul(&back);
                let coef = f.mul(c, (e as u32) % f.prime());
                if coef != 0 {
                    terms.push((back, coef));
                }
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        let f = self.ring.field;
        let mut acc = 0u32;
        for &(m, c) in &self.terms {
            let mut v = c;
            for i in 0..self.ring.nvars {
                if m.exp[i] > 0 {
                    v = f.mul(v, f.pow(point[i], m.exp[i] as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Substitutes each variable by the given polynomial (in a possibly
    /// different ring). All images must live in `target`.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars);
        let f = target.field;
        let mut acc = Polynomial::zero(target);
        for &(m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c % f.prime());
            for i in 0..self.ring.nvars {
                for _ in 0..m.exp[i] {
                    t = t.mul_unchecked(&images[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Linear change of coordinates x_i -> sum_j mat[i][j] x_j.
    pub fn linear_substitute(&self, mat: &[Vec<Coeff>]) -> Polynomial {
        let ring = &self.ring;
        let images: Vec<Polynomial> = (0..ring.nvars)
            .map(|i| {
                Polynomial::from_terms(
                    ring,
                    (0..ring.nvars).map(|j| (Monomial::var(j, 1), mat[i][j])).collect(),
                )
            })
            .collect();
        self.substitute(ring, &images)
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms.iter().find(|(tm, _)| tm == m).map(|&(_, c)| c).unwrap_or(0)
    }

    /// Re-sorts terms for a ring with a different order.
    pub fn into_ring(&self, ring: &Arc<Ring>) -> Polynomial {
        assert!(self.ring.same_ambient(ring));
        Polynomial::from_terms(ring, self.terms.clone())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", crate::field_poly::parse::to_string(self))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ambient(&other.ring) && {
            // term sets are order-independent
            let mut a: Vec<_> = self.terms.clone();
            let mut b: Vec<_> = other.terms.clone();
            a.sort_by(|x, y| x.0.exp.cmp(&y.0.exp));
            b.sort_by(|x, y| x.0.exp.cmp(&y.0.exp));
            a == b
        }
    }
}

impl Eq for Polynomial {}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<Ring> {
        Ring::new(4, FieldConfig::default(), MonomialOrder::grevlex())
    }

    #[test]
    fn mul_simple() {
        let r = ring2();
        let x0 = Polynomial::var(&r, 0);
        let x1 = Polynomial::var(&r, 1);
        let p = x0.mul(&x1).unwrap();
        assert_eq!(p.terms.len(), 1);
        assert_eq!(p.terms[0].0, Monomial::from_exponents(&[1, 1, 0, 0]));
    }

    #[test]
    fn mul_identity() {
        let r = ring2();
        let x0 = Polynomial::var(&r, 0);
        let f = x0.pow(2).add(&Polynomial::constant(&r, 3));
        let one = Polynomial::one(&r);
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn derivative() {
        let r = ring2();
        let x0 = Polynomial::var(&r, 0);
        let f = x0.pow(3);
        let df = f.partial_derivative(0);
        assert_eq!(df, x0.pow(2).scale(3));
    }

    #[test]
    fn homogeneity() {
        let r = ring2();
        let x0 = Polynomial::var(&r, 0);
        let x1 = Polynomial::var(&r, 1);
        assert!(x0.pow(2).add(&x1.pow(2)).is_homogeneous());
        assert!(!x0.pow(2).add(&x1).is_homogeneous());
    }
}
