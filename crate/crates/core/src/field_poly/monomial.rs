//! Packed exponent vectors with a cached total degree.

use serde::{Deserialize, Serialize};

/// Hard cap on ambient variables; covers P^7 plus elimination slack and the
/// 16-coordinate spinor ambient used by the fixture generator.
pub const MAX_VARS: usize = 16;

/// A monomial in up to [`MAX_VARS`] variables. The variable count is carried
/// by the ambient ring, not the monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exp: [u8; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exp: [0; MAX_VARS], deg: 0 }
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut exp = [0u8; MAX_VARS];
        exp[..exps.len()].copy_from_slice(exps);
        let deg = exps.iter().map(|&e| e as u16).sum();
        Monomial { exp, deg }
    }

    pub fn var(i: usize, e: u8) -> Self {
        assert!(i < MAX_VARS);
        let mut exp = [0u8; MAX_VARS];
        exp[i] = e;
        Monomial { exp, deg: e as u16 }
    }

    #[inline]
    pub fn degree(&self) -> u16 {
        self.deg
    }

    /// Total degree restricted to the first k variables.
    #[inline]
    pub fn degree_prefix(&self, k: usize) -> u16 {
        self.exp[..k].iter().map(|&e| e as u16).sum()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exp = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exp[i] = self.exp[i] + other.exp[i];
        }
        Monomial { exp, deg: self.deg + other.deg }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exp.iter().zip(&other.exp).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    #[inline]
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exp = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exp[i] = other.exp[i] - self.exp[i];
        }
        Monomial { exp, deg: other.deg - self.deg }
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exp = [0u8; MAX_VARS];
        let mut deg = 0u16;
        for i in 0..MAX_VARS {
            exp[i] = self.exp[i].max(other.exp[i]);
            deg += exp[i] as u16;
        }
        Monomial { exp, deg }
    }

    #[inline]
    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exp.iter().zip(&other.exp).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Largest power of variable i dividing the monomial, removed.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut exp = self.exp;
        let deg = self.deg - exp[i] as u16;
        exp[i] = 0;
        Monomial { exp, deg }
    }

    pub fn support(&self, nvars: usize) -> impl Iterator<Item = usize> + '_ {
        self.exp[..nvars].iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

/// All monomials of exact total degree d in nvars variables, in a fixed
/// deterministic enumeration order.
pub fn monomials_of_degree(nvars: usize, d: u16) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exp = [0u8; MAX_VARS];
    fn rec(out: &mut Vec<Monomial>, exp: &mut [u8; MAX_VARS], pos: usize, nvars: usize, rem: u16) {
        if pos == nvars - 1 {
            exp[pos] = rem as u8;
            out.push(Monomial::from_exponents(&exp[..nvars]));
            exp[pos] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            exp[pos] = e as u8;
            rec(out, exp, pos + 1, nvars, rem - e);
        }
        exp[pos] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    assert!(d <= u8::MAX as u16, "degree too large for packed exponents");
    rec(&mut out, &mut exp, 0, nvars, d);
    out
}
