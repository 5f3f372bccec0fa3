//! Arithmetic in GF(p) for a machine-word prime p.
//!
//! Elements are canonical residues in [0, p). The default prime is 65521,
//! the largest prime below 2^16, so products of residues fit comfortably in
//! 64-bit intermediates.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const DEFAULT_PRIME: u32 = 65521;

/// Field element; always a canonical residue of the ambient [`FieldConfig`].
pub type Coeff = u32;

/// A prime field GF(p), p < 2^32. Primality is verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldConfig {
    p: u32,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { p: DEFAULT_PRIME }
    }
}

impl FieldConfig {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime_u32(p) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(FieldConfig { p })
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, v: i64) -> Coeff {
        let p = self.p as i64;
        let r = v % p;
        (if r < 0 { r + p } else { r }) as Coeff
    }

    #[inline]
    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as Coeff
    }

    #[inline]
    pub fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Coeff) -> Coeff {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        ((a as u64 * b as u64) % self.p as u64) as Coeff
    }

    pub fn pow(&self, mut base: Coeff, mut exp: u64) -> Coeff {
        let mut acc: Coeff = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; errors on zero input.
    pub fn inv(&self, a: Coeff) -> Result<Coeff> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero { p: self.p as u64 });
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce_i64(s0))
    }

    #[inline]
    pub fn div(&self, a: Coeff, b: Coeff) -> Result<Coeff> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

/// Deterministic Miller–Rabin, exact for all u32 inputs.
pub fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u32, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let n64 = n as u64;
    let d = (n64 - 1) >> (n64 - 1).trailing_zeros();
    let s = (n64 - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = powmod_u64(a, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x * x) % n64;
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn powmod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// True iff n has no repeated prime factor.
pub fn is_square_free(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime_is_prime() {
        assert!(is_prime_u32(DEFAULT_PRIME));
        assert!(FieldConfig::new(DEFAULT_PRIME).is_ok());
        assert!(FieldConfig::new(65520).is_err());
    }

    #[test]
    fn inverse_identity() {
        let f = FieldConfig::default();
        assert_eq!(f.inv(1).unwrap(), 1);
        let f7 = FieldConfig::new(7).unwrap();
        assert_eq!(f7.inv(2).unwrap(), 4);
        assert!(f7.inv(0).is_err());
    }

    #[test]
    fn inverse_random_bruteforce() {
        let f = FieldConfig::default();
        let mut state = 0x2545f4914f6cdd1du64;
        for _ in 0..1000 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let a = (state % (f.prime() as u64 - 1)) as Coeff + 1;
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
        }
    }

    #[test]
    fn square_free() {
        assert!(is_square_free(14));
        assert!(!is_square_free(12));
        assert!(is_square_free(1));
    }
}
