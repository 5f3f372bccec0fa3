//! Monomial orders: grevlex, lex, and block elimination orders, each with an
//! optional variable permutation.
//!
//! The permutation maps comparison positions to ambient variable indices, so
//! grevlex with permutation [1, 2, 0] compares x1, x2, x0 in that role order.
//! Saturation by a single variable uses grevlex with that variable placed
//! last; elimination uses a block order on the leading positions.

use super::monomial::{Monomial, MAX_VARS};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    GrevLex,
    Lex,
    /// Eliminates the first k comparison positions: any monomial involving
    /// them exceeds any monomial free of them.
    Block(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// perm[pos] = ambient variable index compared at position pos.
    /// None means the identity permutation.
    pub perm: Option<Vec<u8>>,
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, perm: None }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn block(k: usize) -> Self {
        MonomialOrder { kind: OrderKind::Block(k), perm: None }
    }

    /// Grevlex with variable `var` moved to the last comparison position.
    pub fn grevlex_var_last(nvars: usize, var: usize) -> Self {
        let mut perm: Vec<u8> = (0..nvars as u8).filter(|&i| i as usize != var).collect();
        perm.push(var as u8);
        MonomialOrder { kind: OrderKind::GrevLex, perm: Some(perm) }
    }

    /// Block order eliminating the given variables (placed first).
    pub fn eliminating(nvars: usize, vars: &[usize]) -> Self {
        let mut perm: Vec<u8> = vars.iter().map(|&v| v as u8).collect();
        for i in 0..nvars as u8 {
            if !vars.contains(&(i as usize)) {
                perm.push(i);
            }
        }
        MonomialOrder { kind: OrderKind::Block(vars.len()), perm: Some(perm) }
    }

    #[inline]
    fn view(&self, m: &Monomial, nvars: usize, buf: &mut [u8; MAX_VARS]) {
        match &self.perm {
            None => buf[..nvars].copy_from_slice(&m.exp[..nvars]),
            Some(p) => {
                for (pos, &v) in p.iter().enumerate() {
                    buf[pos] = m.exp[v as usize];
                }
            }
        }
    }

    /// Total order on monomials of the ambient ring.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let mut ea = [0u8; MAX_VARS];
        let mut eb = [0u8; MAX_VARS];
        self.view(a, nvars, &mut ea);
        self.view(b, nvars, &mut eb);
        match self.kind {
            OrderKind::GrevLex => grevlex_cmp(&ea[..nvars], &eb[..nvars], a.degree(), b.degree()),
            OrderKind::Lex => lex_cmp(&ea[..nvars], &eb[..nvars]),
            OrderKind::Block(k) => {
                let da: u16 = ea[..k].iter().map(|&e| e as u16).sum();
                let db: u16 = eb[..k].iter().map(|&e| e as u16).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                match grevlex_cmp(&ea[..k], &eb[..k], da, db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let ta: u16 = ea[k..nvars].iter().map(|&e| e as u16).sum();
                let tb: u16 = eb[k..nvars].iter().map(|&e| e as u16).sum();
                grevlex_cmp(&ea[k..nvars], &eb[k..nvars], ta, tb)
            }
        }
    }

    /// True if monomials free of the first k comparison positions are closed
    /// downward, i.e. the order is fit for eliminating those positions.
    pub fn eliminates(&self, k: usize) -> bool {
        match self.kind {
            OrderKind::Block(b) => b >= k,
            OrderKind::Lex => true,
            OrderKind::GrevLex => false,
        }
    }

    /// Ambient variable indices of the first k comparison positions.
    pub fn leading_vars(&self, k: usize) -> Vec<usize> {
        match &self.perm {
            None => (0..k).collect(),
            Some(p) => p[..k].iter().map(|&v| v as usize).collect(),
        }
    }
}

#[inline]
fn grevlex_cmp(a: &[u8], b: &[u8], da: u16, db: u16) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Same degree: the last position where they differ decides, reversed.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[inline]
fn lex_cmp(a: &[u8], b: &[u8]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_standard_examples() {
        let o = MonomialOrder::grevlex();
        // x0^2 x1 > x0 x1^2 in grevlex with 3 vars
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 2, 0]), 3), Ordering::Greater);
        // z^3 < x^2 y at same degree
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 1, 0]), 3), Ordering::Less);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0]), 3), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::lex();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9]), 3), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_leading_vars() {
        let o = MonomialOrder::block(1);
        // any monomial with x0 beats any without
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5]), 3), Ordering::Greater);
        assert!(o.eliminates(1));
        assert!(!MonomialOrder::grevlex().eliminates(1));
    }

    #[test]
    fn permuted_grevlex_moves_variable_last() {
        let o = MonomialOrder::grevlex_var_last(3, 0);
        // with x0 last, x0^1 is the cheapest degree-1 monomial
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0]), 3), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 0, 1]), 3), Ordering::Less);
    }

    #[test]
    fn multiplicative() {
        let o = MonomialOrder::grevlex();
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 2, 0]);
        let c = m(&[0, 3, 1]);
        assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c), 3), o.cmp(&a, &b, 3));
    }
}
