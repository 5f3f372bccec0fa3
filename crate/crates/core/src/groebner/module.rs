//! Graded free modules and their elements. Ideals ride the same machinery
//! as rank-1 modules, so quotients, saturations, and syzygies are written
//! once.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::Monomial;
use crate::field_poly::poly::{Polynomial, Ring};
use std::cmp::Ordering;
use std::sync::Arc;

/// A graded free module ⊕_i R(-shifts[i]); the generator e_i has degree
/// shifts[i]. `split` marks the boundary for elimination orders: components
/// below it dominate anything above it (position-over-term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: Arc<Ring>,
    pub rank: usize,
    pub shifts: Vec<i64>,
    pub split: usize,
}

impl FreeModule {
    pub fn new(ring: &Arc<Ring>, shifts: Vec<i64>) -> Arc<FreeModule> {
        let rank = shifts.len();
        Arc::new(FreeModule { ring: ring.clone(), rank, shifts, split: rank })
    }

    /// Free module for syzygy computation: target components first (they
    /// dominate), one tag component per generator after them.
    pub fn with_tags(target: &FreeModule, tag_shifts: Vec<i64>) -> Arc<FreeModule> {
        let mut shifts = target.shifts.clone();
        let split = shifts.len();
        shifts.extend(tag_shifts);
        Arc::new(FreeModule { ring: target.ring.clone(), rank: shifts.len(), shifts, split })
    }

    /// Position-over-term: component class first (eliminated components
    /// dominate), then component index (lower is greater), then the ring's
    /// monomial order.
    #[inline]
    pub fn cmp_terms(&self, a: &(Monomial, u32), b: &(Monomial, u32)) -> Ordering {
        let ca = (a.1 as usize >= self.split) as u8;
        let cb = (b.1 as usize >= self.split) as u8;
        match ca.cmp(&cb) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
        match a.1.cmp(&b.1) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
        self.ring.cmp_mono(&a.0, &b.0)
    }
}

/// An element of a graded free module, stored as a sparse term list
/// (monomial, component, coefficient) sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    pub module: Arc<FreeModule>,
    /// ((monomial, component), coefficient), strictly descending.
    pub terms: Vec<((Monomial, u32), Coeff)>,
}

impl FreeModuleElement {
    pub fn zero(module: &Arc<FreeModule>) -> Self {
        FreeModuleElement { module: module.clone(), terms: Vec::new() }
    }

    pub fn from_terms(module: &Arc<FreeModule>, mut terms: Vec<((Monomial, u32), Coeff)>) -> Self {
        let f = module.ring.field;
        terms.sort_by(|a, b| module.cmp_terms(&b.0, &a.0));
        let mut out: Vec<((Monomial, u32), Coeff)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            let c = c % f.prime();
            if let Some(last) = out.last_mut() {
                if last.0 == k {
                    last.1 = f.add(last.1, c);
                    if last.1 == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            if c != 0 {
                out.push((k, c));
            }
        }
        FreeModuleElement { module: module.clone(), terms: out }
    }

    /// The element g·e_comp.
    pub fn from_poly(module: &Arc<FreeModule>, g: &Polynomial, comp: usize) -> Self {
        let terms = g.terms.iter().map(|&(m, c)| ((m, comp as u32), c)).collect();
        FreeModuleElement::from_terms(module, terms)
    }

    /// Components as polynomials (dense by component index).
    pub fn components(&self) -> Vec<Polynomial> {
        let ring = &self.module.ring;
        let mut comps: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); self.module.rank];
        for &((m, c), v) in &self.terms {
            comps[c as usize].push((m, v));
        }
        comps.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lt(&self) -> Option<&((Monomial, u32), Coeff)> {
        self.terms.first()
    }

    /// Degree of a term including the component shift.
    #[inline]
    pub fn term_degree(&self, k: &(Monomial, u32)) -> i64 {
        k.0.degree() as i64 + self.module.shifts[k.1 as usize]
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.iter().map(|(k, _)| self.term_degree(k)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((k0, _)) => {
                let d = self.term_degree(k0);
                self.terms.iter().all(|(k, _)| self.term_degree(k) == d)
            }
        }
    }

    pub fn scale(&self, c: Coeff) -> Self {
        let f = self.module.ring.field;
        let c = c % f.prime();
        if c == 0 {
            return Self::zero(&self.module);
        }
        FreeModuleElement {
            module: self.module.clone(),
            terms: self.terms.iter().map(|&(k, v)| (k, f.mul(v, c))).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.lt() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.module.ring.field.inv(c).expect("nonzero lc")),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.module == other.module);
        let module = &self.module;
        let f = module.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match module.cmp_terms(&self.terms[i].0, &other.terms[j].0) {
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
        FreeModuleElement { module: module.clone(), terms: out }
    }

    /// self - c * m * other.
    pub fn sub_mul_term(&self, c: Coeff, m: &Monomial, other: &Self) -> Self {
        debug_assert!(self.module == other.module);
        let module = &self.module;
        let f = module.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let ok = (other.terms[j].0 .0.mul(m), other.terms[j].0 .1);
            match module.cmp_terms(&self.terms[i].0, &ok) {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((ok, f.neg(f.mul(c, other.terms[j].1))));
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
            let ok = (other.terms[j].0 .0.mul(m), other.terms[j].0 .1);
            out.push((ok, f.neg(f.mul(c, other.terms[j].1))));
            j += 1;
        }
        FreeModuleElement { module: module.clone(), terms: out }
    }

    pub fn mul_term(&self, c: Coeff, m: &Monomial) -> Self {
        let f = self.module.ring.field;
        let c = c % f.prime();
        if c == 0 {
            return Self::zero(&self.module);
        }
        FreeModuleElement {
            module: self.module.clone(),
            terms: self.terms.iter().map(|&((tm, tc), v)| ((tm.mul(m), tc), f.mul(v, c))).collect(),
        }
    }

    /// Restricts to components >= from, re-indexed into the given module.
    pub fn project_tail(&self, from: usize, target: &Arc<FreeModule>) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((_, c), _)| *c as usize >= from)
            .map(|&((m, c), v)| ((m, c - from as u32), v))
            .collect();
        FreeModuleElement::from_terms(target, terms)
    }

    /// True if every term lives in components >= from.
    pub fn supported_from(&self, from: usize) -> bool {
        self.terms.iter().all(|((_, c), _)| *c as usize >= from)
    }
}

/// Generators of the first syzygy module of `gens` (all in one free module).
///
/// Computed as the Gröbner basis of {(g_i, e_i)} in F ⊕ R^r under an order
/// where the F part dominates; basis elements with vanishing F part are
/// exactly the syzygies.
pub fn syzygies(gens: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let target = gens[0].module.clone();
    for g in gens {
        if g.module != target {
            return Err(Error::RingMismatch("syzygy generators live in different modules".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous("syzygies require homogeneous generators".into()));
        }
    }
    let tag_shifts: Vec<i64> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let tagged_module = FreeModule::with_tags(&target, tag_shifts.clone());
    let s = target.rank;
    let tagged: Vec<FreeModuleElement> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms: Vec<((Monomial, u32), Coeff)> =
                g.terms.iter().map(|&(k, v)| (k, v)).collect();
            terms.push(((Monomial::one(), (s + i) as u32), 1));
            FreeModuleElement::from_terms(&tagged_module, terms)
        })
        .collect();
    let gb = super::engine::module_buchberger(&tagged);
    let syz_module = FreeModule::new(&target.ring, tag_shifts);
    let mut out: Vec<FreeModuleElement> = gb
        .into_iter()
        .filter(|e| e.supported_from(s))
        .map(|e| e.project_tail(s, &syz_module))
        .collect();
    // deterministic output order: by degree then leading term
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| syz_module.cmp_terms(&b.lt().unwrap().0, &a.lt().unwrap().0))
    });
    Ok(out)
}

/// Generators of the relative syzygy module {v : Σ v_i tagged_i ∈ W}, where
/// W is spanned by `known_gb`, which must already be a Gröbner basis of W.
pub fn syzygies_modulo(
    tagged: &[FreeModuleElement],
    known_gb: &[FreeModuleElement],
) -> Result<Vec<FreeModuleElement>> {
    if tagged.is_empty() {
        return Ok(Vec::new());
    }
    let target = tagged[0].module.clone();
    for g in tagged.iter().chain(known_gb.iter()) {
        if g.module != target {
            return Err(Error::RingMismatch("relative syzygy inputs in different modules".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous("relative syzygies need homogeneous input".into()));
        }
    }
    let tag_shifts: Vec<i64> = tagged.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let tagged_module = FreeModule::with_tags(&target, tag_shifts.clone());
    let s = target.rank;
    let mut cols: Vec<FreeModuleElement> = known_gb
        .iter()
        .map(|g| FreeModuleElement::from_terms(&tagged_module, g.terms.clone()))
        .collect();
    let known = cols.len();
    cols.extend(tagged.iter().enumerate().map(|(i, g)| {
        let mut terms: Vec<((Monomial, u32), Coeff)> = g.terms.clone();
        terms.push(((Monomial::one(), (s + i) as u32), 1));
        FreeModuleElement::from_terms(&tagged_module, terms)
    }));
    let gb = super::engine::module_buchberger_marked(&cols, known);
    let syz_module = FreeModule::new(&target.ring, tag_shifts);
    let mut out: Vec<FreeModuleElement> = gb
        .into_iter()
        .filter(|e| e.supported_from(s) && !e.is_zero())
        .map(|e| e.project_tail(s, &syz_module))
        .collect();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| syz_module.cmp_terms(&b.lt().unwrap().0, &a.lt().unwrap().0))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;

    fn ring() -> Arc<Ring> {
        Ring::new(4, FieldConfig::default(), MonomialOrder::grevlex())
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring();
        let free = FreeModule::new(&r, vec![0]);
        let x0 = Polynomial::var(&r, 0);
        let x1 = Polynomial::var(&r, 1);
        let g1 = FreeModuleElement::from_poly(&free, &x1, 0);
        let g2 = FreeModuleElement::from_poly(&free, &x0, 0);
        let syz = syzygies(&[g1.clone(), g2.clone()]).unwrap();
        assert_eq!(syz.len(), 1);
        // the syzygy must satisfy s1*x1 + s2*x0 = 0
        let comps = syz[0].components();
        let combo = comps[0].mul_unchecked(&x1).add(&comps[1].mul_unchecked(&x0));
        assert!(combo.is_zero());
        // and be the Koszul relation up to scalar
        assert_eq!(comps[0].degree(), Some(1));
        assert_eq!(comps[1].degree(), Some(1));
    }

    #[test]
    fn complete_intersection_single_syzygy() {
        let r = ring();
        let free = FreeModule::new(&r, vec![0]);
        let q = Polynomial::var(&r, 0).pow(2).add(&Polynomial::var(&r, 1).pow(2));
        let c = Polynomial::var(&r, 2).pow(3).add(&Polynomial::var(&r, 3).pow(3));
        let syz = syzygies(&[
            FreeModuleElement::from_poly(&free, &q, 0),
            FreeModuleElement::from_poly(&free, &c, 0),
        ])
        .unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].degree(), Some(5));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = ring();
        let free = FreeModule::new(&r, vec![0]);
        let f = Polynomial::var(&r, 0).add(&Polynomial::one(&r));
        let e = FreeModuleElement::from_poly(&free, &f, 0);
        assert!(syzygies(&[e]).is_err());
    }
}
