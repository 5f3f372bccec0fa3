//! Polynomial-level Gröbner bases: the rank-1 wrapper over the module
//! engine, plus the Buchberger self-certificate.

use crate::error::{Error, Result};
use crate::field_poly::monomial::Monomial;
use crate::field_poly::order::MonomialOrder;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::groebner::engine;
use crate::groebner::module::{FreeModule, FreeModuleElement};
use std::sync::Arc;

/// A reduced Gröbner basis: monic generators, no leading term divides
/// another, tails fully reduced. Unique per ideal and order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: Arc<Ring>,
    pub gens: Vec<Polynomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of ⟨gens⟩ under the given order. Zero
    /// generators are dropped; an empty input yields the zero ideal's empty
    /// basis. Output is deterministic for fixed input and order.
    pub fn compute(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
        let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
        let Some(first) = nonzero.first() else {
            let ring = gens
                .first()
                .map(|g| g.ring.with_order(order.clone()))
                .unwrap_or_else(|| Ring::new(1, Default::default(), order.clone()));
            return Ok(GroebnerBasis { ring, gens: Vec::new(), reduced: true });
        };
        for g in &nonzero {
            if !g.ring.same_ambient(&first.ring) {
                return Err(Error::RingMismatch("generators from different rings".into()));
            }
        }
        let ring = first.ring.with_order(order);
        let free = FreeModule::new(&ring, vec![0]);
        let elems: Vec<FreeModuleElement> = nonzero
            .iter()
            .map(|g| FreeModuleElement::from_poly(&free, &g.into_ring(&ring), 0))
            .collect();
        let gb = engine::module_buchberger(&elems);
        let gens = gb.into_iter().map(|e| e.components().pop().unwrap()).collect();
        Ok(GroebnerBasis { ring, gens, reduced: true })
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff 1 is in the ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == Some(0))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.lt().unwrap().0).collect()
    }

    fn as_module_elems(&self) -> (Arc<FreeModule>, Vec<FreeModuleElement>) {
        let free = FreeModule::new(&self.ring, vec![0]);
        let elems =
            self.gens.iter().map(|g| FreeModuleElement::from_poly(&free, g, 0)).collect();
        (free, elems)
    }

    /// Remainder of division by the basis; zero iff f lies in the ideal.
    /// Idempotent. Errors when f carries an incompatible order.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_compatible(&f.ring)?;
        Ok(self.normal_form_unchecked(f))
    }

    /// Same as [`normal_form`](Self::normal_form) but re-sorts f into this
    /// basis' order instead of erroring.
    pub fn normal_form_any_order(&self, f: &Polynomial) -> Polynomial {
        self.normal_form_unchecked(&f.into_ring(&self.ring))
    }

    fn normal_form_unchecked(&self, f: &Polynomial) -> Polynomial {
        let (free, elems) = self.as_module_elems();
        let fe = FreeModuleElement::from_poly(&free, f, 0);
        engine::module_normal_form(&fe, &elems).components().pop().unwrap()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form_any_order(f).is_zero()
    }

    /// Buchberger self-certificate: re-checks that every S-pair reduces to
    /// zero modulo the basis.
    pub fn check_self_certificate(&self) -> bool {
        let (_, elems) = self.as_module_elems();
        engine::spairs_reduce_to_zero(&elems)
    }
}
