//! Finitely presented graded modules: a cokernel presentation
//! F1 -> F0 -> M -> 0 with shifted free modules, plus degree-slice linear
//! algebra and module saturation.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::{monomials_of_degree, Monomial};
use crate::field_poly::poly::{Polynomial, Ring};
use crate::groebner::engine::{module_buchberger, module_normal_form};
use crate::groebner::module::{syzygies, FreeModule, FreeModuleElement};
use crate::ideal_ops::ideal::Ideal;
use crate::linalg::SpanBasis;
use std::collections::HashMap;
use std::sync::Arc;

/// A graded module presented as coker(F1 -> F0); generators of M correspond
/// to the basis of F0 (degrees `gen_shifts`), relations are elements of the
/// free module on those generators.
#[derive(Debug, Clone)]
pub struct GradedModule {
    pub ring: Arc<Ring>,
    pub free: Arc<FreeModule>,
    pub relations: Vec<FreeModuleElement>,
    /// Set by constructors that guarantee the module has no irrelevant
    /// torsion; saturation is the identity on such modules.
    torsion_free: bool,
}

impl GradedModule {
    pub fn new(
        ring: &Arc<Ring>,
        gen_shifts: Vec<i64>,
        relations: Vec<FreeModuleElement>,
    ) -> Result<GradedModule> {
        let free = FreeModule::new(ring, gen_shifts);
        for r in &relations {
            if r.module.shifts != free.shifts {
                return Err(Error::RingMismatch("relation lives in a different free module".into()));
            }
            if !r.is_homogeneous() {
                return Err(Error::NotHomogeneous("presentation entry".into()));
            }
        }
        let relations =
            relations.into_iter().map(|r| FreeModuleElement { module: free.clone(), ..r }).collect();
        Ok(GradedModule { ring: ring.clone(), free, relations, torsion_free: false })
    }

    /// Records that the module is known to be free of irrelevant torsion
    /// (e.g. a saturated ideal, or a Hom into a torsion-free module).
    pub fn mark_torsion_free(mut self) -> GradedModule {
        self.torsion_free = true;
        self
    }

    pub fn gen_shifts(&self) -> &[i64] {
        &self.free.shifts
    }

    pub fn rank(&self) -> usize {
        self.free.rank
    }

    /// The free module ⊕ R(-shifts[i]).
    pub fn free_module(ring: &Arc<Ring>, gen_shifts: Vec<i64>) -> GradedModule {
        GradedModule::new(ring, gen_shifts, vec![]).unwrap()
    }

    /// R/I as a cyclic module.
    pub fn quotient_of_ring(ideal: &Ideal) -> GradedModule {
        let ring = ideal.ring.clone();
        let free = FreeModule::new(&ring, vec![0]);
        let relations =
            ideal.gens.iter().map(|g| FreeModuleElement::from_poly(&free, g, 0)).collect();
        GradedModule { ring, free, relations, torsion_free: false }
    }

    /// The section module of the ideal sheaf: the saturated ideal presented
    /// by its generators with their syzygies as relations. Saturated ideals
    /// are torsion-free as modules, so the result carries that mark.
    pub fn from_ideal(ideal: &Ideal) -> Result<GradedModule> {
        let sat = ideal.saturate()?;
        let gens = sat.minimal_generators();
        Ok(GradedModule::from_subquotient(&sat.ring, &gens, &Ideal::zero(&sat.ring))?
            .mark_torsion_free())
    }

    /// Presents U/V, where U is spanned by `numerator_gens` inside R and V
    /// is an ideal contained in U + V's span context. Relations are all
    /// vectors v with Σ v_i u_i ∈ V.
    pub fn from_subquotient(
        ring: &Arc<Ring>,
        numerator_gens: &[Polynomial],
        denominator: &Ideal,
    ) -> Result<GradedModule> {
        let shifts: Vec<i64> = numerator_gens
            .iter()
            .map(|g| g.degree().map(|d| d as i64).ok_or_else(|| Error::ZeroInput("zero generator".into())))
            .collect::<Result<_>>()?;
        let rank1 = FreeModule::new(ring, vec![0]);
        let mut cols: Vec<FreeModuleElement> = numerator_gens
            .iter()
            .map(|g| FreeModuleElement::from_poly(&rank1, g, 0))
            .collect();
        let split = cols.len();
        cols.extend(denominator.gens.iter().map(|g| FreeModuleElement::from_poly(&rank1, g, 0)));
        let syz = syzygies(&cols)?;
        let free = FreeModule::new(ring, shifts.clone());
        let relations: Vec<FreeModuleElement> = syz
            .iter()
            .map(|s| {
                let terms = s
                    .terms
                    .iter()
                    .filter(|((_, c), _)| (*c as usize) < split)
                    .map(|&(k, v)| (k, v))
                    .collect();
                FreeModuleElement::from_terms(&free, terms)
            })
            .filter(|e| !e.is_zero())
            .collect();
        GradedModule::new(ring, shifts, relations)
    }

    /// Replaces the relation list by a minimal generating set of the same
    /// submodule; shrinks downstream Hom and resolution computations.
    pub fn minimalize_relations(&self) -> GradedModule {
        let relations =
            crate::homological::resolution::minimal_module_generators(&self.relations);
        GradedModule {
            ring: self.ring.clone(),
            free: self.free.clone(),
            relations,
            torsion_free: self.torsion_free,
        }
    }

    /// Twist M(d): all generator degrees drop by d.
    pub fn twist(&self, d: i64) -> GradedModule {
        let shifts: Vec<i64> = self.free.shifts.iter().map(|s| s - d).collect();
        let free = FreeModule::new(&self.ring, shifts);
        let relations = self
            .relations
            .iter()
            .map(|r| FreeModuleElement { module: free.clone(), terms: r.terms.clone() })
            .collect();
        GradedModule { ring: self.ring.clone(), free, relations, torsion_free: self.torsion_free }
    }

    /// Monomial basis of the degree-d slice of F0, as (monomial, component).
    pub fn free_slice_basis(&self, d: i64) -> Vec<(Monomial, u32)> {
        let mut out = Vec::new();
        for (comp, &shift) in self.free.shifts.iter().enumerate() {
            let local = d - shift;
            if local >= 0 {
                for m in monomials_of_degree(self.ring.nvars, local as u16) {
                    out.push((m, comp as u32));
                }
            }
        }
        out
    }

    /// Span of the relation multiples in degree d, over the free slice basis.
    pub fn relation_span(&self, d: i64) -> (Vec<(Monomial, u32)>, SpanBasis) {
        let basis = self.free_slice_basis(d);
        let index: HashMap<(Monomial, u32), usize> =
            basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut span = SpanBasis::new(self.ring.field, basis.len());
        for rel in &self.relations {
            let Some(rd) = rel.degree() else { continue };
            if rd > d {
                continue;
            }
            for m in monomials_of_degree(self.ring.nvars, (d - rd) as u16) {
                let prod = rel.mul_term(1, &m);
                let mut row = vec![0 as Coeff; basis.len()];
                for &((tm, tc), v) in &prod.terms {
                    row[index[&(tm, tc)]] = v;
                }
                span.insert(row);
            }
        }
        (basis, span)
    }

    /// dim_k of the degree-d piece of the module.
    pub fn slice_dim(&self, d: i64) -> u64 {
        let (basis, span) = self.relation_span(d);
        (basis.len() - span.rank()) as u64
    }

    /// Module quotient {v in F0 : f v ∈ K} where K is the relation
    /// submodule; returns generators.
    fn relations_colon(&self, f: &Polynomial) -> Result<Vec<FreeModuleElement>> {
        let mut cols: Vec<FreeModuleElement> = self.relations.clone();
        let split = cols.len();
        for j in 0..self.free.rank {
            cols.push(FreeModuleElement::from_poly(&self.free, f, j));
        }
        if cols.is_empty() {
            return Ok(vec![]);
        }
        let syz = syzygies(&cols)?;
        let out = syz
            .iter()
            .map(|s| {
                // coordinates over the f·e_j columns assemble the element
                let comps = s.components();
                let mut terms = Vec::new();
                for (j, c) in comps.iter().enumerate().skip(split) {
                    for &(m, v) in &c.terms {
                        terms.push(((m, (j - split) as u32), v));
                    }
                }
                FreeModuleElement::from_terms(&self.free, terms)
            })
            .filter(|e| !e.is_zero())
            .collect();
        Ok(out)
    }

    /// Saturation of the presentation: relations replaced by
    /// (K : m^∞) = ∩_v (K : x_v^∞); kills the irrelevant-torsion of M.
    pub fn saturate(&self) -> Result<GradedModule> {
        if self.torsion_free {
            return Ok(self.clone());
        }
        let nvars = self.ring.nvars;
        let mut per_var: Vec<Vec<FreeModuleElement>> = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let xv = Polynomial::var(&self.ring, v);
            let mut cur = self.relations.clone();
            for _ in 0..64 {
                let tmp = GradedModule {
                    ring: self.ring.clone(),
                    free: self.free.clone(),
                    relations: cur.clone(),
                    torsion_free: false,
                };
                let next = tmp.relations_colon(&xv)?;
                if submodule_contains(&cur, &next) {
                    break;
                }
                cur = next;
            }
            per_var.push(cur);
        }
        let mut acc = per_var[0].clone();
        for other in &per_var[1..] {
            if submodule_contains(other, &acc) {
                // acc ⊆ other: intersection is acc
                continue;
            }
            if submodule_contains(&acc, other) {
                acc = other.clone();
                continue;
            }
            acc = submodule_intersect(&self.free, &acc, other)?;
        }
        Ok(GradedModule {
            ring: self.ring.clone(),
            free: self.free.clone(),
            relations: acc,
            torsion_free: true,
        })
    }

    /// Hilbert-style slice dimensions over a degree window; useful to compare
    /// modules in tests.
    pub fn slice_profile(&self, lo: i64, hi: i64) -> Vec<u64> {
        (lo..=hi).map(|d| self.slice_dim(d)).collect()
    }
}

/// sub ⊇ elements: every element reduces to zero modulo a GB of sub.
fn submodule_contains(sub: &[FreeModuleElement], elements: &[FreeModuleElement]) -> bool {
    if elements.is_empty() {
        return true;
    }
    if sub.is_empty() {
        return elements.iter().all(|e| e.is_zero());
    }
    let gb = module_buchberger(sub);
    elements.iter().all(|e| module_normal_form(e, &gb).is_zero())
}

fn submodule_intersect(
    free: &Arc<FreeModule>,
    a: &[FreeModuleElement],
    b: &[FreeModuleElement],
) -> Result<Vec<FreeModuleElement>> {
    // syzygies of [a | b]: the a-combination of each syzygy lies in a ∩ b
    let mut cols: Vec<FreeModuleElement> = a.to_vec();
    let split = cols.len();
    cols.extend(b.iter().cloned());
    let syz = syzygies(&cols)?;
    let out = syz
        .iter()
        .map(|s| {
            let comps = s.components();
            let mut acc = FreeModuleElement::zero(free);
            for (i, c) in comps.iter().enumerate().take(split) {
                if !c.is_zero() {
                    acc = acc.add(&mul_poly(&a[i], c));
                }
            }
            acc
        })
        .filter(|e| !e.is_zero())
        .collect();
    Ok(out)
}

/// Multiplies a module element by a polynomial.
pub fn mul_poly(e: &FreeModuleElement, p: &Polynomial) -> FreeModuleElement {
    let mut acc = FreeModuleElement::zero(&e.module);
    for &(m, c) in &p.terms {
        acc = acc.add(&e.mul_term(c, &m));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;
    use crate::field_poly::parse::parse;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::new(n, FieldConfig::default(), MonomialOrder::grevlex())
    }

    #[test]
    fn free_module_slices() {
        let r = ring(3);
        let m = GradedModule::free_module(&r, vec![0, 1]);
        // degree 1: R_1 (3) + R_0 (1)
        assert_eq!(m.slice_dim(1), 4);
        assert_eq!(m.slice_dim(0), 1);
        assert_eq!(m.slice_dim(-1), 0);
    }

    #[test]
    fn quotient_ring_slices_match_hilbert_function() {
        let r = ring(3);
        let i = Ideal::new(&r, vec![parse("x0^2", &r).unwrap(), parse("x1*x2", &r).unwrap()])
            .unwrap();
        let m = GradedModule::quotient_of_ring(&i);
        for d in 0..6 {
            assert_eq!(m.slice_dim(d), i.hilbert_series().hilbert_function(d));
        }
    }

    #[test]
    fn subquotient_conormal_of_point() {
        // I/I^2 for the point V(x0, x1) in P^2 is a rank-2 skyscraper:
        // slice dimension 2 in every degree >= 1
        let r = ring(3);
        let i = Ideal::new(&r, vec![parse("x0", &r).unwrap(), parse("x1", &r).unwrap()]).unwrap();
        let m = GradedModule::from_subquotient(&r, &i.gens, &i.square()).unwrap();
        assert_eq!(m.slice_profile(0, 4), vec![0, 2, 2, 2, 2]);
    }

    #[test]
    fn saturation_kills_torsion() {
        let r = ring(3);
        // M = R/(x0 m): relations x0^2, x0 x1, x0 x2 -> saturation is R/(x0)
        let i = Ideal::new(
            &r,
            vec![
                parse("x0^2", &r).unwrap(),
                parse("x0*x1", &r).unwrap(),
                parse("x0*x2", &r).unwrap(),
            ],
        )
        .unwrap();
        let m = GradedModule::quotient_of_ring(&i).saturate().unwrap();
        let expect = GradedModule::quotient_of_ring(
            &Ideal::new(&r, vec![parse("x0", &r).unwrap()]).unwrap(),
        );
        assert_eq!(m.slice_profile(0, 6), expect.slice_profile(0, 6));
    }

    #[test]
    fn from_ideal_saturates() {
        let r = ring(3);
        let i = Ideal::new(
            &r,
            vec![
                parse("x0^2", &r).unwrap(),
                parse("x0*x1", &r).unwrap(),
                parse("x0*x2", &r).unwrap(),
            ],
        )
        .unwrap();
        let m = GradedModule::from_ideal(&i).unwrap();
        // sections of O(-1) on P^2: dims 0,1,3,6 in degrees 0..3
        assert_eq!(m.slice_profile(0, 3), vec![0, 1, 3, 6]);
    }
}
