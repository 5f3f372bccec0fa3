//! Homogeneous ideals with cached Gröbner data, and the ideal-level
//! operations every downstream dimension count rests on: sums, products,
//! quotients, saturation, elimination, and degree slices.

use crate::error::{Error, Result};
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::{monomials_of_degree, Monomial};
use crate::field_poly::order::MonomialOrder;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::groebner::basis::GroebnerBasis;
use crate::groebner::module::{syzygies, FreeModule, FreeModuleElement};
use crate::ideal_ops::hilbert::{HilbertPoly, HilbertSeries};
use crate::linalg::SpanBasis;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

const SATURATION_CAP: usize = 50;

/// A homogeneous ideal with cached reduced Gröbner basis, Hilbert series,
/// and saturation.
#[derive(Debug)]
pub struct Ideal {
    pub ring: Arc<Ring>,
    pub gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    series: OnceLock<HilbertSeries>,
    saturated_gens: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
            series: self.series.clone(),
            saturated_gens: self.saturated_gens.clone(),
        }
    }
}

impl Ideal {
    /// Builds an ideal from homogeneous generators (zeros dropped).
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring.same_ambient(ring) {
                return Err(Error::RingMismatch("generator from another ring".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("generator {g:?}")));
            }
            if !g.is_zero() {
                kept.push(g.into_ring(ring));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
            series: OnceLock::new(),
            saturated_gens: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![]).unwrap()
    }

    /// The irrelevant ideal ⟨x0, .., xn⟩.
    pub fn irrelevant(ring: &Arc<Ring>) -> Ideal {
        let gens = (0..ring.nvars).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn principal(f: Polynomial) -> Result<Ideal> {
        let ring = f.ring.clone();
        Ideal::new(&ring, vec![f])
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under the ring's order, computed once.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::compute(&self.gens, self.ring.order.clone()).expect("validated gens")
        })
    }

    pub fn with_known_gb(ring: &Arc<Ring>, gb: GroebnerBasis) -> Ideal {
        let ideal = Ideal::new(ring, gb.gens.clone()).expect("gb gens are valid");
        let _ = ideal.gb.set(gb);
        ideal
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    /// Ideal containment other ⊆ self.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality via uniqueness of the reduced Gröbner basis.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring.same_ambient(&other.ring) && {
            let a = self.gb();
            let b = other.gb();
            if self.ring.order == other.ring.order {
                a.gens == b.gens
            } else {
                self.contains_ideal(other) && other.contains_ideal(self)
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit_ideal()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.clone());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul_unchecked(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn square(&self) -> Ideal {
        self.product(self).unwrap()
    }

    fn as_module_elems(&self, polys: &[Polynomial]) -> (Arc<FreeModule>, Vec<FreeModuleElement>) {
        let free = FreeModule::new(&self.ring, vec![0]);
        let elems = polys.iter().map(|g| FreeModuleElement::from_poly(&free, g, 0)).collect();
        (free, elems)
    }

    /// Colon ideal (I : f) via syzygies of [gens(I), f]: the f-coordinates
    /// of the syzygy generators generate the quotient.
    pub fn quotient_by_element(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            // (I : 0) = (1)
            return Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        }
        if self.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let mut cols = self.gens.clone();
        cols.push(f.clone());
        let (_, elems) = self.as_module_elems(&cols);
        let syz = syzygies(&elems)?;
        let idx = self.gens.len();
        let gens: Vec<Polynomial> = syz
            .iter()
            .map(|s| s.components()[idx].clone())
            .filter(|p| !p.is_zero())
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Colon ideal (I : J) = ∩_f (I : f) over generators of J.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_compatible(&other.ring)?;
        if other.is_zero() {
            return Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let q = self.quotient_by_element(f)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Intersection via syzygies of [gens(I) | gens(J)] in rank 1.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_compatible(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let mut cols = self.gens.clone();
        let split = cols.len();
        cols.extend(other.gens.clone());
        let (_, elems) = self.as_module_elems(&cols);
        let syz = syzygies(&elems)?;
        let gens: Vec<Polynomial> = syz
            .iter()
            .map(|s| {
                let comps = s.components();
                let mut acc = Polynomial::zero(&self.ring);
                for (i, c) in comps.iter().enumerate().take(split) {
                    if !c.is_zero() {
                        acc = acc.add(&c.mul_unchecked(&self.gens[i]));
                    }
                }
                acc
            })
            .filter(|p| !p.is_zero())
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Saturation (I : J^∞) by iterated quotient until stabilization.
    pub fn saturate_wrt(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..SATURATION_CAP {
            let next = cur.quotient(other)?;
            if next.equals(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationCap { cap: SATURATION_CAP })
    }

    /// Saturation by a single variable: with a grevlex order placing that
    /// variable last, dividing each basis element by its top power of the
    /// variable generates (I : x^∞).
    pub fn saturate_by_var(&self, var: usize) -> Ideal {
        if self.is_zero() {
            return self.clone();
        }
        let order = MonomialOrder::grevlex_var_last(self.ring.nvars, var);
        let gb = GroebnerBasis::compute(&self.gens, order).expect("validated gens");
        let gens: Vec<Polynomial> = gb
            .gens
            .iter()
            .map(|g| {
                let k = g.terms.iter().map(|(m, _)| m.exp[var]).min().unwrap_or(0);
                if k == 0 {
                    g.into_ring(&self.ring)
                } else {
                    let shift = Monomial::var(var, k);
                    Polynomial::from_terms(
                        &self.ring,
                        g.terms.iter().map(|&(m, c)| (shift.div_into(&m), c)).collect(),
                    )
                }
            })
            .collect();
        Ideal::new(&self.ring, gens).expect("saturation preserves homogeneity")
    }

    /// Saturation with respect to the irrelevant ideal, computed as the
    /// intersection of the single-variable saturations.
    pub fn saturate(&self) -> Result<Ideal> {
        if let Some(gens) = self.saturated_gens.get() {
            return Ideal::new(&self.ring, gens.clone());
        }
        let per_var: Vec<Ideal> = (0..self.ring.nvars).map(|v| self.saturate_by_var(v)).collect();
        // common fast path: already saturated
        if per_var.iter().all(|s| self.contains_ideal(s)) {
            let _ = self.saturated_gens.set(self.gens.clone());
            return Ok(self.clone());
        }
        let mut acc = per_var[0].clone();
        for s in &per_var[1..] {
            if acc.contains_ideal(s) {
                acc = s.clone();
            } else if !s.contains_ideal(&acc) {
                acc = acc.intersect(s)?;
            }
        }
        let _ = self.saturated_gens.set(acc.gens.clone());
        Ok(acc)
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturate()?.equals(self))
    }

    /// I ∩ k[x_k, .., x_n] as an ideal of a fresh (n-k)-variable ring;
    /// the first k variables are eliminated via a block order.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Ok(self.clone());
        }
        let (small, gens) = eliminate_polys(&self.gens, &self.ring, k)?;
        Ideal::new(&small, gens)
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.series.get_or_init(|| {
            HilbertSeries::of_monomial_ideal(&self.gb().leading_monomials(), self.ring.nvars)
        })
    }

    pub fn hilbert_polynomial(&self) -> HilbertPoly {
        self.hilbert_series().hilbert_polynomial()
    }

    /// (projective dimension, degree) of Proj(R/I). Callers saturate first
    /// when the input may have irrelevant components.
    pub fn dim_deg(&self) -> (i64, u64) {
        self.hilbert_series().dim_deg()
    }

    /// dim_k of the degree-d piece of the ideal (not of R/I).
    pub fn slice_dim(&self, d: i64) -> u64 {
        if d < 0 {
            return 0;
        }
        let total = crate::ideal_ops::hilbert::binomial_u64(
            (d as u64) + self.ring.nvars as u64 - 1,
            self.ring.nvars as u64 - 1,
        );
        total - self.hilbert_series().hilbert_function(d)
    }

    /// Vector-space basis of the degree-d slice of the ideal, as reduced
    /// row-echelon polynomials over the monomial basis.
    pub fn slice_basis(&self, d: u16) -> Vec<Polynomial> {
        let nvars = self.ring.nvars;
        let monos = monomials_of_degree(nvars, d);
        let index: HashMap<Monomial, usize> =
            monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut span = SpanBasis::new(self.ring.field, monos.len());
        for g in &self.gb().gens {
            let dg = g.degree().unwrap_or(0);
            if dg > d {
                continue;
            }
            for m in monomials_of_degree(nvars, d - dg) {
                let prod = g.mul_term(1, &m);
                let mut row = vec![0 as Coeff; monos.len()];
                for &(tm, c) in &prod.terms {
                    row[index[&tm]] = c;
                }
                span.insert(row);
            }
        }
        span.basis_rows()
            .map(|row| {
                Polynomial::from_terms(
                    &self.ring,
                    row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (monos[i], c)).collect(),
                )
            })
            .collect()
    }

    /// Minimal homogeneous generating set, extracted degree by degree.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        if self.is_zero() {
            return vec![];
        }
        let mut cands: Vec<Polynomial> = self.gb().gens.clone();
        cands.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| self.ring.cmp_mono(&a.lt().unwrap().0, &b.lt().unwrap().0))
        });
        let nvars = self.ring.nvars;
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut span_cache: HashMap<u16, SpanBasis> = HashMap::new();
        for g in cands {
            let d = g.degree().unwrap();
            let monos = monomials_of_degree(nvars, d);
            let index: HashMap<Monomial, usize> =
                monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            let span = span_cache.entry(d).or_insert_with(|| {
                let mut span = SpanBasis::new(self.ring.field, monos.len());
                for k in &kept {
                    let dk = k.degree().unwrap();
                    if dk > d {
                        continue;
                    }
                    for m in monomials_of_degree(nvars, d - dk) {
                        let prod = k.mul_term(1, &m);
                        let mut row = vec![0 as Coeff; monos.len()];
                        for &(tm, c) in &prod.terms {
                            row[index[&tm]] = c;
                        }
                        span.insert(row);
                    }
                }
                span
            });
            let mut row = vec![0 as Coeff; monos.len()];
            for &(tm, c) in &g.terms {
                row[index[&tm]] = c;
            }
            if span.insert(row) {
                // new generator: degree-d cache stays valid, higher ones don't
                kept.push(g);
                let keys: Vec<u16> = span_cache.keys().copied().filter(|&k| k > d).collect();
                for k in keys {
                    span_cache.remove(&k);
                }
            }
        }
        kept
    }

    /// Degrees of a minimal generating set, as (degree, count) pairs.
    pub fn generator_degrees(&self) -> Vec<(u16, usize)> {
        let mut counts: std::collections::BTreeMap<u16, usize> = Default::default();
        for g in self.minimal_generators() {
            *counts.entry(g.degree().unwrap()).or_default() += 1;
        }
        counts.into_iter().collect()
    }
}

/// Elimination on raw generators; works for affine (inhomogeneous) inputs
/// too, which the rational point solver relies on. Returns the target ring
/// and the generators of the elimination ideal.
pub fn eliminate_polys(
    gens: &[Polynomial],
    ring: &Arc<Ring>,
    k: usize,
) -> Result<(Arc<Ring>, Vec<Polynomial>)> {
    if k >= ring.nvars {
        return Err(Error::InvalidArgument(format!(
            "cannot eliminate {k} of {} variables",
            ring.nvars
        )));
    }
    let order = MonomialOrder::block(k);
    let gb = GroebnerBasis::compute(gens, order)?;
    let small = Ring::new(ring.nvars - k, ring.field, MonomialOrder::grevlex());
    let out: Vec<Polynomial> = gb
        .gens
        .iter()
        .filter(|g| g.terms.iter().all(|(m, _)| m.degree_prefix(k) == 0))
        .map(|g| {
            Polynomial::from_terms(
                &small,
                g.terms
                    .iter()
                    .map(|&(m, c)| (Monomial::from_exponents(&m.exp[k..ring.nvars]), c))
                    .collect(),
            )
        })
        .collect();
    Ok((small, out))
}
