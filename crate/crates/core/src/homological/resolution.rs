//! Graded free resolutions by iterated syzygies, with minimal generating
//! sets at every step so the Betti numbers are canonical.

use crate::error::{Error, Result};
use crate::groebner::engine::{module_buchberger_unreduced, module_normal_form};
use crate::groebner::module::{syzygies, FreeModule, FreeModuleElement};
use crate::homological::graded_module::{mul_poly, GradedModule};

/// A chain of presentation matrices: maps[i] is a set of columns in the free
/// module on the previous step's generators. maps[0] presents M over F0.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub gen_shifts: Vec<i64>,
    /// maps[i]: columns of the (i+1)-st differential
    pub maps: Vec<Vec<FreeModuleElement>>,
}

impl Resolution {
    /// Graded Betti data: for each homological index, the sorted list of
    /// (degree, count) of generators.
    pub fn betti(&self) -> Vec<Vec<(i64, usize)>> {
        let mut out = Vec::with_capacity(self.maps.len() + 1);
        let tally = |shifts: &[i64]| {
            let mut counts: std::collections::BTreeMap<i64, usize> = Default::default();
            for &s in shifts {
                *counts.entry(s).or_default() += 1;
            }
            counts.into_iter().collect::<Vec<_>>()
        };
        out.push(tally(&self.gen_shifts));
        for step in &self.maps {
            let shifts: Vec<i64> = step.iter().map(|c| c.degree().unwrap_or(0)).collect();
            out.push(tally(&shifts));
        }
        while out.last().map(|v| v.is_empty()).unwrap_or(false) {
            out.pop();
        }
        out
    }

    /// Total Betti numbers (ranks of the free modules).
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.betti().iter().map(|level| level.iter().map(|(_, c)| c).sum()).collect()
    }

    /// Composition of consecutive differentials must vanish identically.
    pub fn products_are_zero(&self) -> bool {
        for i in 1..self.maps.len() {
            // maps[i] columns live on the generators of maps[i-1]
            let prev = &self.maps[i - 1];
            let Some(first) = prev.first() else { continue };
            let target = first.module.clone();
            for col in &self.maps[i] {
                let comps = col.components();
                let mut acc = FreeModuleElement::zero(&target);
                for (j, c) in comps.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&mul_poly(&prev[j], c));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Numerator of Σ (-1)^i Σ_j t^{shift_ij}; equals the Hilbert series
    /// numerator of the resolved module.
    pub fn alternating_numerator(&self) -> Vec<i64> {
        let mut num: Vec<i64> = Vec::new();
        let mut add = |shifts: Vec<i64>, sign: i64| {
            for s in shifts {
                let s = s.max(0) as usize;
                if num.len() <= s {
                    num.resize(s + 1, 0);
                }
                num[s] += sign;
            }
        };
        add(self.gen_shifts.clone(), 1);
        let mut sign = -1;
        for step in &self.maps {
            add(step.iter().map(|c| c.degree().unwrap_or(0)).collect(), sign);
            sign = -sign;
        }
        while num.last() == Some(&0) {
            num.pop();
        }
        num
    }
}

/// Extracts a minimal generating set of the submodule generated by `gens`.
///
/// Candidates are processed in ascending degree; one is kept exactly when it
/// fails to reduce to zero against a Gröbner basis of the span of the
/// already-kept elements. By the graded Nakayama argument this greedy sweep
/// yields a minimal generating set: a kept element can never become
/// redundant through later (same- or higher-degree) ones.
pub fn minimal_module_generators(gens: &[FreeModuleElement]) -> Vec<FreeModuleElement> {
    let nonzero: Vec<&FreeModuleElement> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = nonzero.first() else { return vec![] };
    let module = first.module.clone();
    let mut sorted: Vec<FreeModuleElement> = nonzero.into_iter().cloned().collect();
    sorted.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| module.cmp_terms(&b.lt().unwrap().0, &a.lt().unwrap().0))
    });
    let mut kept: Vec<FreeModuleElement> = Vec::new();
    let mut gb: Vec<FreeModuleElement> = Vec::new();
    for g in sorted {
        if !kept.is_empty() && module_normal_form(&g, &gb).is_zero() {
            continue;
        }
        kept.push(g.clone());
        // grow the basis incrementally: the previous basis stays Gröbner
        let mut input = gb.clone();
        let known = input.len();
        input.push(g);
        gb = module_buchberger_unreduced(&input, known);
    }
    kept
}

/// Cancels unit entries of a presentation: a degree-zero coefficient means a
/// generator is expressible through the others, so the pair (generator,
/// relation) is removed after column operations.
pub fn minimalize_presentation(m: &GradedModule) -> GradedModule {
    let mut shifts: Vec<i64> = m.gen_shifts().to_vec();
    let mut rels: Vec<FreeModuleElement> = m.relations.clone();
    let ring = m.ring.clone();
    'outer: loop {
        let free = FreeModule::new(&ring, shifts.clone());
        for (j, rel) in rels.iter().enumerate() {
            let comps = rel.components();
            for (i, entry) in comps.iter().enumerate() {
                if entry.degree() == Some(0) {
                    // pivot: e_i = -c^{-1} (rel - c e_i)
                    let c = entry.terms[0].1;
                    let cinv = ring.field.inv(c).unwrap();
                    let pivot = rels[j].clone();
                    let mut next: Vec<FreeModuleElement> = Vec::with_capacity(rels.len() - 1);
                    for (jj, r) in rels.iter().enumerate() {
                        if jj == j {
                            continue;
                        }
                        let a = r.components()[i].clone();
                        let adjusted = if a.is_zero() {
                            r.clone()
                        } else {
                            let factor = a.scale(cinv);
                            r.add(&mul_poly(&pivot, &factor.neg()))
                        };
                        next.push(adjusted);
                    }
                    // drop generator i
                    let mut new_shifts = shifts.clone();
                    new_shifts.remove(i);
                    let new_free = FreeModule::new(&ring, new_shifts.clone());
                    rels = next
                        .into_iter()
                        .map(|r| {
                            let terms = r
                                .terms
                                .iter()
                                .filter(|((_, cc), _)| *cc as usize != i)
                                .map(|&((mm, cc), v)| {
                                    let nc = if (cc as usize) > i { cc - 1 } else { cc };
                                    ((mm, nc), v)
                                })
                                .collect();
                            FreeModuleElement::from_terms(&new_free, terms)
                        })
                        .filter(|r| !r.is_zero())
                        .collect();
                    shifts = new_shifts;
                    continue 'outer;
                }
            }
        }
        let _ = free;
        break;
    }
    GradedModule::new(&ring, shifts, rels).expect("minimalization preserves the presentation")
}

/// Minimal graded free resolution of M, by iterated syzygies with minimal
/// generator extraction at each step. Length capped at the variable count
/// (Hilbert's bound); exceeding it is an engine bug surfaced as an error.
pub fn free_resolution(m: &GradedModule, length: usize) -> Result<Resolution> {
    let cap = length.min(m.ring.nvars + 1);
    let minimal = minimalize_presentation(m);
    let mut maps: Vec<Vec<FreeModuleElement>> = Vec::new();
    let mut current: Vec<FreeModuleElement> = minimal_module_generators(&minimal.relations);
    let mut steps = 0usize;
    while !current.is_empty() {
        if steps >= cap {
            return Err(Error::ResolutionCap { cap });
        }
        maps.push(current.clone());
        let syz = syzygies(&current)?;
        current = minimal_module_generators(&syz);
        steps += 1;
    }
    Ok(Resolution { gen_shifts: minimal.gen_shifts().to_vec(), maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::field_poly::field::FieldConfig;
    use crate::field_poly::order::MonomialOrder;
    use crate::field_poly::parse::parse;
    use crate::field_poly::poly::Ring;
    use crate::ideal_ops::ideal::Ideal;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::new(n, FieldConfig::default(), MonomialOrder::grevlex())
    }

    #[test]
    fn koszul_resolution_of_complete_intersection() {
        // quadric and cubic in P^5: Betti (1, 2, 1), shifts (0; -2, -3; -5)
        let r = ring(6);
        let i = Ideal::new(
            &r,
            vec![
                parse("x0*x1 + x2*x3 + x4*x5", &r).unwrap(),
                parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", &r).unwrap(),
            ],
        )
        .unwrap();
        let m = GradedModule::quotient_of_ring(&i);
        let res = free_resolution(&m, 6).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 2, 1]);
        let betti = res.betti();
        assert_eq!(betti[1], vec![(2, 1), (3, 1)]);
        assert_eq!(betti[2], vec![(5, 1)]);
        assert!(res.products_are_zero());
    }

    #[test]
    fn twisted_cubic_betti() {
        let r = ring(4);
        let i = Ideal::new(
            &r,
            vec![
                parse("x1^2 - x0*x2", &r).unwrap(),
                parse("x1*x2 - x0*x3", &r).unwrap(),
                parse("x2^2 - x1*x3", &r).unwrap(),
            ],
        )
        .unwrap();
        let m = GradedModule::quotient_of_ring(&i);
        let res = free_resolution(&m, 6).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 3, 2]);
        // two linear syzygies among the three quadrics
        assert_eq!(res.betti()[2], vec![(3, 2)]);
        assert!(res.products_are_zero());
        // alternating sum reproduces the Hilbert series numerator
        assert_eq!(res.alternating_numerator(), i.hilbert_series().numerator);
    }

    #[test]
    fn resolution_of_free_module_is_trivial() {
        let r = ring(3);
        let m = GradedModule::free_module(&r, vec![0, -1]);
        let res = free_resolution(&m, 6).unwrap();
        assert_eq!(res.betti_numbers(), vec![2]);
    }
}
