//! Buchberger's algorithm on free-module elements, with Gebauer–Möller pair
//! elimination and the normal selection strategy (lowest degree first).
//! Deterministic: ties break by input index, pair queues are ordered maps.

use crate::field_poly::monomial::Monomial;
use crate::groebner::module::FreeModuleElement;
use std::collections::BTreeMap;

/// Full normal form: every term of the result is irreducible modulo the
/// basis. Basis elements must be monic.
pub fn module_normal_form(f: &FreeModuleElement, basis: &[FreeModuleElement]) -> FreeModuleElement {
    if basis.is_empty() || f.is_zero() {
        return f.clone();
    }
    let module = f.module.clone();
    // group basis indices by leading component for quick reducer lookup
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); module.rank];
    for (i, g) in basis.iter().enumerate() {
        if let Some(&((_, c), _)) = g.lt() {
            by_comp[c as usize].push(i);
        }
    }
    let mut done: Vec<((Monomial, u32), u32)> = Vec::with_capacity(f.terms.len());
    let mut work = f.clone();
    'outer: while let Some(&((m, comp), c)) = work.terms.first() {
        for &gi in &by_comp[comp as usize] {
            let g = &basis[gi];
            let lm = &g.lt().unwrap().0 .0;
            if lm.divides(&m) {
                let q = lm.div_into(&m);
                work = work.sub_mul_term(c, &q, g);
                continue 'outer;
            }
        }
        done.push(((m, comp), c));
        work.terms.remove(0);
    }
    FreeModuleElement { module, terms: done }
}

fn spair(
    f: &FreeModuleElement,
    g: &FreeModuleElement,
    lcm: &Monomial,
) -> FreeModuleElement {
    // both monic, same leading component
    let mf = &f.lt().unwrap().0 .0;
    let mg = &g.lt().unwrap().0 .0;
    let a = f.mul_term(1, &mf.div_into(lcm));
    a.sub_mul_term(1, &mg.div_into(lcm), g)
}

/// Gröbner basis of the submodule generated by `gens`; reduced (monic,
/// minimal, tail-reduced), sorted ascending by leading term.
pub fn module_buchberger(gens: &[FreeModuleElement]) -> Vec<FreeModuleElement> {
    module_buchberger_marked(gens, 0)
}

/// Buchberger where the first `known` input elements are already a Gröbner
/// basis of their own span: S-pairs inside that prefix are skipped, since
/// they reduce to zero against the prefix alone.
pub fn module_buchberger_marked(
    gens: &[FreeModuleElement],
    known: usize,
) -> Vec<FreeModuleElement> {
    reduce_basis(module_buchberger_unreduced(gens, known))
}

/// Same, but without the final minimalization and tail reduction; the
/// output is still a Gröbner basis (monic leading terms), fit for normal
/// forms and membership tests.
pub fn module_buchberger_unreduced(
    gens: &[FreeModuleElement],
    known: usize,
) -> Vec<FreeModuleElement> {
    let nonzero: Vec<(&FreeModuleElement, bool)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| (g, i < known))
        .collect();
    let Some((first, _)) = nonzero.first() else {
        return Vec::new();
    };
    let module = first.module.clone();
    let rank1 = module.rank == 1;

    let mut basis: Vec<FreeModuleElement> = Vec::new();
    let mut basis_known: Vec<bool> = Vec::new();
    // alive pairs: key (sugar degree of lcm incl. shift, i, j) -> lcm
    let mut pairs: BTreeMap<(i64, usize, usize), Monomial> = BTreeMap::new();
    // lcm lookup for Gebauer–Möller bookkeeping
    let mut pair_lcm: BTreeMap<(usize, usize), (i64, Monomial)> = BTreeMap::new();

    let add_pairs = |basis: &[FreeModuleElement],
                         basis_known: &[bool],
                         pairs: &mut BTreeMap<(i64, usize, usize), Monomial>,
                         pair_lcm: &mut BTreeMap<(usize, usize), (i64, Monomial)>,
                         t: usize| {
        let gt = &basis[t];
        let ((lm_t, c_t), _) = *gt.lt().unwrap();
        // candidate new pairs; pairs within the known prefix reduce to zero
        let mut cand: Vec<(usize, Monomial)> = Vec::new();
        for (i, gi) in basis.iter().enumerate().take(t) {
            if basis_known[i] && basis_known[t] {
                continue;
            }
            let ((lm_i, c_i), _) = *gi.lt().unwrap();
            if c_i == c_t {
                cand.push((i, lm_i.lcm(&lm_t)));
            }
        }
        // M criterion: drop candidates whose lcm is strictly divisible by
        // another candidate's lcm.
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..cand.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cand[b].1.divides(&cand[a].1) && cand[b].1 != cand[a].1 {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F criterion: one pair per lcm value (smallest index wins).
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..a {
                if keep[b] && cand[b].1 == cand[a].1 {
                    keep[a] = false;
                    break;
                }
            }
        }
        // product criterion: sound for ideals (rank 1) only
        if rank1 {
            for (a, (i, lcm)) in cand.iter().enumerate() {
                if keep[a] {
                    let lm_i = &basis[*i].lt().unwrap().0 .0;
                    if lm_i.gcd_is_one(&lm_t) && lm_i.mul(&lm_t) == *lcm {
                        keep[a] = false;
                    }
                }
            }
        }
        // B criterion on old pairs
        let shift = module.shifts[c_t as usize];
        let mut to_remove: Vec<(usize, usize)> = Vec::new();
        for (&(i, j), (_, lcm_ij)) in pair_lcm.iter() {
            let ci = basis[i].lt().unwrap().0 .1;
            if ci != c_t {
                continue;
            }
            if lm_t.divides(lcm_ij) {
                let lcm_it = basis[i].lt().unwrap().0 .0.lcm(&lm_t);
                let lcm_jt = basis[j].lt().unwrap().0 .0.lcm(&lm_t);
                if lcm_it != *lcm_ij && lcm_jt != *lcm_ij {
                    to_remove.push((i, j));
                }
            }
        }
        for (i, j) in to_remove {
            if let Some((d, lcm)) = pair_lcm.remove(&(i, j)) {
                pairs.remove(&(d, i, j));
                let _ = lcm;
            }
        }
        for (a, (i, lcm)) in cand.into_iter().enumerate() {
            if keep[a] {
                let d = lcm.degree() as i64 + shift;
                pairs.insert((d, i, t), lcm);
                pair_lcm.insert((i, t), (d, lcm));
            }
        }
    };

    for (g, is_known) in nonzero {
        let h = if is_known { g.clone() } else { module_normal_form(g, &basis) };
        if !h.is_zero() {
            basis.push(h.monic());
            basis_known.push(is_known);
            add_pairs(&basis, &basis_known, &mut pairs, &mut pair_lcm, basis.len() - 1);
        }
    }

    while let Some((&(d, i, j), _)) = pairs.iter().next() {
        let lcm = pairs.remove(&(d, i, j)).unwrap();
        pair_lcm.remove(&(i, j));
        let s = spair(&basis[i], &basis[j], &lcm);
        let h = module_normal_form(&s, &basis);
        if !h.is_zero() {
            basis.push(h.monic());
            basis_known.push(false);
            add_pairs(&basis, &basis_known, &mut pairs, &mut pair_lcm, basis.len() - 1);
        }
    }

    basis
}

/// Minimalizes and tail-reduces a Gröbner basis; output is the unique
/// reduced basis, sorted ascending by leading term.
pub fn reduce_basis(mut basis: Vec<FreeModuleElement>) -> Vec<FreeModuleElement> {
    if basis.is_empty() {
        return basis;
    }
    let module = basis[0].module.clone();
    // ascending by leading term; ties impossible after minimalization
    basis.sort_by(|a, b| module.cmp_terms(&a.lt().unwrap().0, &b.lt().unwrap().0));
    let mut kept: Vec<FreeModuleElement> = Vec::with_capacity(basis.len());
    'next: for g in basis.into_iter() {
        let (km, kc) = g.lt().unwrap().0;
        for h in &kept {
            let (hm, hc) = h.lt().unwrap().0;
            if hc == kc && hm.divides(&km) {
                continue 'next;
            }
        }
        kept.push(g);
    }
    // tail reduction, later elements see already-reduced earlier ones
    for i in 0..kept.len() {
        let g = kept[i].clone();
        let others: Vec<FreeModuleElement> =
            kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        kept[i] = module_normal_form(&g, &others).monic();
    }
    kept
}

/// Re-checks the Buchberger criterion: every S-pair of basis elements with a
/// common leading component reduces to zero modulo the basis.
pub fn spairs_reduce_to_zero(basis: &[FreeModuleElement]) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let ((mi, ci), _) = *basis[i].lt().unwrap();
            let ((mj, cj), _) = *basis[j].lt().unwrap();
            if ci != cj {
                continue;
            }
            let s = spair(&basis[i], &basis[j], &mi.lcm(&mj));
            if !module_normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}
