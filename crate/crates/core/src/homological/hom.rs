//! Hom modules between graded modules: full presentations via relative
//! syzygies, and direct degree-slice dimensions by linear algebra.

use crate::error::Result;
use crate::field_poly::field::Coeff;
use crate::field_poly::monomial::Monomial;
use crate::groebner::engine::module_buchberger;
use crate::groebner::module::{syzygies_modulo, FreeModule, FreeModuleElement};
use crate::homological::graded_module::GradedModule;
use crate::homological::resolution::minimalize_presentation;
use crate::linalg::SpanBasis;
use std::collections::HashMap;
/// Presentation of Hom_R(M, N).
///
/// Hom(M, N) is the kernel of Hom(F0, N) -> Hom(F1, N). Working in the free
/// module H = ⊕_i G0(a_i), an element is a matrix u with column u_i ∈ N(a_i);
/// the conditions Σ_i φ_j[i]·u_i ∈ im ψ are resolved by relative syzygies.
pub fn graded_hom(m: &GradedModule, n: &GradedModule) -> Result<GradedModule> {
    let m = m.minimalize_relations();
    let m = &m;
    let ring = m.ring.clone();
    let r0 = m.rank();
    let s0 = n.rank();
    let a = m.gen_shifts().to_vec();
    let c = n.gen_shifts().to_vec();
    let b: Vec<i64> = m.relations.iter().map(|r| r.degree().unwrap_or(0)).collect();
    let r1 = m.relations.len();

    // H = ⊕_{i,k} R(-(c_k - a_i)), flat index i*s0 + k
    let mut h_shifts: Vec<i64> = Vec::with_capacity(r0 * s0);
    for i in 0..r0 {
        for ck in &c {
            h_shifts.push(ck - a[i]);
        }
    }
    let h_free = FreeModule::new(&ring, h_shifts.clone());

    if r1 == 0 {
        // Hom(free, N): one copy of N per generator
        let mut relations = Vec::new();
        for i in 0..r0 {
            for psi in &n.relations {
                let terms = psi
                    .terms
                    .iter()
                    .map(|&((mm, k), v)| ((mm, (i * s0) as u32 + k), v))
                    .collect();
                relations.push(FreeModuleElement::from_terms(&h_free, terms));
            }
        }
        return GradedModule::new(&ring, h_shifts, relations);
    }

    // T = ⊕_{j,k} R(-(c_k - b_j)), flat index j*s0 + k
    let mut t_shifts: Vec<i64> = Vec::with_capacity(r1 * s0);
    for j in 0..r1 {
        for ck in &c {
            t_shifts.push(ck - b[j]);
        }
    }
    let t_free = FreeModule::new(&ring, t_shifts);

    // the map alpha: H -> T, e_(i,k) -> Σ_j φ_j[i] e_(j,k)
    let phi_cols: Vec<Vec<crate::field_poly::poly::Polynomial>> =
        m.relations.iter().map(|r| r.components()).collect();
    let mut alpha_cols: Vec<FreeModuleElement> = Vec::with_capacity(r0 * s0);
    for i in 0..r0 {
        for k in 0..s0 {
            let mut terms = Vec::new();
            for (j, phi_j) in phi_cols.iter().enumerate() {
                for &(mm, v) in &phi_j[i].terms {
                    terms.push(((mm, (j * s0 + k) as u32), v));
                }
            }
            alpha_cols.push(FreeModuleElement::from_terms(&t_free, terms));
        }
    }

    // W ⊂ T: block-diagonal copies of im ψ; block-embedded Gröbner bases of
    // ψ stay Gröbner because blocks never share lead components
    let psi_gb = if n.relations.is_empty() { vec![] } else { module_buchberger(&n.relations) };
    let mut w_cols: Vec<FreeModuleElement> = Vec::new();
    for j in 0..r1 {
        for psi in &psi_gb {
            let terms =
                psi.terms.iter().map(|&((mm, k), v)| ((mm, (j * s0) as u32 + k), v)).collect();
            w_cols.push(FreeModuleElement::from_terms(&t_free, terms));
        }
    }

    // kernel generators: {U : alpha(U) ∈ W}
    let kernel_gens_coords = syzygies_modulo(&alpha_cols, &w_cols)?;
    // interpret coordinate vectors as elements of H
    let kernel_gens: Vec<FreeModuleElement> = kernel_gens_coords
        .iter()
        .map(|coords| {
            let terms = coords.terms.iter().map(|&((mm, g), v)| ((mm, g), v)).collect();
            FreeModuleElement::from_terms(&h_free, terms)
        })
        .filter(|e| !e.is_zero())
        .collect();

    // relations among the kernel generators: combinations landing in the
    // ψ-blocks of H
    let psi_in_h: Vec<FreeModuleElement> = (0..r0)
        .flat_map(|i| {
            psi_gb.iter().map(move |psi| (i, psi)).collect::<Vec<_>>()
        })
        .map(|(i, psi)| {
            let terms =
                psi.terms.iter().map(|&((mm, k), v)| ((mm, (i * s0) as u32 + k), v)).collect();
            FreeModuleElement::from_terms(&h_free, terms)
        })
        .collect();
    let hom_relations_coords = syzygies_modulo(&kernel_gens, &psi_in_h)?;

    let gen_shifts: Vec<i64> = kernel_gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let hom_free = FreeModule::new(&ring, gen_shifts.clone());
    let relations: Vec<FreeModuleElement> = hom_relations_coords
        .iter()
        .map(|r| FreeModuleElement::from_terms(&hom_free, r.terms.clone()))
        .filter(|e| !e.is_zero())
        .collect();
    let hom = GradedModule::new(&ring, gen_shifts, relations)?;
    // Hom into a torsion-free module is torsion-free: a power of the
    // irrelevant ideal killing a map kills its values
    Ok(minimalize_presentation(&hom))
}

/// dim_k Hom_R(M, N)_d, solved directly: unknowns are the images of M's
/// generators in the corresponding slices of N, constrained by M's
/// relations. Exact linear algebra on monomial bases.
pub fn hom_slice_dim(m: &GradedModule, n: &GradedModule, d: i64) -> u64 {
    let ring = &m.ring;
    let field = ring.field;
    let a = m.gen_shifts();

    // per-degree slice data of N: basis of the free layer, relation span,
    // and the representative (non-pivot) coordinates
    struct Slice {
        basis: Vec<(Monomial, u32)>,
        index: HashMap<(Monomial, u32), usize>,
        span: SpanBasis,
        reps: Vec<usize>,
    }
    let mut slices: HashMap<i64, Slice> = HashMap::new();
    let slice = |n: &GradedModule, e: i64, slices: &mut HashMap<i64, Slice>| {
        slices.entry(e).or_insert_with(|| {
            let (basis, span) = n.relation_span(e);
            let index = basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
            let pivots: Vec<usize> = span.rows.iter().map(|(p, _)| *p).collect();
            let reps = (0..basis.len()).filter(|i| !pivots.contains(i)).collect();
            Slice { basis, index, span, reps }
        });
    };

    // unknown layout: one block per generator of M
    let mut offsets = Vec::with_capacity(a.len());
    let mut total = 0usize;
    for &ai in a {
        slice(n, ai + d, &mut slices);
        offsets.push(total);
        total += slices[&(ai + d)].reps.len();
    }
    if total == 0 {
        return 0;
    }

    // condition matrix: for each relation j of M and each unknown basis
    // vector, the reduced image in N_{b_j + d}
    let mut cond = SpanBasis::new(field, total);
    let mut rank = 0usize;
    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    for rel in &m.relations {
        let bj = rel.degree().unwrap_or(0);
        slice(n, bj + d, &mut slices);
        let phi = rel.components();
        let target = &slices[&(bj + d)];
        if target.basis.is_empty() {
            continue;
        }
        // row block: one row per target coordinate; columns = unknowns
        let mut block: Vec<Vec<Coeff>> = vec![vec![0; total]; target.basis.len()];
        for (i, phi_ji) in phi.iter().enumerate() {
            if phi_ji.is_zero() {
                continue;
            }
            let src = &slices[&(a[i] + d)];
            for (u, &rep) in src.reps.iter().enumerate() {
                let (bm, bc) = src.basis[rep];
                // phi_ji * basis element, reduced modulo N's relations
                let mut vec_full = vec![0 as Coeff; target.basis.len()];
                for &(pm, pc) in &phi_ji.terms {
                    let key = (pm.mul(&bm), bc);
                    vec_full[target.index[&key]] = field.add(vec_full[target.index[&key]], pc);
                }
                let reduced = target.span.reduce(vec_full);
                for (row_idx, &v) in reduced.iter().enumerate() {
                    if v != 0 {
                        block[row_idx][offsets[i] + u] = field.add(block[row_idx][offsets[i] + u], v);
                    }
                }
            }
        }
        for row in block {
            if row.iter().any(|&v| v != 0) {
                rows.push(row);
            }
        }
    }
    for row in rows {
        if cond.insert(row) {
            rank += 1;
        }
    }
    (total - rank) as u64
}

/// h0 of the sheaf associated with M, twisted by d: the degree-d slice of
/// the saturated module.
pub fn sheaf_h0(m: &GradedModule, d: i64) -> Result<u64> {
    Ok(m.saturate()?.slice_dim(d))
}

/// Convenience: free module rank check helper for tests.
pub fn hom_profile(m: &GradedModule, n: &GradedModule, lo: i64, hi: i64) -> Vec<u64> {
    (lo..=hi).map(|d| hom_slice_dim(m, n, d)).collect()
}
