//! Homological checks against the bundled witness: sheaf sections through
//! the module route, the free resolution identity, and the Hom-module
//! presentation of the normal module.

use k3cubic::homological::graded_module::GradedModule;
use k3cubic::homological::hom::{graded_hom, sheaf_h0};
use k3cubic::homological::resolution::free_resolution;
use k3cubic::ideal_ops::ideal::Ideal;
use k3cubic::pipeline::witness::WitnessBundle;
use std::path::Path;
use std::sync::OnceLock;

fn bundle(name: &str) -> WitnessBundle {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    WitnessBundle::load(&path, Some(65521)).expect("fixture")
}

fn witness_ideal() -> &'static Ideal {
    static CELL: OnceLock<Ideal> = OnceLock::new();
    CELL.get_or_init(|| bundle("surface_typeII_p5.json").to_scheme().unwrap().ideal)
}

#[test]
fn sheaf_sections_of_the_ideal_module() {
    let module = GradedModule::from_ideal(witness_ideal()).unwrap();
    assert_eq!(sheaf_h0(&module, 1).unwrap(), 0);
    assert_eq!(sheaf_h0(&module, 2).unwrap(), 1);
    assert_eq!(sheaf_h0(&module, 3).unwrap(), 12);
}

#[test]
fn sheaf_sections_of_the_p7_model_ideal() {
    let ideal = bundle("k3_genus7_p7.json").to_scheme().unwrap().ideal;
    let module = GradedModule::from_ideal(&ideal).unwrap();
    assert_eq!(sheaf_h0(&module, 2).unwrap(), 10);
    assert_eq!(sheaf_h0(&module, 3).unwrap(), 64);
}

#[test]
fn witness_resolution_reproduces_hilbert_series() {
    let ideal = witness_ideal();
    let quotient = GradedModule::quotient_of_ring(ideal);
    let res = free_resolution(&quotient, 6).unwrap();
    assert!(res.products_are_zero());
    assert_eq!(res.alternating_numerator(), ideal.hilbert_series().numerator);
    // the witness surface is arithmetically Cohen-Macaulay of codimension 3
    assert_eq!(res.betti_numbers().len(), 4);
    // P(t) = 5t^2 - t + 2 from the resolution data via the series
    let hp = ideal.hilbert_polynomial();
    assert_eq!(hp.eval_i64(2), 20);
    assert_eq!(hp.eval_i64(3), 44);
}

#[test]
fn castelnuovo_threefold_resolution() {
    // a nondegenerate quintic threefold in P^5 is cut by one quadric and
    // two cubics, the maximal minors of a 3x2 matrix with two linear rows
    // and one quadratic row; its resolution is
    //   0 -> O(-4)^2 -> O(-3)^2 + O(-2) -> I_Y -> 0
    use k3cubic::field_poly::field::FieldConfig;
    use k3cubic::field_poly::monomial::{monomials_of_degree, Monomial};
    use k3cubic::field_poly::order::MonomialOrder;
    use k3cubic::field_poly::poly::{Polynomial, Ring};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    let ring = Ring::new(6, FieldConfig::default(), MonomialOrder::grevlex());
    let mut rng = ChaCha20Rng::seed_from_u64(31);
    let mut random_form = |d: u16| {
        let mut terms: Vec<(Monomial, u32)> = Vec::new();
        for m in monomials_of_degree(6, d) {
            terms.push((m, rng.gen_range(0..65521)));
        }
        Polynomial::from_terms(&ring, terms)
    };
    let mat: Vec<Vec<Polynomial>> = vec![
        vec![random_form(1), random_form(1)],
        vec![random_form(1), random_form(1)],
        vec![random_form(2), random_form(2)],
    ];
    let det2 = |r0: usize, r1: usize| {
        mat[r0][0].mul_unchecked(&mat[r1][1]).sub(&mat[r0][1].mul_unchecked(&mat[r1][0]))
    };
    let gens = vec![det2(0, 1), det2(0, 2), det2(1, 2)];
    let ideal = Ideal::new(&ring, gens).unwrap();
    assert_eq!(ideal.dim_deg(), (3, 5));
    let res = free_resolution(&GradedModule::quotient_of_ring(&ideal), 6).unwrap();
    let betti = res.betti();
    assert_eq!(res.betti_numbers(), vec![1, 3, 2]);
    assert_eq!(betti[1], vec![(2, 1), (3, 2)]);
    assert_eq!(betti[2], vec![(4, 2)]);
    assert!(res.products_are_zero());
}

#[test]
fn normal_module_presentation_has_58_sections() {
    let ideal = witness_ideal();
    let conormal =
        GradedModule::from_subquotient(&ideal.ring, &ideal.minimal_generators(), &Ideal::zero(&ideal.ring))
            .unwrap();
    let structure = GradedModule::quotient_of_ring(ideal);
    let hom = graded_hom(&conormal, &structure).unwrap();
    assert_eq!(hom.slice_dim(0), 58);
}
