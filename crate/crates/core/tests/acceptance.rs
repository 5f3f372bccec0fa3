//! Acceptance suite: every criterion below runs at its stated tolerance
//! (exact integer equality throughout) and prints one pass/fail line.

use k3cubic::field_poly::field::{FieldConfig, is_prime_u32};
use k3cubic::field_poly::monomial::{monomials_of_degree, Monomial};
use k3cubic::field_poly::order::MonomialOrder;
use k3cubic::field_poly::poly::{Polynomial, Ring};
use k3cubic::field_poly::uv_roots::{uv_roots, UniPoly};
use k3cubic::geometry::hypersurface::{quadric_rank, random_smooth_hypersurface};
use k3cubic::geometry::normal_sheaf::h0_normal_sheaf;
use k3cubic::geometry::projection::are_skew_lines;
use k3cubic::geometry::scheme::{ProjectiveScheme, RationalPoint};
use k3cubic::geometry::singular::singular_locus;
use k3cubic::ideal_ops::hilbert::HilbertSeries;
use k3cubic::ideal_ops::ideal::Ideal;
use k3cubic::numerics::invariants::{
    chi_ideal_twist, sectional_invariants, self_intersection_in_cubic, SurfaceInvariants,
};
use k3cubic::numerics::lattice::{
    hassett_admissible_divisor, hassett_discriminant, residual_class_solver, RankTwoLattice,
};
use k3cubic::numerics::ledger::{flag_dimension_ledger, DimensionLedger};
use k3cubic::pipeline::construct::{construct_witness, ConstructConfig, EXPECTED_TRAIL};
use k3cubic::pipeline::verify::{run_verification, verify_k3_fixture, VerifyConfig};
use k3cubic::pipeline::witness::WitnessBundle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::path::Path;
use std::sync::{Arc, OnceLock};

fn fixture_path(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn witness_bundle() -> &'static WitnessBundle {
    static CELL: OnceLock<WitnessBundle> = OnceLock::new();
    CELL.get_or_init(|| {
        WitnessBundle::load(&fixture_path("surface_typeII_p5.json"), Some(65521)).expect("fixture")
    })
}

fn witness_surface() -> &'static ProjectiveScheme {
    static CELL: OnceLock<ProjectiveScheme> = OnceLock::new();
    CELL.get_or_init(|| witness_bundle().to_scheme().expect("witness scheme"))
}

fn k3_bundle() -> &'static WitnessBundle {
    static CELL: OnceLock<WitnessBundle> = OnceLock::new();
    CELL.get_or_init(|| {
        WitnessBundle::load(&fixture_path("k3_genus7_p7.json"), Some(65521)).expect("fixture")
    })
}

fn report_line(criterion: &str, pass: bool) {
    println!("acceptance {criterion}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{criterion} failed");
}

#[test]
fn criterion_1_witness_verification() {
    let s = witness_surface();
    let (d, pi, chi) = sectional_invariants(s.hilbert_polynomial()).unwrap();
    let smooth = singular_locus(s).unwrap().is_empty();
    let h2 = s.h0_ideal(2);
    let h3 = s.h0_ideal(3);
    let quadric = ProjectiveScheme::new(
        Ideal::new(s.ring(), vec![s.ideal.slice_basis(2)[0].clone()]).unwrap(),
    )
    .unwrap();
    let rank = quadric_rank(&quadric).unwrap();
    let pass = (d, pi, chi) == (10, 7, 2)
        && s.dim_deg() == (2, 10)
        && smooth
        && h2 == 1
        && h3 == 12
        && rank == 6
        && quadric.dim_deg() == (4, 2);
    report_line(
        "criterion 1 (witness: degree 10, genus 7, chi 2, smooth, h0(I(2))=1, h0(I(3))=12, rank 6)",
        pass,
    );
}

#[test]
fn criterion_2_normal_sheaf_dimensions() {
    let s = witness_surface();
    let quadric = ProjectiveScheme::new(
        Ideal::new(s.ring(), vec![s.ideal.slice_basis(2)[0].clone()]).unwrap(),
    )
    .unwrap();
    let (cubic, _) = random_smooth_hypersurface(s, 3, 2024, 8).unwrap();
    let h_x = h0_normal_sheaf(s, Some(&cubic)).unwrap();
    let h_q = h0_normal_sheaf(s, Some(&quadric)).unwrap();
    let h_p5 = h0_normal_sheaf(s, None).unwrap();
    let pass = (h_x, h_q, h_p5) == (15, 38, 58) && cubic.dim_deg() == (4, 3);
    report_line("criterion 2 (normal sheaf sections 15 / 38 / 58)", pass);
}

#[test]
fn criterion_3_construction_pipeline() {
    // the fixture model itself first: everything checkable is checked once
    let fixture_report = verify_k3_fixture(k3_bundle()).unwrap();
    assert!(
        fixture_report.all_pass(),
        "fixture re-verification failed: {:?}",
        fixture_report.failed_names()
    );

    let mut all_pass = true;
    let mut generator_sets = Vec::new();
    for seed in [11u64, 22, 33] {
        let config = ConstructConfig { seed, ..Default::default() };
        let bundle = construct_witness(k3_bundle(), &config).unwrap();
        let trail: Vec<(usize, i64, i64, u64, u64)> = bundle
            .history
            .iter()
            .map(|h| (h.ambient_dim, h.degree, h.genus, h.quadrics, h.cubics))
            .collect();
        all_pass &= trail == EXPECTED_TRAIL.to_vec();
        // round trip through disk
        let dir = std::env::temp_dir().join("k3cubic_acceptance");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("constructed_{seed}.json"));
        bundle.save(&path).unwrap();
        let loaded = WitnessBundle::load(&path, Some(65521)).unwrap();
        let surface = loaded.to_scheme().unwrap();
        let lines = loaded.line_schemes().unwrap();
        all_pass &= lines.len() == 2;
        all_pass &= lines.iter().all(|l| l.ideal.contains_ideal(&surface.ideal));
        all_pass &= are_skew_lines(&lines[0], &lines[1]).unwrap();
        generator_sets.push(loaded.generators.clone());
    }
    // distinct seeds give distinct generator sets with identical history
    all_pass &= generator_sets[0] != generator_sets[1];
    all_pass &= generator_sets[1] != generator_sets[2];
    report_line(
        "criterion 3 (construction reproduces (12,7,10,64)->(11,7,5,34)->(10,7,1,12), skew lines, 3 seeds)",
        all_pass,
    );
}

#[test]
fn criterion_4_generality_of_h0() {
    let s = witness_surface();
    let mut all_pass = true;
    for seed in [101u64, 202, 303] {
        let (cubic, _) = random_smooth_hypersurface(s, 3, seed, 8).unwrap();
        let h = h0_normal_sheaf(s, Some(&cubic)).unwrap();
        all_pass &= h == 15;
    }
    report_line("criterion 4 (h0(N_{S/X}) = 15 over 3 independently seeded cubics)", all_pass);
}

#[test]
fn criterion_5_arithmetic_ledger() {
    let mut pass = true;
    pass &= chi_ideal_twist(2) == 1;
    pass &= chi_ideal_twist(3) == 12;
    let inv = SurfaceInvariants::new(10, 7, 2, 2, -2, 26).unwrap();
    pass &= self_intersection_in_cubic(&inv).unwrap() == 38;
    pass &= hassett_discriminant(&RankTwoLattice::cubic_fourfold(10, 38)) == 14;
    pass &= hassett_admissible_divisor(14);
    pass &= flag_dimension_ledger(&DimensionLedger::witness(58, 12)) == (69, 15);
    pass &= residual_class_solver(10, 5, 3).unwrap() == (5, -1);
    pass &= residual_class_solver(4, 5, 3).unwrap() == (3, -1);
    report_line("criterion 5 (integer ledger: 1, 12, 38, 14, admissible, (69,15), (5,-1), (3,-1))", pass);
}

#[test]
fn criterion_6_engine_property_suites() {
    let mut pass = true;

    // Buchberger self-certificate on every basis the pipeline exports
    let s = witness_surface();
    pass &= s.ideal.gb().check_self_certificate();
    let k3_scheme = k3_bundle().to_scheme().unwrap();
    pass &= k3_scheme.ideal.gb().check_self_certificate();
    let quadric = ProjectiveScheme::new(
        Ideal::new(s.ring(), vec![s.ideal.slice_basis(2)[0].clone()]).unwrap(),
    )
    .unwrap();
    pass &= quadric.ideal.gb().check_self_certificate();

    // membership vs brute-force slice linear algebra on 50 random ideals
    let mut rng = ChaCha20Rng::seed_from_u64(6);
    for trial in 0..50 {
        let nvars = rng.gen_range(2..=4usize);
        let ring = Ring::new(nvars, FieldConfig::default(), MonomialOrder::grevlex());
        let gens: Vec<Polynomial> = (0..rng.gen_range(2..=3))
            .map(|_| random_homogeneous(&ring, rng.gen_range(1..=3), &mut rng))
            .filter(|g: &Polynomial| !g.is_zero())
            .collect();
        let Ok(ideal) = Ideal::new(&ring, gens.clone()) else { continue };
        if ideal.is_zero() {
            continue;
        }
        let gb = ideal.gb();
        pass &= gb.check_self_certificate();
        for d in 1..=6u16 {
            // brute-force slice of the ideal in degree d
            let slice = ideal.slice_basis(d);
            // members constructed from the slice reduce to zero
            if let Some(first) = slice.first() {
                let member = first.add(&slice.last().unwrap().scale(17));
                pass &= gb.contains(&member);
            }
            // random polynomials agree between the two membership routes
            let f = random_homogeneous(&ring, d, &mut rng);
            if f.is_zero() {
                continue;
            }
            let in_slice = in_span(&slice, &f, &ring, d);
            let in_gb = gb.contains(&f);
            if in_slice != in_gb {
                eprintln!("membership mismatch in trial {trial} degree {d}");
                pass = false;
            }
        }
    }

    // saturation idempotence
    for gens in [vec!["x0^2", "x0*x1", "x0*x2"], vec!["x0^2*x1", "x1^2*x2"], vec!["x0*x1 - x2^2"]] {
        let ring = Ring::new(3, FieldConfig::default(), MonomialOrder::grevlex());
        let ideal = Ideal::new(
            &ring,
            gens.iter().map(|s| k3cubic::field_poly::parse::parse(s, &ring).unwrap()).collect(),
        )
        .unwrap();
        let sat = ideal.saturate().unwrap();
        pass &= sat.saturate().unwrap().equals(&sat);
        pass &= sat.contains_ideal(&ideal);
    }

    // Hilbert series vs staircase count to degree 8
    for _ in 0..20 {
        let nvars = rng.gen_range(2..=4usize);
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let mut exps = vec![0u8; nvars];
                for e in exps.iter_mut() {
                    *e = rng.gen_range(0..=3);
                }
                if exps.iter().all(|&e| e == 0) {
                    exps[0] = 1;
                }
                Monomial::from_exponents(&exps)
            })
            .collect();
        let hs = HilbertSeries::of_monomial_ideal(&gens, nvars);
        for d in 0..=8i64 {
            let direct = monomials_of_degree(nvars, d as u16)
                .into_iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as u64;
            pass &= hs.hilbert_function(d) == direct;
        }
    }

    // univariate roots: exhaustive agreement over primes up to 1000
    let primes: Vec<u32> = (2..=1000).filter(|&n| is_prime_u32(n)).collect();
    for i in 0..100 {
        let p = primes[rng.gen_range(0..primes.len())];
        let field = FieldConfig::new(p).unwrap();
        let deg = rng.gen_range(1..=6usize);
        let mut coeffs: Vec<u32> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
        if coeffs[deg] == 0 {
            coeffs[deg] = 1;
        }
        let poly = UniPoly::new(field, coeffs);
        let mut expected: Vec<u32> = (0..p).filter(|&a| poly.evaluate(a) == 0).collect();
        expected.sort_unstable();
        let got = uv_roots(&poly).unwrap();
        if got != expected {
            eprintln!("uv_roots mismatch at prime {p}, trial {i}");
            pass = false;
        }
    }

    report_line("criterion 6 (engine property suites)", pass);
}

#[test]
fn criterion_7_negative_controls() {
    let mut pass = true;

    // edited expectation fails exactly the edited check
    let mut edited = witness_bundle().clone();
    edited.expected.as_mut().unwrap().h0_normal_in_cubic = Some(14);
    let config = VerifyConfig { seed: 5, ..Default::default() };
    let report = run_verification(&edited, &config).unwrap();
    let failed = report.failed_names();
    if failed != vec!["h0_normal_in_cubic".to_string()] {
        eprintln!("edited fixture failed checks: {failed:?}");
        pass = false;
    }

    // a rank-5 quadric reports a singular point
    let ring = Ring::new(6, FieldConfig::default(), MonomialOrder::grevlex());
    let q5 = ProjectiveScheme::new(
        Ideal::new(
            &ring,
            vec![k3cubic::field_poly::parse::parse("x0*x1 + x2*x3 + x4^2", &ring).unwrap()],
        )
        .unwrap(),
    )
    .unwrap();
    pass &= quadric_rank(&q5).unwrap() == 5;
    let sing = singular_locus(&q5).unwrap();
    pass &= sing.dim_deg() == (0, 1);
    let vertex = RationalPoint::new(&ring, vec![0, 0, 0, 0, 0, 1]).unwrap();
    pass &= sing.contains_point(&vertex);

    // meeting lines report non-skew
    let l1 = ProjectiveScheme::new(
        Ideal::new(
            &ring,
            ["x0", "x1", "x2", "x3"]
                .iter()
                .map(|s| k3cubic::field_poly::parse::parse(s, &ring).unwrap())
                .collect(),
        )
        .unwrap(),
    )
    .unwrap();
    let l2 = ProjectiveScheme::new(
        Ideal::new(
            &ring,
            ["x0", "x1", "x2", "x4"]
                .iter()
                .map(|s| k3cubic::field_poly::parse::parse(s, &ring).unwrap())
                .collect(),
        )
        .unwrap(),
    )
    .unwrap();
    pass &= !are_skew_lines(&l1, &l2).unwrap();

    // a random line off the surface fails line membership in the certificate
    let s = witness_surface();
    let off_line = ProjectiveScheme::new(
        Ideal::new(
            s.ring(),
            ["x0", "x1", "x2", "x3"]
                .iter()
                .map(|t| k3cubic::field_poly::parse::parse(t, s.ring()).unwrap())
                .collect(),
        )
        .unwrap(),
    )
    .unwrap();
    let real_lines = witness_bundle().line_schemes().unwrap();
    let checks =
        k3cubic::geometry::certificate::type_ii_certificate(s, &real_lines[0], &off_line).unwrap();
    let line2 = checks.iter().find(|c| c.name == "line2_on_surface").unwrap();
    pass &= !line2.pass;

    report_line("criterion 7 (negative controls)", pass);
}

fn random_homogeneous(ring: &Arc<Ring>, d: u16, rng: &mut ChaCha20Rng) -> Polynomial {
    let monos = monomials_of_degree(ring.nvars, d);
    let p = ring.field.prime();
    let mut terms: Vec<(Monomial, u32)> = Vec::new();
    for m in monos {
        if rng.gen_bool(0.4) {
            terms.push((m, rng.gen_range(0..p)));
        }
    }
    Polynomial::from_terms(ring, terms)
}

fn in_span(slice: &[Polynomial], f: &Polynomial, ring: &Arc<Ring>, d: u16) -> bool {
    let monos = monomials_of_degree(ring.nvars, d);
    let index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut span = k3cubic::linalg::SpanBasis::new(ring.field, monos.len());
    for g in slice {
        let mut row = vec![0u32; monos.len()];
        for &(m, c) in &g.terms {
            row[index[&m]] = c;
        }
        span.insert(row);
    }
    let mut row = vec![0u32; monos.len()];
    for &(m, c) in &f.terms {
        row[index[&m]] = c;
    }
    span.contains(row)
}
