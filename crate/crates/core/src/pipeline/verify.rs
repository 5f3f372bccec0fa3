//! The end-to-end verification pipeline: runs the type certificate, the
//! Euler cross-check, random hypersurface constructions with smoothness
//! checks, the three normal-sheaf section counts, and the full integer
//! ledger, one reported check at a time. Individual failures are recorded
//! and the run continues; engine errors abort with context.

use crate::error::{Error, Result};
use crate::geometry::certificate::type_ii_certificate;
use crate::geometry::hypersurface::{quadric_rank, random_hypersurface_containing, random_smooth_hypersurface};
use crate::geometry::normal_sheaf::h0_normal_sheaf;
use crate::geometry::singular::singular_locus;
use crate::numerics::invariants::{
    chi_ideal_twist, noether_c2, sectional_invariants, self_intersection_in_cubic,
    SurfaceInvariants,
};
use crate::numerics::lattice::{
    discriminant_square_free_note, hassett_admissible_divisor, hassett_discriminant,
    residual_class_solver, RankTwoLattice,
};
use crate::numerics::ledger::{flag_dimension_ledger, DimensionLedger};
use crate::pipeline::report::{Check, Stopwatch, VerificationReport};
use crate::pipeline::witness::WitnessBundle;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Redraw cap for the random smooth cubic.
    pub max_retries: usize,
    pub timeout_secs: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, max_retries: 8, timeout_secs: 3600 }
    }
}

struct Deadline {
    at: Instant,
}

impl Deadline {
    fn new(secs: u64) -> Deadline {
        Deadline { at: Instant::now() + std::time::Duration::from_secs(secs.max(1)) }
    }

    fn expired(&self) -> bool {
        Instant::now() >= self.at
    }
}

/// Verifies a degree-10 witness bundle in P^5. The report lists every check
/// with its anchor in the reference log; the verdict is their conjunction.
pub fn run_verification(bundle: &WitnessBundle, config: &VerifyConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(bundle.prime, config.seed);
    let deadline = Deadline::new(config.timeout_secs);

    if bundle.ambient_dim != 5 {
        return Err(Error::InvalidArgument(format!(
            "verification expects a surface in P^5, bundle is in P^{}",
            bundle.ambient_dim
        )));
    }
    let surface = bundle.to_scheme()?;
    let lines = bundle.line_schemes()?;
    report.assumptions.push(
        "K^2 = -2 assumed from the classification input: a K3 blown up in two points \
         carries two skew (-1)-lines"
            .into(),
    );
    report.assumptions.push(
        "h^1 and h^2 vanishing for the normal sheaves is consumed as a cited assumption; \
         only h^0 is recomputed here"
            .into(),
    );

    // 1. membership certificate
    if lines.len() == 2 {
        report.extend(type_ii_certificate(&surface, &lines[0], &lines[1])?);
    } else {
        report.notes.push("bundle carries no exceptional lines; line checks skipped".into());
        let mut sw = Stopwatch::start();
        let h0_linear = surface.h0_ideal(1);
        report.push(Check::new("nondegenerate_h0_ideal_1", "no hyperplane contains S", 0, h0_linear, sw.lap_ms()));
        let (d, pi, chi) = sectional_invariants(surface.hilbert_polynomial())?;
        report.push(Check::new("degree", "i3 log: degree 10", 10, d, sw.lap_ms()));
        report.push(Check::new("sectional_genus", "i3 log: sectional genus 7", 7, pi, sw.lap_ms()));
        report.push(Check::new("chi_structure_sheaf", "P(0) = 2", 2, chi, sw.lap_ms()));
        let sing = singular_locus(&surface)?;
        report.push(Check::new("smooth_surface", "o4: empty singular locus", -1, sing.dim(), sw.lap_ms()));
        report.push(Check::new("h0_ideal_2", "i3 log: quadrics 1", 1, surface.h0_ideal(2), sw.lap_ms()));
    }
    if deadline.expired() {
        return timeout(report, "after certificate");
    }

    // 2. expectation round-trip against the bundle
    let mut sw = Stopwatch::start();
    let (d, pi, chi) = sectional_invariants(surface.hilbert_polynomial())?;
    let quadrics = surface.h0_ideal(2);
    let cubics = surface.h0_ideal(3);
    if let Some(exp) = &bundle.expected {
        report.push(Check::new("expected_degree", "bundle expectation", exp.degree, d, sw.lap_ms()));
        report.push(Check::new("expected_genus", "bundle expectation", exp.genus, pi, sw.lap_ms()));
        report.push(Check::new("expected_quadrics", "bundle expectation", exp.quadrics, quadrics, sw.lap_ms()));
        report.push(Check::new("expected_cubics", "bundle expectation", exp.cubics, cubics, sw.lap_ms()));
    }

    // 3. Euler number cross-check through Noether's formula
    let hk = 2 * pi - 2 - d;
    let k2 = -2;
    let c2 = noether_c2(chi, k2);
    let expected_euler = bundle.expected.as_ref().and_then(|e| e.euler).unwrap_or(26);
    report.push(Check::new(
        "euler_noether_cross_check",
        "o5 = 26; 12*chi(O) - K^2 with K^2 = -2 assumed",
        expected_euler,
        c2,
        sw.lap_ms(),
    ));

    // 4. the unique quadric and a random smooth cubic through the surface
    let (q, _) = random_hypersurface_containing(&surface, 2, config.seed)?;
    let q_sing = singular_locus(&q)?;
    report.push(Check::new("quadric_smooth", "o7: dim sing. l. = -1", -1, q_sing.dim(), sw.lap_ms()));
    report.push(Check::new("quadric_rank_6", "the unique quadric has full rank", 6, quadric_rank(&q)?, sw.lap_ms()));
    if deadline.expired() {
        return timeout(report, "after quadric checks");
    }
    let (x, _) = random_smooth_hypersurface(&surface, 3, config.seed, config.max_retries)?;
    let x_sing = singular_locus(&x)?;
    report.push(Check::new("cubic_smooth", "o9: dim sing. l. = -1", -1, x_sing.dim(), sw.lap_ms()));
    if deadline.expired() {
        return timeout(report, "after cubic draw");
    }

    // 5. normal sheaf sections against the quadric, the ambient space, and
    // the cubic
    let h_q = h0_normal_sheaf(&surface, Some(&q))?;
    report.push(Check::new("h0_normal_in_quadric", "lemma: chi(N_{S/Q4}) = 38", 38, h_q, sw.lap_ms()));
    if deadline.expired() {
        return timeout(report, "after h0 in the quadric");
    }
    let h_p5 = h0_normal_sheaf(&surface, None)?;
    report.push(Check::new("h0_normal_in_p5", "lemma: tangent dimension 58", 58, h_p5, sw.lap_ms()));
    if deadline.expired() {
        return timeout(report, "after h0 in P5");
    }
    let h_x = h0_normal_sheaf(&surface, Some(&x))?;
    let expected_h0 = bundle.expected.as_ref().and_then(|e| e.h0_normal_in_cubic).unwrap_or(15);
    report.push(Check::new("h0_normal_in_cubic", "o10 = 15", expected_h0, h_x, sw.lap_ms()));

    // 6. integer ledger
    report.push(Check::new("chi_ideal_2", "chi(I_S(2)) = 21 - 20 = 1", 1, chi_ideal_twist(2), sw.lap_ms()));
    report.push(Check::new("chi_ideal_3", "chi(I_S(3)) = 56 - 44 = 12", 12, chi_ideal_twist(3), sw.lap_ms()));
    let inv = SurfaceInvariants::new(d, pi, chi, hk, k2, c2)?;
    let s2 = self_intersection_in_cubic(&inv)?;
    report.push(Check::new("self_intersection", "S^2 = 60 + 6 - 2 - 26 = 38", 38, s2, sw.lap_ms()));
    let lattice = RankTwoLattice::cubic_fourfold(d, s2);
    let disc = hassett_discriminant(&lattice);
    report.push(Check::new("discriminant", "3*38 - 100 = 14", 14, disc, sw.lap_ms()));
    let (_, sf_note) = discriminant_square_free_note(disc);
    report.notes.push(sf_note);
    report.push(Check::new(
        "admissible_divisor",
        "d > 6 with d = 0, 2 mod 6",
        true,
        hassett_admissible_divisor(disc),
        sw.lap_ms(),
    ));
    // ledger entries recomputed from the verified quantities rather than
    // stored: tangent dimension from h0(N_{S/P5}), cubic count from h0(I(3))
    let ledger = DimensionLedger::witness(h_p5 as i64, cubics as i64);
    let (flag, fiber) = flag_dimension_ledger(&ledger);
    report.push(Check::new("flag_dimension", "58 + 12 - 1 = 69", 69, flag, sw.lap_ms()));
    report.push(Check::new("fiber_bound", "69 - 54 = 15", 15, fiber, sw.lap_ms()));
    report.push(Check::new(
        "fiber_bound_matches_h0",
        "the fiber bound equals the computed h0(N_{S/X})",
        fiber,
        h_x,
        sw.lap_ms(),
    ));
    let (a, b) = residual_class_solver(10, 5, 3)?;
    report.push(Check::new("residual_class", "10 = 3a + 5b, b = ±1", "(5, -1)", format!("({a}, {b})"), sw.lap_ms()));
    let (a2, b2) = residual_class_solver(4, 5, 3)?;
    report.push(Check::new("residual_class_scroll", "4 = 3a + 5b, b = ±1", "(3, -1)", format!("({a2}, {b2})"), sw.lap_ms()));

    Ok(report)
}

fn timeout(mut report: VerificationReport, stage: &str) -> Result<VerificationReport> {
    report.notes.push(format!("timed out {stage}; partial report"));
    report.verdict = "timeout".into();
    Ok(report)
}

/// Fixture verification for the genus-7 model in P^7: degree, genus,
/// quadric and cubic counts, nondegeneracy, and smoothness.
pub fn verify_k3_fixture(bundle: &WitnessBundle) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(bundle.prime, 0);
    let mut sw = Stopwatch::start();
    if bundle.ambient_dim != 7 {
        return Err(Error::InvalidArgument("the genus-7 fixture lives in P^7".into()));
    }
    let s = bundle.to_scheme()?;
    let (d, pi, chi) = sectional_invariants(s.hilbert_polynomial())?;
    report.push(Check::new("fixture_degree", "o2: degree 12", 12, d, sw.lap_ms()));
    report.push(Check::new("fixture_genus", "o2: genus 7", 7, pi, sw.lap_ms()));
    report.push(Check::new("fixture_chi", "K3 has chi(O) = 2", 2, chi, sw.lap_ms()));
    report.push(Check::new("fixture_nondegenerate", "spans P^7", 0, s.h0_ideal(1), sw.lap_ms()));
    report.push(Check::new("fixture_quadrics", "i3 log: quadrics 10", 10, s.h0_ideal(2), sw.lap_ms()));
    report.push(Check::new("fixture_cubics", "i3 log: cubics 64", 64, s.h0_ideal(3), sw.lap_ms()));
    let sing = singular_locus(&s)?;
    report.push(Check::new("fixture_smooth", "smooth model", -1, sing.dim(), sw.lap_ms()));
    Ok(report)
}
