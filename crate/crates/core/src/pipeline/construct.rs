//! The construction pipeline: two internal projections with random smooth
//! centers take the bundled genus-7 model in P^7 down to the degree-10
//! witness surface in P^5, tracking both exceptional lines and the
//! intermediate invariants at every step.

use crate::error::{Error, Result};
use crate::field_poly::parse;
use crate::geometry::points::sample_smooth_point;
use crate::geometry::projection::{internal_projection, InternalProjection};
use crate::geometry::scheme::ProjectiveScheme;
use crate::numerics::invariants::sectional_invariants;
use crate::pipeline::witness::{ExpectedInvariants, HistoryStep, WitnessBundle};

#[derive(Debug, Clone)]
pub struct ConstructConfig {
    pub seed: u64,
    /// Retries per projection step when a center violates the contract.
    pub center_retry_cap: usize,
    /// Full pipeline restarts when the final surface misses an expectation.
    pub pipeline_retry_cap: usize,
}

impl Default for ConstructConfig {
    fn default() -> Self {
        ConstructConfig { seed: 0, center_retry_cap: 8, pipeline_retry_cap: 4 }
    }
}

/// The expected invariant trail of the construction: (ambient dimension,
/// degree, sectional genus, quadrics, cubics) at each model.
pub const EXPECTED_TRAIL: [(usize, i64, i64, u64, u64); 3] =
    [(7, 12, 7, 10, 64), (6, 11, 7, 5, 34), (5, 10, 7, 1, 12)];

fn model_invariants(s: &ProjectiveScheme) -> Result<(usize, i64, i64, u64, u64)> {
    let (d, pi, _chi) = sectional_invariants(s.hilbert_polynomial())?;
    Ok((s.ambient_dim(), d, pi, s.h0_ideal(2), s.h0_ideal(3)))
}

fn check_trail(step: usize, s: &ProjectiveScheme) -> Result<(usize, i64, i64, u64, u64)> {
    let got = model_invariants(s)?;
    let want = EXPECTED_TRAIL[step];
    if got.1 != want.1 {
        return Err(Error::Contract(format!(
            "model {step}: degree check failed, expected {} got {}",
            want.1, got.1
        )));
    }
    if got != want {
        return Err(Error::Contract(format!(
            "model {step}: invariants {got:?} differ from expected {want:?}"
        )));
    }
    Ok(got)
}

fn project_with_retries(
    surface: &ProjectiveScheme,
    seed: u64,
    cap: usize,
) -> Result<(InternalProjection, Vec<u32>)> {
    let mut last = String::new();
    for t in 0..cap.max(1) {
        let center_seed = seed.wrapping_add((t as u64) * 0x9e37_79b9);
        let center = match sample_smooth_point(surface, center_seed, 8) {
            Ok(c) => c,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        match internal_projection(surface, &center) {
            Ok(proj) => return Ok((proj, center.coords.clone())),
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::Contract(format!(
        "no admissible projection center within {cap} attempts; last: {last}"
    )))
}

/// Runs the double projection from the fixture model and assembles the
/// witness bundle, including the full history and both exceptional lines.
pub fn construct_witness(fixture: &WitnessBundle, config: &ConstructConfig) -> Result<WitnessBundle> {
    let model = fixture.to_scheme()?;
    // the fixture itself is verified first: a corrupted fixture fails here
    check_trail(0, &model)?;

    let mut last = String::new();
    for attempt in 0..config.pipeline_retry_cap.max(1) {
        let base = config.seed.wrapping_add((attempt as u64) << 48);
        match construct_once(&model, base, config) {
            Ok(mut bundle) => {
                bundle.seed = Some(config.seed);
                bundle.provenance = Some(format!(
                    "double internal projection of the bundled genus-7 degree-12 model, seed {}",
                    config.seed
                ));
                return Ok(bundle);
            }
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::Contract(format!(
        "construction failed after {} pipeline attempts; last: {last}",
        config.pipeline_retry_cap
    )))
}

fn construct_once(
    model: &ProjectiveScheme,
    seed: u64,
    config: &ConstructConfig,
) -> Result<WitnessBundle> {
    let step0 = model_invariants(model)?;

    let (proj1, center1) = project_with_retries(model, seed ^ 0xa5a5_0001, config.center_retry_cap)?;
    let step1 = check_trail(1, &proj1.image)?;

    let (proj2, center2) =
        project_with_retries(&proj1.image, seed ^ 0x5a5a_0002, config.center_retry_cap)?;
    let surface = proj2.image.clone();
    let step2 = check_trail(2, &surface)?;

    // exceptional lines: the first one transported through the second
    // projection, the second one native to it
    let line1 = proj2.transport_line(&proj1.exceptional_line)?;
    let line2 = proj2.exceptional_line.clone();
    for (name, line) in [("first", &line1), ("second", &line2)] {
        if !line.ideal.contains_ideal(&surface.ideal) {
            return Err(Error::Contract(format!("{name} exceptional line left the surface")));
        }
    }
    if !crate::geometry::projection::are_skew_lines(&line1, &line2)? {
        return Err(Error::Contract("exceptional lines are not skew".into()));
    }

    let expected = ExpectedInvariants {
        degree: 10,
        genus: 7,
        quadrics: 1,
        cubics: 12,
        euler: Some(26),
        h0_normal_in_cubic: Some(15),
    };
    let mut bundle = WitnessBundle::from_scheme(&surface, Some(expected));
    bundle.history = vec![
        HistoryStep {
            ambient_dim: step0.0,
            degree: step0.1,
            genus: step0.2,
            quadrics: step0.3,
            cubics: step0.4,
            center: Some(center1),
        },
        HistoryStep {
            ambient_dim: step1.0,
            degree: step1.1,
            genus: step1.2,
            quadrics: step1.3,
            cubics: step1.4,
            center: Some(center2),
        },
        HistoryStep {
            ambient_dim: step2.0,
            degree: step2.1,
            genus: step2.2,
            quadrics: step2.3,
            cubics: step2.4,
            center: None,
        },
    ];
    bundle.lines = vec![
        line1.ideal.minimal_generators().iter().map(parse::to_string).collect(),
        line2.ideal.minimal_generators().iter().map(parse::to_string).collect(),
    ];
    Ok(bundle)
}
