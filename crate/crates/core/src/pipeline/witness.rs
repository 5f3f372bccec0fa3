//! The witness bundle: serialized ideal generators plus expected invariants
//! and projection history. JSON with the polynomial text grammar embedded as
//! strings, so bundles are human-diffable and bit-exact given the prime.

use crate::error::{Error, Result};
use crate::field_poly::field::FieldConfig;
use crate::field_poly::order::MonomialOrder;
use crate::field_poly::parse;
use crate::field_poly::poly::{Polynomial, Ring};
use crate::geometry::scheme::ProjectiveScheme;
use crate::ideal_ops::ideal::Ideal;
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HistoryStep {
    pub ambient_dim: usize,
    pub degree: i64,
    pub genus: i64,
    pub quadrics: u64,
    pub cubics: u64,
    /// Projection center used to leave this model (source coordinates).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedInvariants {
    pub degree: i64,
    pub genus: i64,
    pub quadrics: u64,
    pub cubics: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_normal_in_cubic: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessBundle {
    pub prime: u32,
    pub ambient_dim: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<HistoryStep>,
    /// Exceptional lines on the surface, each given by linear generators.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedInvariants>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl WitnessBundle {
    /// Parses and validates a bundle from disk; generators must parse under
    /// the declared prime and be homogeneous. When the engine runs with a
    /// fixed prime, a mismatching bundle is rejected.
    pub fn load(path: &Path, engine_prime: Option<u32>) -> Result<WitnessBundle> {
        let text = std::fs::read_to_string(path)?;
        let bundle: WitnessBundle = serde_json::from_str(&text)?;
        if let Some(p) = engine_prime {
            if p != bundle.prime {
                return Err(Error::InvalidArgument(format!(
                    "witness prime {} does not match engine prime {p}",
                    bundle.prime
                )));
            }
        }
        bundle.validate()?;
        Ok(bundle)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn ring(&self) -> Result<Arc<Ring>> {
        let field = FieldConfig::new(self.prime)?;
        let nvars = self.ambient_dim + 1;
        if self.variables.len() != nvars {
            return Err(Error::InvalidArgument(format!(
                "{} variables declared for ambient dimension {}",
                self.variables.len(),
                self.ambient_dim
            )));
        }
        let mut ring = (*Ring::new(nvars, field, MonomialOrder::grevlex())).clone();
        ring.names = self.variables.clone();
        Ok(Arc::new(ring))
    }

    pub fn validate(&self) -> Result<()> {
        let ring = self.ring()?;
        for g in &self.generators {
            let poly = parse::parse(g, &ring)?;
            if !poly.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("witness generator `{g}`")));
            }
        }
        for line in &self.lines {
            for g in line {
                parse::parse(g, &ring)?;
            }
        }
        Ok(())
    }

    pub fn parse_generators(&self) -> Result<Vec<Polynomial>> {
        let ring = self.ring()?;
        self.generators.iter().map(|g| parse::parse(g, &ring)).collect()
    }

    pub fn to_scheme(&self) -> Result<ProjectiveScheme> {
        let ring = self.ring()?;
        let gens = self.parse_generators()?;
        ProjectiveScheme::new(Ideal::new(&ring, gens)?)
    }

    pub fn line_schemes(&self) -> Result<Vec<ProjectiveScheme>> {
        let ring = self.ring()?;
        self.lines
            .iter()
            .map(|line| {
                let gens: Result<Vec<Polynomial>> =
                    line.iter().map(|g| parse::parse(g, &ring)).collect();
                ProjectiveScheme::new(Ideal::new(&ring, gens?)?)
            })
            .collect()
    }

    /// Builds a bundle from a scheme; generators are the minimal generators
    /// in canonical text form.
    pub fn from_scheme(
        scheme: &ProjectiveScheme,
        expected: Option<ExpectedInvariants>,
    ) -> WitnessBundle {
        let ring = scheme.ring();
        WitnessBundle {
            prime: ring.field.prime(),
            ambient_dim: ring.nvars - 1,
            variables: ring.names.clone(),
            generators: scheme
                .ideal
                .minimal_generators()
                .iter()
                .map(parse::to_string)
                .collect(),
            history: Vec::new(),
            lines: Vec::new(),
            expected,
            seed: None,
            provenance: None,
        }
    }
}
