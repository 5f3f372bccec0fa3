//! Machine-readable verification reports: named checks with expected and
//! computed values, each citing its anchor in the reference computation log
//! that this toolkit reproduces.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub ms: u64,
}

impl Check {
    pub fn new(
        name: &str,
        anchor: &str,
        expected: impl ToString,
        computed: impl ToString,
        ms: u64,
    ) -> Check {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let pass = expected == computed;
        Check { name: name.to_string(), anchor: anchor.to_string(), expected, computed, pass, ms }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdict: String,
    pub prime: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Inputs consumed as cited assumptions rather than recomputed.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(prime: u32, seed: u64) -> VerificationReport {
        VerificationReport {
            verdict: "pass".into(),
            prime,
            seed,
            checks: Vec::new(),
            assumptions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        if !check.pass {
            self.verdict = "fail".into();
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: Vec<Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect()
    }
}

/// Millisecond timer helper for check construction.
pub struct Stopwatch(std::time::Instant);

impl Stopwatch {
    pub fn start() -> Stopwatch {
        Stopwatch(std::time::Instant::now())
    }

    pub fn lap_ms(&mut self) -> u64 {
        let now = std::time::Instant::now();
        let ms = now.duration_since(self.0).as_millis() as u64;
        self.0 = now;
        ms
    }
}
