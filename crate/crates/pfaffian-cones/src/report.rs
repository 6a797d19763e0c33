//! Structured pass/fail records for identity verification runs.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::minimality::Mode;
use crate::Result;

/// One verified identity: name, matrix size, method, outcome, and a witness
/// when the identity failed.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub ell: Option<usize>,
    pub method: Mode,
    pub pass: bool,
    pub witness: Option<String>,
    pub millis: u128,
}

/// Run a single check, timing it and folding errors into failures.
pub fn timed_check(
    identity: &str,
    ell: Option<usize>,
    method: Mode,
    body: impl FnOnce() -> Result<(bool, Option<String>)>,
) -> CheckReport {
    let start = Instant::now();
    let (pass, witness) = match body() {
        Ok((pass, witness)) => (pass, witness),
        Err(e) => (false, Some(format!("error: {e}"))),
    };
    CheckReport {
        identity: identity.to_string(),
        ell,
        method,
        pass,
        witness,
        millis: start.elapsed().as_millis(),
    }
}

/// A whole command run: echoed configuration, per-check reports, and the
/// overall flag. Serialized as a single self-describing document; identical
/// command and seed give byte-identical output apart from the timing
/// fields.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub checks: Vec<CheckReport>,
    /// Command-specific payload (canonical polynomial forms, statistics).
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
    pub pass: bool,
    pub total_millis: u128,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            version: crate::VERSION.to_string(),
            k: None,
            ell: None,
            mode: None,
            seed: None,
            trials: None,
            samples: None,
            tolerance: None,
            checks: Vec::new(),
            data: serde_json::Value::Null,
            pass: true,
            total_millis: 0,
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self.ell = Some(k + 1);
        self
    }

    pub fn push(&mut self, check: CheckReport) {
        self.pass &= check.pass;
        self.total_millis += check.millis;
        self.checks.push(check);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pfaffian-cones {} | version {}", self.command, self.version)?;
        if let (Some(k), Some(ell)) = (self.k, self.ell) {
            let n = ell * (2 * ell - 1);
            write!(f, "\nk = {k} (hypersurface index) | l = {ell} (Pfaffian degree) | n = {n} variables")?;
        }
        let mut config = Vec::new();
        if let Some(mode) = &self.mode {
            config.push(format!("mode = {mode}"));
        }
        if let Some(seed) = self.seed {
            config.push(format!("seed = {seed}"));
        }
        if let Some(trials) = self.trials {
            config.push(format!("trials = {trials}"));
        }
        if let Some(samples) = self.samples {
            config.push(format!("samples = {samples}"));
        }
        if let Some(tol) = self.tolerance {
            config.push(format!("tolerance = {tol:e}"));
        }
        if !config.is_empty() {
            write!(f, "\n{}", config.join(" | "))?;
        }
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let ell = c.ell.map(|e| format!("l={e}, ")).unwrap_or_default();
            write!(f, "\n  [{status}] {} ({}{})", c.identity, ell, c.method)?;
            if let Some(w) = &c.witness {
                write!(f, "\n         witness: {w}")?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        write!(
            f,
            "\noverall: {} ({passed}/{} checks, {} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.total_millis
        )
    }
}
