//! Verification report types shared by the relation, equivariance, and
//! map-property checks.

use serde::{Deserialize, Serialize};

/// Outcome of sampling one relation/property of one map.
///
/// `pass` holds exactly when `max_residual <= tol`. Failures are recorded,
/// never thrown, and the worst offending input is kept for reproduction.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub map: String,
    pub relation: String,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_residual: f64,
    pub worst_input: Vec<Vec<f64>>,
    /// Smallest image separation seen by injectivity surrogates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_image_distance: Option<f64>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(map: &str, relation: &str, samples: usize, seed: u64, tol: f64) -> Self {
        VerificationReport {
            map: map.to_string(),
            relation: relation.to_string(),
            samples,
            seed,
            tol,
            max_residual: 0.0,
            worst_input: Vec::new(),
            min_image_distance: None,
            pass: true,
        }
    }

    /// Folds one sample's residual into the running maximum.
    pub fn record(&mut self, residual: f64, input: &[&[f64]]) {
        if self.worst_input.is_empty() || residual > self.max_residual {
            self.max_residual = residual;
            self.worst_input = input.iter().map(|v| v.to_vec()).collect();
        }
        self.pass = self.max_residual <= self.tol;
    }
}

/// Tracks the largest residual and where it happened.
#[derive(Debug, Clone, Default)]
pub struct WorstCase {
    pub residual: f64,
    pub input: Vec<Vec<f64>>,
}

impl WorstCase {
    pub fn update(&mut self, residual: f64, input: &[&[f64]]) {
        if residual > self.residual || self.input.is_empty() {
            self.residual = self.residual.max(residual);
            self.input = input.iter().map(|v| v.to_vec()).collect();
        }
    }
}
