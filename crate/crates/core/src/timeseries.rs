use serde::{Deserialize, Serialize};

/// Ordered `(t, value)` samples plus the parameters that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_qubits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_over_pi: Option<f64>,
    pub points: Vec<(f64, f64)>,
}

impl TimeSeries {
    pub fn for_system_size(n_qubits: usize, points: Vec<(f64, f64)>) -> Self {
        Self {
            n_qubits: Some(n_qubits),
            rank: None,
            q_over_pi: None,
            points,
        }
    }

    pub fn for_rank(rank: usize, points: Vec<(f64, f64)>) -> Self {
        Self {
            n_qubits: None,
            rank: Some(rank),
            q_over_pi: None,
            points,
        }
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.0)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.1)
    }

    /// `max |self_i - other_i|` over matching samples.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values()
            .zip(other.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
