//! Inclusive linear grids parsed from `min:max:points`.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    min: f64,
    max: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self, GridError> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(GridError::NonFinite);
        }
        if min >= max {
            return Err(GridError::EmptyRange);
        }
        if points < 2 {
            return Err(GridError::TooFewPoints);
        }
        Ok(Self { min, max, points })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// The grid values, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        let step = (self.max - self.min) / (self.points - 1) as f64;
        (0..self.points).map(|i| self.min + step * i as f64).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("grid bounds must be finite")]
    NonFinite,
    #[error("grid needs min < max")]
    EmptyRange,
    #[error("grid needs at least 2 points")]
    TooFewPoints,
    #[error("expected min:max:points")]
    Malformed,
}

impl FromStr for GridSpec {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(GridError::Malformed);
        }
        let min: f64 = parts[0].parse().map_err(|_| GridError::Malformed)?;
        let max: f64 = parts[1].parse().map_err(|_| GridError::Malformed)?;
        let points: usize = parts[2].parse().map_err(|_| GridError::Malformed)?;
        Self::new(min, max, points)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.points)
    }
}
