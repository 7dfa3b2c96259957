//! Floating-point oracles, Monte-Carlo Haar integration, file formats
//! and the command-line interface for the exact engine in
//! [`hiz_wkb_core`].
//!
//! Everything exact lives in the core crate; this crate owns the parts
//! that need an operating system or an `f64`: group sampling, the
//! numeric beta = 2 determinant formula, the closed-form asymptotic
//! profile, the output cache, and the `hiz-wkb` binary.

pub use hiz_wkb_core as core;

pub mod asymptotic;
pub mod beta2;
pub mod cache;
pub mod cli;
pub mod mc;
pub mod quat;

#[derive(Clone, Debug, PartialEq)]
pub enum SpectrumError {
    MismatchedLengths,
    Empty,
}

impl std::fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumError::MismatchedLengths => write!(f, "spectra lengths differ"),
            SpectrumError::Empty => write!(f, "empty spectrum"),
        }
    }
}

impl std::error::Error for SpectrumError {}

/// A pair of real length-`k` spectra, the eigenvalues of the two
/// matrices in the integral.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumPair {
    x: Vec<f64>,
    lambda: Vec<f64>,
}

impl SpectrumPair {
    pub fn new(x: Vec<f64>, lambda: Vec<f64>) -> Result<Self, SpectrumError> {
        if x.len() != lambda.len() {
            return Err(SpectrumError::MismatchedLengths);
        }
        if x.is_empty() {
            return Err(SpectrumError::Empty);
        }
        Ok(SpectrumPair { x, lambda })
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    /// All tau values `(x_i - x_j)(lambda_i - lambda_j)` for `i < j`.
    pub fn taus(&self) -> Vec<f64> {
        let k = self.k();
        let mut out = Vec::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                out.push((self.x[i] - self.x[j]) * (self.lambda[i] - self.lambda[j]));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_pair_validates_lengths() {
        assert!(SpectrumPair::new(vec![1.0], vec![1.0, 2.0]).is_err());
        assert!(SpectrumPair::new(vec![], vec![]).is_err());
        let s = SpectrumPair::new(vec![1.0, 3.0], vec![2.0, 0.0]).unwrap();
        assert_eq!(s.k(), 2);
        assert_eq!(s.taus(), vec![(1.0 - 3.0) * (2.0 - 0.0)]);
    }
}
