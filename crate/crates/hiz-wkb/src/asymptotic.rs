//! The closed-form asymptotic profile of the correction factor: a
//! product over pairs that resums the single-line family, plus its
//! large-beta exponential limit.

use num_traits::ToPrimitive;

use hiz_wkb_core::field::{rat, Rat};

use crate::SpectrumPair;

#[derive(Clone, Debug, PartialEq)]
pub enum AsymptoticError {
    /// beta = 2 makes the exponent vanish and the base singular.
    SingularBeta,
    /// A non-positive power base with a non-integer exponent has no
    /// real branch.
    NonPositiveBase { base: f64 },
}

impl std::fmt::Display for AsymptoticError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AsymptoticError::SingularBeta => write!(f, "beta = 2 has no asymptotic profile"),
            AsymptoticError::NonPositiveBase { base } => {
                write!(f, "non-positive base {} with non-integer exponent", base)
            }
        }
    }
}

impl std::error::Error for AsymptoticError {}

/// `prod_{i<j} [1 - tau_ij / ((beta/2 - 1) k)]^(beta/2 - 1)`, or the
/// large-beta limit `exp(-(1/k) sum tau_ij)` when the flag is set.
pub fn asymptotic_f(
    beta: &Rat,
    s: &SpectrumPair,
    large_beta: bool,
) -> Result<f64, AsymptoticError> {
    let k = s.k() as f64;
    let taus = s.taus();
    if large_beta {
        return Ok((-taus.iter().sum::<f64>() / k).exp());
    }
    if *beta == rat(2) {
        return Err(AsymptoticError::SingularBeta);
    }
    let gamma = beta / rat(2) - rat(1);
    let g = gamma.to_f64().expect("exponent fits in f64");
    let mut prod = 1.0;
    for tau in taus {
        let base = 1.0 - tau / (g * k);
        if base > 0.0 {
            prod *= base.powf(g);
        } else if gamma.is_integer() && (base != 0.0 || g > 0.0) {
            prod *= base.powi(g as i32);
        } else {
            return Err(AsymptoticError::NonPositiveBase { base });
        }
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hiz_wkb_core::field::frac;

    fn pair(x: Vec<f64>, lambda: Vec<f64>) -> SpectrumPair {
        SpectrumPair::new(x, lambda).unwrap()
    }

    #[test]
    fn vanishing_tau_gives_one() {
        let s = pair(vec![0.4, 0.4, 0.4], vec![0.3, -0.2, 0.9]);
        assert_eq!(asymptotic_f(&rat(4), &s, false), Ok(1.0));
        assert_eq!(asymptotic_f(&rat(4), &s, true), Ok(1.0));
    }

    #[test]
    fn beta_four_is_the_plain_product() {
        let s = pair(vec![0.3, 0.1, -0.2], vec![0.25, 0.0, -0.15]);
        let k = 3.0;
        let want: f64 = s.taus().iter().map(|t| 1.0 - t / k).product();
        let got = asymptotic_f(&rat(4), &s, false).unwrap();
        assert!((got - want).abs() < 1e-15);
    }

    #[test]
    fn first_order_matches_the_single_line_coefficient() {
        let t = 1e-4;
        let s = pair(vec![t, 0.0, -t], vec![2.0 * t, 0.0, -t]);
        let tau_sum: f64 = s.taus().iter().sum();
        let got = asymptotic_f(&rat(4), &s, false).unwrap();
        assert!((got - (1.0 - tau_sum / 3.0)).abs() < tau_sum * tau_sum);
    }

    #[test]
    fn large_beta_flag_is_the_exponential() {
        let s = pair(vec![0.3, 0.1, -0.2], vec![0.25, 0.0, -0.15]);
        let tau_sum: f64 = s.taus().iter().sum();
        let got = asymptotic_f(&rat(100), &s, true).unwrap();
        assert!((got - (-tau_sum / 3.0).exp()).abs() < 1e-15);
    }

    #[test]
    fn singular_and_branchless_points_error() {
        let s = pair(vec![3.0, 0.0], vec![2.0, 0.0]);
        assert_eq!(asymptotic_f(&rat(2), &s, false), Err(AsymptoticError::SingularBeta));
        let e = asymptotic_f(&frac(5, 2), &s, false);
        assert!(matches!(e, Err(AsymptoticError::NonPositiveBase { .. })));
        let ok = asymptotic_f(&rat(6), &s, false);
        assert!(ok.is_ok());
    }
}
