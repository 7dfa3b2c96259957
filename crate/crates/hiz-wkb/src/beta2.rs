//! The exact beta = 2 value as a floating-point oracle: permutation-sum
//! and determinant forms of the same ratio, cross-checked against each
//! other on every call.

use hiz_wkb_core::jet::permutations;

use crate::SpectrumPair;

/// Pairs closer than this relative gap make the ratio meaningless in
/// `f64`; the exact-jet path in the core crate has no such threshold.
pub const DEGENERACY_EPS: f64 = 1e-8;

/// Allowed relative disagreement between the two forms.
pub const FORMS_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub enum Beta2Error {
    DegenerateSpectrum,
    FormsDisagree { perm: f64, det: f64 },
}

impl std::fmt::Display for Beta2Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Beta2Error::DegenerateSpectrum => write!(f, "degenerate spectrum"),
            Beta2Error::FormsDisagree { perm, det } => {
                write!(f, "permutation form {} disagrees with determinant form {}", perm, det)
            }
        }
    }
}

impl std::error::Error for Beta2Error {}

fn min_relative_gap(v: &[f64]) -> f64 {
    let mut min = f64::INFINITY;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let scale = v[i].abs().max(v[j].abs()).max(1.0);
            min = min.min((v[i] - v[j]).abs() / scale);
        }
    }
    min
}

fn vandermonde(v: &[f64]) -> f64 {
    let mut p = 1.0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            p *= v[i] - v[j];
        }
    }
    p
}

fn det(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut sign = 1.0;
    let mut prod = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        prod *= m[col][col];
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for c in col..n {
                m[row][c] -= f * m[col][c];
            }
        }
    }
    sign * prod
}

/// `sum_sigma exp(sum_i x_i lambda_sigma(i)) / prod_{i<j} (x_i - x_j)(lambda_sigma(i) - lambda_sigma(j))`,
/// equal to `det[exp(x_i lambda_j)] / (Delta(x) Delta(lambda))`.
/// Both forms are computed; the determinant form is returned.
pub fn hciz_beta2_exact(s: &SpectrumPair) -> Result<f64, Beta2Error> {
    let k = s.k();
    if min_relative_gap(s.x()) < DEGENERACY_EPS || min_relative_gap(s.lambda()) < DEGENERACY_EPS {
        return Err(Beta2Error::DegenerateSpectrum);
    }

    let mut perm_form = 0.0;
    for sigma in permutations(k) {
        let mut dot = 0.0;
        for i in 0..k {
            dot += s.x()[i] * s.lambda()[sigma[i]];
        }
        let mut den = 1.0;
        for i in 0..k {
            for j in i + 1..k {
                den *= (s.x()[i] - s.x()[j]) * (s.lambda()[sigma[i]] - s.lambda()[sigma[j]]);
            }
        }
        perm_form += dot.exp() / den;
    }

    let m: Vec<Vec<f64>> = (0..k)
        .map(|i| (0..k).map(|j| (s.x()[i] * s.lambda()[j]).exp()).collect())
        .collect();
    let det_form = det(m) / (vandermonde(s.x()) * vandermonde(s.lambda()));

    if (perm_form - det_form).abs() > FORMS_TOL * det_form.abs().max(1.0) {
        return Err(Beta2Error::FormsDisagree { perm: perm_form, det: det_form });
    }
    Ok(det_form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: Vec<f64>, lambda: Vec<f64>) -> SpectrumPair {
        SpectrumPair::new(x, lambda).unwrap()
    }

    #[test]
    fn rank_one_is_the_plain_exponential() {
        let v = hciz_beta2_exact(&pair(vec![0.7], vec![-1.3])).unwrap();
        assert!((v - (0.7f64 * -1.3).exp()).abs() < 1e-14);
    }

    #[test]
    fn two_by_two_unit_spectra() {
        let v = hciz_beta2_exact(&pair(vec![1.0, 0.0], vec![1.0, 0.0])).unwrap();
        assert!((v - (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn symmetric_in_the_two_spectra() {
        let x = vec![0.3, 0.1, -0.2];
        let l = vec![0.25, 0.4, -0.15];
        let a = hciz_beta2_exact(&pair(x.clone(), l.clone())).unwrap();
        let b = hciz_beta2_exact(&pair(l, x)).unwrap();
        assert!((a - b).abs() < 1e-12 * a.abs());
    }

    #[test]
    fn invariant_under_simultaneous_permutation() {
        let a = hciz_beta2_exact(&pair(vec![0.3, 0.1, -0.2], vec![0.25, 0.4, -0.15])).unwrap();
        let b = hciz_beta2_exact(&pair(vec![0.1, -0.2, 0.3], vec![0.4, -0.15, 0.25])).unwrap();
        assert!((a - b).abs() < 1e-12 * a.abs());
    }

    #[test]
    fn near_degenerate_pairs_are_rejected() {
        let e = hciz_beta2_exact(&pair(vec![0.5, 0.5 + 1e-12], vec![1.0, 0.0]));
        assert_eq!(e, Err(Beta2Error::DegenerateSpectrum));
        let e = hciz_beta2_exact(&pair(vec![1.0, 0.0], vec![2.0, 2.0]));
        assert_eq!(e, Err(Beta2Error::DegenerateSpectrum));
    }
}
