//! Independent cross-checks for the tau-expansion engine: the conjugated
//! Calogero-Moser residual, the k=3 permutation-sum identities, the
//! beta=4 paired-power-sum series, and the exact beta=2 jet forms.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::field::{rat, Rat};
use crate::jet::{jet_det, perm_sign, permutations, Jet};
use crate::partitions::{weight, Partition};
use crate::polyring::{MPoly, MPolyQ, Mono, Vars};
use crate::taugraph::graph_by_name;
use crate::wkb::{CoeffTable, Engine, WkbError};

#[derive(Clone, PartialEq, Debug)]
pub enum OracleError {
    /// The permutation sum is tabulated for 1 <= p <= 8 only.
    UnsupportedPower(u32),
    /// Coinciding spectrum entries make the exact forms 0/0.
    DegenerateSpectrum,
    MismatchedLengths,
}

impl core::fmt::Display for OracleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OracleError::UnsupportedPower(p) => {
                write!(f, "permutation sum supports 1 <= p <= 8, got {p}")
            }
            OracleError::DegenerateSpectrum => write!(f, "degenerate spectrum"),
            OracleError::MismatchedLengths => write!(f, "spectra lengths differ"),
        }
    }
}

/// Exact quotient of `p` by the linear factor `v_a - v_b` (synthetic
/// division; panics if the division is not exact).
fn divide_by_linear(p: &MPolyQ, a: usize, b: usize) -> MPolyQ {
    let nvars = p.nvars;
    let mut slices: BTreeMap<u16, MPolyQ> = BTreeMap::new();
    for (m, c) in &p.terms {
        let d = m.0[a];
        let mut e = m.0.to_vec();
        e[a] = 0;
        slices
            .entry(d)
            .or_insert_with(|| MPoly::zero(nvars))
            .add_term(Mono(e.into_boxed_slice()), c.clone());
    }
    let top = slices.keys().next_back().copied().unwrap_or(0);
    let vb = MPoly::var(nvars, b);
    let mut quotient = MPoly::zero(nvars);
    let mut carry = MPoly::zero(nvars);
    for d in (1..=top).rev() {
        let c_d = slices.remove(&d).unwrap_or_else(|| MPoly::zero(nvars));
        carry = c_d + vb.clone() * carry;
        for (m, c) in &carry.terms {
            let mut e = m.0.to_vec();
            e[a] += d - 1;
            quotient.add_term(Mono(e.into_boxed_slice()), c.clone());
        }
    }
    let c_0 = slices.remove(&0).unwrap_or_else(|| MPoly::zero(nvars));
    let remainder = c_0 + vb * carry;
    assert!(remainder.is_zero(), "division by linear factor not exact");
    quotient
}

/// The Vandermonde `prod_{i<j} (x_i - x_j)` in the `x` slots.
fn vandermonde_x(vars: &Vars, k: usize) -> MPolyQ {
    let n = vars.nvars();
    let mut v = MPoly::one(n);
    for i in 1..=k {
        for j in (i + 1)..=k {
            v = v * (MPoly::var(n, vars.x(i)) - MPoly::var(n, vars.x(j)));
        }
    }
    v
}

/// Applies the Vandermonde-conjugated Calogero-Moser operator to the
/// correction factor assembled from `table` and returns the cleared
/// numerator, truncated to lambda-degree <= `order`.  A table exact to
/// its own order leaves nothing at or below that degree; a terminating
/// series (beta=4, k=3) leaves nothing at all.
pub fn calogero_residual(k: usize, beta: &Rat, table: &CoeffTable, order: u32) -> MPolyQ {
    let vars = Vars::new(k);
    let n = vars.nvars();
    let mut f = MPoly::one(n);
    for (name, c) in &table.entries {
        let g = graph_by_name(name).expect("table names are catalogued");
        f = f + g.orbit_sum(k).scale(c);
    }
    let fx: Vec<MPolyQ> = (1..=k).map(|i| f.partial_derivative(vars.x(i))).collect();
    let mut laplacian = MPoly::zero(n);
    for i in 1..=k {
        laplacian = laplacian + fx[i - 1].partial_derivative(vars.x(i));
    }
    let mut drift = MPoly::zero(n);
    for i in 1..=k {
        drift = drift + MPoly::var(n, vars.lam(i)) * fx[i - 1].clone();
    }
    let v = vandermonde_x(&vars, k);
    let gamma = beta.clone() / rat(2) - rat(1);
    let two_gamma = rat(2) * gamma;
    let mut numerator = v.clone() * (laplacian + drift.scale(&rat(2)));
    for i in 1..=k {
        for j in (i + 1)..=k {
            let w = divide_by_linear(&v, vars.x(i), vars.x(j));
            let dl = MPoly::var(n, vars.lam(i)) - MPoly::var(n, vars.lam(j));
            let term = w * (dl * f.clone() + fx[i - 1].clone() - fx[j - 1].clone());
            numerator = numerator - term.scale(&two_gamma);
        }
    }
    numerator.retain(|m| vars.lam_degree(m) <= order);
    numerator
}

/// The k=3 permutation sum `sum_perm (tau_12+tau_23+tau_13)^p /
/// (tau_12 tau_23 tau_13)` as an exact polynomial in the spectra,
/// obtained by synthetic division by the six Vandermonde factors.
pub fn perm_sum_power(p: u32) -> Result<MPolyQ, OracleError> {
    if !(1..=8).contains(&p) {
        return Err(OracleError::UnsupportedPower(p));
    }
    let k = 3;
    let vars = Vars::new(k);
    let n = vars.nvars();
    let sum_x: MPolyQ = (1..=k)
        .map(|i| MPoly::var(n, vars.x(i)))
        .fold(MPoly::zero(n), |a, b| a + b);
    let sum_l: MPolyQ = (1..=k)
        .map(|i| MPoly::var(n, vars.lam(i)))
        .fold(MPoly::zero(n), |a, b| a + b);
    let shift = sum_x * sum_l;
    let mut acc = MPoly::zero(n);
    for perm in permutations(k) {
        let mut pairing = MPoly::zero(n);
        for (i, &s) in perm.iter().enumerate() {
            pairing = pairing
                + MPoly::var(n, vars.x(i + 1)) * MPoly::var(n, vars.lam(s + 1));
        }
        let tau_total = pairing.scale(&rat(k as i64)) - shift.clone();
        let sign = rat(perm_sign(&perm));
        acc = acc + tau_total.pow(p).scale(&sign);
    }
    for i in 1..=k {
        for j in (i + 1)..=k {
            acc = divide_by_linear(&acc, vars.x(i), vars.x(j));
            acc = divide_by_linear(&acc, vars.lam(i), vars.lam(j));
        }
    }
    Ok(acc)
}

/// One term of the beta=4 series phi: the exact coefficient of
/// `s_lambda(x centered) s_mu(lambda centered)`.
#[derive(Clone, PartialEq, Debug)]
pub struct PhiTerm {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeff: Rat,
}

/// The alpha -> -1 limit of the paired-power-sum series through the
/// given order: the beta=4 phi expansion.  Blocks whose scalar limit
/// genuinely diverges (possible only at small k) are reported.
pub fn phi_series_beta4(
    engine: &mut Engine,
    k: usize,
    order: u32,
) -> Result<Vec<PhiTerm>, WkbError> {
    let minus_one = rat(-1);
    let scalars = engine.phi_scalars(k, order)?;
    let mut terms = Vec::new();
    let mut diverging: BTreeMap<u32, Vec<(Partition, Partition)>> = BTreeMap::new();
    for s in scalars {
        match s.scalar.eval(&minus_one) {
            Some(c) => {
                if !c.is_zero() {
                    terms.push(PhiTerm {
                        lambda: s.lambda,
                        mu: s.mu,
                        coeff: c,
                    });
                }
            }
            None => {
                let w = weight(&s.lambda);
                diverging.entry(w).or_default().push((s.lambda, s.mu));
            }
        }
    }
    if let Some(order) = diverging.keys().next().copied() {
        let pairs = diverging.remove(&order).unwrap();
        return Err(WkbError::DivergentPartitionBlock { order, pairs });
    }
    Ok(terms)
}

/// The exact beta=2 value as an order-truncated jet in a bookkeeping
/// scale variable, in both forms: (permutation sum, determinant ratio).
/// The two must agree identically; the determinant identity is the
/// cross-check.
pub fn beta2_jet_forms(
    x: &[Rat],
    lambda: &[Rat],
    order: usize,
) -> Result<(Jet, Jet), OracleError> {
    let k = x.len();
    if lambda.len() != k {
        return Err(OracleError::MismatchedLengths);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if x[i] == x[j] || lambda[i] == lambda[j] {
                return Err(OracleError::DegenerateSpectrum);
            }
        }
    }
    let mut vdm = rat(1);
    for i in 0..k {
        for j in (i + 1)..k {
            vdm = vdm
                * (x[i].clone() - x[j].clone())
                * (lambda[i].clone() - lambda[j].clone());
        }
    }
    let mut perm_form = Jet::zero(order);
    for perm in permutations(k) {
        let mut exponent = Rat::zero();
        for (i, &s) in perm.iter().enumerate() {
            exponent = exponent + x[i].clone() * lambda[s].clone();
        }
        let weight = rat(perm_sign(&perm)) / vdm.clone();
        perm_form = perm_form.add(&Jet::exp_linear(order, &exponent).scale(&weight));
    }
    let matrix: Vec<Vec<Jet>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| Jet::exp_linear(order, &(x[i].clone() * lambda[j].clone())))
                .collect()
        })
        .collect();
    let det_form = jet_det(&matrix).scale(&(rat(1) / vdm));
    Ok((perm_form, det_form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::frac;
    use crate::wkb::GaugePolicy;
    use alloc::string::String;
    use alloc::vec;

    fn empty_table(k: usize, order: u32) -> CoeffTable {
        CoeffTable {
            k,
            alpha: rat(0),
            beta: rat(2),
            order,
            pipeline: crate::wkb::Pipeline::JackDuality,
            gauge: GaugePolicy::PaperDefault,
            entries: BTreeMap::new(),
        }
    }

    #[test]
    fn trivial_table_annihilated_at_beta_two() {
        let table = empty_table(2, 0);
        let residual = calogero_residual(2, &rat(2), &table, 4);
        assert!(residual.is_zero());
    }

    #[test]
    fn order_one_pins_the_single_line_coefficient() {
        let k = 4;
        let vars = Vars::new(k);
        let mut good = empty_table(k, 1);
        good.entries
            .insert(String::from("I"), frac(-1, k as i64));
        let residual = calogero_residual(k, &rat(4), &good, 1);
        assert!(residual.is_zero());

        let mut bad = empty_table(k, 1);
        bad.entries.insert(String::from("I"), frac(-1, 5));
        let residual = calogero_residual(k, &rat(4), &bad, 1);
        assert!(!residual.is_zero());
        assert!(residual.terms.keys().all(|m| vars.lam_degree(m) <= 1));
    }

    #[test]
    fn terminating_beta_four_series_is_annihilated() {
        let mut engine = Engine::new();
        let table = engine
            .tau_coefficients(3, &rat(-1), 3, GaugePolicy::PaperDefault)
            .unwrap();
        let residual = calogero_residual(3, &rat(4), &table, 8);
        assert!(residual.is_zero());
    }

    #[test]
    fn perm_sum_low_powers() {
        let vars = Vars::new(3);
        assert!(perm_sum_power(1).unwrap().is_zero());
        assert!(perm_sum_power(2).unwrap().is_zero());
        assert!(perm_sum_power(4).unwrap().is_zero());
        assert_eq!(perm_sum_power(3).unwrap(), MPoly::constant(vars.nvars(), rat(81)));
        let s2s2 = vars.centered_power_sum(2, true) * vars.centered_power_sum(2, false);
        assert_eq!(perm_sum_power(5).unwrap(), s2s2.scale(&frac(3645, 4)));
        let s3s3 = vars.centered_power_sum(3, true) * vars.centered_power_sum(3, false);
        assert_eq!(perm_sum_power(6).unwrap(), s3s3.scale(&rat(81 * 81)));
        assert_eq!(
            perm_sum_power(9).unwrap_err(),
            OracleError::UnsupportedPower(9)
        );
    }

    #[test]
    fn beta2_jets_match_both_forms() {
        let (perm, det) = beta2_jet_forms(&[rat(1), rat(0)], &[rat(1), rat(0)], 12).unwrap();
        assert_eq!(perm, det);
        for n in 1..=12usize {
            assert_eq!(perm.coeffs[n], rat(1) / crate::field::factorial(n as u32));
        }
        assert_eq!(perm.coeffs[0], rat(0));

        let x = vec![frac(1, 3), frac(-1, 2), rat(2)];
        let l = vec![frac(2, 5), rat(0), frac(-3, 4)];
        let (perm, det) = beta2_jet_forms(&x, &l, 12).unwrap();
        assert_eq!(perm, det);

        let err = beta2_jet_forms(&[rat(1), rat(1)], &[rat(0), rat(2)], 4).unwrap_err();
        assert_eq!(err, OracleError::DegenerateSpectrum);
    }

    #[test]
    fn phi_terms_match_low_order_forms() {
        let mut engine = Engine::new();
        for k in [5usize, 7] {
            let kr = rat(k as i64);
            let terms = phi_series_beta4(&mut engine, k, 3).unwrap();
            let s2 = terms
                .iter()
                .find(|t| t.lambda == vec![2] && t.mu == vec![2])
                .unwrap();
            let km1 = kr.clone() - rat(1);
            assert_eq!(s2.coeff, rat(-1) / (rat(2) * km1.clone() * km1.clone()));
            let s3 = terms
                .iter()
                .find(|t| t.lambda == vec![3] && t.mu == vec![3])
                .unwrap();
            let km2 = kr.clone() - rat(2);
            assert_eq!(
                s3.coeff,
                kr.clone() / (rat(3) * km1.clone() * km1 * km2.clone() * km2)
            );
        }
    }
}
