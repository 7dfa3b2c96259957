//! Sparse multivariate polynomials over an exact field.
//!
//! The spectral variables are laid out as `x_1..x_k` in slots `0..k` and
//! `lambda_1..lambda_k` in slots `k..2k`.  Monomial order is graded
//! lexicographic, which fixes the term order of serialized output.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};


use crate::field::{factorial, frac, rat, Field, Rat};

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Box<[u16]>);

impl Mono {
    pub fn unit(nvars: usize) -> Self {
        Mono(vec![0u16; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        Mono(e.into_boxed_slice())
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, range: core::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<F: Field> {
    pub nvars: usize,
    pub terms: BTreeMap<Mono, F>,
}

pub type MPolyQ = MPoly<Rat>;

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Mono::unit(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Mono::var(nvars, i), F::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Mono, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, mono: &Mono) -> F {
        self.terms.get(mono).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Drops every monomial for which `keep` is false.
    pub fn retain(&mut self, mut keep: impl FnMut(&Mono) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] = e - 1;
            let mut mult = F::zero();
            for _ in 0..e {
                mult = mult + F::one();
            }
            out.add_term(Mono(exps), c.clone() * mult);
        }
        out
    }

    /// Substitutes variable `from` by variable `to`.
    pub fn rename_var(&self, from: usize, to: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[from];
            exps[from] = 0;
            exps[to] += e;
            out.add_term(Mono(exps), c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in point.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    term = term * v.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> MPoly<G> {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Like [`map_coeffs`](Self::map_coeffs) but failing coefficients abort,
    /// reporting the offending monomial.
    pub fn try_map_coeffs<G: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<MPoly<G>, (Mono, E)> {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            match f(c) {
                Ok(g) => out.add_term(m.clone(), g),
                Err(e) => return Err((m.clone(), e)),
            }
        }
        Ok(out)
    }
}

impl<F: Field> Add for MPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self;
        for (m, c) in rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl<F: Field> Sub for MPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

impl<F: Field> Neg for MPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .into_iter()
                .map(|(m, c)| (m, c.neg()))
                .collect(),
        }
    }
}

impl<F: Field> Mul for MPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

/// Spectral variable layout for `k`-dimensional spectra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vars {
    pub k: usize,
}

impl Vars {
    pub fn new(k: usize) -> Self {
        Vars { k }
    }

    pub fn nvars(&self) -> usize {
        2 * self.k
    }

    /// Slot of `x_i`, one-based `i`.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!((1..=self.k).contains(&i));
        i - 1
    }

    /// Slot of `lambda_i`, one-based `i`.
    pub fn lam(&self, i: usize) -> usize {
        debug_assert!((1..=self.k).contains(&i));
        self.k + i - 1
    }

    pub fn x_degree(&self, m: &Mono) -> u32 {
        m.degree_in(0..self.k)
    }

    pub fn lam_degree(&self, m: &Mono) -> u32 {
        m.degree_in(self.k..2 * self.k)
    }

    /// `tau_{ij} = (x_i - x_j)(lambda_i - lambda_j)`, one-based indices.
    pub fn tau(&self, i: usize, j: usize) -> MPolyQ {
        let n = self.nvars();
        let dx = MPoly::var(n, self.x(i)) - MPoly::var(n, self.x(j));
        let dl = MPoly::var(n, self.lam(i)) - MPoly::var(n, self.lam(j));
        dx * dl
    }

    /// `sum_{i<j} tau_{ij}`.
    pub fn tau_sum(&self) -> MPolyQ {
        let mut acc = MPoly::zero(self.nvars());
        for i in 1..=self.k {
            for j in (i + 1)..=self.k {
                acc = acc + self.tau(i, j);
            }
        }
        acc
    }

    /// `sum_i x_i lambda_i`.
    pub fn pairing(&self) -> MPolyQ {
        let n = self.nvars();
        let mut acc = MPoly::zero(n);
        for i in 1..=self.k {
            acc = acc + MPoly::var(n, self.x(i)) * MPoly::var(n, self.lam(i));
        }
        acc
    }

    /// Power sum `s_n` of the centered spectrum, in the `x` slots when
    /// `in_x` is true and the `lambda` slots otherwise.
    pub fn centered_power_sum(&self, n: u32, in_x: bool) -> MPolyQ {
        let nv = self.nvars();
        let k = self.k as i64;
        let mut mean = MPoly::zero(nv);
        for i in 1..=self.k {
            let slot = if in_x { self.x(i) } else { self.lam(i) };
            mean = mean + MPoly::var(nv, slot);
        }
        mean = mean.scale(&frac(1, k));
        let mut acc = MPoly::zero(nv);
        for i in 1..=self.k {
            let slot = if in_x { self.x(i) } else { self.lam(i) };
            let centered = MPoly::var(nv, slot) - mean.clone();
            acc = acc + centered.pow(n);
        }
        acc
    }
}

/// Truncated exponential of a bihomogeneous polynomial: terms of
/// `x`-degree above `max_order` are dropped at every step.
pub fn exp_truncated(vars: Vars, p: &MPolyQ, max_order: u32) -> MPolyQ {
    let mut acc = MPoly::one(vars.nvars());
    let mut power = MPoly::one(vars.nvars());
    for m in 1..=max_order {
        power = power * p.clone();
        power.retain(|mono| vars.x_degree(mono) <= max_order);
        if power.is_zero() {
            break;
        }
        acc = acc + power.scale(&(rat(1) / factorial(m)));
    }
    acc
}

/// Product of two polynomials with every term of `x`-degree above
/// `max_order` dropped, skipping term pairs that cannot contribute.
pub fn mul_truncated<F: Field>(
    vars: Vars,
    a: &MPoly<F>,
    b: &MPoly<F>,
    max_order: u32,
) -> MPoly<F> {
    assert_eq!(a.nvars, b.nvars);
    let deg_a: Vec<(u32, &Mono, &F)> = a
        .terms
        .iter()
        .map(|(m, c)| (vars.x_degree(m), m, c))
        .collect();
    let deg_b: Vec<(u32, &Mono, &F)> = b
        .terms
        .iter()
        .map(|(m, c)| (vars.x_degree(m), m, c))
        .collect();
    let mut out = MPoly::zero(a.nvars);
    for &(da, ma, ca) in &deg_a {
        if da > max_order {
            continue;
        }
        for &(db, mb, cb) in &deg_b {
            if da + db > max_order {
                continue;
            }
            out.add_term(ma.mul(mb), ca.clone() * cb.clone());
        }
    }
    out
}

/// A mixed partial derivative, written with one-based spectral indices:
/// `upper` lists `x` indices and `lower` lists `lambda` indices, repeats
/// meaning higher order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffSpec {
    pub upper: Vec<u8>,
    pub lower: Vec<u8>,
}

impl DiffSpec {
    pub fn new(upper: &[u8], lower: &[u8]) -> Self {
        DiffSpec {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
        }
    }

    /// Largest spectral index mentioned.
    pub fn max_index(&self) -> u8 {
        self.upper
            .iter()
            .chain(self.lower.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Applies the mixed partial of `spec` to `p` and evaluates at zero.
pub fn apply_diff(vars: Vars, p: &MPolyQ, spec: &DiffSpec) -> Rat {
    let mut exps = vec![0u16; vars.nvars()];
    for &i in &spec.upper {
        exps[vars.x(i as usize)] += 1;
    }
    for &i in &spec.lower {
        exps[vars.lam(i as usize)] += 1;
    }
    let mono = Mono(exps.into_boxed_slice());
    let mut scale = rat(1);
    for &e in mono.0.iter() {
        scale *= factorial(e as u32);
    }
    p.coeff(&mono) * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{frac, rat};

    #[test]
    fn tau_expansion() {
        let v = Vars::new(2);
        let t = v.tau(1, 2);
        assert_eq!(t.terms.len(), 4);
        // x1 l1 - x1 l2 - x2 l1 + x2 l2
        let mut m = vec![0u16; 4];
        m[v.x(1)] = 1;
        m[v.lam(2)] = 1;
        assert_eq!(t.coeff(&Mono(m.into_boxed_slice())), rat(-1));
    }

    #[test]
    fn tau_sum_identity() {
        // sum tau = k sum x_i l_i - (sum x)(sum l)
        for k in 2..=4 {
            let v = Vars::new(k);
            let n = v.nvars();
            let mut sx = MPoly::zero(n);
            let mut sl = MPoly::zero(n);
            for i in 1..=k {
                sx = sx + MPoly::var(n, v.x(i));
                sl = sl + MPoly::var(n, v.lam(i));
            }
            let rhs = v.pairing().scale(&rat(k as i64)) - sx * sl;
            assert_eq!(v.tau_sum(), rhs);
        }
    }

    #[test]
    fn centered_power_sums_kill_degree_one() {
        let v = Vars::new(3);
        let s1 = v.centered_power_sum(1, true);
        assert!(s1.is_zero());
        let s2 = v.centered_power_sum(2, false);
        assert_eq!(v.lam_degree(s2.terms.keys().next().unwrap()), 2);
        assert_eq!(v.x_degree(s2.terms.keys().next().unwrap()), 0);
    }

    #[test]
    fn exp_truncation_matches_series() {
        let v = Vars::new(2);
        let t = v.tau_sum().scale(&frac(-1, 2));
        let e = exp_truncated(v, &t, 3);
        let direct = MPoly::one(v.nvars())
            + t.clone()
            + (t.clone() * t.clone()).scale(&frac(1, 2))
            + (t.clone() * t.clone() * t).scale(&frac(1, 6));
        assert_eq!(e, direct);
    }

    #[test]
    fn diff_picks_out_coefficient() {
        let v = Vars::new(2);
        // d/dx2 d/dl1 on tau12 at zero is -1
        let spec = DiffSpec::new(&[2], &[1]);
        assert_eq!(apply_diff(v, &v.tau(1, 2), &spec), rat(-1));
        // d^3/dx2^3 d^3/dl1^3 on tau12^3 is -36
        let spec3 = DiffSpec::new(&[2, 2, 2], &[1, 1, 1]);
        let t3 = v.tau(1, 2).pow(3);
        assert_eq!(apply_diff(v, &t3, &spec3), rat(-36));
    }

    #[test]
    fn rename_merges_exponents() {
        let v = Vars::new(3);
        let p = v.tau(1, 2) * v.tau(1, 3);
        let q = p.rename_var(v.x(1), v.x(2));
        for m in q.terms.keys() {
            assert_eq!(m.0[v.x(1)], 0);
        }
        let t12 = v.tau(1, 2).rename_var(v.x(1), v.x(2));
        assert!(t12.is_zero());
    }

    #[test]
    fn graded_lex_term_order() {
        let v = Vars::new(2);
        let p = v.tau_sum() + MPoly::one(v.nvars());
        let degs: Vec<u32> = p.terms.keys().map(Mono::total_degree).collect();
        let mut sorted = degs.clone();
        sorted.sort();
        assert_eq!(degs, sorted);
    }
}
