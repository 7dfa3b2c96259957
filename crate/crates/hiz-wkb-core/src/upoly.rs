//! Dense univariate polynomials over an exact field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{Field, Rat};

/// Polynomial in one indeterminate, stored dense, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            UPoly { coeffs: vec![c] }
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The monomial `c t^n`.
    pub fn monomial(c: F, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = c;
        UPoly { coeffs }
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, n: usize) -> F {
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut m = F::zero();
            for _ in 0..n {
                m = m + F::one();
            }
            out.push(c.clone() * m);
        }
        UPoly::from_coeffs(out)
    }

    /// Divides by the leading coefficient.  Panics on zero.
    pub fn monic(&self) -> Self {
        let lead = self.leading().expect("monic of zero polynomial").clone();
        self.scale(&lead.inv())
    }

    /// Quotient and remainder of exact polynomial division.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().clone().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = rem[i].clone() * lead_inv.clone();
            if q.is_zero() {
                continue;
            }
            quot[i - d] = q.clone();
            for j in 0..=d {
                let sub = q.clone() * divisor.coeffs[j].clone();
                rem[i - d + j] = rem[i - d + j].clone() - sub;
            }
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Product over a list of linear factors `t - r`.
    pub fn from_roots(roots: &[F]) -> Self {
        let mut acc = Self::one();
        for r in roots {
            let lin = UPoly::from_coeffs(vec![r.clone().neg(), F::one()]);
            acc = acc * lin;
        }
        acc
    }
}

impl<F: Field> Add for UPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            out.push(a + b);
        }
        UPoly::from_coeffs(out)
    }
}

impl<F: Field> Sub for UPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

impl<F: Field> Neg for UPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        UPoly {
            coeffs: self.coeffs.into_iter().map(|c| c.neg()).collect(),
        }
    }
}

impl<F: Field> Mul for UPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::from_coeffs(out)
    }
}

/// A root together with its multiplicity, as produced by [`linear_factors`].
#[derive(Clone, PartialEq, Debug)]
pub struct LinearFactor {
    pub root: Rat,
    pub multiplicity: u32,
}

/// Splits `p` into linear factors over the rationals as far as possible.
/// Returns the leading coefficient, the factors found, and the unfactored
/// remainder (constant one when `p` splits completely).  Root candidates are
/// drawn from `candidates`, tried with multiplicity.
pub fn linear_factors(p: &UPoly<Rat>, candidates: &[Rat]) -> (Rat, Vec<LinearFactor>, UPoly<Rat>) {
    let lead = p.leading().cloned().unwrap_or_else(|| Rat::from_integer(0.into()));
    if p.is_zero() {
        return (lead, Vec::new(), UPoly::zero());
    }
    let mut rest = p.monic();
    let mut factors: Vec<LinearFactor> = Vec::new();
    for r in candidates {
        let mut mult = 0u32;
        loop {
            if rest.degree() == Some(0) || rest.is_zero() {
                break;
            }
            if !rest.eval(r).is_zero() {
                break;
            }
            let lin = UPoly::from_coeffs(vec![-r.clone(), Rat::one()]);
            let (q, rem) = rest.div_rem(&lin);
            debug_assert!(rem.is_zero());
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push(LinearFactor {
                root: r.clone(),
                multiplicity: mult,
            });
        }
    }
    (lead, factors, rest)
}

impl fmt::Display for UPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*t", c)?,
                _ => write!(f, "({})*t^{}", c, n)?,
            }
        }
        Ok(())
    }
}
