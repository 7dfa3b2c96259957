//! Rational functions of a single parameter, reduced to lowest terms.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{Field, Rat};
use crate::upoly::UPoly;

/// Quotient of two polynomials in one parameter (written `a` throughout,
/// the Jack parameter).  Kept reduced with a monic denominator, so equality
/// is structural and a reduced denominator touching zero is a genuine pole.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFun {
    num: UPoly<Rat>,
    den: UPoly<Rat>,
}

impl RatFun {
    pub fn new(num: UPoly<Rat>, den: UPoly<Rat>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut out = RatFun { num, den };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let lead = self.den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn from_poly(p: UPoly<Rat>) -> Self {
        RatFun {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// The parameter itself.
    pub fn var() -> Self {
        Self::from_poly(UPoly::var())
    }

    pub fn numerator(&self) -> &UPoly<Rat> {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly<Rat> {
        &self.den
    }

    /// True when the reduced denominator is constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Evaluates at `a`, or `None` at a genuine pole.
    pub fn eval(&self, a: &Rat) -> Option<Rat> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a) / d)
    }

    /// True when the reduced denominator vanishes at `a`.
    pub fn has_pole_at(&self, a: &Rat) -> bool {
        self.den.eval(a).is_zero()
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
}

impl Add for RatFun {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let num = self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone();
        RatFun::new(num, self.den * rhs.den)
    }
}

impl Sub for RatFun {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

impl Neg for RatFun {
    type Output = Self;
    fn neg(self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for RatFun {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        RatFun::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFun {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Field for RatFun {
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{frac, rat};

    fn a() -> RatFun {
        RatFun::var()
    }
    fn c(n: i64) -> RatFun {
        RatFun::constant(rat(n))
    }

    #[test]
    fn reduction_cancels_common_factors() {
        // (a^2 - 1) / (a - 1) = a + 1
        let f = (a() * a() - c(1)) / (a() - c(1));
        assert!(f.is_polynomial());
        assert_eq!(f.eval(&rat(1)), Some(rat(2)));
    }

    #[test]
    fn poles_survive_reduction() {
        let f = c(1) / (a() + c(1));
        assert!(f.has_pole_at(&rat(-1)));
        assert_eq!(f.eval(&rat(-1)), None);
        assert_eq!(f.eval(&rat(1)), Some(frac(1, 2)));
    }

    #[test]
    fn field_ops() {
        let f = (c(2) * a() + c(1)) / (a() - c(3));
        let g = f.clone() - f.clone();
        assert!(g.is_zero());
        assert_eq!(f.clone() * f.inv(), RatFun::one());
    }

    #[test]
    fn removable_singularity_in_sum() {
        // 1/(1+a) + a/(1+a) = 1 has no pole left at a = -1.
        let f = c(1) / (a() + c(1)) + a() / (a() + c(1));
        assert_eq!(f, RatFun::one());
        assert_eq!(f.eval(&rat(-1)), Some(rat(1)));
    }
}
