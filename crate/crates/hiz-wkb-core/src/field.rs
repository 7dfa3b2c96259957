//! Coefficient fields for the exact solvers.

use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// An exact field.  Implemented by [`Rat`] and by rational functions of the
/// Jack parameter; the linear algebra and polynomial modules are generic over
/// this trait.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse.  Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Embeds a small rational constant.
    fn from_rat(r: &Rat) -> Self;
}

impl Field for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Shorthand for an integer as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the fraction `n/d` as a [`Rat`].
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// `base^exp` for signed integer exponents.
pub fn rat_pow(base: &Rat, exp: i32) -> Rat {
    if exp < 0 {
        rat_pow(&base.recip(), -exp)
    } else {
        let mut acc = rat(1);
        for _ in 0..exp {
            acc *= base;
        }
        acc
    }
}

/// `n!` as a [`Rat`].
pub fn factorial(n: u32) -> Rat {
    let mut acc = rat(1);
    for m in 2..=n as i64 {
        acc *= rat(m);
    }
    acc
}

/// Falling factorial `q (q-1) ... (q-n+1)` for a rational `q`.
pub fn falling(q: &Rat, n: u32) -> Rat {
    let mut acc = rat(1);
    for m in 0..n as i64 {
        acc *= q - rat(m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_helpers() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(rat_pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(factorial(5), rat(120));
        assert_eq!(falling(&rat(5), 3), rat(60));
        assert_eq!(falling(&rat(2), 4), rat(0));
    }

    #[test]
    fn field_inverse() {
        let x = frac(-3, 7);
        assert_eq!(x.inv() * x, rat(1));
    }
}
