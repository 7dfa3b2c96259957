//! Quaternion arithmetic for the Haar samplers.
//!
//! The Gaussian ensembles behind the orthogonal, unitary and symplectic
//! samplers are the real, complex and quaternion specializations of one
//! construction, so Gram-Schmidt is written once over quaternions and
//! the narrower cases leave the unused components at zero.

use std::ops::{Add, Mul, Sub};

/// A quaternion `a + b i + c j + d k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quat {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quat {
    pub const ZERO: Quat = Quat { a: 0.0, b: 0.0, c: 0.0, d: 0.0 };

    pub fn real(a: f64) -> Quat {
        Quat { a, b: 0.0, c: 0.0, d: 0.0 }
    }

    pub fn complex(a: f64, b: f64) -> Quat {
        Quat { a, b, c: 0.0, d: 0.0 }
    }

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Quat {
        Quat { a, b, c, d }
    }

    pub fn conj(self) -> Quat {
        Quat { a: self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn norm_sq(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn scale(self, t: f64) -> Quat {
        Quat { a: self.a * t, b: self.b * t, c: self.c * t, d: self.d * t }
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, o: Quat) -> Quat {
        Quat { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c, d: self.d + o.d }
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, o: Quat) -> Quat {
        Quat { a: self.a - o.a, b: self.b - o.b, c: self.c - o.c, d: self.d - o.d }
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        Quat {
            a: self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            b: self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            c: self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            d: self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const I: Quat = Quat { a: 0.0, b: 1.0, c: 0.0, d: 0.0 };
    const J: Quat = Quat { a: 0.0, b: 0.0, c: 1.0, d: 0.0 };
    const K: Quat = Quat { a: 0.0, b: 0.0, c: 0.0, d: 1.0 };

    #[test]
    fn hamilton_relations() {
        assert_eq!(I * I, Quat::real(-1.0));
        assert_eq!(J * J, Quat::real(-1.0));
        assert_eq!(K * K, Quat::real(-1.0));
        assert_eq!(I * J, K);
        assert_eq!(J * K, I);
        assert_eq!(K * I, J);
        assert_eq!(J * I, K.scale(-1.0));
    }

    #[test]
    fn conjugation_reverses_products() {
        let p = Quat::new(1.0, -2.0, 0.5, 3.0);
        let q = Quat::new(0.25, 1.0, -1.5, 2.0);
        assert_eq!((p * q).conj(), q.conj() * p.conj());
        assert!(((p * q).norm_sq() - p.norm_sq() * q.norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn norm_is_quadratic() {
        let p = Quat::new(3.0, 4.0, 0.0, 0.0);
        assert_eq!(p.norm_sq(), 25.0);
        assert_eq!((p * p.conj()).a, 25.0);
        assert_eq!((p * p.conj()).b, 0.0);
    }
}
