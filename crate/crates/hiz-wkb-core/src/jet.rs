//! Truncated power series (jets) in one bookkeeping variable.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::field::{factorial, rat, rat_pow, Rat};

/// Power series in `t` truncated after `t^order`, with exact coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet {
    pub order: usize,
    pub coeffs: Vec<Rat>,
}

impl Jet {
    pub fn zero(order: usize) -> Self {
        Jet {
            order,
            coeffs: vec![rat(0); order + 1],
        }
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        let mut j = Self::zero(order);
        j.coeffs[0] = c;
        j
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, rat(1))
    }

    /// `exp(c t)` truncated.
    pub fn exp_linear(order: usize, c: &Rat) -> Self {
        let mut j = Self::zero(order);
        for m in 0..=order {
            j.coeffs[m] = rat_pow(c, m as i32) / factorial(m as u32);
        }
        j
    }

    pub fn add(&self, other: &Jet) -> Jet {
        assert_eq!(self.order, other.order);
        Jet {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        assert_eq!(self.order, other.order);
        Jet {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        assert_eq!(self.order, other.order);
        let mut out = Jet::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Jet {
        Jet {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }
}

/// Determinant of a square matrix of jets, by Leibniz expansion.
/// Intended for the small matrix sizes of the determinantal identities.
pub fn jet_det(m: &[Vec<Jet>]) -> Jet {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n));
    let order = m[0][0].order;
    let mut total = Jet::zero(order);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut sign = 1i64;
        {
            let mut seen = vec![false; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                    len += 1;
                }
                if len % 2 == 0 {
                    sign = -sign;
                }
            }
        }
        let mut prod = Jet::one(order);
        for (row, &col) in perm.iter().enumerate() {
            prod = prod.mul(&m[row][col]);
        }
        total = total.add(&prod.scale(&rat(sign)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Signature of a permutation given in one-line notation.
pub fn perm_sign(perm: &[usize]) -> i64 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut sign = 1i64;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::frac;

    #[test]
    fn exp_product_rule() {
        let a = Jet::exp_linear(8, &rat(2));
        let b = Jet::exp_linear(8, &rat(3));
        assert_eq!(a.mul(&b), Jet::exp_linear(8, &rat(5)));
    }

    #[test]
    fn two_by_two_det() {
        let order = 4;
        let m = vec![
            vec![Jet::exp_linear(order, &rat(1)), Jet::exp_linear(order, &rat(2))],
            vec![Jet::exp_linear(order, &rat(4)), Jet::exp_linear(order, &rat(3))],
        ];
        // det = e^{4t} - e^{6t}
        let d = jet_det(&m);
        assert!(d.coeffs[0].is_zero());
        assert_eq!(d.coeffs[1], rat(-2));
        assert_eq!(d.coeffs[2], rat(-10));
        assert_eq!(d.coeffs[3], frac(64 - 216, 6));
    }

    #[test]
    fn permutation_machinery() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perm_sign(&[0, 1, 2]), 1);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[1, 2, 0]), 1);
        let signs: i64 = perms.iter().map(|p| perm_sign(p)).sum();
        assert_eq!(signs, 0);
    }
}
