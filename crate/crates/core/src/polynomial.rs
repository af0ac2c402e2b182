//! Dense univariate polynomials over an exact scalar type.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Num, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients stored constant term first, trailing zeros trimmed, so the
/// zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `1 + x + ... + x^d`, the h-polynomial of the boundary of a d-simplex.
    pub fn all_ones(d: usize) -> Self {
        Self::new(vec![T::one(); d + 1])
    }

    /// `(1 + c x)`-style binomials and the like: `a + b x`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![T::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: c }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, a| acc * x.clone() + a.clone())
    }
}

impl<T: Clone + Num + PartialOrd> Polynomial<T> {
    /// The smallest index where `self` has a smaller coefficient than
    /// `other`, i.e. where `self - other` is negative.
    pub fn first_shortfall(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeff(i) < other.coeff(i))
    }

    /// `self >= other` coefficientwise.
    pub fn dominates(&self, other: &Self) -> bool {
        self.first_shortfall(other).is_none()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| *c >= T::zero())
    }
}

impl<T: Clone + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Clone + Num> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Clone + Num> std::iter::Sum for Polynomial<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Polynomial::new(Vec::new()), |a, b| &a + &b)
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<T: fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Polynomial<i64>;

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(P::new(vec![1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(P::new(vec![0, 0]).is_zero());
        assert_eq!(P::new(vec![]).degree(), None);
    }

    #[test]
    fn simplex_boundary_square() {
        let s = P::all_ones(2);
        assert_eq!((&s * &s).coeffs(), &[1, 2, 3, 2, 1]);
    }

    #[test]
    fn comparison() {
        let a = P::new(vec![1, 3, 4, 3, 1]);
        let b = P::new(vec![1, 2, 3, 2, 1]);
        assert!(a.dominates(&b));
        assert_eq!(b.first_shortfall(&a), Some(1));
        assert!(P::new(vec![1, 1]).dominates(&P::new(vec![1])));
        assert_eq!(P::new(vec![1]).first_shortfall(&P::new(vec![1, 1])), Some(1));
    }

    #[test]
    fn big_coefficients() {
        let p = Polynomial::<BigInt>::linear(BigInt::from(1), BigInt::from(2));
        assert_eq!(p.pow(64).coeff(64), BigInt::from(2).pow(64));
    }

    proptest! {
        #[test]
        fn ring_laws(a in prop::collection::vec(-20i64..20, 0..6),
                     b in prop::collection::vec(-20i64..20, 0..6),
                     c in prop::collection::vec(-20i64..20, 0..6),
                     x in -3i64..3) {
            let (a, b, c) = (P::new(a), P::new(b), P::new(c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(&(&a - &b) + &b, a);
        }
    }
}
