//! f-vectors, h-vectors and the transforms between them.

use num_traits::Num;
use serde::Serialize;

use crate::polynomial::Polynomial;

/// Face counts `f_{-1}, f_0, ..., f_{d-1}`, stored in that order, so entry
/// `k` counts faces with `k` vertices and the vector reads directly as the
/// coefficients of the f-polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<i64>);

impl FVector {
    /// `f_j`, zero outside the stored range.
    pub fn get(&self, j: isize) -> i64 {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `d = dim + 1`; zero for the empty complex and for the void complex.
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn polynomial(&self) -> Polynomial<i64> {
        Polynomial::new(self.0.clone())
    }

    /// Reduced Euler characteristic `sum_{j>=-1} (-1)^j f_j`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { c } else { -c })
            .sum()
    }
}

/// Face numbers of one complex in both bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HProfile {
    pub f: FVector,
    /// `h_0, ..., h_d`; kept at full length `d + 1` even with trailing zeros.
    pub h: Vec<i64>,
    pub d: usize,
}

impl HProfile {
    pub fn from_f(f: FVector) -> Self {
        let d = f.d();
        let h = if f.0.is_empty() {
            Vec::new()
        } else {
            h_from_f(&f.0, d)
        };
        HProfile { f, h, d }
    }

    pub fn h_polynomial(&self) -> Polynomial<i64> {
        Polynomial::new(self.h.clone())
    }

    pub fn h_at(&self, j: usize) -> i64 {
        self.h.get(j).copied().unwrap_or(0)
    }
}

/// `sum_j f_{j-1} x^j (1-x)^{d-j}`, the cleared form of
/// `(1-x)^d f(x / (1-x))`. `f` holds `f_{-1}, ..., f_{d-1}`.
pub fn h_from_f<T: Clone + Num>(f: &[T], d: usize) -> Vec<T> {
    assert!(f.len() <= d + 1, "f-vector longer than d + 1");
    let one_minus_x = Polynomial::new(vec![T::one(), T::zero() - T::one()]);
    let h: Polynomial<T> = f
        .iter()
        .enumerate()
        .map(|(j, c)| one_minus_x.pow(d - j).shift(j).scale(c))
        .sum();
    pad(h, d + 1)
}

/// Inverse transform: `f(x) = sum_i h_i x^i (1+x)^{d-i}`.
pub fn f_from_h<T: Clone + Num>(h: &[T], d: usize) -> Vec<T> {
    assert!(h.len() <= d + 1, "h-vector longer than d + 1");
    let one_plus_x = Polynomial::new(vec![T::one(), T::one()]);
    let f: Polynomial<T> = h
        .iter()
        .enumerate()
        .map(|(i, c)| one_plus_x.pow(d - i).shift(i).scale(c))
        .sum();
    pad(f, d + 1)
}

fn pad<T: Clone + Num>(p: Polynomial<T>, len: usize) -> Vec<T> {
    (0..len).map(|i| p.coeff(i)).collect()
}

/// Binomial coefficient with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    acc as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn octahedron_transform() {
        assert_eq!(h_from_f(&[1i64, 6, 12, 8], 3), vec![1, 3, 3, 1]);
        assert_eq!(f_from_h(&[1i64, 3, 3, 1], 3), vec![1, 6, 12, 8]);
    }

    #[test]
    fn cone_over_square_has_zero_top_h() {
        assert_eq!(h_from_f(&[1i64, 5, 8, 4], 3), vec![1, 2, 1, 0]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn generic_over_rationals() {
        let f: Vec<BigRational> = [1, 6, 12, 8]
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        let h = h_from_f(&f, 3);
        assert_eq!(h[1], BigRational::from_integer(3.into()));
    }

    fn brute_force_h(f: &[i64], d: usize) -> Vec<i64> {
        // h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}
        (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial((d - i) as u64, (k - i) as u64) * f.get(i).copied().unwrap_or(0)
                    })
                    .sum()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn transforms_are_inverse(f in prop::collection::vec(0i64..50, 1..7)) {
            let d = f.len() - 1;
            let h = h_from_f(&f, d);
            prop_assert_eq!(&h, &brute_force_h(&f, d));
            prop_assert_eq!(f_from_h(&h, d), f);
        }
    }
}
