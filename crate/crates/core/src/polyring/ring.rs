//! Minimal commutative-ring abstraction shared by polynomials, binary forms
//! and truncated series, plus a division-free determinant.

use super::Rational;
use num_traits::{One, Zero};

pub trait CommRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn neg_elem(&self) -> Self {
        self.zero_like().sub_elem(self)
    }
}

/// Rings where exact division can be attempted.
pub trait ExactDiv: CommRing {
    fn div_exact_elem(&self, divisor: &Self) -> Option<Self>;
}

impl CommRing for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
}

impl ExactDiv for Rational {
    fn div_exact_elem(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

/// Determinant by expansion over column subsets: row `k` extends every
/// partial selection of `k` columns. Needs no division, so it is valid over
/// rings with zero divisors such as `Q[t]/(t^N)`. Cost is `O(2^n n)` products.
///
/// `one` supplies the ring identity (and determines the zero).
pub fn determinant<R: CommRing>(matrix: &[Vec<R>], one: &R) -> R {
    let n = matrix.len();
    if n == 0 {
        return one.clone();
    }
    assert!(n <= 24, "subset expansion limited to 24 columns");
    for row in matrix {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut layer: Vec<Option<R>> = vec![None; 1 << n];
    layer[0] = Some(one.clone());
    for (k, row) in matrix.iter().enumerate() {
        let mut next: Vec<Option<R>> = vec![None; 1 << n];
        for mask in 0usize..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let Some(partial) = &layer[mask] else { continue };
            if partial.is_zero_elem() {
                continue;
            }
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero_elem() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let prod = partial.mul_elem(entry);
                let target = mask | (1 << j);
                let slot = &mut next[target];
                *slot = Some(match slot.take() {
                    None => {
                        if above % 2 == 0 {
                            prod
                        } else {
                            prod.neg_elem()
                        }
                    }
                    Some(acc) => {
                        if above % 2 == 0 {
                            acc.add_elem(&prod)
                        } else {
                            acc.sub_elem(&prod)
                        }
                    }
                });
            }
        }
        layer = next;
    }
    layer[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| one.zero_like())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn subset_determinant_matches_hand_values() {
        let m = vec![
            vec![rat(2), rat(0), rat(1)],
            vec![rat(1), rat(3), rat(2)],
            vec![rat(1), rat(1), rat(1)],
        ];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&m, &rat(1)), rat(0));
        let m = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(determinant(&m, &rat(1)), rat(-1));
        let m = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(0), rat(4), rat(5)],
            vec![rat(1), rat(0), rat(6)],
        ];
        assert_eq!(determinant(&m, &rat(1)), rat(22));
    }
}
