use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{linalg, rat, HPoly, Rational};
use crate::error::{Error, Result};

pub type Matrix3 = [[Rational; 3]; 3];

/// Invertible linear substitution `X <- M X`. A form `P` becomes `P(M X)`;
/// a point `x` of the old plane has new coordinates `M^-1 x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoordChange {
    matrix: Matrix3,
    inverse: Matrix3,
}

fn to_rows(m: &Matrix3) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn identity() -> Matrix3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() }))
}

fn invert(m: &Matrix3) -> Option<Matrix3> {
    let d = linalg::det(&to_rows(m));
    if d.is_zero() {
        return None;
    }
    // adjugate / det
    let minor = |r: usize, c: usize| {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]]
    };
    Some(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let cof = minor(j, i);
            let cof = if (i + j) % 2 == 1 { -cof } else { cof };
            cof / &d
        })
    }))
}

pub(crate) fn mat_vec(m: &Matrix3, v: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| (0..3).map(|j| &m[i][j] * &v[j]).sum())
}

impl CoordChange {
    pub fn new(matrix: Matrix3) -> Result<Self> {
        let inverse = invert(&matrix)
            .ok_or_else(|| Error::Invalid("coordinate change matrix is singular".into()))?;
        Ok(CoordChange { matrix, inverse })
    }

    pub fn identity() -> Self {
        CoordChange {
            matrix: identity(),
            inverse: identity(),
        }
    }

    /// Pseudorandom integer matrix with entries in `[-bound, bound]`,
    /// redrawn until invertible. Deterministic in `seed`.
    pub fn random(seed: u64, bound: i64) -> Self {
        assert!(bound >= 1, "bound must be positive");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let m: Matrix3 =
                std::array::from_fn(|_| std::array::from_fn(|_| rat(rng.gen_range(-bound..=bound))));
            if let Ok(c) = CoordChange::new(m) {
                return c;
            }
        }
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix3 {
        &self.inverse
    }

    pub fn inverse(&self) -> CoordChange {
        CoordChange {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity()
    }

    pub fn apply(&self, p: &HPoly) -> HPoly {
        p.substitute_linear(&self.matrix)
    }

    /// New coordinates of an old point.
    pub fn map_point(&self, x: &[Rational; 3]) -> [Rational; 3] {
        mat_vec(&self.inverse, x)
    }

    /// Old coordinates of the new projection centre `(0:0:1)`.
    pub fn centre(&self) -> [Rational; 3] {
        std::array::from_fn(|i| self.matrix[i][2].clone())
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        self.matrix
            .iter()
            .map(|r| r.iter().map(super::hpoly::fmt_rational).collect())
            .collect()
    }
}

/// Apply `M` then `M^-1`.
pub fn apply_coord_change(p: &HPoly, m: &CoordChange) -> HPoly {
    m.apply(p)
}
