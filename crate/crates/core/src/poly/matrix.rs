use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::rational::{format_rational, int, Rational};

/// A 3×3 matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix3 {
    pub rows: [[Rational; 3]; 3],
}

impl Matrix3 {
    pub fn new(rows: [[Rational; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Self {
            rows: rows.map(|r| r.map(int)),
        }
    }

    pub fn from_columns(cols: [[Rational; 3]; 3]) -> Self {
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()));
        Self { rows }
    }

    pub fn identity() -> Self {
        Self::diagonal([int(1), int(1), int(1)])
    }

    pub fn diagonal(d: [Rational; 3]) -> Self {
        let [a, b, c] = d;
        let z = Rational::zero;
        Self {
            rows: [[a, z(), z()], [z(), b, z()], [z(), z(), c]],
        }
    }

    /// Permutation matrix sending the basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: [usize; 3]) -> Self {
        let mut m = Self::diagonal([Rational::zero(), Rational::zero(), Rational::zero()]);
        for (j, &i) in perm.iter().enumerate() {
            m.rows[i][j] = Rational::one();
        }
        m
    }

    pub fn column(&self, j: usize) -> [Rational; 3] {
        std::array::from_fn(|i| self.rows[i][j].clone())
    }

    pub fn det(&self) -> Rational {
        let m = &self.rows;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let m = &self.rows;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Some(Self {
            rows: adj.map(|r| r.map(|e| e / &det)),
        })
    }

    pub fn mul_vec(&self, v: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(Rational::zero(), |acc, j| acc + &self.rows[i][j] * &v[j])
        })
    }

    pub fn is_scalar(&self) -> bool {
        let m = &self.rows;
        (0..3).all(|i| (0..3).all(|j| i == j || m[i][j].is_zero()))
            && m[0][0] == m[1][1]
            && m[1][1] == m[2][2]
    }
}

impl Mul for &Matrix3 {
    type Output = Matrix3;

    fn mul(self, rhs: &Matrix3) -> Matrix3 {
        let rows = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Rational::zero(), |acc, k| {
                    acc + &self.rows[i][k] * &rhs.rows[k][j]
                })
            })
        });
        Matrix3 { rows }
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;

    fn mul(self, rhs: Matrix3) -> Matrix3 {
        &self * &rhs
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "[[{}]]", rows.join("], ["))
    }
}

impl Serialize for Matrix3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        rows.serialize(serializer)
    }
}
