use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratcore::linalg::{inertia, Matrix};
use crate::ratcore::{int, Rational};

/// Integral lattice with a symmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    #[allow(clippy::needless_range_loop)]
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Parse(format!("gram matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { gram })
    }

    /// Picard lattice of the plane blown up in `points` (possibly infinitely
    /// near) points, in the basis `l, e1, ..., en`.
    pub fn blowup_of_plane(points: usize) -> Self {
        let n = points + 1;
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match (i, j) {
                        (0, 0) => 1,
                        _ if i == j => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Self { gram }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn intersect(&self, a: &DivClass, b: &DivClass) -> Result<Rational> {
        let n = self.rank();
        for len in [a.rank(), b.rank()] {
            if len != n {
                return Err(Error::DimensionMismatch { left: n, right: len });
            }
        }
        let mut acc = Rational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            if a.coords[i].is_zero() {
                continue;
            }
            for (j, &g) in row.iter().enumerate() {
                if g != 0 && !b.coords[j].is_zero() {
                    acc += &a.coords[i] * &b.coords[j] * int(g);
                }
            }
        }
        Ok(acc)
    }

    /// `(positive, negative, zero)` counts of the form.
    pub fn signature(&self) -> (usize, usize, usize) {
        let m: Matrix = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        inertia(&m)
    }
}

/// A divisor class as an exact coordinate vector in a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivClass {
    coords: Vec<Rational>,
}

impl DivClass {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational::zero(); rank])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self::new(self.coords.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Self, k: &Rational) -> Self {
        assert_eq!(self.rank(), other.rank(), "class rank mismatch");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b * k)
                .collect(),
        )
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Add for &DivClass {
    type Output = DivClass;
    fn add(self, rhs: &DivClass) -> DivClass {
        self.add_scaled(rhs, &int(1))
    }
}

impl Sub for &DivClass {
    type Output = DivClass;
    fn sub(self, rhs: &DivClass) -> DivClass {
        self.add_scaled(rhs, &int(-1))
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        self.scaled(&int(-1))
    }
}
