use std::ops::{Add, Mul, Sub};

use crate::ratcore::{Rational, UniPoly};

/// Polynomial in `v` whose coefficients are polynomials in `u`; used to
/// transcribe displays such as `(2 - u + v)(u + 3v - 2)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `c + cu*u + cv*v`.
    pub fn affine(c: i64, cu: i64, cv: i64) -> Self {
        Self::new(vec![UniPoly::from_ints(&[c, cu]), UniPoly::from_ints(&[cv])])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![UniPoly::constant(c)])
    }

    /// Polynomial in `u` only.
    pub fn in_u(p: UniPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Specializes `u`, leaving a polynomial in `v`.
    pub fn at_u(&self, u: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(u)).collect())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UniPoly::zero();
        BiPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UniPoly::zero();
        BiPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return BiPoly::default();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}
