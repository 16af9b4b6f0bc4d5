use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratcore::{int, interpolate, rat, serde_rational, Rational, UniPoly};

/// A divisor class `h1*H1 + h2*H2 + e*E` on the blowup of `P^1 x P^2`
/// along the curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreefoldClass {
    #[serde(with = "serde_rational")]
    pub h1: Rational,
    #[serde(with = "serde_rational")]
    pub h2: Rational,
    #[serde(with = "serde_rational")]
    pub e: Rational,
}

impl ThreefoldClass {
    pub fn new(h1: Rational, h2: Rational, e: Rational) -> Self {
        Self { h1, h2, e }
    }

    pub fn from_ints(h1: i64, h2: i64, e: i64) -> Self {
        Self::new(int(h1), int(h2), int(e))
    }

    /// `-K_X = 2H1 + 3H2 - E`.
    pub fn anticanonical() -> Self {
        Self::from_ints(2, 3, -1)
    }

    /// The fiber `T = H1`.
    pub fn fiber() -> Self {
        Self::from_ints(1, 0, 0)
    }

    /// The strict transform `S = 2H2 - E`.
    pub fn surface_s() -> Self {
        Self::from_ints(0, 2, -1)
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self::new(&self.h1 * k, &self.h2 * k, &self.e * k)
    }

    fn coords(&self) -> [&Rational; 3] {
        [&self.h1, &self.h2, &self.e]
    }

    /// Positive part `P(u)` of `-K_X - uT`: the class itself on `[0, 1]`,
    /// minus `(u - 1) S` on `[1, 2]`.
    pub fn positive_part(u: &Rational) -> Result<Self> {
        if *u < int(0) || *u > int(2) {
            return Err(Error::OutOfRange(format!("u = {u} outside [0, 2]")));
        }
        let base = &Self::anticanonical() - &Self::fiber().scaled(u);
        if *u <= int(1) {
            Ok(base)
        } else {
            Ok(&base - &Self::surface_s().scaled(&(u - int(1))))
        }
    }
}

impl Add for &ThreefoldClass {
    type Output = ThreefoldClass;
    fn add(self, o: &ThreefoldClass) -> ThreefoldClass {
        ThreefoldClass::new(&self.h1 + &o.h1, &self.h2 + &o.h2, &self.e + &o.e)
    }
}

impl Sub for &ThreefoldClass {
    type Output = ThreefoldClass;
    fn sub(self, o: &ThreefoldClass) -> ThreefoldClass {
        ThreefoldClass::new(&self.h1 - &o.h1, &self.h2 - &o.h2, &self.e - &o.e)
    }
}

/// Triple product of basis elements, indices 0 = H1, 1 = H2, 2 = E.
///
/// H1.C = 5 and H2.C = 2 for the blown-up curve, which is rational, so
/// E^3 = -deg N = -(-K.C - 2) = -14.
fn basis_triple(i: usize, j: usize, k: usize) -> i64 {
    let mut idx = [i, j, k];
    idx.sort_unstable();
    match idx {
        [0, 1, 1] => 1,
        [0, 2, 2] => -5,
        [1, 2, 2] => -2,
        [2, 2, 2] => -14,
        _ => 0,
    }
}

/// Trilinear intersection product.
pub fn triple(a: &ThreefoldClass, b: &ThreefoldClass, c: &ThreefoldClass) -> Rational {
    let (a, b, c) = (a.coords(), b.coords(), c.coords());
    let mut total = int(0);
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            for (k, z) in c.iter().enumerate() {
                let t = basis_triple(i, j, k);
                if t != 0 {
                    total += *x * *y * *z * int(t);
                }
            }
        }
    }
    total
}

/// `P(u)^3`.
pub fn pu_volume(u: &Rational) -> Result<Rational> {
    let p = ThreefoldClass::positive_part(u)?;
    Ok(triple(&p, &p, &p))
}

/// Exact pieces of `S_X(T) = (1/20) * integral of P(u)^3 over [0, 2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberIntegrals {
    #[serde(with = "serde_rational")]
    pub low: Rational,
    #[serde(with = "serde_rational")]
    pub high: Rational,
    #[serde(with = "serde_rational")]
    pub s_x: Rational,
}

fn branch(lo: Rational, hi: Rational) -> Result<(UniPoly, Rational)> {
    let w = &hi - &lo;
    let samples = (0..5)
        .map(|k| {
            let u = &lo + &w * rat(k, 4);
            Ok((u.clone(), pu_volume(&u)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = interpolate(&samples, 3)?;
    let integral = poly.defint(&lo, &hi);
    Ok((poly, integral))
}

/// Each branch is interpolated as a cubic from five samples (one of them a
/// check) and integrated exactly.
pub fn fiber_integrals() -> Result<FiberIntegrals> {
    let (_, low) = branch(int(0), int(1))?;
    let (_, high) = branch(int(1), int(2))?;
    let vol = triple(
        &ThreefoldClass::anticanonical(),
        &ThreefoldClass::anticanonical(),
        &ThreefoldClass::anticanonical(),
    );
    let s_x = (&low + &high) / vol;
    Ok(FiberIntegrals { low, high, s_x })
}

pub fn s_threefold_fiber() -> Result<Rational> {
    Ok(fiber_integrals()?.s_x)
}
