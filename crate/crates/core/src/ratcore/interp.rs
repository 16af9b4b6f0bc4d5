use std::collections::BTreeSet;

use super::{Rational, UniPoly};
use crate::error::{Error, Mismatch, Result};

/// Interpolates a polynomial of degree at most `degree` through the first
/// `degree + 1` samples, then demands that every remaining sample lies on it.
///
/// Callers inside the engine always pass at least one surplus sample so that
/// an assumed degree bound becomes a checked fact.
pub fn interpolate(samples: &[(Rational, Rational)], degree: usize) -> Result<UniPoly> {
    let needed = degree + 1;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: samples.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for (x, _) in samples {
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateAbscissa(x.clone()));
        }
    }

    let (base, extra) = samples.split_at(needed);
    let xs: Vec<&Rational> = base.iter().map(|(x, _)| x).collect();

    // Newton divided differences.
    let mut table: Vec<Rational> = base.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }

    let poly = newton_to_monomial(&table, &xs);
    debug_assert!(poly.degree().unwrap_or(0) <= degree);

    for (x, y) in extra {
        let actual = poly.eval(x);
        if &actual != y {
            return Err(Error::VerificationFailure(Box::new(Mismatch {
                x: x.clone(),
                expected: y.clone(),
                actual,
            })));
        }
    }
    Ok(poly)
}

fn newton_to_monomial(divided: &[Rational], xs: &[&Rational]) -> UniPoly {
    let n = divided.len();
    if n == 0 {
        return UniPoly::zero();
    }
    let one = Rational::from_integer(1.into());
    let mut poly = UniPoly::constant(divided[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = UniPoly::linear(-xs[i].clone(), one.clone());
        poly = &(&poly * &factor) + &UniPoly::constant(divided[i].clone());
    }
    poly
}
