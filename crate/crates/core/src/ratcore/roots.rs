use num_traits::Zero;
use serde::Serialize;

use super::{rat, serde_rational, Rational, UniPoly};
use crate::error::{Error, Interval, Result};

/// A bracket `[lo, hi]` containing exactly one real root of `poly`.
///
/// Either the endpoint signs are strict and opposite, or `lo == hi` is itself
/// an exact rational root (both signs are then 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCertificate {
    #[serde(skip)]
    pub poly: UniPoly,
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl RootCertificate {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Re-derives the certificate from scratch: opposite strict signs at the
    /// ends (or an exact root) and a Sturm count of one.
    pub fn check(&self) -> bool {
        if self.is_exact() {
            return self.poly.eval(&self.lo).is_zero();
        }
        let (sl, sh) = (self.poly.sign_at(&self.lo), self.poly.sign_at(&self.hi));
        sl == self.sign_lo && sh == self.sign_hi && sl * sh == -1
            && count_roots(&self.poly, &self.lo, &self.hi) == 1
    }

    /// True when the bracket lies inside `[lo, hi]`.
    pub fn within(&self, lo: &Rational, hi: &Rational) -> bool {
        lo <= &self.lo && &self.hi <= hi
    }
}

pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_variations(seq: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq.iter().map(|q| q.sign_at(x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots(p: &UniPoly, lo: &Rational, hi: &Rational) -> usize {
    if lo >= hi || p.is_zero() {
        return 0;
    }
    let seq = sturm_sequence(p);
    sign_variations(&seq, lo).saturating_sub(sign_variations(&seq, hi))
}

/// Isolates the unique root of `p` in `[lo, hi]` to a bracket of width at
/// most 1/1000, aligned to the decimal grid when possible.
pub fn isolate_root(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<RootCertificate> {
    isolate_root_to(p, lo, hi, &rat(1, 1000))
}

pub fn isolate_root_to(
    p: &UniPoly,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<RootCertificate> {
    let sl = p.sign_at(lo);
    let sh = p.sign_at(hi);
    if sl * sh >= 0 {
        return Err(Error::NoSignChange(Interval::boxed(lo, hi)));
    }
    let count = count_roots(p, lo, hi);
    if count != 1 {
        return Err(Error::MultipleRoots {
            interval: Interval::boxed(lo, hi),
            count,
        });
    }

    let exact = |x: Rational| RootCertificate {
        poly: p.clone(),
        lo: x.clone(),
        hi: x,
        sign_lo: 0,
        sign_hi: 0,
    };

    let (mut a, mut b) = (lo.clone(), hi.clone());
    let two = Rational::from_integer(2.into());
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        match p.sign_at(&mid) {
            0 => return Ok(exact(mid)),
            s if s == sl => a = mid,
            _ => b = mid,
        }
    }

    // Snap onto the grid of multiples of `width` if the aligned cell still
    // lies inside the original bracket.
    let cell_lo = (&a / width).floor() * width;
    let cell_mid = &cell_lo + width;
    let cell_hi = &cell_mid + width;
    let mut best = (a, b);
    if p.sign_at(&cell_mid) == 0 {
        return Ok(exact(cell_mid));
    }
    for (c0, c1) in [(cell_lo, cell_mid.clone()), (cell_mid, cell_hi)] {
        if &c0 >= lo && &c1 <= hi && p.sign_at(&c0) == sl && p.sign_at(&c1) == sh {
            best = (c0, c1);
            break;
        }
    }
    if p.sign_at(&best.0) == 0 {
        return Ok(exact(best.0));
    }
    let cert = RootCertificate {
        poly: p.clone(),
        lo: best.0,
        hi: best.1,
        sign_lo: sl,
        sign_hi: sh,
    };
    debug_assert!(cert.check());
    Ok(cert)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::int;

    #[test]
    fn root_a_bracket() {
        let p = UniPoly::from_ints(&[5, 3, -9, 3]);
        let c = isolate_root(&p, &int(1), &int(2)).unwrap();
        assert!(c.width() <= rat(1, 1000));
        assert!(c.within(&rat(1355, 1000), &rat(1356, 1000)));
        assert!(c.check());
        assert_eq!((c.sign_lo, c.sign_hi), (1, -1));
    }

    #[test]
    fn root_b_bracket() {
        let p = UniPoly::from_ints(&[7, 12, -24, 8]);
        let c = isolate_root(&p, &int(1), &rat(3, 2)).unwrap();
        assert!(c.within(&rat(1261, 1000), &rat(1262, 1000)));
        assert!(c.check());
    }

    #[test]
    fn exact_rational_root() {
        let p = UniPoly::from_ints(&[-1, 1]);
        let c = isolate_root(&p, &int(0), &int(2)).unwrap();
        assert!(c.is_exact());
        assert_eq!(c.lo, int(1));
        assert!(c.check());
    }

    #[test]
    fn error_paths() {
        let p = UniPoly::from_ints(&[-1, 0, 1]); // roots at +-1
        assert!(matches!(
            isolate_root(&p, &int(-2), &int(2)),
            Err(Error::NoSignChange(_))
        ));
        // x^3 - x has three roots in [-2, 2] and changes sign
        let q = UniPoly::from_ints(&[0, -1, 0, 1]);
        assert!(matches!(
            isolate_root(&q, &int(-2), &int(2)),
            Err(Error::MultipleRoots { count: 3, .. })
        ));
    }

    #[test]
    fn sturm_counts() {
        let p = UniPoly::from_ints(&[5, 3, -9, 3]);
        assert_eq!(count_roots(&p, &int(-10), &int(10)), 3);
        assert_eq!(count_roots(&p, &int(1), &int(2)), 1);
        // (x-1)^2 (x-3): two distinct roots
        let q = &(&UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[-1, 1]))
            * &UniPoly::from_ints(&[-3, 1]);
        assert_eq!(count_roots(&q, &int(0), &int(4)), 2);
    }

    #[test]
    fn finer_width() {
        let p = UniPoly::from_ints(&[5, 3, -9, 3]);
        let c = isolate_root_to(&p, &int(1), &int(2), &rat(1, 1_000_000)).unwrap();
        assert!(c.width() <= rat(1, 1_000_000));
        assert!(c.within(&rat(1355, 1000), &rat(1356, 1000)));
        assert!(c.check());
    }
}
