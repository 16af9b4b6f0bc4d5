use num_traits::{Signed, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub lo: Rational,
    pub hi: Rational,
    pub poly: UniPoly,
}

/// Piecewise polynomial on contiguous closed intervals with rational
/// breakpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    pieces: Vec<Piece>,
}

impl PiecewisePoly {
    pub fn new(pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::MalformedPiecewise("no pieces".into()));
        }
        for p in &pieces {
            if p.lo >= p.hi {
                return Err(Error::MalformedPiecewise(format!(
                    "empty piece [{}, {}]",
                    p.lo, p.hi
                )));
            }
        }
        for w in pieces.windows(2) {
            if w[0].hi != w[1].lo {
                return Err(Error::MalformedPiecewise(format!(
                    "gap between {} and {}",
                    w[0].hi, w[1].lo
                )));
            }
        }
        Ok(Self { pieces })
    }

    pub fn from_triples(pieces: Vec<(Rational, Rational, UniPoly)>) -> Result<Self> {
        Self::new(
            pieces
                .into_iter()
                .map(|(lo, hi, poly)| Piece { lo, hi, poly })
                .collect(),
        )
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn lo(&self) -> &Rational {
        &self.pieces[0].lo
    }

    pub fn hi(&self) -> &Rational {
        &self.pieces[self.pieces.len() - 1].hi
    }

    /// Interior and outer breakpoints in increasing order.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut out = vec![self.lo().clone()];
        out.extend(self.pieces.iter().map(|p| p.hi.clone()));
        out
    }

    pub fn max_degree(&self) -> usize {
        self.pieces
            .iter()
            .filter_map(|p| p.poly.degree())
            .max()
            .unwrap_or(0)
    }

    /// Value at `x`; at a shared breakpoint the left piece is used.
    /// `None` outside the domain.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        self.pieces
            .iter()
            .find(|p| &p.lo <= x && x <= &p.hi)
            .map(|p| p.poly.eval(x))
    }

    pub fn integrate(&self) -> Rational {
        self.pieces
            .iter()
            .map(|p| p.poly.defint(&p.lo, &p.hi))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Breakpoints where the neighbouring pieces disagree, with both values.
    pub fn continuity_defects(&self) -> Vec<(Rational, Rational, Rational)> {
        self.pieces
            .windows(2)
            .filter_map(|w| {
                let x = &w[0].hi;
                let (l, r) = (w[0].poly.eval(x), w[1].poly.eval(x));
                (l != r).then(|| (x.clone(), l, r))
            })
            .collect()
    }

    pub fn assert_continuous(&self) -> Result<()> {
        match self.continuity_defects().first() {
            None => Ok(()),
            Some((x, l, r)) => Err(Error::MalformedPiecewise(format!(
                "discontinuous at {x}: {l} vs {r}"
            ))),
        }
    }

    /// Exact monotonicity test; supports pieces of degree at most 2, whose
    /// derivative is affine and so attains its maximum at an endpoint.
    pub fn is_non_increasing(&self) -> Result<bool> {
        for p in &self.pieces {
            let deg = p.poly.degree().unwrap_or(0);
            if deg > 2 {
                return Err(Error::DegreeBound {
                    what: "monotonicity test".into(),
                    degree: deg,
                    bound: 2,
                });
            }
            let d = p.poly.derivative();
            if d.eval(&p.lo).is_positive() || d.eval(&p.hi).is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Sum of the exact integrals of all pieces.
pub fn pw_integrate(f: &PiecewisePoly) -> Rational {
    f.integrate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, poly_defint, rat};

    #[test]
    fn integrates_pieces() {
        let f = PiecewisePoly::from_triples(vec![
            (int(0), int(1), UniPoly::from_ints(&[0, 1])),
            (int(1), int(2), UniPoly::from_ints(&[1])),
        ])
        .unwrap();
        assert_eq!(pw_integrate(&f), rat(3, 2));
        f.assert_continuous().unwrap();
        assert_eq!(f.eval(&rat(1, 2)), Some(rat(1, 2)));
        assert_eq!(f.eval(&int(3)), None);
    }

    #[test]
    fn single_piece_matches_defint() {
        let p = UniPoly::from_ints(&[1, -3, 2]);
        let f = PiecewisePoly::from_triples(vec![(rat(-1, 2), rat(5, 3), p.clone())]).unwrap();
        assert_eq!(pw_integrate(&f), poly_defint(&p, &rat(-1, 2), &rat(5, 3)));
    }

    #[test]
    fn rejects_malformed() {
        let p = UniPoly::from_ints(&[1]);
        assert!(PiecewisePoly::from_triples(vec![]).is_err());
        assert!(PiecewisePoly::from_triples(vec![(int(1), int(1), p.clone())]).is_err());
        assert!(PiecewisePoly::from_triples(vec![
            (int(0), int(1), p.clone()),
            (int(2), int(3), p.clone())
        ])
        .is_err());
    }

    #[test]
    fn detects_jumps_and_monotonicity() {
        let f = PiecewisePoly::from_triples(vec![
            (int(0), int(1), UniPoly::from_ints(&[1])),
            (int(1), int(2), UniPoly::from_ints(&[3, -1])),
        ])
        .unwrap();
        assert_eq!(f.continuity_defects(), vec![(int(1), int(1), int(2))]);
        assert!(f.assert_continuous().is_err());
        assert!(f.is_non_increasing().unwrap());
        let g = PiecewisePoly::from_triples(vec![(int(0), int(2), UniPoly::from_ints(&[0, -2, 1]))])
            .unwrap();
        assert!(!g.is_non_increasing().unwrap());
    }
}
