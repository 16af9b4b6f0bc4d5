use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::decompose::gram;
use crate::error::{Error, Interval, Result};
use crate::picard::{DivClass, SurfaceConfig};
use crate::ratcore::linalg::{is_negative_definite, solve};
use crate::ratcore::{int, isolate_root, serde_rational, Rational, UniPoly};

const MAX_CHAMBERS: usize = 32;

/// An interval of `v` on which the Zariski decomposition of `D - vF` has a
/// fixed support and depends affinely on `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VChamber {
    #[serde(with = "serde_rational")]
    pub v_lo: Rational,
    #[serde(with = "serde_rational")]
    pub v_hi: Rational,
    #[serde(skip)]
    pub p_const: DivClass,
    #[serde(skip)]
    pub p_slope: DivClass,
    /// `(curve, a, b)` for the coefficient `a + b v`.
    #[serde(skip)]
    pub n_coeffs: Vec<(String, Rational, Rational)>,
}

impl VChamber {
    pub fn p_at(&self, v: &Rational) -> DivClass {
        self.p_const.add_scaled(&self.p_slope, v)
    }

    pub fn n_at(&self, v: &Rational) -> Vec<(String, Rational)> {
        self.n_coeffs
            .iter()
            .map(|(n, a, b)| (n.clone(), a + b * v))
            .collect()
    }

    pub fn support(&self) -> BTreeSet<String> {
        self.n_coeffs.iter().map(|(n, _, _)| n.clone()).collect()
    }

    pub fn support_label(&self) -> String {
        self.n_coeffs
            .iter()
            .map(|(n, _, _)| n.as_str())
            .collect::<Vec<_>>()
            .join("+")
    }

    /// `P(v)^2` as a polynomial in `v`.
    pub fn volume_poly(&self, cfg: &SurfaceConfig) -> UniPoly {
        let a = cfg.dot(&self.p_const, &self.p_const);
        let b = cfg.dot(&self.p_const, &self.p_slope) * int(2);
        let c = cfg.dot(&self.p_slope, &self.p_slope);
        UniPoly::new(vec![a, b, c])
    }

    /// `P(v).C` as a polynomial in `v`.
    pub fn dot_poly(&self, cfg: &SurfaceConfig, cls: &DivClass) -> UniPoly {
        UniPoly::linear(cfg.dot(&self.p_const, cls), cfg.dot(&self.p_slope, cls))
    }

    /// Coefficient of `name` in `N(v)`, zero when off the support.
    pub fn n_poly(&self, name: &str) -> UniPoly {
        self.n_coeffs
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, a, b)| UniPoly::linear(a.clone(), b.clone()))
            .unwrap_or_else(UniPoly::zero)
    }
}

/// Order of `a + b v` on a right neighbourhood of `v0`, compared with zero.
fn germ_sign(a: &Rational, b: &Rational, v0: &Rational) -> Ordering {
    let val = a + b * v0;
    match val.cmp(&Rational::zero()) {
        Ordering::Equal => b.cmp(&Rational::zero()),
        o => o,
    }
}

fn poly_germ_sign(q: &UniPoly, v0: &Rational) -> Ordering {
    let mut p = q.clone();
    while !p.is_zero() {
        match p.eval(v0).cmp(&Rational::zero()) {
            Ordering::Equal => p = p.derivative(),
            o => return o,
        }
    }
    Ordering::Equal
}

struct Germ<'a> {
    support: Vec<&'a str>,
    x0: Vec<Rational>,
    x1: Vec<Rational>,
    p0: DivClass,
    p1: DivClass,
}

/// Decomposition of `D - vF` for `v` slightly larger than `v0`, as affine
/// data valid on a right neighbourhood. `None` once the class stops being big.
fn germ<'a>(cfg: &'a SurfaceConfig, d: &DivClass, f: &DivClass, v0: &Rational) -> Result<Option<Germ<'a>>> {
    let mut support: Vec<&str> = Vec::new();
    loop {
        let (x0, x1) = if support.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let m = gram(cfg, &support)?;
            if !is_negative_definite(&m) {
                return Ok(None);
            }
            let cls: Vec<&DivClass> = support.iter().map(|n| &cfg.curve(n).expect("known").class).collect();
            let r0 = cls.iter().map(|c| cfg.dot(d, c)).collect();
            let r1 = cls.iter().map(|c| -cfg.dot(f, c)).collect();
            let Some(mut sol) = solve(&m, &[r0, r1]) else {
                return Ok(None);
            };
            let x1 = sol.pop().expect("two right-hand sides");
            (sol.pop().expect("two right-hand sides"), x1)
        };
        let mut p0 = d.clone();
        let mut p1 = -f;
        for (n, (a, b)) in support.iter().zip(x0.iter().zip(&x1)) {
            let c = &cfg.curve(n)?.class;
            p0 = p0.add_scaled(c, &-a);
            p1 = p1.add_scaled(c, &-b);
        }
        let fresh: Vec<&str> = cfg
            .curves
            .iter()
            .filter(|c| !support.contains(&c.name.as_str()))
            .filter(|c| germ_sign(&cfg.dot(&p0, &c.class), &cfg.dot(&p1, &c.class), v0) == Ordering::Less)
            .map(|c| c.name.as_str())
            .collect();
        if fresh.is_empty() {
            if x0.iter().zip(&x1).any(|(a, b)| germ_sign(a, b, v0) != Ordering::Greater) {
                return Ok(None);
            }
            return Ok(Some(Germ {
                support,
                x0,
                x1,
                p0,
                p1,
            }));
        }
        support.extend(fresh);
    }
}

/// Smallest rational root of `q` in `(lo, hi]`, where `q(lo+) > 0` and
/// `q(hi) <= 0`. Irrational roots are bracketed and reported.
fn first_root(q: &UniPoly, lo: &Rational, hi: &Rational) -> Result<Rational> {
    let c = |k| q.coeff(k);
    let mut cands: Vec<Rational> = Vec::new();
    match q.degree() {
        Some(1) => cands.push(-c(0) / c(1)),
        Some(2) => {
            let disc = c(1) * c(1) - int(4) * c(0) * c(2);
            if let Some(s) = rational_sqrt(&disc) {
                let two_a = int(2) * c(2);
                cands.push((-c(1) - &s) / &two_a);
                cands.push((-c(1) + &s) / &two_a);
            }
        }
        _ => {}
    }
    if let Some(r) = cands.into_iter().filter(|r| r > lo && r <= hi).min() {
        return Ok(r);
    }
    let cert = isolate_root(q, lo, hi)?;
    Err(Error::IrrationalBreakpoint(Interval::boxed(&cert.lo, &cert.hi)))
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Walks `v` from 0 to the pseudo-effective threshold of `D(u) - vF`,
/// splitting at every change of the negative part.
pub fn chamber_walk(cfg: &SurfaceConfig, u: &Rational, flag: &str) -> Result<Vec<VChamber>> {
    if u.is_negative() || *u > int(2) {
        return Err(Error::OutOfRange(format!("u = {u} outside [0, 2]")));
    }
    let d = cfg.polarization(u)?;
    let f = cfg.curve(flag)?.class.clone();
    let mut v0 = Rational::zero();
    let mut out: Vec<VChamber> = Vec::new();
    loop {
        if out.len() >= MAX_CHAMBERS {
            return Err(Error::OutOfRange(format!("more than {MAX_CHAMBERS} chambers")));
        }
        let Some(g) = germ(cfg, &d, &f, &v0)? else {
            if out.is_empty() {
                return Err(Error::NotPseudoEffective(format!("D(u) - vF near v = 0 for u = {u}")));
            }
            break;
        };
        let q = UniPoly::new(vec![
            cfg.dot(&g.p0, &g.p0),
            cfg.dot(&g.p0, &g.p1) * int(2),
            cfg.dot(&g.p1, &g.p1),
        ]);
        if poly_germ_sign(&q, &v0) != Ordering::Greater {
            if out.is_empty() {
                return Err(Error::NotPseudoEffective(format!("D(u) is not big for u = {u}")));
            }
            break;
        }

        let mut events: Vec<Rational> = Vec::new();
        for c in &cfg.curves {
            if g.support.contains(&c.name.as_str()) {
                continue;
            }
            let b = cfg.dot(&g.p1, &c.class);
            if b.is_negative() {
                events.push(-cfg.dot(&g.p0, &c.class) / b);
            }
        }
        for (a, b) in g.x0.iter().zip(&g.x1) {
            if b.is_negative() {
                events.push(-a / b);
            }
        }
        let linear = events.into_iter().filter(|e| *e > v0).min();
        let (v1, at_tau) = match linear {
            Some(e) if q.eval(&e).is_positive() => (e, false),
            Some(e) => {
                let r = first_root(&q, &v0, &e)?;
                (r, true)
            }
            None => {
                let mut hi = &v0 + Rational::one();
                while !q.eval(&hi).is_negative() {
                    if hi > int(1 << 20) {
                        return Err(Error::OutOfRange("volume never vanishes".to_string()));
                    }
                    hi = &hi * int(2);
                }
                (first_root(&q, &v0, &hi)?, true)
            }
        };

        let n_coeffs: Vec<(String, Rational, Rational)> = g
            .support
            .iter()
            .zip(g.x0.into_iter().zip(g.x1))
            .map(|(n, (a, b))| (n.to_string(), a, b))
            .collect();
        let chamber = VChamber {
            v_lo: v0.clone(),
            v_hi: v1.clone(),
            p_const: g.p0,
            p_slope: g.p1,
            n_coeffs,
        };
        if let Some(prev) = out.last() {
            if !prev.support().is_subset(&chamber.support()) {
                return Err(Error::NonMonotoneSupport(v0));
            }
        }
        out.push(chamber);
        if at_tau || q.eval(&v1).is_zero() {
            break;
        }
        v0 = v1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{build_config, ConfigKind};
    use crate::ratcore::rat;
    use crate::zariski::decompose;

    fn breakpoints(ch: &[VChamber]) -> Vec<Rational> {
        let mut out = vec![ch[0].v_lo.clone()];
        out.extend(ch.iter().map(|c| c.v_hi.clone()));
        out
    }

    #[test]
    fn a1_e4_chambers() {
        let cfg = build_config(ConfigKind::A1);
        let ch = chamber_walk(&cfg, &rat(3, 2), "E4").unwrap();
        assert_eq!(breakpoints(&ch), vec![int(0), rat(1, 2), int(1), rat(3, 2)]);
        let last: Vec<_> = ch[2].support().into_iter().collect();
        assert_eq!(last, ["E5", "L14", "L24", "L34"]);
        // 5 - u^2 - 2v^2 on the first chamber
        assert_eq!(ch[0].volume_poly(&cfg), UniPoly::new(vec![rat(11, 4), int(0), int(-2)]));
    }

    #[test]
    fn a1_e5_chambers() {
        let cfg = build_config(ConfigKind::A1);
        let ch = chamber_walk(&cfg, &rat(3, 2), "E5").unwrap();
        assert_eq!(breakpoints(&ch), vec![int(0), int(1), rat(3, 2), int(2)]);
        let sets: Vec<Vec<String>> = ch.iter().map(|c| c.support().into_iter().collect()).collect();
        assert_eq!(sets[0], ["E4"]);
        assert_eq!(sets[1], ["E4", "L45"]);
        assert_eq!(sets[2], ["C2", "E4", "L45"]);
        // v/2 E4 + (v-1) L45 + (v-u) C2
        assert_eq!(ch[2].n_poly("E4"), UniPoly::linear(int(0), rat(1, 2)));
        assert_eq!(ch[2].n_poly("L45"), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(ch[2].n_poly("C2"), UniPoly::linear(rat(-3, 2), int(1)));
    }

    #[test]
    fn two_a1_e4_final_chamber() {
        let cfg = build_config(ConfigKind::TwoA1);
        let ch = chamber_walk(&cfg, &rat(5, 4), "E4").unwrap();
        let last = ch.last().unwrap();
        assert_eq!(last.v_hi, rat(7, 4));
        assert_eq!(last.n_poly("L24"), UniPoly::from_ints(&[-2, 2]));
        assert_eq!(last.n_poly("L14"), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(last.n_poly("E2"), UniPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn chambers_reproduce_pointwise_decomposition() {
        for kind in ConfigKind::ALL {
            let cfg = build_config(kind);
            for u in [rat(1, 2), int(1), rat(9, 8), rat(3, 2), rat(15, 8)] {
                let d = cfg.polarization(&u).unwrap();
                for c in &cfg.curves {
                    let ch = chamber_walk(&cfg, &u, &c.name).unwrap();
                    for w in ch.windows(2) {
                        assert_eq!(w[0].v_hi, w[1].v_lo);
                    }
                    for chamber in &ch {
                        for k in 1..4 {
                            let v = &chamber.v_lo + (&chamber.v_hi - &chamber.v_lo) * rat(k, 4);
                            let z = decompose(&cfg, &d.add_scaled(&c.class, &-&v)).unwrap();
                            assert_eq!(z.positive, chamber.p_at(&v), "{kind} {u} {} {v}", c.name);
                            let mut expect = chamber.n_at(&v);
                            let mut got = z.negative.clone();
                            expect.sort();
                            got.sort();
                            assert_eq!(got, expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_range_u() {
        let cfg = build_config(ConfigKind::A1);
        assert!(chamber_walk(&cfg, &rat(5, 2), "E4").is_err());
        assert!(chamber_walk(&cfg, &int(1), "Q").is_err());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-1)), None);
    }

    #[test]
    fn irrational_threshold_is_bracketed() {
        // v^2 - 2 has its root at sqrt 2
        let q = UniPoly::from_ints(&[2, 0, -1]);
        match first_root(&q, &int(1), &int(2)) {
            Err(Error::IrrationalBreakpoint(b)) => {
                let (lo, hi) = (b.lo, b.hi);
                assert!(lo < hi && lo >= rat(1414, 1000) && hi <= rat(1415, 1000));
            }
            other => panic!("{other:?}"),
        }
    }
}
