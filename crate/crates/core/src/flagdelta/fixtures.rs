use serde::Serialize;

use super::bipoly::BiPoly;
use crate::picard::{ConfigKind, PointStratum};
use crate::ratcore::{int, rat, Rational, UniPoly};

/// The quantity a closed form claims to equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Claim {
    SCurve { flag: String },
    SPoint { flag: String, stratum: Vec<String> },
}

impl Claim {
    pub fn flag(&self) -> &str {
        match self {
            Claim::SCurve { flag } | Claim::SPoint { flag, .. } => flag,
        }
    }
}

/// A displayed closed form `numerator(u) / denominator(u)` valid on `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaFixture {
    pub id: String,
    pub location: String,
    pub kind: ConfigKind,
    pub claim: Claim,
    pub lo: Rational,
    pub hi: Rational,
    pub numerator: UniPoly,
    pub denominator: UniPoly,
    /// The text also asserts the value is at most `S_D` of the flag.
    pub bounded_by_curve: bool,
}

impl FormulaFixture {
    pub fn expected(&self, u: &Rational) -> Rational {
        self.numerator.eval(u) / self.denominator.eval(u)
    }

    pub fn display(&self) -> String {
        format!("({}) / ({})", self.numerator.display_in("u"), self.denominator.display_in("u"))
    }
}

/// One piece of a displayed piecewise function of `v`, with breakpoints
/// affine in `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfilePiece {
    pub v_lo: UniPoly,
    pub v_hi: UniPoly,
    pub poly: BiPoly,
    /// Negative-part support on the piece, for volume displays.
    pub support: Option<Vec<String>>,
}

/// A displayed `P(v)^2` table (no stratum) or `h_D(v)` table (with stratum).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileFixture {
    pub id: String,
    pub location: String,
    pub kind: ConfigKind,
    pub flag: String,
    pub stratum: Option<PointStratum>,
    pub lo: Rational,
    pub hi: Rational,
    pub pieces: Vec<ProfilePiece>,
}

fn den() -> UniPoly {
    UniPoly::from_ints(&[15, 0, -3])
}

fn den2() -> UniPoly {
    UniPoly::from_ints(&[30, 0, -6])
}

fn p(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

fn a(c: i64, cu: i64, cv: i64) -> BiPoly {
    BiPoly::affine(c, cu, cv)
}

fn m(x: &BiPoly, y: &BiPoly) -> BiPoly {
    x * y
}

fn sq(x: &BiPoly) -> BiPoly {
    x * x
}

fn over(x: BiPoly, d: i64) -> BiPoly {
    x.scale(&rat(1, d))
}

fn times(x: BiPoly, k: i64) -> BiPoly {
    x.scale(&int(k))
}

/// Breakpoint `c + cu*u`.
fn b(c: i64, cu: i64) -> UniPoly {
    UniPoly::from_ints(&[c, cu])
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

struct Builder {
    kind: ConfigKind,
    surface: &'static str,
    formulas: Vec<FormulaFixture>,
    profiles: Vec<ProfileFixture>,
}

impl Builder {
    fn new(kind: ConfigKind) -> Self {
        let surface = match kind {
            ConfigKind::A1 => "A1 surface",
            ConfigKind::TwoA1 => "2A1 surface",
            ConfigKind::A2 => "A2 surface",
        };
        Self {
            kind,
            surface,
            formulas: Vec::new(),
            profiles: Vec::new(),
        }
    }

    fn interval_tag(lo: &Rational, hi: &Rational) -> String {
        if *lo == int(1) && *hi == int(2) {
            String::new()
        } else {
            format!(", u in [{lo}, {hi}]")
        }
    }

    fn curve(&mut self, id: &str, flag: &str, range: (Rational, Rational), num: UniPoly, den: UniPoly) {
        self.formulas.push(FormulaFixture {
            id: format!("{}.{id}", self.kind),
            location: format!(
                "{} / flag {flag} / S_D({flag}){}",
                self.surface,
                Self::interval_tag(&range.0, &range.1)
            ),
            kind: self.kind,
            claim: Claim::SCurve { flag: flag.into() },
            lo: range.0,
            hi: range.1,
            numerator: num,
            denominator: den,
            bounded_by_curve: false,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn point(
        &mut self,
        id: &str,
        flag: &str,
        stratum: &[&str],
        range: (Rational, Rational),
        num: UniPoly,
        den: UniPoly,
        bounded: bool,
    ) {
        let s = PointStratum::new(stratum.iter().copied());
        let which = if stratum.len() == 1 {
            format!("general point of {flag}")
        } else {
            format!("point {s}")
        };
        self.formulas.push(FormulaFixture {
            id: format!("{}.{id}", self.kind),
            location: format!(
                "{} / flag {flag} / {which}: S(W;P){}",
                self.surface,
                Self::interval_tag(&range.0, &range.1)
            ),
            kind: self.kind,
            claim: Claim::SPoint {
                flag: flag.into(),
                stratum: names(stratum),
            },
            lo: range.0,
            hi: range.1,
            numerator: num,
            denominator: den,
            bounded_by_curve: bounded,
        });
    }

    fn volume(&mut self, id: &str, flag: &str, range: (Rational, Rational), pieces: Vec<(UniPoly, UniPoly, BiPoly, &[&str])>) {
        self.profiles.push(ProfileFixture {
            id: format!("{}.{id}", self.kind),
            location: format!(
                "{} / flag {flag} / Zariski chambers and P(v)^2{}",
                self.surface,
                Self::interval_tag(&range.0, &range.1)
            ),
            kind: self.kind,
            flag: flag.into(),
            stratum: None,
            lo: range.0,
            hi: range.1,
            pieces: pieces
                .into_iter()
                .map(|(v_lo, v_hi, poly, support)| ProfilePiece {
                    v_lo,
                    v_hi,
                    poly,
                    support: Some(names(support)),
                })
                .collect(),
        });
    }

    fn h(&mut self, id: &str, flag: &str, stratum: &[&str], range: (Rational, Rational), pieces: Vec<(UniPoly, UniPoly, BiPoly)>) {
        let s = PointStratum::new(stratum.iter().copied());
        let which = if stratum.len() == 1 {
            format!("general point of {flag}")
        } else {
            format!("point {s}")
        };
        self.profiles.push(ProfileFixture {
            id: format!("{}.{id}", self.kind),
            location: format!(
                "{} / flag {flag} / {which}: h_D(v){}",
                self.surface,
                Self::interval_tag(&range.0, &range.1)
            ),
            kind: self.kind,
            flag: flag.into(),
            stratum: Some(s),
            lo: range.0,
            hi: range.1,
            pieces: pieces
                .into_iter()
                .map(|(v_lo, v_hi, poly)| ProfilePiece {
                    v_lo,
                    v_hi,
                    poly,
                    support: None,
                })
                .collect(),
        });
    }
}

fn full() -> (Rational, Rational) {
    (int(1), int(2))
}

fn low() -> (Rational, Rational) {
    (int(1), rat(3, 2))
}

fn high() -> (Rational, Rational) {
    (rat(3, 2), int(2))
}

/// Flag E4 on a surface with an A1 point at E4 (shared by the A1 and 2A1
/// surfaces; only the last negative part differs).
fn e4_step(bd: &mut Builder, last_support: &[&str]) {
    bd.curve("e4.sd", "E4", full(), p(&[16, 3, -9, 2]), den());
    bd.point("e4.sw.generic", "E4", &["E4"], full(), p(&[9, 6, -9, 2]), den(), true);
    bd.point("e4.sw.e4-e5", "E4", &["E4", "E5"], full(), p(&[11, 0, 0, -1]), den(), false);
    bd.volume(
        "e4.vol",
        "E4",
        full(),
        vec![
            (b(0, 0), b(2, -1), &BiPoly::in_u(p(&[5, 0, -1])) - &times(sq(&a(0, 0, 1)), 2), &[]),
            (b(2, -1), b(1, 0), &(&BiPoly::in_u(p(&[9, -4])) + &(&m(&a(0, 2, 0), &a(0, 0, 1)) - &a(0, 0, 4))) - &sq(&a(0, 0, 1)), &["E5"]),
            (b(1, 0), b(3, -1), times(m(&a(2, 0, -1), &a(3, -1, -1)), 2), last_support),
        ],
    );
    let first = (b(0, 0), b(2, -1), times(sq(&a(0, 0, 1)), 2));
    bd.h(
        "e4.h.generic",
        "E4",
        &["E4"],
        full(),
        vec![
            first.clone(),
            (b(2, -1), b(1, 0), over(sq(&a(2, -1, 1)), 2)),
            (b(1, 0), b(3, -1), over(sq(&a(5, -1, -2)), 2)),
        ],
    );
    bd.h(
        "e4.h.e4-e5",
        "E4",
        &["E4", "E5"],
        full(),
        vec![
            first,
            (b(2, -1), b(1, 0), over(m(&a(2, -1, 1), &a(-2, 1, 3)), 2)),
            (b(1, 0), b(3, -1), over(m(&a(1, 1, 0), &a(5, -1, -2)), 2)),
        ],
    );
}

fn e4_special_h(bd: &mut Builder, id: &str, other: &str, last: BiPoly) {
    bd.h(
        id,
        "E4",
        &["E4", other],
        full(),
        vec![
            (b(0, 0), b(2, -1), times(sq(&a(0, 0, 1)), 2)),
            (b(2, -1), b(1, 0), over(sq(&a(2, -1, 1)), 2)),
            (b(1, 0), b(3, -1), last),
        ],
    );
}

/// Flag E5 next to the A1 point E4.
fn e5_step(bd: &mut Builder) {
    bd.curve("e5.sd", "E5", full(), p(&[11, 0, 0, -1]), den());
    bd.point("e5.sw.generic", "E5", &["E5"], full(), p(&[21, 6, -18, 5]), den2(), true);
    bd.point("e5.sw.e5-c2", "E5", &["E5", "C2"], full(), p(&[45, -30, 0, 2]), den2(), true);
    bd.point("e5.sw.e5-l45", "E5", &["E5", "L45"], full(), p(&[26, 0, -12, 3]), den2(), true);
    let v = a(0, 0, 1);
    let v2 = sq(&v);
    bd.volume(
        "e5.vol",
        "E5",
        full(),
        vec![
            (
                b(0, 0),
                b(1, 0),
                &(&BiPoly::in_u(p(&[5, 0, -1])) - &times(v.clone(), 4)) + &(&m(&a(0, 2, 0), &v) - &over(v2.clone(), 2)),
                &["E4"],
            ),
            (
                b(1, 0),
                b(0, 1),
                &(&BiPoly::in_u(p(&[6, 0, -1])) - &times(v.clone(), 6)) + &(&over(v2.clone(), 2) + &m(&a(0, 2, 0), &v)),
                &["E4", "L45"],
            ),
            (b(0, 1), b(2, 0), over(times(sq(&a(2, 0, -1)), 3), 2), &["E4", "L45", "C2"]),
        ],
    );
    let p0 = (b(0, 0), b(1, 0), over(sq(&a(4, -2, 1)), 8));
    let p1 = (b(1, 0), b(0, 1), over(sq(&a(6, -2, -1)), 8));
    bd.h("e5.h.generic", "E5", &["E5"], full(), vec![p0.clone(), p1.clone(), (b(0, 1), b(2, 0), over(sq(&a(6, 0, -3)), 8))]);
    bd.h(
        "e5.h.e5-c2",
        "E5",
        &["E5", "C2"],
        full(),
        vec![p0.clone(), p1, (b(0, 1), b(2, 0), over(times(m(&a(2, 0, -1), &a(6, -4, 1)), 3), 8))],
    );
    bd.h(
        "e5.h.e5-l45",
        "E5",
        &["E5", "L45"],
        full(),
        vec![
            p0,
            (b(1, 0), b(0, 1), over(m(&a(6, -2, -1), &a(2, -2, 3)), 8)),
            (b(0, 1), b(2, 0), over(times(m(&a(2, 0, -1), &a(2, 0, 1)), 3), 8)),
        ],
    );
}

/// Flag L14 for `u` in `[1, 3/2]` and `[3/2, 2]`.
fn l14_steps(bd: &mut Builder) {
    let v = a(0, 0, 1);
    let v2 = sq(&v);
    let vol_first = &(&BiPoly::in_u(p(&[5, 0, -1])) - &times(v.clone(), 2)) - &over(v2.clone(), 2);
    let vol_second = &(&BiPoly::in_u(p(&[9, -4])) - &times(v.clone(), 6)) + &(&over(v2.clone(), 2) + &m(&a(0, 2, 0), &v));
    let vol_last = times(sq(&a(-3, 1, 1)), 2);

    bd.curve("l14.sd.low", "L14", low(), p(&[13, 6, -12, 3]), den());
    bd.point("l14.sw.generic.low", "L14", &["L14"], low(), p(&[21, -6, 0, -1]), den2(), true);
    bd.point("l14.sw.l14-e1.low", "L14", &["L14", "E1"], low(), p(&[19, 0, 0, -2]), den2(), false);
    bd.point("l14.sw.l14-l23.low", "L14", &["L14", "L23"], low(), p(&[26, 0, -12, 3]), den2(), true);
    bd.volume(
        "l14.vol.low",
        "L14",
        low(),
        vec![
            (b(0, 0), b(2, -1), vol_first.clone(), &["E4"]),
            (b(2, -1), b(1, 0), vol_second.clone(), &["E4", "E1"]),
            (b(1, 0), b(4, -2), over(m(&a(-2, 0, 1), &a(-10, 4, 3)), 2), &["E4", "E1", "L23"]),
            (b(4, -2), b(3, -1), vol_last.clone(), &["E1", "E4", "L23", "E5"]),
        ],
    );
    let h0 = (b(0, 0), b(2, -1), over(sq(&a(2, 0, 1)), 8));
    let h1 = over(sq(&a(6, -2, -1)), 8);
    bd.h(
        "l14.h.generic.low",
        "L14",
        &["L14"],
        low(),
        vec![
            h0.clone(),
            (b(2, -1), b(1, 0), h1.clone()),
            (b(1, 0), b(4, -2), over(sq(&a(8, -2, -3)), 8)),
            (b(4, -2), b(3, -1), times(sq(&a(3, -1, -1)), 2)),
        ],
    );
    bd.h(
        "l14.h.l14-e1.low",
        "L14",
        &["L14", "E1"],
        low(),
        vec![
            h0.clone(),
            (b(2, -1), b(1, 0), over(m(&a(6, -2, -1), &a(-2, 2, 3)), 8)),
            (b(1, 0), b(4, -2), over(m(&a(8, -2, -3), &a(0, 2, 1)), 8)),
            (b(4, -2), b(3, -1), a(3, -1, -1)),
        ],
    );
    bd.h(
        "l14.h.l14-l23.low",
        "L14",
        &["L14", "L23"],
        low(),
        vec![
            h0.clone(),
            (b(2, -1), b(1, 0), h1.clone()),
            (b(1, 0), b(4, -2), over(m(&a(8, -2, -3), &a(4, -2, 1)), 8)),
            (b(4, -2), b(3, -1), times(m(&a(2, -1, 0), &a(3, -1, -1)), 2)),
        ],
    );

    bd.curve("l14.sd.high", "L14", high(), p(&[13, 6, -12, 3]), den());
    bd.point("l14.sw.generic.high", "L14", &["L14"], high(), p(&[-6, 48, -36, 7]), den2(), true);
    bd.point("l14.sw.l14-e1.high", "L14", &["L14", "E1"], high(), p(&[-4, 27, -18, 3]), den(), false);
    bd.point("l14.sw.l14-l23.high", "L14", &["L14", "L23"], high(), p(&[26, 0, -12, 3]), den2(), true);
    let vol_third = &(&BiPoly::in_u(p(&[17, -12, 2])) + &m(&a(0, 4, 0), &v)) + &(&v2 - &times(v.clone(), 10));
    bd.volume(
        "l14.vol.high",
        "L14",
        high(),
        vec![
            (b(0, 0), b(2, -1), vol_first, &["E4"]),
            (b(2, -1), b(4, -2), vol_second, &["E4", "E1"]),
            (b(4, -2), b(1, 0), vol_third, &["E1", "E4", "E5"]),
            (b(1, 0), b(3, -1), vol_last, &["E1", "E4", "E5", "L23"]),
        ],
    );
    let h2 = over(sq(&a(5, -2, -1)), 2);
    bd.h(
        "l14.h.generic.high",
        "L14",
        &["L14"],
        high(),
        vec![
            h0.clone(),
            (b(2, -1), b(4, -2), h1.clone()),
            (b(4, -2), b(1, 0), h2.clone()),
            (b(1, 0), b(3, -1), times(sq(&a(3, -1, -1)), 2)),
        ],
    );
    bd.h(
        "l14.h.l14-e1.high",
        "L14",
        &["L14", "E1"],
        high(),
        vec![
            h0.clone(),
            (b(2, -1), b(4, -2), over(m(&a(6, -2, -1), &a(-2, 2, 3)), 8)),
            (b(4, -2), b(1, 0), over(m(&a(1, 0, 1), &a(5, -2, -1)), 2)),
            (b(1, 0), b(3, -1), times(a(3, -1, -1), 2)),
        ],
    );
    bd.h(
        "l14.h.l14-l23.high",
        "L14",
        &["L14", "L23"],
        high(),
        vec![
            h0,
            (b(2, -1), b(4, -2), h1),
            (b(4, -2), b(1, 0), h2),
            (b(1, 0), b(3, -1), times(m(&a(2, -1, 0), &a(3, -1, -1)), 2)),
        ],
    );
}

fn build(kind: ConfigKind) -> Builder {
    let mut bd = Builder::new(kind);
    match kind {
        ConfigKind::A1 => {
            e4_step(&mut bd, &["E5", "L14", "L24", "L34"]);
            for other in ["L14", "L24", "L34"] {
                let tag = other.to_lowercase();
                bd.point(
                    &format!("e4.sw.e4-{tag}"),
                    "E4",
                    &["E4", other],
                    full(),
                    p(&[13, 6, -12, 3]),
                    den(),
                    true,
                );
                e4_special_h(
                    &mut bd,
                    &format!("e4.h.e4-{tag}"),
                    other,
                    over(m(&a(3, -1, 0), &a(5, -1, -2)), 2),
                );
            }
            e5_step(&mut bd);
            l14_steps(&mut bd);
        }
        ConfigKind::TwoA1 => {
            e4_step(&mut bd, &["E5", "L14", "L24", "E2"]);
            // one display covers both incidences
            for other in ["L14", "L24"] {
                let tag = other.to_lowercase();
                bd.point(
                    &format!("e4.sw.e4-{tag}"),
                    "E4",
                    &["E4", other],
                    full(),
                    p(&[8, 0, -6, 2]),
                    den(),
                    true,
                );
                e4_special_h(
                    &mut bd,
                    &format!("e4.h.e4-{tag}"),
                    other,
                    over(m(&a(5, -1, -2), &a(1, -1, 2)), 2),
                );
            }
            e5_step(&mut bd);
            bd.curve("l24.sd", "L24", full(), p(&[17, 6, -15, 4]), den());
            bd.point("l24.sw.generic", "L24", &["L24"], full(), p(&[5, 6, -6, 1]), den(), true);
            bd.volume(
                "l24.vol",
                "L24",
                full(),
                vec![
                    (b(0, 0), b(4, -2), &BiPoly::in_u(p(&[5, 0, -1])) - &times(a(0, 0, 1), 2), &["E2", "E4"]),
                    (b(4, -2), b(3, -1), m(&a(-3, 1, 1), &a(-7, 3, 1)), &["E2", "E4", "E3", "E5"]),
                ],
            );
            bd.h(
                "l24.h.generic",
                "L24",
                &["L24"],
                full(),
                vec![
                    (b(0, 0), b(4, -2), BiPoly::constant(rat(1, 2))),
                    (b(4, -2), b(3, -1), over(sq(&a(5, -2, -1)), 2)),
                ],
            );
            l14_steps(&mut bd);
        }
        ConfigKind::A2 => {
            bd.curve("e4.sd", "E4", full(), p(&[19, 0, -6, 1]), den());
            bd.point("e4.sw.generic", "E4", &["E4"], full(), p(&[21, 6, -18, 5]), den2(), true);
            let v = a(0, 0, 1);
            let v2 = sq(&v);
            bd.volume(
                "e4.vol",
                "E4",
                full(),
                vec![
                    (b(0, 0), b(2, -1), &BiPoly::in_u(p(&[5, 0, -1])) - &over(times(v2.clone(), 3), 2), &["E3"]),
                    (
                        b(2, -1),
                        b(1, 0),
                        &(&BiPoly::in_u(p(&[9, -4])) - &times(v.clone(), 4)) + &(&m(&a(0, 2, 0), &v) - &over(v2, 2)),
                        &["E3", "E5"],
                    ),
                    (b(1, 0), b(2, 0), over(m(&a(-2, 0, 1), &a(-10, 4, 1)), 2), &["E3", "E5", "L34"]),
                ],
            );
            bd.h(
                "e4.h.generic",
                "E4",
                &["E4"],
                full(),
                vec![
                    (b(0, 0), b(2, -1), over(times(sq(&v), 9), 8)),
                    (b(2, -1), b(1, 0), over(sq(&a(4, -2, 1)), 8)),
                    (b(1, 0), b(2, 0), over(sq(&a(6, -2, -1)), 8)),
                ],
            );
        }
    }
    bd
}

/// Every displayed closed form for `S_D` and `S(W;P)` on the configuration.
pub fn formula_fixtures(kind: ConfigKind) -> Vec<FormulaFixture> {
    build(kind).formulas
}

/// Every displayed `P(v)^2` and `h_D(v)` table on the configuration.
pub fn profile_fixtures(kind: ConfigKind) -> Vec<ProfileFixture> {
    build(kind).profiles
}
