use serde::Serialize;

use super::svalues::{s_curve, s_point};
use crate::error::{Error, Result};
use crate::picard::{delta_reference, enumerate_strata, ConfigKind, PointStratum, SurfaceConfig};
use crate::ratcore::{int, min_rat, rat, serde_rational, Rational, UniPoly};

/// Lower and upper estimates for `delta_P(T, D)` from one flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaBound {
    pub stratum: String,
    pub flag: String,
    #[serde(with = "serde_rational")]
    pub u: Rational,
    #[serde(with = "serde_rational")]
    pub s_curve: Rational,
    #[serde(with = "serde_rational")]
    pub s_point: Rational,
    #[serde(with = "serde_rational")]
    pub lower: Rational,
    #[serde(with = "serde_rational")]
    pub upper: Rational,
}

/// Flag curves used by the case analysis, in priority order. Symmetric
/// curves (e.g. L24 and L34 next to L14) are used directly instead of being
/// moved onto their representative.
fn flag_priority(kind: ConfigKind) -> &'static [&'static str] {
    match kind {
        ConfigKind::A1 => &["E4", "E5", "L14", "L24", "L34"],
        ConfigKind::TwoA1 => &["E2", "E4", "E3", "E5", "L24", "L12", "L14"],
        ConfigKind::A2 => &["E4"],
    }
}

/// The flag the case analysis assigns to a stratum.
pub fn flag_for(cfg: &SurfaceConfig, stratum: &PointStratum) -> Result<String> {
    stratum.validate(cfg)?;
    if cfg.kind == ConfigKind::A2 && (stratum.contains("L34") || stratum.contains("E5")) {
        return Err(Error::NoFlagAssigned(stratum.to_string()));
    }
    flag_priority(cfg.kind)
        .iter()
        .find(|f| stratum.contains(f))
        .map(|f| f.to_string())
        .ok_or_else(|| Error::NoFlagAssigned(stratum.to_string()))
}

/// `lower = min(1/S_D(F), 1/S(W^F; P))`, `upper = 1/S_D(F)`.
pub fn delta_point_bound(cfg: &SurfaceConfig, stratum: &PointStratum, u: &Rational) -> Result<DeltaBound> {
    let flag = flag_for(cfg, stratum)?;
    let sc = s_curve(cfg, &flag, u)?;
    let sp = s_point(cfg, &flag, stratum, u)?;
    let upper = sc.recip();
    let lower = min_rat(&upper, &sp.recip());
    Ok(DeltaBound {
        stratum: stratum.to_string(),
        flag,
        u: u.clone(),
        s_curve: sc,
        s_point: sp,
        lower,
        upper,
    })
}

fn denominator() -> UniPoly {
    UniPoly::from_ints(&[15, 0, -3])
}

/// `(15 - 3u^2) / (16 + 3u - 9u^2 + 2u^3)`.
pub fn branch_one(u: &Rational) -> Rational {
    denominator().eval(u) / UniPoly::from_ints(&[16, 3, -9, 2]).eval(u)
}

/// `(15 - 3u^2) / (11 - u^3)`.
pub fn branch_two(u: &Rational) -> Rational {
    denominator().eval(u) / UniPoly::from_ints(&[11, 0, 0, -1]).eval(u)
}

/// The certificate function: the first branch up to the root `a` of
/// `3u^3 - 9u^2 + 3u + 5`, the second after it. Branch one is the smaller
/// exactly when that cubic is non-negative, so taking the minimum of both
/// branches is the same function and needs no approximation of `a`.
pub fn f_certificate(u: &Rational) -> Result<Rational> {
    if *u < int(1) || *u > int(2) {
        return Err(Error::OutOfRange(format!("u = {u} outside [1, 2]")));
    }
    Ok(min_rat(&branch_one(u), &branch_two(u)))
}

/// Minimum of the lower bounds over every stratum with reference delta at
/// most 6/5.
pub fn corollary_bound(cfg: &SurfaceConfig, u: &Rational) -> Result<Rational> {
    let cap = rat(6, 5);
    let mut best: Option<Rational> = None;
    for s in enumerate_strata(cfg) {
        if delta_reference(cfg, &s)? > cap {
            continue;
        }
        let b = delta_point_bound(cfg, &s, u)?;
        best = Some(match best {
            Some(x) => min_rat(&x, &b.lower),
            None => b.lower,
        });
    }
    best.ok_or_else(|| Error::NoFlagAssigned("no stratum with reference delta <= 6/5".to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::build_config;

    fn st(names: &[&str]) -> PointStratum {
        PointStratum::new(names.iter().copied())
    }

    #[test]
    fn bound_examples() {
        let a1 = build_config(ConfigKind::A1);
        let b = delta_point_bound(&a1, &st(&["E4", "E5"]), &rat(3, 2)).unwrap();
        assert_eq!(b.flag, "E4");
        assert_eq!(b.lower, rat(66, 61));
        for u in [int(1), rat(5, 4), rat(7, 4), int(2)] {
            let b = delta_point_bound(&a1, &st(&["E4"]), &u).unwrap();
            assert_eq!(b.lower, b.upper);
            assert_eq!(b.upper, branch_one(&u));
        }
        let two = build_config(ConfigKind::TwoA1);
        let b = delta_point_bound(&two, &st(&["L24"]), &int(1)).unwrap();
        assert_eq!(b.flag, "L24");
        // 1/S(W; P) = 2 at u = 1, but the curve term caps both bounds at 1
        assert_eq!(b.s_point.recip(), int(2));
        assert_eq!(b.lower, int(1));
        assert_eq!(b.upper, int(1));
    }

    #[test]
    fn lower_never_exceeds_upper() {
        for kind in [ConfigKind::A1, ConfigKind::TwoA1] {
            let cfg = build_config(kind);
            for s in enumerate_strata(&cfg) {
                if let Ok(b) = delta_point_bound(&cfg, &s, &rat(13, 8)) {
                    assert!(b.lower <= b.upper);
                }
            }
        }
    }

    #[test]
    fn flag_assignment() {
        let a1 = build_config(ConfigKind::A1);
        assert_eq!(flag_for(&a1, &st(&["E1", "L14"])).unwrap(), "L14");
        assert_eq!(flag_for(&a1, &st(&["E4", "L14"])).unwrap(), "E4");
        assert!(matches!(flag_for(&a1, &st(&[])), Err(Error::NoFlagAssigned(_))));
        let a2 = build_config(ConfigKind::A2);
        assert_eq!(flag_for(&a2, &st(&["E3", "E4"])).unwrap(), "E4");
        assert!(flag_for(&a2, &st(&["E4", "E5"])).is_err());
    }

    #[test]
    fn certificate_function() {
        assert_eq!(f_certificate(&int(1)).unwrap(), int(1));
        assert_eq!(f_certificate(&int(2)).unwrap(), int(1));
        assert_eq!(f_certificate(&rat(1354, 1000)).unwrap(), branch_one(&rat(1354, 1000)));
        assert_eq!(f_certificate(&rat(1357, 1000)).unwrap(), branch_two(&rat(1357, 1000)));
        assert!(f_certificate(&rat(1, 2)).is_err());
        // the branch denominators differ by the defining cubic of a
        let diff = &UniPoly::from_ints(&[16, 3, -9, 2]) - &UniPoly::from_ints(&[11, 0, 0, -1]);
        assert_eq!(diff, UniPoly::from_ints(&[5, 3, -9, 3]));
    }

    #[test]
    fn corollary_examples() {
        let a1 = build_config(ConfigKind::A1);
        assert_eq!(corollary_bound(&a1, &int(1)).unwrap(), int(1));
        let u = rat(5, 4);
        assert_eq!(corollary_bound(&a1, &u).unwrap(), branch_one(&u));
        let two = build_config(ConfigKind::TwoA1);
        let u = rat(7, 4);
        assert_eq!(corollary_bound(&two, &u).unwrap(), branch_two(&u));
        assert_eq!(branch_two(&u), (int(15) - rat(147, 16)) / (int(11) - rat(343, 64)));
    }
}
