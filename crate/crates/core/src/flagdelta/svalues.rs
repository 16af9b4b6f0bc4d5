use crate::error::{Error, Result};
use crate::picard::{PointStratum, SurfaceConfig};
use crate::ratcore::{int, rat, Piece, PiecewisePoly, Rational, UniPoly};
use crate::zariski::volume_profile;

/// `D(u)^2`: 4 on `[0, 1]`, `5 - u^2` on `[1, 2]`.
pub fn d_squared(cfg: &SurfaceConfig, u: &Rational) -> Result<Rational> {
    let d = cfg.polarization(u)?;
    Ok(cfg.dot(&d, &d))
}

/// `S_D(F) = (1/D^2) * integral of vol(D - vF) over [0, tau]`.
pub fn s_curve(cfg: &SurfaceConfig, flag: &str, u: &Rational) -> Result<Rational> {
    let vp = volume_profile(cfg, u, flag)?;
    Ok(vp.integral() / d_squared(cfg, u)?)
}

/// `h(v) = (P.F) * (N.F)_P + (P.F)^2 / 2`, where `(N.F)_P` only counts the
/// negative curves through the point.
pub fn h_profile(cfg: &SurfaceConfig, flag: &str, stratum: &PointStratum, u: &Rational) -> Result<PiecewisePoly> {
    stratum.validate(cfg)?;
    if !stratum.contains(flag) {
        return Err(Error::StratumNotOnFlag {
            stratum: stratum.to_string(),
            flag: flag.to_string(),
        });
    }
    let f = &cfg.curve(flag)?.class;
    let vp = volume_profile(cfg, u, flag)?;
    let half = UniPoly::constant(rat(1, 2));
    let mut pieces = Vec::with_capacity(vp.chambers.len());
    for ch in &vp.chambers {
        let pc = ch.dot_poly(cfg, f);
        let mut local = UniPoly::zero();
        for (name, _, _) in &ch.n_coeffs {
            if name == flag || !stratum.contains(name) {
                continue;
            }
            let w = cfg.dot(&cfg.curve(name)?.class, f);
            local = &local + &ch.n_poly(name).scale(&w);
        }
        let poly = &(&pc * &local) + &(&(&pc * &pc) * &half);
        let degree = poly.degree().unwrap_or(0);
        if degree > 2 {
            return Err(Error::DegreeBound {
                what: format!("h on [{}, {}]", ch.v_lo, ch.v_hi),
                degree,
                bound: 2,
            });
        }
        pieces.push(Piece {
            lo: ch.v_lo.clone(),
            hi: ch.v_hi.clone(),
            poly,
        });
    }
    PiecewisePoly::new(pieces)
}

/// `S(W^F; P) = (2/D^2) * integral of h`.
pub fn s_point(cfg: &SurfaceConfig, flag: &str, stratum: &PointStratum, u: &Rational) -> Result<Rational> {
    let h = h_profile(cfg, flag, stratum, u)?;
    Ok(h.integrate() * int(2) / d_squared(cfg, u)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{build_config, ConfigKind};


    fn st(names: &[&str]) -> PointStratum {
        PointStratum::new(names.iter().copied())
    }

    #[test]
    fn curve_values() {
        let a1 = build_config(ConfigKind::A1);
        assert_eq!(s_curve(&a1, "E4", &rat(3, 2)).unwrap(), rat(28, 33));
        assert_eq!(s_curve(&a1, "E5", &int(1)).unwrap(), rat(5, 6));
        let a2 = build_config(ConfigKind::A2);
        assert_eq!(s_curve(&a2, "E4", &int(2)).unwrap(), int(1));
    }

    #[test]
    fn point_values() {
        let a1 = build_config(ConfigKind::A1);
        assert_eq!(s_point(&a1, "E4", &st(&["E4"]), &int(1)).unwrap(), rat(2, 3));
        assert_eq!(s_point(&a1, "E4", &st(&["E4", "E5"]), &rat(3, 2)).unwrap(), rat(61, 66));
        assert_eq!(s_point(&a1, "E4", &st(&["E4", "L14"]), &int(1)).unwrap(), rat(5, 6));
    }

    #[test]
    fn h_pieces_for_generic_point() {
        let a1 = build_config(ConfigKind::A1);
        let u = rat(5, 4);
        let h = h_profile(&a1, "E4", &st(&["E4"]), &u).unwrap();
        let p = h.pieces();
        // 2v^2, (2-u+v)^2/2, (5-u-2v)^2/2
        assert_eq!(p[0].poly, UniPoly::from_ints(&[0, 0, 2]));
        let t = int(2) - &u;
        assert_eq!(p[1].poly, UniPoly::new(vec![&t * &t / int(2), t.clone(), rat(1, 2)]));
        let s = int(5) - &u;
        assert_eq!(p[2].poly, UniPoly::new(vec![&s * &s / int(2), -&s * int(2), int(2)]));
    }

    #[test]
    fn empty_negative_part_gives_half_square() {
        let a1 = build_config(ConfigKind::A1);
        let h = h_profile(&a1, "L12", &st(&["L12"]), &int(1)).unwrap();
        let vp = volume_profile(&a1, &int(1), "L12").unwrap();
        let ch = &vp.chambers[0];
        assert!(ch.n_coeffs.is_empty());
        let pc = ch.dot_poly(&a1, &a1.curve("L12").unwrap().class);
        assert_eq!(h.pieces()[0].poly, (&pc * &pc).scale(&rat(1, 2)));
    }

    #[test]
    fn stratum_must_lie_on_flag() {
        let a1 = build_config(ConfigKind::A1);
        assert!(matches!(
            h_profile(&a1, "E4", &st(&["E5"]), &int(1)),
            Err(Error::StratumNotOnFlag { .. })
        ));
    }

    #[test]
    fn integral_identity() {
        let cfg = build_config(ConfigKind::TwoA1);
        let u = rat(11, 8);
        let s = st(&["E4", "L24"]);
        let h = h_profile(&cfg, "E4", &s, &u).unwrap();
        let sp = s_point(&cfg, "E4", &s, &u).unwrap();
        assert_eq!(h.integrate(), sp * d_squared(&cfg, &u).unwrap() / int(2));
    }
}
