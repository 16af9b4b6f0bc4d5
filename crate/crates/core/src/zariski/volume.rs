use num_traits::Zero;
use serde::Serialize;

use super::chamber::{chamber_walk, VChamber};
use super::decompose::decompose;
use crate::error::{Error, Mismatch, Result};
use crate::picard::SurfaceConfig;
use crate::ratcore::{interpolate, rat, serde_rational, Piece, PiecewisePoly, Rational};

/// `vol(D(u) - vF)` for `v` in `[0, tau]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeProfile {
    #[serde(skip)]
    pub profile: PiecewisePoly,
    #[serde(with = "serde_rational")]
    pub tau: Rational,
    pub chambers: Vec<VChamber>,
}

impl VolumeProfile {
    pub fn integral(&self) -> Rational {
        self.profile.integrate()
    }
}

/// Builds each piece by interpolating pointwise decompositions (three
/// samples plus one check), then cross-checks against the chamber's affine
/// data.
pub fn volume_profile(cfg: &SurfaceConfig, u: &Rational, flag: &str) -> Result<VolumeProfile> {
    let chambers = chamber_walk(cfg, u, flag)?;
    let d = cfg.polarization(u)?;
    let f = &cfg.curve(flag)?.class;
    let mut pieces = Vec::with_capacity(chambers.len());
    for ch in &chambers {
        let width = &ch.v_hi - &ch.v_lo;
        let samples = (1..=4)
            .map(|k| {
                let v = &ch.v_lo + &width * rat(k, 5);
                let z = decompose(cfg, &d.add_scaled(f, &-&v))?;
                Ok((v, z.volume(cfg)))
            })
            .collect::<Result<Vec<_>>>()?;
        let poly = interpolate(&samples, 2)?;
        let symbolic = ch.volume_poly(cfg);
        if poly != symbolic {
            let x = ch.v_lo.clone();
            return Err(Error::VerificationFailure(Box::new(Mismatch {
                expected: symbolic.eval(&x),
                actual: poly.eval(&x),
                x,
            })));
        }
        pieces.push(Piece {
            lo: ch.v_lo.clone(),
            hi: ch.v_hi.clone(),
            poly,
        });
    }
    let profile = PiecewisePoly::new(pieces)?;
    profile.assert_continuous()?;
    let tau = profile.hi().clone();
    let end = profile.eval(&tau).unwrap_or_else(Rational::zero);
    if !end.is_zero() {
        return Err(Error::MalformedPiecewise(format!("volume at tau = {tau} is {end}, not 0")));
    }
    Ok(VolumeProfile {
        profile,
        tau,
        chambers,
    })
}
