//! Inputs shared by the benchmarks.

use fano35_core::ratcore::rat;
use fano35_core::{build_config, ConfigKind, DivClass, PointStratum, Rational, SurfaceConfig};

pub struct Case {
    pub cfg: SurfaceConfig,
    pub u: Rational,
    pub flag: &'static str,
    pub stratum: PointStratum,
}

/// The E4 flag on the A1 surface at `u = 3/2`, through E4 and E5.
pub fn a1_e4() -> Case {
    Case {
        cfg: build_config(ConfigKind::A1),
        u: rat(3, 2),
        flag: "E4",
        stratum: PointStratum::new(["E4", "E5"]),
    }
}

/// `D(u) - vF` deep enough to have a four-curve negative part.
pub fn deep_class(case: &Case) -> DivClass {
    case.cfg
        .polarization(&case.u)
        .expect("u in range")
        .add_scaled(&case.cfg.curve(case.flag).expect("flag").class, &-rat(5, 4))
}
