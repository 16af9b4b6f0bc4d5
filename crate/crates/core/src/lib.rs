//! Exact verification engine for a K-stability argument on the blowup of
//! P^1 x P^2 along a smooth rational curve `C` with `H1.C = 5` and
//! `H2.C = 2`, fibered over P^1 in quartic del Pezzo surfaces.
//!
//! Every quantity is computed with exact rationals: Zariski chambers on the
//! singular del Pezzo fibers, volume profiles, flag invariants, the threefold
//! volume integral and the final certificate inequality.

pub mod error;
pub mod fano35;
pub mod flagdelta;
pub mod picard;
pub mod ratcore;
pub mod report;
pub mod zariski;

pub use error::{Error, Interval, Mismatch, Result};
pub use fano35::{
    a2_counter_check, certificate, certificate_value, fiber_integrals, pu_volume, s_anticanonical,
    s_threefold_fiber, s_w_exact, triple, A2Report, CertificateReport, Endpoints, ThreefoldClass,
};
pub use flagdelta::{
    corollary_bound, delta_point_bound, f_certificate, h_profile, s_curve, s_point,
    verify_formula_table, DeltaBound, FormulaFixture, TableReport,
};
pub use picard::{
    build_config, delta_reference, ramification_index, validate_config, ConfigKind, DivClass,
    Lattice, NegativeCurve, PointStratum, SurfaceConfig,
};
pub use ratcore::{
    interpolate, isolate_root, poly_defint, pw_integrate, PiecewisePoly, Rational, RootCertificate,
    UniPoly,
};
pub use report::{FixtureOutcome, Gate, SampleRecord, Verdict};
pub use zariski::{chamber_walk, decompose, volume_profile, VChamber, VolumeProfile, ZariskiResult};
