//! Combinatorial models of the singular degree-4 del Pezzo fibers: Picard
//! lattice, negative curves, dual graphs, point strata and the reference
//! delta tables.

mod config;
mod lattice;
mod ramification;
mod strata;

pub use config::{
    build_config, validate_config, ConfigFile, ConfigKind, CurveEntry, EdgeEntry, NegativeCurve,
    SurfaceConfig, Violation,
};
pub use lattice::{DivClass, Lattice};
pub use ramification::ramification_index;
pub use strata::{delta_reference, enumerate_strata, DeltaEntry, Pattern, PointStratum};
