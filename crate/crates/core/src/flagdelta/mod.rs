//! Flag invariants on the fiber surface: `S_D(C)`, `h_D(v)`, `S(W^C; P)`,
//! the resulting delta bounds, and the transcribed closed-form fixtures.

mod bipoly;
mod bounds;
mod fixtures;
mod svalues;
mod verify;

pub use bipoly::BiPoly;
pub use bounds::{
    branch_one, branch_two, corollary_bound, delta_point_bound, f_certificate, flag_for, DeltaBound,
};
pub use fixtures::{formula_fixtures, profile_fixtures, Claim, FormulaFixture, ProfileFixture, ProfilePiece};
pub use svalues::{d_squared, h_profile, s_curve, s_point};
pub use verify::{default_grid, u_grid, verify_formula_table, TableReport, MIN_SAMPLES};
