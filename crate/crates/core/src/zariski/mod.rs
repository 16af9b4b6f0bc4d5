//! Zariski decomposition on a configuration, its chamber structure along a
//! flag direction, and the resulting volume profiles.

mod chamber;
mod decompose;
mod volume;

pub use chamber::{chamber_walk, VChamber};
pub use decompose::{decompose, ZariskiResult};
pub use volume::{volume_profile, VolumeProfile};
