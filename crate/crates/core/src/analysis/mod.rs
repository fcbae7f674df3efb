//! Numerics on top of the invariants: higher twist numbers of the Jones
//! polynomial and their normalised ratios, the relative-volume bound curves,
//! and statistics of normalised Khovanov ranks.

mod bounds;
mod stats;
mod twist;

pub use bounds::{volume_bound_curves, BoundCurves, VolumeBounds, V_OCT, V_TET};
pub use stats::{format_sig, normal_pdf, rank_stats, RankStats};
pub use twist::{twist_numbers, twist_ratio, TwistProfile, TwistRatio};
