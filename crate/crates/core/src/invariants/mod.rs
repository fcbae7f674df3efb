//! From the trace to knot invariants: the two-variable skein value and its
//! Alexander, Jones and HOMFLY-PT specialisations, and rational Khovanov ranks
//! of alternating weaving knots.

mod display;
mod half;
mod homfly;
mod khovanov;
mod skein;
mod specialize;

pub use half::HalfLaurent;
pub use homfly::{homfly, homfly_of, HomflyPoly};
pub use khovanov::{khovanov, khovanov_from_jones, khovanov_of, KhovanovTable};
pub use skein::{ClosureTrace, SkeinValue};
pub use specialize::{
    alexander, alexander_of, alexander_of_faithful, jones, jones_of, jones_of_braid,
};
