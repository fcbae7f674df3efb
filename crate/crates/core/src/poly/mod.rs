//! Exact arithmetic substrate: sparse Laurent polynomials over big rationals,
//! rational functions with factored denominators, and the quadratic surd
//! extension used for HOMFLY-PT.

mod json;
mod laurent;
mod monomial;
mod ratfun;
mod surd;

pub use json::PolyJson;
pub use laurent::{rat, MultiLaurent};
pub use monomial::{Monomial, Var, NUM_VARS};
pub use ratfun::{scaled_var, substitute_laurent, Denominator, Factor, FactoredRational};
pub use surd::{surd_square, SurdElement};
