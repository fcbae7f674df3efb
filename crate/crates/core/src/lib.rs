//! Exact computation of the Ocneanu trace on Hecke algebra representations of
//! braids, specialised for weaving braids, and the knot invariants built on
//! top of it: Alexander, Jones and HOMFLY-PT polynomials, rational Khovanov
//! rank tables, higher twist numbers and normalized rank statistics.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: big-rational Laurent polynomials, factored rational functions
//!   and the quadratic surd ring used by the HOMFLY-PT pipeline.
//! * [`hecke`]: basis indexing of `H_{n+1}(q)`, products and the trace.
//! * [`braid`]: braid words, the representation `ρ` and the weaving recursion.
//! * [`invariants`]: substitution pipelines from the trace to knot invariants.
//! * [`analysis`]: twist numbers, volume-bound curves and rank statistics.

pub mod analysis;
pub mod braid;
pub mod error;
pub mod hecke;
pub mod invariants;
pub mod poly;

pub use analysis::{RankStats, TwistProfile, TwistRatio, VolumeBounds};
pub use braid::{BraidWord, WeavingSpec};
pub use error::{Error, ErrorKind, Result};
pub use hecke::{HeckeAlgebra, HeckeElement, HeckeIndex, TracePoly};
pub use invariants::{ClosureTrace, HalfLaurent, HomflyPoly, KhovanovTable, SkeinValue};

pub use poly::{Factor, FactoredRational, Monomial, MultiLaurent, PolyJson, SurdElement, Var};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
