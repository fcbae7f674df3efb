//! The Hecke algebra `H_{n+1}(q)` in the basis `β^l = u_1^{l_1} ⋯ u_n^{l_n}`,
//! where `u_i^j = T_i T_{i-1} ⋯ T_{i-j+1}`.
//!
//! Products are only defined with a left factor supported on the `M` index
//! set (every `l_j ∈ {0, 1}`); that is all the braid pipelines need, and a
//! general product is obtained by chaining such factors.

mod algebra;
mod element;
mod index;
mod power;

pub use algebra::{HeckeAlgebra, LinComb};
pub use element::{HeckeElement, HeckeElementJson, TracePoly};
pub use index::HeckeIndex;
pub use power::{generator_power, pk_poly};
