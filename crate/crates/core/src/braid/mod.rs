//! Braid words, the representation `ρ: B_{n+1} → H_{n+1}(q)` with `ρ(σ_i) = T_i`,
//! and the closed-form recursion for weaving braids.

mod weaving;
mod word;

pub use weaving::{
    trace_degree_bounds, weaving_braid, weaving_hecke, weaving_trace, weaving_trace_with,
    WeavingHecke, WeavingRecursion, WeavingSpec,
};
pub use word::{braid_to_hecke, braid_to_hecke_with, braid_trace, BraidWord};
