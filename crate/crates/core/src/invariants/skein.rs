use crate::braid::{braid_trace, weaving_trace_with, BraidWord, WeavingSpec};
use crate::error::Result;
use crate::hecke::{HeckeAlgebra, TracePoly};
use crate::poly::{Factor, FactoredRational, Monomial, MultiLaurent, Var};

/// The trace of `ρ(α)` together with what the prefactor needs from `α`:
/// the generator count `n` and the exponent sum `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub trace: TracePoly,
    pub n: usize,
    pub e: i64,
}

impl ClosureTrace {
    pub fn new(trace: TracePoly, n: usize, e: i64) -> Self {
        ClosureTrace { trace, n, e }
    }

    pub fn weaving(spec: &WeavingSpec) -> Result<Self> {
        Self::weaving_with(&HeckeAlgebra::new(spec.n), spec)
    }

    pub fn weaving_with(alg: &HeckeAlgebra, spec: &WeavingSpec) -> Result<Self> {
        Ok(Self::new(weaving_trace_with(alg, spec)?, spec.n, spec.e))
    }

    pub fn braid(w: &BraidWord) -> Result<Self> {
        Ok(Self::new(
            braid_trace(&HeckeAlgebra::new(w.n()), w)?,
            w.n(),
            w.exponent_sum(),
        ))
    }

    /// `n − e`; odd exactly when the prefactor has half-integer exponents.
    pub(crate) fn n_minus_e(&self) -> i64 {
        self.n as i64 - self.e
    }
}

/// `V_α(q, z) = (1/z)^{(n+e)/2} (q/w)^{(n−e)/2} Tr ρ(α)` with `w = 1 − q + z`,
/// the exponents kept as exact halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinValue {
    pub trace: MultiLaurent,
    /// `n + e`, twice the exponent of `1/z`.
    pub twice_z_exp: i64,
    /// `n − e`, twice the exponent of `q/w`.
    pub twice_qw_exp: i64,
}

impl SkeinValue {
    pub fn new(ct: &ClosureTrace) -> Self {
        SkeinValue {
            trace: ct.trace.0.clone(),
            twice_z_exp: ct.n as i64 + ct.e,
            twice_qw_exp: ct.n_minus_e(),
        }
    }

    /// Prefactor exponents `((n+e)/2, (n−e)/2)` when both are integers.
    pub fn integral_exponents(&self) -> Option<(i64, i64)> {
        (self.twice_z_exp % 2 == 0).then_some((self.twice_z_exp / 2, self.twice_qw_exp / 2))
    }

    /// The value as a reduced rational function in `q, z`; `None` when the
    /// prefactor has half-integer exponents.
    pub fn value(&self) -> Option<FactoredRational> {
        let (a, b) = self.integral_exponents()?;
        let mono = Monomial::from_pairs([(Var::Z, -a as i32), (Var::Q, b as i32)]);
        let v = if b >= 0 {
            FactoredRational::inverse_factor(Factor::SkeinW, b as u32)
                .mul_laurent(&self.trace.mul_monomial(&mono))
        } else {
            FactoredRational::from(
                &self.trace.mul_monomial(&mono) * &Factor::SkeinW.poly().pow(-b).ok()?,
            )
        };
        Some(v.reduce())
    }
}
