use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::braid::WeavingSpec;
use crate::error::{Error, Result};
use crate::invariants::HalfLaurent;

/// Coefficients `λ_l, …, λ_h` of a Jones polynomial and its twist numbers
/// `T_j = |λ_{l+j}| + |λ_{h−j}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistProfile {
    /// Lowest and highest degree, in `x = t^{1/2}`.
    pub low_x: i32,
    pub high_x: i32,
    /// `λ_{l+k}` for `k = 0..=span`.
    pub lambda: Vec<BigRational>,
    /// `T_1, T_2, …` for every `j` with `2j < span`.
    pub twists: Vec<BigRational>,
}

impl TwistProfile {
    /// `h − l` in powers of `t`.
    pub fn span(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn twist(&self, j: usize) -> Option<&BigRational> {
        j.checked_sub(1).and_then(|i| self.twists.get(i))
    }
}

pub fn twist_numbers(v: &HalfLaurent) -> Result<TwistProfile> {
    let (low_x, high_x) = match (v.min_x(), v.max_x()) {
        (Some(l), Some(h)) => (l, h),
        _ => return Err(Error::ZeroPolynomial),
    };
    // consecutive powers of t are two apart in x
    let lambda: Vec<BigRational> = (low_x..=high_x).step_by(2).map(|k| v.coeff_x(k)).collect();
    let span = lambda.len() - 1;
    let twists = (1..)
        .take_while(|&j| 2 * j < span)
        .map(|j| lambda[j].abs() + lambda[span - j].abs())
        .collect();
    Ok(TwistProfile {
        low_x,
        high_x,
        lambda,
        twists,
    })
}

/// `f_k = T_k / (((r+d)^k + r^k) m^k / k!)` and `g_k = f_k^{1/k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistRatio {
    pub k: usize,
    pub t_k: BigRational,
    pub f_exact: BigRational,
    pub f: f64,
    pub g: f64,
}

pub fn twist_ratio(spec: &WeavingSpec, profile: &TwistProfile, k: usize) -> Result<TwistRatio> {
    let t_k = profile
        .twist(k)
        .ok_or(Error::TwistOutOfRange {
            k,
            span: profile.span() as i64,
        })?
        .clone();
    let big = |x: usize| BigInt::from(x);
    let k32 = k as u32;
    let factorial: BigInt = (1..=k).map(big).product();
    let denom = (big(spec.r + spec.d).pow(k32) + big(spec.r).pow(k32)) * big(spec.m).pow(k32);
    let f_exact = &t_k * BigRational::new(factorial, denom);
    let f = f_exact.to_f64().expect("finite ratio");
    Ok(TwistRatio {
        k,
        t_k,
        f_exact,
        f,
        g: f.powf(1.0 / k as f64),
    })
}
