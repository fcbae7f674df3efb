use num_traits::Zero;

use super::half::HalfLaurent;
use super::skein::ClosureTrace;
use crate::braid::{BraidWord, WeavingSpec};
use crate::error::{Error, Result};
use crate::poly::{substitute_laurent, Factor, FactoredRational, Monomial, MultiLaurent, Var};

fn one_plus(v: Var) -> MultiLaurent {
    &MultiLaurent::one() + &MultiLaurent::var(v)
}

fn t_to_half(p: MultiLaurent, x_shift: i64) -> Result<HalfLaurent> {
    let h = HalfLaurent::from_t(&p)?;
    HalfLaurent::from_x(
        h.poly()
            .mul_monomial(&Monomial::var_pow(Var::X, x_shift as i32)),
    )
}

/// Alexander polynomial by the `q = s+1, z = w = s/b` recipe, then `b = 0`
/// and `s = t − 1`.
pub fn alexander_of(ct: &ClosureTrace) -> Result<HalfLaurent> {
    alexander_impl(ct, false)
}

/// As [`alexander_of`] but with `w = 1 − q + z = s(1−b)/b`. The extra
/// `(1−b)` powers are 1 at `b = 0`, so both must agree.
pub fn alexander_of_faithful(ct: &ClosureTrace) -> Result<HalfLaurent> {
    alexander_impl(ct, true)
}

fn alexander_impl(ct: &ClosureTrace, faithful: bool) -> Result<HalfLaurent> {
    let n = ct.n as i32;
    let n_minus_e = ct.n_minus_e();
    let q_val = FactoredRational::from(one_plus(Var::S));
    let z_val = FactoredRational::from(MultiLaurent::monomial(Monomial::from_pairs([
        (Var::S, 1),
        (Var::B, -1),
    ])));
    let tr = substitute_laurent(ct.trace.poly(), &[(Var::Q, q_val), (Var::Z, z_val)])?;
    // (1/z)^{(n+e)/2} (q/w)^{(n−e)/2} = b^n s^{-n} (s+1)^{(n−e)/2}; the
    // (s+1)^{(n−e)/2} part becomes x^{n−e} after s = t − 1
    let mut v = tr.mul_laurent(&MultiLaurent::monomial(Monomial::from_pairs([
        (Var::B, n),
        (Var::S, -n),
    ])));
    if faithful {
        let k = (n_minus_e + 1).div_euclid(2);
        v = if k >= 0 {
            v.mul(&FactoredRational::inverse_factor(
                Factor::OneMinusB,
                k as u32,
            ))
        } else {
            v.mul_laurent(&Factor::OneMinusB.poly().pow(-k)?)
        };
    }
    let v = v.reduce();
    if v.numerator().min_exp(Var::B).is_some_and(|e| e < 0) {
        return Err(Error::ResidualDenominator {
            stage: "alexander",
            detail: format!("b remains in {v}"),
        });
    }
    let v = v.eval_var(Var::B, &Zero::zero())?;
    let t_minus_1 = &MultiLaurent::var(Var::T) - &MultiLaurent::one();
    let v = v.substitute(&[(Var::S, t_minus_1.into())])?.reduce();
    t_to_half(v.into_laurent("alexander")?, n_minus_e)
}

pub fn alexander(spec: &WeavingSpec) -> Result<HalfLaurent> {
    alexander_of(&ClosureTrace::weaving(spec)?)
}

/// Jones polynomial: `(−1)^n (1+t)^n t^{−(n−e)/2} Tr(q = t, z = −1/(1+t))`.
pub fn jones_of(ct: &ClosureTrace) -> Result<HalfLaurent> {
    let z_val = FactoredRational::inverse_factor(Factor::OnePlusT, 1).neg();
    let tr = substitute_laurent(
        ct.trace.poly(),
        &[(Var::Q, FactoredRational::var(Var::T)), (Var::Z, z_val)],
    )?;
    let pre = one_plus(Var::T)
        .pow(ct.n as i64)?
        .scale_int(if ct.n.is_multiple_of(2) { 1 } else { -1 });
    let v = tr.mul_laurent(&pre).reduce().into_laurent("jones")?;
    t_to_half(v, -ct.n_minus_e())
}

pub fn jones(spec: &WeavingSpec) -> Result<HalfLaurent> {
    jones_of(&ClosureTrace::weaving(spec)?)
}

pub fn jones_of_braid(w: &BraidWord) -> Result<HalfLaurent> {
    jones_of(&ClosureTrace::braid(w)?)
}
