use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::display::{join_terms, power};
use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, MultiLaurent, PolyJson, Var};

/// A Laurent polynomial in `t^{1/2}`, stored in `x = t^{1/2}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfLaurent(MultiLaurent);

impl HalfLaurent {
    pub fn from_x(p: MultiLaurent) -> Result<Self> {
        if p.vars().iter().any(|&v| v != Var::X) {
            return Err(Error::Json(format!("expected a polynomial in x, got {p}")));
        }
        Ok(HalfLaurent(p))
    }

    /// `t ↦ x²` on a polynomial in `t`.
    pub fn from_t(p: &MultiLaurent) -> Result<Self> {
        if p.vars().iter().any(|&v| v != Var::T) {
            return Err(Error::Json(format!("expected a polynomial in t, got {p}")));
        }
        Ok(HalfLaurent(p.map_monomials(|m| {
            Monomial::var_pow(Var::X, 2 * m.exp(Var::T))
        })))
    }

    /// Integer coefficients of `t^low, t^{low+1}, …`.
    pub fn from_t_coeffs(low: i32, coeffs: &[i64]) -> Self {
        HalfLaurent(MultiLaurent::from_terms(coeffs.iter().enumerate().map(
            |(k, &c)| (rat(c), Monomial::var_pow(Var::X, 2 * (low + k as i32))),
        )))
    }

    /// Coefficients of `x^low, x^{low+2}, …`, i.e. consecutive powers of `t`
    /// starting at `t^{low/2}`.
    pub fn from_x_coeffs_step2(low: i32, coeffs: &[i64]) -> Self {
        HalfLaurent(MultiLaurent::from_terms(coeffs.iter().enumerate().map(
            |(k, &c)| (rat(c), Monomial::var_pow(Var::X, low + 2 * k as i32)),
        )))
    }

    pub fn poly(&self) -> &MultiLaurent {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when only integer powers of `t` occur.
    pub fn is_integral_in_t(&self) -> bool {
        self.0.terms().all(|(m, _)| m.exp(Var::X).is_even())
    }

    /// `(x-exponent, coefficient)` in ascending order.
    pub fn coeffs(&self) -> Vec<(i32, BigRational)> {
        self.0
            .terms()
            .map(|(m, c)| (m.exp(Var::X), c.clone()))
            .collect()
    }

    pub fn coeff_x(&self, k: i32) -> BigRational {
        self.0.coeff(&Monomial::var_pow(Var::X, k))
    }

    pub fn min_x(&self) -> Option<i32> {
        self.0.min_exp(Var::X)
    }

    pub fn max_x(&self) -> Option<i32> {
        self.0.max_exp(Var::X)
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigRational {
        self.0
            .terms()
            .map(|(_, c)| c.clone())
            .fold(BigRational::zero(), |a, c| a + c)
    }

    /// `t ↦ t^{-1}`.
    pub fn mirror(&self) -> Self {
        HalfLaurent(
            self.0
                .map_monomials(|m| Monomial::var_pow(Var::X, -m.exp(Var::X))),
        )
    }

    /// The polynomial in `t`, if every exponent is integral.
    pub fn to_t(&self) -> Option<MultiLaurent> {
        self.is_integral_in_t().then(|| {
            self.0
                .map_monomials(|m| Monomial::var_pow(Var::T, m.exp(Var::X) / 2))
        })
    }

    /// `vars: ["t"]` when all exponents are integral, otherwise `["x"]` with
    /// `x = t^{1/2}`.
    pub fn to_json(&self) -> PolyJson {
        match self.to_t() {
            Some(p) => PolyJson::from_laurent(&p, Some(&[Var::T])),
            None => PolyJson::from_laurent(&self.0, Some(&[Var::X])),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let p = j.to_laurent()?;
        if p.vars().contains(&Var::T) {
            Self::from_t(&p)
        } else {
            Self::from_x(p)
        }
    }

    fn render(&self, latex: bool) -> String {
        join_terms(
            self.0.terms().map(|(m, c)| {
                let k = m.exp(Var::X) as i64;
                let mono = if k % 2 == 0 {
                    power("t", k / 2, 1, latex)
                } else {
                    power("t", k, 2, latex)
                };
                (c, mono)
            }),
            "",
        )
    }

    /// `-t^-3 + 3t^-2 - 2t^-1 + 4`, with `t^-13/2` for half-integer powers.
    pub fn to_plain(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}
