use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial over `ℚ` in the variables of [`Var`].
///
/// Zero coefficients are never stored and terms are kept in canonical
/// monomial order, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiLaurent {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigRational::one(), Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(BigRational::one(), Monomial::var_pow(v, e))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiLaurent { terms }
    }

    /// Builds from `(coefficient, monomial)` pairs, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (BigRational, Monomial)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial `Σ coeffs[k] v^(low + k)` with integer coefficients.
    pub fn univariate(v: Var, low: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (rat(c), Monomial::var_pow(v, low + k as i32))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigRational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · m · other`
    pub fn add_scaled(&mut self, other: &MultiLaurent, c: &BigRational, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    pub fn add_mul(&mut self, a: &MultiLaurent, b: &MultiLaurent) {
        for (am, ac) in &a.terms {
            for (bm, bc) in &b.terms {
                self.add_term(am.mul(bm), ac * bc);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiLaurent {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// The single term of a monomial-times-coefficient polynomial.
    pub fn as_single_term(&self) -> Option<(Monomial, BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Integer powers; negative exponents only for single-term polynomials.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let (m, c) = self
                .as_single_term()
                .ok_or(Error::NegativePowerOfPolynomial {
                    terms: self.len(),
                    exp: k,
                })?;
            let inv = MultiLaurent::term(c.recip(), m.inv());
            return inv.pow(-k);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// `(min, max)` total degree over all variables.
    pub fn total_degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(Monomial::total_degree);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.contains_var(v))
            .collect()
    }

    /// Splits by powers of `v`: `self = Σ_k v^k · parts[k]`.
    pub fn group_by(&self, v: Var) -> BTreeMap<i32, MultiLaurent> {
        let mut out: BTreeMap<i32, MultiLaurent> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let k = rest.take(v);
            out.entry(k).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Replaces every monomial through `f`, summing collisions.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (c.clone(), f(m))))
    }

    /// Sets `v = value`. A negative power of `v` at `value = 0` is a pole.
    pub fn eval(&self, v: Var, value: &BigRational) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let k = rest.take(v);
            if k == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            if value.is_zero() {
                if k < 0 {
                    return Err(Error::PoleAtEvaluation {
                        var: v,
                        value: value.to_string(),
                    });
                }
                continue;
            }
            out.add_term(rest, c * pow_rat(value, k));
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Exact division. `None` when `divisor` does not divide `self` in the
    /// Laurent ring.
    ///
    /// Runs the lex-order division algorithm; every quotient exponent must
    /// lie in the box allowed by the per-variable exponent ranges of the two
    /// operands, which bounds the number of steps.
    pub fn div_exact(&self, divisor: &MultiLaurent) -> Option<MultiLaurent> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.as_single_term() {
            return Some(self.mul_monomial(&m.inv()).scale(&c.recip()));
        }
        let mut lo = [0i32; Var::ALL.len()];
        let mut hi = [0i32; Var::ALL.len()];
        for v in Var::ALL {
            let i = v.index();
            lo[i] = self.min_exp(v)? - divisor.min_exp(v)?;
            hi[i] = self.max_exp(v)? - divisor.max_exp(v)?;
            if lo[i] > hi[i] {
                return None;
            }
        }
        let (dm, dc) = divisor.leading().map(|(m, c)| (*m, c.clone()))?;
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = rm.div(&dm);
            if Var::ALL
                .iter()
                .any(|v| qm.exp(*v) < lo[v.index()] || qm.exp(*v) > hi[v.index()])
            {
                return None;
            }
            let qc = rc * &dc_inv;
            rem.add_scaled(divisor, &-qc.clone(), &qm);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

pub(crate) fn pow_rat(x: &BigRational, k: i32) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({self})")
    }
}

impl fmt::Display for MultiLaurent {
    /// Terms in ascending canonical order, e.g. `-z + q^-1 z + q^-1 z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a} {m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiLaurent {
    type Output = MultiLaurent;
    fn neg(mut self) -> MultiLaurent {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&MultiLaurent> for MultiLaurent {
    fn add_assign(&mut self, rhs: &MultiLaurent) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiLaurent> for MultiLaurent {
    fn sub_assign(&mut self, rhs: &MultiLaurent) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiLaurent> for MultiLaurent {
            type Output = MultiLaurent;
            fn $method(self, rhs: MultiLaurent) -> MultiLaurent {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiLaurent> for MultiLaurent {
            type Output = MultiLaurent;
            fn $method(self, rhs: &MultiLaurent) -> MultiLaurent {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for MultiLaurent {
    fn sum<I: Iterator<Item = MultiLaurent>>(iter: I) -> Self {
        iter.fold(MultiLaurent::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}
