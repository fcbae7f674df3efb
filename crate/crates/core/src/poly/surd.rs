use std::fmt;

use super::laurent::{rat, MultiLaurent};
use super::monomial::Var;
use super::ratfun::FactoredRational;
use crate::error::{Error, Result};

/// `u + v·S` with `S² = Z² + 4` (`Z` is [`Var::HomZ`]).
///
/// This is the quadratic extension containing `𝚠 = Z + S` that the HOMFLY-PT
/// substitution needs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SurdElement {
    pub u: FactoredRational,
    pub v: FactoredRational,
}

/// `Z² + 4`
pub fn surd_square() -> MultiLaurent {
    &MultiLaurent::var_pow(Var::HomZ, 2) + &MultiLaurent::from_int(4)
}

impl SurdElement {
    pub fn new(u: FactoredRational, v: FactoredRational) -> Self {
        SurdElement { u, v }
    }

    pub fn rational(u: FactoredRational) -> Self {
        SurdElement {
            u,
            v: FactoredRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::rational(FactoredRational::one())
    }

    /// `S` itself.
    pub fn sqrt() -> Self {
        SurdElement {
            u: FactoredRational::zero(),
            v: FactoredRational::one(),
        }
    }

    /// `𝚠 = Z + S`
    pub fn w() -> Self {
        SurdElement {
            u: FactoredRational::var(Var::HomZ),
            v: FactoredRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        SurdElement {
            u: self.u.add(&o.u),
            v: self.v.add(&o.v),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        SurdElement {
            u: self.u.sub(&o.u),
            v: self.v.sub(&o.v),
        }
    }

    pub fn neg(&self) -> Self {
        SurdElement {
            u: self.u.neg(),
            v: self.v.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let vv = self.v.mul(&o.v).mul_laurent(&surd_square());
        SurdElement {
            u: self.u.mul(&o.u).add(&vv),
            v: self.u.mul(&o.v).add(&o.u.mul(&self.v)),
        }
    }

    pub fn scale(&self, c: &FactoredRational) -> Self {
        SurdElement {
            u: self.u.mul(c),
            v: self.v.mul(c),
        }
    }

    pub fn conj(&self) -> Self {
        SurdElement {
            u: self.u.clone(),
            v: self.v.neg(),
        }
    }

    /// `u² - v²(Z² + 4)`
    pub fn norm(&self) -> FactoredRational {
        self.u
            .mul(&self.u)
            .sub(&self.v.mul(&self.v).mul_laurent(&surd_square()))
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm().reduce();
        if n.is_zero() {
            return Err(Error::ZeroNorm);
        }
        Ok(self.conj().scale(&n.recip()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    pub fn reduce(&self) -> Self {
        SurdElement {
            u: self.u.reduce(),
            v: self.v.reduce(),
        }
    }

    pub fn halve(&self) -> Self {
        let h = num_rational::BigRational::new(1.into(), 2.into());
        SurdElement {
            u: self.u.scale(&h),
            v: self.v.scale(&h),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::rational(MultiLaurent::term(rat(c), Default::default()).into())
    }
}

impl fmt::Debug for SurdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurdElement({self})")
    }
}

impl fmt::Display for SurdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}] S", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let s2 = SurdElement::sqrt().mul(&SurdElement::sqrt());
        assert!(s2.is_rational());
        assert_eq!(s2.u, surd_square().into());
    }

    #[test]
    fn w_inverse() {
        let w = SurdElement::w();
        let other = SurdElement::new(
            FactoredRational::var(Var::HomZ).neg(),
            FactoredRational::one(),
        );
        assert_eq!(w.mul(&other), SurdElement::from_int(4));
        let inv = w.inv().unwrap();
        assert_eq!(
            inv,
            other.scale(
                &MultiLaurent::term(
                    num_rational::BigRational::new(1.into(), 4.into()),
                    Default::default()
                )
                .into()
            )
        );
    }

    #[test]
    fn half_w_squared_is_q() {
        let half_w = SurdElement::w().halve();
        let sq = half_w.mul(&half_w);
        let z2 = MultiLaurent::var_pow(Var::HomZ, 2);
        let expected_u = (&z2 + &MultiLaurent::from_int(2))
            .scale(&num_rational::BigRational::new(1.into(), 2.into()));
        let expected_v =
            MultiLaurent::var(Var::HomZ).scale(&num_rational::BigRational::new(1.into(), 2.into()));
        assert_eq!(sq, SurdElement::new(expected_u.into(), expected_v.into()));
    }

    #[test]
    fn zero_norm_is_not_invertible() {
        assert!(matches!(SurdElement::default().inv(), Err(Error::ZeroNorm)));
    }
}
