use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::laurent::{rat, MultiLaurent};
use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Non-monomial irreducible denominators that the substitution pipelines can
/// produce. Monomial denominators (`b`, `z`, `t`, `x`, `Q`, ...) are carried
/// as negative exponents in the Laurent numerator instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// `1 + t`
    OnePlusT,
    /// `1 - t Q²`
    OneMinusTQ2,
    /// `1 + t Q²`
    OnePlusTQ2,
    /// `1 + s`
    OnePlusS,
    /// `1 - b`
    OneMinusB,
    /// `1 - q + z`, the skein denominator `w`
    SkeinW,
}

impl Factor {
    pub const ALL: [Factor; 6] = [
        Factor::OnePlusT,
        Factor::OneMinusTQ2,
        Factor::OnePlusTQ2,
        Factor::OnePlusS,
        Factor::OneMinusB,
        Factor::SkeinW,
    ];

    pub fn poly(self) -> MultiLaurent {
        let one = MultiLaurent::one();
        let tq2 = MultiLaurent::monomial(Monomial::from_pairs([(Var::T, 1), (Var::KhQ, 2)]));
        match self {
            Factor::OnePlusT => &one + &MultiLaurent::var(Var::T),
            Factor::OneMinusTQ2 => &one - &tq2,
            Factor::OnePlusTQ2 => &one + &tq2,
            Factor::OnePlusS => &one + &MultiLaurent::var(Var::S),
            Factor::OneMinusB => &one - &MultiLaurent::var(Var::B),
            Factor::SkeinW => &(&one - &MultiLaurent::var(Var::Q)) + &MultiLaurent::var(Var::Z),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.poly())
    }
}

pub type Denominator = BTreeMap<Factor, u32>;

/// A Laurent numerator over a product of registered factors.
///
/// Value semantics are `num / Π factor^k`. Cancellation only happens through
/// [`FactoredRational::reduce`], which decrements an exponent exactly when
/// the numerator is divisible by that factor.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FactoredRational {
    num: MultiLaurent,
    den: Denominator,
}

impl From<MultiLaurent> for FactoredRational {
    fn from(num: MultiLaurent) -> Self {
        FactoredRational {
            num,
            den: Denominator::new(),
        }
    }
}

impl FactoredRational {
    pub fn new(num: MultiLaurent, den: Denominator) -> Self {
        let den = den.into_iter().filter(|&(_, k)| k > 0).collect();
        let mut r = FactoredRational { num, den };
        if r.num.is_zero() {
            r.den.clear();
        }
        r
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        MultiLaurent::one().into()
    }

    pub fn from_int(c: i64) -> Self {
        MultiLaurent::from_int(c).into()
    }

    pub fn var(v: Var) -> Self {
        MultiLaurent::var(v).into()
    }

    /// `1 / factor^k`
    pub fn inverse_factor(f: Factor, k: u32) -> Self {
        Self::new(MultiLaurent::one(), BTreeMap::from([(f, k)]))
    }

    pub fn numerator(&self) -> &MultiLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when no registered factor remains in the denominator.
    pub fn as_laurent(&self) -> Option<&MultiLaurent> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn into_laurent(self, stage: &'static str) -> Result<MultiLaurent> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(Error::ResidualDenominator {
                stage,
                detail: self.to_string(),
            })
        }
    }

    fn den_poly(den: &Denominator) -> MultiLaurent {
        den.iter().fold(MultiLaurent::one(), |acc, (f, &k)| {
            &acc * &f.poly().pow(k as i64).expect("non-negative power")
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (f, k) in &other.den {
            *den.entry(*f).or_insert(0) += k;
        }
        Self::new(&self.num * &other.num, den)
    }

    pub fn mul_laurent(&self, p: &MultiLaurent) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.num, self.den.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone());
        }
        let mut lcm = self.den.clone();
        for (f, &k) in &other.den {
            let e = lcm.entry(*f).or_insert(0);
            *e = (*e).max(k);
        }
        let lift = |r: &Self| -> MultiLaurent {
            let missing: Denominator = lcm
                .iter()
                .map(|(f, &k)| (*f, k - r.den.get(f).copied().unwrap_or(0)))
                .collect();
            &r.num * &Self::den_poly(&missing)
        };
        Self::new(&lift(self) + &lift(other), lcm)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Reciprocal. The numerator must factor as a monomial times registered
    /// factors, found by trial division.
    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::UnregisteredDenominator("0".into()));
        }
        let mut rest = self.num.clone();
        let mut den = Denominator::new();
        'peel: while rest.as_single_term().is_none() {
            for f in Factor::ALL {
                if let Some(q) = rest.div_exact(&f.poly()) {
                    rest = q;
                    *den.entry(f).or_insert(0) += 1;
                    continue 'peel;
                }
            }
            return Err(Error::UnregisteredDenominator(self.num.to_string()));
        }
        let unit = rest.pow(-1)?;
        Ok(Self::new(&unit * &Self::den_poly(&self.den), den))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.recip()?.pow(-k);
        }
        let mut result = Self::one();
        for _ in 0..k {
            result = result.mul(self);
        }
        Ok(result)
    }

    /// Cancels every registered factor that divides the numerator exactly.
    pub fn reduce(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (f, k) in den.iter_mut() {
            let fp = f.poly();
            while *k > 0 {
                match num.div_exact(&fp) {
                    Some(q) => {
                        num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        Self::new(num, den)
    }

    /// Sets `v = value`. Fails if a denominator (monomial or factor) vanishes.
    pub fn eval_var(&self, v: Var, value: &BigRational) -> Result<Self> {
        let mut num = self.num.eval(v, value)?;
        let mut den = Denominator::new();
        for (f, &k) in &self.den {
            let fp = f.poly();
            if !fp.contains_var(v) {
                den.insert(*f, k);
                continue;
            }
            let at = fp.eval(v, value)?;
            let c = at.as_constant().filter(|c| !c.is_zero()).ok_or_else(|| {
                Error::PoleAtEvaluation {
                    var: v,
                    value: value.to_string(),
                }
            })?;
            num = num.scale(&super::laurent::pow_rat(&c.recip(), k as i32));
        }
        Ok(Self::new(num, den))
    }

    /// Substitutes variables by rational functions. Unbound variables are
    /// carried through; negative powers of a binding need its reciprocal.
    pub fn substitute(&self, bindings: &[(Var, FactoredRational)]) -> Result<Self> {
        let num = substitute_laurent(&self.num, bindings)?;
        let mut out = num;
        for (f, &k) in &self.den {
            let fp = substitute_laurent(&f.poly(), bindings)?;
            out = out.mul(&fp.pow(-(k as i64))?);
        }
        Ok(out)
    }

    /// Cross-multiplied equality; independent of representation.
    pub fn value_eq(&self, other: &Self) -> bool {
        &self.num * &Self::den_poly(&other.den) == &other.num * &Self::den_poly(&self.den)
    }
}

/// Substitutes `bindings` into a Laurent polynomial.
///
/// Terms are grouped by the denominator their binding powers produce and
/// combined over a common denominator once at the end.
pub fn substitute_laurent(
    p: &MultiLaurent,
    bindings: &[(Var, FactoredRational)],
) -> Result<FactoredRational> {
    let mut powers: HashMap<(Var, i32), FactoredRational> = HashMap::new();
    let mut groups: BTreeMap<Denominator, MultiLaurent> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut acc = FactoredRational::from(MultiLaurent::term(c.clone(), Monomial::ONE));
        for (v, b) in bindings {
            let k = rest.take(*v);
            if k == 0 {
                continue;
            }
            let pw = match powers.get(&(*v, k)) {
                Some(pw) => pw.clone(),
                None => {
                    let pw = b.pow(k as i64)?;
                    powers.insert((*v, k), pw.clone());
                    pw
                }
            };
            acc = acc.mul(&pw);
        }
        let acc = acc.mul_laurent(&MultiLaurent::monomial(rest));
        let FactoredRational { num, den } = acc;
        *groups.entry(den).or_default() += &num;
    }
    Ok(groups
        .into_iter()
        .map(|(den, num)| FactoredRational::new(num, den))
        .fold(FactoredRational::zero(), |acc, r| acc.add(&r)))
}

impl fmt::Debug for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredRational({self})")
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ", self.num)?;
        for (i, (fac, k)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *k == 1 {
                write!(f, "{fac}")?;
            } else {
                write!(f, "{fac}^{k}")?;
            }
        }
        Ok(())
    }
}

/// `c · v^k` as a rational function, for building bindings.
pub fn scaled_var(c: i64, v: Var, k: i32) -> FactoredRational {
    MultiLaurent::term(rat(c), Monomial::var_pow(v, k)).into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MultiLaurent {
        MultiLaurent::var(x)
    }

    #[test]
    fn cancels_exact_factor() {
        let r = FactoredRational::new(
            &v(Var::S) * &Factor::OnePlusT.poly(),
            BTreeMap::from([(Factor::OnePlusT, 1)]),
        );
        assert_eq!(r.reduce(), FactoredRational::var(Var::S));
    }

    #[test]
    fn divides_t_squared_minus_one() {
        let r = FactoredRational::new(
            MultiLaurent::univariate(Var::T, 0, &[-1, 0, 1]),
            BTreeMap::from([(Factor::OnePlusT, 1)]),
        );
        assert_eq!(
            r.reduce(),
            MultiLaurent::univariate(Var::T, 0, &[-1, 1]).into()
        );
    }

    #[test]
    fn irreducible_quotient_is_kept() {
        let r: FactoredRational = (&v(Var::S) * &v(Var::B).pow(-1).unwrap()).into();
        assert_eq!(r.reduce(), r);
    }

    #[test]
    fn substitution_examples() {
        let s_plus_1: FactoredRational = (&v(Var::S) + &MultiLaurent::one()).into();
        let q = FactoredRational::var(Var::Q);
        assert_eq!(
            q.substitute(&[(Var::Q, s_plus_1.clone())]).unwrap(),
            s_plus_1
        );

        // q^-1 z^2 with q -> t, z -> -1/(1+t)
        let p = MultiLaurent::monomial(Monomial::from_pairs([(Var::Q, -1), (Var::Z, 2)]));
        let z_bind = FactoredRational::inverse_factor(Factor::OnePlusT, 1).neg();
        let got = substitute_laurent(
            &p,
            &[(Var::Q, FactoredRational::var(Var::T)), (Var::Z, z_bind)],
        )
        .unwrap();
        let want = FactoredRational::new(
            v(Var::T).pow(-1).unwrap(),
            BTreeMap::from([(Factor::OnePlusT, 2)]),
        );
        assert_eq!(got, want);

        // z + (1 - q) with q -> s + 1, z -> s / b is s(1 - b)/b
        let p = &(&v(Var::Z) + &MultiLaurent::one()) - &v(Var::Q);
        let z_bind: FactoredRational = (&v(Var::S) * &v(Var::B).pow(-1).unwrap()).into();
        let got = substitute_laurent(&p, &[(Var::Q, s_plus_1), (Var::Z, z_bind)]).unwrap();
        let want = &(&v(Var::S) * &Factor::OneMinusB.poly()) * &v(Var::B).pow(-1).unwrap();
        assert_eq!(got.reduce(), want.into());
    }

    #[test]
    fn eval_after_cancellation() {
        // (3b + sb)/b -> 3 + s, then b = 0
        let b_inv = v(Var::B).pow(-1).unwrap();
        let num = &(&v(Var::B).scale_int(3) + &(&v(Var::S) * &v(Var::B))) * &b_inv;
        let r: FactoredRational = num.into();
        let at0 = r.eval_var(Var::B, &rat(0)).unwrap();
        assert_eq!(at0, (&MultiLaurent::from_int(3) + &v(Var::S)).into());

        let pole: FactoredRational = (&v(Var::S) * &b_inv).into();
        assert!(matches!(
            pole.eval_var(Var::B, &rat(0)),
            Err(Error::PoleAtEvaluation { .. })
        ));

        let zero: FactoredRational = (&(&v(Var::S) * &b_inv) * &v(Var::B).pow(2).unwrap()).into();
        assert!(zero.eval_var(Var::B, &rat(0)).unwrap().is_zero());
    }

    #[test]
    fn factor_pole_is_detected() {
        let r = FactoredRational::inverse_factor(Factor::OneMinusB, 1);
        assert!(r.eval_var(Var::B, &rat(1)).is_err());
        assert_eq!(
            r.eval_var(Var::B, &rat(0)).unwrap(),
            FactoredRational::one()
        );
    }

    #[test]
    fn recip_of_unregistered_polynomial_fails() {
        let p: FactoredRational = (&v(Var::T) + &MultiLaurent::from_int(2)).into();
        assert!(matches!(p.recip(), Err(Error::UnregisteredDenominator(_))));
        let ok: FactoredRational =
            (&(&v(Var::T) + &MultiLaurent::one()).scale(&rat(-2)) * &v(Var::T)).into();
        let inv = ok.recip().unwrap();
        assert!(inv.mul(&ok).reduce().value_eq(&FactoredRational::one()));
    }
}
