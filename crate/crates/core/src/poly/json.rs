use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::laurent::MultiLaurent;
use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Wire form of a polynomial:
/// `{"vars":[...], "terms":[{"exp":{var:int,...}, "coef":"-7"}]}`.
///
/// Coefficients are exact decimal rationals (`"3/2"`); terms are in
/// canonical ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: BTreeMap<String, i32>,
    pub coef: String,
}

impl PolyJson {
    /// `vars` defaults to the variables that actually occur.
    pub fn from_laurent(p: &MultiLaurent, vars: Option<&[Var]>) -> Self {
        let vars = match vars {
            Some(v) => v.to_vec(),
            None => p.vars(),
        };
        PolyJson {
            vars: vars.iter().map(|v| v.symbol().to_string()).collect(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.iter().map(|(v, e)| (v.symbol().to_string(), e)).collect(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_laurent(&self) -> Result<MultiLaurent> {
        let declared: Vec<Var> = self
            .vars
            .iter()
            .map(|s| s.parse::<Var>().map_err(Error::Json))
            .collect::<Result<_>>()?;
        let mut p = MultiLaurent::zero();
        for t in &self.terms {
            let mut pairs = Vec::with_capacity(t.exp.len());
            for (name, &e) in &t.exp {
                let v: Var = name.parse().map_err(Error::Json)?;
                if !declared.contains(&v) {
                    return Err(Error::Json(format!("variable {name} not declared in vars")));
                }
                pairs.push((v, e));
            }
            p.add_term(Monomial::from_pairs(pairs), parse_rational(&t.coef)?);
        }
        Ok(p)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Json(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(
            s.trim().parse::<BigInt>().map_err(|_| bad())?,
        )),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl Serialize for MultiLaurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from_laurent(self, None).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiLaurent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyJson::deserialize(d)?
            .to_laurent()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fixed_shape() {
        let p = MultiLaurent::from_terms([
            (
                BigRational::new(3.into(), 2.into()),
                Monomial::from_pairs([(Var::Q, -1), (Var::Z, 2)]),
            ),
            (BigRational::from_integer((-7).into()), Monomial::ONE),
        ]);
        let j =
            serde_json::to_string(&PolyJson::from_laurent(&p, Some(&[Var::Q, Var::Z]))).unwrap();
        assert_eq!(
            j,
            r#"{"vars":["q","z"],"terms":[{"exp":{"q":-1,"z":2},"coef":"3/2"},{"exp":{},"coef":"-7"}]}"#
        );
    }

    #[test]
    fn undeclared_variable_is_rejected() {
        let j = r#"{"vars":["q"],"terms":[{"exp":{"z":1},"coef":"1"}]}"#;
        assert!(serde_json::from_str::<MultiLaurent>(j).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in prop::collection::vec((-5i32..5, -5i32..5, -50i64..50, 1i64..6), 0..8)) {
            let p = MultiLaurent::from_terms(terms.into_iter().map(|(a, b, n, d)| {
                (BigRational::new(n.into(), d.into()), Monomial::from_pairs([(Var::Q, a), (Var::Z, b)]))
            }));
            let s = serde_json::to_string(&p).unwrap();
            let back: MultiLaurent = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
