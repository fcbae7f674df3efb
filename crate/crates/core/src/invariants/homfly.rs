use std::collections::BTreeMap;
use std::fmt;

use super::display::{join_terms, power};
use super::skein::ClosureTrace;
use crate::braid::WeavingSpec;
use crate::error::{Error, Result};
use crate::poly::{rat, FactoredRational, Monomial, MultiLaurent, PolyJson, SurdElement, Var};

/// HOMFLY-PT polynomial in `a` ([`Var::A`]) and `z` ([`Var::HomZ`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomflyPoly(pub MultiLaurent);

impl HomflyPoly {
    pub fn poly(&self) -> &MultiLaurent {
        &self.0
    }

    /// Builds from `(a-exponent, z-exponent, coefficient)` triples.
    pub fn from_triples(terms: &[(i32, i32, i64)]) -> Self {
        HomflyPoly(MultiLaurent::from_terms(terms.iter().map(|&(a, z, c)| {
            (rat(c), Monomial::from_pairs([(Var::A, a), (Var::HomZ, z)]))
        })))
    }

    /// Substitutes `a` and `z` by Laurent polynomials in other variables.
    pub fn specialize(&self, a: &MultiLaurent, z: &MultiLaurent) -> Result<MultiLaurent> {
        let mut out = MultiLaurent::zero();
        for (m, c) in self.0.terms() {
            let term = &a.pow(m.exp(Var::A) as i64)? * &z.pow(m.exp(Var::HomZ) as i64)?;
            out += &term.scale(c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolyJson {
        let mut j = PolyJson::from_laurent(&self.0, Some(&[Var::A, Var::HomZ]));
        rename_vars(&mut j, &[("A", "a"), ("Z", "z")]);
        j
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut j = j.clone();
        rename_vars(&mut j, &[("a", "A"), ("z", "Z")]);
        let p = j.to_laurent()?;
        if p.vars().iter().any(|v| !matches!(v, Var::A | Var::HomZ)) {
            return Err(Error::Json(
                "HOMFLY-PT polynomial may only use a and z".into(),
            ));
        }
        Ok(HomflyPoly(p))
    }

    /// Terms grouped by ascending `z` power, then `a` power.
    fn sorted_terms(&self) -> Vec<(i32, i32, &num_rational::BigRational)> {
        let mut v: Vec<_> = self
            .0
            .terms()
            .map(|(m, c)| (m.exp(Var::HomZ), m.exp(Var::A), c))
            .collect();
        v.sort_by_key(|&(z, a, _)| (z, a));
        v
    }

    fn render(&self, latex: bool) -> String {
        join_terms(
            self.sorted_terms().into_iter().map(|(z, a, c)| {
                let parts: Vec<String> = [
                    power("a", a as i64, 1, latex),
                    power("z", z as i64, 1, latex),
                ]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
                (c, parts.join(" "))
            }),
            "",
        )
    }

    pub fn to_plain(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

fn rename_vars(j: &mut PolyJson, map: &[(&str, &str)]) {
    let rename = |s: &str| {
        map.iter()
            .find(|(a, _)| *a == s)
            .map_or(s.to_string(), |(_, b)| b.to_string())
    };
    j.vars = j.vars.iter().map(|v| rename(v)).collect();
    for t in &mut j.terms {
        t.exp = std::mem::take(&mut t.exp)
            .into_iter()
            .map(|(k, e)| (rename(&k), e))
            .collect();
    }
}

impl fmt::Display for HomflyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

/// `(numerator, denominator, monomial)`
type RatTerm<'a> = (i64, i64, &'a [(Var, i32)]);

fn laurent(terms: &[RatTerm]) -> FactoredRational {
    FactoredRational::from(MultiLaurent::from_terms(terms.iter().map(|&(n, d, m)| {
        (
            num_rational::BigRational::new(n.into(), d.into()),
            Monomial::from_pairs(m.iter().copied()),
        )
    })))
}

/// HOMFLY-PT polynomial via `q = 𝚠Z/2 + 1`, `z = A²𝚠Z/(2B)`, `w = 𝚠Z/(2B)`
/// with `𝚠 = Z + √(Z²+4)`, followed by `B = A² − 1`.
///
/// Half powers disappear through `(1/z)^{(n+e)/2} (q/w)^{(n−e)/2} =
/// z^{−e} (q/(zw))^{(n−e)/2}` and `√(q/(zw)) = B/(AZ)`.
pub fn homfly_of(ct: &ClosureTrace) -> Result<HomflyPoly> {
    use Var::{HomB as B, HomZ as Z, A};
    // q = (Z² + 2)/2 + (Z/2)·S; its inverse is the conjugate
    let q = SurdElement::new(
        laurent(&[(1, 2, &[(Z, 2)]), (1, 1, &[])]),
        laurent(&[(1, 2, &[(Z, 1)])]),
    );
    let q_inv = q.conj();
    // z = A²Z(Z + S)/(2B), z⁻¹ = B(S − Z)/(2A²Z)
    let z = SurdElement::new(
        laurent(&[(1, 2, &[(A, 2), (Z, 2), (B, -1)])]),
        laurent(&[(1, 2, &[(A, 2), (Z, 1), (B, -1)])]),
    );
    let z_inv = SurdElement::new(
        laurent(&[(-1, 2, &[(A, -2), (B, 1)])]),
        laurent(&[(1, 2, &[(A, -2), (Z, -1), (B, 1)])]),
    );

    let by_z = ct.trace.poly().group_by(Var::Z);
    let mut q_pows: BTreeMap<i32, SurdElement> = BTreeMap::new();
    let mut q_pow = |k: i32| -> SurdElement {
        q_pows
            .entry(k)
            .or_insert_with(|| {
                if k >= 0 {
                    q.pow(k as i64)
                } else {
                    q_inv.pow(-k as i64)
                }
                .expect("non-negative power")
            })
            .clone()
    };
    let mut total = SurdElement::default();
    let mut z_pow = SurdElement::one();
    let mut k_done = 0;
    for (k, coeff) in by_z {
        if k < 0 {
            return Err(Error::ResidualDenominator {
                stage: "homfly",
                detail: "negative power of z in trace".into(),
            });
        }
        while k_done < k {
            z_pow = z_pow.mul(&z);
            k_done += 1;
        }
        let mut inner = SurdElement::default();
        for (m, c) in coeff.terms() {
            let c = FactoredRational::from(MultiLaurent::constant(c.clone()));
            inner = inner.add(&q_pow(m.exp(Var::Q)).scale(&c));
        }
        total = total.add(&inner.mul(&z_pow));
    }
    let e = ct.e;
    let z_e = if e >= 0 { z_inv.pow(e)? } else { z.pow(-e)? };
    let nme = ct.n_minus_e() as i32;
    let root = laurent(&[(1, 1, &[(B, nme), (A, -nme), (Z, -nme)])]);
    let v = total.mul(&z_e).scale(&root).reduce();
    let u = v.u.into_laurent("homfly")?;
    let s = v.v.into_laurent("homfly")?;
    let b_val = &MultiLaurent::var_pow(A, 2) - &MultiLaurent::one();
    let sub_b = |p: &MultiLaurent| -> Result<MultiLaurent> {
        let mut out = MultiLaurent::zero();
        for (k, part) in p.group_by(B) {
            if k < 0 {
                return Err(Error::ResidualDenominator {
                    stage: "homfly",
                    detail: format!("B^{k} remains"),
                });
            }
            out += &(&part * &b_val.pow(k as i64)?);
        }
        Ok(out)
    };
    if !sub_b(&s)?.is_zero() {
        return Err(Error::SurdResidue);
    }
    Ok(HomflyPoly(sub_b(&u)?))
}

pub fn homfly(spec: &WeavingSpec) -> Result<HomflyPoly> {
    homfly_of(&ClosureTrace::weaving(spec)?)
}
