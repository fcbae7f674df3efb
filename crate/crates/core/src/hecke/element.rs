use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::index::HeckeIndex;
use crate::error::{Error, Result};
use crate::poly::{MultiLaurent, PolyJson, Var};

/// An element `Σ c_l(q) β^l` of `H_{n+1}(q)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<HeckeIndex, MultiLaurent>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(HeckeIndex::zero(n))
    }

    pub fn basis(l: HeckeIndex) -> Self {
        let mut h = Self::zero(l.n());
        h.add_term(l, MultiLaurent::one());
        h
    }

    pub fn generator(n: usize, j: usize) -> Result<Self> {
        Ok(Self::basis(HeckeIndex::generator(n, j)?))
    }

    pub fn from_terms<I: IntoIterator<Item = (HeckeIndex, MultiLaurent)>>(n: usize, it: I) -> Self {
        let mut h = Self::zero(n);
        for (l, c) in it {
            h.add_term(l, c);
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HeckeIndex, &MultiLaurent)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &HeckeIndex) -> MultiLaurent {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, l: HeckeIndex, c: MultiLaurent) {
        assert_eq!(l.n(), self.n, "basis index from a different algebra");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(l) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut h = self.clone();
        for (l, c) in other.terms() {
            h.add_term(l.clone(), c.clone());
        }
        h
    }

    pub fn scale(&self, c: &MultiLaurent) -> HeckeElement {
        HeckeElement::from_terms(self.n, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    /// Is every basis index in `M_n`?
    pub fn supported_on_m(&self) -> bool {
        self.terms.keys().all(HeckeIndex::in_m)
    }

    pub fn to_json(&self) -> HeckeElementJson {
        HeckeElementJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| HeckeTermJson {
                    index: l.as_slice().to_vec(),
                    coef: PolyJson::from_laurent(c, Some(&[Var::Q])),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &HeckeElementJson) -> Result<Self> {
        let mut h = HeckeElement::zero(j.n);
        for t in &j.terms {
            if t.index.len() != j.n {
                return Err(Error::Json(format!(
                    "index {:?} has wrong length for n={}",
                    t.index, j.n
                )));
            }
            h.add_term(HeckeIndex::new(t.index.clone())?, t.coef.to_laurent()?);
        }
        Ok(h)
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("({c}){l:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `{"n": int, "terms": [{"index": [...], "coef": <poly in q>}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeElementJson {
    pub n: usize,
    pub terms: Vec<HeckeTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeTermJson {
    pub index: Vec<u8>,
    pub coef: PolyJson,
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = HeckeElementJson::deserialize(d)?;
        HeckeElement::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// The trace value, a Laurent polynomial in `q` and `z`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TracePoly(pub MultiLaurent);

impl TracePoly {
    pub fn poly(&self) -> &MultiLaurent {
        &self.0
    }

    pub fn into_inner(self) -> MultiLaurent {
        self.0
    }

    /// `(min, max)` total degree in `(q, z)`; `None` for zero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        self.0.total_degree_range()
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson::from_laurent(&self.0, Some(&[Var::Q, Var::Z]))
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let p = j.to_laurent()?;
        if p.vars().iter().any(|v| !matches!(v, Var::Q | Var::Z)) {
            return Err(Error::Json("trace polynomial may only use q and z".into()));
        }
        Ok(TracePoly(p))
    }
}

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for TracePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TracePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        TracePoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn json_round_trip() {
        let q = MultiLaurent::var(Var::Q);
        let h = HeckeElement::from_terms(
            2,
            [
                (HeckeIndex::new(vec![1, 2]).unwrap(), q.clone()),
                (HeckeIndex::zero(2), MultiLaurent::from_int(-3)),
            ],
        );
        let s = serde_json::to_string(&h).unwrap();
        assert!(s.starts_with("{\"n\":2,\"terms\":[{\"index\":[0,0]"));
        let back: HeckeElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
        let bad =
            "{\"n\":2,\"terms\":[{\"index\":[0,3],\"coef\":{\"vars\":[\"q\"],\"terms\":[]}}]}";
        assert!(serde_json::from_str::<HeckeElement>(bad).is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let l = HeckeIndex::generator(3, 2).unwrap();
        let mut h = HeckeElement::basis(l.clone());
        h.add_term(l, MultiLaurent::constant(rat(-1)));
        assert!(h.is_zero());
    }
}
