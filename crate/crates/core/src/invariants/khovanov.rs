use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::half::HalfLaurent;
use super::skein::ClosureTrace;
use crate::braid::WeavingSpec;
use crate::error::{Error, Result};
use crate::poly::{substitute_laurent, Factor, FactoredRational, Monomial, MultiLaurent, Var};

/// Ranks of rational Khovanov homology, `rank(i, j)` for homological degree
/// `i` and quantum degree `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KhovanovTable {
    pub big_n: usize,
    pub m: usize,
    pub sigma: i64,
    pub entries: BTreeMap<(i64, i64), BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhovanovEntryJson {
    pub i: i64,
    pub j: i64,
    pub rank: String,
}

impl KhovanovTable {
    pub fn rank(&self, i: i64, j: i64) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn total_rank(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Entries on the line `j = 2i − σ + offset`, keyed by `i`.
    pub fn line(&self, offset: i64) -> BTreeMap<i64, BigUint> {
        self.entries
            .iter()
            .filter(|(&(i, j), _)| j == 2 * i - self.sigma + offset)
            .map(|(&(i, _), r)| (i, r.clone()))
            .collect()
    }

    /// Do all entries lie on `j = 2i − σ ± 1`?
    pub fn on_support_lines(&self) -> bool {
        self.entries
            .keys()
            .all(|&(i, j)| (j - 2 * i + self.sigma).abs() == 1)
    }

    /// `Kh(t, Q) = Σ rank(i, j) tⁱ Qʲ`.
    pub fn poly(&self) -> MultiLaurent {
        MultiLaurent::from_terms(self.entries.iter().map(|(&(i, j), r)| {
            (
                num_rational::BigRational::from_integer(BigInt::from(r.clone())),
                Monomial::from_pairs([(Var::T, i as i32), (Var::KhQ, j as i32)]),
            )
        }))
    }

    /// Entries ordered by descending `j`, then ascending `i`, as the tables are laid out.
    pub fn rows(&self) -> Vec<(i64, i64, BigUint)> {
        let mut v: Vec<_> = self
            .entries
            .iter()
            .map(|(&(i, j), r)| (i, j, r.clone()))
            .collect();
        v.sort_by_key(|&(i, j, _)| (std::cmp::Reverse(j), i));
        v
    }

    pub fn to_json(&self) -> Vec<KhovanovEntryJson> {
        self.rows()
            .into_iter()
            .map(|(i, j, r)| KhovanovEntryJson {
                i,
                j,
                rank: r.to_string(),
            })
            .collect()
    }

    fn from_poly(spec: &WeavingSpec, kh: &MultiLaurent) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (m, c) in kh.terms() {
            let (i, j) = (m.exp(Var::T) as i64, m.exp(Var::KhQ) as i64);
            if !c.is_integer()
                || c.is_negative()
                || m.iter().any(|(v, _)| !matches!(v, Var::T | Var::KhQ))
            {
                return Err(Error::BadKhovanovCoefficient {
                    i,
                    j,
                    coef: c.to_string(),
                });
            }
            entries.insert((i, j), c.to_integer().to_biguint().expect("non-negative"));
        }
        Ok(KhovanovTable {
            big_n: spec.big_n,
            m: spec.m,
            sigma: spec.signature(),
            entries,
        })
    }
}

fn tq2() -> MultiLaurent {
    MultiLaurent::monomial(Monomial::from_pairs([(Var::T, 1), (Var::KhQ, 2)]))
}

/// `Q^{−σ}(Q^{−1} + Q) + (Q^{−1} + tQ³)/(1 + tQ²) · F`.
fn assemble(sigma: i64, f: FactoredRational) -> Result<MultiLaurent> {
    let q = |k: i64| MultiLaurent::var_pow(Var::KhQ, k as i32);
    let pawn = &q(-sigma) * &(&q(-1) + &q(1));
    let knight =
        &q(-1) + &MultiLaurent::monomial(Monomial::from_pairs([(Var::T, 1), (Var::KhQ, 3)]));
    let tail = f
        .mul_laurent(&knight)
        .mul(&FactoredRational::inverse_factor(Factor::OnePlusTQ2, 1));
    FactoredRational::from(pawn)
        .add(&tail)
        .reduce()
        .into_laurent("khovanov")
}

/// Khovanov ranks of a weaving knot from its trace, with `F` evaluated at
/// `q = −tQ²`, `z = −1/(1 − tQ²)`.
pub fn khovanov_of(spec: &WeavingSpec, ct: &ClosureTrace) -> Result<KhovanovTable> {
    spec.require_knot()?;
    let n = spec.n as i64;
    let sigma = spec.signature();
    let q_val = FactoredRational::from(tq2().scale_int(-1));
    let z_val = FactoredRational::inverse_factor(Factor::OneMinusTQ2, 1).neg();
    let tr = substitute_laurent(ct.trace.poly(), &[(Var::Q, q_val), (Var::Z, z_val)])?;
    let sign = if (spec.r + spec.d).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let pre = (&MultiLaurent::one() - &tq2())
        .pow(n)?
        .mul_monomial(&Monomial::from_pairs([
            (Var::T, -(spec.r as i32)),
            (Var::KhQ, (spec.e - n) as i32),
        ]))
        .scale_int(sign);
    let f = tr
        .mul_laurent(&pre)
        .sub(&MultiLaurent::var_pow(Var::KhQ, -sigma as i32).into());
    KhovanovTable::from_poly(spec, &assemble(sigma, f)?)
}

pub fn khovanov(spec: &WeavingSpec) -> Result<KhovanovTable> {
    spec.require_knot()?;
    khovanov_of(spec, &ClosureTrace::weaving(spec)?)
}

/// `Kh(t, Q)` from the Jones polynomial and signature of an alternating knot:
/// `Q^{−σ}(Q^{−1}+Q) + (Q^{−1}+tQ³)/(1+tQ²)·((−t)^{σ/2} V(−tQ²) − Q^{−σ})`.
pub fn khovanov_from_jones(v: &HalfLaurent, sigma: i64) -> Result<MultiLaurent> {
    if sigma % 2 != 0 {
        return Err(Error::Json(format!(
            "odd signature {sigma} has no (−t)^(σ/2)"
        )));
    }
    let vt = v.to_t().ok_or_else(|| Error::ResidualDenominator {
        stage: "khovanov",
        detail: "Jones polynomial has half-integer exponents".into(),
    })?;
    let mut at = MultiLaurent::zero();
    let neg_tq2 = tq2().scale_int(-1);
    for (m, c) in vt.terms() {
        at += &neg_tq2.pow(m.exp(Var::T) as i64)?.scale(c);
    }
    let half = sigma / 2;
    let sign = if half % 2 == 0 { 1 } else { -1 };
    let f = at
        .mul_monomial(&Monomial::var_pow(Var::T, half as i32))
        .scale_int(sign);
    let f = &f - &MultiLaurent::var_pow(Var::KhQ, -sigma as i32);
    assemble(sigma, f.into())
}
