use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::invariants::KhovanovTable;

/// Normalised ranks `p_i` along the line `j = 2i − σ + 1` and their moments.
#[derive(Clone, Debug, PartialEq)]
pub struct RankStats {
    pub total_rank: BigUint,
    pub p: BTreeMap<i64, BigRational>,
    pub mu: BigRational,
    pub variance: BigRational,
    pub sigma: f64,
    /// `Σ |p_i − f_{μ,σ}(i)|` over the integer range of the line; `None` when `σ = 0`.
    pub l1_dev: Option<f64>,
    /// `(Σ (p_i − f_{μ,σ}(i))²)^{1/2}` over the same range.
    pub l2_dev: Option<f64>,
}

impl RankStats {
    pub fn mu_f64(&self) -> f64 {
        self.mu.to_f64().expect("finite mean")
    }
}

pub fn normal_pdf(mu: f64, sigma: f64, x: f64) -> Result<f64> {
    if sigma <= 0.0 || sigma.is_nan() {
        return Err(Error::NonPositiveSigma(sigma));
    }
    let z = (x - mu) / sigma;
    Ok((-0.5 * z * z).exp() / (sigma * (2.0 * PI).sqrt()))
}

/// `d` significant digits in the style `2.20703e19`, trailing zeros dropped;
/// numbers with at most `d` digits are printed in full.
pub fn format_sig(n: &BigUint, d: usize) -> String {
    let s = n.to_string();
    if s.len() <= d {
        return s;
    }
    let mut digits: Vec<u8> = s.bytes().take(d).map(|b| b - b'0').collect();
    let mut exp = s.len() - 1;
    if s.as_bytes()[d] >= b'5' {
        let mut k = d;
        loop {
            if k == 0 {
                digits.insert(0, 1);
                digits.pop();
                exp += 1;
                break;
            }
            k -= 1;
            if digits[k] == 9 {
                digits[k] = 0;
            } else {
                digits[k] += 1;
                break;
            }
        }
    }
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
    let mut out = digits[0].to_string();
    if digits.len() > 1 {
        out.push('.');
        out.extend(digits[1..].iter().map(|x| char::from(b'0' + x)));
    }
    format!("{out}e{exp}")
}

pub fn rank_stats(table: &KhovanovTable) -> Result<RankStats> {
    let line = table.line(1);
    let total_rank: BigUint = line.values().sum();
    if total_rank.is_zero() {
        return Err(Error::EmptyRankLine);
    }
    let total = BigInt::from(total_rank.clone());
    let p: BTreeMap<i64, BigRational> = line
        .iter()
        .map(|(&i, r)| (i, BigRational::new(BigInt::from(r.clone()), total.clone())))
        .collect();
    let mut mu = BigRational::zero();
    let mut second = BigRational::zero();
    for (&i, pi) in &p {
        let bi = BigRational::from_integer(i.into());
        mu += &bi * pi;
        second += &bi * &bi * pi;
    }
    let variance = &second - &mu * &mu;
    let sigma = variance.to_f64().expect("finite variance").sqrt();
    let (l1_dev, l2_dev) = if sigma > 0.0 {
        let m = mu.to_f64().expect("finite mean");
        let (lo, hi) = (*p.keys().next().unwrap(), *p.keys().last().unwrap());
        let mut l1 = 0.0;
        let mut l2 = 0.0;
        for i in lo..=hi {
            let pi = p
                .get(&i)
                .map_or(0.0, |x| x.to_f64().expect("finite probability"));
            let d = pi - normal_pdf(m, sigma, i as f64)?;
            l1 += d.abs();
            l2 += d * d;
        }
        (Some(l1), Some(l2.sqrt()))
    } else {
        (None, None)
    };
    Ok(RankStats {
        total_rank,
        p,
        mu,
        variance,
        sigma,
        l1_dev,
        l2_dev,
    })
}
