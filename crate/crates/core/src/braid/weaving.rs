use std::collections::HashMap;

use num_integer::Integer;

use super::word::BraidWord;
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement, HeckeIndex, TracePoly};
use crate::poly::{Monomial, MultiLaurent, Var};

/// Parameters of the weaving braid `(σ_1 σ_2^{-1} σ_3 ⋯ σ_n^{±1})^m` on `N = n+1` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeavingSpec {
    pub big_n: usize,
    pub m: usize,
    pub n: usize,
    /// `n mod 2`.
    pub d: usize,
    /// `(n − d)/2`, the number of inverted generators.
    pub r: usize,
    /// Sign of the last generator `σ_n`.
    pub delta: i8,
    /// Exponent sum, `m·d`.
    pub e: i64,
}

impl WeavingSpec {
    pub fn new(big_n: usize, m: usize) -> Result<Self> {
        if big_n < 2 || m < 1 {
            return Err(Error::InvalidWeaving { big_n, m });
        }
        let n = big_n - 1;
        let d = n % 2;
        Ok(WeavingSpec {
            big_n,
            m,
            n,
            d,
            r: (n - d) / 2,
            delta: if d == 1 { 1 } else { -1 },
            e: (m * d) as i64,
        })
    }

    pub fn components(&self) -> usize {
        self.big_n.gcd(&self.m)
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// Errors unless the closure is a knot.
    pub fn require_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::NotAKnot {
                big_n: self.big_n,
                m: self.m,
                gcd: self.components(),
            })
        }
    }

    /// Signature of the closure, `(1 − m)·d`.
    pub fn signature(&self) -> i64 {
        (1 - self.m as i64) * self.d as i64
    }

    /// Crossing number of the alternating diagram, `m·n`.
    pub fn crossings(&self) -> usize {
        self.m * self.n
    }
}

pub fn weaving_braid(spec: &WeavingSpec) -> BraidWord {
    let one = (1..=spec.n).map(|g| (g, if g % 2 == 1 { 1 } else { -1 }));
    BraidWord::new(spec.big_n, one)
        .expect("generators are in range")
        .repeat(spec.m)
}

/// `(max, min)` total `(q, z)`-degree of the weaving trace: `(mn − mr, r + d − mr)`.
pub fn trace_degree_bounds(spec: &WeavingSpec) -> (i64, i64) {
    let (m, n, r, d) = (spec.m as i64, spec.n as i64, spec.r as i64, spec.d as i64);
    (m * n - m * r, r + d - m * r)
}

/// `ρ` of a weaving braid as `q^{prefactor_exp} Σ f_l(q) β^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeavingHecke {
    pub spec: WeavingSpec,
    pub prefactor_exp: i64,
    pub f: HeckeElement,
}

impl WeavingHecke {
    pub fn element(&self) -> HeckeElement {
        self.f
            .scale(&MultiLaurent::var_pow(Var::Q, self.prefactor_exp as i32))
    }

    /// The trace, checked against the closed-form degree bounds.
    pub fn trace(&self, alg: &HeckeAlgebra) -> Result<TracePoly> {
        let t = alg.trace_element(&self.f)?;
        let t = TracePoly(t.0.mul_monomial(&Monomial::var_pow(Var::Q, self.prefactor_exp as i32)));
        let (hi, lo) = trace_degree_bounds(&self.spec);
        let actual = t.degree_range().ok_or(Error::ZeroPolynomial)?;
        if actual != (lo, hi) {
            return Err(Error::DegreeBound {
                big_n: self.spec.big_n,
                m: self.spec.m,
                expected: (lo, hi),
                actual,
            });
        }
        Ok(t)
    }
}

type Row = Vec<(Vec<u8>, MultiLaurent)>;

/// Produces `f^1, f^2, …` for a fixed strand count via
/// `f^m_l = Σ_i f^{m-1}_i Σ_{j ∈ N_n} f^1_j [β^l](β^j β^i)`.
pub struct WeavingRecursion<'a> {
    alg: &'a HeckeAlgebra,
    spec: WeavingSpec,
    f1: Row,
    rows: HashMap<Vec<u8>, Row>,
    current: HashMap<Vec<u8>, MultiLaurent>,
}

impl<'a> WeavingRecursion<'a> {
    pub fn new(alg: &'a HeckeAlgebra, big_n: usize) -> Result<Self> {
        let spec = WeavingSpec::new(big_n, 1)?;
        if alg.n() != spec.n {
            return Err(Error::StrandMismatch(alg.n() + 1, big_n));
        }
        let one_minus_q = &MultiLaurent::one() - &MultiLaurent::var(Var::Q);
        let f1: Row = HeckeIndex::all_n(spec.n)
            .map(|l| {
                let c = one_minus_q
                    .pow((spec.n - l.length()) as i64)
                    .expect("non-negative power");
                (l.as_slice().to_vec(), c)
            })
            .collect();
        let current = f1.iter().cloned().collect();
        Ok(WeavingRecursion {
            alg,
            spec,
            f1,
            rows: HashMap::new(),
            current,
        })
    }

    pub fn spec(&self) -> WeavingSpec {
        self.spec
    }

    pub fn current(&self) -> WeavingHecke {
        WeavingHecke {
            spec: self.spec,
            prefactor_exp: -((self.spec.m * self.spec.r) as i64),
            f: HeckeElement::from_terms(
                self.spec.n,
                self.current
                    .iter()
                    .map(|(l, c)| (HeckeIndex::new_unchecked(l.clone()), c.clone())),
            ),
        }
    }

    fn row(&mut self, i: &[u8]) -> &Row {
        if !self.rows.contains_key(i) {
            let mut acc: HashMap<Vec<u8>, MultiLaurent> = HashMap::new();
            for (j, cj) in &self.f1 {
                for (l, c) in self.alg.mul_m(j, i).iter() {
                    acc.entry(l.clone()).or_default().add_mul(cj, c);
                }
            }
            let row = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            self.rows.insert(i.to_vec(), row);
        }
        &self.rows[i]
    }

    /// Advances from `m` to `m + 1`.
    pub fn step(&mut self) {
        let prev = std::mem::take(&mut self.current);
        let mut next: HashMap<Vec<u8>, MultiLaurent> = HashMap::new();
        for (i, fi) in &prev {
            for (l, h) in self.row(i) {
                next.entry(l.clone()).or_default().add_mul(fi, h);
            }
        }
        next.retain(|_, c| !c.is_zero());
        self.current = next;
        self.spec = WeavingSpec::new(self.spec.big_n, self.spec.m + 1).expect("valid spec");
    }

    /// Advances to `m` (which must not be behind the current step).
    pub fn advance_to(&mut self, m: usize) -> WeavingHecke {
        assert!(m >= self.spec.m, "weaving recursion cannot go backwards");
        while self.spec.m < m {
            self.step();
        }
        self.current()
    }
}

pub fn weaving_hecke(alg: &HeckeAlgebra, spec: &WeavingSpec) -> Result<WeavingHecke> {
    Ok(WeavingRecursion::new(alg, spec.big_n)?.advance_to(spec.m))
}

/// `Tr ρ(σ_{N,m})`, with a fresh algebra.
pub fn weaving_trace(spec: &WeavingSpec) -> Result<TracePoly> {
    weaving_trace_with(&HeckeAlgebra::new(spec.n), spec)
}

pub fn weaving_trace_with(alg: &HeckeAlgebra, spec: &WeavingSpec) -> Result<TracePoly> {
    weaving_hecke(alg, spec)?.trace(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braid_to_hecke;
    use crate::hecke::generator_power;

    fn q() -> MultiLaurent {
        MultiLaurent::var(Var::Q)
    }

    fn z() -> MultiLaurent {
        MultiLaurent::var(Var::Z)
    }

    #[test]
    fn spec_parameters() {
        let s = WeavingSpec::new(6, 5).unwrap();
        assert_eq!((s.n, s.d, s.r, s.e, s.delta), (5, 1, 2, 5, 1));
        assert_eq!(s.signature(), -4);
        assert_eq!(WeavingSpec::new(4, 3).unwrap().signature(), -2);
        assert_eq!(WeavingSpec::new(3, 7).unwrap().signature(), 0);
        assert_eq!(WeavingSpec::new(4, 2).unwrap().components(), 2);
        assert!(WeavingSpec::new(1, 3).is_err());
        assert!(WeavingSpec::new(3, 0).is_err());
    }

    #[test]
    fn braid_words() {
        let w = weaving_braid(&WeavingSpec::new(4, 1).unwrap());
        assert_eq!(w.letters(), &[(1, 1), (2, -1), (3, 1)]);
        let w = weaving_braid(&WeavingSpec::new(3, 2).unwrap());
        assert_eq!(w.letters(), &[(1, 1), (2, -1), (1, 1), (2, -1)]);
        let w = weaving_braid(&WeavingSpec::new(2, 3).unwrap());
        assert_eq!(w.letters(), &[(1, 3)]);
        for (nn, m) in [(3, 3), (4, 3), (5, 2), (6, 4)] {
            let s = WeavingSpec::new(nn, m).unwrap();
            assert_eq!(weaving_braid(&s).components(), s.components());
        }
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(
            trace_degree_bounds(&WeavingSpec::new(3, 1).unwrap()),
            (1, 0)
        );
        assert_eq!(
            trace_degree_bounds(&WeavingSpec::new(4, 3).unwrap()),
            (6, -1)
        );
        assert_eq!(
            trace_degree_bounds(&WeavingSpec::new(2, 4).unwrap()),
            (4, 1)
        );
        assert_eq!(
            trace_degree_bounds(&WeavingSpec::new(6, 5).unwrap()),
            (15, -7)
        );
    }

    #[test]
    fn first_power() {
        let alg = HeckeAlgebra::new(2);
        let w = weaving_hecke(&alg, &WeavingSpec::new(3, 1).unwrap()).unwrap();
        assert_eq!(w.prefactor_exp, -1);
        let want = HeckeElement::from_terms(
            2,
            [
                (HeckeIndex::new(vec![1, 1]).unwrap(), MultiLaurent::one()),
                (
                    HeckeIndex::new(vec![1, 0]).unwrap(),
                    &MultiLaurent::one() - &q(),
                ),
            ],
        );
        assert_eq!(w.f, want);
        let t = w.trace(&alg).unwrap();
        let qi = MultiLaurent::var_pow(Var::Q, -1);
        assert_eq!(
            t.0,
            &(&qi * &(&z() * &z())) + &(&(&qi - &MultiLaurent::one()) * &z())
        );
    }

    #[test]
    fn two_strands_are_generator_powers() {
        let alg = HeckeAlgebra::new(1);
        for m in 1..=6 {
            let w = weaving_hecke(&alg, &WeavingSpec::new(2, m).unwrap()).unwrap();
            assert_eq!(w.element(), generator_power(1, 1, m as i64).unwrap());
        }
        assert_eq!(
            weaving_trace(&WeavingSpec::new(2, 1).unwrap()).unwrap().0,
            z()
        );
    }

    #[test]
    fn matches_general_braid_algorithm() {
        let s = WeavingSpec::new(4, 2).unwrap();
        let alg = HeckeAlgebra::new(3);
        assert_eq!(
            weaving_hecke(&alg, &s).unwrap().element(),
            braid_to_hecke(&weaving_braid(&s))
        );
    }
}
