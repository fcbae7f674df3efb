use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::element::{HeckeElement, TracePoly};
use super::index::HeckeIndex;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiLaurent, Var};

/// A linear combination of basis prefixes, each index appearing once.
pub type LinComb = Vec<(Vec<u8>, MultiLaurent)>;

/// Rewriting engine for `H_{n+1}(q)` with memoized recursions.
///
/// The caches make this type `!Sync`; build one per thread.
pub struct HeckeAlgebra {
    n: usize,
    q: Monomial,
    q_minus_1: MultiLaurent,
    chain_memo: RefCell<HashMap<Vec<u8>, Rc<LinComb>>>,
    mul_memo: RefCell<HashMap<Vec<u8>, Rc<LinComb>>>,
    trace_memo: RefCell<HashMap<Vec<u8>, MultiLaurent>>,
}

fn append(
    lc: &LinComb,
    digit: u8,
    scale: Option<&MultiLaurent>,
    q_shift: Option<&Monomial>,
    out: &mut LinComb,
) {
    for (l, c) in lc {
        let mut idx = Vec::with_capacity(l.len() + 1);
        idx.extend_from_slice(l);
        idx.push(digit);
        let c = match (scale, q_shift) {
            (Some(s), _) => c * s,
            (None, Some(m)) => c.mul_monomial(m),
            (None, None) => c.clone(),
        };
        out.push((idx, c));
    }
}

impl HeckeAlgebra {
    pub fn new(n: usize) -> Self {
        let q = MultiLaurent::var(Var::Q);
        HeckeAlgebra {
            n,
            q: Monomial::var(Var::Q),
            q_minus_1: &q - &MultiLaurent::one(),
            chain_memo: RefCell::default(),
            mul_memo: RefCell::default(),
            trace_memo: RefCell::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `β_i^l · u_i^s` for a prefix `l` of length `i`, expanded in the basis.
    pub fn mul_basis_right_chain(
        &self,
        l: &HeckeIndex,
        s: u8,
    ) -> Result<Vec<(HeckeIndex, MultiLaurent)>> {
        let i = l.n();
        if s as usize > i {
            return Err(Error::InvalidIndex(vec![s]));
        }
        Ok(self
            .chain(l.as_slice(), s)
            .iter()
            .map(|(idx, c)| (HeckeIndex::new_unchecked(idx.clone()), c.clone()))
            .collect())
    }

    pub(crate) fn chain(&self, l: &[u8], s: u8) -> Rc<LinComb> {
        let mut key = l.to_vec();
        key.push(s);
        if let Some(hit) = self.chain_memo.borrow().get(&key) {
            return hit.clone();
        }
        let out = Rc::new(self.chain_uncached(l, s));
        self.chain_memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn chain_uncached(&self, l: &[u8], s: u8) -> LinComb {
        if s == 0 {
            return vec![(l.to_vec(), MultiLaurent::one())];
        }
        let (&li, lp) = l.split_last().expect("chain at level 0 with s > 0");
        let mut out = Vec::new();
        if li == 0 {
            let mut idx = lp.to_vec();
            idx.push(s);
            out.push((idx, MultiLaurent::one()));
        } else if li <= s {
            append(
                &self.chain(lp, li - 1),
                s,
                Some(&self.q_minus_1),
                None,
                &mut out,
            );
            append(
                &self.chain(lp, s - 1),
                li - 1,
                None,
                Some(&self.q),
                &mut out,
            );
        } else {
            append(&self.chain(lp, s), li, None, None, &mut out);
        }
        out
    }

    /// `β^m · β^l` for `m ∈ M_n`.
    pub fn mul_m_basis(&self, m: &HeckeIndex, l: &HeckeIndex) -> Result<HeckeElement> {
        self.check_n(m.n())?;
        self.check_n(l.n())?;
        if !m.in_m() {
            return Err(Error::LeftFactorNotInM(m.as_slice().to_vec()));
        }
        Ok(HeckeElement::from_terms(
            self.n,
            self.mul_m(m.as_slice(), l.as_slice())
                .iter()
                .map(|(idx, c)| (HeckeIndex::new_unchecked(idx.clone()), c.clone())),
        ))
    }

    pub(crate) fn mul_m(&self, m: &[u8], l: &[u8]) -> Rc<LinComb> {
        debug_assert_eq!(m.len(), l.len());
        let mut key = Vec::with_capacity(2 * m.len());
        key.extend_from_slice(m);
        key.extend_from_slice(l);
        if let Some(hit) = self.mul_memo.borrow().get(&key) {
            return hit.clone();
        }
        let out = Rc::new(self.mul_m_uncached(m, l));
        self.mul_memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn mul_m_uncached(&self, m: &[u8], l: &[u8]) -> LinComb {
        let i = l.len();
        if i == 0 {
            return vec![(Vec::new(), MultiLaurent::one())];
        }
        let (&mi, mp) = m.split_last().unwrap();
        let (&li, lp) = l.split_last().unwrap();
        let mut out = Vec::new();
        if mi == 0 {
            append(&self.mul_m(mp, lp), li, None, None, &mut out);
            return out;
        }
        if i == 1 {
            // T_1 · 1 or T_1 · T_1
            if li == 0 {
                out.push((vec![1], MultiLaurent::one()));
            } else {
                out.push((vec![1], self.q_minus_1.clone()));
                out.push((vec![0], MultiLaurent::monomial(self.q)));
            }
            return out;
        }
        let (&lim1, lpp) = lp.split_last().unwrap();
        let with_last = |x: u8| {
            let mut v = lpp.to_vec();
            v.push(x);
            v
        };
        if li == 0 {
            append(
                &self.mul_m(mp, &with_last(0)),
                lim1 + 1,
                None,
                None,
                &mut out,
            );
        } else if lim1 < li {
            append(
                &self.mul_m(mp, &with_last(lim1)),
                li,
                Some(&self.q_minus_1),
                None,
                &mut out,
            );
            append(
                &self.mul_m(mp, &with_last(li - 1)),
                lim1,
                None,
                Some(&self.q),
                &mut out,
            );
        } else {
            append(
                &self.mul_m(mp, &with_last(li)),
                lim1 + 1,
                None,
                None,
                &mut out,
            );
        }
        out
    }

    /// Product `a · b` where `a` is supported on `M_n`.
    pub fn mul_elements(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check_n(a.n())?;
        self.check_n(b.n())?;
        if let Some((bad, _)) = a.terms().find(|(l, _)| !l.in_m()) {
            return Err(Error::LeftFactorNotInM(bad.as_slice().to_vec()));
        }
        let mut acc: HashMap<Vec<u8>, MultiLaurent> = HashMap::new();
        for (j, cj) in a.terms() {
            for (i, ci) in b.terms() {
                let cji = cj * ci;
                for (idx, c) in self.mul_m(j.as_slice(), i.as_slice()).iter() {
                    acc.entry(idx.clone()).or_default().add_mul(&cji, c);
                }
            }
        }
        Ok(self.collect(acc))
    }

    /// `T_g · b`.
    pub fn mul_generator(&self, g: usize, b: &HeckeElement) -> Result<HeckeElement> {
        let t = HeckeElement::generator(self.n, g)?;
        self.mul_elements(&t, b)
    }

    /// Product of arbitrary elements: each basis word of `a` is applied to `b`
    /// one generator at a time, right to left.
    pub fn mul_general(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check_n(a.n())?;
        self.check_n(b.n())?;
        let mut out = HeckeElement::zero(self.n);
        for (l, c) in a.terms() {
            let mut x = b.clone();
            for &g in l.word().iter().rev() {
                x = self.mul_generator(g, &x)?;
            }
            out = out.add(&x.scale(c));
        }
        Ok(out)
    }

    /// `Tr(β^l)`.
    pub fn trace_basis(&self, l: &HeckeIndex) -> Result<TracePoly> {
        self.check_n(l.n())?;
        Ok(TracePoly(self.trace_prefix(l.as_slice())))
    }

    pub(crate) fn trace_prefix(&self, l: &[u8]) -> MultiLaurent {
        // H_i sits inside H_{i+1}, so trailing zeros don't change the trace
        let end = l.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        let l = &l[..end];
        if l.is_empty() {
            return MultiLaurent::one();
        }
        if let Some(hit) = self.trace_memo.borrow().get(l) {
            return hit.clone();
        }
        let (&li, lp) = l.split_last().unwrap();
        let mut sum = MultiLaurent::zero();
        for (idx, c) in self.chain(lp, li - 1).iter() {
            sum.add_mul(c, &self.trace_prefix(idx));
        }
        let out = sum.mul_monomial(&Monomial::var(Var::Z));
        self.trace_memo.borrow_mut().insert(l.to_vec(), out.clone());
        out
    }

    pub fn trace_element(&self, h: &HeckeElement) -> Result<TracePoly> {
        self.check_n(h.n())?;
        let mut sum = MultiLaurent::zero();
        for (l, c) in h.terms() {
            sum.add_mul(c, &self.trace_prefix(l.as_slice()));
        }
        Ok(TracePoly(sum))
    }

    fn collect(&self, acc: HashMap<Vec<u8>, MultiLaurent>) -> HeckeElement {
        HeckeElement::from_terms(
            self.n,
            acc.into_iter()
                .map(|(idx, c)| (HeckeIndex::new_unchecked(idx), c)),
        )
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::StrandMismatch(self.n + 1, n + 1));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::generator_power;

    fn idx(l: &[u8]) -> HeckeIndex {
        HeckeIndex::new(l.to_vec()).unwrap()
    }

    fn q() -> MultiLaurent {
        MultiLaurent::var(Var::Q)
    }

    fn z() -> MultiLaurent {
        MultiLaurent::var(Var::Z)
    }

    fn one() -> MultiLaurent {
        MultiLaurent::one()
    }

    #[test]
    fn chain_examples() {
        let h = HeckeAlgebra::new(2);
        let t1sq = h.mul_basis_right_chain(&idx(&[1]), 1).unwrap();
        assert_eq!(t1sq, vec![(idx(&[1]), &q() - &one()), (idx(&[0]), q())]);
        let same = h.mul_basis_right_chain(&idx(&[1, 2]), 0).unwrap();
        assert_eq!(same, vec![(idx(&[1, 2]), one())]);
        // T2 T1 T2 = T1 T2 T1
        let braid = h.mul_basis_right_chain(&idx(&[0, 2]), 1).unwrap();
        assert_eq!(braid, vec![(idx(&[1, 2]), one())]);
    }

    #[test]
    fn mul_m_examples() {
        let h = HeckeAlgebra::new(1);
        let p = h.mul_m_basis(&idx(&[1]), &idx(&[1])).unwrap();
        assert_eq!(
            p,
            HeckeElement::from_terms(1, [(idx(&[1]), &q() - &one()), (idx(&[0]), q())])
        );
        let h = HeckeAlgebra::new(2);
        for l in HeckeIndex::all(2) {
            assert_eq!(
                h.mul_m_basis(&HeckeIndex::zero(2), &l).unwrap(),
                HeckeElement::basis(l)
            );
        }
        let p = h.mul_m_basis(&idx(&[1, 1]), &idx(&[1, 0])).unwrap();
        assert_eq!(p, HeckeElement::basis(idx(&[1, 2])));
        assert!(matches!(
            h.mul_m_basis(&idx(&[1, 2]), &idx(&[1, 0])),
            Err(Error::LeftFactorNotInM(_))
        ));
    }

    #[test]
    fn mul_elements_examples() {
        let h = HeckeAlgebra::new(3);
        let b = HeckeElement::from_terms(3, [(idx(&[1, 2, 1]), q()), (idx(&[0, 1, 3]), one())]);
        assert_eq!(h.mul_elements(&HeckeElement::identity(3), &b).unwrap(), b);
        let t1 = HeckeElement::generator(3, 1).unwrap();
        assert_eq!(
            h.mul_elements(&t1, &t1).unwrap(),
            generator_power(3, 1, 2).unwrap()
        );
        assert!(h.mul_elements(&b, &t1).is_err());
        assert!(h.mul_elements(&HeckeElement::identity(2), &t1).is_err());
    }

    #[test]
    fn inverse_powers() {
        let h = HeckeAlgebra::new(3);
        for j in 1..=3 {
            for k in 1..=5i64 {
                let a = generator_power(3, j, k).unwrap();
                let b = generator_power(3, j, -k).unwrap();
                assert!(a.supported_on_m());
                assert_eq!(
                    h.mul_elements(&a, &b).unwrap(),
                    HeckeElement::identity(3),
                    "j={j} k={k}"
                );
            }
        }
    }

    #[test]
    fn trace_examples() {
        let h = HeckeAlgebra::new(2);
        assert!(h.trace_basis(&idx(&[0, 0])).unwrap().0.is_one());
        assert_eq!(h.trace_basis(&idx(&[1, 0])).unwrap().0, z());
        assert_eq!(h.trace_basis(&idx(&[1, 1])).unwrap().0, &z() * &z());
        assert!(h
            .trace_element(&HeckeElement::identity(2))
            .unwrap()
            .0
            .is_one());
        let e = generator_power(2, 1, 2).unwrap();
        assert_eq!(
            h.trace_element(&e).unwrap().0,
            &(&(&q() - &one()) * &z()) + &q()
        );
        let qi = MultiLaurent::var_pow(Var::Q, -1);
        let e = HeckeElement::from_terms(
            2,
            [(idx(&[1, 1]), qi.clone()), (idx(&[1, 0]), &qi - &one())],
        );
        let want = &(&qi * &(&z() * &z())) + &(&(&qi - &one()) * &z());
        assert_eq!(h.trace_element(&e).unwrap().0, want);
    }

    #[test]
    fn trace_degrees_match_word_shape() {
        let h = HeckeAlgebra::new(4);
        for l in HeckeIndex::all(4) {
            let t = h.trace_basis(&l).unwrap();
            assert_eq!(
                t.0.max_exp(Var::Z).unwrap() as usize,
                l.distinct_generators(),
                "{l:?}"
            );
            let (_, hi) = t.degree_range().unwrap();
            assert_eq!(hi as usize, l.length(), "{l:?}");
            assert!(t.0.min_exp(Var::Q).unwrap() >= 0);
        }
    }
}
