//! Brute-force word rewriter for `H_{n+1}(q)`, independent of the basis
//! recursions: words are normalised using only the quadratic relation and
//! braid moves.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use hecke_core::{HeckeElement, MultiLaurent, Var};

pub type WordSum = BTreeMap<Vec<u8>, MultiLaurent>;

#[derive(Default)]
pub struct Rewriter {
    memo: HashMap<Vec<u8>, WordSum>,
}

fn add_into(acc: &mut WordSum, w: Vec<u8>, c: MultiLaurent) {
    let e = acc.entry(w.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        acc.remove(&w);
    }
}

/// Every word reachable by commuting distant letters and `iji ↔ jij`.
fn braid_class(w: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        let mut next = Vec::new();
        for k in 0..u.len().saturating_sub(1) {
            let (a, b) = (u[k], u[k + 1]);
            if a.abs_diff(b) >= 2 {
                let mut v = u.clone();
                v.swap(k, k + 1);
                next.push(v);
            }
            if k + 2 < u.len() && a.abs_diff(b) == 1 && u[k + 2] == a {
                let mut v = u.clone();
                v[k] = b;
                v[k + 1] = a;
                v[k + 2] = b;
                next.push(v);
            }
        }
        for v in next {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

impl Rewriter {
    /// Normal form: reduced words are replaced by the lexicographically least
    /// word of their braid-move class.
    pub fn normalize(&mut self, w: &[u8]) -> WordSum {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let class = braid_class(w);
        let square = class.iter().find_map(|u| {
            (0..u.len().saturating_sub(1))
                .find(|&k| u[k] == u[k + 1])
                .map(|k| (u.clone(), k))
        });
        let out = match square {
            Some((u, k)) => {
                let q = MultiLaurent::var(Var::Q);
                let one_drop: Vec<u8> = u[..k].iter().chain(&u[k + 1..]).copied().collect();
                let two_drop: Vec<u8> = u[..k].iter().chain(&u[k + 2..]).copied().collect();
                let mut acc = WordSum::new();
                for (v, c) in self.normalize(&one_drop) {
                    add_into(&mut acc, v, &c * &(&q - &MultiLaurent::one()));
                }
                for (v, c) in self.normalize(&two_drop) {
                    add_into(&mut acc, v, &c * &q);
                }
                acc
            }
            None => WordSum::from([(class.iter().next().unwrap().clone(), MultiLaurent::one())]),
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }

    /// Normal form of a signed generator word, `T^{-1} = q^{-1} T + (q^{-1} − 1)`.
    pub fn normalize_signed(&mut self, letters: &[(u8, bool)]) -> WordSum {
        let qi = MultiLaurent::var_pow(Var::Q, -1);
        let mut flat = WordSum::from([(Vec::new(), MultiLaurent::one())]);
        for &(g, positive) in letters {
            let mut next = WordSum::new();
            for (w, c) in flat {
                let mut wg = w.clone();
                wg.push(g);
                if positive {
                    add_into(&mut next, wg, c);
                } else {
                    add_into(&mut next, wg, &c * &qi);
                    add_into(&mut next, w, &c * &(&qi - &MultiLaurent::one()));
                }
            }
            flat = next;
        }
        let mut acc = WordSum::new();
        for (w, c) in flat {
            for (v, d) in self.normalize(&w) {
                add_into(&mut acc, v, &c * &d);
            }
        }
        acc
    }

    /// Normal form of an element given in the `β^l` basis.
    pub fn normalize_element(&mut self, h: &HeckeElement) -> WordSum {
        let mut acc = WordSum::new();
        for (l, c) in h.terms() {
            let w: Vec<u8> = l.word().into_iter().map(|g| g as u8).collect();
            for (v, d) in self.normalize(&w) {
                add_into(&mut acc, v, c * &d);
            }
        }
        acc
    }
}
