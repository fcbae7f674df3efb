use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Basis index `(l_1, …, l_n)` with `0 ≤ l_j ≤ j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeckeIndex(Vec<u8>);

impl HeckeIndex {
    pub fn new(l: Vec<u8>) -> Result<Self> {
        if l.iter().enumerate().any(|(j, &x)| x as usize > j + 1) {
            return Err(Error::InvalidIndex(l));
        }
        Ok(HeckeIndex(l))
    }

    pub(crate) fn new_unchecked(l: Vec<u8>) -> Self {
        debug_assert!(l.iter().enumerate().all(|(j, &x)| x as usize <= j + 1));
        HeckeIndex(l)
    }

    /// The identity element's index `(0, …, 0)`.
    pub fn zero(n: usize) -> Self {
        HeckeIndex(vec![0; n])
    }

    /// `T_j` as a basis element: only `l_j = 1`.
    pub fn generator(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::GeneratorOutOfRange { index: j, n });
        }
        let mut l = vec![0; n];
        l[j - 1] = 1;
        Ok(HeckeIndex(l))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Word length of `β^l`.
    pub fn length(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn in_m(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    pub fn in_n(&self) -> bool {
        self.in_m()
            && self
                .0
                .iter()
                .enumerate()
                .all(|(j, &x)| (j + 1) % 2 == 0 || x == 1)
    }

    /// Position in the mixed-radix enumeration of `L_n` (`l_j` has radix `j+1`).
    pub fn rank(&self) -> usize {
        let mut weight = 1;
        let mut r = 0;
        for (j, &x) in self.0.iter().enumerate() {
            r += x as usize * weight;
            weight *= j + 2;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Self {
        let mut l = Vec::with_capacity(n);
        for j in 0..n {
            l.push((r % (j + 2)) as u8);
            r /= j + 2;
        }
        HeckeIndex(l)
    }

    /// `|L_n| = (n+1)!`
    pub fn basis_size(n: usize) -> usize {
        (1..=n + 1).product()
    }

    /// All of `L_n`, in rank order.
    pub fn all(n: usize) -> impl Iterator<Item = HeckeIndex> {
        (0..Self::basis_size(n)).map(move |r| Self::unrank(n, r))
    }

    /// The `M_n` subset.
    pub fn all_m(n: usize) -> impl Iterator<Item = HeckeIndex> {
        (0..1usize << n)
            .map(move |bits| HeckeIndex((0..n).map(|j| ((bits >> j) & 1) as u8).collect()))
    }

    /// The `N_n` subset: `M_n` with `l_j = 1` at every odd `j`.
    pub fn all_n(n: usize) -> impl Iterator<Item = HeckeIndex> {
        Self::all_m(n).filter(HeckeIndex::in_n)
    }

    /// Distinct generator subscripts occurring in the word `β^l`.
    pub fn distinct_generators(&self) -> usize {
        // u_i^{l_i} uses T_{i-l_i+1} ..= T_i
        let mut used = vec![false; self.0.len()];
        for (i0, &x) in self.0.iter().enumerate() {
            let i = i0 + 1;
            for g in (i + 1 - x as usize)..=i {
                if x > 0 {
                    used[g - 1] = true;
                }
            }
        }
        used.into_iter().filter(|&b| b).count()
    }

    /// The word `β^l` as generator subscripts, left to right.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.length());
        for (i0, &x) in self.0.iter().enumerate() {
            let i = i0 + 1;
            for k in 0..x as usize {
                w.push(i - k);
            }
        }
        w
    }
}

impl fmt::Debug for HeckeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let l = HeckeIndex::new(vec![1, 0, 1]).unwrap();
        assert!(l.in_m() && l.in_n());
        let l = HeckeIndex::new(vec![0, 1]).unwrap();
        assert!(l.in_m() && !l.in_n());
        let l = HeckeIndex::new(vec![1, 2]).unwrap();
        assert!(!l.in_m());
        assert!(HeckeIndex::new(vec![2]).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(HeckeIndex::all(5).count(), 720);
        assert_eq!(HeckeIndex::all_m(5).count(), 32);
        assert_eq!(HeckeIndex::all_n(5).count(), 4);
        assert_eq!(
            HeckeIndex::all_n(2).collect::<Vec<_>>(),
            vec![HeckeIndex(vec![1, 0]), HeckeIndex(vec![1, 1])]
        );
        for (r, l) in HeckeIndex::all(4).enumerate() {
            assert_eq!(l.rank(), r);
        }
    }

    #[test]
    fn words() {
        let l = HeckeIndex::new(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(l.word(), vec![1, 2, 1, 4, 3, 2]);
        assert_eq!(l.length(), 6);
        assert_eq!(l.distinct_generators(), 4);
    }
}
