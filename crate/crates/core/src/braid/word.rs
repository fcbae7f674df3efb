use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hecke::{pk_poly, HeckeAlgebra, HeckeElement, TracePoly};
use crate::poly::{Monomial, Var};

/// A braid word `σ_{i_1}^{k_1} ⋯ σ_{i_p}^{k_p}` on `strands` strands.
///
/// Equal neighbors are merged and zero exponents dropped on construction, so
/// consecutive letters always have distinct generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i64)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::BraidSyntax(format!(
                "a braid needs at least 2 strands, got {strands}"
            )));
        }
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, k) in letters {
            if g == 0 || g >= strands {
                return Err(Error::GeneratorOutOfRange {
                    index: g,
                    n: strands - 1,
                });
            }
            if k == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, e)) if *h == g => {
                    *e += k;
                    if *e == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, k)),
            }
        }
        Ok(BraidWord {
            strands,
            letters: out,
        })
    }

    /// Parses `"1,-2,3"` or `"(1,-2,3)^5"`, with groups nesting freely.
    /// `strands` defaults to one more than the largest generator.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut p = Parser {
            s: text.as_bytes(),
            pos: 0,
        };
        let letters = p.list()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        let strands =
            strands.unwrap_or_else(|| letters.iter().map(|&(g, _)| g + 1).max().unwrap_or(2));
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Number of generators, `n = strands − 1`.
    pub fn n(&self) -> usize {
        self.strands - 1
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, k)| k).sum()
    }

    /// The mirror image: every crossing reversed.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&(g, k)| (g, -k)).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        Self::new(
            self.strands,
            self.letters.iter().chain(&other.letters).copied(),
        )
    }

    pub fn repeat(&self, times: usize) -> BraidWord {
        Self::new(
            self.strands,
            std::iter::repeat_n(self.letters.iter().copied(), times).flatten(),
        )
        .expect("repeating a valid word")
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &(g, k) in &self.letters {
            if k % 2 != 0 {
                perm.swap(g - 1, g);
            }
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    /// Maximal runs of strictly increasing generators.
    pub fn ascending_runs(&self) -> Vec<&[(usize, i64)]> {
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 1..=self.letters.len() {
            if i == self.letters.len() || self.letters[i].0 <= self.letters[i - 1].0 {
                if i > start {
                    runs.push(&self.letters[start..i]);
                }
                start = i;
            }
        }
        runs
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(g, k) in &self.letters {
            let s = if k > 0 { g as i64 } else { -(g as i64) };
            for _ in 0..k.unsigned_abs() {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::BraidSyntax(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn list(&mut self) -> Result<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        if matches!(self.peek(), None | Some(b')')) {
            return Ok(out);
        }
        loop {
            out.extend(self.item()?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn item(&mut self) -> Result<Vec<(usize, i64)>> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.list()?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            let times = if self.peek() == Some(b'^') {
                self.pos += 1;
                let t = self.int()?;
                if t < 0 {
                    return Err(self.err("negative repetition count"));
                }
                t as usize
            } else {
                1
            };
            Ok(std::iter::repeat_n(inner, times).flatten().collect())
        } else {
            let g = self.int()?;
            if g == 0 {
                return Err(self.err("generator 0 does not exist"));
            }
            Ok(vec![(g.unsigned_abs() as usize, g.signum())])
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.err("expected an integer")
            })
    }
}

/// `ρ(w)` expanded in the basis.
pub fn braid_to_hecke(w: &BraidWord) -> HeckeElement {
    braid_to_hecke_with(&HeckeAlgebra::new(w.n()), w).expect("algebra matches the word")
}

/// As [`braid_to_hecke`], reusing the caches of `alg`.
///
/// Each ascending run `T_{i_1}^{k_1} ⋯ T_{i_s}^{k_s}` is expanded from the right
/// with `T^k x = P_k(q) T x + q P_{k-1}(q) x`, which keeps it inside the span of
/// the `M`-basis; the runs are then multiplied right to left.
pub fn braid_to_hecke_with(alg: &HeckeAlgebra, w: &BraidWord) -> Result<HeckeElement> {
    if alg.n() != w.n() {
        return Err(Error::StrandMismatch(alg.n() + 1, w.strands()));
    }
    let n = w.n();
    let q = Monomial::var(Var::Q);
    let mut acc = HeckeElement::identity(n);
    for run in w.ascending_runs().into_iter().rev() {
        let mut r = HeckeElement::identity(n);
        for &(g, k) in run.iter().rev() {
            let tr = alg.mul_generator(g, &r)?;
            let pq = pk_poly(k - 1).mul_monomial(&q);
            r = tr.scale(&pk_poly(k)).add(&r.scale(&pq));
        }
        acc = alg.mul_elements(&r, &acc)?;
    }
    Ok(acc)
}

/// `Tr(ρ(w))`.
pub fn braid_trace(alg: &HeckeAlgebra, w: &BraidWord) -> Result<TracePoly> {
    alg.trace_element(&braid_to_hecke_with(alg, w)?)
}
