use std::fmt;
use std::str::FromStr;

/// The fixed variable universe. Declaration order is the canonical term order.
///
/// `X` is the square root of `T`; half-integer powers of `t` are integer
/// powers of `x`. `KhQ` is the Khovanov quantum grading variable, and `A`,
/// `HomZ`, `HomB` are the HOMFLY-PT variables (`b = a² - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    Z,
    S,
    B,
    T,
    X,
    KhQ,
    A,
    HomZ,
    HomB,
}

pub const NUM_VARS: usize = 10;

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::Q,
        Var::Z,
        Var::S,
        Var::B,
        Var::T,
        Var::X,
        Var::KhQ,
        Var::A,
        Var::HomZ,
        Var::HomB,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::Z => "z",
            Var::S => "s",
            Var::B => "b",
            Var::T => "t",
            Var::X => "x",
            Var::KhQ => "Q",
            Var::A => "A",
            Var::HomZ => "Z",
            Var::HomB => "B",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.symbol() == s)
            .ok_or_else(|| format!("unknown variable {s:?}"))
    }
}

/// Exponent vector over [`Var::ALL`]. Zero exponents are simply absent
/// variables, so equality of monomials is equality of exponent maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([i32; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, exp: i32) -> Self {
        let mut e = [0; NUM_VARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut e = [0; NUM_VARS];
        for (v, x) in pairs {
            e[v.index()] += x;
        }
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn set_exp(&mut self, v: Var, exp: i32) {
        self.0[v.index()] = exp;
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Nonzero exponents in canonical variable order.
    pub fn iter(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        Var::ALL
            .iter()
            .copied()
            .zip(self.0.iter().copied())
            .filter(|&(_, e)| e != 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Drops `v` from the monomial, returning its former exponent.
    pub fn take(&mut self, v: Var) -> i32 {
        std::mem::replace(&mut self.0[v.index()], 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
