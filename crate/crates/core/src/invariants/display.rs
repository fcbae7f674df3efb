use num_rational::BigRational;
use num_traits::{One, Signed};

/// Joins `(coefficient, monomial text)` pairs as `a - 2b + c`, dropping unit
/// coefficients in front of non-empty monomials.
pub(crate) fn join_terms<'a, I>(terms: I, mul: &str) -> String
where
    I: IntoIterator<Item = (&'a BigRational, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&a.to_string());
            out.push_str(mul);
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `t`, `t^2`, `t^-1`, `t^-13/2` (or the braced LaTeX forms).
pub(crate) fn power(var: &str, num: i64, den: i64, latex: bool) -> String {
    if num == 0 {
        return String::new();
    }
    if num == den {
        return var.to_string();
    }
    let e = if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    };
    if latex {
        format!("{var}^{{{e}}}")
    } else {
        format!("{var}^{e}")
    }
}
