use super::element::HeckeElement;
use super::index::HeckeIndex;
use crate::error::Result;
use crate::poly::{rat, Monomial, MultiLaurent, Var};

/// `P_k(q)`, the coefficient of `T_j` in `T_j^k = P_k(q) T_j + q P_{k-1}(q)`.
///
/// `P_k = (-1)^{k-1} Σ_{j<k} (-q)^j` for `k > 0`, `P_{-k} = q^{-k} Σ_{j<k} (-q)^j`,
/// and `P_0 = 0`.
pub fn pk_poly(k: i64) -> MultiLaurent {
    let alt_sum = |len: i64, shift: i32, sign: i64| {
        MultiLaurent::from_terms((0..len).map(|j| {
            let s = if j % 2 == 0 { sign } else { -sign };
            (rat(s), Monomial::var_pow(Var::Q, shift + j as i32))
        }))
    };
    match k {
        0 => MultiLaurent::zero(),
        k if k > 0 => alt_sum(k, 0, if k % 2 == 1 { 1 } else { -1 }),
        k => alt_sum(-k, k as i32, 1),
    }
}

/// `T_j^k` in `H_{n+1}(q)`.
pub fn generator_power(n: usize, j: usize, k: i64) -> Result<HeckeElement> {
    let t = HeckeIndex::generator(n, j)?;
    let q = MultiLaurent::var(Var::Q);
    let mut h = HeckeElement::zero(n);
    h.add_term(t, pk_poly(k));
    h.add_term(HeckeIndex::zero(n), &q * &pk_poly(k - 1));
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MultiLaurent {
        MultiLaurent::var(Var::Q)
    }

    #[test]
    fn small_values() {
        assert!(pk_poly(0).is_zero());
        assert!(pk_poly(1).is_one());
        assert_eq!(pk_poly(2), MultiLaurent::univariate(Var::Q, 0, &[-1, 1]));
        assert_eq!(pk_poly(-1), MultiLaurent::var_pow(Var::Q, -1));
        assert_eq!(pk_poly(-2), MultiLaurent::univariate(Var::Q, -2, &[1, -1]));
    }

    #[test]
    fn recurrence_and_closed_form() {
        let one = MultiLaurent::one();
        for k in -12i64..=12 {
            let lhs = &(&q() * &pk_poly(k - 1)) + &(&(&q() - &one) * &pk_poly(k));
            assert_eq!(lhs, pk_poly(k + 1), "recurrence at k={k}");
            // (q+1) P_k = q^k - (-1)^k
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let rhs = &MultiLaurent::var_pow(Var::Q, k as i32) - &MultiLaurent::from_int(sign);
            assert_eq!(&(&q() + &one) * &pk_poly(k), rhs, "closed form at k={k}");
        }
    }

    #[test]
    fn generator_powers() {
        let n = 3;
        let t2 = HeckeIndex::generator(n, 2).unwrap();
        let id = HeckeIndex::zero(n);
        let g1 = generator_power(n, 2, 1).unwrap();
        assert_eq!(
            g1,
            HeckeElement::from_terms(n, [(t2.clone(), MultiLaurent::one())])
        );
        let g2 = generator_power(n, 2, 2).unwrap();
        assert_eq!(
            g2,
            HeckeElement::from_terms(
                n,
                [(t2.clone(), &q() - &MultiLaurent::one()), (id.clone(), q())]
            )
        );
        let gm1 = generator_power(n, 2, -1).unwrap();
        let qi = MultiLaurent::var_pow(Var::Q, -1);
        assert_eq!(
            gm1,
            HeckeElement::from_terms(n, [(t2, qi.clone()), (id, &qi - &MultiLaurent::one())])
        );
        assert!(generator_power(n, 4, 1).is_err());
        assert!(generator_power(n, 0, 1).is_err());
    }
}
