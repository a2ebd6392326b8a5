//! Bivariate GCD over the rationals.
//!
//! Polynomials are viewed in `Q[z2][z1]`. Contents (gcds of the `z2`
//! coefficients) are handled with the univariate Euclidean algorithm and the
//! primitive parts with a primitive pseudo-remainder sequence in `z1`.

use num_traits::Zero;

use crate::arith::Rational;
use crate::poly::{Exp2, Poly1, Poly2};

/// Greatest common divisor, normalized to an integer primitive polynomial
/// with positive leading coefficient. Zero only when both inputs are zero.
pub fn gcd(p: &Poly2<Rational>, q: &Poly2<Rational>) -> Poly2<Rational> {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    let (mp, mq) = (p.min_exponents(), q.min_exponents());
    let mono = Exp2(mp.0.min(mq.0), mp.1.min(mq.1));
    let p = p.div_monomial(mp).expect("minimal exponents divide every term");
    let q = q.div_monomial(mq).expect("minimal exponents divide every term");

    let (cont_p, pp_p) = content_and_primitive(p.to_z1_major());
    let (cont_q, pp_q) = content_and_primitive(q.to_z1_major());
    let cont = cont_p.gcd(&cont_q);

    let (mut a, mut b) = if pp_p.len() >= pp_q.len() {
        (pp_p, pp_q)
    } else {
        (pp_q, pp_p)
    };
    if coprime_by_specialization(&a, &b) {
        b.clear();
        a = vec![Poly1::one()];
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = content_and_primitive(r).1;
    }
    // A primitive polynomial of z1-degree zero is a unit.
    let prim = if a.len() <= 1 {
        Poly2::one()
    } else {
        Poly2::from_z1_major(&a)
    };
    let g = &Poly2::from_univariate(&cont, 2) * &prim;
    g.mul_term(mono, &Rational::from_integer(1.into())).normalized()
}

/// Splits a `z1`-major polynomial into its content in `Q[z2]` (monic) and the
/// primitive part, scaled to integer coefficients.
fn content_and_primitive(rows: Vec<Poly1<Rational>>) -> (Poly1<Rational>, Vec<Poly1<Rational>>) {
    let rows = trim(rows);
    if rows.is_empty() {
        return (Poly1::zero(), rows);
    }
    let cont = rows
        .iter()
        .fold(Poly1::zero(), |acc, r| acc.gcd(r));
    let prim: Vec<Poly1<Rational>> = rows
        .iter()
        .map(|r| {
            let (q, rem) = r.div_rem(&cont);
            debug_assert!(rem.is_zero());
            q
        })
        .collect();
    let scale = super::univariate::content_of(prim.iter().flat_map(|r| r.coeffs().iter())).recip();
    (cont, prim.iter().map(|r| r.scale(&scale)).collect())
}

/// True when some `z2 = t` keeps the leading coefficient of `b` nonzero and
/// leaves coprime univariate images; then `a` and `b` have no common factor
/// of positive `z1`-degree.
fn coprime_by_specialization(a: &[Poly1<Rational>], b: &[Poly1<Rational>]) -> bool {
    if a.len() <= 1 || b.len() <= 1 {
        return false;
    }
    let image = |rows: &[Poly1<Rational>], t: &Rational| Poly1::from_coeffs(rows.iter().map(|r| r.eval(t)).collect());
    (0..8i64).any(|k| {
        let t = Rational::from_integer(k.into());
        !b[b.len() - 1].eval(&t).is_zero() && image(a, &t).gcd(&image(b, &t)).degree() == Some(0)
    })
}

fn trim(mut rows: Vec<Poly1<Rational>>) -> Vec<Poly1<Rational>> {
    while rows.last().is_some_and(|r| r.is_zero()) {
        rows.pop();
    }
    rows
}

/// Remainder `r` with `lc(b)^k * a = q * b + r` and `deg r < deg b` in `z1`.
fn pseudo_rem(a: &[Poly1<Rational>], b: &[Poly1<Rational>]) -> Vec<Poly1<Rational>> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for row in r.iter_mut() {
            *row = &*row * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lr * bj;
            r[shift + j] = &r[shift + j] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r = trim(r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::from_int;
    use proptest::prelude::*;

    fn p2(terms: &[(u32, u32, i64)]) -> Poly2<Rational> {
        Poly2::from_terms(terms.iter().map(|&(a, b, c)| (Exp2(a, b), from_int(c))))
    }

    #[test]
    fn constructed_common_factor() {
        let f = p2(&[(1, 0, 1), (0, 0, -1)]);
        let a = &f * &p2(&[(1, 0, 1), (0, 1, 1)]);
        let b = &f * &p2(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = p2(&[(1, 1, -2), (0, 0, 4)]);
        assert_eq!(gcd(&p, &Poly2::zero()), p2(&[(1, 1, 1), (0, 0, -2)]));
        assert_eq!(gcd(&Poly2::zero(), &p), p2(&[(1, 1, 1), (0, 0, -2)]));
    }

    #[test]
    fn idempotent() {
        let p = p2(&[(1, 1, 1), (0, 1, -1), (0, 0, -1)]);
        assert_eq!(gcd(&p, &p), p);
    }

    #[test]
    fn pure_z2_and_monomial_factors() {
        let a = p2(&[(2, 3, 1), (0, 2, 1)]); // z2^2 (z1^2 z2 + 1)
        let b = p2(&[(1, 2, 3)]);
        assert_eq!(gcd(&a, &b), p2(&[(0, 2, 1)]));
        let c = &p2(&[(0, 1, 1), (0, 0, 1)]) * &p2(&[(1, 0, 1), (0, 0, 2)]);
        let d = &p2(&[(0, 1, 1), (0, 0, 1)]) * &p2(&[(1, 1, 1), (0, 0, 5)]);
        assert_eq!(gcd(&c, &d), p2(&[(0, 1, 1), (0, 0, 1)]));
    }

    #[test]
    fn coprime_gives_one() {
        let a = p2(&[(1, 1, 1), (0, 1, -1), (0, 0, -1)]);
        let b = p2(&[(2, 0, 1), (0, 1, 1)]);
        assert_eq!(gcd(&a, &b), Poly2::one());
    }

    fn small() -> impl Strategy<Value = Poly2<Rational>> {
        prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 1..5)
            .prop_map(|ts| p2(&ts))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn gcd_divides_and_captures_common_factor(a in small(), b in small(), f in small()) {
            prop_assume!(!f.is_zero() && !(a.is_zero() && b.is_zero()));
            let (fa, fb) = (&f * &a, &f * &b);
            let g = gcd(&fa, &fb);
            prop_assert!(fa.div_exact(&g).is_ok());
            prop_assert!(fb.div_exact(&g).is_ok());
            prop_assert!(g.div_exact(&f.normalized()).is_ok());
        }
    }
}
