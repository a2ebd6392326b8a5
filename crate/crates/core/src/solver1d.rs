//! Generating functions of one-dimensional recurrences.
//!
//! For a sequence `phi` with `c0 phi(x) + ... + cm phi(x+m) = 0` the
//! generating function `sum phi(x) z^-x` equals `N(z) / Q(z)` with
//! `Q(z) = sum c_a z^a` and `N(z) = sum_{a=1..m} sum_{x<a} c_a phi(x) z^(a-x)`.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::Rational;
use crate::poly::render::{render_fraction, render_poly1, Style};
use crate::poly::{univariate_content, Poly1};
use crate::recurrence::extend_sequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Solve1dError {
    #[error("recurrence needs at least two coefficients")]
    OrderTooSmall,
    #[error("leading recurrence coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("expected {expected} initial values, got {found}")]
    InitLengthMismatch { expected: usize, found: usize },
}

/// Univariate rational function in canonical form: reduced, jointly
/// primitive integer coefficients, positive leading denominator coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc1 {
    numerator: Poly1<Rational>,
    denominator: Poly1<Rational>,
}

impl RatFunc1 {
    /// Panics on a zero denominator.
    pub fn new(numerator: Poly1<Rational>, denominator: Poly1<Rational>) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        if numerator.is_zero() {
            return Self {
                numerator,
                denominator: Poly1::one(),
            };
        }
        let g = numerator.gcd(&denominator);
        let numerator = numerator.div_rem(&g).0;
        let denominator = denominator.div_rem(&g).0;
        let mut s = univariate_content(numerator.coeffs().iter().chain(denominator.coeffs())).recip();
        if denominator.leading().is_some_and(|c| c.is_negative()) {
            s = -s;
        }
        Self {
            numerator: numerator.scale(&s),
            denominator: denominator.scale(&s),
        }
    }

    pub fn numerator(&self) -> &Poly1<Rational> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly1<Rational> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn render(&self, var: &str, style: Style) -> String {
        render_fraction(
            render_poly1(&self.numerator, var, style),
            count_terms(&self.numerator),
            render_poly1(&self.denominator, var, style),
            count_terms(&self.denominator),
            self.denominator == Poly1::one(),
            style,
        )
    }

    /// Coefficients `a_0, ..., a_{terms-1}` of the expansion
    /// `sum a_k z^-k`. Panics if the function has no such expansion
    /// (numerator degree above denominator degree).
    pub fn expand_inverse_powers(&self, terms: usize) -> Vec<Rational> {
        expand_inverse_powers(&self.numerator, &self.denominator, terms)
    }
}

fn count_terms(p: &Poly1<Rational>) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Expansion of `num / den` in nonpositive powers of `z`, via reversal to an
/// ordinary power series in `u = 1/z`.
pub fn expand_inverse_powers(num: &Poly1<Rational>, den: &Poly1<Rational>, terms: usize) -> Vec<Rational> {
    let dd = den.degree().expect("zero denominator");
    let bound = dd.max(num.degree().unwrap_or(0));
    assert!(bound == dd, "numerator degree exceeds denominator degree");
    // u^bound * p(1/u): coefficient of u^k is p's coefficient of z^(bound-k).
    let rev = |p: &Poly1<Rational>, k: usize| -> Rational { p.coeff(bound - k) };
    let lead = rev(den, 0);
    let mut out: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = if k <= bound { rev(num, k) } else { Rational::zero() };
        for j in 1..=k.min(bound) {
            acc -= rev(den, j) * &out[k - j];
        }
        out.push(acc / &lead);
    }
    out
}

fn check(coeffs: &[Rational], init: &[Rational]) -> Result<(), Solve1dError> {
    let Some(lead) = coeffs.last() else {
        return Err(Solve1dError::OrderTooSmall);
    };
    if coeffs.len() < 2 {
        return Err(Solve1dError::OrderTooSmall);
    }
    if lead.is_zero() {
        return Err(Solve1dError::ZeroLeadingCoefficient);
    }
    if init.len() != coeffs.len() - 1 {
        return Err(Solve1dError::InitLengthMismatch {
            expected: coeffs.len() - 1,
            found: init.len(),
        });
    }
    Ok(())
}

/// Unreduced numerator and denominator of the generating function.
pub fn gf_1d_parts(coeffs: &[Rational], init: &[Rational]) -> Result<(Poly1<Rational>, Poly1<Rational>), Solve1dError> {
    check(coeffs, init)?;
    let m = coeffs.len() - 1;
    let mut num = vec![Rational::zero(); m + 1];
    for (a, ca) in coeffs.iter().enumerate().skip(1) {
        for (x, phi) in init.iter().enumerate().take(a) {
            num[a - x] += ca * phi;
        }
    }
    Ok((Poly1::from_coeffs(num), Poly1::from_coeffs(coeffs.to_vec())))
}

/// `sum_{x >= 0} phi(x) z^-x`.
pub fn gf_1d(coeffs: &[Rational], init: &[Rational]) -> Result<RatFunc1, Solve1dError> {
    let (n, q) = gf_1d_parts(coeffs, init)?;
    Ok(RatFunc1::new(n, q))
}

/// Unreduced form of the shifted tail: `(N, Q, k)` with the tail equal to
/// `N(z) / (Q(z) z^k)`, `k = start + 1`.
pub fn gf_1d_shifted_parts(
    coeffs: &[Rational],
    init: &[Rational],
    start: usize,
) -> Result<(Poly1<Rational>, Poly1<Rational>, usize), Solve1dError> {
    check(coeffs, init)?;
    let mu = init.len();
    let window = extend_sequence(coeffs, init, start + mu).split_off(start);
    let (n, q) = gf_1d_parts(coeffs, &window)?;
    Ok((n, q, start + 1))
}

/// `sum_{y >= 0} phi(start + y) z^-(start + y + 1)`.
pub fn gf_1d_shifted(coeffs: &[Rational], init: &[Rational], start: usize) -> Result<RatFunc1, Solve1dError> {
    let (n, q, k) = gf_1d_shifted_parts(coeffs, init, start)?;
    Ok(RatFunc1::new(n, q.shift(k)))
}

impl Default for RatFunc1 {
    fn default() -> Self {
        Self {
            numerator: Poly1::zero(),
            denominator: Poly1::constant(Rational::one()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{from_frac, from_int};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| from_int(x)).collect()
    }

    fn plain(f: &RatFunc1) -> String {
        f.render("z", Style::Plain)
    }

    #[test]
    fn de_moivre_examples() {
        let fib = gf_1d(&ints(&[-1, -1, 1]), &ints(&[0, 1])).unwrap();
        assert_eq!(plain(&fib), "z/(z^2 - z - 1)");
        let ones = gf_1d(&ints(&[-1, 1]), &ints(&[1])).unwrap();
        assert_eq!(plain(&ones), "z/(z - 1)");
        assert_eq!(ones.expand_inverse_powers(6), ints(&[1; 6]));
        let zero = gf_1d(&ints(&[2, -3, 1]), &ints(&[0, 0])).unwrap();
        assert!(zero.is_zero());
        assert_eq!(plain(&zero), "0");
    }

    #[test]
    fn denominator_is_characteristic_polynomial() {
        let (_, q) = gf_1d_parts(&ints(&[3, 0, -2, 4]), &ints(&[1, 1, 1])).unwrap();
        assert_eq!(q.coeffs(), &ints(&[3, 0, -2, 4])[..]);
    }

    #[test]
    fn shifted_examples() {
        let tail = gf_1d_shifted(&ints(&[-1, 1]), &ints(&[1]), 1).unwrap();
        assert_eq!(plain(&tail), "1/(z^2 - z)");
        assert_eq!(tail.expand_inverse_powers(5), ints(&[0, 0, 1, 1, 1]));

        let c = ints(&[-2, -1, 1]);
        let i = ints(&[3, -1]);
        let g = gf_1d(&c, &i).unwrap();
        let shifted = gf_1d_shifted(&c, &i, 0).unwrap();
        let expected = RatFunc1::new(g.numerator().clone(), g.denominator().shift(1));
        assert_eq!(shifted, expected);

        let bloom_col = gf_1d_shifted(&ints(&[0, 1]), &ints(&[1]), 1).unwrap();
        assert!(bloom_col.is_zero());
    }

    #[test]
    fn errors() {
        assert_eq!(gf_1d(&ints(&[1, 0]), &ints(&[1])), Err(Solve1dError::ZeroLeadingCoefficient));
        assert_eq!(gf_1d(&ints(&[1]), &[]), Err(Solve1dError::OrderTooSmall));
        assert_eq!(
            gf_1d(&ints(&[1, 1]), &ints(&[1, 2])),
            Err(Solve1dError::InitLengthMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn rational_coefficients_normalize() {
        let f = gf_1d(&[from_frac(-1, 2), from_int(1)], &[from_int(2)]).unwrap();
        // 2z / (z - 1/2) = 4z / (2z - 1)
        assert_eq!(plain(&f), "4*z/(2*z - 1)");
        assert_eq!(f.expand_inverse_powers(4), vec![from_int(2), from_int(1), from_frac(1, 2), from_frac(1, 4)]);
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..6).prop_map(|(n, d)| from_frac(n, d))
    }

    fn recurrence() -> impl Strategy<Value = (Vec<Rational>, Vec<Rational>)> {
        (1usize..=4).prop_flat_map(|mu| {
            (
                prop::collection::vec(small_rat(), mu + 1).prop_filter("leading nonzero", |c| !c.last().unwrap().is_zero()),
                prop::collection::vec(small_rat(), mu),
            )
        })
    }

    proptest! {
        #[test]
        fn shifted_expansion_matches_iteration((c, i) in recurrence(), start in 0usize..=5) {
            let f = gf_1d_shifted(&c, &i, start).unwrap();
            let series = f.expand_inverse_powers(start + 26);
            let direct = extend_sequence(&c, &i, start + 25);
            for k in 0..start + 26 {
                let expected = if k > start { direct[k - 1].clone() } else { Rational::zero() };
                prop_assert_eq!(&series[k], &expected, "z^-{}", k);
            }
        }

        #[test]
        fn numerator_is_linear_in_init((c, a) in recurrence(), s in small_rat()) {
            let b: Vec<Rational> = a.iter().rev().cloned().collect();
            let mix: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| &s * x + y).collect();
            let (na, qa) = gf_1d_parts(&c, &a).unwrap();
            let (nb, qb) = gf_1d_parts(&c, &b).unwrap();
            let (nm, qm) = gf_1d_parts(&c, &mix).unwrap();
            prop_assert_eq!(&qa, &qb);
            prop_assert_eq!(&qa, &qm);
            prop_assert_eq!(nm, &na.scale(&s) + &nb);
        }
    }
}
