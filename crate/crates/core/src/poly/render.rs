//! Text and LaTeX rendering of polynomials and rational functions.
//!
//! Terms print in descending monomial order as `c*z1^a*z2^b`, eliding
//! unit coefficients and unit exponents.

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::poly::{Exp2, Poly1, Poly2, RatFunc2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Plain,
    Latex,
}

fn latex_var(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit());
    match split {
        Some(i) if i > 0 => format!("{}_{{{}}}", &name[..i], &name[i..]),
        _ => name.to_string(),
    }
}

fn render_power(var: &str, exp: u32, style: Style) -> Option<String> {
    match (exp, style) {
        (0, _) => None,
        (1, Style::Plain) => Some(var.to_string()),
        (1, Style::Latex) => Some(latex_var(var)),
        (e, Style::Plain) => Some(format!("{var}^{e}")),
        (e, Style::Latex) if e < 10 => Some(format!("{}^{e}", latex_var(var))),
        (e, Style::Latex) => Some(format!("{}^{{{e}}}", latex_var(var))),
    }
}

fn render_coeff(c: &Rational, style: Style) -> String {
    match style {
        Style::Plain => c.to_string(),
        Style::Latex if c.is_integer() => c.to_string(),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

/// One term with a nonnegative coefficient.
fn render_term(c: &Rational, factors: &[String], style: Style) -> String {
    let sep = if style == Style::Plain { "*" } else { "" };
    let mono = factors.join(sep);
    if mono.is_empty() {
        render_coeff(c, style)
    } else if c.is_one() {
        mono
    } else {
        format!("{}{sep}{mono}", render_coeff(c, style))
    }
}

fn join_terms<'a>(terms: impl Iterator<Item = (&'a Rational, Vec<String>)>, style: Style) -> String {
    let mut out = String::new();
    for (i, (c, factors)) in terms.enumerate() {
        let body = render_term(&c.abs(), &factors, style);
        match (i, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_poly2(p: &Poly2<Rational>, vars: [&str; 2], style: Style) -> String {
    join_terms(
        p.terms().rev().map(|(Exp2(a, b), c)| {
            let factors = [render_power(vars[0], a, style), render_power(vars[1], b, style)];
            (c, factors.into_iter().flatten().collect())
        }),
        style,
    )
}

pub fn render_poly1(p: &Poly1<Rational>, var: &str, style: Style) -> String {
    join_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, render_power(var, k as u32, style).into_iter().collect())),
        style,
    )
}

fn wrap_numerator(text: String, terms: usize) -> String {
    if terms > 1 {
        format!("({text})")
    } else {
        text
    }
}

fn wrap_denominator(text: String, terms: usize) -> String {
    if terms > 1 || text.contains('*') {
        format!("({text})")
    } else {
        text
    }
}

/// `numerator/denominator`, or just the numerator when the denominator is 1.
pub fn render_fraction(num: String, num_terms: usize, den: String, den_terms: usize, den_is_one: bool, style: Style) -> String {
    match style {
        _ if den_is_one => num,
        Style::Plain => format!(
            "{}/{}",
            wrap_numerator(num, num_terms),
            wrap_denominator(den, den_terms)
        ),
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

pub fn render_ratfunc2(f: &RatFunc2, vars: [&str; 2], style: Style) -> String {
    let (n, d) = (f.numerator(), f.denominator());
    render_fraction(
        render_poly2(n, vars, style),
        n.len(),
        render_poly2(d, vars, style),
        d.len(),
        *d == Poly2::one(),
        style,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{from_frac, from_int};

    fn p2(terms: &[(u32, u32, i64)]) -> Poly2<Rational> {
        Poly2::from_terms(terms.iter().map(|&(a, b, c)| (Exp2(a, b), from_int(c))))
    }

    #[test]
    fn plain_terms() {
        let p = p2(&[(2, 1, 1), (1, 1, -1), (0, 1, -1), (1, 0, -1), (0, 0, 1)]);
        assert_eq!(render_poly2(&p, ["z1", "z2"], Style::Plain), "z1^2*z2 - z1*z2 - z2 - z1 + 1");
        assert_eq!(render_poly2(&p, ["z", "w"], Style::Plain), "z^2*w - z*w - w - z + 1");
        assert_eq!(render_poly2(&p2(&[(1, 0, -3)]), ["z", "w"], Style::Plain), "-3*z");
        assert_eq!(render_poly2(&Poly2::zero(), ["z", "w"], Style::Plain), "0");
        let half = Poly2::from_terms([(Exp2(0, 2), from_frac(1, 2))]);
        assert_eq!(render_poly2(&half, ["z1", "z2"], Style::Plain), "1/2*z2^2");
    }

    #[test]
    fn fractions() {
        let f = RatFunc2::new(p2(&[(0, 0, 1)]), p2(&[(1, 1, 1), (0, 1, -1), (0, 0, -1)])).unwrap();
        assert_eq!(render_ratfunc2(&f, ["z", "w"], Style::Plain), "1/(z*w - w - 1)");
        assert_eq!(render_ratfunc2(&f, ["z", "w"], Style::Latex), "\\frac{1}{zw - w - 1}");
        assert_eq!(render_ratfunc2(&f, ["z1", "z2"], Style::Latex), "\\frac{1}{z_{1}z_{2} - z_{2} - 1}");
        let g = RatFunc2::new(p2(&[(0, 0, 1)]), p2(&[(1, 1, 1)])).unwrap();
        assert_eq!(render_ratfunc2(&g, ["z", "w"], Style::Plain), "1/(z*w)");
        assert_eq!(render_ratfunc2(&RatFunc2::zero(), ["z", "w"], Style::Plain), "0");
    }

    #[test]
    fn univariate() {
        let p = Poly1::from_coeffs(vec![from_int(-1), from_int(-1), from_int(1)]);
        assert_eq!(render_poly1(&p, "z", Style::Plain), "z^2 - z - 1");
        let q = Poly1::from_coeffs(vec![from_int(0), from_int(0), from_int(0), from_int(0), from_int(0), from_int(0), from_int(0), from_int(0), from_int(0), from_int(0), from_int(2)]);
        assert_eq!(render_poly1(&q, "z", Style::Latex), "2z^{10}");
    }
}
