//! Generating function of the two-dimensional initial value problem.
//!
//! With `P_tau(z) = sum_{alpha <= m, not alpha <= tau} c_alpha z^alpha`,
//!
//! ```text
//! P(z) F(z) = sum_{xi < m}   P_xi(z)      phi(xi) / (z1^(xi1+1) z2^(xi2+1))
//!           + sum_{xi1 < m1} P_(xi1,m2)(z) Phi_xi1(z2) / z1^(xi1+1)
//!           + sum_{xi2 < m2} P_(m1,xi2)(z) Psi_xi2(z1) / z2^(xi2+1)
//! ```
//!
//! where `Phi_xi1` and `Psi_xi2` are the tails of the strip lines past the
//! corner, as produced by [`gf_1d_shifted`](crate::solver1d::gf_1d_shifted).

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::poly::{gcd, Exp2, Poly1, Poly2, RatFunc2};
use crate::recurrence::{DifferenceEquation2, Problem, ProblemError, ResolvedInitialData, ResolvedLine};
use crate::solver1d::{gf_1d, gf_1d_shifted_parts};

/// `P(z) = sum c_alpha z1^alpha1 z2^alpha2`.
pub fn char_poly(eq: &DifferenceEquation2) -> Poly2<Rational> {
    Poly2::from_terms(eq.coeffs().map(|((a1, a2), c)| (Exp2(a1, a2), c.clone())))
}

/// `P_tau`: the part of `P` supported on exponents not below `tau`.
pub fn boundary_poly(eq: &DifferenceEquation2, tau: (u32, u32)) -> Poly2<Rational> {
    Poly2::from_terms(
        eq.coeffs()
            .filter(|((a1, a2), _)| !(*a1 <= tau.0 && *a2 <= tau.1))
            .map(|((a1, a2), c)| (Exp2(a1, a2), c.clone())),
    )
}

/// Resolves the initial data and returns the reduced generating function.
pub fn assemble_gf(problem: &Problem) -> Result<RatFunc2, ProblemError> {
    let data = problem.resolve()?;
    Ok(Assembly::new(&problem.equation, &data).reduced())
}

/// Same value as [`assemble_gf`] but without the final gcd cancellation.
pub fn assemble_gf_unreduced(problem: &Problem) -> Result<RatFunc2, ProblemError> {
    let data = problem.resolve()?;
    Ok(assemble_resolved(&problem.equation, &data))
}

/// Unreduced generating function of already resolved data.
pub fn assemble_resolved(eq: &DifferenceEquation2, data: &ResolvedInitialData) -> RatFunc2 {
    Assembly::new(eq, data).unreduced()
}

/// Line tail as a reduced fraction `n / q` in the line variable, without the
/// `z^-(start+1)` factor.
fn line_parts(line: &ResolvedLine, start: u32) -> (Poly1<Rational>, Poly1<Rational>) {
    let (n, q, _) = gf_1d_shifted_parts(&line.recurrence.coeffs, &line.segment, start as usize)
        .expect("resolved lines are validated");
    if n.is_zero() {
        return (n, Poly1::one());
    }
    let g = n.gcd(&q);
    (n.div_rem(&g).0, q.div_rem(&g).0)
}

fn lcm(a: &Poly1<Rational>, b: &Poly1<Rational>) -> Poly1<Rational> {
    (a * b).div_rem(&a.gcd(b)).0
}

fn exact_quotient(a: &Poly1<Rational>, b: &Poly1<Rational>) -> Poly1<Rational> {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero());
    q
}

/// Numerator over the factored denominator `z^shift * u(z1) * v(z2) * p(z)`.
struct Assembly {
    numerator: Poly2<Rational>,
    shift: Exp2,
    u: Poly1<Rational>,
    v: Poly1<Rational>,
    p: Poly2<Rational>,
}

impl Assembly {
    fn new(eq: &DifferenceEquation2, data: &ResolvedInitialData) -> Self {
        let (m1, m2) = eq.corner();
        let one = Rational::one();

        // Column tails are fractions in z2, row tails in z1.
        let columns: Vec<_> = (0..m1).map(|x1| line_parts(data.column(x1), m2)).collect();
        let rows: Vec<_> = (0..m2).map(|x2| line_parts(data.row(x2), m1)).collect();
        let v = columns.iter().fold(Poly1::one(), |acc, (_, q)| lcm(&acc, q));
        let u = rows.iter().fold(Poly1::one(), |acc, (_, q)| lcm(&acc, q));
        let (u2, v2) = (Poly2::from_univariate(&u, 1), Poly2::from_univariate(&v, 2));
        let uv = &u2 * &v2;

        let mut num = Poly2::zero();
        for x1 in 0..m1 {
            for x2 in 0..m2 {
                let phi = data.phi_at((x1, x2)).expect("block points lie in the initial set");
                if phi.is_zero() {
                    continue;
                }
                let term = boundary_poly(eq, (x1, x2)).mul_term(Exp2(m1 - x1, m2 - x2), &phi);
                num = &num + &(&term * &uv);
            }
        }
        for (x1, (n, q)) in columns.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let cofactor = Poly2::from_univariate(&(n * &exact_quotient(&v, q)), 2);
            let term = boundary_poly(eq, (x1 as u32, m2)).mul_term(Exp2(m1 - x1 as u32, 0), &one);
            num = &num + &(&(&term * &cofactor) * &u2);
        }
        for (x2, (n, q)) in rows.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let cofactor = Poly2::from_univariate(&(n * &exact_quotient(&u, q)), 1);
            let term = boundary_poly(eq, (m1, x2 as u32)).mul_term(Exp2(0, m2 - x2 as u32), &one);
            num = &num + &(&(&term * &cofactor) * &v2);
        }
        Self {
            numerator: num,
            shift: Exp2(m1 + 1, m2 + 1),
            u,
            v,
            p: char_poly(eq),
        }
    }

    fn denominator(&self) -> Poly2<Rational> {
        let uv = &Poly2::from_univariate(&self.u, 1) * &Poly2::from_univariate(&self.v, 2);
        (&uv * &self.p).mul_term(self.shift, &Rational::one())
    }

    fn unreduced(self) -> RatFunc2 {
        let den = self.denominator();
        RatFunc2::unreduced(self.numerator, den).expect("characteristic polynomial is nonzero")
    }

    /// Cancels the gcd factor by factor: the monomial, the univariate line
    /// denominators, then the characteristic polynomial.
    fn reduced(mut self) -> RatFunc2 {
        if self.numerator.is_zero() {
            return RatFunc2::zero();
        }
        let low = self.numerator.min_exponents();
        let cut = Exp2(low.0.min(self.shift.0), low.1.min(self.shift.1));
        self.numerator = self.numerator.div_monomial(cut).expect("cut is below every exponent");
        self.shift = self.shift.checked_sub(cut).expect("cut is below the shift");

        for axis in [1u8, 2] {
            loop {
                let d = if axis == 1 { &self.u } else { &self.v };
                let g = univariate_coefficients(&self.numerator, axis)
                    .iter()
                    .fold(d.clone(), |g, c| if g.degree() == Some(0) { g } else { g.gcd(c) });
                if g.degree() == Some(0) {
                    break;
                }
                self.numerator = self
                    .numerator
                    .div_exact(&Poly2::from_univariate(&g, axis))
                    .expect("common factor divides the numerator");
                let d = if axis == 1 { &mut self.u } else { &mut self.v };
                *d = exact_quotient(d, &g);
            }
        }

        let g = gcd(&self.numerator, &self.p);
        if g != Poly2::one() {
            self.numerator = self.numerator.div_exact(&g).expect("gcd divides the numerator");
            self.p = self.p.div_exact(&g).expect("gcd divides the characteristic polynomial");
        }
        self.unreduced()
    }
}

/// Coefficients of `p` as univariate polynomials in the variable `axis`,
/// one per power of the other variable.
fn univariate_coefficients(p: &Poly2<Rational>, axis: u8) -> Vec<Poly1<Rational>> {
    if axis == 2 {
        return p.to_z1_major();
    }
    Poly2::from_terms(p.terms().map(|(Exp2(a, b), c)| (Exp2(b, a), c.clone()))).to_z1_major()
}

/// Tail `sum_{x >= start} s(x) z^-(x+1)` of a line, computed as the full
/// generating function minus its first `start` terms and divided by `z`.
fn tail_by_subtraction(line: &ResolvedLine, start: u32, axis_var: u8) -> RatFunc2 {
    let full = gf_1d(&line.recurrence.coeffs, &line.segment).expect("resolved lines are validated");
    let embed = |p: &Poly1<Rational>| Poly2::from_univariate(p, axis_var);
    let unit = |k: u32| if axis_var == 1 { Exp2(k, 0) } else { Exp2(0, k) };
    let full = RatFunc2::unreduced(embed(full.numerator()), embed(full.denominator())).expect("nonzero");
    let head = line
        .values(start as usize)
        .into_iter()
        .enumerate()
        .fold(RatFunc2::zero(), |acc, (x, v)| {
            acc.add_unreduced(&RatFunc2::inverse_monomial(v, unit(x as u32)))
        });
    full.add_unreduced(&head.neg())
        .mul_unreduced(&RatFunc2::inverse_monomial(Rational::one(), unit(1)))
}

/// `P(z) F(z) - sum_J sum_{tau in Gamma_J} Phi_{tau,J}(z) P_tau(z)`,
/// cross-multiplied to a polynomial. Zero exactly when `F` satisfies the
/// boundary identity.
///
/// The right side is rebuilt face by face with tails obtained by
/// subtraction, independent of the grouping used by [`assemble_gf`].
pub fn theorem1_residual(problem: &Problem, f: &RatFunc2) -> Result<Poly2<Rational>, ProblemError> {
    let data = problem.resolve()?;
    let eq = &problem.equation;
    let (m1, m2) = eq.corner();
    let mut rhs = RatFunc2::zero();
    for t1 in 0..=m1 {
        for t2 in 0..=m2 {
            let p_tau = RatFunc2::from_poly(boundary_poly(eq, (t1, t2)));
            let series = match (t1 == m1, t2 == m2) {
                (false, false) => RatFunc2::inverse_monomial(data.phi_at((t1, t2))?, Exp2(t1 + 1, t2 + 1)),
                (true, false) => tail_by_subtraction(data.row(t2), m1, 1)
                    .mul_unreduced(&RatFunc2::inverse_monomial(Rational::one(), Exp2(0, t2 + 1))),
                (false, true) => tail_by_subtraction(data.column(t1), m2, 2)
                    .mul_unreduced(&RatFunc2::inverse_monomial(Rational::one(), Exp2(t1 + 1, 0))),
                // The corner face carries no initial data: phi vanishes off X0.
                (true, true) => {
                    debug_assert!(p_tau.is_zero());
                    RatFunc2::zero()
                }
            };
            rhs = rhs.add_unreduced(&series.mul_unreduced(&p_tau));
        }
    }
    let lhs_num = &char_poly(eq) * f.numerator();
    Ok(&(&lhs_num * rhs.denominator()) - &(rhs.numerator() * f.denominator()))
}
