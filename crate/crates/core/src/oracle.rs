//! Independent check of a generating function: expand it into a table of
//! coefficients and compare with the values obtained by running the
//! difference equation directly.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{Rational, Scalar};
use crate::poly::{Exp2, Poly2, RatFunc2};
use crate::recurrence::{DifferenceEquation2, Problem, ProblemError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("denominator has no term at the exponent bound {bound:?}; not a generating function of a solution")]
    NotExpandable { bound: Exp2 },
    #[error("table sizes differ: {left:?} vs {right:?}")]
    SizeMismatch { left: (u32, u32), right: (u32, u32) },
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

/// Values `f(x1, x2)` for `0 <= x1 <= n1`, `0 <= x2 <= n2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable<T = Rational> {
    size: (u32, u32),
    values: Vec<T>,
}

impl<T: Scalar> SeriesTable<T> {
    pub fn zeros(size: (u32, u32)) -> Self {
        let len = (size.0 as usize + 1) * (size.1 as usize + 1);
        Self {
            size,
            values: vec![T::zero(); len],
        }
    }

    pub fn size(&self) -> (u32, u32) {
        self.size
    }

    fn index(&self, x1: u32, x2: u32) -> usize {
        assert!(x1 <= self.size.0 && x2 <= self.size.1, "({x1}, {x2}) outside table");
        x1 as usize * (self.size.1 as usize + 1) + x2 as usize
    }

    pub fn get(&self, x1: u32, x2: u32) -> &T {
        &self.values[self.index(x1, x2)]
    }

    pub fn set(&mut self, x1: u32, x2: u32, v: T) {
        let i = self.index(x1, x2);
        self.values[i] = v;
    }

    pub fn points(&self) -> impl Iterator<Item = (u32, u32)> {
        let (n1, n2) = self.size;
        (0..=n1).flat_map(move |x1| (0..=n2).map(move |x2| (x1, x2)))
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for SeriesTable<T> {
    /// One line per `x2`, largest first, so `f(0, 0)` sits in the lower-left
    /// corner. Entries are right-aligned.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.values.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for x2 in (0..=self.size.1).rev() {
            let line: Vec<String> = (0..=self.size.0)
                .map(|x1| format!("{:>width$}", self.get(x1, x2).to_string()))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Solution table by direct iteration: initial data on the strips, the
/// corner-solved equation `f(x) = -(1/c_m) sum_{alpha != m} c_alpha
/// f(x - m + alpha)` elsewhere, filled row-major.
pub fn expand_table(problem: &Problem, size: (u32, u32)) -> Result<SeriesTable, ProblemError> {
    let data = problem.resolve()?;
    let eq = &problem.equation;
    let (m1, m2) = eq.corner();
    let mut table = SeriesTable::zeros(size);

    let columns: Vec<Vec<Rational>> = (0..m1.min(size.0 + 1))
        .map(|x1| data.column(x1).values(size.1 as usize + 1))
        .collect();
    let rows: Vec<Vec<Rational>> = (0..m2.min(size.1 + 1))
        .map(|x2| data.row(x2).values(size.0 as usize + 1))
        .collect();
    let lead = eq.coeff((m1, m2));
    let others: Vec<((u32, u32), Rational)> = eq
        .coeffs()
        .filter(|(a, _)| *a != (m1, m2))
        .map(|(a, c)| (a, c.clone()))
        .collect();

    for (x1, x2) in table.points() {
        let v = if x1 < m1 {
            columns[x1 as usize][x2 as usize].clone()
        } else if x2 < m2 {
            rows[x2 as usize][x1 as usize].clone()
        } else {
            let acc = others.iter().fold(Rational::zero(), |acc, ((a1, a2), c)| {
                acc + c * table.get(x1 - m1 + a1, x2 - m2 + a2)
            });
            -acc / &lead
        };
        table.set(x1, x2, v);
    }
    Ok(table)
}

/// Points `x >= m` of the table where the difference equation fails.
pub fn equation_violations(eq: &DifferenceEquation2, table: &SeriesTable) -> Vec<(u32, u32)> {
    let (m1, m2) = eq.corner();
    let (n1, n2) = table.size();
    let mut bad = Vec::new();
    if n1 < m1 || n2 < m2 {
        return bad;
    }
    for x1 in 0..=n1 - m1 {
        for x2 in 0..=n2 - m2 {
            let s = eq
                .coeffs()
                .fold(Rational::zero(), |acc, ((a1, a2), c)| acc + c * table.get(x1 + a1, x2 + a2));
            if !s.is_zero() {
                bad.push((x1, x2));
            }
        }
    }
    bad
}

/// Coefficients of the power series `num / den` on `[0, size]`, by
/// `s(x) = (num(x) - sum_{0 < b <= x} den(b) s(x - b)) / den(0)`.
///
/// Requires a nonzero constant term in `den`.
pub fn series_quotient<T: Scalar>(num: &Poly2<T>, den: &Poly2<T>, size: (u32, u32)) -> SeriesTable<T> {
    let d0 = den.coeff(Exp2(0, 0));
    assert!(!d0.is_zero(), "series denominator vanishes at the origin");
    let tail: Vec<(Exp2, T)> = den
        .terms()
        .filter(|(e, _)| *e != Exp2(0, 0))
        .map(|(e, c)| (e, c.clone()))
        .collect();
    let mut s: SeriesTable<T> = SeriesTable::zeros(size);
    for (x1, x2) in s.points() {
        let x = Exp2(x1, x2);
        let mut acc = num.coeff(x);
        for (b, c) in &tail {
            if let Some(r) = x.checked_sub(*b) {
                acc = acc - c.clone() * s.get(r.0, r.1).clone();
            }
        }
        s.set(x1, x2, acc / d0.clone());
    }
    s
}

/// Coefficients `f(x)` of `F(z) = sum f(x) z^-(x+1)` for `x <= size`.
///
/// Substituting `z = 1/u` with a shared exponent bound `D` gives
/// `sum f(x) u^x = A~(u) / (u1 u2 B~(u))` where `A~`, `B~` are the reversed
/// numerator and denominator.
pub fn expand_ratfunc(f: &RatFunc2, size: (u32, u32)) -> Result<SeriesTable, OracleError> {
    let (a, b) = (f.numerator(), f.denominator());
    let (ea, eb) = (a.max_exponents(), b.max_exponents());
    let bound = Exp2(ea.0.max(eb.0), ea.1.max(eb.1));
    let b_rev = b.reverse(bound).expect("bound covers every exponent");
    if b_rev.coeff(Exp2(0, 0)).is_zero() {
        return Err(OracleError::NotExpandable { bound });
    }
    if a.is_zero() {
        return Ok(SeriesTable::zeros(size));
    }
    let a_rev = a.reverse(bound).expect("bound covers every exponent");
    match a_rev.div_monomial(Exp2(1, 1)) {
        Ok(shifted) => Ok(series_quotient(&shifted, &b_rev, size)),
        Err(_) => {
            // S = A~ / B~ and f(x) = S(x + (1, 1)).
            let wide = series_quotient(&a_rev, &b_rev, (size.0 + 1, size.1 + 1));
            let mut out = SeriesTable::zeros(size);
            for (x1, x2) in out.points() {
                out.set(x1, x2, wide.get(x1 + 1, x2 + 1).clone());
            }
            Ok(out)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableComparison<T = Rational> {
    Match,
    Mismatch { point: (u32, u32), left: T, right: T },
}

impl<T> TableComparison<T> {
    pub fn is_match(&self) -> bool {
        matches!(self, TableComparison::Match)
    }
}

/// Exact comparison; reports the first differing point in row-major order.
pub fn compare_tables<T: Scalar>(a: &SeriesTable<T>, b: &SeriesTable<T>) -> Result<TableComparison<T>, OracleError> {
    if a.size() != b.size() {
        return Err(OracleError::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    for (x1, x2) in a.points() {
        let (l, r) = (a.get(x1, x2), b.get(x1, x2));
        if l != r {
            return Ok(TableComparison::Mismatch {
                point: (x1, x2),
                left: l.clone(),
                right: r.clone(),
            });
        }
    }
    Ok(TableComparison::Match)
}

/// Expands `f` and the problem on `[0, n]^2` and compares them.
/// The left value of a mismatch comes from the direct iteration.
pub fn verify(problem: &Problem, f: &RatFunc2, n: u32) -> Result<TableComparison, OracleError> {
    let direct = expand_table(problem, (n, n))?;
    let series = expand_ratfunc(f, (n, n))?;
    compare_tables(&direct, &series)
}
