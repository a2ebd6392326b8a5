use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Rational, Scalar};
use crate::poly::univariate::{content_of, Poly1};
use crate::poly::PolyError;

/// Exponent pair `(e1, e2)` of the monomial `z1^e1 * z2^e2`.
///
/// Ordered by total degree, ties broken by the `z2` exponent. This is a
/// monomial order, so it also drives multivariate division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Exp2(pub u32, pub u32);

impl Exp2 {
    pub fn total(self) -> u32 {
        self.0 + self.1
    }

    pub fn divides(self, other: Exp2) -> bool {
        self.0 <= other.0 && self.1 <= other.1
    }

    pub fn checked_sub(self, other: Exp2) -> Option<Exp2> {
        Some(Exp2(self.0.checked_sub(other.0)?, self.1.checked_sub(other.1)?))
    }
}

impl Add for Exp2 {
    type Output = Exp2;
    fn add(self, rhs: Exp2) -> Exp2 {
        Exp2(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl Ord for Exp2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.1.cmp(&other.1))
    }
}

impl PartialOrd for Exp2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `z1`, `z2`. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly2<T> {
    terms: BTreeMap<Exp2, T>,
}

impl<T: Scalar> Default for Poly2<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Poly2<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, Exp2(0, 0))
    }

    pub fn monomial(c: T, e: Exp2) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `z1`
    pub fn var1() -> Self {
        Self::monomial(T::one(), Exp2(1, 0))
    }

    /// `z2`
    pub fn var2() -> Self {
        Self::monomial(T::one(), Exp2(0, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp2, T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * z^e` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: Exp2, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let sum = old.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp2) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exp2, &T)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Largest term under the monomial order.
    pub fn leading(&self) -> Option<(Exp2, &T)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Componentwise maximum exponent; `(0, 0)` for the zero polynomial.
    pub fn max_exponents(&self) -> Exp2 {
        self.terms
            .keys()
            .fold(Exp2(0, 0), |acc, e| Exp2(acc.0.max(e.0), acc.1.max(e.1)))
    }

    /// Componentwise minimum exponent, i.e. the largest monomial dividing
    /// every term; `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> Exp2 {
        let mut it = self.terms.keys();
        match it.next() {
            Some(&first) => it.fold(first, |acc, e| Exp2(acc.0.min(e.0), acc.1.min(e.1))),
            None => Exp2(0, 0),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Multiplies by `c * z^e`.
    pub fn mul_term(&self, e: Exp2, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k + e, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides by the monomial `z^e`, which must divide every term.
    pub fn div_monomial(&self, e: Exp2) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let k = k.checked_sub(e).ok_or(PolyError::InexactDivision)?;
            terms.insert(k, v.clone());
        }
        Ok(Self { terms })
    }

    pub fn eval(&self, z1: &T, z2: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            acc + c.clone() * pow(z1, e.0) * pow(z2, e.1)
        })
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`PolyError::InexactDivision`] when a nonzero remainder
    /// would be left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (lead_e, lead_c) = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let qe = e.checked_sub(lead_e).ok_or(PolyError::InexactDivision)?;
            let qc = c.clone() / lead_c.clone();
            rem = &rem - &divisor.mul_term(qe, &qc);
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// `u^bound * p(1/u1, 1/u2)`, mapping each exponent `e` to `bound - e`.
    pub fn reverse(&self, bound: Exp2) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let r = bound
                .checked_sub(*e)
                .ok_or(PolyError::ExponentExceedsBound { exponent: *e, bound })?;
            terms.insert(r, c.clone());
        }
        Ok(Self { terms })
    }

    /// View as a polynomial in `z1` whose coefficients are polynomials in
    /// `z2`; entry `k` multiplies `z1^k`.
    pub fn to_z1_major(&self) -> Vec<Poly1<T>> {
        let deg = self.max_exponents().0 as usize;
        let mut rows: Vec<Vec<T>> = vec![Vec::new(); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            let row = &mut rows[e.0 as usize];
            if row.len() <= e.1 as usize {
                row.resize(e.1 as usize + 1, T::zero());
            }
            row[e.1 as usize] = c.clone();
        }
        rows.into_iter().map(Poly1::from_coeffs).collect()
    }

    pub fn from_z1_major(rows: &[Poly1<T>]) -> Self {
        let mut p = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                p.add_term(Exp2(i as u32, j as u32), c.clone());
            }
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `z1` (`axis` 1) or
    /// `z2` (`axis` 2).
    pub fn from_univariate(p: &Poly1<T>, axis: u8) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            let e = if axis == 1 { Exp2(k, 0) } else { Exp2(0, k) };
            (e, c.clone())
        }))
    }
}

fn pow<T: Scalar>(base: &T, exp: u32) -> T {
    (0..exp).fold(T::one(), |acc, _| acc * base.clone())
}

impl Poly2<Rational> {
    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients.
    pub fn content(&self) -> Rational {
        content_of(self.terms.values())
    }

    /// Integer primitive associate with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let Some((_, lead)) = self.leading() else {
            return Self::zero();
        };
        let mut c = self.content().recip();
        if lead < &Rational::from_integer(0.into()) {
            c = -c;
        }
        self.scale(&c)
    }
}

impl<'a, T: Scalar> Add<&'a Poly2<T>> for &'a Poly2<T> {
    type Output = Poly2<T>;
    fn add(self, rhs: &Poly2<T>) -> Poly2<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Sub<&'a Poly2<T>> for &'a Poly2<T> {
    type Output = Poly2<T>;
    fn sub(self, rhs: &Poly2<T>) -> Poly2<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Mul<&'a Poly2<T>> for &'a Poly2<T> {
    type Output = Poly2<T>;
    fn mul(self, rhs: &Poly2<T>) -> Poly2<T> {
        let mut out = Poly2::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea + *eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Poly2<T> {
    type Output = Poly2<T>;
    fn neg(self) -> Poly2<T> {
        Poly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr<Poly2<T>> for Poly2<T> {
            type Output = Poly2<T>;
            fn $m(self, rhs: Poly2<T>) -> Poly2<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Poly2<T> {
    type Output = Poly2<T>;
    fn neg(self) -> Poly2<T> {
        -&self
    }
}
