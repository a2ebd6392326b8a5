use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::poly::{gcd, univariate::content_of, Exp2, Poly2, PolyError};

/// Bivariate rational function `numerator / denominator` over the rationals.
///
/// Values built through [`RatFunc2::new`] and the arithmetic methods are in
/// canonical form: numerator and denominator have jointly coprime integer
/// coefficients, the denominator's leading coefficient is positive and the
/// two share no nonconstant factor. Zero is `0/1`. Canonical values compare
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc2 {
    numerator: Poly2<Rational>,
    denominator: Poly2<Rational>,
}

impl RatFunc2 {
    pub fn new(numerator: Poly2<Rational>, denominator: Poly2<Rational>) -> Result<Self, PolyError> {
        Ok(Self::unreduced(numerator, denominator)?.reduce())
    }

    /// Scale-normalized but without cancelling common factors.
    pub fn unreduced(numerator: Poly2<Rational>, denominator: Poly2<Rational>) -> Result<Self, PolyError> {
        if denominator.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self {
            numerator,
            denominator,
        }
        .normalize_scale())
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly2::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly2::one())
    }

    pub fn from_poly(p: Poly2<Rational>) -> Self {
        Self {
            numerator: p,
            denominator: Poly2::one(),
        }
        .normalize_scale()
    }

    /// `c / z^e`
    pub fn inverse_monomial(c: Rational, e: Exp2) -> Self {
        Self {
            numerator: Poly2::constant(c),
            denominator: Poly2::monomial(Rational::one(), e),
        }
        .normalize_scale()
    }

    pub fn numerator(&self) -> &Poly2<Rational> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly2<Rational> {
        &self.denominator
    }

    pub fn into_parts(self) -> (Poly2<Rational>, Poly2<Rational>) {
        (self.numerator, self.denominator)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Cancels the numerator/denominator gcd and restores the scale rule.
    pub fn reduce(self) -> Self {
        if self.numerator.is_zero() {
            return Self::zero();
        }
        let g = gcd(&self.numerator, &self.denominator);
        let numerator = self.numerator.div_exact(&g).expect("gcd divides numerator");
        let denominator = self.denominator.div_exact(&g).expect("gcd divides denominator");
        Self {
            numerator,
            denominator,
        }
        .normalize_scale()
    }

    fn normalize_scale(self) -> Self {
        if self.numerator.is_zero() {
            return Self {
                numerator: Poly2::zero(),
                denominator: Poly2::one(),
            };
        }
        let mut s = content_of(
            self.numerator
                .terms()
                .chain(self.denominator.terms())
                .map(|(_, c)| c),
        )
        .recip();
        if self.denominator.leading().is_some_and(|(_, c)| c.is_negative()) {
            s = -s;
        }
        Self {
            numerator: self.numerator.scale(&s),
            denominator: self.denominator.scale(&s),
        }
    }

    /// `a·d = c·b` for `a/b` and `c/d`; meaningful for unreduced values too.
    pub fn equivalent(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_unreduced(other).reduce()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_unreduced(other).reduce()
    }

    pub fn div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZeroFunction);
        }
        let inv = Self {
            numerator: other.denominator.clone(),
            denominator: other.numerator.clone(),
        };
        Ok(self.mul_unreduced(&inv).reduce())
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    /// Sum over a common denominator without gcd reduction. When one
    /// denominator divides the other the larger one is reused.
    pub fn add_unreduced(&self, other: &Self) -> Self {
        if let Ok(k) = self.denominator.div_exact(&other.denominator) {
            return Self {
                numerator: &self.numerator + &(&other.numerator * &k),
                denominator: self.denominator.clone(),
            }
            .normalize_scale();
        }
        if let Ok(k) = other.denominator.div_exact(&self.denominator) {
            return Self {
                numerator: &(&self.numerator * &k) + &other.numerator,
                denominator: other.denominator.clone(),
            }
            .normalize_scale();
        }
        Self {
            numerator: &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
        .normalize_scale()
    }

    pub fn mul_unreduced(&self, other: &Self) -> Self {
        Self {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
        .normalize_scale()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            numerator: self.numerator.scale(s),
            denominator: self.denominator.clone(),
        }
        .normalize_scale()
    }
}
