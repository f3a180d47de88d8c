use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Var;
use super::poly::Poly;
use super::rational::Rational;
use super::ExactAlgError;

/// Quotient `num / den` of two polynomials.
///
/// Reduction never computes a multivariate gcd. It cancels integer content
/// and trial-divides by a fixed set of linear forms (`a1`, `a2`, `a1 + a2`
/// plus any caller-supplied forms). Equality is decided by
/// cross-multiplication, so an under-reduced value still compares correctly.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

fn weyl_forms() -> [Poly; 3] {
    [Poly::a1(), Poly::a2(), Poly::linear(1, 1, 0)]
}

impl RatFunc {
    /// Builds `num / den` in normalized form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(RatFunc { num, den }.reduce())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }.normalize_content()
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<Poly> {
        self.num.div_exact(&self.den).ok().flatten()
    }

    /// Reduction against the Weyl forms `a1`, `a2`, `a1 + a2`.
    pub fn reduce(self) -> Self {
        self.reduce_with(&[])
    }

    /// Reduction against the Weyl forms and the given extra forms (e.g. the
    /// hyperplanes of the arrangement currently being worked in). Idempotent.
    pub fn reduce_with(self, extra: &[Poly]) -> Self {
        let RatFunc { mut num, mut den } = self;
        if num.is_zero() {
            return RatFunc::zero();
        }
        for form in weyl_forms().iter().chain(extra) {
            if form.is_constant() {
                continue;
            }
            while !den.is_constant() {
                let (Some(qn), Some(qd)) = (
                    num.div_exact(form).ok().flatten(),
                    den.div_exact(form).ok().flatten(),
                ) else {
                    break;
                };
                num = qn;
                den = qd;
            }
        }
        RatFunc { num, den }.normalize_content()
    }

    /// Clears rational coefficients, divides out the common integer content
    /// and makes the leading coefficient of the denominator positive.
    fn normalize_content(self) -> Self {
        let RatFunc { num, den } = self;
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let coeffs = || num.terms().chain(den.terms()).map(|(_, c)| c);
        let lcm = coeffs().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = coeffs().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer());
        let gcd = scaled.fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        let mut factor = Rational::new(lcm, gcd);
        if den.leading_coefficient().is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        if factor.is_one() {
            return RatFunc { num, den };
        }
        RatFunc {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, ExactAlgError> {
        if rhs.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<RatFunc, ExactAlgError> {
        RatFunc::one().checked_div(self)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .normalize_content()
    }

    /// Quotient rule.
    pub fn partial(&self, v: Var) -> RatFunc {
        if self.den.is_constant() {
            return RatFunc {
                num: self.num.partial(v),
                den: self.den.clone(),
            }
            .normalize_content();
        }
        let num = &self.num.partial(v) * &self.den - &self.num * &self.den.partial(v);
        RatFunc::new(num, &self.den * &self.den).expect("square of nonzero denominator")
    }

    pub fn substitute(&self, images: &[Poly; 3]) -> Result<RatFunc, ExactAlgError> {
        RatFunc::new(self.num.substitute(images), self.den.substitute(images))
    }

    pub fn set_zero(&self, v: Var) -> Result<RatFunc, ExactAlgError> {
        RatFunc::new(self.num.set_zero(v), self.den.set_zero(v))
    }

    /// Degree of a quotient of homogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        Some(self.num.homogeneous_degree()? as i64 - self.den.homogeneous_degree()? as i64)
    }

    /// The numerator over a constant denominator, as one polynomial.
    fn as_scaled_poly(&self) -> Option<Poly> {
        let c = self.den.as_constant()?;
        Some(self.num.scale(&(Rational::one() / c)))
    }

    pub fn to_alpha_string(&self) -> String {
        if let Some(p) = self.as_scaled_poly() {
            p.to_alpha_string()
        } else {
            format!("({}) / ({})", self.num.to_alpha_string(), self.den.to_alpha_string())
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_scaled_poly() {
            write!(f, "{p}")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
