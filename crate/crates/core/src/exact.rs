//! Exact scalars: rationals, Gaussian rationals and the real quadratic
//! field `Q(sqrt 5)`.
//!
//! Every sign decision in the crate goes through [`Rational::sign`] (or
//! [`Sqrt5::sign`] for the single witness that needs `sqrt 5`), so no
//! classification ever depends on a rounded value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational {text:?}: {reason}")]
    Parse { text: String, reason: &'static str },
}

/// Exact trichotomy of a real value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    fn of_ordering(ord: Ordering) -> Sign {
        match ord {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Fails when `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, ExactError> {
        let d = denominator.into();
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn sign(&self) -> Sign {
        sign_of_real(self)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ExactError> {
        Rational::one().checked_div(self)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Rebuilds the value from its stored parts; a no-op on the reduced
    /// representation.
    pub fn reduced(&self) -> Rational {
        Rational(BigRational::new(self.numer().clone(), self.denom().clone()))
    }
}

/// Exact sign of a rational, decided by the numerator alone.
pub fn sign_of_real(a: &Rational) -> Sign {
    Sign::of_ordering(a.numer().cmp(&BigInt::zero()))
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// `rational := ['-'] digits ['/' digits]`
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason| ExactError::Parse { text: text.to_string(), reason };
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(num) {
            return Err(err("expected decimal digits"));
        }
        let mut numerator: BigInt = num.parse().map_err(|_| err("expected decimal digits"))?;
        if negative {
            numerator = -numerator;
        }
        let denominator: BigInt = match den {
            Some(d) if digits(d) => d.parse().map_err(|_| err("expected decimal digits"))?,
            Some(_) => return Err(err("expected decimal digits after '/'")),
            None => BigInt::one(),
        };
        if denominator.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(self, rhs)
            }
        }
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                <&$ty as $trait>::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Rational, Add, add, |a, b| Rational(&a.0 + &b.0));
forward_binop!(Rational, Sub, sub, |a, b| Rational(&a.0 - &b.0));
forward_binop!(Rational, Mul, mul, |a, b| Rational(&a.0 * &b.0));

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Complex number `re + im*i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        GaussianRational { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`, the value of `a * conj(a)`.
    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn checked_div(&self, rhs: &GaussianRational) -> Result<GaussianRational, ExactError> {
        let norm = rhs.norm();
        if norm.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(GaussianRational { re: num.re.checked_div(&norm)?, im: num.im.checked_div(&norm)? })
    }

    /// Parses the two-element `[re, im]` serialization.
    pub fn from_parts(re: &str, im: &str) -> Result<Self, ExactError> {
        Ok(GaussianRational { re: re.parse()?, im: im.parse()? })
    }

    pub fn to_parts(&self) -> [String; 2] {
        [self.re.to_string(), self.im.to_string()]
    }
}

/// Conjugate of a Gaussian rational.
pub fn conjugate(a: &GaussianRational) -> GaussianRational {
    a.conj()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic in `Q(i)`; only division can fail.
pub fn arithmetic(a: &GaussianRational, b: &GaussianRational, op: ArithOp) -> Result<GaussianRational, ExactError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

forward_binop!(GaussianRational, Add, add, |a, b| GaussianRational { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(GaussianRational, Sub, sub, |a, b| GaussianRational { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(GaussianRational, Mul, mul, |a, b| GaussianRational {
    re: &(&a.re * &b.re) - &(&a.im * &b.im),
    im: &(&a.re * &b.im) + &(&a.im * &b.re),
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_integers(n, 0)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.sign()) {
            (_, Sign::Zero) => write!(f, "{}", self.re),
            (true, _) if self.im == Rational::one() => write!(f, "i"),
            (true, _) if self.im == -Rational::one() => write!(f, "-i"),
            (true, _) => write!(f, "{}i", self.im),
            (false, Sign::Positive) => write!(f, "{}+{}i", self.re, self.im),
            (false, Sign::Negative) => write!(f, "{}-{}i", self.re, self.im.abs()),
        }
    }
}

impl FromStr for GaussianRational {
    type Err = ExactError;

    /// Accepts the `Display` forms: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`,
    /// and `a+i` / `a-i`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let Some(head) = text.strip_suffix('i') else {
            return Ok(GaussianRational::real(text.parse()?));
        };
        let (re, coeff) = match head.rfind(['+', '-']).filter(|&p| p > 0) {
            Some(p) => (head[..p].parse()?, &head[p..]),
            None => (Rational::zero(), head),
        };
        let im = match coeff {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => c
                .strip_prefix('+')
                .unwrap_or(c)
                .parse()
                .map_err(|_| ExactError::Parse { text: text.to_string(), reason: "malformed imaginary part" })?,
        };
        Ok(GaussianRational { re, im })
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Real number `rational + surd * sqrt(5)` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sqrt5 {
    pub rational: Rational,
    pub surd: Rational,
}

impl Sqrt5 {
    pub fn new(rational: Rational, surd: Rational) -> Self {
        Sqrt5 { rational, surd }
    }

    pub fn from_rational(r: Rational) -> Self {
        Sqrt5 { rational: r, surd: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    /// Exact sign of `p + q sqrt 5`: when `p` and `q` disagree the sign is
    /// settled by comparing `p^2` with `5 q^2`.
    pub fn sign(&self) -> Sign {
        let p = self.rational.sign();
        let q = self.surd.sign();
        match (p, q) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (a, b) if a == b => a,
            (a, _) => {
                let lhs = &self.rational * &self.rational;
                let rhs = &Rational::from(5) * &(&self.surd * &self.surd);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => a,
                    Ordering::Less => a.flip(),
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    fn conj(&self) -> Sqrt5 {
        Sqrt5 { rational: self.rational.clone(), surd: -&self.surd }
    }

    /// `p^2 - 5 q^2`, nonzero for every nonzero element.
    fn norm(&self) -> Rational {
        &(&self.rational * &self.rational) - &(&Rational::from(5) * &(&self.surd * &self.surd))
    }

    pub fn checked_div(&self, rhs: &Sqrt5) -> Result<Sqrt5, ExactError> {
        let norm = rhs.norm();
        if norm.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(Sqrt5 { rational: num.rational.checked_div(&norm)?, surd: num.surd.checked_div(&norm)? })
    }
}

forward_binop!(Sqrt5, Add, add, |a, b| Sqrt5 { rational: &a.rational + &b.rational, surd: &a.surd + &b.surd });
forward_binop!(Sqrt5, Sub, sub, |a, b| Sqrt5 { rational: &a.rational - &b.rational, surd: &a.surd - &b.surd });
forward_binop!(Sqrt5, Mul, mul, |a, b| Sqrt5 {
    rational: &(&a.rational * &b.rational) + &(&Rational::from(5) * &(&a.surd * &b.surd)),
    surd: &(&a.rational * &b.surd) + &(&a.surd * &b.rational),
});

impl Neg for Sqrt5 {
    type Output = Sqrt5;
    fn neg(self) -> Sqrt5 {
        Sqrt5 { rational: -self.rational, surd: -self.surd }
    }
}

impl fmt::Display for Sqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.surd.sign()) {
            (_, Sign::Zero) => write!(f, "{}", self.rational),
            (true, _) => write!(f, "{}*sqrt5", self.surd),
            (false, Sign::Positive) => write!(f, "{}+{}*sqrt5", self.rational, self.surd),
            (false, Sign::Negative) => write!(f, "{}-{}*sqrt5", self.rational, self.surd.abs()),
        }
    }
}

impl fmt::Debug for Sqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The field operations the generic elimination routines need.
pub trait FieldScalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError>;
}

macro_rules! impl_field_scalar {
    ($ty:ty, $zero:expr, $one:expr) => {
        impl FieldScalar for $ty {
            fn zero() -> Self {
                $zero
            }
            fn one() -> Self {
                $one
            }
            fn is_zero(&self) -> bool {
                <$ty>::is_zero(self)
            }
            fn add(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg(&self) -> Self {
                -(self.clone())
            }
            fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
                <$ty>::checked_div(self, rhs)
            }
        }
    };
}

impl_field_scalar!(Rational, Rational::zero(), Rational::one());
impl_field_scalar!(GaussianRational, GaussianRational::zero(), GaussianRational::one());
impl_field_scalar!(Sqrt5, Sqrt5::from_rational(Rational::zero()), Sqrt5::from_rational(Rational::one()));
