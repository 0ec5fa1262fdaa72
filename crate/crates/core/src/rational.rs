//! Exact rationals over arbitrary-precision integers.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded signed integer.
pub type Int = BigInt;

/// A normalized fraction `num/den` with `den >= 1` and `gcd(|num|, den) = 1`.
///
/// Zero is always `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, normalizing sign and common factors.
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Panicking shorthand for literals in code and tests.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_int(&self) -> Option<Int> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_int().and_then(|n| n.to_i64())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mag = exp.unsigned_abs();
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = mag;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if exp < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let (Some(n), Some(d)) = (self.numer().to_f64(), self.denom().to_f64()) {
            if n.is_finite() && d.is_finite() {
                return n / d;
            }
        }
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Floor division to an integer.
    pub fn floor(&self) -> Int {
        self.numer().div_floor(self.denom())
    }

    /// Decimal rendering rounded half away from zero to `places` digits.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let scale = num_traits::pow(Int::from(10), places);
        let scaled = self.numer() * &scale;
        let (q, r) = scaled.abs().div_rem(self.denom());
        let q = if &r * 2 >= *self.denom() { q + 1 } else { q };
        let digits = q.to_string();
        let sign = if self.is_negative() && !q.is_zero() { "-" } else { "" };
        if places == 0 {
            return format!("{sign}{digits}");
        }
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        format!("{sign}{int_part}.{frac_part}")
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n)
    }
}

impl From<Int> for Rational {
    fn from(n: Int) -> Self {
        Rational::from_int(n)
    }
}

impl From<&Int> for Rational {
    fn from(n: &Int) -> Self {
        Rational::from_int(n.clone())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
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

/// Rational literal: integer, `p/q`, or finite decimal. Whitespace is ignored.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational_at(s, 0)
    }
}

/// Parses a rational literal, reporting errors relative to `offset`.
pub(crate) fn parse_rational_at(s: &str, offset: usize) -> Result<Rational> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(offset, "empty rational literal"));
    }
    if let Some((p, q)) = compact.split_once('/') {
        let num = parse_decimal(p, offset)?;
        let den = parse_decimal(q, offset + p.len() + 1)?;
        if den.is_zero() {
            return Err(Error::parse(offset, "zero denominator"));
        }
        return Ok(Rational(num.0 / den.0));
    }
    parse_decimal(&compact, offset)
}

fn parse_decimal(s: &str, offset: usize) -> Result<Rational> {
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    if body.contains(['(', ')', '…']) || body.ends_with("...") {
        return Err(Error::parse(offset, "repeating decimals are not supported"));
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let valid = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty()) || !valid(int_part) || !valid(frac_part) {
        return Err(Error::parse(offset, format!("invalid number '{s}'")));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: Int = digits.parse().map_err(|_| Error::parse(offset, format!("invalid number '{s}'")))?;
    if neg {
        num = -num;
    }
    let den = num_traits::pow(Int::from(10), frac_part.len());
    Ok(Rational(BigRational::new(num, den)))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
// Panics on a zero divisor, like integer division; use `checked_div` for fallible paths.
forward_binop!(Div, div, /);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// The arithmetic operations accepted by [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FromStr for RatOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "add" | "+" => Ok(RatOp::Add),
            "sub" | "-" => Ok(RatOp::Sub),
            "mul" | "*" => Ok(RatOp::Mul),
            "div" | "/" => Ok(RatOp::Div),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

pub fn rat_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}
