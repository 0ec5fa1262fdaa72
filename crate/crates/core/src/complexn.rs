//! Complex numbers: exact Gaussian-rational arithmetic and floating polar form.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::{parse_rational_at, Int, Rational};

/// `re + im·i` with rational components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(re.into(), im.into())
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`, exact.
    pub fn modulus_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn modulus(&self) -> f64 {
        self.modulus_sq().to_f64().sqrt()
    }

    pub fn checked_div(&self, rhs: &GaussianRational) -> Result<Self> {
        let d = rhs.modulus_sq();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(GaussianRational::new(&num.re / &d, &num.im / &d))
    }

    /// Exact integer power; negative exponents need a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if exp < 0 {
            GaussianRational::one().checked_div(&acc)
        } else {
            Ok(acc)
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &Rational, lead: bool| -> fmt::Result {
            let sign = if v.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            let mag = v.abs();
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                imag(f, &self.im, false)
            }
        }
    }
}

/// Complex literal `a+bi`, `a-bi`, `bi`, `a`, `i`, `-i` with rational parts.
impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::parse(0, "empty complex literal"));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussianRational::new(parse_rational_at(&t, 0)?, Rational::zero()));
        };
        let split = body
            .char_indices()
            .rev()
            .find(|&(k, c)| k > 0 && (c == '+' || c == '-') && !body[..k].ends_with('/'))
            .map(|(k, _)| k);
        let (re_text, im_text) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() { Rational::zero() } else { parse_rational_at(re_text, 0)? };
        let im = match im_text {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational_at(other, re_text.len())?,
        };
        Ok(GaussianRational::new(re, im))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

/// `(a, b)·(c, d) = (ac − bd, ad + bc)`.
impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FromStr for ComplexOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "add" | "+" => Ok(ComplexOp::Add),
            "sub" | "-" => Ok(ComplexOp::Sub),
            "mul" | "*" => Ok(ComplexOp::Mul),
            "div" | "/" => Ok(ComplexOp::Div),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

pub fn c_arith(z1: &GaussianRational, z2: &GaussianRational, op: ComplexOp) -> Result<GaussianRational> {
    Ok(match op {
        ComplexOp::Add => z1 + z2,
        ComplexOp::Sub => z1 - z2,
        ComplexOp::Mul => z1 * z2,
        ComplexOp::Div => z1.checked_div(z2)?,
    })
}

/// `i^n`, cycling through `1, i, -1, -i`.
pub fn i_pow(n: &Int) -> GaussianRational {
    match n.mod_floor(&Int::from(4)).to_u8() {
        Some(0) => GaussianRational::from_ints(1, 0),
        Some(1) => GaussianRational::from_ints(0, 1),
        Some(2) => GaussianRational::from_ints(-1, 0),
        _ => GaussianRational::from_ints(0, -1),
    }
}

/// Principal argument in `(-π, π]`, by cases on the signs of `x` and `y`.
pub fn arg_principal_xy(x: f64, y: f64) -> Result<f64> {
    if x > 0.0 {
        Ok((y / x).atan())
    } else if x < 0.0 && y >= 0.0 {
        Ok(PI + (y / x).atan())
    } else if x < 0.0 {
        Ok(-PI + (y / x).atan())
    } else if y > 0.0 {
        Ok(PI / 2.0)
    } else if y < 0.0 {
        Ok(-PI / 2.0)
    } else {
        Err(Error::ZeroArgument)
    }
}

/// Representative of an angle in `[0, 2π)`.
pub fn canonical_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

pub fn arg_canonical_xy(x: f64, y: f64) -> Result<f64> {
    arg_principal_xy(x, y).map(canonical_angle)
}

pub fn arg_principal(z: &GaussianRational) -> Result<f64> {
    let (x, y) = z.to_f64();
    arg_principal_xy(x, y)
}

pub fn arg_canonical(z: &GaussianRational) -> Result<f64> {
    arg_principal(z).map(canonical_angle)
}

/// `r (cos θ + i sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    pub r: f64,
    pub theta: f64,
}

impl Polar {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if r.is_nan() || r < 0.0 || !r.is_finite() || !theta.is_finite() {
            return Err(Error::OutOfDomain(format!("invalid polar form ({r}, {theta})")));
        }
        Ok(Polar { r, theta })
    }

    pub fn from_degrees(r: f64, degrees: f64) -> Result<Self> {
        Polar::new(r, degrees.to_radians())
    }

    pub fn degrees(&self) -> f64 {
        self.theta.to_degrees()
    }
}

impl fmt::Display for Polar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} rad = {}°)", fmt_float(self.r), fmt_float(self.theta), fmt_float(self.degrees()))
    }
}

pub(crate) fn fmt_float(x: f64) -> String {
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Polar form of a floating point `x + iy`, canonical angle.
pub fn to_polar_xy(x: f64, y: f64) -> Result<Polar> {
    Polar::new(x.hypot(y), arg_canonical_xy(x, y)?)
}

pub fn to_polar(z: &GaussianRational) -> Result<Polar> {
    Polar::new(z.modulus(), arg_canonical(z)?)
}

pub fn from_polar(p: &Polar) -> (f64, f64) {
    (p.r * p.theta.cos(), p.r * p.theta.sin())
}

pub fn polar_mul(p1: &Polar, p2: &Polar) -> Polar {
    Polar { r: p1.r * p2.r, theta: canonical_angle(p1.theta + p2.theta) }
}

pub fn polar_div(p1: &Polar, p2: &Polar) -> Result<Polar> {
    if p2.r == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Polar { r: p1.r / p2.r, theta: canonical_angle(p1.theta - p2.theta) })
}

/// De Moivre: `z^n = r^n (cos nθ + i sin nθ)`.
pub fn pow_int(p: &Polar, n: i64) -> Result<Polar> {
    if n < 0 && p.r == 0.0 {
        return Err(Error::DivisionByZero);
    }
    let exp = i32::try_from(n).map_err(|_| Error::OutOfDomain(format!("exponent {n} too large")))?;
    Ok(Polar { r: p.r.powi(exp), theta: canonical_angle(p.theta * n as f64) })
}

/// The `n` distinct `n`-th roots, `k = 0..n-1`, angle `(arg + 2kπ)/n` from the canonical argument.
pub fn roots_polar(p: &Polar, n: u32) -> Result<Vec<Polar>> {
    if n < 2 {
        return Err(Error::BadDegree);
    }
    if p.r == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let r = p.r.powf(1.0 / n as f64);
    let base = canonical_angle(p.theta);
    Ok((0..n).map(|k| Polar { r, theta: (base + TAU * k as f64) / n as f64 }).collect())
}

pub fn roots_n(z: &GaussianRational, n: u32) -> Result<Vec<Polar>> {
    if n < 2 {
        return Err(Error::BadDegree);
    }
    roots_polar(&to_polar(z)?, n)
}
