//! Integer number theory, radix representation, combinatorics and the
//! closed-form sums of the induction exercises.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{Int, Rational};

/// Division with remainder for `b > 0`: `a = b*q + r`, `0 <= r < b`.
pub fn divmod_euclid(a: &Int, b: &Int) -> Result<(Int, Int)> {
    if !b.is_positive() {
        return Err(Error::NonPositiveDivisor);
    }
    Ok(a.div_mod_floor(b))
}

/// Whether `a | b`.
pub fn divides(a: &Int, b: &Int) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroDivisorQuery);
    }
    Ok((b % a).is_zero())
}

/// One step of the Euclidean algorithm: `dividend = divisor*quotient + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidStep {
    pub dividend: Int,
    pub divisor: Int,
    pub quotient: Int,
    pub remainder: Int,
}

impl fmt::Display for EuclidStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}*{} + {}", self.dividend, self.divisor, self.quotient, self.remainder)
    }
}

/// Greatest common divisor with the remainder chain on `|a|, |b|`.
///
/// The last nonzero remainder is the gcd; `gcd(0, b) = |b|`.
pub fn gcd(a: &Int, b: &Int) -> Result<(Int, Vec<EuclidStep>)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = {
        let (x, y) = (a.abs(), b.abs());
        if x >= y {
            (x, y)
        } else {
            (y, x)
        }
    };
    let mut trace = Vec::new();
    while !y.is_zero() {
        let (q, r) = x.div_rem(&y);
        trace.push(EuclidStep { dividend: x.clone(), divisor: y.clone(), quotient: q, remainder: r.clone() });
        x = y;
        y = r;
    }
    Ok((x, trace))
}

pub fn gcd_value(a: &Int, b: &Int) -> Result<Int> {
    gcd(a, b).map(|(g, _)| g)
}

/// Least common multiple, always positive.
pub fn lcm(a: &Int, b: &Int) -> Result<Int> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let g = gcd_value(a, b)?;
    Ok((a.abs() / g) * b.abs())
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: &Int) -> Result<Vec<(Int, u32)>> {
    if n < &Int::from(2) {
        return Err(Error::OutOfDomain(format!("factorize requires n >= 2, got {n}")));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p = Int::from(2);
    while &p * &p <= rest {
        let mut mult = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            mult += 1;
        }
        if mult > 0 {
            out.push((p.clone(), mult));
        }
        p += if p == Int::from(2) { 1 } else { 2 };
    }
    if rest > Int::one() {
        out.push((rest, 1));
    }
    Ok(out)
}

pub fn is_prime(n: &Int) -> Result<bool> {
    if n < &Int::one() {
        return Err(Error::OutOfDomain(format!("primality requires n >= 1, got {n}")));
    }
    if n.is_one() {
        return Ok(false);
    }
    let f = factorize(n)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

/// Digits `a_k..a_0` of a value in base `2..=16`, most significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    base: u32,
    coeffs: Vec<u32>,
}

impl Digits {
    /// Validates digit range and the no-leading-zero rule.
    pub fn new(base: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !(2..=16).contains(&base) {
            return Err(Error::BadBase);
        }
        if coeffs.is_empty() {
            return Err(Error::OutOfDomain("empty digit list".into()));
        }
        if coeffs.iter().any(|&d| d >= base) {
            return Err(Error::OutOfDomain(format!("digit out of range for base {base}")));
        }
        if coeffs.len() > 1 && coeffs[0] == 0 {
            return Err(Error::OutOfDomain("leading zero digit".into()));
        }
        Ok(Digits { base, coeffs })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Parses a digit string such as `"236"` or `"ff"`.
    pub fn parse(text: &str, base: u32) -> Result<Self> {
        let text = text.trim();
        let coeffs = text
            .chars()
            .enumerate()
            .map(|(i, c)| c.to_digit(16).ok_or_else(|| Error::parse(i, format!("invalid digit '{c}'"))))
            .collect::<Result<Vec<_>>>()?;
        Digits::new(base, coeffs)
    }
}

impl fmt::Display for Digits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.coeffs.iter().map(|&d| std::char::from_digit(d, 16).unwrap()).collect();
        write!(f, "({s})_{}", self.base)
    }
}

pub fn to_base(n: &Int, base: u32) -> Result<Digits> {
    if !(2..=16).contains(&base) {
        return Err(Error::BadBase);
    }
    if n.is_negative() {
        return Err(Error::NegativeValue);
    }
    if n.is_zero() {
        return Ok(Digits { base, coeffs: vec![0] });
    }
    let b = Int::from(base);
    let mut rest = n.clone();
    let mut coeffs = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&b);
        coeffs.push(r.to_u32().expect("digit below base"));
        rest = q;
    }
    coeffs.reverse();
    Ok(Digits { base, coeffs })
}

/// Horner evaluation of `a_k b^k + ... + a_1 b + a_0`.
pub fn from_base(d: &Digits) -> Int {
    d.coeffs.iter().fold(Int::zero(), |acc, &c| acc * d.base + c)
}

pub fn factorial(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::OutOfDomain(format!("factorial of negative {n}")));
    }
    let mut acc = Int::one();
    let mut k = Int::from(2);
    while &k <= n {
        acc *= &k;
        k += 1;
    }
    Ok(acc)
}

/// `C(n, k)` by the multiplicative formula; every partial quotient is integral.
pub fn binom(n: &Int, k: &Int) -> Result<Int> {
    if n.is_negative() || k.is_negative() || k > n {
        return Err(Error::OutOfDomain(format!("binom requires 0 <= k <= n, got n={n}, k={k}")));
    }
    let k = std::cmp::min(k.clone(), n - k);
    let mut acc = Int::one();
    let mut i = Int::zero();
    while i < k {
        acc = acc * (n - &i) / (&i + 1);
        i += 1;
    }
    Ok(acc)
}

/// `coeff * x^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub exponent: Rational,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_zero() {
            return write!(f, "{}", self.coeff);
        }
        let c = &self.coeff;
        let lead = if c.is_one() {
            String::new()
        } else if *c == -Rational::one() {
            "-".to_string()
        } else {
            format!("{c}*")
        };
        if self.exponent.is_one() {
            write!(f, "{lead}x")
        } else if self.exponent.is_integer() && !self.exponent.is_negative() {
            write!(f, "{lead}x^{}", self.exponent)
        } else {
            write!(f, "{lead}x^({})", self.exponent)
        }
    }
}

/// The two summands `c1*x^e1` and `c2*x^e2` of a binomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    pub c1: Rational,
    pub e1: Rational,
    pub c2: Rational,
    pub e2: Rational,
}

impl Binomial {
    pub fn new(c1: Rational, e1: Rational, c2: Rational, e2: Rational) -> Self {
        Binomial { c1, e1, c2, e2 }
    }
}

/// Term `T_{k+1} = C(n,k) * a^(n-k) * b^k` of `(a + b)^n`.
pub fn binom_term(n: i64, k: i64, b: &Binomial) -> Result<Monomial> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfDomain(format!("term index k={k} outside 0..={n}")));
    }
    let coeff = Rational::from(binom(&Int::from(n), &Int::from(k))?) * b.c1.pow(n - k)? * b.c2.pow(k)?;
    let exponent = &b.e1 * &Rational::from(n - k) + &b.e2 * &Rational::from(k);
    Ok(Monomial { coeff, exponent })
}

/// Expansion of `(c1 x^e1 + c2 x^e2)^n`, like exponents merged, ascending exponents.
pub fn binom_expand(n: i64, b: &Binomial) -> Result<Vec<Monomial>> {
    if n < 1 {
        return Err(Error::OutOfDomain(format!("expansion requires n >= 1, got {n}")));
    }
    if b.c1.is_zero() || b.c2.is_zero() {
        return Err(Error::OutOfDomain("binomial coefficients must be nonzero".into()));
    }
    let mut terms: Vec<Monomial> = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let t = binom_term(n, k, b)?;
        match terms.iter_mut().find(|m| m.exponent == t.exponent) {
            Some(m) => m.coeff += &t.coeff,
            None => terms.push(t),
        }
    }
    terms.retain(|m| !m.coeff.is_zero());
    terms.sort_by(|a, b| a.exponent.cmp(&b.exponent));
    Ok(terms)
}

/// The sums proved by induction in the exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    /// 1 + 2 + ... + n
    FirstN,
    /// 1 + 3 + ... + (2n-1)
    Odd,
    /// 1 + 3 + 6 + ... + n(n+1)/2
    Triangular,
    /// 1² + 2² + ... + n²
    Squares,
    /// 1/(1·2) + ... + 1/(n(n+1))
    RecipConsecutive,
    /// 1/(1·3) + ... + 1/((2n-1)(2n+1))
    RecipOdd,
    /// 1·2 + 2·3 + ... + n(n+1)
    ProductConsecutive,
}

impl SumKind {
    pub const ALL: [SumKind; 7] = [
        SumKind::FirstN,
        SumKind::Odd,
        SumKind::Triangular,
        SumKind::Squares,
        SumKind::RecipConsecutive,
        SumKind::RecipOdd,
        SumKind::ProductConsecutive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumKind::FirstN => "first_n",
            SumKind::Odd => "odd",
            SumKind::Triangular => "triangular",
            SumKind::Squares => "squares",
            SumKind::RecipConsecutive => "recip_consecutive",
            SumKind::RecipOdd => "recip_odd",
            SumKind::ProductConsecutive => "product_consecutive",
        }
    }
}

impl FromStr for SumKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SumKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

pub fn closed_form_sum(kind: SumKind, n: &Int) -> Result<Rational> {
    if n < &Int::one() {
        return Err(Error::OutOfDomain(format!("sum requires n >= 1, got {n}")));
    }
    let n = Rational::from(n);
    let one = Rational::one();
    let two = Rational::from(2);
    let n1 = &n + &one;
    Ok(match kind {
        SumKind::FirstN => &n * &n1 / &two,
        SumKind::Odd => &n * &n,
        SumKind::Triangular => &n * &n1 * (&n + &two) / Rational::from(6),
        SumKind::Squares => &n * &n1 * (&two * &n + &one) / Rational::from(6),
        SumKind::RecipConsecutive => &n / &n1,
        SumKind::RecipOdd => &n / (&two * &n + &one),
        SumKind::ProductConsecutive => &n * &n1 * (&n + &two) / Rational::from(3),
    })
}
