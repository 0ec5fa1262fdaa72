//! Proportions, percentages and mixtures.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational_at, Rational};

/// `coef·x + constant`, one side of a proportion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Affine {
    pub coef: Rational,
    pub constant: Rational,
}

impl Affine {
    pub fn new(coef: impl Into<Rational>, constant: impl Into<Rational>) -> Self {
        Affine { coef: coef.into(), constant: constant.into() }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Affine { coef: Rational::zero(), constant: c.into() }
    }

    /// Just `x`.
    pub fn x() -> Self {
        Affine::new(1, 0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.coef * x + &self.constant
    }
}

impl From<Rational> for Affine {
    fn from(c: Rational) -> Self {
        Affine::constant(c)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            return write!(f, "{}", self.constant);
        }
        if self.coef.is_one() {
            f.write_str("x")?;
        } else if self.coef == -Rational::one() {
            f.write_str("-x")?;
        } else {
            write!(f, "{}x", self.coef)?;
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", self.constant.abs())?;
        }
        Ok(())
    }
}

/// Sums of terms like `x`, `2x`, `3/2*x`, `-x`, `9`.
impl FromStr for Affine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Affine::default();
        let mut term = String::new();
        let mut start = 0;
        let flush = |term: &str, at: usize, out: &mut Affine| -> Result<()> {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let (slot, text) = match body.strip_suffix('x') {
                Some(c) => (&mut out.coef, c.strip_suffix('*').unwrap_or(c)),
                None if body.is_empty() => return Err(Error::parse(at, "dangling sign")),
                None => (&mut out.constant, body),
            };
            let v = if text.is_empty() { Rational::one() } else { parse_rational_at(text, at)? };
            if neg {
                *slot -= &v;
            } else {
                *slot += &v;
            }
            Ok(())
        };
        for (i, ch) in s.char_indices() {
            let ch = if ch == '\u{2212}' { '-' } else { ch };
            if ch.is_whitespace() {
                continue;
            }
            if (ch == '+' || ch == '-') && !term.is_empty() && !term.ends_with(['/', '*']) {
                flush(&term, start, &mut out)?;
                term.clear();
            }
            if term.is_empty() {
                start = i;
            }
            term.push(ch);
        }
        if term.is_empty() {
            return Err(Error::parse(0, "empty expression"));
        }
        flush(&term, start, &mut out)?;
        Ok(out)
    }
}

/// Solves `lhs1 : lhs2 = rhs1 : rhs2` for `x`.
pub fn solve_proportion(lhs1: &Affine, lhs2: &Rational, rhs1: &Affine, rhs2: &Rational) -> Result<Rational> {
    if lhs2.is_zero() || rhs2.is_zero() {
        return Err(Error::Degenerate("a proportion cannot have a zero second term".into()));
    }
    // lhs1·rhs2 = rhs1·lhs2
    let slope = &lhs1.coef * rhs2 - &rhs1.coef * lhs2;
    let rest = &rhs1.constant * lhs2 - &lhs1.constant * rhs2;
    if slope.is_zero() {
        return Err(if rest.is_zero() {
            Error::Degenerate("every x satisfies the proportion".into())
        } else {
            Error::NoSolution
        });
    }
    Ok(rest / slope)
}

/// Splits `total` into parts proportional to `weights`.
pub fn extended_split(total: &Rational, weights: &[Rational]) -> Result<Vec<Rational>> {
    if weights.is_empty() || weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::BadWeights);
    }
    if !total.is_positive() {
        return Err(Error::NonPositive);
    }
    let k = total / &weights.iter().sum::<Rational>();
    Ok(weights.iter().map(|w| w * &k).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PercentPart {
    /// The whole, `G`.
    Base,
    /// The percentage amount, `I`.
    Part,
    /// The rate, `p`.
    Rate,
}

impl fmt::Display for PercentPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PercentPart::Base => "G",
            PercentPart::Part => "I",
            PercentPart::Rate => "p",
        })
    }
}

/// `G : 100 = I : p`; exactly one argument must be missing.
pub fn percent_solve(
    g: Option<&Rational>,
    i: Option<&Rational>,
    p: Option<&Rational>,
) -> Result<(PercentPart, Rational)> {
    let hundred = Rational::from(100);
    match (g, i, p) {
        (Some(g), Some(i), None) => {
            if !g.is_positive() {
                return Err(Error::NonPositive);
            }
            Ok((PercentPart::Rate, &hundred * i / g))
        }
        (Some(g), None, Some(p)) => {
            if !g.is_positive() {
                return Err(Error::NonPositive);
            }
            Ok((PercentPart::Part, g * p / &hundred))
        }
        (None, Some(i), Some(p)) => {
            if !p.is_positive() {
                return Err(Error::NonPositive);
            }
            Ok((PercentPart::Base, &hundred * i / p))
        }
        _ => Err(Error::WrongArity),
    }
}

fn chain_factor(deltas: &[Rational]) -> Result<Rational> {
    let hundred = Rational::from(100);
    let mut acc = Rational::one();
    for d in deltas {
        let f = Rational::one() + d / &hundred;
        if !f.is_positive() {
            return Err(Error::AnnihilatingDelta);
        }
        acc *= &f;
    }
    Ok(acc)
}

/// Successive percentage changes. Given the start, returns the final value;
/// given the final value, returns the start.
pub fn percent_chain(start: Option<&Rational>, end: Option<&Rational>, deltas: &[Rational]) -> Result<Rational> {
    let k = chain_factor(deltas)?;
    match (start, end) {
        (Some(s), None) => Ok(s * &k),
        (None, Some(e)) => Ok(e / &k),
        _ => Err(Error::WrongArity),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixtureSplit {
    pub x1: Rational,
    pub x2: Rational,
    /// Both intensities equal the target, so any split works.
    pub degenerate: bool,
}

/// Amounts of intensities `s1` and `s2` giving `total` at intensity `s`.
pub fn simple_mixture(s1: &Rational, s2: &Rational, s: &Rational, total: &Rational) -> Result<MixtureSplit> {
    if !total.is_positive() {
        return Err(Error::NonPositive);
    }
    if s1 == s2 {
        if s == s1 {
            return Ok(MixtureSplit { x1: total.clone(), x2: Rational::zero(), degenerate: true });
        }
        return Err(Error::Unsolvable);
    }
    let (lo, hi) = if s1 < s2 { (s1, s2) } else { (s2, s1) };
    if s < lo || s > hi {
        return Err(Error::Unsolvable);
    }
    let x1 = total * &(s - s2) / (s1 - s2);
    let x2 = total - &x1;
    Ok(MixtureSplit { x1, x2, degenerate: false })
}

/// Intensity `s2` such that `x1·s1 + x2·s2 = (x1 + x2)·s`.
pub fn mixture_missing_intensity(x1: &Rational, s1: &Rational, x2: &Rational, s: &Rational) -> Result<Rational> {
    if !x2.is_positive() || x1.is_negative() {
        return Err(Error::NonPositive);
    }
    Ok(((x1 + x2) * s - x1 * s1) / x2)
}

/// Multi-component alligation. Values above the target, taken in
/// descending order, pair with values below it in ascending order; each
/// value receives `|partner - target|`, then amounts are scaled to `total`.
pub fn star_scheme(values: &[Rational], target: &Rational, total: &Rational) -> Result<Vec<Rational>> {
    if !total.is_positive() {
        return Err(Error::NonPositive);
    }
    if values.iter().any(|v| v == target) {
        return Err(Error::TargetCollision);
    }
    let mut above: Vec<usize> = (0..values.len()).filter(|&i| &values[i] > target).collect();
    let mut below: Vec<usize> = (0..values.len()).filter(|&i| &values[i] < target).collect();
    if above.is_empty() || above.len() != below.len() {
        return Err(Error::UnbalancedSides);
    }
    above.sort_by(|&a, &b| values[b].cmp(&values[a]).then(a.cmp(&b)));
    below.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));
    let mut raw = vec![Rational::zero(); values.len()];
    for (&hi, &lo) in above.iter().zip(&below) {
        raw[hi] = (&values[lo] - target).abs();
        raw[lo] = (&values[hi] - target).abs();
    }
    let k = total / &raw.iter().sum::<Rational>();
    Ok(raw.iter().map(|r| r * &k).collect())
}

/// Percent literal: plain number, `%` suffix, or `‰` suffix (per mille,
/// converted to percent).
pub fn parse_percent(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some(v) = t.strip_suffix('‰') {
        Ok(parse_rational_at(v.trim_end(), 0)? / Rational::from(10))
    } else if let Some(v) = t.strip_suffix('%') {
        parse_rational_at(v.trim_end(), 0)
    } else {
        parse_rational_at(t, 0)
    }
}
