//! Linear systems `A·x = b` over the rationals: rank-based classification,
//! Gaussian elimination with parametric families, Cramer's rule and the
//! inverse-matrix method.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{self, determinant, echelon, inverse, matmul, rref, Matrix};
use crate::rational::{parse_rational_at, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    a: Matrix,
    b: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(a: Matrix, b: Vec<Rational>) -> Result<Self> {
        if a.rows() != b.len() {
            return Err(Error::ShapeMismatch(format!("{} equations but {} right-hand sides", a.rows(), b.len())));
        }
        Ok(LinearSystem { a, b })
    }

    /// Splits `(A|b)`; the last column is the right-hand side.
    pub fn from_augmented(ab: &Matrix) -> Result<Self> {
        if ab.cols() < 2 {
            return Err(Error::ShapeMismatch("an augmented matrix needs at least two columns".into()));
        }
        let a = ab.columns(0, ab.cols() - 1)?;
        LinearSystem::new(a, ab.col(ab.cols() - 1))
    }

    /// Homogeneous system `A·x = 0`.
    pub fn homogeneous(a: Matrix) -> Self {
        let b = vec![Rational::zero(); a.rows()];
        LinearSystem { a, b }
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn equations(&self) -> usize {
        self.a.rows()
    }

    pub fn unknowns(&self) -> usize {
        self.a.cols()
    }

    pub fn augmented(&self) -> Matrix {
        self.a.augment(&Matrix::column(self.b.clone()).expect("at least one equation")).expect("same rows")
    }

    /// Does `x` satisfy every equation exactly?
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.unknowns()
            && (0..self.equations())
                .all(|i| self.a.row(i).iter().zip(x).map(|(c, v)| c * v).sum::<Rational>() == self.b[i])
    }
}

impl FromStr for LinearSystem {
    type Err = Error;

    /// Either a block form (`A` rows, a line holding only `|`, then the `b`
    /// entries) or a row form where every row reads `a1 a2 ... | b`.
    fn from_str(s: &str) -> Result<Self> {
        let mut offset = 0;
        let mut split = None;
        for line in s.split('\n') {
            if line.trim() == "|" {
                split = Some((offset, offset + line.len()));
                break;
            }
            offset += line.len() + 1;
        }
        if let Some((start, end)) = split {
            let a: Matrix = s[..start].parse()?;
            let rest = &s[end..];
            let mut b = Vec::new();
            let mut pos = 0;
            for tok in rest.split(|c: char| c.is_whitespace() || c == ';') {
                if !tok.is_empty() {
                    b.push(parse_rational_at(tok, end + pos)?);
                }
                pos += tok.len() + 1;
            }
            return LinearSystem::new(a, b);
        }
        if !s.contains('|') {
            return Err(Error::parse(0, "expected '|' between coefficients and right-hand side"));
        }
        let mut rows = Vec::new();
        let mut offset = 0;
        for row in s.split([';', '\n']) {
            let base = offset;
            offset += row.len() + 1;
            if row.trim().is_empty() {
                continue;
            }
            let Some(bar) = row.find('|') else {
                return Err(Error::parse(base, "row without '|'"));
            };
            let mut entries = Vec::new();
            let mut pos = 0;
            for tok in row.split(|c: char| c.is_whitespace() || c == '|') {
                if !tok.is_empty() {
                    entries.push(parse_rational_at(tok, base + pos)?);
                }
                pos += tok.len() + 1;
            }
            let left = row[..bar].split_whitespace().count();
            if entries.len() != left + 1 {
                return Err(Error::parse(base + bar, "exactly one right-hand side per row"));
            }
            rows.push(entries);
        }
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::parse(0, "rows have different lengths"));
        }
        LinearSystem::from_augmented(&Matrix::from_rows(rows)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Inconsistent,
    Unique,
    Infinite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Inconsistent => "inconsistent",
            Verdict::Unique => "unique",
            Verdict::Infinite => "infinite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub rank_a: usize,
    pub rank_ab: usize,
    pub n: usize,
    pub verdict: Verdict,
}

pub fn classify(sys: &LinearSystem) -> ConsistencyReport {
    let rank_a = linalg::rank(&sys.a).rank;
    let rank_ab = linalg::rank(&sys.augmented()).rank;
    let n = sys.unknowns();
    let verdict = if rank_a != rank_ab {
        Verdict::Inconsistent
    } else if rank_a == n {
        Verdict::Unique
    } else {
        Verdict::Infinite
    };
    ConsistencyReport { rank_a, rank_ab, n, verdict }
}

/// Solution set. Parametric families read
/// `x = particular + Σ t_k · directions[k]`, where `t_k` is the value of the
/// free unknown `free_cols[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet {
    Inconsistent,
    Unique(Vec<Rational>),
    Parametric { particular: Vec<Rational>, directions: Vec<Vec<Rational>>, free_cols: Vec<usize> },
}

impl SolutionSet {
    pub fn verdict(&self) -> Verdict {
        match self {
            SolutionSet::Inconsistent => Verdict::Inconsistent,
            SolutionSet::Unique(_) => Verdict::Unique,
            SolutionSet::Parametric { .. } => Verdict::Infinite,
        }
    }

    /// Number of free parameters.
    pub fn dimension(&self) -> usize {
        match self {
            SolutionSet::Parametric { directions, .. } => directions.len(),
            _ => 0,
        }
    }

    /// Member for the given parameter values; `None` when inconsistent or the
    /// parameter count is wrong.
    pub fn instantiate(&self, params: &[Rational]) -> Option<Vec<Rational>> {
        match self {
            SolutionSet::Inconsistent => None,
            SolutionSet::Unique(x) => params.is_empty().then(|| x.clone()),
            SolutionSet::Parametric { particular, directions, .. } => {
                if params.len() != directions.len() {
                    return None;
                }
                let mut x = particular.clone();
                for (t, d) in params.iter().zip(directions) {
                    for (xi, di) in x.iter_mut().zip(d) {
                        *xi += &(t * di);
                    }
                }
                Some(x)
            }
        }
    }
}

fn fmt_affine(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], constant: &Rational) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        if mag.is_one() {
            write!(f, "t{}", k + 1)?;
        } else {
            write!(f, "{mag}·t{}", k + 1)?;
        }
        first = false;
    }
    if first {
        write!(f, "{constant}")
    } else if constant.is_zero() {
        Ok(())
    } else {
        let sign = if constant.is_negative() { "-" } else { "+" };
        write!(f, " {sign} {}", constant.abs())
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSet::Inconsistent => f.write_str("inconsistent"),
            SolutionSet::Unique(x) => {
                for (i, v) in x.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "x{} = {v}", i + 1)?;
                }
                Ok(())
            }
            SolutionSet::Parametric { particular, directions, .. } => {
                for (i, p) in particular.iter().enumerate() {
                    if i > 0 {
                        f.write_str("\n")?;
                    }
                    write!(f, "x{} = ", i + 1)?;
                    let coeffs: Vec<Rational> = directions.iter().map(|d| d[i].clone()).collect();
                    fmt_affine(f, &coeffs, p)?;
                }
                Ok(())
            }
        }
    }
}

/// Gauss-Jordan on `(A|b)`. Free unknowns are the non-pivot columns, left
/// to right.
pub fn solve_gauss(sys: &LinearSystem) -> SolutionSet {
    let n = sys.unknowns();
    let (r, pivots) = rref(&sys.augmented());
    if pivots.last() == Some(&n) {
        return SolutionSet::Inconsistent;
    }
    let mut particular = vec![Rational::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = r.get(row, n).clone();
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free_cols.is_empty() {
        return SolutionSet::Unique(particular);
    }
    let directions = free_cols
        .iter()
        .map(|&f| {
            let mut d = vec![Rational::zero(); n];
            d[f] = Rational::one();
            for (row, &c) in pivots.iter().enumerate() {
                d[c] = -r.get(row, f).clone();
            }
            d
        })
        .collect();
    SolutionSet::Parametric { particular, directions, free_cols }
}

/// Determinants used by Cramer's rule: `D` and `D_k` for each unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CramerDeterminants {
    pub d: Rational,
    pub d_k: Vec<Rational>,
}

pub fn cramer_determinants(sys: &LinearSystem) -> Result<CramerDeterminants> {
    if !sys.a.is_square() {
        return Err(Error::NotSquare);
    }
    let d = determinant(&sys.a)?;
    let d_k = (0..sys.unknowns()).map(|k| determinant(&sys.a.with_column(k, &sys.b)?)).collect::<Result<_>>()?;
    Ok(CramerDeterminants { d, d_k })
}

/// `x_k = D_k / D` for a square system with `D ≠ 0`.
pub fn solve_cramer(sys: &LinearSystem) -> Result<SolutionSet> {
    let dets = cramer_determinants(sys)?;
    if dets.d.is_zero() {
        return Err(Error::SingularSystem);
    }
    Ok(SolutionSet::Unique(dets.d_k.iter().map(|dk| dk / &dets.d).collect()))
}

/// `x = A⁻¹·b` for a square regular system.
pub fn solve_inverse_method(sys: &LinearSystem) -> Result<SolutionSet> {
    if !sys.a.is_square() {
        return Err(Error::NotSquare);
    }
    let x = matmul(&inverse(&sys.a)?, &Matrix::column(sys.b.clone())?)?;
    Ok(SolutionSet::Unique(x.col(0)))
}

/// Reduces `(A|b)` to echelon form, keeps the regular `r x r` subsystem in
/// the pivot unknowns, moves the free unknowns to the right-hand side and
/// hands each resulting square system to `square`.
fn solve_reduced(sys: &LinearSystem, square: fn(&LinearSystem) -> Result<SolutionSet>) -> Result<SolutionSet> {
    let n = sys.unknowns();
    let rep = echelon(&sys.augmented());
    if rep.pivot_cols.last() == Some(&n) {
        return Ok(SolutionSet::Inconsistent);
    }
    let r = rep.rank;
    if r == 0 {
        // every unknown is free
        let directions =
            (0..n).map(|f| (0..n).map(|i| if i == f { Rational::one() } else { Rational::zero() }).collect()).collect();
        return Ok(SolutionSet::Parametric {
            particular: vec![Rational::zero(); n],
            directions,
            free_cols: (0..n).collect(),
        });
    }
    let e = &rep.echelon;
    let pivots = &rep.pivot_cols;
    let sub = Matrix::from_rows((0..r).map(|i| pivots.iter().map(|&c| e.get(i, c).clone()).collect()).collect())?;
    let solve_for = |rhs: Vec<Rational>| -> Result<Vec<Rational>> {
        match square(&LinearSystem::new(sub.clone(), rhs)?)? {
            SolutionSet::Unique(x) => Ok(x),
            _ => Err(Error::SingularSystem),
        }
    };
    let spread = |pivot_values: Vec<Rational>| {
        let mut x = vec![Rational::zero(); n];
        for (v, &c) in pivot_values.into_iter().zip(pivots) {
            x[c] = v;
        }
        x
    };
    let particular = spread(solve_for((0..r).map(|i| e.get(i, n).clone()).collect())?);
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free_cols.is_empty() {
        return Ok(SolutionSet::Unique(particular));
    }
    let mut directions = Vec::with_capacity(free_cols.len());
    for &f in &free_cols {
        let mut d = spread(solve_for((0..r).map(|i| -e.get(i, f).clone()).collect())?);
        d[f] = Rational::one();
        directions.push(d);
    }
    Ok(SolutionSet::Parametric { particular, directions, free_cols })
}

/// Cramer's rule applied to the reduced pivot subsystem; works for any
/// consistent system, free unknowns become parameters.
pub fn solve_cramer_reduced(sys: &LinearSystem) -> Result<SolutionSet> {
    solve_reduced(sys, solve_cramer)
}

/// Inverse-matrix method applied to the reduced pivot subsystem.
pub fn solve_inverse_reduced(sys: &LinearSystem) -> Result<SolutionSet> {
    solve_reduced(sys, solve_inverse_method)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousReport {
    pub trivial_only: bool,
    pub solutions: SolutionSet,
}

/// `A·x = 0` has nontrivial solutions iff `rank(A) < n`.
pub fn homogeneous_analysis(a: &Matrix) -> HomogeneousReport {
    let solutions = solve_gauss(&LinearSystem::homogeneous(a.clone()));
    HomogeneousReport { trivial_only: matches!(solutions, SolutionSet::Unique(_)), solutions }
}
