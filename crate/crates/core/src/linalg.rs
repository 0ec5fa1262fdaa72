//! Exact rational matrices: arithmetic, determinants, cofactors and the
//! adjugate, inverses, rank by elementary row operations, and matrix
//! equations.
//!
//! Row and column indices are zero-based throughout the library. The CLI and
//! the operation log use the one-based convention.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational_at, Int, Rational};

/// Dense `rows x cols` matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch("matrices need at least one row and column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("rows have different lengths".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer literal rows; panics on ragged input.
    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Column vector.
    pub fn column(values: Vec<Rational>) -> Result<Self> {
        let n = values.len();
        Matrix::new(n, 1, values)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// `self | other`, side by side.
    pub fn augment(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("augmented blocks need the same row count".into()));
        }
        let rows = (0..self.rows).map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect()).collect();
        Matrix::from_rows(rows)
    }

    /// Columns `from..to`.
    pub fn columns(&self, from: usize, to: usize) -> Result<Matrix> {
        if from >= to || to > self.cols {
            return Err(Error::IndexOutOfRange);
        }
        Matrix::from_rows((0..self.rows).map(|i| self.row(i)[from..to].to_vec()).collect())
    }

    /// Copy with column `j` replaced.
    pub fn with_column(&self, j: usize, values: &[Rational]) -> Result<Matrix> {
        if j >= self.cols || values.len() != self.rows {
            return Err(Error::ShapeMismatch("replacement column does not fit".into()));
        }
        let mut m = self.clone();
        for (i, v) in values.iter().enumerate() {
            m.set(i, j, v.clone());
        }
        Ok(m)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let delta = factor * self.get(source, j);
            self.data[target * self.cols + j] += &delta;
        }
    }

    fn scale_row(&mut self, i: usize, factor: &Rational) {
        for j in 0..self.cols {
            self.data[i * self.cols + j] *= factor;
        }
    }

    /// Applies an elementary row operation in place.
    pub fn apply(&mut self, op: &RowOp) {
        match op {
            RowOp::Swap(a, b) => self.swap_rows(*a, *b),
            RowOp::Scale(i, c) => self.scale_row(*i, c),
            RowOp::AddMultiple { target, source, factor } => self.add_row_multiple(*target, *source, factor),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let widths: Vec<usize> =
            (0..self.cols).map(|j| (0..self.rows).map(|i| cells[i * self.cols + j].len()).max().unwrap_or(1)).collect();
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:>w$}", cells[i * self.cols + j], w = widths[j])).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix literal: rows separated by `;` or newlines, entries by whitespace.
impl FromStr for Matrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for chunk in s.split([';', '\n']) {
            let base = offset;
            offset += chunk.len() + 1;
            if chunk.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            let mut pos = base;
            for tok in chunk.split_whitespace() {
                let at = base + chunk[pos - base..].find(tok).unwrap_or(0) + (pos - base);
                row.push(parse_rational_at(tok, at)?);
                pos = at + tok.len();
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::parse(0, "empty matrix literal"));
        }
        let width = rows[0].len();
        if let Some(k) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::parse(0, format!("row {} has {} entries, expected {width}", k + 1, rows[k].len())));
        }
        Matrix::from_rows(rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Sub,
}

impl FromStr for MatOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "add" | "+" => Ok(MatOp::Add),
            "sub" | "-" => Ok(MatOp::Sub),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

pub fn mat_arith(a: &Matrix, b: &Matrix, op: MatOp) -> Result<Matrix> {
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::ShapeMismatch(format!("{}x{} vs {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let data = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| match op {
            MatOp::Add => x + y,
            MatOp::Sub => x - y,
        })
        .collect();
    Ok(Matrix { rows: a.rows, cols: a.cols, data })
}

pub fn scale(alpha: &Rational, a: &Matrix) -> Matrix {
    Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().map(|x| alpha * x).collect() }
}

/// `c_ik = Σ_j a_ij b_jk`.
pub fn matmul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!("{}x{} times {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut out = Matrix::zero(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..b.cols {
            let s: Rational = (0..a.cols).map(|j| a.get(i, j) * b.get(j, k)).sum();
            out.set(i, k, s);
        }
    }
    Ok(out)
}

pub fn transpose(a: &Matrix) -> Matrix {
    let mut out = Matrix::zero(a.cols, a.rows);
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(j, i, a.get(i, j).clone());
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    /// Cofactor expansion along the line with the most zeros.
    Laplace,
    /// Gaussian elimination over the rationals with row-swap sign tracking.
    Elimination,
    /// Fraction-free Bareiss elimination.
    Bareiss,
    /// Sum over all permutations.
    Leibniz,
    /// Rule of Sarrus, 3x3 only.
    Sarrus3,
}

impl FromStr for DetMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "laplace" => Ok(DetMethod::Laplace),
            "elimination" | "gauss" => Ok(DetMethod::Elimination),
            "bareiss" => Ok(DetMethod::Bareiss),
            "leibniz" | "permutation" => Ok(DetMethod::Leibniz),
            "sarrus" | "sarrus3" => Ok(DetMethod::Sarrus3),
            other => Err(Error::BadMethod(other.to_string())),
        }
    }
}

pub fn det(a: &Matrix, method: DetMethod) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    match method {
        DetMethod::Laplace => Ok(det_laplace(a)),
        DetMethod::Elimination => Ok(det_elimination(a)),
        DetMethod::Bareiss => Ok(det_bareiss(a)),
        DetMethod::Leibniz => Ok(det_leibniz(a)),
        DetMethod::Sarrus3 => det_sarrus(a),
    }
}

/// Determinant by elimination; the default for internal use.
pub fn determinant(a: &Matrix) -> Result<Rational> {
    det(a, DetMethod::Elimination)
}

fn det_sarrus(a: &Matrix) -> Result<Rational> {
    if a.rows != 3 {
        return Err(Error::BadMethod("the rule of Sarrus applies to 3x3 matrices only".into()));
    }
    let g = |i, j| a.get(i, j);
    let plus = g(0, 0) * g(1, 1) * g(2, 2) + g(0, 1) * g(1, 2) * g(2, 0) + g(0, 2) * g(1, 0) * g(2, 1);
    let minus = g(0, 2) * g(1, 1) * g(2, 0) + g(0, 0) * g(1, 2) * g(2, 1) + g(0, 1) * g(1, 0) * g(2, 2);
    Ok(plus - minus)
}

/// Submatrix without row `i` and column `j`.
fn submatrix(a: &Matrix, i: usize, j: usize) -> Matrix {
    let data = (0..a.rows)
        .filter(|&r| r != i)
        .flat_map(|r| (0..a.cols).filter(move |&c| c != j).map(move |c| a.get(r, c).clone()))
        .collect();
    Matrix { rows: a.rows - 1, cols: a.cols - 1, data }
}

fn det_laplace(a: &Matrix) -> Rational {
    let n = a.rows;
    match n {
        1 => return a.get(0, 0).clone(),
        2 => return a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0),
        _ => {}
    }
    let zeros_in_row = |i: usize| (0..n).filter(|&j| a.get(i, j).is_zero()).count();
    let zeros_in_col = |j: usize| (0..n).filter(|&i| a.get(i, j).is_zero()).count();
    let best_row = (0..n).rev().max_by_key(|&i| zeros_in_row(i)).unwrap_or(0);
    let best_col = (0..n).rev().max_by_key(|&j| zeros_in_col(j)).unwrap_or(0);
    let sign = |k: usize| if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    if zeros_in_col(best_col) > zeros_in_row(best_row) {
        (0..n)
            .filter(|&i| !a.get(i, best_col).is_zero())
            .map(|i| sign(i + best_col) * a.get(i, best_col) * det_laplace(&submatrix(a, i, best_col)))
            .sum()
    } else {
        (0..n)
            .filter(|&j| !a.get(best_row, j).is_zero())
            .map(|j| sign(best_row + j) * a.get(best_row, j) * det_laplace(&submatrix(a, best_row, j)))
            .sum()
    }
}

fn det_elimination(a: &Matrix) -> Rational {
    let n = a.rows;
    let mut m = a.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap_rows(p, col);
            det = -det;
        }
        let pivot = m.get(col, col).clone();
        for r in col + 1..n {
            if !m.get(r, col).is_zero() {
                let factor = -(m.get(r, col) / &pivot);
                m.add_row_multiple(r, col, &factor);
            }
        }
        det *= &pivot;
    }
    det
}

/// Bareiss on the integer matrix obtained by clearing denominators row by row.
fn det_bareiss(a: &Matrix) -> Rational {
    let n = a.rows;
    let mut scale = Rational::one();
    let mut m: Vec<Vec<Int>> = Vec::with_capacity(n);
    for i in 0..n {
        let l = a.row(i).iter().fold(Int::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        scale = scale / Rational::from(l.clone());
        m.push(a.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect());
    }
    let mut sign = Rational::one();
    let mut prev = Int::from(1);
    for k in 0..n {
        if m[k][k] == Int::from(0) {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != Int::from(0)) else {
                return Rational::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * Rational::from(m[n - 1][n - 1].clone()) * scale
}

fn det_leibniz(a: &Matrix) -> Rational {
    fn rec(a: &Matrix, row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut Rational) {
        let n = a.rows;
        if row == n {
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let term: Rational = perm.iter().enumerate().map(|(i, &j)| a.get(i, j).clone()).product();
            if inversions % 2 == 0 {
                *acc += &term;
            } else {
                *acc -= &term;
            }
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                perm.push(j);
                rec(a, row + 1, used, perm, acc);
                perm.pop();
                used[j] = false;
            }
        }
    }
    let mut acc = Rational::zero();
    rec(a, 0, &mut vec![false; a.rows], &mut Vec::new(), &mut acc);
    acc
}

fn check_index(a: &Matrix, i: usize, j: usize) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    if i >= a.rows || j >= a.cols {
        return Err(Error::IndexOutOfRange);
    }
    Ok(())
}

/// Determinant of `a` with row `i` and column `j` removed. The empty
/// determinant of a 1×1 matrix is 1, so `adj([a]) = [1]`.
pub fn minor(a: &Matrix, i: usize, j: usize) -> Result<Rational> {
    check_index(a, i, j)?;
    if a.rows == 1 {
        return Ok(Rational::one());
    }
    determinant(&submatrix(a, i, j))
}

/// `(-1)^(i+j) · minor(i, j)`.
pub fn cofactor(a: &Matrix, i: usize, j: usize) -> Result<Rational> {
    let m = minor(a, i, j)?;
    Ok(if (i + j).is_multiple_of(2) { m } else { -m })
}

pub fn cofactor_matrix(a: &Matrix) -> Result<Matrix> {
    check_index(a, 0, 0)?;
    let n = a.rows;
    let data =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| cofactor(a, i, j)).collect::<Result<_>>()?;
    Matrix::new(n, n, data)
}

/// Transposed cofactor matrix.
pub fn adjugate(a: &Matrix) -> Result<Matrix> {
    Ok(transpose(&cofactor_matrix(a)?))
}

/// `A⁻¹ = adj(A) / det(A)`.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let d = determinant(a)?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    Ok(scale(&d.recip()?, &adjugate(a)?))
}

/// Elementary row operation. Indices are zero-based; the display is one-based
/// in Roman numerals (`IIv-2Iv`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    Scale(usize, Rational),
    AddMultiple { target: usize, source: usize, factor: Rational },
}

fn roman(n: usize) -> String {
    const TABLE: [(usize, &str); 13] = [
        (1000, "M"),
        (900, "CM"),
        (500, "D"),
        (400, "CD"),
        (100, "C"),
        (90, "XC"),
        (50, "L"),
        (40, "XL"),
        (10, "X"),
        (9, "IX"),
        (5, "V"),
        (4, "IV"),
        (1, "I"),
    ];
    let mut n = n;
    let mut out = String::new();
    for (v, s) in TABLE {
        while n >= v {
            out.push_str(s);
            n -= v;
        }
    }
    out
}

impl fmt::Display for RowOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |i: usize| format!("{}v", roman(i + 1));
        match self {
            RowOp::Swap(a, b) => write!(f, "{}<->{}", r(*a), r(*b)),
            RowOp::Scale(i, c) => write!(f, "{}*{}", r(*i), c),
            RowOp::AddMultiple { target, source, factor } => {
                let sign = if factor.is_negative() { "-" } else { "+" };
                let mag = factor.abs();
                if mag.is_one() {
                    write!(f, "{}{sign}{}", r(*target), r(*source))
                } else {
                    write!(f, "{}{sign}{mag}{}", r(*target), r(*source))
                }
            }
        }
    }
}

/// Row-echelon form with the operations that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonReport {
    pub echelon: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub op_log: Vec<RowOp>,
}

/// Gaussian elimination to row-echelon form: first nonzero pivot in each
/// column, swaps and row additions only.
pub fn echelon(a: &Matrix) -> EchelonReport {
    let mut m = a.clone();
    let mut log = Vec::new();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            let op = RowOp::Swap(row, p);
            m.apply(&op);
            log.push(op);
        }
        for r in row + 1..m.rows {
            if !m.get(r, col).is_zero() {
                let factor = -(m.get(r, col) / m.get(row, col));
                let op = RowOp::AddMultiple { target: r, source: row, factor };
                m.apply(&op);
                log.push(op);
            }
        }
        pivots.push(col);
        row += 1;
    }
    EchelonReport { echelon: m, rank: pivots.len(), pivot_cols: pivots, op_log: log }
}

/// Rank via row-echelon form.
pub fn rank(a: &Matrix) -> EchelonReport {
    echelon(a)
}

/// Reduced row-echelon form and its pivot columns.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let report = echelon(a);
    let mut m = report.echelon;
    for (r, &c) in report.pivot_cols.iter().enumerate().rev() {
        let inv = m.get(r, c).recip().expect("pivot is nonzero");
        m.scale_row(r, &inv);
        for above in 0..r {
            if !m.get(above, c).is_zero() {
                let factor = -m.get(above, c).clone();
                m.add_row_multiple(above, r, &factor);
            }
        }
    }
    (m, report.pivot_cols)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationSide {
    /// `A·X = B`, so `X = A⁻¹·B`.
    Left,
    /// `X·A = B`, so `X = B·A⁻¹`.
    Right,
}

impl FromStr for EquationSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "AX=B" | "ax=b" => Ok(EquationSide::Left),
            "right" | "XA=B" | "xa=b" => Ok(EquationSide::Right),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

pub fn solve_matrix_equation(side: EquationSide, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let fits = match side {
        EquationSide::Left => b.rows == a.rows,
        EquationSide::Right => b.cols == a.cols,
    };
    if !fits {
        return Err(Error::ShapeMismatch("right-hand side does not fit the coefficient matrix".into()));
    }
    let inv = inverse(a)?;
    match side {
        EquationSide::Left => matmul(&inv, b),
        EquationSide::Right => matmul(b, &inv),
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn m(s: &str) -> Matrix {
        s.parse().unwrap()
    }

    pub(crate) fn arb_square(max_n: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec((-9i64..=9, 1i64..=3), n * n).prop_map(move |v| {
                Matrix::new(n, n, v.into_iter().map(|(p, q)| Rational::frac(p, q)).collect()).unwrap()
            })
        })
    }

    pub(crate) fn arb_regular(max_n: usize) -> impl Strategy<Value = Matrix> {
        arb_square(max_n).prop_filter("regular", |a| !determinant(a).unwrap().is_zero())
    }

    #[test]
    fn literal_parsing() {
        let a = m("2 -3; 0 1");
        assert_eq!((a.rows(), a.cols()), (2, 2));
        assert_eq!(a.get(0, 1), &Rational::from(-3));
        assert_eq!(m("1 2\n3 4\n"), m("1 2; 3 4"));
        assert_eq!(m("1/2 0.25"), Matrix::from_rows(vec![vec![Rational::frac(1, 2), Rational::frac(1, 4)]]).unwrap());
        assert!("1 2; 3".parse::<Matrix>().is_err());
        assert!("".parse::<Matrix>().is_err());
        assert!(matches!("1 x".parse::<Matrix>(), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn arithmetic() {
        let a = m("3 1 -2; 0 2 0");
        let b = m("2 1; 0 4; -1 0");
        assert_eq!(matmul(&a, &b).unwrap(), m("8 7; 0 8"));
        assert_eq!(matmul(&b, &a).unwrap(), m("6 4 -4; 0 8 0; -3 -1 2"));
        assert!(matches!(matmul(&a, &a), Err(Error::ShapeMismatch(_))));

        let a = m("2 1 2 0; 3 1 2 1");
        let b = m("3 -1 -5 0; 0 -1 2 1");
        let c = m("-2 0 2 0; 3 1 2 1");
        assert_eq!(mat_arith(&a, &b, MatOp::Add).unwrap(), m("5 0 -3 0; 3 0 4 2"));
        assert_eq!(mat_arith(&c, &a, MatOp::Sub).unwrap(), m("-4 -1 0 0; 0 0 0 0"));
        let combo = mat_arith(
            &mat_arith(&scale(&2.into(), &a), &scale(&3.into(), &b), MatOp::Sub).unwrap(),
            &scale(&4.into(), &c),
            MatOp::Add,
        )
        .unwrap();
        assert_eq!(combo, m("-13 5 27 0; 18 9 6 3"));
        assert_eq!(mat_arith(&a, &Matrix::zero(2, 4), MatOp::Add).unwrap(), a);
        assert!(mat_arith(&a, &Matrix::zero(4, 2), MatOp::Add).is_err());
    }

    #[test]
    fn determinants() {
        for method in [DetMethod::Laplace, DetMethod::Elimination, DetMethod::Bareiss, DetMethod::Leibniz] {
            assert_eq!(det(&m("7 -4; 3 4"), method).unwrap(), Rational::from(40));
            assert_eq!(det(&m("3 2 -1; 1 2 4; 0 6 -2"), method).unwrap(), Rational::from(-86));
            assert_eq!(det(&m("2 1 2 1; 2 -3 1 -3; 4 2 2 2; -2 4 -1 5"), method).unwrap(), Rational::from(16));
        }
        assert_eq!(det(&m("3 2 -1; 1 2 4; 0 6 -2"), DetMethod::Sarrus3).unwrap(), Rational::from(-86));
        assert!(matches!(det(&m("7 -4; 3 4"), DetMethod::Sarrus3), Err(Error::BadMethod(_))));
        assert_eq!(det(&m("1 2 3"), DetMethod::Laplace), Err(Error::NotSquare));
        assert!("cholesky".parse::<DetMethod>().is_err());
        assert_eq!(det(&m("1/2 1/3; 1/4 1/5"), DetMethod::Bareiss).unwrap(), Rational::frac(1, 60));
    }

    #[test]
    fn cofactors_and_adjugate() {
        assert_eq!(adjugate(&m("3 -5; 4 6")).unwrap(), m("6 5; -4 3"));
        assert_eq!(adjugate(&m("5")).unwrap(), m("1"));
        let a = m("1 2 -5; 0 2 1; 1 1 3");
        assert_eq!(cofactor_matrix(&a).unwrap(), m("5 1 -2; -11 8 1; 12 -1 2"));
        assert_eq!(adjugate(&a).unwrap(), m("5 -11 12; 1 8 -1; -2 1 2"));
        assert_eq!(adjugate(&Matrix::identity(4)).unwrap(), Matrix::identity(4));
        assert_eq!(minor(&a, 0, 1).unwrap(), Rational::from(-1));
        assert_eq!(cofactor(&a, 0, 1).unwrap(), Rational::from(1));
        assert_eq!(minor(&a, 3, 0), Err(Error::IndexOutOfRange));
        assert_eq!(minor(&m("1 2"), 0, 0), Err(Error::NotSquare));
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse(&m("2 -3; 0 1")).unwrap(), m("1/2 3/2; 0 1"));
        assert_eq!(inverse(&m("-1 0 -2; 0 2 1; 1 -1 2")).unwrap(), m("-5 -2 -4; -1 0 -1; 2 1 2"));
        assert_eq!(inverse(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(inverse(&m("2 -3; -4 6")), Err(Error::Singular));
        assert_eq!(inverse(&m("4")).unwrap(), m("1/4"));
    }

    #[test]
    fn ranks() {
        let r = rank(&m("4 1 1; 1 2 1; 1 1 2"));
        assert_eq!(r.rank, 3);
        assert_eq!(rank(&m("2 3 -1 4; 5 -3 8 19; 1 -2 3 5")).rank, 2);
        let r = rank(&m("3 6 6 9 1; 2 4 1 2 0; -1 -2 4 5 1"));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 2]);
        assert_eq!(rank(&Matrix::zero(3, 4)).rank, 0);
        let r = rank(&m("0 1; 1 0; 2 2"));
        assert_eq!(r.op_log[0].to_string(), "Iv<->IIv");
        assert_eq!(r.op_log[1].to_string(), "IIIv-2Iv");
        assert_eq!(r.op_log[2].to_string(), "IIIv-2IIv");
    }

    #[test]
    fn matrix_equations() {
        // AX + B = 3X + I  ⇔  (A - 3I)X = I - B
        let a = m("2 -3; -4 6");
        let b = m("-1 0; 2 3");
        let c = mat_arith(&a, &scale(&3.into(), &Matrix::identity(2)), MatOp::Sub).unwrap();
        let d = mat_arith(&Matrix::identity(2), &b, MatOp::Sub).unwrap();
        let x = solve_matrix_equation(EquationSide::Left, &c, &d).unwrap();
        assert_eq!(x, m("0 2/5; -2/3 -2/15"));
        assert_eq!(matmul(&c, &x).unwrap(), d);

        // XA - A = 2X + I  ⇔  X(A - 2I) = I + A
        let a = m("0 1 2; 2 3 4; 1 0 1");
        let c = mat_arith(&a, &scale(&2.into(), &Matrix::identity(3)), MatOp::Sub).unwrap();
        let d = mat_arith(&Matrix::identity(3), &a, MatOp::Add).unwrap();
        let x = solve_matrix_equation(EquationSide::Right, &c, &d).unwrap();
        assert_eq!(x, scale(&Rational::frac(1, 6), &m("3 3 6; 18 6 36; -3 3 -6")));

        let b = m("1 2; 3 4");
        assert_eq!(solve_matrix_equation(EquationSide::Right, &Matrix::identity(2), &b).unwrap(), b);
        assert_eq!(solve_matrix_equation(EquationSide::Left, &m("1 1; 1 1"), &b), Err(Error::Singular));
        assert!(solve_matrix_equation(EquationSide::Left, &Matrix::identity(3), &b).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn transpose_of_product(a in arb_square(4), seed in any::<u64>()) {
            let n = a.rows();
            let b = Matrix::new(n, n, (0..n * n).map(|k| Rational::from(((seed >> (k % 60)) & 7) as i64 - 3)).collect()).unwrap();
            prop_assert_eq!(transpose(&matmul(&a, &b).unwrap()), matmul(&transpose(&b), &transpose(&a)).unwrap());
        }

        #[test]
        fn determinant_properties(a in arb_square(5), i in 0usize..5, j in 0usize..5, k in -5i64..=5) {
            let n = a.rows();
            let (i, j) = (i % n, j % n);
            let d = determinant(&a).unwrap();
            prop_assert_eq!(determinant(&transpose(&a)).unwrap(), d.clone());

            let mut swapped = a.clone();
            swapped.apply(&RowOp::Swap(i, j));
            prop_assert_eq!(determinant(&swapped).unwrap(), if i == j { d.clone() } else { -d.clone() });

            let mut scaled = a.clone();
            scaled.apply(&RowOp::Scale(i, Rational::from(k)));
            prop_assert_eq!(determinant(&scaled).unwrap(), &d * &Rational::from(k));

            if i != j {
                let mut added = a.clone();
                added.apply(&RowOp::AddMultiple { target: i, source: j, factor: Rational::from(k) });
                prop_assert_eq!(determinant(&added).unwrap(), d.clone());

                let mut proportional = a.clone();
                for c in 0..n {
                    proportional.set(i, c, a.get(j, c) * &Rational::from(k));
                }
                prop_assert!(determinant(&proportional).unwrap().is_zero());
            }
        }

        #[test]
        fn determinant_is_multiplicative(a in arb_square(4), b in arb_square(4)) {
            prop_assume!(a.rows() == b.rows());
            let ab = matmul(&a, &b).unwrap();
            prop_assert_eq!(determinant(&ab).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
        }

        #[test]
        fn adjugate_identities(a in arb_square(5)) {
            prop_assume!(a.rows() >= 2);
            let n = a.rows();
            let d = determinant(&a).unwrap();
            let adj = adjugate(&a).unwrap();
            let target = scale(&d, &Matrix::identity(n));
            prop_assert_eq!(matmul(&a, &adj).unwrap(), target.clone());
            prop_assert_eq!(matmul(&adj, &a).unwrap(), target);
            if !d.is_zero() {
                prop_assert_eq!(determinant(&adj).unwrap(), d.pow(n as i64 - 1).unwrap());
            }
        }

        #[test]
        fn inverse_properties(a in arb_regular(4), b in arb_regular(4)) {
            let n = a.rows();
            let inv = inverse(&a).unwrap();
            prop_assert_eq!(matmul(&a, &inv).unwrap(), Matrix::identity(n));
            prop_assert_eq!(matmul(&inv, &a).unwrap(), Matrix::identity(n));
            prop_assert_eq!(inverse(&inv).unwrap(), a.clone());
            prop_assert_eq!(inverse(&transpose(&a)).unwrap(), transpose(&inv));
            prop_assert_eq!(determinant(&inv).unwrap(), determinant(&a).unwrap().recip().unwrap());
            if b.rows() == n {
                let ab = matmul(&a, &b).unwrap();
                prop_assert_eq!(inverse(&ab).unwrap(), matmul(&inverse(&b).unwrap(), &inv).unwrap());
            }
        }

        #[test]
        fn row_and_column_rank_agree(v in prop::collection::vec(-3i64..=3, 12), shape in 0usize..3) {
            let (r, c) = [(3, 4), (4, 3), (2, 6)][shape];
            let a = Matrix::new(r, c, v.into_iter().map(Rational::from).collect()).unwrap();
            let rep = rank(&a);
            prop_assert_eq!(rep.rank, rank(&transpose(&a)).rank);
            prop_assert!(rep.rank <= r.min(c));
            let nonzero_rows = (0..r).filter(|&i| rep.echelon.row(i).iter().any(|x| !x.is_zero())).count();
            prop_assert_eq!(nonzero_rows, rep.rank);
            let mut replay = a.clone();
            for op in &rep.op_log {
                replay.apply(op);
            }
            prop_assert_eq!(replay, rep.echelon);
        }

        #[test]
        fn vandermonde_like_identity(a in -20i64..20, x in -20i64..20, y in -20i64..20, z in -20i64..20) {
            // |ax a²+x² 1; ay a²+y² 1; az a²+z² 1| = a(x−y)(x−z)(z−y)
            let row = |t: i64| vec![Rational::from(a * t), Rational::from(a * a + t * t), Rational::one()];
            let mat = Matrix::from_rows(vec![row(x), row(y), row(z)]).unwrap();
            prop_assert_eq!(determinant(&mat).unwrap(), Rational::from(a * (x - y) * (x - z) * (z - y)));
        }
    }
}
