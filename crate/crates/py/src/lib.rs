//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be `int`, `Fraction` or a string such as `"-3/4"`.

use exacta::arith;
use exacta::complexn::{self, GaussianRational};
use exacta::geom::{self, LinePlaneKind, LinesKind};
use exacta::linalg::{self, DetMethod, MatOp};
use exacta::linsys::{self, SolutionSet};
use exacta::logic;
use exacta::ratio;
use exacta::{Error, Int, Rational};
use pyo3::exceptions::{PyException, PyTypeError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};
use pyo3::{create_exception, IntoPyObjectExt};

create_exception!(exacta, ExactaError, PyException, "Domain error raised by a kernel operation.");
create_exception!(exacta, ParseError, ExactaError, "Malformed literal.");

fn err(e: Error) -> PyErr {
    if e.is_parse() {
        ParseError::new_err(e.to_string())
    } else {
        ExactaError::new_err(e.to_string())
    }
}

trait OrPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> OrPy<T> for exacta::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse::<Rational>().py_err();
    }
    if let Ok(n) = obj.extract::<Int>() {
        return Ok(Rational::from(n));
    }
    if obj.hasattr("numerator")? && obj.hasattr("denominator")? && !obj.is_instance_of::<pyo3::types::PyFloat>() {
        let num: Int = obj.getattr("numerator")?.extract()?;
        let den: Int = obj.getattr("denominator")?.extract()?;
        return Rational::new(num, den).py_err();
    }
    Err(PyTypeError::new_err("expected int, fractions.Fraction or str (floats are not exact)"))
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    cls.call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn int(obj: &Bound<'_, PyAny>) -> PyResult<Int> {
    obj.extract::<Int>()
}

/// Exact rational matrix.
#[pyclass(module = "exacta", name = "Matrix", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix(linalg::Matrix);

#[pymethods]
impl PyMatrix {
    /// `Matrix("1 2; 3 4")` or `Matrix([[1, 2], [3, 4]])`.
    #[new]
    fn new(src: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = src.cast::<PyString>() {
            return Ok(PyMatrix(s.to_str()?.parse().py_err()?));
        }
        let mut rows = Vec::new();
        for row in src.try_iter()? {
            let row = row?;
            let mut out = Vec::new();
            for x in row.try_iter()? {
                out.push(rational(&x?)?);
            }
            rows.push(out);
        }
        Ok(PyMatrix(linalg::Matrix::from_rows(rows).py_err()?))
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyMatrix(linalg::Matrix::identity(n))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    fn tolist<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let rows = (0..self.0.rows()).map(|i| fractions(py, self.0.row(i))).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, rows)
    }

    #[pyo3(signature = (method = "elimination"))]
    fn det<'py>(&self, py: Python<'py>, method: &str) -> PyResult<Bound<'py, PyAny>> {
        let m: DetMethod = method.parse().py_err()?;
        fraction(py, &linalg::det(&self.0, m).py_err()?)
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(PyMatrix(linalg::inverse(&self.0).py_err()?))
    }

    fn adjugate(&self) -> PyResult<Self> {
        Ok(PyMatrix(linalg::adjugate(&self.0).py_err()?))
    }

    fn transpose(&self) -> Self {
        PyMatrix(linalg::transpose(&self.0))
    }

    fn rank(&self) -> usize {
        linalg::rank(&self.0).rank
    }

    /// `(echelon form, rank, row operations)`.
    fn echelon(&self) -> (Self, usize, Vec<String>) {
        let r = linalg::echelon(&self.0);
        (PyMatrix(r.echelon), r.rank, r.op_log.iter().map(|o| o.to_string()).collect())
    }

    /// Solves `A X = B` (`side="left"`) or `X A = B` (`side="right"`).
    #[pyo3(signature = (b, side = "left"))]
    fn solve(&self, b: &PyMatrix, side: &str) -> PyResult<Self> {
        Ok(PyMatrix(linalg::solve_matrix_equation(side.parse().py_err()?, &self.0, &b.0).py_err()?))
    }

    fn __add__(&self, o: &PyMatrix) -> PyResult<Self> {
        Ok(PyMatrix(linalg::mat_arith(&self.0, &o.0, MatOp::Add).py_err()?))
    }

    fn __sub__(&self, o: &PyMatrix) -> PyResult<Self> {
        Ok(PyMatrix(linalg::mat_arith(&self.0, &o.0, MatOp::Sub).py_err()?))
    }

    fn __matmul__(&self, o: &PyMatrix) -> PyResult<Self> {
        Ok(PyMatrix(linalg::matmul(&self.0, &o.0).py_err()?))
    }

    fn __mul__(&self, k: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyMatrix(linalg::scale(&rational(k)?, &self.0)))
    }

    fn __rmul__(&self, k: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(k)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let rows: Vec<String> = (0..self.0.rows())
            .map(|i| self.0.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        format!("Matrix(\"{}\")", rows.join("; "))
    }
}

/// Complex number with rational parts.
#[pyclass(module = "exacta", name = "Complex", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyComplex(GaussianRational);

#[pymethods]
impl PyComplex {
    /// `Complex("3+4i")` or `Complex(3, 4)`.
    #[new]
    #[pyo3(signature = (re, im = None))]
    fn new(re: &Bound<'_, PyAny>, im: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        match im {
            None => {
                if let Ok(s) = re.cast::<PyString>() {
                    return Ok(PyComplex(s.to_str()?.parse().py_err()?));
                }
                Ok(PyComplex(GaussianRational::new(rational(re)?, Rational::zero())))
            }
            Some(im) => Ok(PyComplex(GaussianRational::new(rational(re)?, rational(im)?))),
        }
    }

    #[getter]
    fn re<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.re)
    }

    #[getter]
    fn im<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.im)
    }

    fn conj(&self) -> Self {
        PyComplex(self.0.conj())
    }

    fn modulus_sq<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.modulus_sq())
    }

    /// `(r, theta)` with `theta` in `[0, 2π)`.
    fn polar(&self) -> PyResult<(f64, f64)> {
        let p = complexn::to_polar(&self.0).py_err()?;
        Ok((p.r, p.theta))
    }

    /// The `n` roots as `(r, theta)` pairs.
    fn roots(&self, n: u32) -> PyResult<Vec<(f64, f64)>> {
        Ok(complexn::roots_n(&self.0, n).py_err()?.into_iter().map(|p| (p.r, p.theta)).collect())
    }

    fn __add__(&self, o: &PyComplex) -> Self {
        PyComplex(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &PyComplex) -> Self {
        PyComplex(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &PyComplex) -> Self {
        PyComplex(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &PyComplex) -> PyResult<Self> {
        Ok(PyComplex(self.0.checked_div(&o.0).py_err()?))
    }

    fn __pow__(&self, n: i64, _modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        Ok(PyComplex(self.0.pow(n).py_err()?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Complex(\"{}\")", self.0)
    }
}

/// Vector in space with rational components.
#[pyclass(module = "exacta", name = "Vec3", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyVec3(geom::Vec3);

#[pymethods]
impl PyVec3 {
    #[new]
    fn new(x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>, z: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyVec3(geom::Vec3::new(rational(x)?, rational(y)?, rational(z)?)))
    }

    fn components<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, &[self.0.x.clone(), self.0.y.clone(), self.0.z.clone()])
    }

    fn dot<'py>(&self, py: Python<'py>, o: &PyVec3) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.dot(&o.0))
    }

    fn cross(&self, o: &PyVec3) -> Self {
        PyVec3(self.0.cross(&o.0))
    }

    fn norm_sq<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.norm_sq())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// `(self × b) · c`.
    fn mixed<'py>(&self, py: Python<'py>, b: &PyVec3, c: &PyVec3) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &geom::mixed(&self.0, &b.0, &c.0))
    }

    fn __add__(&self, o: &PyVec3) -> Self {
        PyVec3(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &PyVec3) -> Self {
        PyVec3(&self.0 - &o.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Vec3{}", self.0)
    }
}

/// Plane `Ax + By + Cz + D = 0`.
#[pyclass(module = "exacta", name = "Plane", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPlane(geom::Plane);

#[pymethods]
impl PyPlane {
    /// `Plane("7 -1 5 -6")` or `Plane(7, -1, 5, -6)`.
    #[new]
    #[pyo3(signature = (*args))]
    fn new(args: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        match args.as_slice() {
            [s] => Ok(PyPlane(s.cast::<PyString>()?.to_str()?.parse().py_err()?)),
            [a, b, c, d] => {
                Ok(PyPlane(geom::Plane::new(rational(a)?, rational(b)?, rational(c)?, rational(d)?).py_err()?))
            }
            _ => Err(PyTypeError::new_err("Plane takes a literal or four coefficients")),
        }
    }

    #[staticmethod]
    fn through(p1: &PyVec3, p2: &PyVec3, p3: &PyVec3) -> PyResult<Self> {
        Ok(PyPlane(geom::Plane::three_points(&p1.0, &p2.0, &p3.0).py_err()?))
    }

    fn coefficients<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, &self.0.coefficients().map(Clone::clone))
    }

    fn contains(&self, p: &PyVec3) -> bool {
        self.0.contains(&p.0)
    }

    fn distance_sq<'py>(&self, py: Python<'py>, p: &PyVec3) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &geom::point_plane_distance(&p.0, &self.0).d_sq)
    }

    /// Intersection line of two non-parallel planes.
    fn intersect(&self, o: &PyPlane) -> PyResult<PyLine> {
        Ok(PyLine(geom::Line::from_planes(&self.0, &o.0).py_err()?))
    }

    fn __eq__(&self, o: &PyPlane) -> bool {
        self.0.normalized() == o.0.normalized()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Line through a point along a direction.
#[pyclass(module = "exacta", name = "Line", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLine(geom::Line);

#[pymethods]
impl PyLine {
    /// Canonical `(x-1)/2 = y/3 = (z+1)/-1`, parametric, or `point=(..) dir=(..)`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyLine(text.parse().py_err()?))
    }

    #[staticmethod]
    fn through(p1: &PyVec3, p2: &PyVec3) -> PyResult<Self> {
        Ok(PyLine(geom::Line::two_points(&p1.0, &p2.0).py_err()?))
    }

    #[getter]
    fn point(&self) -> PyVec3 {
        PyVec3(self.0.point.clone())
    }

    #[getter]
    fn direction(&self) -> PyVec3 {
        PyVec3(self.0.dir.clone())
    }

    fn canonical(&self) -> String {
        self.0.canonical()
    }

    fn distance_sq<'py>(&self, py: Python<'py>, p: &PyVec3) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &geom::point_line_distance(&p.0, &self.0).d_sq)
    }

    /// `"identical"`, `"parallel"`, `"intersecting"` or `"skew"`.
    fn relation(&self, o: &PyLine) -> &'static str {
        match geom::lines_relation(&self.0, &o.0).kind {
            LinesKind::Identical => "identical",
            LinesKind::Parallel(_) => "parallel",
            LinesKind::Intersecting(_) => "intersecting",
            LinesKind::Skew(_) => "skew",
        }
    }

    /// `"parallel"`, `"contained"` or the piercing point.
    fn meet(&self, py: Python<'_>, plane: &PyPlane) -> PyResult<Py<PyAny>> {
        match geom::line_plane_relation(&self.0, &plane.0) {
            LinePlaneKind::ParallelDisjoint => "parallel".into_py_any(py),
            LinePlaneKind::Contained => "contained".into_py_any(py),
            LinePlaneKind::Intersecting { point, .. } => PyVec3(point).into_py_any(py),
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn solution_dict<'py>(py: Python<'py>, s: &SolutionSet) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("verdict", s.verdict().to_string())?;
    match s {
        SolutionSet::Inconsistent => {}
        SolutionSet::Unique(x) => d.set_item("x", fractions(py, x)?)?,
        SolutionSet::Parametric { particular, directions, free_cols } => {
            d.set_item("particular", fractions(py, particular)?)?;
            let dirs = directions.iter().map(|v| fractions(py, v)).collect::<PyResult<Vec<_>>>()?;
            d.set_item("directions", dirs)?;
            d.set_item("free_cols", free_cols.iter().map(|c| c + 1).collect::<Vec<_>>())?;
        }
    }
    Ok(d)
}

/// Solves a linear system given as `"1 1 | 2; 1 -1 | 0"`. `method` is
/// `gauss`, `cramer` or `inverse`; the latter two use the reduced pivot
/// subsystem so they accept any consistent system.
#[pyfunction]
#[pyo3(signature = (system, method = "gauss"))]
fn solve<'py>(py: Python<'py>, system: &str, method: &str) -> PyResult<Bound<'py, PyDict>> {
    let s: linsys::LinearSystem = system.parse().py_err()?;
    let sol = match method {
        "gauss" => linsys::solve_gauss(&s),
        "cramer" => linsys::solve_cramer_reduced(&s).py_err()?,
        "inverse" => linsys::solve_inverse_reduced(&s).py_err()?,
        other => return Err(err(Error::UnknownKind(other.to_string()))),
    };
    solution_dict(py, &sol)
}

#[pyfunction]
fn gcd(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Int> {
    arith::gcd_value(&int(a)?, &int(b)?).py_err()
}

#[pyfunction]
fn lcm(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Int> {
    arith::lcm(&int(a)?, &int(b)?).py_err()
}

#[pyfunction]
fn factorize(n: &Bound<'_, PyAny>) -> PyResult<Vec<(Int, u32)>> {
    arith::factorize(&int(n)?).py_err()
}

#[pyfunction]
fn is_prime(n: &Bound<'_, PyAny>) -> PyResult<bool> {
    arith::is_prime(&int(n)?).py_err()
}

/// Digits, most significant first.
#[pyfunction]
fn to_base(n: &Bound<'_, PyAny>, base: u32) -> PyResult<Vec<u32>> {
    Ok(arith::to_base(&int(n)?, base).py_err()?.coeffs().to_vec())
}

#[pyfunction]
fn from_base(digits: Vec<u32>, base: u32) -> PyResult<Int> {
    Ok(arith::from_base(&arith::Digits::new(base, digits).py_err()?))
}

#[pyfunction]
fn factorial(n: &Bound<'_, PyAny>) -> PyResult<Int> {
    arith::factorial(&int(n)?).py_err()
}

#[pyfunction]
fn binom(n: &Bound<'_, PyAny>, k: &Bound<'_, PyAny>) -> PyResult<Int> {
    arith::binom(&int(n)?, &int(k)?).py_err()
}

/// `"tautology"`, `"contradiction"` or `"contingent"`.
#[pyfunction]
fn classify_formula(formula: &str) -> PyResult<String> {
    Ok(logic::classify(&formula.parse().py_err()?).py_err()?.to_string())
}

#[pyfunction]
fn equivalent(f: &str, g: &str) -> PyResult<bool> {
    logic::equivalent(&f.parse().py_err()?, &g.parse().py_err()?).py_err()
}

type TableRows = Vec<(Vec<bool>, bool)>;

/// `(atoms, [(values, result), ...])`.
#[pyfunction]
fn truth_table(formula: &str) -> PyResult<(Vec<String>, TableRows)> {
    let t = logic::truth_table(&formula.parse().py_err()?).py_err()?;
    Ok((t.atoms.clone(), t.rows.iter().map(|r| (r.values.clone(), r.result)).collect()))
}

fn rationals(v: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<Rational>> {
    v.iter().map(rational).collect()
}

#[pyfunction]
fn split<'py>(
    py: Python<'py>,
    total: &Bound<'py, PyAny>,
    weights: Vec<Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyList>> {
    fractions(py, &ratio::extended_split(&rational(total)?, &rationals(weights)?).py_err()?)
}

/// Amounts `(x1, x2)` of intensities `s1`, `s2` giving `total` at `target`.
#[pyfunction]
fn mixture<'py>(
    py: Python<'py>,
    s1: &Bound<'py, PyAny>,
    s2: &Bound<'py, PyAny>,
    target: &Bound<'py, PyAny>,
    total: &Bound<'py, PyAny>,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let m = ratio::simple_mixture(&rational(s1)?, &rational(s2)?, &rational(target)?, &rational(total)?).py_err()?;
    Ok((fraction(py, &m.x1)?, fraction(py, &m.x2)?))
}

#[pyfunction]
fn star_scheme<'py>(
    py: Python<'py>,
    values: Vec<Bound<'py, PyAny>>,
    target: &Bound<'py, PyAny>,
    total: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyList>> {
    fractions(py, &ratio::star_scheme(&rationals(values)?, &rational(target)?, &rational(total)?).py_err()?)
}

/// Runs the command-line front end; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
#[pyo3(signature = (args, stdin = None))]
fn run_cli(args: Vec<String>, stdin: Option<&str>) -> (i32, String, String) {
    let argv = std::iter::once("exacta".to_string()).chain(args);
    match stdin {
        Some(s) => exacta::cli::dispatch_with_stdin(argv, s),
        None => exacta::cli::dispatch(argv),
    }
}

#[pymodule(name = "exacta")]
fn exacta_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("ExactaError", py.get_type::<ExactaError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyVec3>()?;
    m.add_class::<PyPlane>()?;
    m.add_class::<PyLine>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(lcm, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(to_base, m)?)?;
    m.add_function(wrap_pyfunction!(from_base, m)?)?;
    m.add_function(wrap_pyfunction!(factorial, m)?)?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(classify_formula, m)?)?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(truth_table, m)?)?;
    m.add_function(wrap_pyfunction!(split, m)?)?;
    m.add_function(wrap_pyfunction!(mixture, m)?)?;
    m.add_function(wrap_pyfunction!(star_scheme, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::ffi::c_str;

    #[test]
    fn embedded_interpreter() {
        pyo3::append_to_inittab!(exacta_module);
        Python::initialize();
        Python::attach(|py| {
            let code = c_str!(
                r#"
import exacta
from fractions import Fraction
assert exacta.Matrix("2 -3; 0 1").inverse().tolist() == [[Fraction(1, 2), Fraction(3, 2)], [0, 1]]
assert exacta.Matrix([[Fraction(1, 2), "1/3"], [1, 4]]).det() == Fraction(5, 3)
assert exacta.solve("1 1 | 2; 1 -1 | 0")["x"] == [1, 1]
assert (exacta.Complex("3+4i") * exacta.Complex("2-5i")).re == 26
assert exacta.gcd(10**30, 10**20 * 6) == 2 * 10**20
try:
    exacta.Matrix([[1.5]])
    raise AssertionError("float accepted")
except TypeError:
    pass
"#
            );
            py.run(code, None, None).unwrap();
        });
    }
}
