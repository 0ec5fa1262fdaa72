//! Vector algebra in three dimensions and the analytic geometry of planes
//! and lines.
//!
//! Everything that stays rational (dot and cross products, mixed products,
//! volumes, squared distances) is exact. Quantities that need a square root
//! are `f64`, usually next to their exact square.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational_at, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Vec3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vec3 {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>, z: impl Into<Rational>) -> Self {
        Vec3 { x: x.into(), y: y.into(), z: z.into() }
    }

    pub fn zero() -> Self {
        Vec3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    fn from_array([x, y, z]: [Rational; 3]) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(&self, o: &Vec3) -> Rational {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.y * &o.z - &self.z * &o.y,
            y: &self.z * &o.x - &self.x * &o.z,
            z: &self.x * &o.y - &self.y * &o.x,
        }
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    pub fn scale(&self, k: &Rational) -> Vec3 {
        Vec3 { x: k * &self.x, y: k * &self.y, z: k * &self.z }
    }

    /// Largest `|component|`, ties broken x, y, z.
    fn dominant_axis(&self) -> usize {
        let c = self.components();
        let mut best = 0;
        for k in 1..3 {
            if c[k].abs() > c[best].abs() {
                best = k;
            }
        }
        best
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3 { x: &self.x + &o.x, y: &self.y + &o.y, z: &self.z + &o.z }
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3 { x: &self.x - &o.x, y: &self.y - &o.y, z: &self.z - &o.z }
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3 { x: -self.x.clone(), y: -self.y.clone(), z: -self.z.clone() }
    }
}

impl Mul<&Vec3> for &Rational {
    type Output = Vec3;
    fn mul(self, v: &Vec3) -> Vec3 {
        v.scale(self)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

fn parse_vec_at(s: &str, offset: usize) -> Result<Vec3> {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(offset + lead, "expected a point literal (x, y, z)"))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::parse(offset + lead, "a point has exactly three coordinates"));
    }
    let mut pos = offset + lead + 1;
    let mut out = Vec::with_capacity(3);
    for p in parts {
        out.push(parse_rational_at(&p.replace('\u{2212}', "-"), pos)?);
        pos += p.len() + 1;
    }
    Ok(Vec3::from_array([out[0].clone(), out[1].clone(), out[2].clone()]))
}

/// Point or vector literal `(x, y, z)`.
impl FromStr for Vec3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_vec_at(s, 0)
    }
}

/// Angle between two nonzero vectors, in `[0, π]`.
pub fn angle(a: &Vec3, b: &Vec3) -> Result<f64> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroVector);
    }
    let c = a.dot(b).to_f64() / (a.norm() * b.norm());
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// Scalar projection of `a` onto `b`: `a·b / |b|`.
pub fn proj_scalar(a: &Vec3, b: &Vec3) -> Result<f64> {
    if b.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(a.dot(b).to_f64() / b.norm())
}

#[derive(Debug, Clone, PartialEq)]
pub struct VecOps {
    pub dot: Rational,
    pub cross: Vec3,
    pub norm_sq_a: Rational,
    pub norm_a: f64,
    pub norm_sq_b: Rational,
    pub norm_b: f64,
    pub angle: f64,
    /// Projection of `a` onto `b`.
    pub proj_scalar: f64,
}

pub fn vec_ops(a: &Vec3, b: &Vec3) -> Result<VecOps> {
    Ok(VecOps {
        dot: a.dot(b),
        cross: a.cross(b),
        norm_sq_a: a.norm_sq(),
        norm_a: a.norm(),
        norm_sq_b: b.norm_sq(),
        norm_b: b.norm(),
        angle: angle(a, b)?,
        proj_scalar: proj_scalar(a, b)?,
    })
}

/// `(a × b) · c`, the determinant of the component rows.
pub fn mixed(a: &Vec3, b: &Vec3, c: &Vec3) -> Rational {
    a.cross(b).dot(c)
}

pub fn coplanar(a: &Vec3, b: &Vec3, c: &Vec3) -> bool {
    mixed(a, b, c).is_zero()
}

pub fn collinear(a: &Vec3, b: &Vec3) -> bool {
    a.cross(b).is_zero()
}

pub fn lin_indep(a: &Vec3, b: &Vec3, c: &Vec3) -> bool {
    !coplanar(a, b, c)
}

/// Coefficients of `target` in a basis of two or three vectors.
pub fn decompose(target: &Vec3, basis: &[Vec3]) -> Result<Vec<Rational>> {
    match basis {
        [b1, b2, b3] => {
            let d = mixed(b1, b2, b3);
            if d.is_zero() {
                return Err(Error::DependentBasis);
            }
            // Cramer on the columns b1, b2, b3
            Ok(vec![mixed(target, b2, b3) / &d, mixed(b1, target, b3) / &d, mixed(b1, b2, target) / &d])
        }
        [b1, b2] => {
            if collinear(b1, b2) {
                return Err(Error::DependentBasis);
            }
            if !coplanar(b1, b2, target) {
                return Err(Error::NotInSpan);
            }
            // Gram system, exact because target lies in the span
            let (g11, g12, g22) = (b1.norm_sq(), b1.dot(b2), b2.norm_sq());
            let (r1, r2) = (target.dot(b1), target.dot(b2));
            let det = &g11 * &g22 - &g12 * &g12;
            Ok(vec![(&r1 * &g22 - &g12 * &r2) / &det, (&g11 * &r2 - &g12 * &r1) / &det])
        }
        _ => Err(Error::WrongArity),
    }
}

/// `|a × b|²`.
pub fn parallelogram_area_sq(a: &Vec3, b: &Vec3) -> Rational {
    a.cross(b).norm_sq()
}

/// `|(a × b) · c|`.
pub fn parallelepiped_volume(a: &Vec3, b: &Vec3, c: &Vec3) -> Rational {
    mixed(a, b, c).abs()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleMeasures {
    /// `|AB × AC|²`, four times the squared area.
    pub parallelogram_area_sq: Rational,
    pub area: f64,
    /// Squared side lengths `|BC|², |CA|², |AB|²`.
    pub sides_sq: [Rational; 3],
    pub perimeter: f64,
    /// Interior angles at A, B, C.
    pub angles: [f64; 3],
    /// Squared heights from A, B, C onto the opposite sides.
    pub heights_sq: [Rational; 3],
    pub heights: [f64; 3],
}

pub fn triangle_measures(a: &Vec3, b: &Vec3, c: &Vec3) -> Result<TriangleMeasures> {
    let para_sq = parallelogram_area_sq(&(b - a), &(c - a));
    if para_sq.is_zero() {
        return Err(Error::Degenerate("the three points are collinear".into()));
    }
    let sides_sq = [(c - b).norm_sq(), (a - c).norm_sq(), (b - a).norm_sq()];
    let heights_sq = [&para_sq / &sides_sq[0], &para_sq / &sides_sq[1], &para_sq / &sides_sq[2]];
    Ok(TriangleMeasures {
        area: para_sq.to_f64().sqrt() / 2.0,
        perimeter: sides_sq.iter().map(|s| s.to_f64().sqrt()).sum(),
        angles: [angle(&(b - a), &(c - a))?, angle(&(a - b), &(c - b))?, angle(&(a - c), &(b - c))?],
        heights: [0, 1, 2].map(|k| heights_sq[k].to_f64().sqrt()),
        parallelogram_area_sq: para_sq,
        sides_sq,
        heights_sq,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TetraMeasures {
    pub parallelepiped_volume: Rational,
    pub tetra_volume: Rational,
    /// `|AB × AC|²`.
    pub base_parallelogram_sq: Rational,
    /// Height from D onto the plane ABC.
    pub height_sq: Rational,
    pub height: f64,
}

pub fn tetra_measures(a: &Vec3, b: &Vec3, c: &Vec3, d: &Vec3) -> Result<TetraMeasures> {
    let (ab, ac, ad) = (b - a, c - a, d - a);
    let vol = parallelepiped_volume(&ab, &ac, &ad);
    if vol.is_zero() {
        return Err(Error::Degenerate("the four points are coplanar".into()));
    }
    let base = parallelogram_area_sq(&ab, &ac);
    let height_sq = &vol * &vol / &base;
    Ok(TetraMeasures {
        tetra_volume: &vol / &Rational::from(6),
        height: height_sq.to_f64().sqrt(),
        parallelepiped_volume: vol,
        base_parallelogram_sq: base,
        height_sq,
    })
}

/// Exact distance together with its float root.
#[derive(Debug, Clone, PartialEq)]
pub struct Distance {
    pub d_sq: Rational,
    pub d: f64,
}

impl Distance {
    fn from_sq(d_sq: Rational) -> Self {
        Distance { d: d_sq.to_f64().sqrt(), d_sq }
    }
}

/// `Ax + By + Cz + D = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plane {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HesseForm {
    pub cos_a: f64,
    pub cos_b: f64,
    pub cos_g: f64,
    pub p: f64,
    pub p_sq: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneParametric {
    pub point: Vec3,
    pub u: Vec3,
    pub v: Vec3,
}

impl Plane {
    pub fn new(
        a: impl Into<Rational>,
        b: impl Into<Rational>,
        c: impl Into<Rational>,
        d: impl Into<Rational>,
    ) -> Result<Self> {
        let p = Plane { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        if p.normal().is_zero() {
            return Err(Error::Degenerate("a plane needs a nonzero normal".into()));
        }
        Ok(p)
    }

    /// `A(x-x0) + B(y-y0) + C(z-z0) = 0`.
    pub fn point_normal(point: &Vec3, normal: &Vec3) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Plane { a: normal.x.clone(), b: normal.y.clone(), c: normal.z.clone(), d: -normal.dot(point) })
    }

    /// Plane through three non-collinear points, with coprime integer
    /// coefficients and a positive leading normal component.
    pub fn three_points(p1: &Vec3, p2: &Vec3, p3: &Vec3) -> Result<Self> {
        let n = (p2 - p1).cross(&(p3 - p1));
        if n.is_zero() {
            return Err(Error::CollinearPoints);
        }
        Ok(Plane::point_normal(p1, &n)?.normalized())
    }

    pub fn normal(&self) -> Vec3 {
        Vec3 { x: self.a.clone(), y: self.b.clone(), z: self.c.clone() }
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `A x + B y + C z + D`.
    pub fn eval(&self, p: &Vec3) -> Rational {
        self.normal().dot(p) + &self.d
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        self.eval(p).is_zero()
    }

    /// Same plane with coprime integer coefficients, first nonzero of
    /// `(A, B, C)` positive.
    pub fn normalized(&self) -> Plane {
        let coeffs = self.coefficients();
        let lcm = coeffs.iter().fold(crate::rational::Int::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let ints: Vec<_> = coeffs.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let g = ints.iter().fold(crate::rational::Int::from(0), |acc, x| num_integer::gcd(acc, x.clone()));
        let lead_negative =
            [&self.a, &self.b, &self.c].into_iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let g = if lead_negative { -g } else { g };
        let s: Vec<Rational> = ints.into_iter().map(|x| Rational::from(x / &g)).collect();
        Plane { a: s[0].clone(), b: s[1].clone(), c: s[2].clone(), d: s[3].clone() }
    }

    /// Intercepts `(l, m, n)` of `x/l + y/m + z/n = 1`.
    pub fn segment_form(&self) -> Result<[Rational; 3]> {
        if self.coefficients().iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroCoefficient);
        }
        let md = -self.d.clone();
        Ok([&md / &self.a, &md / &self.b, &md / &self.c])
    }

    /// `x cos α + y cos β + z cos γ - p = 0` with `p ≥ 0`.
    pub fn hesse(&self) -> HesseForm {
        let n = self.normal();
        let len = n.norm();
        let positive = if self.d.is_zero() {
            [&self.a, &self.b, &self.c].into_iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
        } else {
            self.d.is_negative()
        };
        let s = if positive { 1.0 } else { -1.0 };
        let p_sq = &self.d * &self.d / &n.norm_sq();
        HesseForm {
            cos_a: s * self.a.to_f64() / len,
            cos_b: s * self.b.to_f64() / len,
            cos_g: s * self.c.to_f64() / len,
            p: p_sq.to_f64().sqrt(),
            p_sq,
        }
    }

    /// A point of the plane and two spanning directions.
    pub fn parametric(&self) -> PlaneParametric {
        let n = self.normal();
        let k = n.dominant_axis();
        let mut pt = [Rational::zero(), Rational::zero(), Rational::zero()];
        pt[k] = -self.d.clone() / n.components()[k].clone();
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let z = Rational::zero;
        let (u, v) = match k {
            0 => (Vec3::from_array([-b.clone(), a.clone(), z()]), Vec3::from_array([-c.clone(), z(), a.clone()])),
            1 => (Vec3::from_array([b.clone(), -a.clone(), z()]), Vec3::from_array([z(), -c.clone(), b.clone()])),
            _ => (Vec3::from_array([c.clone(), z(), -a.clone()]), Vec3::from_array([z(), c.clone(), -b.clone()])),
        };
        PlaneParametric { point: Vec3::from_array(pt), u, v }
    }
}

fn fmt_linear(f: &mut fmt::Formatter<'_>, terms: &[(&Rational, &str)], constant: &Rational) -> fmt::Result {
    let mut first = true;
    for (c, var) in terms {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        let mag = c.abs();
        if mag.is_one() {
            f.write_str(var)?;
        } else {
            write!(f, "{mag}{var}")?;
        }
        first = false;
    }
    if first {
        write!(f, "{constant}")
    } else if !constant.is_zero() {
        write!(f, "{}{}", if constant.is_negative() { " - " } else { " + " }, constant.abs())
    } else {
        Ok(())
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_linear(f, &[(&self.a, "x"), (&self.b, "y"), (&self.c, "z")], &self.d)?;
        f.write_str(" = 0")
    }
}

/// Plane literal `A B C D`.
impl FromStr for Plane {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.contains(['=', 'x', 'y', 'z']) {
            return parse_plane_equation(s);
        }
        let mut vals = Vec::new();
        let mut pos = 0;
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if !tok.is_empty() {
                vals.push(parse_rational_at(tok, pos)?);
            }
            pos += tok.len() + 1;
        }
        if vals.len() != 4 {
            return Err(Error::parse(0, "a plane literal has four coefficients A B C D"));
        }
        let [a, b, c, d]: [Rational; 4] = vals.try_into().expect("length checked");
        Plane::new(a, b, c, d)
    }
}

pub fn point_plane_distance(p: &Vec3, plane: &Plane) -> Distance {
    let e = plane.eval(p);
    Distance::from_sq(&e * &e / &plane.normal().norm_sq())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanesRelation {
    /// Angle between the planes in `[0, π/2]`.
    pub angle: f64,
    pub cos_sq: Rational,
    pub parallel: bool,
    pub perpendicular: bool,
    pub identical: bool,
    pub intersection: Option<Line>,
}

pub fn planes_relation(p1: &Plane, p2: &Plane) -> PlanesRelation {
    let (n1, n2) = (p1.normal(), p2.normal());
    let dot = n1.dot(&n2);
    let cos_sq = &dot * &dot / (n1.norm_sq() * n2.norm_sq());
    let parallel = collinear(&n1, &n2);
    let identical = parallel
        && (&p1.d * &n2.x == &p2.d * &n1.x && &p1.d * &n2.y == &p2.d * &n1.y && &p1.d * &n2.z == &p2.d * &n1.z);
    let cos = (dot.to_f64() / (n1.norm() * n2.norm())).abs().min(1.0);
    PlanesRelation {
        angle: cos.acos(),
        cos_sq,
        parallel,
        perpendicular: dot.is_zero(),
        identical,
        intersection: Line::from_planes(p1, p2).ok(),
    }
}

/// `point + t·dir`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub point: Vec3,
    pub dir: Vec3,
}

impl Line {
    pub fn new(point: Vec3, dir: Vec3) -> Result<Self> {
        if dir.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Line { point, dir })
    }

    pub fn two_points(p1: &Vec3, p2: &Vec3) -> Result<Self> {
        if p1 == p2 {
            return Err(Error::CoincidentPoints);
        }
        Ok(Line { point: p1.clone(), dir: p2 - p1 })
    }

    /// Intersection of two planes; direction `n1 × n2`, anchor found by
    /// zeroing the coordinate where the direction is largest.
    pub fn from_planes(p1: &Plane, p2: &Plane) -> Result<Self> {
        let dir = p1.normal().cross(&p2.normal());
        if dir.is_zero() {
            return Err(Error::ParallelPlanes);
        }
        let k = dir.dominant_axis();
        let (i, j) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (n1, n2) = (p1.normal(), p2.normal());
        let (c1, c2) = (n1.components(), n2.components());
        // c1[i] u + c1[j] v = -d1, c2[i] u + c2[j] v = -d2; determinant is ±dir[k]
        let det = c1[i] * c2[j] - c1[j] * c2[i];
        let (r1, r2) = (-p1.d.clone(), -p2.d.clone());
        let mut pt = [Rational::zero(), Rational::zero(), Rational::zero()];
        pt[i] = (&r1 * c2[j] - c1[j] * &r2) / &det;
        pt[j] = (c1[i] * &r2 - &r1 * c2[i]) / &det;
        Ok(Line { point: Vec3::from_array(pt), dir })
    }

    pub fn at(&self, t: &Rational) -> Vec3 {
        &self.point + &self.dir.scale(t)
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        collinear(&(p - &self.point), &self.dir)
    }

    /// `x = x0 + l t` and so on.
    pub fn parametric(&self) -> [String; 3] {
        let mut out = [String::new(), String::new(), String::new()];
        for (k, var) in ["x", "y", "z"].iter().enumerate() {
            out[k] = format!("{var} = {}", Affine(self.point.components()[k], self.dir.components()[k]));
        }
        out
    }

    /// `(x - x0)/l = (y - y0)/m = (z - z0)/n`; zero denominators are printed
    /// as `/0` in the notational sense.
    pub fn canonical(&self) -> String {
        let part = |var: &str, p: &Rational, d: &Rational| {
            let num = if p.is_zero() {
                var.to_string()
            } else if p.is_negative() {
                format!("({var} + {})", p.abs())
            } else {
                format!("({var} - {p})")
            };
            format!("{num}/{d}")
        };
        format!(
            "{} = {} = {}",
            part("x", &self.point.x, &self.dir.x),
            part("y", &self.point.y, &self.dir.y),
            part("z", &self.point.z, &self.dir.z)
        )
    }
}

struct Affine<'a>(&'a Rational, &'a Rational);

impl fmt::Display for Affine<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, d) = (self.0, self.1);
        if d.is_zero() {
            return write!(f, "{p}");
        }
        let term = if d.is_one() {
            "t".to_string()
        } else if *d == -Rational::one() {
            "-t".to_string()
        } else {
            format!("{d}t")
        };
        if p.is_zero() {
            f.write_str(&term)
        } else if d.is_negative() {
            write!(f, "{p} - {}", &term[1..])
        } else {
            write!(f, "{p} + {term}")
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "point={} dir={}", self.point, self.dir)
    }
}

fn parse_canonical_part(part: &str, var: char, offset: usize) -> Result<(Rational, Rational)> {
    let compact: String =
        part.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
    let bad = || Error::parse(offset, format!("expected ({var} - a)/l"));
    let (num, den) = compact.rsplit_once('/').ok_or_else(bad)?;
    let den = parse_rational_at(den, offset)?;
    if den.is_zero() {
        return Err(Error::parse(offset, "zero denominator in canonical form; use point=(..) dir=(..)"));
    }
    let num = num.strip_prefix('(').and_then(|n| n.strip_suffix(')')).unwrap_or(num);
    let rest = num.strip_prefix(var).ok_or_else(bad)?;
    let point = if rest.is_empty() {
        Rational::zero()
    } else if let Some(r) = rest.strip_prefix('-') {
        parse_rational_at(r, offset)?
    } else if let Some(r) = rest.strip_prefix('+') {
        -parse_rational_at(r, offset)?
    } else {
        return Err(bad());
    };
    Ok((point, den))
}

/// Line literal: `point=(x0, y0, z0) dir=(l, m, n)` or the canonical form
/// `(x-x0)/l=(y-y0)/m=(z-z0)/n`.
impl FromStr for Line {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("point") {
            let dpos = t.find("dir").ok_or_else(|| Error::parse(0, "missing dir=(..)"))?;
            let ppart = t[..dpos].trim().strip_prefix("point").unwrap().trim_start();
            let ppart = ppart.strip_prefix('=').ok_or_else(|| Error::parse(5, "expected '=' after point"))?;
            let dpart = t[dpos + 3..].trim_start();
            let dpart = dpart.strip_prefix('=').ok_or_else(|| Error::parse(dpos + 3, "expected '=' after dir"))?;
            let point = parse_vec_at(ppart, 6)?;
            let dir = parse_vec_at(dpart, dpos + 4)?;
            return Line::new(point, dir);
        }
        if t.contains(',') {
            return parse_parametric_line(t);
        }
        let parts: Vec<&str> = t.split('=').collect();
        if parts.len() != 3 {
            return Err(Error::parse(0, "expected point=(..) dir=(..) or a canonical form with three parts"));
        }
        let mut point = [Rational::zero(), Rational::zero(), Rational::zero()];
        let mut dir = point.clone();
        let mut offset = 0;
        for (k, (part, var)) in parts.iter().zip(['x', 'y', 'z']).enumerate() {
            let (p, d) = parse_canonical_part(part, var, offset)?;
            point[k] = p;
            dir[k] = d;
            offset += part.len() + 1;
        }
        Line::new(Vec3::from_array(point), Vec3::from_array(dir))
    }
}

/// `x = 1 + 2t, y = 3t, z = -1 - t`
/// `2x - y + 3/2 z = 4`: linear terms on either side of an optional `=`.
fn parse_plane_equation(s: &str) -> Result<Plane> {
    let (lhs, rhs) = s.split_once('=').unwrap_or((s, "0"));
    let mut coef = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    for (side, base, sign) in [(lhs, 0, 1), (rhs, lhs.len() + 1, -1)] {
        let side_terms = linear_terms(side, base)?;
        if side_terms.is_empty() {
            return Err(Error::parse(base, "empty side of a plane equation"));
        }
        for (slot, v) in side_terms {
            coef[slot] = &coef[slot] + &(v * Rational::from(sign));
        }
    }
    let [a, b, c, d] = coef;
    Plane::new(a, b, c, d)
}

/// Splits `3x - y/2 + 7` style text into (slot, coefficient), slot 3 being the constant.
fn linear_terms(s: &str, base: usize) -> Result<Vec<(usize, Rational)>> {
    let mut out = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut bounds = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        let after_op = s[..i].trim_end().ends_with(['*', '/']) || s[..i].trim().is_empty();
        if (b == b'+' || b == b'-') && !after_op {
            bounds.push((start, i));
            start = i;
        }
    }
    bounds.push((start, s.len()));
    for (from, to) in bounds {
        let raw = &s[from..to];
        let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if term.is_empty() {
            continue;
        }
        let pos = base + from;
        let (slot, body) = match term.find(['x', 'y', 'z']) {
            Some(i) => {
                let slot = "xyz".find(&term[i..i + 1]).expect("matched variable");
                let (pre, post) = (&term[..i], &term[i + 1..]);
                let pre = pre.strip_suffix('*').unwrap_or(pre);
                let mut body = match pre {
                    "" | "+" => "1".to_string(),
                    "-" => "-1".to_string(),
                    p => p.to_string(),
                };
                if let Some(den) = post.strip_prefix('/') {
                    body = format!("({body})/{den}");
                } else if !post.is_empty() {
                    return Err(Error::parse(pos, format!("unexpected '{post}' after variable")));
                }
                (slot, body)
            }
            None => (3, term.clone()),
        };
        out.push((slot, parse_term_value(&body, pos)?));
    }
    Ok(out)
}

fn parse_term_value(body: &str, pos: usize) -> Result<Rational> {
    if let Some(rest) = body.strip_prefix('(') {
        let (num, den) = rest.split_once(")/").ok_or_else(|| Error::parse(pos, "malformed coefficient"))?;
        let num = parse_term_value(num, pos)?;
        let den = parse_rational_at(den, pos)?;
        if den.is_zero() {
            return Err(Error::parse(pos, "zero denominator"));
        }
        return Ok(num / den);
    }
    let body = body.strip_prefix('+').unwrap_or(body);
    parse_rational_at(body, pos)
}

fn parse_parametric_line(t: &str) -> Result<Line> {
    let parts: Vec<&str> = t.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::parse(0, "parametric form needs three equations"));
    }
    let mut point = [Rational::zero(), Rational::zero(), Rational::zero()];
    let mut dir = point.clone();
    let mut offset = 0;
    for (k, (part, var)) in parts.iter().zip(['x', 'y', 'z']).enumerate() {
        let (lhs, rhs) = part.split_once('=').ok_or_else(|| Error::parse(offset, "expected '='"))?;
        if lhs.trim() != var.to_string() {
            return Err(Error::parse(offset, format!("expected '{var} = ...'")));
        }
        if rhs.contains('x') {
            return Err(Error::parse(offset + lhs.len() + 1, "unexpected 'x'"));
        }
        let a: crate::ratio::Affine = rhs
            .replace('t', "x")
            .parse()
            .map_err(|_| Error::parse(offset + lhs.len() + 1, "expected an expression in t"))?;
        point[k] = a.constant;
        dir[k] = a.coef;
        offset += part.len() + 1;
    }
    Line::new(Vec3::from_array(point), Vec3::from_array(dir))
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinesKind {
    Identical,
    Parallel(Distance),
    Intersecting(Vec3),
    Skew(Distance),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinesRelation {
    pub kind: LinesKind,
    /// Angle between the directions in `[0, π/2]`.
    pub angle: f64,
    pub perpendicular: bool,
}

pub fn lines_relation(l1: &Line, l2: &Line) -> LinesRelation {
    let (a1, a2) = (&l1.dir, &l2.dir);
    let m = &l2.point - &l1.point;
    let c = a1.cross(a2);
    let kind = if c.is_zero() {
        if l1.contains(&l2.point) {
            LinesKind::Identical
        } else {
            LinesKind::Parallel(point_line_distance(&l2.point, l1))
        }
    } else {
        let det = mixed(a1, a2, &m);
        if det.is_zero() {
            let s = m.cross(a2).dot(&c) / c.norm_sq();
            LinesKind::Intersecting(l1.at(&s))
        } else {
            LinesKind::Skew(Distance::from_sq(&det * &det / &c.norm_sq()))
        }
    };
    let dot = a1.dot(a2);
    let cos = (dot.to_f64() / (a1.norm() * a2.norm())).abs().min(1.0);
    LinesRelation { kind, angle: cos.acos(), perpendicular: dot.is_zero() }
}

/// `|a × M1M2| / |a|`.
pub fn point_line_distance(p: &Vec3, l: &Line) -> Distance {
    let c = l.dir.cross(&(p - &l.point));
    Distance::from_sq(c.norm_sq() / l.dir.norm_sq())
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinePlaneKind {
    ParallelDisjoint,
    Contained,
    /// Piercing point and `sin φ` of the angle between line and plane.
    Intersecting {
        point: Vec3,
        sin_angle: f64,
    },
}

pub fn line_plane_relation(l: &Line, p: &Plane) -> LinePlaneKind {
    let n = p.normal();
    let nd = n.dot(&l.dir);
    let e = p.eval(&l.point);
    if nd.is_zero() {
        return if e.is_zero() { LinePlaneKind::Contained } else { LinePlaneKind::ParallelDisjoint };
    }
    let t = -e / &nd;
    LinePlaneKind::Intersecting { point: l.at(&t), sin_angle: (nd.to_f64().abs() / (n.norm() * l.dir.norm())).min(1.0) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, Matrix};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn v(x: i64, y: i64, z: i64) -> Vec3 {
        Vec3::new(x, y, z)
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn products() {
        let (a, b) = (v(-1, 2, 1), v(1, -3, 2));
        let ops = vec_ops(&a, &b).unwrap();
        assert_eq!(ops.dot, Rational::from(-5));
        assert!(close(ops.norm_a, 6f64.sqrt()));
        assert_eq!(v(1, 0, 0).cross(&v(0, 1, 0)), v(0, 0, 1));
        assert!(close(proj_scalar(&v(0, 5, -4), &v(-3, -6, 6)).unwrap(), -6.0));
        assert_eq!(vec_ops(&a, &Vec3::zero()).unwrap_err(), Error::ZeroVector);
        assert!(collinear(&v(4, -6, 10), &v(-6, 9, -15)));
        assert!(lin_indep(&v(1, 2, 0), &v(2, -4, 1), &v(1, -1, -1)));
        assert_eq!(mixed(&v(1, 2, 0), &v(2, -4, 1), &v(1, -1, -1)), Rational::from(11));
        assert!(mixed(&a, &a, &b).is_zero());
        assert_eq!("(1, -2, 1/2)".parse::<Vec3>().unwrap(), Vec3::new(1, -2, Rational::frac(1, 2)));
        assert!("(1, 2)".parse::<Vec3>().is_err());
    }

    #[test]
    fn plane_equation_literals() {
        let pl = |s: &str| s.parse::<Plane>().unwrap();
        assert_eq!(pl("2x - y - z - 4 = 0"), pl("2 -1 -1 -4"));
        assert_eq!(pl("2x - 3y - 2z + 7 = 0"), pl("2 -3 -2 7"));
        assert_eq!(pl("x + y = z + 1"), pl("1 1 -1 -1"));
        assert_eq!(pl("3/2 x - z/2 = 0"), pl("3/2 0 -1/2 0"));
        assert_eq!(pl("7x - y + 5z - 6 = 0").to_string().parse::<Plane>().unwrap(), pl("7 -1 5 -6"));
        assert_eq!(pl("-x + 2*y - 4"), pl("-1 2 0 -4"));
        assert!("2x + 3 = ".parse::<Plane>().is_err());
        assert!("2xy = 0".parse::<Plane>().is_err());
        assert!("4 = 4".parse::<Plane>().is_err());
    }

    #[test]
    fn decomposition() {
        let (p, q) = (v(1, 0, 2), v(0, 1, -1));
        let comb = |s: i64, t: i64| &p.scale(&s.into()) + &q.scale(&t.into());
        let (a, b, c) = (comb(3, -2), comb(-2, 1), comb(7, -4));
        assert_eq!(decompose(&a, &[b.clone(), c.clone()]).unwrap(), vec![Rational::from(2), Rational::one()]);
        let basis = [v(1, 2, 0), v(2, -4, 1), v(1, -1, -1)];
        assert_eq!(decompose(&basis[0], &basis).unwrap(), vec![Rational::one(), Rational::zero(), Rational::zero()]);
        assert_eq!(decompose(&a, &[b.clone(), b.scale(&2.into())]), Err(Error::DependentBasis));
        assert_eq!(decompose(&v(0, 0, 1), &[v(1, 0, 0), v(0, 1, 0)]), Err(Error::NotInSpan));
        assert_eq!(decompose(&a, &[v(1, 0, 0), v(0, 1, 0), v(1, 1, 0)]), Err(Error::DependentBasis));
        assert_eq!(decompose(&a, &[b]), Err(Error::WrongArity));
    }

    #[test]
    fn measures() {
        let t = triangle_measures(&v(1, 2, 3), &v(-2, 5, 4), &v(2, 5, 8)).unwrap();
        assert!(close(t.area, 2.0 * 34f64.sqrt()));
        assert_eq!(t.heights_sq[2], Rational::frac(544, 19));
        assert!(close(t.heights[2], 4.0 * 646f64.sqrt() / 19.0));

        let t = triangle_measures(&v(2, -1, 3), &v(1, 1, 1), &v(0, 0, 5)).unwrap();
        assert!(close(t.perimeter, 6.0 + 3.0 * 2f64.sqrt()));
        let mut angles = t.angles;
        angles.sort_by(f64::total_cmp);
        assert!(close(angles[0], FRAC_PI_4) && close(angles[1], FRAC_PI_4) && close(angles[2], FRAC_PI_2));

        let tet = tetra_measures(&v(3, 1, -2), &v(-4, 2, 3), &v(1, 5, -1), &v(-5, -1, 2)).unwrap();
        assert_eq!(tet.parallelepiped_volume, Rational::from(54));
        assert_eq!(tet.tetra_volume, Rational::from(9));
        assert_eq!(tet.base_parallelogram_sq, Rational::from(1046));
        assert!(close(tet.height, 54.0 / 1046f64.sqrt()));

        assert_eq!(parallelepiped_volume(&v(1, 0, 0), &v(0, 1, 0), &v(0, 0, 1)), Rational::one());
        assert!(matches!(triangle_measures(&v(0, 0, 0), &v(1, 1, 1), &v(2, 2, 2)), Err(Error::Degenerate(_))));
        assert!(tetra_measures(&v(0, 0, 0), &v(1, 0, 0), &v(0, 1, 0), &v(1, 1, 0)).is_err());
    }

    #[test]
    fn planes() {
        let (p1, p2, p3) = (v(1, 1, 0), v(-2, 0, 4), v(2, 3, -1));
        let p = Plane::three_points(&p1, &p2, &p3).unwrap();
        assert_eq!(p, Plane::new(7, -1, 5, -6).unwrap());
        assert_eq!(p.to_string(), "7x - y + 5z - 6 = 0");
        assert!(p.contains(&p1) && p.contains(&p2) && p.contains(&p3));
        assert_eq!(p.segment_form().unwrap(), [Rational::frac(6, 7), Rational::from(-6), Rational::frac(6, 5)]);
        let h = p.hesse();
        assert!(close(h.p, 6.0 / 75f64.sqrt()));
        assert!(close(h.cos_a.powi(2) + h.cos_b.powi(2) + h.cos_g.powi(2), 1.0));
        assert!(h.cos_a > 0.0);
        let par = p.parametric();
        assert!(p.contains(&par.point) && p.contains(&(&par.point + &par.u)) && p.contains(&(&par.point + &par.v)));
        assert!(!collinear(&par.u, &par.v));

        assert_eq!(Plane::three_points(&p1, &p1, &p2), Err(Error::CollinearPoints));
        assert_eq!(Plane::new(1, 0, 1, 1).unwrap().segment_form(), Err(Error::ZeroCoefficient));
        assert!(Plane::new(0, 0, 0, 1).is_err());
        assert_eq!("2 -1 -2 5".parse::<Plane>().unwrap(), Plane::new(2, -1, -2, 5).unwrap());

        let hz = Plane::new(0, -2, 1, 0).unwrap().hesse();
        assert!(hz.cos_b > 0.0 && hz.p == 0.0);
        let hneg = Plane::new(1, 1, 1, 3).unwrap().hesse();
        assert!(hneg.cos_a < 0.0);
    }

    #[test]
    fn distances_to_planes() {
        let d = point_plane_distance(&v(0, 6, 4), &Plane::new(2, -1, -2, 5).unwrap());
        assert_eq!(d.d_sq, Rational::from(9));
        assert!(close(d.d, 3.0));
        assert_eq!(point_plane_distance(&v(1, 1, 1), &Plane::new(1, 1, 1, -3).unwrap()).d_sq, Rational::zero());
        assert_eq!(point_plane_distance(&Vec3::zero(), &Plane::new(1, 1, 1, -3).unwrap()).d_sq, Rational::from(3));
    }

    #[test]
    fn plane_pairs() {
        let r = planes_relation(&Plane::new(1, 3, -4, 5).unwrap(), &Plane::new(2, 2, 2, -7).unwrap());
        assert!(r.perpendicular && close(r.angle, FRAC_PI_2));
        let p = Plane::new(1, 2, 3, 4).unwrap();
        let r = planes_relation(&p, &Plane::new(2, 4, 6, 8).unwrap());
        assert!(r.identical && r.parallel && r.intersection.is_none());
        let r = planes_relation(&p, &Plane::new(2, 4, 6, 9).unwrap());
        assert!(!r.identical && r.parallel);

        let (q1, q2) = (Plane::new(2, -1, -1, -4).unwrap(), Plane::new(2, -3, -2, 7).unwrap());
        let l = Line::from_planes(&q1, &q2).unwrap();
        assert_eq!(l.dir, v(-1, 2, -4));
        assert!(q1.contains(&l.point) && q2.contains(&l.point));
        assert!(l.contains(&v(0, 15, -19)));
        let textbook: Line = "x/-1 = (y-15)/2 = (z+19)/-4".parse().unwrap();
        assert!(matches!(lines_relation(&l, &textbook).kind, LinesKind::Identical));
        assert_eq!(Line::from_planes(&p, &p), Err(Error::ParallelPlanes));
    }

    #[test]
    fn lines() {
        let l = Line::two_points(&Vec3::zero(), &v(1, 1, 1)).unwrap();
        assert_eq!(l.dir, v(1, 1, 1));
        assert_eq!(l.at(&Rational::zero()), Vec3::zero());
        assert_eq!(Line::two_points(&v(1, 1, 1), &v(1, 1, 1)), Err(Error::CoincidentPoints));

        let parsed: Line = "(x-1)/2 = y/3 = (z+1)/-1".parse().unwrap();
        assert_eq!(parsed, Line::new(v(1, 0, -1), v(2, 3, -1)).unwrap());
        assert_eq!(parsed.canonical(), "(x - 1)/2 = y/3 = (z + 1)/-1");
        assert_eq!(parsed.parametric(), ["x = 1 + 2t".to_string(), "y = 3t".into(), "z = -1 - t".into()]);
        let literal: Line = "point=(1, 0, -1) dir=(2, 3, -1)".parse().unwrap();
        assert_eq!(literal, parsed);
        assert_eq!(literal.to_string(), "point=(1, 0, -1) dir=(2, 3, -1)");
        assert!("(x-1)/0 = y/3 = z/1".parse::<Line>().unwrap_err().is_parse());
        assert!("point=(0,0,0) dir=(0,0,0)".parse::<Line>().is_err());

        let s1 = Line::new(v(1, -2, 5), v(2, 1, -1)).unwrap();
        let s2 = Line::new(v(-3, 3, 0), v(1, 2, -3)).unwrap();
        let r = lines_relation(&s1, &s2);
        let LinesKind::Skew(d) = r.kind else { panic!("expected skew, got {:?}", r.kind) };
        assert_eq!(d.d_sq, Rational::frac(28, 5));
        assert!(!mixed(&s1.dir, &s2.dir, &(&s2.point - &s1.point)).is_zero());

        assert_eq!(lines_relation(&s1, &s1).kind, LinesKind::Identical);
        let a = Line::new(v(1, 2, 3), v(1, 0, 2)).unwrap();
        let b = Line::new(&v(1, 2, 3) + &v(3, -1, 1), v(3, -1, 1)).unwrap();
        assert_eq!(lines_relation(&a, &b).kind, LinesKind::Intersecting(v(1, 2, 3)));
        let shifted = Line::new(v(0, 0, 1), v(1, 1, 1)).unwrap();
        assert!(matches!(lines_relation(&l, &shifted).kind, LinesKind::Parallel(_)));
    }

    #[test]
    fn point_to_line() {
        let l = Line::new(Vec3::zero(), v(1, 0, 0)).unwrap();
        assert_eq!(point_line_distance(&v(0, 0, 1), &l).d_sq, Rational::one());
        assert!(point_line_distance(&v(5, 0, 0), &l).d_sq.is_zero());

        // brute force over sampled t
        let l = Line::from_planes(&Plane::new(2, -1, -1, -4).unwrap(), &Plane::new(2, -3, -2, 7).unwrap()).unwrap();
        let a = v(2, 1, 0);
        let exact = point_line_distance(&a, &l).d;
        let best = (-20000..=20000)
            .map(|k| {
                let t = k as f64 / 1000.0;
                let p = [0, 1, 2].map(|i| l.point.components()[i].to_f64() + t * l.dir.components()[i].to_f64());
                ((p[0] - 2.0).powi(2) + (p[1] - 1.0).powi(2) + p[2].powi(2)).sqrt()
            })
            .fold(f64::INFINITY, f64::min);
        assert!((best - exact).abs() < 1e-4);
    }

    #[test]
    fn line_and_plane() {
        let l: Line = "(x-1)/2 = y/3 = (z+1)/-1".parse().unwrap();
        assert_eq!(line_plane_relation(&l, &Plane::new(1, 1, 5, -7).unwrap()), LinePlaneKind::ParallelDisjoint);
        let l: Line = "(x-2)/3 = (y-1)/-2 = (z-3)/2".parse().unwrap();
        assert_eq!(line_plane_relation(&l, &Plane::new(2, 2, -1, -3).unwrap()), LinePlaneKind::Contained);
        let l: Line = "(x-1)/3 = (y-2)/-2 = (z-3)/1".parse().unwrap();
        match line_plane_relation(&l, &Plane::new(6, -4, 2, 7).unwrap()) {
            LinePlaneKind::Intersecting { point, sin_angle } => {
                assert_eq!(point, Vec3::new(Rational::frac(-5, 28), Rational::frac(78, 28), Rational::frac(73, 28)));
                assert!(close(sin_angle.asin(), FRAC_PI_2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    fn arb_vec() -> impl Strategy<Value = Vec3> {
        ((-20i64..=20, 1i64..=4), (-20i64..=20, 1i64..=4), (-20i64..=20, 1i64..=4)).prop_map(
            |((a, b), (c, d), (e, f))| Vec3::new(Rational::frac(a, b), Rational::frac(c, d), Rational::frac(e, f)),
        )
    }

    proptest! {
        #[test]
        fn cross_product_laws(a in arb_vec(), b in arb_vec(), c in arb_vec()) {
            let x = a.cross(&b);
            prop_assert!(x.dot(&a).is_zero() && x.dot(&b).is_zero());
            prop_assert_eq!(x.clone(), -&b.cross(&a));
            prop_assert!(a.cross(&a).is_zero());
            let m = Matrix::from_rows(vec![
                a.components().map(Clone::clone).to_vec(),
                b.components().map(Clone::clone).to_vec(),
                c.components().map(Clone::clone).to_vec(),
            ]).unwrap();
            prop_assert_eq!(mixed(&a, &b, &c), determinant(&m).unwrap());
            let d = a.dot(&b);
            prop_assert!(&d * &d <= a.norm_sq() * b.norm_sq());
        }

        #[test]
        fn three_point_planes(p1 in arb_vec(), p2 in arb_vec(), p3 in arb_vec()) {
            if let Ok(p) = Plane::three_points(&p1, &p2, &p3) {
                prop_assert!(p.contains(&p1) && p.contains(&p2) && p.contains(&p3));
                let h = p.hesse();
                prop_assert!((h.cos_a.powi(2) + h.cos_b.powi(2) + h.cos_g.powi(2) - 1.0).abs() < 1e-12);
                prop_assert!(h.p >= 0.0);
            } else {
                prop_assert!(collinear(&(&p2 - &p1), &(&p3 - &p1)));
            }
        }

        #[test]
        fn decomposition_recombines(t in arb_vec(), b1 in arb_vec(), b2 in arb_vec(), b3 in arb_vec()) {
            let basis = [b1, b2, b3];
            match decompose(&t, &basis) {
                Ok(k) => {
                    let back = &(&basis[0].scale(&k[0]) + &basis[1].scale(&k[1])) + &basis[2].scale(&k[2]);
                    prop_assert_eq!(back, t);
                }
                Err(e) => prop_assert_eq!(e, Error::DependentBasis),
            }
        }

        #[test]
        fn constructed_intersections(p in arb_vec(), a1 in arb_vec(), a2 in arb_vec(), s in -5i64..5, t in -5i64..5) {
            prop_assume!(!collinear(&a1, &a2) && !a1.is_zero() && !a2.is_zero());
            let l1 = Line::new(&p - &a1.scale(&s.into()), a1.clone()).unwrap();
            let l2 = Line::new(&p - &a2.scale(&t.into()), a2.clone()).unwrap();
            prop_assert_eq!(lines_relation(&l1, &l2).kind, LinesKind::Intersecting(p.clone()));
            let plane = Plane::point_normal(&p, &a1.cross(&a2)).unwrap();
            prop_assert_eq!(line_plane_relation(&l1, &plane), LinePlaneKind::Contained);
        }

        #[test]
        fn skew_lines_have_nonzero_determinant(l1p in arb_vec(), l1d in arb_vec(), l2p in arb_vec(), l2d in arb_vec()) {
            prop_assume!(!l1d.is_zero() && !l2d.is_zero());
            let (l1, l2) = (Line::new(l1p, l1d).unwrap(), Line::new(l2p, l2d).unwrap());
            let det = mixed(&l1.dir, &l2.dir, &(&l2.point - &l1.point));
            match lines_relation(&l1, &l2).kind {
                LinesKind::Skew(d) => prop_assert!(!det.is_zero() && d.d_sq.is_positive()),
                LinesKind::Intersecting(x) => prop_assert!(l1.contains(&x) && l2.contains(&x)),
                _ => prop_assert!(collinear(&l1.dir, &l2.dir)),
            }
        }
    }
}
