//! JSON encodings of kernel values. Rationals become `{"num", "den"}` with
//! arbitrary-precision integers; floats stay floats.

use serde_json::{json, Map, Number, Value};

use crate::complexn::{GaussianRational, Polar};
use crate::geom::{Distance, Line, Plane, Vec3};
use crate::linalg::Matrix;
use crate::linsys::SolutionSet;
use crate::rational::{Int, Rational};
use crate::setrel::{Atom, FinSet, Relation};

pub fn int(n: &Int) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

pub fn rational(r: &Rational) -> Value {
    json!({ "num": int(r.numer()), "den": int(r.denom()) })
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

/// Non-finite values become `null`.
pub fn float(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

/// Reads back a `{"num", "den"}` object.
pub fn parse_rational(v: &Value) -> Option<Rational> {
    let num: Int = v.get("num")?.as_number()?.to_string().parse().ok()?;
    let den: Int = v.get("den")?.as_number()?.to_string().parse().ok()?;
    Rational::new(num, den).ok()
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| rationals(m.row(i))).collect())
}

pub fn complex(z: &GaussianRational) -> Value {
    json!({ "re": rational(&z.re), "im": rational(&z.im) })
}

pub fn polar(p: &Polar) -> Value {
    json!({ "r": float(p.r), "theta": float(p.theta), "degrees": float(p.degrees()) })
}

pub fn atom(a: &Atom) -> Value {
    match a {
        Atom::Int(n) => int(n),
        Atom::Sym(s) => Value::String(s.clone()),
    }
}

pub fn set(s: &FinSet) -> Value {
    Value::Array(s.elems().iter().map(atom).collect())
}

pub fn pairs<'a>(it: impl IntoIterator<Item = &'a (Atom, Atom)>) -> Value {
    Value::Array(it.into_iter().map(|(a, b)| json!([atom(a), atom(b)])).collect())
}

pub fn relation(r: &Relation) -> Value {
    json!({ "source": set(r.source()), "target": set(r.target()), "pairs": pairs(r.pairs()) })
}

pub fn vec3(v: &Vec3) -> Value {
    rationals(&[v.x.clone(), v.y.clone(), v.z.clone()])
}

pub fn plane(p: &Plane) -> Value {
    json!({ "A": rational(&p.a), "B": rational(&p.b), "C": rational(&p.c), "D": rational(&p.d) })
}

pub fn line(l: &Line) -> Value {
    json!({ "point": vec3(&l.point), "dir": vec3(&l.dir) })
}

pub fn distance(d: &Distance) -> Value {
    json!({ "d": float(d.d), "d_sq": rational(&d.d_sq) })
}

pub fn solution(s: &SolutionSet) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), Value::String(s.verdict().to_string()));
    match s {
        SolutionSet::Inconsistent => {}
        SolutionSet::Unique(x) => {
            m.insert("x".into(), rationals(x));
        }
        SolutionSet::Parametric { particular, directions, free_cols } => {
            m.insert("particular".into(), rationals(particular));
            m.insert("directions".into(), Value::Array(directions.iter().map(|d| rationals(d)).collect()));
            m.insert("free_cols".into(), json!(free_cols.iter().map(|c| c + 1).collect::<Vec<_>>()));
        }
    }
    Value::Object(m)
}
