//! Command-line front end. `dispatch` is the whole program minus process
//! plumbing, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse or usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, CommandFactory, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::arith::{self, Binomial, Digits, SumKind};
use crate::complexn::{self, ComplexOp, GaussianRational};
use crate::error::Error;
use crate::finalg::{self, Magma};
use crate::geom::{self, Line, LinePlaneKind, LinesKind, Plane, Vec3};
use crate::linalg::{self, DetMethod, EquationSide, Matrix};
use crate::linsys::{self, LinearSystem, SolutionSet};
use crate::logic::{self, Formula};
use crate::ratio::{self, Affine};
use crate::rational::{Int, Rational};
use crate::render;
use crate::setrel::{self, FinSet, Relation, SetOp};

#[derive(Parser, Debug)]
#[command(name = "exacta", version, about = "Exact arithmetic, algebra and analytic geometry toolkit")]
pub struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub group: Group,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// Number theory: gcd, lcm, factorization, bases
    #[command(subcommand)]
    Nt(NtCmd),
    /// Factorials, binomial coefficients and expansions, closed-form sums
    #[command(subcommand)]
    Comb(CombCmd),
    /// Propositional logic
    #[command(subcommand)]
    Logic(LogicCmd),
    /// Finite sets
    #[command(subcommand)]
    Set(SetCmd),
    /// Binary relations and functions
    #[command(subcommand)]
    Rel(RelCmd),
    /// Finite algebraic structures
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Complex numbers
    #[command(subcommand)]
    Cx(CxCmd),
    /// Matrices and determinants
    #[command(subcommand)]
    Mat(MatCmd),
    /// Systems of linear equations
    #[command(subcommand)]
    Sys(SysCmd),
    /// Vectors, planes and lines in space
    #[command(subcommand)]
    Geo(GeoCmd),
    /// Proportions, percentages and mixtures
    #[command(subcommand)]
    Mix(MixCmd),
}

#[derive(Subcommand, Debug)]
pub enum NtCmd {
    /// Greatest common divisor by the Euclidean algorithm
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Print every division step
        #[arg(long)]
        steps: bool,
    },
    /// Least common multiple
    Lcm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Prime factorization
    Factor { n: String },
    /// Primality test
    Prime { n: String },
    /// Digits of n in base 2..16
    Tobase {
        n: String,
        base: Option<u32>,
        #[arg(long = "base", conflicts_with = "base")]
        base_flag: Option<u32>,
    },
    /// Value of a digit string in base 2..16
    Frombase {
        digits: String,
        base: Option<u32>,
        #[arg(long = "base", conflicts_with = "base")]
        base_flag: Option<u32>,
    },
    /// Division with remainder a = b*q + r, 0 <= r < b
    Divmod {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Args, Debug)]
pub struct BinomialArgs {
    /// Coefficient of the first summand
    #[arg(allow_hyphen_values = true)]
    c1: String,
    /// Exponent of x in the first summand
    #[arg(allow_hyphen_values = true)]
    e1: String,
    /// Coefficient of the second summand
    #[arg(allow_hyphen_values = true)]
    c2: String,
    /// Exponent of x in the second summand
    #[arg(allow_hyphen_values = true)]
    e2: String,
}

#[derive(Subcommand, Debug)]
pub enum CombCmd {
    /// n!
    Fact { n: String },
    /// C(n, k)
    Binom { n: String, k: String },
    /// Full expansion of (c1 x^e1 + c2 x^e2)^n
    Expand {
        n: i64,
        #[command(flatten)]
        b: BinomialArgs,
    },
    /// Term T_j (1-based) of (c1 x^e1 + c2 x^e2)^n
    Term {
        n: i64,
        j: i64,
        #[command(flatten)]
        b: BinomialArgs,
    },
    /// Closed-form sum: first_n, odd, triangular, squares, recip_consecutive, recip_odd, product_consecutive
    Sum { kind: String, n: String },
}

#[derive(Subcommand, Debug)]
pub enum LogicCmd {
    /// Truth table of a formula
    Table { formula: String },
    /// Tautology, contradiction or contingent
    Classify { formula: String },
    /// Logical equivalence of two formulas
    Equiv { f: String, g: String },
}

#[derive(Subcommand, Debug)]
pub enum SetCmd {
    /// Union, intersection, differences and symmetric difference
    Ops {
        a: String,
        b: String,
        /// Only this operation: union, intersect, diff, symdiff
        #[arg(long)]
        op: Option<String>,
        /// Universe for complements
        #[arg(long)]
        universe: Option<String>,
    },
    /// Power set
    Power { a: String },
    /// Cartesian product
    Cart { a: String, b: String },
    /// Three-set inclusion-exclusion. Default input: |A∪B∪C| |A| |B| |A∩B| |B∩C| |A∩C| |A∩B∩C|
    Venn3 {
        /// Input is |A| |B| |C| |A∩B| |B∩C| |A∩C| |A∩B∩C|; prints the union size
        #[arg(long)]
        union: bool,
        #[arg(num_args = 7, required = true)]
        counts: Vec<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum RelCmd {
    /// Properties of a relation on a set
    Props { set: String, pairs: String },
    /// Equivalence classes (quotient set)
    Classes { set: String, pairs: String },
    /// Composition of rho: A -> B with r: B -> C
    Compose { a: String, b: String, c: String, rho: String, r: String },
    /// Inverse relation of rho: A -> B
    Inverse { a: String, b: String, rho: String },
    /// Function test: injective, surjective, bijective
    Fn { a: String, b: String, f: String },
}

#[derive(Subcommand, Debug)]
pub enum AlgCmd {
    /// Cayley table. SOURCE is add:N, mul:N, units, or a table (carrier line then rows)
    Cayley { source: String },
    /// Closure, associativity, commutativity, neutral, inverses, class
    Classify { source: String },
}

#[derive(Subcommand, Debug)]
pub enum CxCmd {
    /// z1 OP z2 with OP one of add, sub, mul, div
    Arith {
        #[arg(allow_hyphen_values = true)]
        z1: String,
        op: String,
        #[arg(allow_hyphen_values = true)]
        z2: String,
    },
    /// Polar form of a complex literal, or of X Y given as floats
    Polar {
        #[arg(allow_hyphen_values = true, num_args = 1..=2, required = true)]
        z: Vec<String>,
    },
    /// Exact integer power
    Pow {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// The n-th roots
    Roots {
        #[arg(allow_hyphen_values = true)]
        z: String,
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum MatCmd {
    /// add A B, sub A B, mul A B, scale K A, transpose A
    Arith {
        op: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Determinant
    Det {
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// laplace, elimination, bareiss, leibniz or sarrus
        #[arg(long, default_value = "elimination")]
        method: String,
    },
    /// Adjugate (transposed cofactor matrix)
    Adj {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Inverse matrix
    Inverse {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Rank by elementary row operations
    Rank {
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Print the row operations and the echelon form
        #[arg(long)]
        steps: bool,
    },
    /// Solve A X = B (left) or X A = B (right)
    Solveq {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "left")]
        side: String,
    },
}

#[derive(Args, Debug)]
pub struct SystemArgs {
    /// A, a line holding "|", then b; or rows "a1 a2 | b"
    #[arg(allow_hyphen_values = true)]
    system: String,
    /// The input is one augmented matrix (A|b)
    #[arg(long)]
    augmented: bool,
}

#[derive(Subcommand, Debug)]
pub enum SysCmd {
    /// Rank test: unique, infinite or inconsistent
    Classify(SystemArgs),
    /// Gaussian elimination with parametric families
    Gauss(SystemArgs),
    /// Cramer's rule
    Cramer {
        #[command(flatten)]
        sys: SystemArgs,
        /// Apply the rule to the reduced pivot subsystem (any consistent system)
        #[arg(long)]
        reduced: bool,
    },
    /// Inverse-matrix method x = A^-1 b
    Invmethod {
        #[command(flatten)]
        sys: SystemArgs,
        /// Apply the method to the reduced pivot subsystem
        #[arg(long)]
        reduced: bool,
    },
    /// Homogeneous system A x = 0
    Homogeneous {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GeoCmd {
    /// Products of vectors; with --triangle/--tetra the points' measures; with --decompose coefficients in a basis
    Vec {
        #[arg(allow_hyphen_values = true, num_args = 1..=4, required = true)]
        vectors: Vec<String>,
        #[arg(long, conflicts_with_all = ["tetra", "decompose"])]
        triangle: bool,
        #[arg(long, conflicts_with = "decompose")]
        tetra: bool,
        /// Target vector; the positional vectors form the basis
        #[arg(long, allow_hyphen_values = true)]
        decompose: Option<String>,
    },
    /// Plane from a literal "A B C D", three points, or a point and a normal
    Plane {
        #[arg(allow_hyphen_values = true)]
        plane: Option<String>,
        #[arg(long, num_args = 3, allow_hyphen_values = true)]
        points: Option<Vec<String>>,
        #[arg(long, allow_hyphen_values = true, requires = "normal")]
        point: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "point")]
        normal: Option<String>,
    },
    /// Line from a literal, two points, or two planes
    Line {
        #[arg(allow_hyphen_values = true)]
        line: Option<String>,
        #[arg(long, num_args = 2, allow_hyphen_values = true)]
        points: Option<Vec<String>>,
        #[arg(long, num_args = 2, allow_hyphen_values = true)]
        planes: Option<Vec<String>>,
    },
    /// Mutual position of two planes, two lines, or a line and a plane
    Relate {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Distance from a point to a plane or a line
    Dist {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum MixCmd {
    /// Solve L1 : L2 = R1 : R2 for x (L1 and R1 may contain x)
    Prop {
        #[arg(allow_hyphen_values = true)]
        l1: String,
        #[arg(allow_hyphen_values = true)]
        l2: String,
        #[arg(allow_hyphen_values = true)]
        r1: String,
        #[arg(allow_hyphen_values = true)]
        r2: String,
    },
    /// Split TOTAL in the ratio W1 : W2 : ...
    Split {
        total: String,
        #[arg(required = true)]
        weights: Vec<String>,
    },
    /// G : 100 = I : p, give exactly two of --base, --part, --rate
    Percent {
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        part: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rate: Option<String>,
    },
    /// Successive percentage changes; give --start or --final
    Chain {
        #[arg(long)]
        start: Option<String>,
        #[arg(long = "final")]
        end: Option<String>,
        #[arg(allow_hyphen_values = true)]
        deltas: Vec<String>,
    },
    /// Two-component mixture: S1 S2 TARGET TOTAL, or with --missing X1 S1 X2 TARGET
    Simple {
        #[arg(long)]
        missing: bool,
        #[arg(num_args = 4, required = true)]
        values: Vec<String>,
    },
    /// Star scheme for several components
    Star {
        #[arg(required = true)]
        values: Vec<String>,
        #[arg(long)]
        target: String,
        #[arg(long)]
        total: String,
    },
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Output { text, json }
    }
}

enum Failure {
    Kernel(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Kernel(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Resolves the `-` placeholder to standard input, read at most once.
struct Input<'a> {
    supplied: Option<&'a str>,
    cache: Option<String>,
}

impl Input<'_> {
    fn text(&mut self, arg: &str) -> CliResult<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.cache.is_none() {
            let s = match self.supplied {
                Some(s) => s.to_string(),
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
                    buf
                }
            };
            self.cache = Some(s);
        }
        Ok(self.cache.clone().unwrap_or_default())
    }
}

/// Runs the CLI on `argv` (program name first), reading stdin if an
/// argument is `-`. Returns the exit code, stdout and stderr.
pub fn dispatch<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(argv, None)
}

/// Like `dispatch`, with `stdin` standing in for standard input.
pub fn dispatch_with_stdin<I, T>(argv: I, stdin: &str) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(argv, Some(stdin))
}

fn run<I, T>(argv: I, stdin: Option<&str>) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() { (2, String::new(), rendered) } else { (0, rendered, String::new()) };
        }
    };
    let mut input = Input { supplied: stdin, cache: None };
    match execute(&cli.group, &mut input) {
        Ok(out) => {
            let stdout = if cli.json {
                format!("{}\n", serde_json::to_string(&out.json).expect("serializable"))
            } else {
                out.text
            };
            (0, stdout, String::new())
        }
        Err(Failure::Kernel(e)) => {
            let code = if e.is_parse() { 2 } else { 1 };
            (code, String::new(), format!("error: {e}\n"))
        }
        Err(Failure::Usage(msg)) => (2, String::new(), format!("error: {msg}\n")),
    }
}

/// Names of every leaf subcommand as `group sub`.
pub fn subcommand_paths() -> Vec<String> {
    let cmd = Cli::command();
    cmd.get_subcommands()
        .flat_map(|g| g.get_subcommands().map(move |s| format!("{} {}", g.get_name(), s.get_name())))
        .collect()
}

fn int(s: &str) -> CliResult<Int> {
    s.trim().parse::<Int>().map_err(|_| Failure::Kernel(Error::parse(0, format!("expected an integer, found '{s}'"))))
}

fn rat(s: &str) -> CliResult<Rational> {
    Ok(s.replace('\u{2212}', "-").parse::<Rational>()?)
}

fn pct(s: &str) -> CliResult<Rational> {
    Ok(ratio::parse_percent(&s.replace('\u{2212}', "-"))?)
}

fn usize_arg(n: &Int, what: &str) -> CliResult<usize> {
    use num_traits::ToPrimitive;
    n.to_usize().ok_or_else(|| Failure::Kernel(Error::OutOfDomain(format!("{what} out of range"))))
}

/// Exact value, with two decimals appended when it is not an integer.
fn approx(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} ≈ {}", r.to_decimal_string(2))
    }
}

fn tf(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(group: &Group, input: &mut Input) -> CliResult<Output> {
    match group {
        Group::Nt(c) => nt(c),
        Group::Comb(c) => comb(c),
        Group::Logic(c) => logic_cmd(c, input),
        Group::Set(c) => set_cmd(c, input),
        Group::Rel(c) => rel_cmd(c, input),
        Group::Alg(c) => alg_cmd(c, input),
        Group::Cx(c) => cx(c),
        Group::Mat(c) => mat(c, input),
        Group::Sys(c) => sys(c, input),
        Group::Geo(c) => geo(c, input),
        Group::Mix(c) => mix(c),
    }
}

fn pick_base(positional: Option<u32>, flag: Option<u32>) -> CliResult<u32> {
    positional.or(flag).ok_or_else(|| Failure::Usage("a base is required".into()))
}

fn nt(c: &NtCmd) -> CliResult<Output> {
    Ok(match c {
        NtCmd::Gcd { a, b, steps } => {
            let (a, b) = (int(a)?, int(b)?);
            let (g, trace) = arith::gcd(&a, &b)?;
            let mut text = String::new();
            if *steps {
                for s in &trace {
                    let _ = writeln!(text, "{s}");
                }
            }
            let _ = write!(text, "{g}");
            let steps_json: Vec<Value> = trace
                .iter()
                .map(|s| {
                    json!({
                        "dividend": render::int(&s.dividend),
                        "divisor": render::int(&s.divisor),
                        "quotient": render::int(&s.quotient),
                        "remainder": render::int(&s.remainder),
                    })
                })
                .collect();
            Output::new(text, json!({ "gcd": render::int(&g), "steps": steps_json }))
        }
        NtCmd::Lcm { a, b } => {
            let l = arith::lcm(&int(a)?, &int(b)?)?;
            Output::new(l.to_string(), json!({ "lcm": render::int(&l) }))
        }
        NtCmd::Factor { n } => {
            let n = int(n)?;
            let f = arith::factorize(&n)?;
            let text = f
                .iter()
                .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect::<Vec<_>>()
                .join(" * ");
            let factors: Vec<Value> = f.iter().map(|(p, e)| json!({ "prime": render::int(p), "exp": e })).collect();
            Output::new(text, json!({ "n": render::int(&n), "factors": factors }))
        }
        NtCmd::Prime { n } => {
            let n = int(n)?;
            let p = arith::is_prime(&n)?;
            Output::new(if p { "prime" } else { "not prime" }, json!({ "n": render::int(&n), "prime": p }))
        }
        NtCmd::Tobase { n, base, base_flag } => {
            let d = arith::to_base(&int(n)?, pick_base(*base, *base_flag)?)?;
            Output::new(d.to_string(), json!({ "base": d.base(), "digits": d.coeffs() }))
        }
        NtCmd::Frombase { digits, base, base_flag } => {
            let d = Digits::parse(digits, pick_base(*base, *base_flag)?)?;
            let v = arith::from_base(&d);
            Output::new(v.to_string(), json!({ "value": render::int(&v) }))
        }
        NtCmd::Divmod { a, b } => {
            let (a, b) = (int(a)?, int(b)?);
            let (q, r) = arith::divmod_euclid(&a, &b)?;
            Output::new(format!("{a} = {b}*{q} + {r}"), json!({ "q": render::int(&q), "r": render::int(&r) }))
        }
    })
}

fn binomial(b: &BinomialArgs) -> CliResult<Binomial> {
    Ok(Binomial::new(rat(&b.c1)?, rat(&b.e1)?, rat(&b.c2)?, rat(&b.e2)?))
}

fn monomial_json(m: &arith::Monomial) -> Value {
    json!({ "coeff": render::rational(&m.coeff), "exponent": render::rational(&m.exponent) })
}

fn polynomial_text(terms: &[arith::Monomial]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            let _ = write!(out, "{t}");
        } else if t.coeff.is_negative() {
            let flipped = arith::Monomial { coeff: -t.coeff.clone(), exponent: t.exponent.clone() };
            let _ = write!(out, " - {flipped}");
        } else {
            let _ = write!(out, " + {t}");
        }
    }
    out
}

fn comb(c: &CombCmd) -> CliResult<Output> {
    Ok(match c {
        CombCmd::Fact { n } => {
            let v = arith::factorial(&int(n)?)?;
            Output::new(v.to_string(), json!({ "value": render::int(&v) }))
        }
        CombCmd::Binom { n, k } => {
            let v = arith::binom(&int(n)?, &int(k)?)?;
            Output::new(v.to_string(), json!({ "value": render::int(&v) }))
        }
        CombCmd::Expand { n, b } => {
            let terms = arith::binom_expand(*n, &binomial(b)?)?;
            let js: Vec<Value> = terms.iter().map(monomial_json).collect();
            Output::new(polynomial_text(&terms), json!({ "terms": js }))
        }
        CombCmd::Term { n, j, b } => {
            let t = arith::binom_term(*n, j - 1, &binomial(b)?)?;
            Output::new(format!("T_{j} = {t}"), json!({ "index": j, "term": monomial_json(&t) }))
        }
        CombCmd::Sum { kind, n } => {
            let k: SumKind = kind.parse()?;
            let v = arith::closed_form_sum(k, &int(n)?)?;
            Output::new(v.to_string(), json!({ "kind": k.name(), "value": render::rational(&v) }))
        }
    })
}

fn formula(input: &mut Input, s: &str) -> CliResult<Formula> {
    Ok(input.text(s)?.parse::<Formula>()?)
}

fn logic_cmd(c: &LogicCmd, input: &mut Input) -> CliResult<Output> {
    Ok(match c {
        LogicCmd::Table { formula: f } => {
            let f = formula(input, f)?;
            let t = logic::truth_table(&f)?;
            let rows: Vec<Value> = t.rows.iter().map(|r| json!({ "values": r.values, "result": r.result })).collect();
            Output::new(t.to_string(), json!({ "formula": f.to_string(), "atoms": t.atoms, "rows": rows }))
        }
        LogicCmd::Classify { formula: f } => {
            let f = formula(input, f)?;
            let class = logic::classify(&f)?;
            Output::new(class.to_string(), json!({ "formula": f.to_string(), "class": class.to_string() }))
        }
        LogicCmd::Equiv { f, g } => {
            let (f, g) = (formula(input, f)?, formula(input, g)?);
            let eq = logic::equivalent(&f, &g)?;
            Output::new(if eq { "equivalent" } else { "not equivalent" }, json!({ "equivalent": eq }))
        }
    })
}

fn finset(input: &mut Input, s: &str) -> CliResult<FinSet> {
    Ok(input.text(s)?.parse::<FinSet>()?)
}

fn set_cmd(c: &SetCmd, input: &mut Input) -> CliResult<Output> {
    Ok(match c {
        SetCmd::Ops { a, b, op, universe } => {
            let (a, b) = (finset(input, a)?, finset(input, b)?);
            if let Some(op) = op {
                let r = setrel::set_op(&a, &b, op.parse::<SetOp>()?)?;
                return Ok(Output::new(r.to_string(), json!({ op.as_str(): render::set(&r) })));
            }
            let mut text = String::new();
            let mut js = Map::new();
            let rows = [
                ("A ∪ B", "union", setrel::set_op(&a, &b, SetOp::Union)?),
                ("A ∩ B", "intersect", setrel::set_op(&a, &b, SetOp::Intersect)?),
                ("A \\ B", "a_minus_b", setrel::set_op(&a, &b, SetOp::Diff)?),
                ("B \\ A", "b_minus_a", setrel::set_op(&b, &a, SetOp::Diff)?),
                ("A △ B", "symdiff", setrel::set_op(&a, &b, SetOp::SymDiff)?),
            ];
            for (label, key, s) in &rows {
                let _ = writeln!(text, "{label} = {s}");
                js.insert((*key).into(), render::set(s));
            }
            if let Some(u) = universe {
                let u = finset(input, u)?;
                for (label, key, s) in [("A'", "a_complement", &a), ("B'", "b_complement", &b)] {
                    let c = setrel::complement(s, &u)?;
                    let _ = writeln!(text, "{label} = {c}");
                    js.insert(key.into(), render::set(&c));
                }
            }
            Output::new(text, Value::Object(js))
        }
        SetCmd::Power { a } => {
            let a = finset(input, a)?;
            let p = setrel::powerset(&a)?;
            let family = p.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
            Output::new(
                format!("{{{family}}}\n|P(A)| = {}", p.len()),
                json!({ "count": p.len(), "subsets": p.iter().map(render::set).collect::<Vec<_>>() }),
            )
        }
        SetCmd::Cart { a, b } => {
            let (a, b) = (finset(input, a)?, finset(input, b)?);
            let prod = setrel::cartesian(&a, &b);
            let text = prod.iter().map(|(x, y)| format!("({x}, {y})")).collect::<Vec<_>>().join(", ");
            Output::new(format!("{{{text}}}"), json!({ "count": prod.len(), "pairs": render::pairs(&prod) }))
        }
        SetCmd::Venn3 { union, counts } => {
            let v = counts;
            if *union {
                let u = setrel::venn3_union(v[0], v[1], v[2], v[3], v[4], v[5], v[6])?;
                Output::new(u.to_string(), json!({ "union": u }))
            } else {
                let r = setrel::three_set_counts(v[0], v[1], v[2], v[3], v[4], v[5], v[6])?;
                let text = format!(
                    "|C| = {}\nonly A = {}\nonly B = {}\nonly C = {}\nA∩B only = {}\nB∩C only = {}\nA∩C only = {}\nA∩B∩C = {}",
                    r.c, r.only_a, r.only_b, r.only_c, r.ab_only, r.bc_only, r.ac_only, r.abc
                );
                Output::new(
                    text,
                    json!({
                        "c": r.c, "only_a": r.only_a, "only_b": r.only_b, "only_c": r.only_c,
                        "ab_only": r.ab_only, "bc_only": r.bc_only, "ac_only": r.ac_only, "abc": r.abc,
                    }),
                )
            }
        }
    })
}

fn relation(input: &mut Input, source: &FinSet, target: &FinSet, pairs: &str) -> CliResult<Relation> {
    let pairs = setrel::parse_pairs(&input.text(pairs)?)?;
    Ok(Relation::new(source.clone(), target.clone(), pairs)?)
}

fn rel_cmd(c: &RelCmd, input: &mut Input) -> CliResult<Output> {
    Ok(match c {
        RelCmd::Props { set, pairs } => {
            let s = finset(input, set)?;
            let r = relation(input, &s, &s, pairs)?;
            let p = setrel::rel_properties(&r)?;
            let eq = setrel::equivalence_analysis(&r)?.is_equivalence;
            let po = setrel::is_partial_order(&r)?;
            let text = format!(
                "reflexive: {}\nantireflexive: {}\nsymmetric: {}\nantisymmetric: {}\ntransitive: {}\nequivalence: {}\npartial order: {}",
                tf(p.reflexive),
                tf(p.antireflexive),
                tf(p.symmetric),
                tf(p.antisymmetric),
                tf(p.transitive),
                tf(eq),
                tf(po)
            );
            Output::new(
                text,
                json!({
                    "reflexive": p.reflexive, "antireflexive": p.antireflexive, "symmetric": p.symmetric,
                    "antisymmetric": p.antisymmetric, "transitive": p.transitive,
                    "equivalence": eq, "partial_order": po,
                }),
            )
        }
        RelCmd::Classes { set, pairs } => {
            let s = finset(input, set)?;
            let r = relation(input, &s, &s, pairs)?;
            let classes = setrel::factor_set(&r)?;
            let text = classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
            Output::new(text, json!({ "classes": classes.iter().map(render::set).collect::<Vec<_>>() }))
        }
        RelCmd::Compose { a, b, c, rho, r } => {
            let (a, b, c) = (finset(input, a)?, finset(input, b)?, finset(input, c)?);
            let rho = relation(input, &a, &b, rho)?;
            let r = relation(input, &b, &c, r)?;
            let out = setrel::rel_compose(&rho, &r)?;
            Output::new(out.to_string(), render::relation(&out))
        }
        RelCmd::Inverse { a, b, rho } => {
            let (a, b) = (finset(input, a)?, finset(input, b)?);
            let inv = setrel::rel_inverse(&relation(input, &a, &b, rho)?);
            Output::new(inv.to_string(), render::relation(&inv))
        }
        RelCmd::Fn { a, b, f } => {
            let (a, b) = (finset(input, a)?, finset(input, b)?);
            let rep = setrel::fn_analysis(&relation(input, &a, &b, f)?);
            let text = format!(
                "function: {}\ninjective: {}\nsurjective: {}\nbijective: {}",
                tf(rep.is_function),
                tf(rep.injective),
                tf(rep.surjective),
                tf(rep.bijective)
            );
            Output::new(
                text,
                json!({ "function": rep.is_function, "injective": rep.injective, "surjective": rep.surjective, "bijective": rep.bijective }),
            )
        }
    })
}

fn magma(input: &mut Input, source: &str) -> CliResult<Magma> {
    let text = input.text(source)?;
    let t = text.trim();
    let modulus = |s: &str| -> CliResult<usize> { usize_arg(&int(s)?, "modulus") };
    Ok(if let Some(n) = t.strip_prefix("add:") {
        finalg::modular_add(modulus(n)?)?
    } else if let Some(n) = t.strip_prefix("mul:") {
        finalg::modular_mul(modulus(n)?)?
    } else if t == "units" {
        let carrier = [
            GaussianRational::from_ints(-1, 0),
            GaussianRational::one(),
            GaussianRational::i(),
            GaussianRational::from_ints(0, -1),
        ];
        finalg::cayley_table(&carrier, |a, b| a * b)?
    } else {
        finalg::parse_table(t)?
    })
}

fn alg_cmd(c: &AlgCmd, input: &mut Input) -> CliResult<Output> {
    Ok(match c {
        AlgCmd::Cayley { source } => {
            let m = magma(input, source)?;
            Output::new(m.to_string(), json!({ "carrier": m.carrier(), "rows": m.rows() }))
        }
        AlgCmd::Classify { source } => {
            let m = magma(input, source)?;
            let r = finalg::classify_structure(&m);
            let label = |i: usize| m.carrier()[i].clone();
            let neutral = r.neutral.map(label);
            let inverses: Vec<String> = r
                .inverses
                .iter()
                .enumerate()
                .map(|(i, inv)| format!("{}^-1 = {}", label(i), inv.map_or("none".to_string(), label)))
                .collect();
            let mut text = format!(
                "closed: {}\nassociative: {}\ncommutative: {}\nneutral: {}\n",
                tf(r.closed),
                tf(r.associative),
                tf(r.commutative),
                neutral.clone().unwrap_or_else(|| "none".into())
            );
            if r.neutral.is_some() {
                let _ = writeln!(text, "inverses: {}", inverses.join(", "));
            }
            let _ = write!(text, "class: {}", r.class);
            let inv_json: Vec<Value> =
                r.inverses.iter().map(|i| i.map_or(Value::Null, |k| Value::String(label(k)))).collect();
            Output::new(
                text,
                json!({
                    "closed": r.closed, "associative": r.associative, "commutative": r.commutative,
                    "neutral": neutral, "inverses": inv_json, "all_invertible": r.all_invertible,
                    "class": r.class.to_string(),
                }),
            )
        }
    })
}

fn complex(s: &str) -> CliResult<GaussianRational> {
    Ok(s.replace('\u{2212}', "-").parse::<GaussianRational>()?)
}

fn float(s: &str) -> CliResult<f64> {
    s.trim().parse::<f64>().map_err(|_| Failure::Kernel(Error::parse(0, format!("expected a number, found '{s}'"))))
}

fn cx(c: &CxCmd) -> CliResult<Output> {
    Ok(match c {
        CxCmd::Arith { z1, op, z2 } => {
            let z = complexn::c_arith(&complex(z1)?, &complex(z2)?, op.parse::<ComplexOp>()?)?;
            Output::new(z.to_string(), render::complex(&z))
        }
        CxCmd::Polar { z } => {
            let p = match z.as_slice() {
                [lit] => complexn::to_polar(&complex(lit)?)?,
                [x, y] => complexn::to_polar_xy(float(x)?, float(y)?)?,
                _ => unreachable!("clap enforces one or two values"),
            };
            Output::new(p.to_string(), render::polar(&p))
        }
        CxCmd::Pow { z, n } => {
            let w = complex(z)?.pow(*n)?;
            Output::new(w.to_string(), render::complex(&w))
        }
        CxCmd::Roots { z, n } => {
            let roots = complexn::roots_n(&complex(z)?, *n)?;
            let text = roots.iter().enumerate().map(|(k, p)| format!("w{k} = {p}")).collect::<Vec<_>>().join("\n");
            Output::new(text, json!({ "roots": roots.iter().map(render::polar).collect::<Vec<_>>() }))
        }
    })
}

fn matrix(input: &mut Input, s: &str) -> CliResult<Matrix> {
    Ok(input.text(s)?.replace('\u{2212}', "-").parse::<Matrix>()?)
}

fn mat_out(m: &Matrix) -> Output {
    Output::new(m.to_string(), json!({ "matrix": render::matrix(m) }))
}

fn mat(c: &MatCmd, input: &mut Input) -> CliResult<Output> {
    Ok(match c {
        MatCmd::Arith { op, a, b } => {
            let need_b =
                |b: &Option<String>| b.clone().ok_or_else(|| Failure::Usage(format!("'{op}' needs two operands")));
            let m = match op.as_str() {
                "add" | "sub" => {
                    let (x, y) = (matrix(input, a)?, matrix(input, &need_b(b)?)?);
                    linalg::mat_arith(&x, &y, op.parse()?)?
                }
                "mul" => linalg::matmul(&matrix(input, a)?, &matrix(input, &need_b(b)?)?)?,
                "scale" => linalg::scale(&rat(a)?, &matrix(input, &need_b(b)?)?),
                "transpose" => linalg::transpose(&matrix(input, a)?),
                other => return Err(Failure::Kernel(Error::UnknownKind(other.to_string()))),
            };
            mat_out(&m)
        }
        MatCmd::Det { a, method } => {
            let d = linalg::det(&matrix(input, a)?, method.parse::<DetMethod>()?)?;
            Output::new(d.to_string(), json!({ "det": render::rational(&d) }))
        }
        MatCmd::Adj { a } => mat_out(&linalg::adjugate(&matrix(input, a)?)?),
        MatCmd::Inverse { a } => mat_out(&linalg::inverse(&matrix(input, a)?)?),
        MatCmd::Rank { a, steps } => {
            let rep = linalg::rank(&matrix(input, a)?);
            let ops: Vec<String> = rep.op_log.iter().map(|o| o.to_string()).collect();
            let text = if *steps {
                format!("{}\n{}rank = {}", ops.join(", "), rep.echelon, rep.rank)
            } else {
                rep.rank.to_string()
            };
            Output::new(
                text,
                json!({
                    "rank": rep.rank,
                    "pivot_cols": rep.pivot_cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
                    "ops": ops,
                    "echelon": render::matrix(&rep.echelon),
                }),
            )
        }
        MatCmd::Solveq { a, b, side } => {
            let side: EquationSide = side.parse()?;
            mat_out(&linalg::solve_matrix_equation(side, &matrix(input, a)?, &matrix(input, b)?)?)
        }
    })
}

fn system(input: &mut Input, args: &SystemArgs) -> CliResult<LinearSystem> {
    let text = input.text(&args.system)?.replace('\u{2212}', "-");
    Ok(if args.augmented { LinearSystem::from_augmented(&text.parse()?)? } else { text.parse()? })
}

/// Solvers treat an inconsistent system as a domain error; `sys classify`
/// reports it as a verdict instead.
fn solution_out(s: &SolutionSet, prefix: &str, extra: Map<String, Value>) -> CliResult<Output> {
    if matches!(s, SolutionSet::Inconsistent) {
        return Err(Failure::Kernel(Error::Inconsistent));
    }
    let mut js = extra;
    if let Value::Object(m) = render::solution(s) {
        js.extend(m);
    }
    let mut text = format!("{prefix}{s}");
    if let SolutionSet::Parametric { particular, directions, .. } = s {
        let col = |v: &[Rational]| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        let _ = write!(
            text,
            "
particular: {}",
            col(particular)
        );
        for (k, d) in directions.iter().enumerate() {
            let _ = write!(
                text,
                "
direction t{}: {}",
                k + 1,
                col(d)
            );
        }
    }
    Ok(Output::new(text, Value::Object(js)))
}

fn sys(c: &SysCmd, input: &mut Input) -> CliResult<Output> {
    Ok(match c {
        SysCmd::Classify(args) => {
            let r = linsys::classify(&system(input, args)?);
            Output::new(
                format!("rank(A) = {}, rank(A|b) = {}, n = {}: {}", r.rank_a, r.rank_ab, r.n, r.verdict),
                json!({ "rank_a": r.rank_a, "rank_ab": r.rank_ab, "n": r.n, "verdict": r.verdict.to_string() }),
            )
        }
        SysCmd::Gauss(args) => solution_out(&linsys::solve_gauss(&system(input, args)?), "", Map::new())?,
        SysCmd::Cramer { sys, reduced } => {
            let s = system(input, sys)?;
            if *reduced {
                solution_out(&linsys::solve_cramer_reduced(&s)?, "", Map::new())?
            } else {
                let sol = linsys::solve_cramer(&s)?;
                let dets = linsys::cramer_determinants(&s)?;
                let mut prefix = format!("D = {}\n", dets.d);
                for (k, dk) in dets.d_k.iter().enumerate() {
                    let _ = writeln!(prefix, "D{} = {dk}", k + 1);
                }
                let mut extra = Map::new();
                extra.insert("d".into(), render::rational(&dets.d));
                extra.insert("d_k".into(), render::rationals(&dets.d_k));
                solution_out(&sol, &prefix, extra)?
            }
        }
        SysCmd::Invmethod { sys, reduced } => {
            let s = system(input, sys)?;
            let sol = if *reduced { linsys::solve_inverse_reduced(&s)? } else { linsys::solve_inverse_method(&s)? };
            solution_out(&sol, "", Map::new())?
        }
        SysCmd::Homogeneous { a } => {
            let rep = linsys::homogeneous_analysis(&matrix(input, a)?);
            let head = if rep.trivial_only { "trivial solution only\n" } else { "nontrivial solutions\n" };
            let mut extra = Map::new();
            extra.insert("trivial_only".into(), Value::Bool(rep.trivial_only));
            solution_out(&rep.solutions, head, extra)?
        }
    })
}

fn vec3(input: &mut Input, s: &str) -> CliResult<Vec3> {
    Ok(input.text(s)?.parse::<Vec3>()?)
}

fn plane(s: &str) -> CliResult<Plane> {
    Ok(s.replace('\u{2212}', "-").parse::<Plane>()?)
}

fn line(s: &str) -> CliResult<Line> {
    Ok(s.parse::<Line>()?)
}

fn plane_text_json(p: &Plane) -> (String, Value) {
    let mut text = format!("{p}\n");
    let mut js = Map::new();
    js.insert("plane".into(), render::plane(p));
    match p.segment_form() {
        Ok([l, m, n]) => {
            let _ = writeln!(text, "segment: x/({l}) + y/({m}) + z/({n}) = 1");
            js.insert("segment".into(), render::rationals(&[l, m, n]));
        }
        Err(_) => {
            let _ = writeln!(text, "segment: none (a coefficient is zero)");
            js.insert("segment".into(), Value::Null);
        }
    }
    let h = p.hesse();
    let f = |x: f64| crate::complexn::fmt_float(x);
    let _ = writeln!(
        text,
        "hesse: cos α = {}, cos β = {}, cos γ = {}, p = {} (p² = {})",
        f(h.cos_a),
        f(h.cos_b),
        f(h.cos_g),
        f(h.p),
        h.p_sq
    );
    js.insert(
        "hesse".into(),
        json!({ "cos_a": render::float(h.cos_a), "cos_b": render::float(h.cos_b), "cos_g": render::float(h.cos_g),
                "p": render::float(h.p), "p_sq": render::rational(&h.p_sq) }),
    );
    let par = p.parametric();
    let _ = write!(text, "parametric: {} + u{} + v{}", par.point, par.u, par.v);
    js.insert(
        "parametric".into(),
        json!({ "point": render::vec3(&par.point), "u": render::vec3(&par.u), "v": render::vec3(&par.v) }),
    );
    (text, Value::Object(js))
}

fn line_out(l: &Line) -> Output {
    let par = l.parametric();
    Output::new(
        format!("{l}\ncanonical: {}\nparametric: {}", l.canonical(), par.join(", ")),
        json!({ "line": render::line(l), "canonical": l.canonical(), "parametric": par }),
    )
}

/// Line literals carry two or more '=', plane literals at most one.
enum Shape {
    Plane(Plane),
    Line(Line),
}

fn shape(input: &mut Input, s: &str) -> CliResult<Shape> {
    let t = input.text(s)?;
    Ok(if t.matches('=').count() >= 2 { Shape::Line(line(&t)?) } else { Shape::Plane(plane(&t)?) })
}

fn geo(c: &GeoCmd, input: &mut Input) -> CliResult<Output> {
    let f = |x: f64| crate::complexn::fmt_float(x);
    Ok(match c {
        GeoCmd::Vec { vectors, triangle, tetra, decompose } => {
            let vs = vectors.iter().map(|v| vec3(input, v)).collect::<CliResult<Vec<_>>>()?;
            if let Some(t) = decompose {
                let target = vec3(input, t)?;
                let k = geom::decompose(&target, &vs)?;
                let text = k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
                return Ok(Output::new(text, json!({ "coefficients": render::rationals(&k) })));
            }
            if *triangle {
                let [a, b, c] = vs.as_slice() else {
                    return Err(Failure::Kernel(Error::WrongArity));
                };
                let t = geom::triangle_measures(a, b, c)?;
                let text = format!(
                    "area = {} (|AB×AC|² = {})\nperimeter = {}\nangles = {}, {}, {}\nheights² = {}, {}, {}",
                    f(t.area),
                    t.parallelogram_area_sq,
                    f(t.perimeter),
                    f(t.angles[0]),
                    f(t.angles[1]),
                    f(t.angles[2]),
                    t.heights_sq[0],
                    t.heights_sq[1],
                    t.heights_sq[2]
                );
                return Ok(Output::new(
                    text,
                    json!({
                        "area": render::float(t.area),
                        "parallelogram_area_sq": render::rational(&t.parallelogram_area_sq),
                        "sides_sq": render::rationals(&t.sides_sq),
                        "perimeter": render::float(t.perimeter),
                        "angles": t.angles.iter().map(|&x| render::float(x)).collect::<Vec<_>>(),
                        "heights_sq": render::rationals(&t.heights_sq),
                    }),
                ));
            }
            if *tetra {
                let [a, b, c, d] = vs.as_slice() else {
                    return Err(Failure::Kernel(Error::WrongArity));
                };
                let t = geom::tetra_measures(a, b, c, d)?;
                let text = format!(
                    "tetrahedron volume = {}\nparallelepiped volume = {}\nheight from D = {} (h² = {})",
                    t.tetra_volume,
                    t.parallelepiped_volume,
                    f(t.height),
                    t.height_sq
                );
                return Ok(Output::new(
                    text,
                    json!({
                        "tetra_volume": render::rational(&t.tetra_volume),
                        "parallelepiped_volume": render::rational(&t.parallelepiped_volume),
                        "height_sq": render::rational(&t.height_sq),
                        "height": render::float(t.height),
                    }),
                ));
            }
            match vs.as_slice() {
                [a] => Output::new(
                    format!("|a|² = {}\n|a| = {}", a.norm_sq(), f(a.norm())),
                    json!({ "norm_sq": render::rational(&a.norm_sq()), "norm": render::float(a.norm()) }),
                ),
                [a, b] => {
                    let o = geom::vec_ops(a, b)?;
                    let text = format!(
                        "a·b = {}\na×b = {}\n|a| = {} (|a|² = {})\n|b| = {} (|b|² = {})\nangle = {}\nproj_b a = {}\ncollinear: {}",
                        o.dot,
                        o.cross,
                        f(o.norm_a),
                        o.norm_sq_a,
                        f(o.norm_b),
                        o.norm_sq_b,
                        f(o.angle),
                        f(o.proj_scalar),
                        tf(geom::collinear(a, b))
                    );
                    Output::new(
                        text,
                        json!({
                            "dot": render::rational(&o.dot), "cross": render::vec3(&o.cross),
                            "norm_sq_a": render::rational(&o.norm_sq_a), "norm_sq_b": render::rational(&o.norm_sq_b),
                            "angle": render::float(o.angle), "proj_scalar": render::float(o.proj_scalar),
                            "collinear": geom::collinear(a, b),
                        }),
                    )
                }
                [a, b, c] => {
                    let m = geom::mixed(a, b, c);
                    Output::new(
                        format!("(a×b)·c = {m}\ncoplanar: {}\nindependent: {}", tf(m.is_zero()), tf(!m.is_zero())),
                        json!({ "mixed": render::rational(&m), "coplanar": m.is_zero(), "independent": !m.is_zero() }),
                    )
                }
                _ => return Err(Failure::Kernel(Error::WrongArity)),
            }
        }
        GeoCmd::Plane { plane: lit, points, point, normal } => {
            let p = match (lit, points, point, normal) {
                (Some(l), None, None, None) => plane(&input.text(l)?)?,
                (None, Some(pts), None, None) => {
                    Plane::three_points(&vec3(input, &pts[0])?, &vec3(input, &pts[1])?, &vec3(input, &pts[2])?)?
                }
                (None, None, Some(pt), Some(n)) => Plane::point_normal(&vec3(input, pt)?, &vec3(input, n)?)?,
                _ => return Err(Failure::Usage("give a plane literal, --points, or --point with --normal".into())),
            };
            let (text, js) = plane_text_json(&p);
            Output::new(text, js)
        }
        GeoCmd::Line { line: lit, points, planes } => {
            let l = match (lit, points, planes) {
                (Some(l), None, None) => line(&input.text(l)?)?,
                (None, Some(p), None) => Line::two_points(&vec3(input, &p[0])?, &vec3(input, &p[1])?)?,
                (None, None, Some(p)) => Line::from_planes(&plane(&p[0])?, &plane(&p[1])?)?,
                _ => return Err(Failure::Usage("give a line literal, --points, or --planes".into())),
            };
            line_out(&l)
        }
        GeoCmd::Relate { x, y } => match (shape(input, x)?, shape(input, y)?) {
            (Shape::Plane(p1), Shape::Plane(p2)) => {
                let r = geom::planes_relation(&p1, &p2);
                let kind = if r.identical {
                    "identical"
                } else if r.parallel {
                    "parallel"
                } else {
                    "intersecting"
                };
                let mut text = format!(
                    "{kind}\nangle = {} (cos² = {})\nperpendicular: {}",
                    f(r.angle),
                    r.cos_sq,
                    tf(r.perpendicular)
                );
                if let Some(l) = &r.intersection {
                    let _ = write!(text, "\nline: {l}\ncanonical: {}", l.canonical());
                }
                Output::new(
                    text,
                    json!({
                        "kind": kind, "angle": render::float(r.angle), "cos_sq": render::rational(&r.cos_sq),
                        "parallel": r.parallel, "perpendicular": r.perpendicular, "identical": r.identical,
                        "intersection": r.intersection.as_ref().map(render::line),
                    }),
                )
            }
            (Shape::Line(l1), Shape::Line(l2)) => {
                let r = geom::lines_relation(&l1, &l2);
                let (kind, detail, extra) = match &r.kind {
                    LinesKind::Identical => ("identical", String::new(), Value::Null),
                    LinesKind::Parallel(d) => {
                        ("parallel", format!("\ndistance = {} (d² = {})", f(d.d), d.d_sq), render::distance(d))
                    }
                    LinesKind::Intersecting(p) => ("intersecting", format!("\npoint = {p}"), render::vec3(p)),
                    LinesKind::Skew(d) => {
                        ("skew", format!("\ndistance = {} (d² = {})", f(d.d), d.d_sq), render::distance(d))
                    }
                };
                Output::new(
                    format!("{kind}{detail}\nangle = {}\nperpendicular: {}", f(r.angle), tf(r.perpendicular)),
                    json!({ "kind": kind, "detail": extra, "angle": render::float(r.angle), "perpendicular": r.perpendicular }),
                )
            }
            (Shape::Line(l), Shape::Plane(p)) | (Shape::Plane(p), Shape::Line(l)) => {
                match geom::line_plane_relation(&l, &p) {
                    LinePlaneKind::ParallelDisjoint => Output::new("parallel", json!({ "kind": "parallel_disjoint" })),
                    LinePlaneKind::Contained => Output::new("contained", json!({ "kind": "contained" })),
                    LinePlaneKind::Intersecting { point, sin_angle } => Output::new(
                        format!("intersecting\npoint = {point}\nsin φ = {}\nφ = {}", f(sin_angle), f(sin_angle.asin())),
                        json!({ "kind": "intersecting", "point": render::vec3(&point), "sin_angle": render::float(sin_angle) }),
                    ),
                }
            }
        },
        GeoCmd::Dist { point, target } => {
            let p = vec3(input, point)?;
            let d = match shape(input, target)? {
                Shape::Plane(pl) => geom::point_plane_distance(&p, &pl),
                Shape::Line(l) => geom::point_line_distance(&p, &l),
            };
            Output::new(format!("d = {} (d² = {})", f(d.d), d.d_sq), render::distance(&d))
        }
    })
}

fn affine(s: &str) -> CliResult<Affine> {
    Ok(s.parse::<Affine>()?)
}

fn mix(c: &MixCmd) -> CliResult<Output> {
    Ok(match c {
        MixCmd::Prop { l1, l2, r1, r2 } => {
            let x = ratio::solve_proportion(&affine(l1)?, &rat(l2)?, &affine(r1)?, &rat(r2)?)?;
            Output::new(format!("x = {}", approx(&x)), json!({ "x": render::rational(&x) }))
        }
        MixCmd::Split { total, weights } => {
            let w = weights.iter().map(|s| rat(s)).collect::<CliResult<Vec<_>>>()?;
            let parts = ratio::extended_split(&rat(total)?, &w)?;
            let text = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
            Output::new(text, json!({ "parts": render::rationals(&parts) }))
        }
        MixCmd::Percent { base, part, rate } => {
            let g = base.as_deref().map(rat).transpose()?;
            let i = part.as_deref().map(rat).transpose()?;
            let p = rate.as_deref().map(pct).transpose()?;
            let (which, v) = ratio::percent_solve(g.as_ref(), i.as_ref(), p.as_ref())?;
            let text = match which {
                ratio::PercentPart::Rate if !v.is_integer() => format!("p = {v} ≈ {}%", v.to_decimal_string(2)),
                ratio::PercentPart::Rate => format!("p = {v}%"),
                other => format!("{other} = {}", approx(&v)),
            };
            Output::new(text, json!({ "solved": which.to_string(), "value": render::rational(&v) }))
        }
        MixCmd::Chain { start, end, deltas } => {
            let d = deltas.iter().map(|s| pct(s)).collect::<CliResult<Vec<_>>>()?;
            let s = start.as_deref().map(rat).transpose()?;
            let e = end.as_deref().map(rat).transpose()?;
            let v = ratio::percent_chain(s.as_ref(), e.as_ref(), &d)?;
            let which = if s.is_some() { "final" } else { "start" };
            Output::new(format!("{which} = {}", approx(&v)), json!({ "solved": which, "value": render::rational(&v) }))
        }
        MixCmd::Simple { missing, values } => {
            if *missing {
                let (x1, s1, x2, s) = (rat(&values[0])?, pct(&values[1])?, rat(&values[2])?, pct(&values[3])?);
                let s2 = ratio::mixture_missing_intensity(&x1, &s1, &x2, &s)?;
                Output::new(format!("s2 = {}", approx(&s2)), json!({ "s2": render::rational(&s2) }))
            } else {
                let (s1, s2, s, x) = (pct(&values[0])?, pct(&values[1])?, pct(&values[2])?, rat(&values[3])?);
                let m = ratio::simple_mixture(&s1, &s2, &s, &x)?;
                let mut text = format!("x1 = {}, x2 = {}", approx(&m.x1), approx(&m.x2));
                if m.degenerate {
                    text.push_str("\n(degenerate: both intensities equal the target, any split works)");
                }
                Output::new(
                    text,
                    json!({ "x1": render::rational(&m.x1), "x2": render::rational(&m.x2), "degenerate": m.degenerate }),
                )
            }
        }
        MixCmd::Star { values, target, total } => {
            let v = values.iter().map(|s| pct(s)).collect::<CliResult<Vec<_>>>()?;
            let out = ratio::star_scheme(&v, &pct(target)?, &rat(total)?)?;
            let text = out.iter().map(approx).collect::<Vec<_>>().join(", ");
            Output::new(text, json!({ "amounts": render::rationals(&out) }))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        dispatch(std::iter::once("exacta").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["nt", "gcd", "252", "198"]), (0, "18\n".into(), String::new()));
        let (code, out, err) = run(&["mat", "inverse", "2 -3; -4 6"]);
        assert_eq!((code, out.as_str()), (1, ""));
        assert!(err.contains("singular matrix"));
        assert_eq!(run(&["mat", "det", "1 x"]).0, 2);
        assert_eq!(run(&["nt", "frobnicate"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn negative_literals() {
        assert_eq!(run(&["mat", "det", "-1 2; 3 4"]).1, "-10\n");
        assert_eq!(run(&["nt", "divmod", "-7", "3"]).1, "-7 = 3*-3 + 2\n");
        assert_eq!(run(&["cx", "arith", "-1-i", "mul", "-1+i"]).1, "2\n");
        assert_eq!(run(&["comb", "term", "12", "5", "1", "1/2", "1", "2/3"]).1, "T_5 = 495*x^(20/3)\n");
    }

    #[test]
    fn stdin_placeholder() {
        let (code, out, _) = dispatch_with_stdin(["exacta", "mat", "det", "-"], "7 -4\n3 4\n");
        assert_eq!((code, out.as_str()), (0, "40\n"));
    }

    #[test]
    fn json_flag() {
        let (_, out, _) = run(&["--json", "mix", "split", "198", "1", "2", "3", "5"]);
        assert_eq!(
            out,
            "{\"parts\":[{\"num\":18,\"den\":1},{\"num\":36,\"den\":1},{\"num\":54,\"den\":1},{\"num\":90,\"den\":1}]}\n"
        );
    }
}
