//! Finite sets, binary relations and mappings between finite sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Int;

/// A set element: an integer or a symbol. One set never mixes the two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Int(Int),
    Sym(String),
}

impl Atom {
    pub fn int(n: i64) -> Self {
        Atom::Int(Int::from(n))
    }

    pub fn sym(s: &str) -> Self {
        Atom::Sym(s.to_string())
    }

    fn same_kind(&self, other: &Atom) -> bool {
        matches!((self, other), (Atom::Int(_), Atom::Int(_)) | (Atom::Sym(_), Atom::Sym(_)))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(n) => write!(f, "{n}"),
            Atom::Sym(s) => f.write_str(s),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(n) = s.parse::<Int>() {
            return Ok(Atom::Int(n));
        }
        let mut chars = s.chars();
        match chars.next() {
            Some(c) if c.is_alphabetic() || c == '_' => {}
            _ => return Err(Error::parse(0, format!("invalid set element '{s}'"))),
        }
        if chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
            Ok(Atom::Sym(s.to_string()))
        } else {
            Err(Error::parse(0, format!("invalid set element '{s}'")))
        }
    }
}

impl From<i64> for Atom {
    fn from(n: i64) -> Self {
        Atom::int(n)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::sym(s)
    }
}

/// Duplicate-free, sorted, homogeneous finite set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinSet {
    elems: Vec<Atom>,
}

impl FinSet {
    pub fn new<I, T>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<Atom>,
    {
        let set: BTreeSet<Atom> = items.into_iter().map(Into::into).collect();
        let elems: Vec<Atom> = set.into_iter().collect();
        if let Some(first) = elems.first() {
            if elems.iter().any(|e| !e.same_kind(first)) {
                return Err(Error::MixedAtoms);
            }
        }
        Ok(FinSet { elems })
    }

    pub fn empty() -> Self {
        FinSet::default()
    }

    /// `{lo, lo+1, ..., hi}`.
    pub fn range(lo: i64, hi: i64) -> Self {
        FinSet { elems: (lo..=hi).map(Atom::int).collect() }
    }

    pub fn elems(&self) -> &[Atom] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.elems.binary_search(a).is_ok()
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.elems.iter().all(|e| other.contains(e))
    }

    fn from_sorted(elems: Vec<Atom>) -> Self {
        FinSet { elems }
    }

    fn compatible(&self, other: &FinSet) -> Result<()> {
        match (self.elems.first(), other.elems.first()) {
            (Some(a), Some(b)) if !a.same_kind(b) => Err(Error::MixedAtoms),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Set literal `{1, 2, 3}` or `{a, b}`; `{}` is the empty set.
impl FromStr for FinSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_braces(s)?;
        if inner.trim().is_empty() {
            return Ok(FinSet::empty());
        }
        let atoms = inner.split(',').map(str::parse::<Atom>).collect::<Result<Vec<_>>>()?;
        FinSet::new(atoms)
    }
}

fn strip_braces(s: &str) -> Result<&str> {
    let t = s.trim();
    t.strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::parse(0, "expected a literal enclosed in braces"))
}

/// Parses a pair list such as `{(1,2), (2,3)}`.
/// Braces around the list are optional.
pub fn parse_pairs(s: &str) -> Result<Vec<(Atom, Atom)>> {
    let t = s.trim();
    let inner = if t.starts_with('{') { strip_braces(t)?.trim() } else { t };
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| Error::parse(0, "expected '('"))?;
        if !rest[..open].trim().trim_matches(',').trim().is_empty() {
            return Err(Error::parse(0, "unexpected text between pairs"));
        }
        let close = rest[open..].find(')').ok_or_else(|| Error::parse(0, "expected ')'"))? + open;
        let body = &rest[open + 1..close];
        let (a, b) = body.split_once(',').ok_or_else(|| Error::parse(0, "pair needs two components"))?;
        out.push((a.parse()?, b.parse()?));
        rest = rest[close + 1..].trim_start().trim_start_matches(',').trim_start();
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersect,
    Diff,
    SymDiff,
}

impl FromStr for SetOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "union" => Ok(SetOp::Union),
            "intersect" => Ok(SetOp::Intersect),
            "diff" => Ok(SetOp::Diff),
            "symdiff" => Ok(SetOp::SymDiff),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

pub fn set_op(a: &FinSet, b: &FinSet, op: SetOp) -> Result<FinSet> {
    a.compatible(b)?;
    let keep = |in_a: bool, in_b: bool| match op {
        SetOp::Union => in_a || in_b,
        SetOp::Intersect => in_a && in_b,
        SetOp::Diff => in_a && !in_b,
        SetOp::SymDiff => in_a != in_b,
    };
    let all: BTreeSet<&Atom> = a.elems.iter().chain(&b.elems).collect();
    Ok(FinSet::from_sorted(all.into_iter().filter(|e| keep(a.contains(e), b.contains(e))).cloned().collect()))
}

pub fn complement(a: &FinSet, universe: &FinSet) -> Result<FinSet> {
    if !a.is_subset(universe) {
        return Err(Error::NotASubset);
    }
    set_op(universe, a, SetOp::Diff)
}

/// All subsets, ordered by size and then by element position.
pub fn powerset(a: &FinSet) -> Result<Vec<FinSet>> {
    let n = a.len();
    if n > 20 {
        return Err(Error::TooLarge(format!("power set of a {n}-element set")));
    }
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    let key = |m: &u32| {
        let idx: Vec<usize> = (0..n).filter(|i| m & (1 << i) != 0).collect();
        (idx.len(), idx)
    };
    masks.sort_by_cached_key(key);
    Ok(masks
        .into_iter()
        .map(|m| FinSet::from_sorted((0..n).filter(|i| m & (1 << i) != 0).map(|i| a.elems[i].clone()).collect()))
        .collect())
}

pub fn cartesian(a: &FinSet, b: &FinSet) -> Vec<(Atom, Atom)> {
    a.elems.iter().flat_map(|x| b.elems.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

/// Region counts of a three-set Venn diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VennCounts {
    pub only_a: i64,
    pub only_b: i64,
    pub only_c: i64,
    pub ab_only: i64,
    pub bc_only: i64,
    pub ac_only: i64,
    pub abc: i64,
    /// `|C|`, the cardinality recovered from the union size.
    pub c: i64,
}

impl VennCounts {
    pub fn total(&self) -> i64 {
        self.only_a + self.only_b + self.only_c + self.ab_only + self.bc_only + self.ac_only + self.abc
    }
}

/// Recovers `|C|` and every region from the union size, `|A|`, `|B|` and
/// the pairwise and triple intersections.
pub fn three_set_counts(total: i64, a: i64, b: i64, ab: i64, bc: i64, ac: i64, abc: i64) -> Result<VennCounts> {
    if [total, a, b, ab, bc, ac, abc].iter().any(|&v| v < 0) {
        return Err(Error::InconsistentCounts("negative input".into()));
    }
    let c = total - a - b + ab + bc + ac - abc;
    let counts = VennCounts {
        abc,
        ab_only: ab - abc,
        bc_only: bc - abc,
        ac_only: ac - abc,
        only_a: a - ab - ac + abc,
        only_b: b - ab - bc + abc,
        only_c: c - bc - ac + abc,
        c,
    };
    let regions = [
        ("A only", counts.only_a),
        ("B only", counts.only_b),
        ("C only", counts.only_c),
        ("A∩B only", counts.ab_only),
        ("B∩C only", counts.bc_only),
        ("A∩C only", counts.ac_only),
    ];
    if let Some((name, v)) = regions.iter().find(|(_, v)| *v < 0) {
        return Err(Error::InconsistentCounts(format!("region {name} would hold {v}")));
    }
    Ok(counts)
}

/// `|A ∪ B ∪ C|` by inclusion-exclusion.
pub fn venn3_union(a: i64, b: i64, c: i64, ab: i64, bc: i64, ac: i64, abc: i64) -> Result<i64> {
    let total = a + b + c - ab - bc - ac + abc;
    three_set_counts(total, a, b, ab, bc, ac, abc)?;
    Ok(total)
}

/// An extensional relation `ρ ⊆ source × target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    source: FinSet,
    target: FinSet,
    pairs: BTreeSet<(Atom, Atom)>,
}

impl Relation {
    pub fn new<I, A, B>(source: FinSet, target: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Atom>,
        B: Into<Atom>,
    {
        let pairs: BTreeSet<(Atom, Atom)> = pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        for (a, b) in &pairs {
            if !source.contains(a) || !target.contains(b) {
                return Err(Error::DomainMismatch(format!("pair ({a}, {b}) lies outside the declared sets")));
            }
        }
        Ok(Relation { source, target, pairs })
    }

    /// Endorelation on `set`.
    pub fn on<I, A, B>(set: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Atom>,
        B: Into<Atom>,
    {
        Relation::new(set.clone(), set, pairs)
    }

    /// Builds `{(a, b) : pred(a, b)}` over `source × target`.
    pub fn from_predicate(source: FinSet, target: FinSet, pred: impl Fn(&Atom, &Atom) -> bool) -> Self {
        let pairs = cartesian(&source, &target).into_iter().filter(|(a, b)| pred(a, b)).collect();
        Relation { source, target, pairs }
    }

    pub fn identity(set: &FinSet) -> Self {
        Relation::from_predicate(set.clone(), set.clone(), |a, b| a == b)
    }

    pub fn source(&self) -> &FinSet {
        &self.source
    }

    pub fn target(&self) -> &FinSet {
        &self.target
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(Atom, Atom)> {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn related(&self, a: &Atom, b: &Atom) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    /// Domain `D(ρ)`: first components that occur.
    pub fn domain(&self) -> FinSet {
        FinSet::from_sorted(self.pairs.iter().map(|(a, _)| a.clone()).collect::<BTreeSet<_>>().into_iter().collect())
    }

    /// Range `R(ρ)`: second components that occur.
    pub fn range(&self) -> FinSet {
        FinSet::from_sorted(self.pairs.iter().map(|(_, b)| b.clone()).collect::<BTreeSet<_>>().into_iter().collect())
    }

    fn require_endo(&self) -> Result<&FinSet> {
        if self.source != self.target {
            return Err(Error::NotEndorelation);
        }
        Ok(&self.source)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

pub fn rel_inverse(rho: &Relation) -> Relation {
    Relation {
        source: rho.target.clone(),
        target: rho.source.clone(),
        pairs: rho.pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
    }
}

/// Composition `r∘ρ` for `ρ: A→B`, `r: B→C`: `a (rρ) c` iff some `x` has `a ρ x` and `x r c`.
pub fn rel_compose(rho: &Relation, r: &Relation) -> Result<Relation> {
    if rho.target != r.source {
        return Err(Error::DomainMismatch("target of the first relation differs from source of the second".into()));
    }
    let mut by_first: BTreeMap<&Atom, Vec<&Atom>> = BTreeMap::new();
    for (x, c) in &r.pairs {
        by_first.entry(x).or_default().push(c);
    }
    let pairs = rho
        .pairs
        .iter()
        .flat_map(|(a, x)| by_first.get(x).into_iter().flatten().map(move |c| (a.clone(), (*c).clone())))
        .collect();
    Ok(Relation { source: rho.source.clone(), target: r.target.clone(), pairs })
}

/// Section `ρ_a = {b : (a, b) ∈ ρ}`.
pub fn rel_section(rho: &Relation, a: &Atom) -> Result<FinSet> {
    if !rho.source.contains(a) {
        return Err(Error::DomainMismatch(format!("{a} is not in the source set")));
    }
    Ok(FinSet::from_sorted(rho.pairs.iter().filter(|(x, _)| x == a).map(|(_, b)| b.clone()).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelProps {
    pub reflexive: bool,
    pub antireflexive: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
}

pub fn rel_properties(rho: &Relation) -> Result<RelProps> {
    let set = rho.require_endo()?;
    let reflexive = set.elems.iter().all(|a| rho.related(a, a));
    let antireflexive = set.elems.iter().all(|a| !rho.related(a, a));
    let symmetric = rho.pairs.iter().all(|(a, b)| rho.related(b, a));
    let antisymmetric = rho.pairs.iter().all(|(a, b)| a == b || !rho.related(b, a));
    let transitive =
        rho.pairs.iter().all(|(a, b)| rho.pairs.iter().filter(|(x, _)| x == b).all(|(_, c)| rho.related(a, c)));
    Ok(RelProps { reflexive, antireflexive, symmetric, antisymmetric, transitive })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub is_equivalence: bool,
    /// Classes ordered by their least element; empty unless `is_equivalence`.
    pub classes: Vec<FinSet>,
}

impl EquivalenceReport {
    /// The quotient set `A|ρ`: the set of classes.
    pub fn quotient(&self) -> &[FinSet] {
        &self.classes
    }
}

pub fn equivalence_analysis(rho: &Relation) -> Result<EquivalenceReport> {
    let set = rho.require_endo()?;
    let p = rel_properties(rho)?;
    let is_equivalence = p.reflexive && p.symmetric && p.transitive;
    let mut classes: Vec<FinSet> = Vec::new();
    if is_equivalence {
        for a in &set.elems {
            if classes.iter().any(|c| c.contains(a)) {
                continue;
            }
            classes.push(rel_section(rho, a)?);
        }
    }
    Ok(EquivalenceReport { is_equivalence, classes })
}

/// Equivalence classes of an equivalence relation.
pub fn factor_set(rho: &Relation) -> Result<Vec<FinSet>> {
    let report = equivalence_analysis(rho)?;
    if !report.is_equivalence {
        return Err(Error::OutOfDomain("relation is not an equivalence".into()));
    }
    Ok(report.classes)
}

pub fn is_partial_order(rho: &Relation) -> Result<bool> {
    let p = rel_properties(rho)?;
    Ok(p.reflexive && p.antisymmetric && p.transitive)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FnReport {
    pub is_function: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

/// Every source element has exactly one image; injectivity and
/// surjectivity are only reported for functions.
pub fn fn_analysis(f: &Relation) -> FnReport {
    let is_function = f.source.elems.iter().all(|a| f.pairs.iter().filter(|(x, _)| x == a).count() == 1);
    if !is_function {
        return FnReport::default();
    }
    let images: Vec<&Atom> = f.pairs.iter().map(|(_, b)| b).collect();
    let distinct: BTreeSet<&Atom> = images.iter().copied().collect();
    let injective = distinct.len() == images.len();
    let surjective = f.target.elems.iter().all(|b| distinct.contains(b));
    FnReport { is_function, injective, surjective, bijective: injective && surjective }
}

/// Image of `x` under a function.
pub fn apply(f: &Relation, x: &Atom) -> Option<Atom> {
    f.pairs.iter().find(|(a, _)| a == x).map(|(_, b)| b.clone())
}

/// `h = g∘f`, `h(x) = g(f(x))`.
pub fn fn_compose(f: &Relation, g: &Relation) -> Result<Relation> {
    if !fn_analysis(f).is_function || !fn_analysis(g).is_function {
        return Err(Error::DomainMismatch("both arguments must be functions".into()));
    }
    rel_compose(f, g)
}

pub fn fn_inverse(f: &Relation) -> Result<Relation> {
    if !fn_analysis(f).bijective {
        return Err(Error::NotBijective);
    }
    Ok(rel_inverse(f))
}
