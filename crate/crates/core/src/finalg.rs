//! Binary operations on finite carriers: Cayley tables, algebraic laws and
//! structure classification.

use std::fmt;

use crate::error::{Error, Result};

/// Largest carrier accepted by the table constructors.
pub const MAX_CARRIER: usize = 64;

/// A table cell: an index into the carrier, or a value outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    In(usize),
    Out(String),
}

/// A carrier with a full operation table, rows and columns in carrier order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Magma {
    carrier: Vec<String>,
    table: Vec<Vec<Entry>>,
}

impl Magma {
    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn entry(&self, a: usize, b: usize) -> &Entry {
        &self.table[a][b]
    }

    pub fn label(&self, e: &Entry) -> String {
        match e {
            Entry::In(i) => self.carrier[*i].clone(),
            Entry::Out(s) => s.clone(),
        }
    }

    /// Table rows as labels.
    pub fn rows(&self) -> Vec<Vec<String>> {
        self.table.iter().map(|row| row.iter().map(|e| self.label(e)).collect()).collect()
    }

    fn op(&self, a: usize, b: usize) -> Option<usize> {
        match self.table[a][b] {
            Entry::In(i) => Some(i),
            Entry::Out(_) => None,
        }
    }

    /// Builds a magma from a label grid; unknown labels become unclosed entries.
    pub fn from_labels(carrier: Vec<String>, rows: Vec<Vec<String>>) -> Result<Self> {
        let n = carrier.len();
        if n == 0 || n > MAX_CARRIER {
            return Err(Error::TooLarge(format!("carrier size {n} outside 1..={MAX_CARRIER}")));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("table must be {n}x{n}")));
        }
        for (i, c) in carrier.iter().enumerate() {
            if carrier[..i].contains(c) {
                return Err(Error::OutOfDomain(format!("duplicate carrier element {c}")));
            }
        }
        let table = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| match carrier.iter().position(|c| *c == s) {
                        Some(i) => Entry::In(i),
                        None => Entry::Out(s),
                    })
                    .collect()
            })
            .collect();
        Ok(Magma { carrier, table })
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let width = rows.iter().flatten().chain(&self.carrier).map(|s| s.chars().count()).max().unwrap_or(1);
        let pad = |s: &str| format!("{s:>width$}");
        let header: Vec<String> = self.carrier.iter().map(|c| pad(c)).collect();
        writeln!(f, "{} | {}", pad("*"), header.join(" "))?;
        writeln!(f, "{}-+-{}", "-".repeat(width), "-".repeat(header.join(" ").chars().count()))?;
        for (c, row) in self.carrier.iter().zip(rows) {
            let cells: Vec<String> = row.iter().map(|s| pad(s)).collect();
            writeln!(f, "{} | {}", pad(c), cells.join(" "))?;
        }
        Ok(())
    }
}

/// Tabulates `op` over `carrier`. Results outside the carrier are kept as unclosed entries.
pub fn cayley_table<T, F>(carrier: &[T], op: F) -> Result<Magma>
where
    T: PartialEq + fmt::Display,
    F: Fn(&T, &T) -> T,
{
    let n = carrier.len();
    if n == 0 || n > MAX_CARRIER {
        return Err(Error::TooLarge(format!("carrier size {n} outside 1..={MAX_CARRIER}")));
    }
    let table = carrier
        .iter()
        .map(|a| {
            carrier
                .iter()
                .map(|b| {
                    let c = op(a, b);
                    match carrier.iter().position(|x| *x == c) {
                        Some(i) => Entry::In(i),
                        None => Entry::Out(c.to_string()),
                    }
                })
                .collect()
        })
        .collect();
    let labels = carrier.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::OutOfDomain(format!("duplicate carrier element {l}")));
        }
    }
    Ok(Magma { carrier: labels, table })
}

/// `({0..n-1}, +_n)`.
pub fn modular_add(n: usize) -> Result<Magma> {
    let carrier: Vec<usize> = (0..n).collect();
    cayley_table(&carrier, |a, b| (a + b) % n)
}

/// `({0..n-1}, ·_n)`.
pub fn modular_mul(n: usize) -> Result<Magma> {
    let carrier: Vec<usize> = (0..n).collect();
    cayley_table(&carrier, |a, b| (a * b) % n)
}

/// Parses a carrier line followed by one whitespace-separated row per element.
pub fn parse_table(text: &str) -> Result<Magma> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let split = |l: &str| -> Vec<String> {
        l.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).map(String::from).collect()
    };
    let carrier = split(lines.next().ok_or_else(|| Error::parse(0, "missing carrier line"))?);
    let rows: Vec<Vec<String>> = lines.map(split).collect();
    if rows.len() != carrier.len() {
        return Err(Error::parse(0, format!("expected {} rows, found {}", carrier.len(), rows.len())));
    }
    if let Some(r) = rows.iter().position(|r| r.len() != carrier.len()) {
        return Err(Error::parse(
            0,
            format!("row {} has {} entries, expected {}", r + 1, rows[r].len(), carrier.len()),
        ));
    }
    Magma::from_labels(carrier, rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClass {
    /// The operation leaves the carrier for some pair.
    Unclosed,
    Magma,
    Semigroup,
    Monoid,
    Group,
    AbelianGroup,
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureClass::Unclosed => "not closed",
            StructureClass::Magma => "magma",
            StructureClass::Semigroup => "semigroup",
            StructureClass::Monoid => "monoid",
            StructureClass::Group => "group",
            StructureClass::AbelianGroup => "abelian group",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub closed: bool,
    pub associative: bool,
    pub commutative: bool,
    pub neutral: Option<usize>,
    /// Two-sided inverse of each element, when a neutral element exists.
    pub inverses: Vec<Option<usize>>,
    pub all_invertible: bool,
    pub class: StructureClass,
}

fn two_sided_neutrals(m: &Magma) -> Vec<usize> {
    let n = m.size();
    (0..n).filter(|&e| (0..n).all(|a| m.op(a, e) == Some(a) && m.op(e, a) == Some(a))).collect()
}

pub fn classify_structure(m: &Magma) -> StructureReport {
    let n = m.size();
    let closed = m.table.iter().flatten().all(|e| matches!(e, Entry::In(_)));
    let commutative = (0..n).all(|a| (a..n).all(|b| m.table[a][b] == m.table[b][a]));
    let associative = closed
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = m.op(a, b).unwrap();
                (0..n).all(|c| m.op(ab, c) == m.op(a, m.op(b, c).unwrap()))
            })
        });
    let neutral = two_sided_neutrals(m).first().copied();
    let inverses: Vec<Option<usize>> = match neutral {
        Some(e) => (0..n).map(|a| (0..n).find(|&b| m.op(a, b) == Some(e) && m.op(b, a) == Some(e))).collect(),
        None => vec![None; n],
    };
    let all_invertible = neutral.is_some() && inverses.iter().all(Option::is_some);
    let class = match (closed, associative, neutral.is_some(), all_invertible, commutative) {
        (false, ..) => StructureClass::Unclosed,
        (true, false, ..) => StructureClass::Magma,
        (true, true, false, ..) => StructureClass::Semigroup,
        (true, true, true, false, _) => StructureClass::Monoid,
        (true, true, true, true, false) => StructureClass::Group,
        (true, true, true, true, true) => StructureClass::AbelianGroup,
    };
    StructureReport { closed, associative, commutative, neutral, inverses, all_invertible, class }
}

/// Whether `second` distributes over `first` from both sides.
pub fn check_distributive(first: &Magma, second: &Magma) -> Result<bool> {
    if first.carrier != second.carrier {
        return Err(Error::CarrierMismatch);
    }
    let n = first.size();
    let add = |a: usize, b: usize| first.op(a, b);
    let mul = |a: usize, b: usize| second.op(a, b);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = add(b, c).and_then(|bc| mul(a, bc));
                let left_expanded = mul(a, b).zip(mul(a, c)).and_then(|(x, y)| add(x, y));
                let right = add(b, c).and_then(|bc| mul(bc, a));
                let right_expanded = mul(b, a).zip(mul(c, a)).and_then(|(x, y)| add(x, y));
                if left.is_none() || left != left_expanded || right.is_none() || right != right_expanded {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexn::GaussianRational;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn units() -> Vec<GaussianRational> {
        let (z, o) = (Rational::zero(), Rational::one());
        vec![
            GaussianRational::new(-o.clone(), z.clone()),
            GaussianRational::new(o.clone(), z.clone()),
            GaussianRational::new(z.clone(), o.clone()),
            GaussianRational::new(z, -o),
        ]
    }

    #[test]
    fn fourth_roots_of_unity_table() {
        let m = cayley_table(&units(), |a, b| a * b).unwrap();
        assert_eq!(m.carrier(), ["-1", "1", "i", "-i"]);
        let expected = [["1", "-1", "-i", "i"], ["-1", "1", "i", "-i"], ["-i", "i", "-1", "1"], ["i", "-i", "1", "-1"]];
        assert_eq!(m.rows(), expected.map(|r| r.map(String::from).to_vec()).to_vec());
        let r = classify_structure(&m);
        assert_eq!(r.class, StructureClass::AbelianGroup);
        assert_eq!(r.neutral, Some(1));
        assert_eq!(r.inverses, vec![Some(0), Some(1), Some(3), Some(2)]);
    }

    #[test]
    fn cyclic_group_six() {
        let m = modular_add(6).unwrap();
        for (i, row) in m.rows().iter().enumerate() {
            let expected: Vec<String> = (0..6).map(|j| ((i + j) % 6).to_string()).collect();
            assert_eq!(row, &expected);
        }
        assert_eq!(classify_structure(&m).class, StructureClass::AbelianGroup);
    }

    #[test]
    fn max_monoid() {
        let m = cayley_table(&[1, 2], |a, b| *a.max(b)).unwrap();
        let r = classify_structure(&m);
        assert_eq!(r.class, StructureClass::Monoid);
        assert!(r.commutative);
        assert_eq!(r.neutral, Some(0));
        assert_eq!(r.inverses, vec![Some(0), None]);
    }

    #[test]
    fn singleton_and_unclosed() {
        let m = cayley_table(&["e"], |_, _| "e").unwrap();
        assert_eq!(m.rows(), vec![vec!["e".to_string()]]);
        assert_eq!(classify_structure(&m).class, StructureClass::AbelianGroup);

        let m = cayley_table(&[1, 2, 3], |a, b| a + b).unwrap();
        assert_eq!(m.entry(2, 2), &Entry::Out("6".into()));
        let r = classify_structure(&m);
        assert!(!r.closed);
        assert_eq!(r.class, StructureClass::Unclosed);

        // subtraction mod 3: closed, not associative
        let m = cayley_table(&[0i64, 1, 2], |a, b| (a - b).rem_euclid(3)).unwrap();
        assert_eq!(classify_structure(&m).class, StructureClass::Magma);

        // left-zero semigroup a*b = a
        let m = cayley_table(&[0, 1], |a, _| *a).unwrap();
        assert_eq!(classify_structure(&m).class, StructureClass::Semigroup);

        assert!(cayley_table::<usize, _>(&[], |a, _| *a).is_err());
        assert!(modular_add(65).is_err());
    }

    #[test]
    fn nonabelian_group() {
        // S3 as permutations of [0,1,2], composition (p∘q)(i) = p[q[i]]
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let labels: Vec<String> = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        let rows = perms
            .iter()
            .map(|p| perms.iter().map(|q| format!("{}{}{}", p[q[0]], p[q[1]], p[q[2]])).collect())
            .collect();
        let m = Magma::from_labels(labels, rows).unwrap();
        let r = classify_structure(&m);
        assert_eq!(r.class, StructureClass::Group);
        assert!(!r.commutative);
    }

    #[test]
    fn distributivity() {
        assert!(check_distributive(&modular_add(6).unwrap(), &modular_mul(6).unwrap()).unwrap());
        let max = cayley_table(&[1, 2, 3], |a, b| *a.max(b)).unwrap();
        let min = cayley_table(&[1, 2, 3], |a, b| *a.min(b)).unwrap();
        assert!(check_distributive(&max, &min).unwrap());
        // + does not distribute over ·
        assert!(!check_distributive(&modular_mul(2).unwrap(), &modular_add(2).unwrap()).unwrap());
        let planted = parse_table("a b\na a\na b").unwrap();
        let other = parse_table("a b\nb b\nb a").unwrap();
        assert!(!check_distributive(&other, &planted).unwrap());
        assert_eq!(check_distributive(&modular_add(2).unwrap(), &modular_add(3).unwrap()), Err(Error::CarrierMismatch));
    }

    #[test]
    fn table_parsing() {
        let m = parse_table("0 1 2\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(m, modular_add(3).unwrap());
        assert!(parse_table("0 1\n0 1").is_err());
        assert!(parse_table("0 1\n0 1\n1").is_err());
        assert!(parse_table("").is_err());
    }

    #[test]
    fn display() {
        let m = modular_add(2).unwrap();
        assert_eq!(m.to_string(), "* | 0 1\n--+----\n0 | 0 1\n1 | 1 0\n");
    }

    #[test]
    fn neutral_is_unique_when_present() {
        for n in 1..=12 {
            for m in [modular_add(n).unwrap(), modular_mul(n).unwrap()] {
                assert!(two_sided_neutrals(&m).len() <= 1);
                let r = classify_structure(&m);
                if matches!(r.class, StructureClass::Group | StructureClass::AbelianGroup) {
                    let e = r.neutral.unwrap();
                    for a in 0..m.size() {
                        let inv: Vec<usize> =
                            (0..m.size()).filter(|&b| m.op(a, b) == Some(e) && m.op(b, a) == Some(e)).collect();
                        assert_eq!(inv.len(), 1);
                    }
                }
            }
        }
        // Z_n under multiplication is never a group for n > 1 (0 has no inverse)
        assert_eq!(classify_structure(&modular_mul(5).unwrap()).class, StructureClass::Monoid);
    }

    // Operations on infinite carriers, checked on samples.
    proptest! {
        #[test]
        fn shifted_addition(x in -10_000i64..10_000, y in -10_000i64..10_000, z in -10_000i64..10_000) {
            let star = |a: i64, b: i64| a + b - 4;
            prop_assert_eq!(star(x, 4), x);
            prop_assert_eq!(star(4, x), x);
            prop_assert_eq!(star(x, -x + 8), 4);
            prop_assert_eq!(star(star(x, y), z), star(x, star(y, z)));
            prop_assert_eq!(star(x, y), star(y, x));
        }

        #[test]
        fn plus_one_addition(x in -10_000i64..10_000, y in -10_000i64..10_000) {
            let op = |a: i64, b: i64| a + b + 1;
            prop_assert_eq!(op(x, -1), x);
            prop_assert_eq!(op(x, -x - 2), -1);
            prop_assert_eq!(op(x, y), op(y, x));
        }

        #[test]
        fn rational_circle_product(n in -500i64..500, d in 1i64..50, m in -500i64..500, e in 1i64..50) {
            let x = Rational::frac(n, d);
            let y = Rational::frac(m, e);
            let odot = |a: &Rational, b: &Rational| a * b + a + b;
            prop_assert_eq!(odot(&x, &Rational::zero()), x.clone());
            prop_assert_eq!(odot(&x, &y), odot(&y, &x));
            let minus_one = -Rational::one();
            prop_assume!(x != minus_one);
            let inv = -(&x / &(&x + &Rational::one()));
            prop_assert_eq!(odot(&x, &inv), Rational::zero());
        }
    }
}
