//! Finite magmas as explicit Cayley tables, plus morphism checking and
//! the evaluation of free-magma terms into a table.
//!
//! Carriers are index-based (`0..size`) with a parallel name table;
//! file formats speak names, everything internal speaks indices.

use std::collections::BTreeMap;
use std::fmt;

use crate::term::{parse_atom, Atom, MagmaTerm};

/// A finite carrier together with a total binary operation, stored as
/// an explicit `size x size` table of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMagma {
    name: String,
    element_names: Vec<String>,
    table: Vec<Vec<usize>>,
}

/// Exhaustively determined operation properties. No axiom is assumed;
/// these are measured facts about one table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub commutative: bool,
    pub associative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("element index {index} out of range for magma of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("magma carrier must not be empty")]
    EmptyCarrier,
    #[error("duplicate element name {0:?}")]
    DuplicateElementName(String),
    #[error("unknown element name {0:?}")]
    UnknownElementName(String),
    #[error("table line {line}: {message}")]
    TableFormat { line: usize, message: String },
    #[error("atom {0} has no image under the generator map")]
    UnmappedAtom(Atom),
    #[error("generator map line {line}: {message}")]
    MapFormat { line: usize, message: String },
}

impl FiniteMagma {
    /// Builds a magma from explicit data, checking totality and name
    /// uniqueness.
    pub fn new(
        name: impl Into<String>,
        element_names: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let size = element_names.len();
        if size == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        for (i, n) in element_names.iter().enumerate() {
            if element_names[..i].contains(n) {
                return Err(AlgebraError::DuplicateElementName(n.clone()));
            }
        }
        if table.len() != size {
            return Err(AlgebraError::TableFormat {
                line: 0,
                message: format!("expected {size} rows, found {}", table.len()),
            });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(AlgebraError::TableFormat {
                    line: r + 1,
                    message: format!("expected {size} entries, found {}", row.len()),
                });
            }
            for &entry in row {
                if entry >= size {
                    return Err(AlgebraError::IndexOutOfRange { index: entry, size });
                }
            }
        }
        Ok(FiniteMagma {
            name: name.into(),
            element_names,
            table,
        })
    }

    /// Addition mod `n`, the standard commutative-semigroup example.
    pub fn zn(n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteMagma::new(format!("Z{n}"), names, table)
    }

    /// The constant table sending every pair to element `0`. Every
    /// nonzero element has no factorization at all, which makes this
    /// the simplest source of finite replacement classes.
    pub fn const0(m: usize) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let names = (0..m).map(|i| i.to_string()).collect();
        let table = vec![vec![0; m]; m];
        FiniteMagma::new(format!("const0:{m}"), names, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.element_names.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn element_name(&self, index: usize) -> &str {
        &self.element_names[index]
    }

    pub fn element_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.element_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| AlgebraError::UnknownElementName(name.to_string()))
    }

    /// The binary operation: a bounds-checked table lookup.
    pub fn apply(&self, a: usize, b: usize) -> Result<usize, AlgebraError> {
        let size = self.size();
        for index in [a, b] {
            if index >= size {
                return Err(AlgebraError::IndexOutOfRange { index, size });
            }
        }
        Ok(self.table[a][b])
    }

    pub(crate) fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Exhaustive commutativity and associativity check over all pairs
    /// and triples. O(size^2) + O(size^3); fine for table-sized carriers.
    pub fn classify(&self) -> Classification {
        let m = self.size();
        let mut commutative = true;
        'comm: for a in 0..m {
            for b in 0..m {
                if self.op(a, b) != self.op(b, a) {
                    commutative = false;
                    break 'comm;
                }
            }
        }
        let mut associative = true;
        'assoc: for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        associative = false;
                        break 'assoc;
                    }
                }
            }
        }
        Classification {
            commutative,
            associative,
        }
    }

    /// Loads a Cayley table from text. The first significant line lists
    /// the element names; each following line is one table row, giving
    /// the product of its row element with each column element, by name.
    /// `#` starts a comment line, blank lines are skipped.
    pub fn from_table_text(name: impl Into<String>, text: &str) -> Result<Self, AlgebraError> {
        let mut significant = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (_, header) = significant.next().ok_or(AlgebraError::TableFormat {
            line: 0,
            message: "missing element-name line".into(),
        })?;
        let element_names: Vec<String> = header.split_whitespace().map(String::from).collect();
        let size = element_names.len();

        let probe = FiniteMagma {
            name: String::new(),
            element_names: element_names.clone(),
            table: Vec::new(),
        };
        let mut table = Vec::with_capacity(size);
        for _ in 0..size {
            let (line_no, row_text) = significant.next().ok_or(AlgebraError::TableFormat {
                line: 0,
                message: format!("expected {size} table rows"),
            })?;
            let mut row = Vec::with_capacity(size);
            for token in row_text.split_whitespace() {
                row.push(probe.element_index(token).map_err(|_| {
                    AlgebraError::TableFormat {
                        line: line_no,
                        message: format!("unknown element name {token:?}"),
                    }
                })?);
            }
            if row.len() != size {
                return Err(AlgebraError::TableFormat {
                    line: line_no,
                    message: format!("expected {size} entries, found {}", row.len()),
                });
            }
            table.push(row);
        }
        if let Some((line_no, _)) = significant.next() {
            return Err(AlgebraError::TableFormat {
                line: line_no,
                message: "unexpected extra line".into(),
            });
        }
        FiniteMagma::new(name, element_names, table)
    }
}

impl fmt::Display for FiniteMagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (size {})", self.name, self.size())
    }
}

/// Checks the morphism law `f(ab) = f(a)f(b)` exhaustively over all
/// pairs of `src`. `f[a]` is the image of element `a`; it must be total
/// on the source carrier with images inside the target carrier.
pub fn is_morphism(f: &[usize], src: &FiniteMagma, dst: &FiniteMagma) -> bool {
    assert_eq!(
        f.len(),
        src.size(),
        "map must be total on the source carrier"
    );
    assert!(
        f.iter().all(|&img| img < dst.size()),
        "map image must lie in the target carrier"
    );
    let m = src.size();
    for a in 0..m {
        for b in 0..m {
            if f[src.op(a, b)] != dst.op(f[a], f[b]) {
                return false;
            }
        }
    }
    true
}

/// A mapping from generator atoms into a target magma's carrier; the
/// seed from which term evaluation extends uniquely.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorMap {
    map: BTreeMap<Atom, usize>,
}

impl GeneratorMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, atom: Atom, element: usize) {
        self.map.insert(atom, element);
    }

    pub fn get(&self, atom: &Atom) -> Option<usize> {
        self.map.get(atom).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Loads `atom element-name` lines, resolving names against the
    /// target magma. Same comment and blank-line rules as table files.
    pub fn from_text(text: &str, target: &FiniteMagma) -> Result<Self, AlgebraError> {
        let mut map = GeneratorMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (atom_text, name) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(n), None) => (a, n),
                _ => {
                    return Err(AlgebraError::MapFormat {
                        line: line_no,
                        message: "expected `atom element-name`".into(),
                    })
                }
            };
            let atom = parse_atom(atom_text).map_err(|e| AlgebraError::MapFormat {
                line: line_no,
                message: e.to_string(),
            })?;
            let element = target.element_index(name).map_err(|_| AlgebraError::MapFormat {
                line: line_no,
                message: format!("unknown element name {name:?}"),
            })?;
            if map.map.contains_key(&atom) {
                return Err(AlgebraError::MapFormat {
                    line: line_no,
                    message: format!("atom {atom} mapped twice"),
                });
            }
            map.insert(atom, element);
        }
        Ok(map)
    }
}

/// Evaluates a term in `target` by extending the generator map: a leaf
/// goes to its image, a pair to the product of its factors' values.
/// This is the unique morphism out of the free magma agreeing with `f`
/// on generators.
pub fn eval_universal(
    f: &GeneratorMap,
    target: &FiniteMagma,
    t: &MagmaTerm,
) -> Result<usize, AlgebraError> {
    match t {
        MagmaTerm::Leaf(a) => f.get(a).ok_or_else(|| AlgebraError::UnmappedAtom(a.clone())),
        MagmaTerm::Pair(u, v) => {
            let left = eval_universal(f, target, u)?;
            let right = eval_universal(f, target, v)?;
            Ok(target.op(left, right))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{atom_term, fiber, graft, parse};

    fn sym(s: &str) -> Atom {
        Atom::symbol(s).unwrap()
    }

    #[test]
    fn builtin_tables_spot_checks() {
        let z2 = FiniteMagma::zn(2).unwrap();
        assert_eq!(z2.apply(1, 1).unwrap(), 0);
        let z3 = FiniteMagma::zn(3).unwrap();
        assert_eq!(z3.apply(1, 2).unwrap(), 0);
        let c = FiniteMagma::const0(3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(c.apply(a, b).unwrap(), 0);
            }
        }
        assert!(matches!(
            z2.apply(2, 0),
            Err(AlgebraError::IndexOutOfRange { index: 2, size: 2 })
        ));
    }

    #[test]
    fn classify_builtins_and_a_skewed_table() {
        for n in 2..=5 {
            let zn = FiniteMagma::zn(n).unwrap();
            assert_eq!(
                zn.classify(),
                Classification {
                    commutative: true,
                    associative: true
                },
                "Z{n}"
            );
        }
        assert_eq!(
            FiniteMagma::const0(2).unwrap().classify(),
            Classification {
                commutative: true,
                associative: true
            }
        );
        // left projection: a*b = a. Not commutative, associative.
        let proj = FiniteMagma::new(
            "proj",
            vec!["0".into(), "1".into()],
            vec![vec![0, 0], vec![1, 1]],
        )
        .unwrap();
        let flags = proj.classify();
        assert!(!flags.commutative);
        assert!(flags.associative);
    }

    #[test]
    fn classify_detects_nonassociativity() {
        // 0*0 = 1, everything else 0: (0*0)*1 = 1*1 = 0 vs 0*(0*1) = 0*0 = 1.
        let m = FiniteMagma::new(
            "m",
            vec!["0".into(), "1".into()],
            vec![vec![1, 0], vec![0, 0]],
        )
        .unwrap();
        assert!(!m.classify().associative);
    }

    #[test]
    fn morphism_checks() {
        let z2 = FiniteMagma::zn(2).unwrap();
        assert!(is_morphism(&[0, 1], &z2, &z2)); // identity
        assert!(!is_morphism(&[1, 0], &z2, &z2)); // swap: f(1+1)=f(0)=1 but f(1)+f(1)=0
        let c = FiniteMagma::const0(2).unwrap();
        assert!(is_morphism(&[0, 0], &z2, &c)); // constant-to-0 into the constant table
    }

    #[test]
    fn table_construction_errors() {
        assert!(matches!(
            FiniteMagma::new("bad", vec![], vec![]),
            Err(AlgebraError::EmptyCarrier)
        ));
        assert!(matches!(
            FiniteMagma::new("bad", vec!["a".into(), "a".into()], vec![vec![0; 2]; 2]),
            Err(AlgebraError::DuplicateElementName(_))
        ));
        assert!(matches!(
            FiniteMagma::new("bad", vec!["a".into()], vec![vec![1]]),
            Err(AlgebraError::IndexOutOfRange { index: 1, size: 1 })
        ));
    }

    #[test]
    fn table_file_roundtrip() {
        let text = "\
# mod-2 addition
0 1

0 1
1 0
";
        let m = FiniteMagma::from_table_text("z2file", text).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.apply(1, 1).unwrap(), 0);
        assert_eq!(m.element_name(1), "1");

        let bad = FiniteMagma::from_table_text("bad", "a b\na a\na q\n");
        assert!(matches!(bad, Err(AlgebraError::TableFormat { line: 3, .. })));
    }

    #[test]
    fn generator_map_file() {
        let z2 = FiniteMagma::zn(2).unwrap();
        let map = GeneratorMap::from_text("# all ones\nx 1\ny 1\n<0> 0\n", &z2).unwrap();
        assert_eq!(map.get(&sym("x")), Some(1));
        assert_eq!(map.get(&Atom::tuple(vec![0]).unwrap()), Some(0));
        assert_eq!(map.get(&sym("missing")), None);

        let dup = GeneratorMap::from_text("x 1\nx 0\n", &z2);
        assert!(matches!(dup, Err(AlgebraError::MapFormat { line: 2, .. })));
        let unknown = GeneratorMap::from_text("x 7\n", &z2);
        assert!(matches!(unknown, Err(AlgebraError::MapFormat { line: 1, .. })));
    }

    #[test]
    fn eval_universal_on_leaves_and_pairs() {
        let z2 = FiniteMagma::zn(2).unwrap();
        let mut f = GeneratorMap::new();
        f.insert(sym("x"), 1);
        f.insert(sym("y"), 1);
        f.insert(sym("z"), 1);
        assert_eq!(eval_universal(&f, &z2, &atom_term(sym("x"))).unwrap(), 1);
        // all-ones map: a term with n leaves evaluates to n mod 2
        let t = parse("(x (y z))").unwrap();
        assert_eq!(eval_universal(&f, &z2, &t).unwrap(), 1);
        let t = parse("(x y)").unwrap();
        assert_eq!(eval_universal(&f, &z2, &t).unwrap(), 0);

        let c = FiniteMagma::const0(2).unwrap();
        let mut g = GeneratorMap::new();
        g.insert(sym("x"), 1);
        g.insert(sym("y"), 1);
        let t = parse("(x y)").unwrap();
        assert_eq!(eval_universal(&g, &c, &t).unwrap(), 0);

        let err = eval_universal(&f, &z2, &parse("(x w)").unwrap()).unwrap_err();
        assert_eq!(err, AlgebraError::UnmappedAtom(sym("w")));
    }

    #[test]
    fn all_ones_map_counts_leaves_mod_two() {
        let z2 = FiniteMagma::zn(2).unwrap();
        let mut f = GeneratorMap::new();
        f.insert(sym("a"), 1);
        for n in 1..=6 {
            let atoms = vec![sym("a"); n];
            for t in fiber(&atoms).unwrap() {
                assert_eq!(eval_universal(&f, &z2, &t).unwrap(), n % 2);
            }
        }
    }

    #[test]
    fn morphism_law_exhaustive_small_and_uniqueness() {
        // every term with <= 4 leaves over {x, y}, evaluated into Z3
        let z3 = FiniteMagma::zn(3).unwrap();
        let mut f = GeneratorMap::new();
        f.insert(sym("x"), 1);
        f.insert(sym("y"), 2);

        let mut universe: Vec<MagmaTerm> = Vec::new();
        for n in 1..=4 {
            let mut labeling = vec![0usize; n];
            loop {
                let atoms: Vec<Atom> = labeling
                    .iter()
                    .map(|&b| if b == 0 { sym("x") } else { sym("y") })
                    .collect();
                universe.extend(fiber(&atoms).unwrap());
                // next labeling in base 2
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    labeling[i] += 1;
                    if labeling[i] < 2 {
                        break;
                    }
                    labeling[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        assert_eq!(universe.len(), 2 + 4 + 16 + 80);

        // independently coded fold: explicit-stack post-order evaluation
        let independent = |t: &MagmaTerm| -> usize {
            enum Frame<'a> {
                Visit(&'a MagmaTerm),
                Combine,
            }
            let mut stack = vec![Frame::Visit(t)];
            let mut values: Vec<usize> = Vec::new();
            while let Some(frame) = stack.pop() {
                match frame {
                    Frame::Visit(MagmaTerm::Leaf(a)) => values.push(f.get(a).unwrap()),
                    Frame::Visit(MagmaTerm::Pair(l, r)) => {
                        stack.push(Frame::Combine);
                        stack.push(Frame::Visit(r));
                        stack.push(Frame::Visit(l));
                    }
                    Frame::Combine => {
                        let right = values.pop().unwrap();
                        let left = values.pop().unwrap();
                        values.push(z3.apply(left, right).unwrap());
                    }
                }
            }
            values.pop().unwrap()
        };

        for u in &universe {
            assert_eq!(eval_universal(&f, &z3, u).unwrap(), independent(u));
            for v in &universe {
                let grafted = graft(u.clone(), v.clone());
                let lhs = eval_universal(&f, &z3, &grafted).unwrap();
                let rhs = z3
                    .apply(
                        eval_universal(&f, &z3, u).unwrap(),
                        eval_universal(&f, &z3, v).unwrap(),
                    )
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
