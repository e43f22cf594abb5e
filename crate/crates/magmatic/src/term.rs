//! Free-magma terms: fully parenthesized binary combinations of atoms.
//!
//! A term is a finite binary tree whose leaves carry atoms. Grafting two
//! terms concatenates them under one new bracket pair; nothing is ever
//! simplified, so `(x (y z))` and `((x y) z)` are distinct values even when
//! all three leaves coincide. The text form used by [`parse`] and
//! [`MagmaTerm`]'s `Display` impl is
//!
//! ```text
//! term  := atom | "(" term " " term ")"
//! atom  := symbol | tuple
//! symbol:= [A-Za-z_][A-Za-z0-9_]*
//! tuple := "<" index ("," index)* ">"
//! ```
//!
//! Canonical output uses exactly one space between factors and no
//! surrounding whitespace. Extra ASCII spaces between tokens are tolerated
//! on input and normalized away.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

/// Largest leaf count accepted by [`enumerate_shapes`] and [`fiber`]
/// unless a caller supplies its own limit. C_11 = 58786 shapes is the
/// most this allows in memory at once.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// A generator: either an opaque symbol or a coordinate tuple indexing
/// into the carriers of a product of component magmas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Symbol(String),
    Tuple(Vec<usize>),
}

impl Atom {
    /// Builds a symbol atom. Labels are nonempty and drawn from
    /// `[A-Za-z_][A-Za-z0-9_]*` so that leaf strings decompose uniquely.
    pub fn symbol(label: impl Into<String>) -> Result<Atom, TermError> {
        let label = label.into();
        if is_valid_symbol(&label) {
            Ok(Atom::Symbol(label))
        } else {
            Err(TermError::InvalidSymbol(label))
        }
    }

    /// Builds a tuple atom from component element indices.
    pub fn tuple(coords: Vec<usize>) -> Result<Atom, TermError> {
        if coords.is_empty() {
            return Err(TermError::EmptyTuple);
        }
        Ok(Atom::Tuple(coords))
    }

    pub fn as_tuple(&self) -> Option<&[usize]> {
        match self {
            Atom::Tuple(coords) => Some(coords),
            Atom::Symbol(_) => None,
        }
    }
}

fn is_valid_symbol(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Symbol(label) => f.write_str(label),
            Atom::Tuple(coords) => {
                write!(f, "<")?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ">")
            }
        }
    }
}

/// An element of the free magma over some atom set: a binary tree with
/// atom-labeled leaves. A term with `n` leaves has exactly `n - 1`
/// internal nodes, one per bracket pair of its text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MagmaTerm {
    Leaf(Atom),
    Pair(Box<MagmaTerm>, Box<MagmaTerm>),
}

/// Wraps an atom as the one-leaf term denoting itself.
pub fn atom_term(a: Atom) -> MagmaTerm {
    MagmaTerm::Leaf(a)
}

/// The free-magma operation: concatenates two terms under one new
/// bracket pair. Never simplifies.
pub fn graft(u: MagmaTerm, v: MagmaTerm) -> MagmaTerm {
    MagmaTerm::Pair(Box::new(u), Box::new(v))
}

impl MagmaTerm {
    pub fn is_leaf(&self) -> bool {
        matches!(self, MagmaTerm::Leaf(_))
    }

    pub fn as_leaf(&self) -> Option<&Atom> {
        match self {
            MagmaTerm::Leaf(a) => Some(a),
            MagmaTerm::Pair(..) => None,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            MagmaTerm::Leaf(_) => 1,
            MagmaTerm::Pair(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Number of internal nodes, i.e. bracket pairs. Always one less
    /// than the leaf count.
    pub fn internal_count(&self) -> usize {
        match self {
            MagmaTerm::Leaf(_) => 0,
            MagmaTerm::Pair(l, r) => 1 + l.internal_count() + r.internal_count(),
        }
    }

    /// Left-to-right leaf sequence; entry `m` (0-based) is the `m+1`-st
    /// generator of the term's leaf string.
    pub fn leaves(&self) -> Vec<&Atom> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            MagmaTerm::Leaf(a) => out.push(a),
            MagmaTerm::Pair(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// The unique decomposition of a composite term into its two
    /// factors. One-leaf terms have no split.
    pub fn top_split(&self) -> Result<(&MagmaTerm, &MagmaTerm), TermError> {
        match self {
            MagmaTerm::Pair(l, r) => Ok((l, r)),
            MagmaTerm::Leaf(_) => Err(TermError::NotComposite),
        }
    }

    /// The bracket skeleton: this term with every leaf payload erased.
    pub fn shape(&self) -> Shape {
        match self {
            MagmaTerm::Leaf(_) => Shape::Leaf,
            MagmaTerm::Pair(l, r) => Shape::Pair(Box::new(l.shape()), Box::new(r.shape())),
        }
    }
}

impl fmt::Display for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaTerm::Leaf(a) => write!(f, "{a}"),
            MagmaTerm::Pair(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// Terms are totally ordered by leaf count, then by canonical text.
/// This is the order used to pick class representatives and to make
/// explorations deterministic.
impl Ord for MagmaTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaf_count()
            .cmp(&other.leaf_count())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl PartialOrd for MagmaTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for MagmaTerm {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// A bracket skeleton: a term with anonymous leaves. Two terms have
/// equal shape exactly when their bracket structures coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Leaf,
    Pair(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Pair(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Rebuilds a term by filling this skeleton's leaves from `atoms`,
    /// left to right.
    pub fn with_leaves(&self, atoms: &[Atom]) -> Result<MagmaTerm, TermError> {
        if atoms.len() != self.leaf_count() {
            return Err(TermError::LeafCountMismatch {
                expected: self.leaf_count(),
                got: atoms.len(),
            });
        }
        let mut rest = atoms;
        Ok(self.fill(&mut rest))
    }

    fn fill(&self, atoms: &mut &[Atom]) -> MagmaTerm {
        match self {
            Shape::Leaf => {
                let (first, rest) = atoms.split_first().expect("length checked");
                *atoms = rest;
                MagmaTerm::Leaf(first.clone())
            }
            Shape::Pair(l, r) => {
                let left = l.fill(atoms);
                let right = r.fill(atoms);
                graft(left, right)
            }
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Leaf => f.write_str("\u{00b7}"),
            Shape::Pair(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// Errors from term construction, parsing, and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("{kind} at offset {offset}")]
    Syntax { offset: usize, kind: SyntaxKind },
    #[error("term is a single atom and has no top-level split")]
    NotComposite,
    #[error("enumeration of {requested}-leaf terms exceeds the configured limit of {limit}")]
    LimitExceeded { requested: usize, limit: usize },
    #[error("invalid symbol label {0:?}")]
    InvalidSymbol(String),
    #[error("tuple atoms need at least one coordinate")]
    EmptyTuple,
    #[error("leaf count 0 is not a term")]
    ZeroLeaves,
    #[error("shape has {expected} leaves but {got} atoms were supplied")]
    LeafCountMismatch { expected: usize, got: usize },
}

/// What went wrong during a parse, located by byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntaxKind {
    EmptyInput,
    UnmatchedOpen,
    UnmatchedClose,
    /// A bracket pair enclosing a number of factors other than two.
    FactorCount(usize),
    InvalidAtom,
    TrailingInput,
}

impl fmt::Display for SyntaxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxKind::EmptyInput => f.write_str("empty input"),
            SyntaxKind::UnmatchedOpen => f.write_str("unmatched '('"),
            SyntaxKind::UnmatchedClose => f.write_str("unmatched ')'"),
            SyntaxKind::FactorCount(n) => {
                let noun = if *n == 1 { "factor" } else { "factors" };
                write!(f, "bracket pair encloses {n} {noun}")
            }
            SyntaxKind::InvalidAtom => f.write_str("invalid atom"),
            SyntaxKind::TrailingInput => f.write_str("unexpected trailing input"),
        }
    }
}

impl TermError {
    /// Byte offset of a syntax error, if this is one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            TermError::Syntax { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, offset: usize, kind: SyntaxKind) -> TermError {
        TermError::Syntax { offset, kind }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_spaces(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.peek(), Some(b' ')) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn skip_outer_whitespace(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MagmaTerm, TermError> {
        match self.peek() {
            Some(b'(') => self.pair(),
            Some(b'<') => self.tuple_atom().map(MagmaTerm::Leaf),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                self.symbol_atom().map(MagmaTerm::Leaf)
            }
            Some(b')') => Err(self.err(self.pos, SyntaxKind::UnmatchedClose)),
            Some(_) => Err(self.err(self.pos, SyntaxKind::InvalidAtom)),
            None => Err(self.err(self.pos, SyntaxKind::UnmatchedOpen)),
        }
    }

    fn pair(&mut self) -> Result<MagmaTerm, TermError> {
        let open = self.pos;
        self.pos += 1; // '('
        let mut factors = Vec::new();
        loop {
            self.skip_spaces();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                None => return Err(self.err(open, SyntaxKind::UnmatchedOpen)),
                Some(_) => {
                    if factors.len() >= 3 {
                        // Already over; keep the offset of the offending pair.
                        return Err(self.err(open, SyntaxKind::FactorCount(factors.len() + 1)));
                    }
                    factors.push(self.term()?);
                }
            }
        }
        if factors.len() != 2 {
            return Err(self.err(open, SyntaxKind::FactorCount(factors.len())));
        }
        let right = factors.pop().expect("two factors");
        let left = factors.pop().expect("two factors");
        Ok(graft(left, right))
    }

    fn symbol_atom(&mut self) -> Result<Atom, TermError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let label = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii run");
        Atom::symbol(label).map_err(|_| self.err(start, SyntaxKind::InvalidAtom))
    }

    fn tuple_atom(&mut self) -> Result<Atom, TermError> {
        let start = self.pos;
        self.pos += 1; // '<'
        let mut coords = Vec::new();
        loop {
            let digits_start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == digits_start {
                return Err(self.err(start, SyntaxKind::InvalidAtom));
            }
            let text = std::str::from_utf8(&self.bytes[digits_start..self.pos]).expect("digits");
            let index: usize = text
                .parse()
                .map_err(|_| self.err(start, SyntaxKind::InvalidAtom))?;
            coords.push(index);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'>') => {
                    self.pos += 1;
                    return Ok(Atom::Tuple(coords));
                }
                _ => return Err(self.err(start, SyntaxKind::InvalidAtom)),
            }
        }
    }
}

/// Parses the text form of a term. Inverse of the `Display` impl:
/// `parse(&t.to_string()) == Ok(t)` for every term `t`, and parsing a
/// valid input followed by formatting normalizes its whitespace.
pub fn parse(input: &str) -> Result<MagmaTerm, TermError> {
    let mut p = Parser::new(input);
    p.skip_outer_whitespace();
    if p.peek().is_none() {
        return Err(TermError::Syntax {
            offset: 0,
            kind: SyntaxKind::EmptyInput,
        });
    }
    let term = p.term()?;
    p.skip_outer_whitespace();
    if p.peek().is_some() {
        return Err(TermError::Syntax {
            offset: p.pos,
            kind: SyntaxKind::TrailingInput,
        });
    }
    Ok(term)
}

/// Parses a single atom (no brackets), as used in generator-map files.
pub fn parse_atom(input: &str) -> Result<Atom, TermError> {
    match parse(input)? {
        MagmaTerm::Leaf(a) => Ok(a),
        MagmaTerm::Pair(..) => Err(TermError::Syntax {
            offset: 0,
            kind: SyntaxKind::InvalidAtom,
        }),
    }
}

/// All bracket skeletons with `n` leaves, using the default size limit.
///
/// The order is fixed: skeletons are listed by ascending left-factor
/// leaf count, recursing left before right. The result has length
/// `catalan(n - 1)`.
pub fn enumerate_shapes(n: usize) -> Result<Vec<Shape>, TermError> {
    enumerate_shapes_capped(n, DEFAULT_ENUMERATION_LIMIT)
}

/// [`enumerate_shapes`] with an explicit size limit.
pub fn enumerate_shapes_capped(n: usize, limit: usize) -> Result<Vec<Shape>, TermError> {
    if n == 0 {
        return Err(TermError::ZeroLeaves);
    }
    if n > limit {
        return Err(TermError::LimitExceeded {
            requested: n,
            limit,
        });
    }
    let mut by_size: Vec<Vec<Shape>> = vec![Vec::new(), vec![Shape::Leaf]];
    for m in 2..=n {
        let mut row = Vec::new();
        for p in 1..m {
            for left in &by_size[p] {
                for right in &by_size[m - p] {
                    row.push(Shape::Pair(Box::new(left.clone()), Box::new(right.clone())));
                }
            }
        }
        by_size.push(row);
    }
    Ok(by_size.swap_remove(n))
}

/// Exact Catalan numbers via the convolution recurrence
/// `C_{k+1} = sum_i C_i * C_{k-i}`.
pub fn catalan(n: usize) -> BigUint {
    let mut cats: Vec<BigUint> = Vec::with_capacity(n + 1);
    cats.push(BigUint::from(1u32));
    for k in 1..=n {
        let mut total = BigUint::from(0u32);
        for i in 0..k {
            total += &cats[i] * &cats[k - 1 - i];
        }
        cats.push(total);
    }
    cats.pop().expect("nonempty")
}

/// All terms with the given leaf string, in [`enumerate_shapes`] order.
/// There are `catalan(n - 1)` of them for `n` atoms.
pub fn fiber(atoms: &[Atom]) -> Result<Vec<MagmaTerm>, TermError> {
    fiber_capped(atoms, DEFAULT_ENUMERATION_LIMIT)
}

/// [`fiber`] with an explicit size limit.
pub fn fiber_capped(atoms: &[Atom], limit: usize) -> Result<Vec<MagmaTerm>, TermError> {
    if atoms.is_empty() {
        return Err(TermError::ZeroLeaves);
    }
    let shapes = enumerate_shapes_capped(atoms.len(), limit)?;
    Ok(shapes
        .iter()
        .map(|s| s.with_leaves(atoms).expect("lengths agree"))
        .collect())
}
