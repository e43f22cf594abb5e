//! Composite state spaces: an ordered family of component magmas whose
//! atoms are coordinate tuples, plus the precomputed factorization
//! table that drives coordinate splits.

use crate::algebra::{AlgebraError, FiniteMagma};
use crate::term::Atom;

/// Components larger than this are rejected by [`ProductSpace::new`];
/// the split table stores one entry per table cell, so the memory is
/// quadratic in component size.
pub const DEFAULT_COMPONENT_SIZE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProductError {
    #[error("a product space needs at least one component")]
    EmptyFamily,
    #[error("component {name} has {size} elements, over the limit of {limit}")]
    ComponentTooLarge {
        name: String,
        size: usize,
        limit: usize,
    },
    #[error("atom {atom} has arity {got}, expected {expected}")]
    ArityMismatch {
        atom: Atom,
        expected: usize,
        got: usize,
    },
    #[error("coordinate {value} of atom {atom} is outside component {component} (size {size})")]
    CoordinateOutOfRange {
        atom: Atom,
        component: usize,
        value: usize,
        size: usize,
    },
    #[error("atom {0} is a plain symbol; coordinate splits need tuple atoms")]
    NotTuple(Atom),
    #[error("bad component spec {spec:?}: {message}")]
    BadComponentSpec { spec: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An ordered, finite family of component magmas. Atoms of the
/// composite system are index tuples, one coordinate per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpace {
    components: Vec<FiniteMagma>,
}

impl ProductSpace {
    pub fn new(components: Vec<FiniteMagma>) -> Result<Self, ProductError> {
        Self::with_size_limit(components, DEFAULT_COMPONENT_SIZE_LIMIT)
    }

    pub fn with_size_limit(
        components: Vec<FiniteMagma>,
        limit: usize,
    ) -> Result<Self, ProductError> {
        if components.is_empty() {
            return Err(ProductError::EmptyFamily);
        }
        for c in &components {
            if c.size() > limit {
                return Err(ProductError::ComponentTooLarge {
                    name: c.name().to_string(),
                    size: c.size(),
                    limit,
                });
            }
        }
        Ok(ProductSpace { components })
    }

    /// Number of components, i.e. the arity of every tuple atom.
    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[FiniteMagma] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &FiniteMagma {
        &self.components[j]
    }

    /// Checks that `atom` is a tuple of the right arity with every
    /// coordinate inside its component's carrier, and exposes the
    /// coordinates.
    pub fn validate_atom<'a>(&self, atom: &'a Atom) -> Result<&'a [usize], ProductError> {
        let coords = atom
            .as_tuple()
            .ok_or_else(|| ProductError::NotTuple(atom.clone()))?;
        if coords.len() != self.arity() {
            return Err(ProductError::ArityMismatch {
                atom: atom.clone(),
                expected: self.arity(),
                got: coords.len(),
            });
        }
        for (j, (&value, component)) in coords.iter().zip(&self.components).enumerate() {
            if value >= component.size() {
                return Err(ProductError::CoordinateOutOfRange {
                    atom: atom.clone(),
                    component: j,
                    value,
                    size: component.size(),
                });
            }
        }
        Ok(coords)
    }

    /// Builds a validated tuple atom.
    pub fn atom(&self, coords: Vec<usize>) -> Result<Atom, ProductError> {
        let atom = Atom::Tuple(coords);
        self.validate_atom(&atom)?;
        Ok(atom)
    }

    /// Every tuple atom of the product, in coordinate-lexicographic
    /// order. The count is the product of the component sizes.
    pub fn all_atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        let mut current = vec![0usize; self.arity()];
        loop {
            out.push(Atom::Tuple(current.clone()));
            let mut j = self.arity();
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                current[j] += 1;
                if current[j] < self.components[j].size() {
                    break;
                }
                current[j] = 0;
            }
        }
    }
}

/// For each component `j` and value `v`, the ordered list of pairs
/// `(a, b)` with `a * b = v` in component `j`: the inverse of each
/// component's table, precomputed once per space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTable {
    by_component: Vec<Vec<Vec<(usize, usize)>>>,
}

impl SplitTable {
    /// All factorizations of `value` in component `j`, sorted
    /// lexicographically by `(a, b)`.
    pub fn splits_of(&self, j: usize, value: usize) -> &[(usize, usize)] {
        &self.by_component[j][value]
    }
}

/// Scans every component's table once and inverts it. Each table cell
/// contributes exactly one pair to exactly one value list, so the lists
/// for one component always hold `size^2` pairs in total.
pub fn build_split_table(space: &ProductSpace) -> SplitTable {
    let by_component = space
        .components()
        .iter()
        .map(|component| {
            let m = component.size();
            let mut lists: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
            for a in 0..m {
                for b in 0..m {
                    lists[component.op(a, b)].push((a, b));
                }
            }
            // ascending (a, b) scan order is already lexicographic
            lists
        })
        .collect();
    SplitTable { by_component }
}

/// One way to expand a tuple atom: coordinate `component` of `x` is
/// replaced by the factorization `pair`, all other coordinates are
/// duplicated unchanged into both halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateSplit {
    pub component: usize,
    pub pair: (usize, usize),
    pub left: Atom,
    pub right: Atom,
}

/// Enumerates every coordinate split of `x`: for each component `j` in
/// ascending order and each factorization `(a, b)` of `x`'s coordinate
/// `j`, the pair of atoms that agree with `x` away from `j` and carry
/// `a` resp. `b` at `j`.
pub fn coordinate_splits(
    space: &ProductSpace,
    table: &SplitTable,
    x: &Atom,
) -> Result<Vec<CoordinateSplit>, ProductError> {
    let coords = space.validate_atom(x)?;
    let mut out = Vec::new();
    for (j, &value) in coords.iter().enumerate() {
        for &(a, b) in table.splits_of(j, value) {
            let mut left = coords.to_vec();
            let mut right = coords.to_vec();
            left[j] = a;
            right[j] = b;
            debug_assert_eq!(space.component(j).op(a, b), value);
            out.push(CoordinateSplit {
                component: j,
                pair: (a, b),
                left: Atom::Tuple(left),
                right: Atom::Tuple(right),
            });
        }
    }
    Ok(out)
}

/// Parses a comma-separated component list such as
/// `Z2,Z3,const0:2,table:path.tbl`. `Zn` and `const0:m` are builtin;
/// `table:` loads a Cayley-table file (paths must not contain commas).
pub fn parse_component_spec(spec: &str) -> Result<ProductSpace, ProductError> {
    let mut components = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        let bad = |message: &str| ProductError::BadComponentSpec {
            spec: part.to_string(),
            message: message.to_string(),
        };
        if let Some(digits) = part.strip_prefix('Z') {
            let n: usize = digits.parse().map_err(|_| bad("expected Z<n>"))?;
            components.push(FiniteMagma::zn(n)?);
        } else if let Some(digits) = part.strip_prefix("const0:") {
            let m: usize = digits.parse().map_err(|_| bad("expected const0:<m>"))?;
            components.push(FiniteMagma::const0(m)?);
        } else if let Some(path) = part.strip_prefix("table:") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| bad(&format!("cannot read {path:?}: {e}")))?;
            components.push(FiniteMagma::from_table_text(path, &text)?);
        } else {
            return Err(bad("expected Z<n>, const0:<m>, or table:<path>"));
        }
    }
    ProductSpace::new(components)
}
