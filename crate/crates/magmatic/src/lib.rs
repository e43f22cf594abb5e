//! Free magmas, the replacement rewriting relation, and magmatic
//! products of finite magmas.
//!
//! A magma is a set with one total binary operation and no axioms at
//! all, so nothing commutes or reassociates unless a particular table
//! happens to make it. The free magma over an atom set is the set of
//! all fully parenthesized combinations of atoms; this crate represents
//! its elements as binary trees ([`MagmaTerm`]) with a bit-exact text
//! form. On top of that sit:
//!
//! - finite magmas as explicit Cayley tables ([`FiniteMagma`]), with
//!   morphism checking and evaluation of terms into a table;
//! - products of component magmas ([`ProductSpace`]) whose atoms are
//!   coordinate tuples, and the coordinate-split enumeration that
//!   factors one coordinate of one atom;
//! - the one-step replacement relation ([`rewrite`]): expand a leaf
//!   into an adjacent pair from a coordinate split, preserving every
//!   existing bracket pair and adding exactly one;
//! - the equivalence generated by those steps, explored breadth-first
//!   under explicit caps ([`quotient`]), with three-valued answers and
//!   verified step paths — never a guessed negative;
//! - the magmatic product: the quotient of the free magma by that
//!   equivalence, with its induced operation on class representatives,
//!   congruence spot-checks, and witness searches for non-commutativity
//!   and non-associativity.
//!
//! ```
//! use magmatic::{graft, parse, ExplorationCaps};
//! use magmatic::{self_magmatic, EquivalenceVerdict, FiniteMagma};
//!
//! // over the constant table every pair of atoms merges to 0, so the
//! // two orders of <1> and <0> sit in one class
//! let ctx = self_magmatic(FiniteMagma::const0(2)?)?;
//! let a = parse("(<1> <0>)")?;
//! let b = parse("(<0> <1>)")?;
//! let caps = ExplorationCaps::new(3, 1000);
//! match ctx.equivalent(&a, &b, caps)? {
//!     EquivalenceVerdict::Equivalent(path) => assert_eq!(path.len(), 2),
//!     other => panic!("unexpected verdict {other:?}"),
//! }
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! The `examples/` directory has one runnable program per capability;
//! the `magmatic` binary exposes the same operations as subcommands.

pub mod algebra;
pub mod cli;
pub mod product;
pub mod quotient;
pub mod rewrite;
pub mod term;

pub use algebra::{
    eval_universal, is_morphism, AlgebraError, Classification, FiniteMagma, GeneratorMap,
};
pub use product::{
    build_split_table, coordinate_splits, parse_component_spec, CoordinateSplit, ProductError,
    ProductSpace, SplitTable, DEFAULT_COMPONENT_SIZE_LIMIT,
};
pub use quotient::{
    magmatic_product, self_magmatic, AlgebraicProperty, CapReason, ClassHandle, CongruenceReport,
    EquivalencePath, EquivalenceVerdict, ExplorationCaps, PathEdge, ProductContext, QuotientError,
    SearchStats, StepDirection, WitnessDetails, WitnessOutcome,
};
pub use rewrite::{
    apply_replacement, lift_step_append, lift_step_prepend, predecessors, successors, verify_step,
    Grouping, ReplacementStep, RewriteError,
};
pub use term::{
    atom_term, catalan, enumerate_shapes, enumerate_shapes_capped, fiber, fiber_capped, graft,
    parse, parse_atom, Atom, MagmaTerm, Shape, SyntaxKind, TermError, DEFAULT_ENUMERATION_LIMIT,
};
