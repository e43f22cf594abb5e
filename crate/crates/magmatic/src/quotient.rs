//! The equivalence generated by replacement steps, explored breadth
//! first under explicit caps, and the magmatic product built on it.
//!
//! Two terms are equivalent when a finite zigzag of replacement steps
//! (splits forward, merges backward) connects them. Classes are in
//! general infinite, so every operation here is bounded by
//! [`ExplorationCaps`] and answers in three values: a verified positive
//! (with an explicit step path), a certified negative (the source's
//! whole finite component was enumerated), or unknown (a cap was hit).
//!
//! The quotient of the free magma over a product space by this
//! equivalence is the magmatic product; its operation grafts class
//! representatives and re-explores. [`ProductContext`] bundles a space
//! with its split table and default caps and exposes the whole API.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::algebra::FiniteMagma;
use crate::product::{build_split_table, ProductError, ProductSpace, SplitTable};
use crate::rewrite::{
    lift_step_append, lift_step_prepend, predecessors, successors, verify_step, ReplacementStep,
    RewriteError,
};
use crate::term::{atom_term, graft, Atom, MagmaTerm};

/// Budget for one exploration: the largest term admitted, and the most
/// distinct terms visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplorationCaps {
    pub size_cap: usize,
    pub node_cap: usize,
}

impl ExplorationCaps {
    pub const DEFAULT: ExplorationCaps = ExplorationCaps {
        size_cap: 6,
        node_cap: 10_000,
    };

    pub fn new(size_cap: usize, node_cap: usize) -> Self {
        ExplorationCaps { size_cap, node_cap }
    }
}

impl Default for ExplorationCaps {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Which cap cut an exploration short.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapReason {
    SizeCap,
    NodeCap,
}

impl fmt::Display for CapReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapReason::SizeCap => f.write_str("size-cap"),
            CapReason::NodeCap => f.write_str("node-cap"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("term with {leaf_count} leaves exceeds the size cap {size_cap}")]
    CapTooSmall { leaf_count: usize, size_cap: usize },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Orientation of one path edge: a forward split or a backward merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepDirection {
    Split,
    Merge,
}

/// One traversed edge of the replacement graph, oriented along the
/// walk. A `Split` edge means `to = apply(from, step)`; a `Merge` edge
/// means `from = apply(to, step)`, so merges are verified in the
/// forward direction from their far endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEdge {
    pub direction: StepDirection,
    pub step: ReplacementStep,
    pub from: MagmaTerm,
    pub to: MagmaTerm,
}

impl PathEdge {
    pub fn verify(&self, space: &ProductSpace) -> bool {
        match self.direction {
            StepDirection::Split => verify_step(&self.from, &self.step, &self.to, space),
            StepDirection::Merge => verify_step(&self.to, &self.step, &self.from, space),
        }
    }

    fn reversed(&self) -> PathEdge {
        PathEdge {
            direction: match self.direction {
                StepDirection::Split => StepDirection::Merge,
                StepDirection::Merge => StepDirection::Split,
            },
            step: self.step.clone(),
            from: self.to.clone(),
            to: self.from.clone(),
        }
    }
}

impl fmt::Display for PathEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.direction {
            StepDirection::Split => '+',
            StepDirection::Merge => '-',
        };
        write!(f, "{sign}{}", self.step)
    }
}

/// A witnessing walk between two equivalent terms. Rendered one step
/// per line, `+` for splits and `-` for merges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquivalencePath {
    edges: Vec<PathEdge>,
}

impl EquivalencePath {
    pub fn edges(&self) -> &[PathEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The same walk in the opposite direction; splits become merges.
    pub fn reversed(&self) -> EquivalencePath {
        EquivalencePath {
            edges: self.edges.iter().rev().map(PathEdge::reversed).collect(),
        }
    }

    /// Checks the whole walk: endpoints, chaining, and every step.
    pub fn verify(&self, start: &MagmaTerm, end: &MagmaTerm, space: &ProductSpace) -> bool {
        if self.edges.is_empty() {
            return start == end;
        }
        if self.edges[0].from != *start || self.edges.last().unwrap().to != *end {
            return false;
        }
        for pair in self.edges.windows(2) {
            if pair[0].to != pair[1].from {
                return false;
            }
        }
        self.edges.iter().all(|e| e.verify(space))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for edge in &self.edges {
            out.push_str(&edge.to_string());
            out.push('\n');
        }
        out
    }
}

/// Outcome of an equivalence query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    /// The terms are connected; the path re-verifies step by step.
    Equivalent(EquivalencePath),
    /// The source term's entire (finite) component was enumerated and
    /// the target is not in it.
    NotEquivalentCertified,
    /// Exploration hit a cap before deciding.
    Unknown(CapReason),
}

/// The explored portion of one equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassHandle {
    representative: MagmaTerm,
    members: BTreeSet<MagmaTerm>,
    exhausted: bool,
    caps_used: ExplorationCaps,
}

impl ClassHandle {
    /// The least explored member under the canonical order
    /// (leaf count, then text). For an exhausted class this is the
    /// global minimum of the class.
    pub fn representative(&self) -> &MagmaTerm {
        &self.representative
    }

    pub fn members(&self) -> &BTreeSet<MagmaTerm> {
        &self.members
    }

    pub fn contains(&self, t: &MagmaTerm) -> bool {
        self.members.contains(t)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a handle always contains its seed term
    }

    /// True only when every member's successor and predecessor sets
    /// were generated in full and landed inside the member set, so the
    /// members are provably the whole class.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn caps_used(&self) -> ExplorationCaps {
        self.caps_used
    }
}

/// Named algebraic laws the witness search can try to refute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraicProperty {
    Commutativity,
    Associativity,
}

impl fmt::Display for AlgebraicProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicProperty::Commutativity => f.write_str("commutativity"),
            AlgebraicProperty::Associativity => f.write_str("associativity"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub candidates: usize,
    pub equivalent: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessDetails {
    pub property: AlgebraicProperty,
    pub atoms: Vec<Atom>,
    pub lhs: MagmaTerm,
    pub rhs: MagmaTerm,
    pub stats: SearchStats,
}

/// Result of a witness search: either a certified counterexample or an
/// honest shrug. An unknown verdict is never upgraded to a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Witness(WitnessDetails),
    Unknown(SearchStats),
}

/// Transcript of a congruence check.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CongruenceReport {
    pub trials: usize,
    /// Lifted paths that were constructed and re-verified step by step.
    pub lifted_paths_verified: usize,
    /// Grafted pairs whose equivalence the bounded search also found.
    pub bfs_confirmed: usize,
    /// Grafted pairs the bounded search could not decide; not
    /// violations, since a verified lifted path already exists.
    pub bfs_unknown: usize,
    pub violations: Vec<String>,
}

/// A product space bundled with its split table and default caps: the
/// working context for the magmatic product of the family.
#[derive(Debug, Clone)]
pub struct ProductContext {
    space: ProductSpace,
    table: SplitTable,
    default_caps: ExplorationCaps,
}

/// Builds the context for the magmatic product of the given family.
pub fn magmatic_product(space: ProductSpace) -> ProductContext {
    let table = build_split_table(&space);
    ProductContext {
        space,
        table,
        default_caps: ExplorationCaps::DEFAULT,
    }
}

/// The magmatic product of a one-magma family.
pub fn self_magmatic(magma: FiniteMagma) -> Result<ProductContext, ProductError> {
    Ok(magmatic_product(ProductSpace::new(vec![magma])?))
}

struct Exploration {
    members: BTreeSet<MagmaTerm>,
    parent: BTreeMap<MagmaTerm, PathEdge>,
    pruned: bool,
    capped: bool,
    found: bool,
}

impl ProductContext {
    pub fn space(&self) -> &ProductSpace {
        &self.space
    }

    pub fn split_table(&self) -> &SplitTable {
        &self.table
    }

    pub fn default_caps(&self) -> ExplorationCaps {
        self.default_caps
    }

    pub fn with_default_caps(mut self, caps: ExplorationCaps) -> Self {
        self.default_caps = caps;
        self
    }

    fn neighbor_edges(&self, m: &MagmaTerm) -> Result<Vec<PathEdge>, QuotientError> {
        let mut edges = Vec::new();
        for (step, target) in successors(m, &self.space, &self.table)? {
            edges.push(PathEdge {
                direction: StepDirection::Split,
                step,
                from: m.clone(),
                to: target,
            });
        }
        for (source, step) in predecessors(m, &self.space, &self.table)? {
            edges.push(PathEdge {
                direction: StepDirection::Merge,
                step,
                from: m.clone(),
                to: source,
            });
        }
        Ok(edges)
    }

    /// Breadth-first walk of the undirected replacement graph from
    /// `start`. Frontiers are processed in canonical order, so the
    /// member set, parent edges, and any early hit of `stop_at` are a
    /// pure function of the inputs.
    fn explore(
        &self,
        start: &MagmaTerm,
        caps: ExplorationCaps,
        stop_at: Option<&MagmaTerm>,
    ) -> Result<Exploration, QuotientError> {
        let leaf_count = start.leaf_count();
        if leaf_count > caps.size_cap {
            return Err(QuotientError::CapTooSmall {
                leaf_count,
                size_cap: caps.size_cap,
            });
        }
        let mut members = BTreeSet::new();
        members.insert(start.clone());
        let mut parent: BTreeMap<MagmaTerm, PathEdge> = BTreeMap::new();
        let mut frontier = vec![start.clone()];
        let mut pruned = false;
        let mut capped = false;
        let mut found = false;

        'search: while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for edge in self.neighbor_edges(m)? {
                    if edge.to.leaf_count() > caps.size_cap {
                        pruned = true;
                        continue;
                    }
                    if members.contains(&edge.to) {
                        continue;
                    }
                    if members.len() >= caps.node_cap {
                        capped = true;
                        break 'search;
                    }
                    let term = edge.to.clone();
                    members.insert(term.clone());
                    parent.insert(term.clone(), edge);
                    if stop_at == Some(&term) {
                        found = true;
                        break 'search;
                    }
                    next.push(term);
                }
            }
            next.sort();
            frontier = next;
        }

        Ok(Exploration {
            members,
            parent,
            pruned,
            capped,
            found,
        })
    }

    /// Explores the equivalence class of `t` within `caps`.
    pub fn class_of(
        &self,
        t: &MagmaTerm,
        caps: ExplorationCaps,
    ) -> Result<ClassHandle, QuotientError> {
        let exploration = self.explore(t, caps, None)?;
        let representative = exploration
            .members
            .iter()
            .next()
            .expect("the seed term is always a member")
            .clone();
        Ok(ClassHandle {
            representative,
            members: exploration.members,
            exhausted: !exploration.pruned && !exploration.capped,
            caps_used: caps,
        })
    }

    /// Decides `a ~ b` within caps: `Equivalent` with a verified step
    /// path, `NotEquivalentCertified` when `a`'s component exhausted
    /// without reaching `b`, `Unknown` otherwise.
    pub fn equivalent(
        &self,
        a: &MagmaTerm,
        b: &MagmaTerm,
        caps: ExplorationCaps,
    ) -> Result<EquivalenceVerdict, QuotientError> {
        for t in [a, b] {
            let leaf_count = t.leaf_count();
            if leaf_count > caps.size_cap {
                return Err(QuotientError::CapTooSmall {
                    leaf_count,
                    size_cap: caps.size_cap,
                });
            }
        }
        if a == b {
            return Ok(EquivalenceVerdict::Equivalent(EquivalencePath::default()));
        }
        let exploration = self.explore(a, caps, Some(b))?;
        if exploration.found {
            let mut edges = Vec::new();
            let mut current = b.clone();
            while current != *a {
                let edge = exploration
                    .parent
                    .get(&current)
                    .expect("every discovered term has a parent edge")
                    .clone();
                current = edge.from.clone();
                edges.push(edge);
            }
            edges.reverse();
            let path = EquivalencePath { edges };
            assert!(
                path.verify(a, b, &self.space),
                "exploration produced an unverifiable path"
            );
            return Ok(EquivalenceVerdict::Equivalent(path));
        }
        if !exploration.pruned && !exploration.capped {
            return Ok(EquivalenceVerdict::NotEquivalentCertified);
        }
        let reason = if exploration.capped {
            CapReason::NodeCap
        } else {
            CapReason::SizeCap
        };
        Ok(EquivalenceVerdict::Unknown(reason))
    }

    /// The quotient operation: grafts the two representatives and
    /// explores the class of the result. Well-definedness across the
    /// choice of representatives is the congruence property, exercised
    /// statistically by [`ProductContext::check_congruence`].
    pub fn delta(
        &self,
        a: &ClassHandle,
        b: &ClassHandle,
        caps: ExplorationCaps,
    ) -> Result<ClassHandle, QuotientError> {
        let product = graft(a.representative().clone(), b.representative().clone());
        self.class_of(&product, caps)
    }

    /// The canonical map from product atoms into the magmatic product:
    /// the class of the one-leaf term. Need not be injective.
    pub fn embed(&self, x: &Atom) -> Result<ClassHandle, QuotientError> {
        self.space.validate_atom(x)?;
        self.class_of(&atom_term(x.clone()), self.default_caps)
    }

    /// All split edges internal to an explored class, in canonical
    /// source order; the edge set of the class's replacement graph.
    pub fn class_edges(
        &self,
        handle: &ClassHandle,
    ) -> Result<Vec<(MagmaTerm, ReplacementStep, MagmaTerm)>, QuotientError> {
        let mut out = Vec::new();
        for m in handle.members() {
            for (step, target) in successors(m, &self.space, &self.table)? {
                if handle.contains(&target) {
                    out.push((m.clone(), step, target));
                }
            }
        }
        Ok(out)
    }

    /// Samples equivalent pairs by short exploration, grafts a random
    /// context onto both sides (both orders), lifts the discovered path
    /// through the context, and re-verifies every lifted step. A lifted
    /// path that fails verification is a violation; a bounded search
    /// that merely fails to re-find the equivalence is recorded as
    /// unknown, not as a violation.
    pub fn check_congruence(
        &self,
        trials: usize,
        caps: ExplorationCaps,
        seed: u64,
    ) -> Result<CongruenceReport, QuotientError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let atoms = self.space.all_atoms();
        let mut report = CongruenceReport {
            trials,
            ..CongruenceReport::default()
        };

        for trial in 0..trials {
            let seed_leaves = rng.gen_range(1..=caps.size_cap.min(3));
            let a = random_term(&mut rng, &atoms, seed_leaves);
            let handle = self.class_of(&a, caps)?;
            let members: Vec<&MagmaTerm> = handle.members().iter().collect();
            let a_equiv = (*members[rng.gen_range(0..members.len())]).clone();
            let base = match self.equivalent(&a, &a_equiv, caps)? {
                EquivalenceVerdict::Equivalent(path) => path,
                _ => {
                    // cannot happen: a_equiv came from the same bounded exploration
                    report.bfs_unknown += 1;
                    continue;
                }
            };
            let context_leaves = rng.gen_range(1..=2);
            let context = random_term(&mut rng, &atoms, context_leaves);

            for prepend in [false, true] {
                let lift_term = |t: &MagmaTerm| {
                    if prepend {
                        graft(context.clone(), t.clone())
                    } else {
                        graft(t.clone(), context.clone())
                    }
                };
                let lifted = EquivalencePath {
                    edges: base
                        .edges()
                        .iter()
                        .map(|edge| PathEdge {
                            direction: edge.direction,
                            step: if prepend {
                                lift_step_prepend(context.leaf_count(), &edge.step)
                            } else {
                                lift_step_append(&edge.step)
                            },
                            from: lift_term(&edge.from),
                            to: lift_term(&edge.to),
                        })
                        .collect(),
                };
                let start = lift_term(&a);
                let end = lift_term(&a_equiv);
                if lifted.verify(&start, &end, &self.space) {
                    report.lifted_paths_verified += 1;
                } else {
                    report.violations.push(format!(
                        "trial {trial}: lifted path from {start} to {end} failed verification"
                    ));
                    continue;
                }
                let enlarged = ExplorationCaps {
                    size_cap: caps.size_cap + context.leaf_count(),
                    node_cap: caps.node_cap.saturating_mul(4),
                };
                match self.equivalent(&start, &end, enlarged)? {
                    EquivalenceVerdict::Equivalent(_) => report.bfs_confirmed += 1,
                    EquivalenceVerdict::Unknown(_) => report.bfs_unknown += 1,
                    EquivalenceVerdict::NotEquivalentCertified => {
                        report.violations.push(format!(
                            "trial {trial}: {start} and {end} certified non-equivalent \
                             despite a verified lifted path"
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Searches small atom tuples for a certified counterexample to
    /// the given law of the quotient operation. Candidates whose
    /// comparison comes back `Equivalent` or `Unknown` are tallied and
    /// skipped; only `NotEquivalentCertified` produces a witness.
    pub fn witness_search(
        &self,
        property: AlgebraicProperty,
        caps: ExplorationCaps,
    ) -> Result<WitnessOutcome, QuotientError> {
        let atoms = self.space.all_atoms();
        let mut stats = SearchStats::default();

        let check = |this: &Self,
                         stats: &mut SearchStats,
                         involved: Vec<Atom>,
                         lhs: MagmaTerm,
                         rhs: MagmaTerm|
         -> Result<Option<WitnessDetails>, QuotientError> {
            stats.candidates += 1;
            if lhs == rhs {
                stats.equivalent += 1;
                return Ok(None);
            }
            match this.equivalent(&lhs, &rhs, caps) {
                Ok(EquivalenceVerdict::Equivalent(_)) => {
                    stats.equivalent += 1;
                    Ok(None)
                }
                Ok(EquivalenceVerdict::Unknown(_)) => {
                    stats.unknown += 1;
                    Ok(None)
                }
                Ok(EquivalenceVerdict::NotEquivalentCertified) => Ok(Some(WitnessDetails {
                    property,
                    atoms: involved,
                    lhs,
                    rhs,
                    stats: *stats,
                })),
                Err(QuotientError::CapTooSmall { .. }) => {
                    stats.unknown += 1;
                    Ok(None)
                }
                Err(e) => Err(e),
            }
        };

        match property {
            AlgebraicProperty::Commutativity => {
                for i in 0..atoms.len() {
                    for j in i + 1..atoms.len() {
                        let x = &atoms[i];
                        let y = &atoms[j];
                        let hx = self.embed_with(x, caps)?;
                        let hy = self.embed_with(y, caps)?;
                        let lhs = graft(hx.representative().clone(), hy.representative().clone());
                        let rhs = graft(hy.representative().clone(), hx.representative().clone());
                        if let Some(details) =
                            check(self, &mut stats, vec![x.clone(), y.clone()], lhs, rhs)?
                        {
                            return Ok(WitnessOutcome::Witness(details));
                        }
                    }
                }
            }
            AlgebraicProperty::Associativity => {
                for x in &atoms {
                    for y in &atoms {
                        for z in &atoms {
                            let hx = self.embed_with(x, caps)?;
                            let hz = self.embed_with(z, caps)?;
                            let xy = self.class_of(
                                &graft(atom_term(x.clone()), atom_term(y.clone())),
                                caps,
                            )?;
                            let yz = self.class_of(
                                &graft(atom_term(y.clone()), atom_term(z.clone())),
                                caps,
                            )?;
                            let lhs =
                                graft(xy.representative().clone(), hz.representative().clone());
                            let rhs =
                                graft(hx.representative().clone(), yz.representative().clone());
                            if let Some(details) = check(
                                self,
                                &mut stats,
                                vec![x.clone(), y.clone(), z.clone()],
                                lhs,
                                rhs,
                            )? {
                                return Ok(WitnessOutcome::Witness(details));
                            }
                        }
                    }
                }
            }
        }
        Ok(WitnessOutcome::Unknown(stats))
    }

    fn embed_with(&self, x: &Atom, caps: ExplorationCaps) -> Result<ClassHandle, QuotientError> {
        self.space.validate_atom(x)?;
        self.class_of(&atom_term(x.clone()), caps)
    }
}

fn random_term(rng: &mut ChaCha8Rng, atoms: &[Atom], leaves: usize) -> MagmaTerm {
    if leaves == 1 {
        return atom_term(atoms[rng.gen_range(0..atoms.len())].clone());
    }
    let split = rng.gen_range(1..leaves);
    graft(
        random_term(rng, atoms, split),
        random_term(rng, atoms, leaves - split),
    )
}
