//! The one-step replacement relation on terms over a product space.
//!
//! A replacement expands one leaf of a term into an adjacent pair of
//! atoms obtained by factoring a single coordinate, keeping every
//! existing bracket pair and adding exactly one new pair. Away from the
//! split coordinate both new atoms copy the old one unchanged.
//!
//! At string level the new bracket pair can legally land in several
//! positions, but at tree level the choice always collapses to two
//! groupings of the three siblings around the split site: group the
//! left two, or group the right two. A term consisting of a single
//! leaf has no siblings and admits only the root grouping.

use std::fmt;

use crate::product::{coordinate_splits, ProductError, ProductSpace, SplitTable};
use crate::term::{atom_term, graft, Atom, MagmaTerm};

/// Where the one new bracket pair goes, relative to the split site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grouping {
    /// The whole term was a single leaf; the new pair encloses everything.
    Root,
    /// Of the three siblings `(d1, d2, d3)` at the site, group `(d1 d2)`.
    GroupLeft,
    /// Of the three siblings `(d1, d2, d3)` at the site, group `(d2 d3)`.
    GroupRight,
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grouping::Root => f.write_str("Root"),
            Grouping::GroupLeft => f.write_str("L"),
            Grouping::GroupRight => f.write_str("R"),
        }
    }
}

/// A fully specified one-step replacement: which leaf, which component
/// coordinate, which factorization of that coordinate, and where the
/// new bracket pair goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReplacementStep {
    /// 1-based position into the source term's leaf sequence.
    pub leaf_pos: usize,
    /// Component index of the coordinate being factored.
    pub component: usize,
    /// The factorization `(a, b)` with `a * b` equal to the split
    /// leaf's coordinate in that component.
    pub split: (usize, usize),
    pub grouping: Grouping,
}

impl ReplacementStep {
    pub fn new(
        leaf_pos: usize,
        component: usize,
        split: (usize, usize),
        grouping: Grouping,
    ) -> Self {
        ReplacementStep {
            leaf_pos,
            component,
            split,
            grouping,
        }
    }
}

impl fmt::Display for ReplacementStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "h={} j={} split=({},{}) group={}",
            self.leaf_pos, self.component, self.split.0, self.split.1, self.grouping
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("invalid step [{step}]: {reason}")]
    InvalidStep { step: ReplacementStep, reason: String },
    #[error(transparent)]
    Product(#[from] ProductError),
}

fn invalid(step: &ReplacementStep, reason: impl Into<String>) -> RewriteError {
    RewriteError::InvalidStep {
        step: step.clone(),
        reason: reason.into(),
    }
}

/// Applies one replacement step to `source`, producing the term with
/// leaf `step.leaf_pos` expanded into the split pair under the step's
/// grouping. All other nodes of `source` are preserved; the result has
/// exactly one more leaf and one more bracket pair.
pub fn apply_replacement(
    source: &MagmaTerm,
    step: &ReplacementStep,
    space: &ProductSpace,
) -> Result<MagmaTerm, RewriteError> {
    let leaves = source.leaves();
    let n = leaves.len();
    if step.leaf_pos == 0 || step.leaf_pos > n {
        return Err(invalid(step, format!("leaf position out of range 1..={n}")));
    }
    let coords = space.validate_atom(leaves[step.leaf_pos - 1])?;
    if step.component >= space.arity() {
        return Err(invalid(
            step,
            format!("component {} out of range", step.component),
        ));
    }
    let (a, b) = step.split;
    let component = space.component(step.component);
    if a >= component.size() || b >= component.size() {
        return Err(invalid(step, "split pair outside the component carrier"));
    }
    if component.op(a, b) != coords[step.component] {
        return Err(invalid(
            step,
            format!(
                "split pair ({a},{b}) does not factor coordinate value {}",
                coords[step.component]
            ),
        ));
    }
    if (n == 1) != (step.grouping == Grouping::Root) {
        return Err(invalid(
            step,
            "grouping Root applies exactly to one-leaf terms",
        ));
    }

    let mut left_coords = coords.to_vec();
    let mut right_coords = coords.to_vec();
    left_coords[step.component] = a;
    right_coords[step.component] = b;
    let left = Atom::Tuple(left_coords);
    let right = Atom::Tuple(right_coords);

    if n == 1 {
        return Ok(graft(atom_term(left), atom_term(right)));
    }
    Ok(splice(source, step.leaf_pos, &left, &right, step.grouping))
}

/// Rebuilds `t` with leaf `h` (1-based, known to sit under a parent)
/// expanded into `left right` under `grouping`.
fn splice(t: &MagmaTerm, h: usize, left: &Atom, right: &Atom, grouping: Grouping) -> MagmaTerm {
    let (l, r) = match t {
        MagmaTerm::Pair(l, r) => (l.as_ref(), r.as_ref()),
        MagmaTerm::Leaf(_) => unreachable!("one-leaf terms are handled by the Root case"),
    };
    let left_leaves = l.leaf_count();
    if h <= left_leaves {
        if l.is_leaf() {
            // siblings (left, right, r)
            let d1 = atom_term(left.clone());
            let d2 = atom_term(right.clone());
            let d3 = r.clone();
            regroup(d1, d2, d3, grouping)
        } else {
            graft(splice(l, h, left, right, grouping), r.clone())
        }
    } else if r.is_leaf() {
        // siblings (l, left, right)
        let d1 = l.clone();
        let d2 = atom_term(left.clone());
        let d3 = atom_term(right.clone());
        regroup(d1, d2, d3, grouping)
    } else {
        graft(l.clone(), splice(r, h - left_leaves, left, right, grouping))
    }
}

fn regroup(d1: MagmaTerm, d2: MagmaTerm, d3: MagmaTerm, grouping: Grouping) -> MagmaTerm {
    match grouping {
        Grouping::GroupLeft => graft(graft(d1, d2), d3),
        Grouping::GroupRight => graft(d1, graft(d2, d3)),
        Grouping::Root => unreachable!("Root grouping never reaches a parent node"),
    }
}

/// Enumerates every one-step replacement of `source`: all leaf
/// positions, all coordinate splits of each leaf, and both groupings
/// (only [`Grouping::Root`] when the term is a single leaf), each
/// paired with the resulting term.
///
/// The order is fixed: leaf position ascending, then component
/// ascending, then split-pair order, then `GroupLeft` before
/// `GroupRight`. For a fixed (position, component, pair) a multi-leaf
/// term yields exactly two successors.
pub fn successors(
    source: &MagmaTerm,
    space: &ProductSpace,
    table: &SplitTable,
) -> Result<Vec<(ReplacementStep, MagmaTerm)>, RewriteError> {
    let leaves = source.leaves();
    let n = leaves.len();
    let mut out = Vec::new();
    for (index, leaf) in leaves.iter().enumerate() {
        let h = index + 1;
        for split in coordinate_splits(space, table, leaf)? {
            let groupings: &[Grouping] = if n == 1 {
                &[Grouping::Root]
            } else {
                &[Grouping::GroupLeft, Grouping::GroupRight]
            };
            for &grouping in groupings {
                let step = ReplacementStep::new(h, split.component, split.pair, grouping);
                let target = apply_replacement(source, &step, space)?;
                out.push((step, target));
            }
        }
    }
    Ok(out)
}

/// The local tree patterns a replacement can leave behind, used to
/// invert the relation. Each candidate is re-applied before being
/// returned, so no unverified inverse ever escapes.
struct PredCandidate {
    leaf_pos: usize,
    grouping: Grouping,
    left_atom: Atom,
    right_atom: Atom,
    /// Path from the root to the node that the merge rebuilds.
    path: Vec<bool>, // false = left child, true = right child
    /// The rebuilt node, parameterized over the merged atom.
    rebuild: RebuildKind,
}

enum RebuildKind {
    /// Candidate node is `Leaf(merged)` (root case).
    LeafOnly,
    /// Candidate node is `Pair(Leaf(merged), keep)`.
    MergedLeft { keep: MagmaTerm },
    /// Candidate node is `Pair(keep, Leaf(merged))`.
    MergedRight { keep: MagmaTerm },
}

impl PredCandidate {
    fn build(&self, merged: Atom) -> MagmaTerm {
        match &self.rebuild {
            RebuildKind::LeafOnly => atom_term(merged),
            RebuildKind::MergedLeft { keep } => graft(atom_term(merged), keep.clone()),
            RebuildKind::MergedRight { keep } => graft(keep.clone(), atom_term(merged)),
        }
    }
}

fn replace_at_path(t: &MagmaTerm, path: &[bool], replacement: MagmaTerm) -> MagmaTerm {
    match path.split_first() {
        None => replacement,
        Some((&go_right, rest)) => match t {
            MagmaTerm::Pair(l, r) => {
                if go_right {
                    graft(l.as_ref().clone(), replace_at_path(r, rest, replacement))
                } else {
                    graft(replace_at_path(l, rest, replacement), r.as_ref().clone())
                }
            }
            MagmaTerm::Leaf(_) => unreachable!("path stays inside the tree"),
        },
    }
}

fn collect_pred_candidates(
    node: &MagmaTerm,
    leaf_offset: usize,
    path: &mut Vec<bool>,
    out: &mut Vec<PredCandidate>,
) {
    let (l, r) = match node {
        MagmaTerm::Pair(l, r) => (l.as_ref(), r.as_ref()),
        MagmaTerm::Leaf(_) => return,
    };
    // new pair on the left of the site: ((x' x'') C) and (x' (x'' C))
    if let MagmaTerm::Pair(ll, lr) = l {
        if let (MagmaTerm::Leaf(a), MagmaTerm::Leaf(b)) = (ll.as_ref(), lr.as_ref()) {
            out.push(PredCandidate {
                leaf_pos: leaf_offset + 1,
                grouping: Grouping::GroupLeft,
                left_atom: a.clone(),
                right_atom: b.clone(),
                path: path.clone(),
                rebuild: RebuildKind::MergedLeft { keep: r.clone() },
            });
        }
    }
    if let (MagmaTerm::Leaf(a), MagmaTerm::Pair(rl, rr)) = (l, r) {
        if let MagmaTerm::Leaf(b) = rl.as_ref() {
            out.push(PredCandidate {
                leaf_pos: leaf_offset + 1,
                grouping: Grouping::GroupRight,
                left_atom: a.clone(),
                right_atom: b.clone(),
                path: path.clone(),
                rebuild: RebuildKind::MergedLeft {
                    keep: rr.as_ref().clone(),
                },
            });
        }
    }
    // new pair on the right of the site: ((C x') x'') and (C (x' x''))
    if let (MagmaTerm::Pair(ll, lr), MagmaTerm::Leaf(b)) = (l, r) {
        if let MagmaTerm::Leaf(a) = lr.as_ref() {
            out.push(PredCandidate {
                leaf_pos: leaf_offset + ll.leaf_count() + 1,
                grouping: Grouping::GroupLeft,
                left_atom: a.clone(),
                right_atom: b.clone(),
                path: path.clone(),
                rebuild: RebuildKind::MergedRight {
                    keep: ll.as_ref().clone(),
                },
            });
        }
    }
    if let MagmaTerm::Pair(rl, rr) = r {
        if let (MagmaTerm::Leaf(a), MagmaTerm::Leaf(b)) = (rl.as_ref(), rr.as_ref()) {
            out.push(PredCandidate {
                leaf_pos: leaf_offset + l.leaf_count() + 1,
                grouping: Grouping::GroupRight,
                left_atom: a.clone(),
                right_atom: b.clone(),
                path: path.clone(),
                rebuild: RebuildKind::MergedRight { keep: l.clone() },
            });
        }
    }
    path.push(false);
    collect_pred_candidates(l, leaf_offset, path, out);
    path.pop();
    path.push(true);
    collect_pred_candidates(r, leaf_offset + l.leaf_count(), path, out);
    path.pop();
}

/// Enumerates every `(source, step)` with
/// `apply_replacement(source, step) == target`: the inverse of the
/// replacement relation. Candidates come from merging adjacent leaf
/// pairs that agree away from one coordinate; each is kept only after
/// re-application reproduces `target` exactly.
///
/// Terms with fewer than two leaves have no predecessors.
pub fn predecessors(
    target: &MagmaTerm,
    space: &ProductSpace,
    table: &SplitTable,
) -> Result<Vec<(MagmaTerm, ReplacementStep)>, RewriteError> {
    let _ = table; // symmetry with successors; inversion needs only the operation
    let leaves = target.leaves();
    for leaf in &leaves {
        space.validate_atom(leaf)?;
    }
    if leaves.len() < 2 {
        return Ok(Vec::new());
    }

    let mut candidates = Vec::new();
    if let MagmaTerm::Pair(l, r) = target {
        if let (MagmaTerm::Leaf(a), MagmaTerm::Leaf(b)) = (l.as_ref(), r.as_ref()) {
            candidates.push(PredCandidate {
                leaf_pos: 1,
                grouping: Grouping::Root,
                left_atom: a.clone(),
                right_atom: b.clone(),
                path: Vec::new(),
                rebuild: RebuildKind::LeafOnly,
            });
        }
    }
    collect_pred_candidates(target, 0, &mut Vec::new(), &mut candidates);

    let mut out = Vec::new();
    for candidate in candidates {
        let left = space.validate_atom(&candidate.left_atom)?.to_vec();
        let right = space.validate_atom(&candidate.right_atom)?.to_vec();
        for j in 0..space.arity() {
            let agree_off_j = (0..space.arity()).all(|i| i == j || left[i] == right[i]);
            if !agree_off_j {
                continue;
            }
            let mut merged = left.clone();
            merged[j] = space.component(j).op(left[j], right[j]);
            let source = replace_at_path(
                target,
                &candidate.path,
                candidate.build(Atom::Tuple(merged)),
            );
            let step = ReplacementStep::new(
                candidate.leaf_pos,
                j,
                (left[j], right[j]),
                candidate.grouping,
            );
            if verify_step(&source, &step, target, space) {
                out.push((source, step));
            }
        }
    }
    out.sort_by(|(_, s1), (_, s2)| {
        (s1.leaf_pos, s1.component, s1.grouping).cmp(&(s2.leaf_pos, s2.component, s2.grouping))
    });
    Ok(out)
}

/// True exactly when applying `step` to `source` yields `target`.
pub fn verify_step(
    source: &MagmaTerm,
    step: &ReplacementStep,
    target: &MagmaTerm,
    space: &ProductSpace,
) -> bool {
    matches!(apply_replacement(source, step, space), Ok(result) if result == *target)
}

/// Transports a step on `t` to the same step on `(context t)`. The
/// leaf position shifts past the context; a Root step lands on the
/// right child of the new root, so it becomes `GroupRight`.
pub fn lift_step_prepend(context_leaves: usize, step: &ReplacementStep) -> ReplacementStep {
    ReplacementStep {
        leaf_pos: step.leaf_pos + context_leaves,
        grouping: match step.grouping {
            Grouping::Root => Grouping::GroupRight,
            other => other,
        },
        ..step.clone()
    }
}

/// Transports a step on `t` to the same step on `(t context)`. The
/// leaf position is unchanged; a Root step lands on the left child of
/// the new root, so it becomes `GroupLeft`.
pub fn lift_step_append(step: &ReplacementStep) -> ReplacementStep {
    ReplacementStep {
        grouping: match step.grouping {
            Grouping::Root => Grouping::GroupLeft,
            other => other,
        },
        ..step.clone()
    }
}
