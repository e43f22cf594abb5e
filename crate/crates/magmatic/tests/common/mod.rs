//! Shared test machinery: the string-level bracket-insertion oracle,
//! deterministic random-term generators, and the CLI golden scenarios.
//!
//! The oracle re-derives one-step replacements without any tree
//! surgery: it works on token strings, inserts one new bracket pair at
//! every possible position, and keeps the candidates that read back as
//! well-formed binary terms while leaving the original bracket pairs
//! matched with each other. It deliberately shares no code with
//! `apply_replacement`.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use magmatic::{atom_term, graft, Atom, MagmaTerm, ProductSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Open,
    Close,
    Leaf(Atom),
}

pub fn tokens_of(t: &MagmaTerm) -> Vec<Tok> {
    let mut out = Vec::new();
    emit(t, &mut out);
    out
}

fn emit(t: &MagmaTerm, out: &mut Vec<Tok>) {
    match t {
        MagmaTerm::Leaf(a) => out.push(Tok::Leaf(a.clone())),
        MagmaTerm::Pair(l, r) => {
            out.push(Tok::Open);
            emit(l, out);
            emit(r, out);
            out.push(Tok::Close);
        }
    }
}

/// Strict binary reading of a token string; `None` unless the whole
/// string is one well-formed term.
fn parse_tokens(toks: &[Tok]) -> Option<MagmaTerm> {
    fn term(toks: &[Tok], pos: &mut usize) -> Option<MagmaTerm> {
        match toks.get(*pos)? {
            Tok::Leaf(a) => {
                *pos += 1;
                Some(atom_term(a.clone()))
            }
            Tok::Open => {
                *pos += 1;
                let left = term(toks, pos)?;
                let right = term(toks, pos)?;
                match toks.get(*pos) {
                    Some(Tok::Close) => {
                        *pos += 1;
                        Some(graft(left, right))
                    }
                    _ => None,
                }
            }
            Tok::Close => None,
        }
    }
    let mut pos = 0;
    let parsed = term(toks, &mut pos)?;
    (pos == toks.len()).then_some(parsed)
}

/// Index of the closing bracket matching the opening bracket at
/// `open_idx`, assuming the string is balanced.
fn matching_close(toks: &[Tok], open_idx: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, tok) in toks.iter().enumerate().skip(open_idx) {
        match tok {
            Tok::Open => depth += 1,
            Tok::Close => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    return Some(i);
                }
            }
            Tok::Leaf(_) => {}
        }
    }
    None
}

/// All one-step replacements of leaf `h` (1-based) of `source` by the
/// adjacent pair `left right`, derived purely at string level: the
/// leaf token is replaced by the two new leaves, then one `(` and one
/// `)` are inserted at every pair of gap positions. A candidate counts
/// when it parses as a strictly binary term and the inserted pair
/// matches itself, which leaves every original pair matched exactly as
/// before.
pub fn insertion_oracle(
    source: &MagmaTerm,
    h: usize,
    left: &Atom,
    right: &Atom,
) -> BTreeSet<MagmaTerm> {
    let mut toks = Vec::new();
    let mut seen_leaves = 0usize;
    for tok in tokens_of(source) {
        match tok {
            Tok::Leaf(a) => {
                seen_leaves += 1;
                if seen_leaves == h {
                    toks.push(Tok::Leaf(left.clone()));
                    toks.push(Tok::Leaf(right.clone()));
                } else {
                    toks.push(Tok::Leaf(a));
                }
            }
            other => toks.push(other),
        }
    }
    assert!(h >= 1 && h <= seen_leaves, "leaf position in range");

    let mut results = BTreeSet::new();
    let len = toks.len();
    for i in 0..=len {
        for j in i..=len {
            let mut candidate = Vec::with_capacity(len + 2);
            candidate.extend_from_slice(&toks[..i]);
            candidate.push(Tok::Open);
            candidate.extend_from_slice(&toks[i..j]);
            candidate.push(Tok::Close);
            candidate.extend_from_slice(&toks[j..]);
            if let Some(parsed) = parse_tokens(&candidate) {
                if matching_close(&candidate, i) == Some(j + 1) {
                    results.insert(parsed);
                }
            }
        }
    }
    results
}

/// A random term whose leaves are uniformly drawn tuples of `space`,
/// with a uniformly drawn split at every internal node.
pub fn random_space_term(rng: &mut ChaCha8Rng, space: &ProductSpace, leaves: usize) -> MagmaTerm {
    if leaves == 1 {
        let coords = space
            .components()
            .iter()
            .map(|c| rng.gen_range(0..c.size()))
            .collect();
        return atom_term(Atom::Tuple(coords));
    }
    let split = rng.gen_range(1..leaves);
    graft(
        random_space_term(rng, space, split),
        random_space_term(rng, space, leaves - split),
    )
}

/// A random term mixing symbol and tuple atoms, for parser round-trips.
pub fn random_mixed_term(rng: &mut ChaCha8Rng, leaves: usize) -> MagmaTerm {
    if leaves == 1 {
        let atom = if rng.gen_bool(0.5) {
            let labels = ["x", "y", "z", "w", "alpha_1", "b2", "_tmp"];
            Atom::symbol(labels[rng.gen_range(0..labels.len())]).unwrap()
        } else {
            let arity = rng.gen_range(1..=3);
            Atom::tuple((0..arity).map(|_| rng.gen_range(0..12)).collect()).unwrap()
        };
        return atom_term(atom);
    }
    let split = rng.gen_range(1..leaves);
    graft(
        random_mixed_term(rng, split),
        random_mixed_term(rng, leaves - split),
    )
}

/// Output of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

pub fn run_cli(args: &[&str]) -> CliOutput {
    let output = Command::new(env!("CARGO_BIN_EXE_magmatic"))
        .args(args)
        .output()
        .expect("spawn magmatic binary");
    CliOutput {
        stdout: output.stdout,
        stderr: output.stderr,
        code: output.status.code().expect("exit code"),
    }
}

/// Writes the morph fixtures into `dir` and returns the full golden
/// scenario list as (name, argv) pairs.
pub fn golden_scenarios(dir: &Path) -> Vec<(String, Vec<String>)> {
    let table = dir.join("z2.tbl");
    std::fs::write(&table, "# mod-2 addition\n0 1\n0 1\n1 0\n").unwrap();
    let map = dir.join("ones.map");
    std::fs::write(&map, "x 1\ny 1\nz 1\n").unwrap();
    let table = table.display().to_string();
    let map = map.display().to_string();

    let own = |args: &[&str]| args.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        ("parse_ok".into(), own(&["parse", "(x (y z))"])),
        ("parse_ternary".into(), own(&["parse", "(x y z)"])),
        ("parse_atom".into(), own(&["parse", "x"])),
        ("shapes_1".into(), own(&["shapes", "1"])),
        ("shapes_4".into(), own(&["shapes", "4"])),
        ("shapes_7".into(), own(&["shapes", "7"])),
        ("catalan_5".into(), own(&["catalan", "5"])),
        (
            "explore_isolated".into(),
            own(&["explore", "--components", "const0:2", "<1>"]),
        ),
        (
            "explore_cap2".into(),
            own(&["explore", "--components", "const0:2", "--size-cap", "2", "<0>"]),
        ),
        (
            "explore_dot".into(),
            own(&[
                "explore",
                "--components",
                "const0:2",
                "--size-cap",
                "2",
                "--format",
                "dot",
                "<0>",
            ]),
        ),
        (
            "equiv_zigzag".into(),
            own(&[
                "equiv",
                "--components",
                "const0:2",
                "--size-cap",
                "3",
                "(<1> <0>)",
                "(<0> <1>)",
            ]),
        ),
        (
            "equiv_negative".into(),
            own(&["equiv", "--components", "const0:2", "<1>", "<0>"]),
        ),
        (
            "equiv_merge".into(),
            own(&["equiv", "--components", "Z2", "(<0> <0>)", "<0>"]),
        ),
        (
            "equiv_reflexive".into(),
            own(&["equiv", "--components", "Z2", "(<0> <1>)", "(<0> <1>)"]),
        ),
        (
            "equiv_unknown_node".into(),
            own(&[
                "equiv",
                "--components",
                "Z2",
                "--size-cap",
                "4",
                "--node-cap",
                "30",
                "<0>",
                "<1>",
            ]),
        ),
        (
            "equiv_unknown_size".into(),
            own(&[
                "equiv",
                "--components",
                "Z2",
                "--size-cap",
                "3",
                "<0>",
                "<1>",
            ]),
        ),
        (
            "delta_const0".into(),
            own(&[
                "delta",
                "--components",
                "const0:2",
                "--size-cap",
                "3",
                "--node-cap",
                "1000",
                "<1>",
                "<1>",
            ]),
        ),
        (
            "morph_three_ones".into(),
            own(&["morph", "--magma", &table, "--map", &map, "(x (y z))"]),
        ),
        (
            "morph_two_ones".into(),
            own(&["morph", "--magma", &table, "--map", &map, "(x y)"]),
        ),
        (
            "morph_unmapped".into(),
            own(&["morph", "--magma", &table, "--map", &map, "(x w)"]),
        ),
        (
            "witness_free_assoc".into(),
            own(&["witness", "associativity", "--free"]),
        ),
        (
            "witness_free_comm".into(),
            own(&["witness", "commutativity", "--free"]),
        ),
        (
            "witness_unknown_z2".into(),
            own(&[
                "witness",
                "commutativity",
                "--components",
                "Z2",
                "--size-cap",
                "4",
                "--node-cap",
                "120",
            ]),
        ),
        (
            "witness_certified_comm".into(),
            own(&[
                "witness",
                "commutativity",
                "--components",
                "const0:3,const0:3",
                "--size-cap",
                "4",
                "--node-cap",
                "12",
            ]),
        ),
        (
            "witness_certified_assoc".into(),
            own(&[
                "witness",
                "associativity",
                "--components",
                "const0:3,const0:3",
                "--size-cap",
                "4",
                "--node-cap",
                "12",
            ]),
        ),
        (
            "missing_components".into(),
            own(&["explore", "<0>"]),
        ),
    ]
}
