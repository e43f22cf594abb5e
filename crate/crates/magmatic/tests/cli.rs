//! Golden tests for the command-line surface: exact stdout, exit
//! codes, and the DOT export contract.

mod common;

use common::run_cli;
use magmatic::{parse, verify_step, Grouping, ProductSpace, ReplacementStep};
use magmatic::{build_split_table, FiniteMagma};

fn expect(args: &[&str], stdout: &str, code: i32) {
    let out = run_cli(args);
    assert_eq!(
        String::from_utf8(out.stdout.clone()).unwrap(),
        stdout,
        "stdout mismatch for {args:?}"
    );
    assert_eq!(out.code, code, "exit code mismatch for {args:?}");
}

#[test]
fn parse_prints_canonical_form_leaves_and_shape() {
    expect(
        &["parse", "(x (y z))"],
        "canonical = (x (y z))\nleaves = 3\nshape = (\u{b7}(\u{b7}\u{b7}))\n",
        0,
    );
    expect(&["parse", "x"], "canonical = x\nleaves = 1\nshape = \u{b7}\n", 0);
    expect(
        &["parse", "  ( <0,1>   y ) "],
        "canonical = (<0,1> y)\nleaves = 2\nshape = (\u{b7}\u{b7})\n",
        0,
    );
}

#[test]
fn parse_rejects_ternary_brackets_with_offset() {
    let out = run_cli(&["parse", "(x y z)"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(
        stderr,
        "error: bracket pair encloses 3 factors at offset 0\n"
    );
}

#[test]
fn shapes_lists_every_skeleton_and_the_count() {
    expect(&["shapes", "1"], "\u{b7}\ncount = C_0 = 1\n", 0);
    expect(
        &["shapes", "4"],
        "(\u{b7}(\u{b7}(\u{b7}\u{b7})))\n(\u{b7}((\u{b7}\u{b7})\u{b7}))\n((\u{b7}\u{b7})(\u{b7}\u{b7}))\n((\u{b7}(\u{b7}\u{b7}))\u{b7})\n(((\u{b7}\u{b7})\u{b7})\u{b7})\ncount = C_3 = 5\n",
        0,
    );
    let out = run_cli(&["shapes", "7"]);
    assert_eq!(out.code, 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 133);
    assert_eq!(lines[132], "count = C_6 = 132");
    // over the default limit
    let out = run_cli(&["shapes", "13"]);
    assert_eq!(out.code, 2);
}

#[test]
fn catalan_prints_exact_values() {
    expect(&["catalan", "0"], "C_0 = 1\n", 0);
    expect(&["catalan", "3"], "C_3 = 5\n", 0);
    expect(&["catalan", "5"], "C_5 = 42\n", 0);
    expect(
        &["catalan", "40"],
        "C_40 = 2622127042276492108820\n",
        0,
    );
}

#[test]
fn explore_text_reports_members_exhaustion_and_representative() {
    expect(
        &["explore", "--components", "const0:2", "<1>"],
        "members=1 exhausted=true rep=<1>\n",
        0,
    );
    expect(
        &["explore", "--components", "const0:2", "--size-cap", "2", "<0>"],
        "members=5 exhausted=false rep=<0>\n",
        0,
    );
}

#[test]
fn explore_requires_components() {
    let out = run_cli(&["explore", "<0>"]);
    assert_eq!(out.code, 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("--components"), "stderr: {stderr}");
}

#[test]
fn explore_dot_is_parseable_and_edge_consistent() {
    let out = run_cli(&[
        "explore",
        "--components",
        "const0:2",
        "--size-cap",
        "2",
        "--format",
        "dot",
        "<0>",
    ]);
    assert_eq!(out.code, 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "digraph replacement {\n  \"<0>\";\n  \"(<0> <0>)\";\n  \"(<0> <1>)\";\n  \"(<1> <0>)\";\n  \"(<1> <1>)\";\n  \"<0>\" -> \"(<0> <0>)\" [label=\"h=1 j=0 split=(0,0) group=Root\"];\n  \"<0>\" -> \"(<0> <1>)\" [label=\"h=1 j=0 split=(0,1) group=Root\"];\n  \"<0>\" -> \"(<1> <0>)\" [label=\"h=1 j=0 split=(1,0) group=Root\"];\n  \"<0>\" -> \"(<1> <1>)\" [label=\"h=1 j=0 split=(1,1) group=Root\"];\n}\n"
    );

    // node count equals the reported member count
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"digraph replacement {"));
    assert_eq!(lines.last(), Some(&"}"));
    let nodes: Vec<&str> = lines
        .iter()
        .filter(|l| l.ends_with(';') && !l.contains("->"))
        .copied()
        .collect();
    assert_eq!(nodes.len(), 5);

    // every edge re-verifies as a replacement step
    let space = ProductSpace::new(vec![FiniteMagma::const0(2).unwrap()]).unwrap();
    let _table = build_split_table(&space);
    let mut edges = 0;
    for line in lines.iter().filter(|l| l.contains("->")) {
        let line = line
            .trim()
            .strip_suffix("];")
            .unwrap()
            .trim_start_matches('"');
        let (from_text, rest) = line.split_once("\" -> \"").unwrap();
        let (to_text, label) = rest.split_once("\" [label=\"").unwrap();
        let label = label.strip_suffix('"').unwrap();
        let from = parse(from_text).unwrap();
        let to = parse(to_text).unwrap();
        let step = parse_step(label);
        assert!(verify_step(&from, &step, &to, &space), "edge {line}");
        edges += 1;
    }
    assert_eq!(edges, 4);
}

fn parse_step(text: &str) -> ReplacementStep {
    let mut leaf_pos = None;
    let mut component = None;
    let mut split = None;
    let mut grouping = None;
    for part in text.split(' ') {
        let (key, value) = part.split_once('=').unwrap();
        match key {
            "h" => leaf_pos = Some(value.parse().unwrap()),
            "j" => component = Some(value.parse().unwrap()),
            "split" => {
                let inner = value
                    .strip_prefix('(')
                    .and_then(|v| v.strip_suffix(')'))
                    .unwrap();
                let (a, b) = inner.split_once(',').unwrap();
                split = Some((a.parse().unwrap(), b.parse().unwrap()));
            }
            "group" => {
                grouping = Some(match value {
                    "Root" => Grouping::Root,
                    "L" => Grouping::GroupLeft,
                    "R" => Grouping::GroupRight,
                    other => panic!("unknown grouping {other}"),
                })
            }
            other => panic!("unknown step field {other}"),
        }
    }
    ReplacementStep::new(
        leaf_pos.unwrap(),
        component.unwrap(),
        split.unwrap(),
        grouping.unwrap(),
    )
}

#[test]
fn equiv_prints_verdicts_and_exit_codes() {
    // two-step zigzag through the merged atom
    expect(
        &[
            "equiv",
            "--components",
            "const0:2",
            "--size-cap",
            "3",
            "(<1> <0>)",
            "(<0> <1>)",
        ],
        "EQUIVALENT\n-h=1 j=0 split=(1,0) group=Root\n+h=1 j=0 split=(0,1) group=Root\n",
        0,
    );
    // certified negative
    expect(
        &["equiv", "--components", "const0:2", "<1>", "<0>"],
        "NOT-EQUIVALENT (certified)\n",
        1,
    );
    // single merge step
    expect(
        &["equiv", "--components", "Z2", "(<0> <0>)", "<0>"],
        "EQUIVALENT\n-h=1 j=0 split=(0,0) group=Root\n",
        0,
    );
    // reflexivity: empty path
    expect(
        &["equiv", "--components", "Z2", "(<0> <1>)", "(<0> <1>)"],
        "EQUIVALENT\n",
        0,
    );
    // unknown, node cap first
    expect(
        &[
            "equiv",
            "--components",
            "Z2",
            "--size-cap",
            "4",
            "--node-cap",
            "30",
            "<0>",
            "<1>",
        ],
        "UNKNOWN (node-cap)\n",
        3,
    );
    // unknown, size cap: the bounded component is finite but pruned
    expect(
        &[
            "equiv",
            "--components",
            "Z2",
            "--size-cap",
            "3",
            "<0>",
            "<1>",
        ],
        "UNKNOWN (size-cap)\n",
        3,
    );
}

#[test]
fn delta_reports_the_product_class() {
    expect(
        &[
            "delta",
            "--components",
            "const0:2",
            "--size-cap",
            "3",
            "--node-cap",
            "1000",
            "<1>",
            "<1>",
        ],
        "members=21 exhausted=false rep=<0>\n",
        0,
    );
}

#[test]
fn morph_evaluates_terms_by_element_name() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("z2.tbl");
    std::fs::write(&table, "# mod-2 addition\n0 1\n0 1\n1 0\n").unwrap();
    let map = dir.path().join("ones.map");
    std::fs::write(&map, "x 1\ny 1\nz 1\n").unwrap();
    let table = table.display().to_string();
    let map = map.display().to_string();

    expect(
        &["morph", "--magma", &table, "--map", &map, "(x (y z))"],
        "1\n",
        0,
    );
    expect(&["morph", "--magma", &table, "--map", &map, "(x y)"], "0\n", 0);
    expect(&["morph", "--magma", &table, "--map", &map, "x"], "1\n", 0);

    let out = run_cli(&["morph", "--magma", &table, "--map", &map, "(x w)"]);
    assert_eq!(out.code, 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("no image"), "stderr: {stderr}");

    let out = run_cli(&["morph", "--magma", "/no/such/file", "--map", &map, "x"]);
    assert_eq!(out.code, 2);
}

#[test]
fn witness_free_level_always_finds_distinct_bracketings() {
    expect(
        &["witness", "associativity", "--free"],
        "WITNESS property=associativity (free)\nlhs = (x (y z))\nrhs = ((x y) z)\n",
        0,
    );
    expect(
        &["witness", "commutativity", "--free"],
        "WITNESS property=commutativity (free)\nlhs = (x y)\nrhs = (y x)\n",
        0,
    );
}

#[test]
fn witness_search_verdicts() {
    // Z2: the single candidate pair is equivalent, so the search ends unknown
    expect(
        &[
            "witness",
            "commutativity",
            "--components",
            "Z2",
            "--size-cap",
            "4",
            "--node-cap",
            "120",
        ],
        "UNKNOWN property=commutativity\ncandidates=1 equivalent=1 unknown=0\n",
        3,
    );
    // rigid atoms over const0:3 x const0:3 certify both failures
    expect(
        &[
            "witness",
            "commutativity",
            "--components",
            "const0:3,const0:3",
            "--size-cap",
            "4",
            "--node-cap",
            "12",
        ],
        "WITNESS property=commutativity\natoms = <1,1> <2,2>\nlhs = (<1,1> <2,2>)\nrhs = (<2,2> <1,1>)\ncandidates=30 equivalent=2 unknown=27\n",
        0,
    );
    expect(
        &[
            "witness",
            "associativity",
            "--components",
            "const0:3,const0:3",
            "--size-cap",
            "4",
            "--node-cap",
            "12",
        ],
        "WITNESS property=associativity\natoms = <1,1> <2,2> <1,1>\nlhs = ((<1,1> <2,2>) <1,1>)\nrhs = (<1,1> (<2,2> <1,1>))\ncandidates=401 equivalent=6 unknown=394\n",
        0,
    );
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run_cli(&["bogus"]).code, 2);
    assert_eq!(run_cli(&[]).code, 2);
    assert_eq!(run_cli(&["equiv", "--components", "Z2", "(x", "y"]).code, 2);
    assert_eq!(
        run_cli(&["explore", "--components", "Q8", "<0>"]).code,
        2
    );
    assert_eq!(
        run_cli(&["explore", "--components", "Z2", "--node-cap", "0", "<0>"]).code,
        2
    );
    // help is not an error
    assert_eq!(run_cli(&["--help"]).code, 0);
}
