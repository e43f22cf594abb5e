//! One-step replacements: expanding a leaf into an adjacent pair under
//! both groupings, enumerating successors and predecessors, and
//! transporting steps through a surrounding context.
//!
//! ```bash
//! cargo run --example replacement_steps
//! ```

use magmatic::{
    apply_replacement, build_split_table, graft, lift_step_append, parse, predecessors,
    successors, verify_step, FiniteMagma, Grouping, ProductSpace, ReplacementStep,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = ProductSpace::new(vec![FiniteMagma::zn(2)?])?;
    let table = build_split_table(&space);

    // the two ways to place the one new bracket pair: <1> = <0> + <1>,
    // expanded inside (x y)
    let xi = parse("(<1> <1>)")?;
    for grouping in [Grouping::GroupLeft, Grouping::GroupRight] {
        let step = ReplacementStep::new(1, 0, (0, 1), grouping);
        let eta = apply_replacement(&xi, &step, &space)?;
        println!("{xi} --[{step}]--> {eta}");
        assert!(verify_step(&xi, &step, &eta, &space));
    }

    // all successors of an atom (single split site, root grouping)
    println!("\nsuccessors of <0>:");
    for (step, eta) in successors(&parse("<0>")?, &space, &table)? {
        println!("  {step}  ->  {eta}");
    }

    // predecessors invert the relation, verified by re-application
    let eta = parse("(<0> (<1> <1>))")?;
    println!("\npredecessors of {eta}:");
    for (source, step) in predecessors(&eta, &space, &table)? {
        println!("  {source}  --[{step}]-->");
        assert!(verify_step(&source, &step, &eta, &space));
    }

    // a step survives grafting a context on: only Root steps change
    // flavor, since the split site gains siblings
    let context = parse("(<0> <1>)")?;
    let step = ReplacementStep::new(1, 0, (0, 1), Grouping::GroupLeft);
    let eta = apply_replacement(&xi, &step, &space)?;
    let lifted = lift_step_append(&step);
    let big_xi = graft(xi.clone(), context.clone());
    let big_eta = graft(eta, context);
    println!("\nlifted: {big_xi} --[{lifted}]--> {big_eta}");
    assert!(verify_step(&big_xi, &lifted, &big_eta, &space));
    Ok(())
}
