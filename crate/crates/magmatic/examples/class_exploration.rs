//! Exploring equivalence classes under explicit caps, and the three
//! possible answers to an equivalence query: a verified path, a
//! certified negative, or an honest unknown.
//!
//! ```bash
//! cargo run --example class_exploration
//! ```

use magmatic::{
    parse, self_magmatic, EquivalenceVerdict, ExplorationCaps, FiniteMagma,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the constant table: 1 never factors, so <1> is isolated and its
    // class is provably complete
    let ctx = self_magmatic(FiniteMagma::const0(2)?)?;
    let caps = ExplorationCaps::new(3, 1000);

    let isolated = ctx.class_of(&parse("<1>")?, caps)?;
    println!(
        "class of <1>: members={} exhausted={} rep={}",
        isolated.len(),
        isolated.exhausted(),
        isolated.representative()
    );

    // 0 factors every way, so its class keeps growing until a cap cuts in
    let zero = ctx.class_of(&parse("<0>")?, caps)?;
    println!(
        "class of <0>: members={} exhausted={} rep={}",
        zero.len(),
        zero.exhausted(),
        zero.representative()
    );

    // positive verdicts carry a replayable step path
    match ctx.equivalent(&parse("(<1> <0>)")?, &parse("(<0> <1>)")?, caps)? {
        EquivalenceVerdict::Equivalent(path) => {
            println!("\n(<1> <0>) ~ (<0> <1>) via:");
            print!("{}", path.render());
        }
        other => println!("unexpected verdict {other:?}"),
    }

    // a certified negative needs an exhausted component
    let verdict = ctx.equivalent(&parse("<1>")?, &parse("<0>")?, caps)?;
    println!("\n<1> ~ <0>? {verdict:?}");

    // over Z2 every value splits, classes are infinite, and small caps
    // can only say so
    let z2 = self_magmatic(FiniteMagma::zn(2)?)?;
    let verdict = z2.equivalent(&parse("<0>")?, &parse("<1>")?, ExplorationCaps::new(4, 50))?;
    println!("<0> ~ <1> over Z2 within caps? {verdict:?}");
    Ok(())
}
