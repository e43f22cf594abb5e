//! Searching for certified counterexamples to commutativity and
//! associativity of the quotient operation. Only an exhausted class
//! can certify a negative, so the search reports honestly: witness or
//! unknown, never a guess.
//!
//! ```bash
//! cargo run --example witness_search
//! ```

use magmatic::{
    magmatic_product, self_magmatic, AlgebraicProperty, ExplorationCaps, FiniteMagma,
    ProductSpace, WitnessOutcome,
};

fn report(outcome: &WitnessOutcome) {
    match outcome {
        WitnessOutcome::Witness(details) => {
            let atoms: Vec<String> = details.atoms.iter().map(|a| a.to_string()).collect();
            println!("  WITNESS over atoms {}", atoms.join(" "));
            println!("    lhs = {}", details.lhs);
            println!("    rhs = {}", details.rhs);
        }
        WitnessOutcome::Unknown(stats) => {
            println!(
                "  UNKNOWN after {} candidates ({} equivalent, {} undecided)",
                stats.candidates, stats.equivalent, stats.unknown
            );
        }
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // over the self-magmatic Z2 every class is infinite, so nothing can
    // be certified; the lone commutativity candidate is even equivalent
    let z2 = self_magmatic(FiniteMagma::zn(2)?)?;
    println!("Z2 self-product, commutativity:");
    report(&z2.witness_search(AlgebraicProperty::Commutativity, ExplorationCaps::new(4, 120))?);

    // const0(3) x const0(3) has atoms that neither split nor merge, so
    // whole classes exhaust and both laws fail certifiably
    let rigid = magmatic_product(ProductSpace::new(vec![
        FiniteMagma::const0(3)?,
        FiniteMagma::const0(3)?,
    ])?);
    let caps = ExplorationCaps::new(4, 12);
    println!("const0:3 x const0:3, commutativity:");
    report(&rigid.witness_search(AlgebraicProperty::Commutativity, caps)?);
    println!("const0:3 x const0:3, associativity:");
    report(&rigid.witness_search(AlgebraicProperty::Associativity, caps)?);
    Ok(())
}
