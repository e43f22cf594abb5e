//! Finite magmas as Cayley tables: builtins, tables from text, the
//! exhaustive commutativity/associativity check, and morphism testing.
//!
//! ```bash
//! cargo run --example finite_magmas
//! ```

use magmatic::{is_morphism, FiniteMagma};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z3 = FiniteMagma::zn(3)?;
    println!("{z3}: 1 * 2 = {}", z3.element_name(z3.apply(1, 2)?));
    let flags = z3.classify();
    println!(
        "  commutative = {}, associative = {}",
        flags.commutative, flags.associative
    );

    // the constant table: everything multiplies to 0, so nothing else
    // is ever a product
    let c = FiniteMagma::const0(2)?;
    println!("{c}: 1 * 1 = {}", c.element_name(c.apply(1, 1)?));

    // a table from text, with comments; rows list products by name
    let text = "\
# left projection: row wins
a b
a a
b b
";
    let proj = FiniteMagma::from_table_text("proj", text)?;
    let flags = proj.classify();
    println!(
        "{proj}: commutative = {}, associative = {}",
        flags.commutative, flags.associative
    );

    // morphism checking is exhaustive over all pairs
    let z2 = FiniteMagma::zn(2)?;
    println!("identity on Z2 is a morphism: {}", is_morphism(&[0, 1], &z2, &z2));
    println!("swap on Z2 is a morphism:     {}", is_morphism(&[1, 0], &z2, &z2));
    println!(
        "collapse Z2 -> const0(2):     {}",
        is_morphism(&[0, 0], &z2, &c)
    );
    Ok(())
}
