//! Bracket skeletons and their Catalan counts: all shapes with a given
//! number of leaves, and the fiber of terms over one leaf string.
//!
//! ```bash
//! cargo run --example shapes_and_catalan
//! ```

use magmatic::{catalan, enumerate_shapes, fiber, Atom};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a term with n leaves can be bracketed in C_{n-1} ways
    for n in 1..=6 {
        println!("n = {n}: {} shapes (C_{} = {})", enumerate_shapes(n)?.len(), n - 1, catalan(n - 1));
    }

    println!("\nthe five skeletons with four leaves:");
    for shape in enumerate_shapes(4)? {
        println!("  {shape}");
    }

    // the fiber over a fixed leaf string: same atoms, every bracketing
    let atoms = vec![
        Atom::symbol("a")?,
        Atom::symbol("b")?,
        Atom::symbol("c")?,
        Atom::symbol("d")?,
    ];
    println!("\nall terms spelling \"a b c d\":");
    for term in fiber(&atoms)? {
        println!("  {term}");
    }

    // exact arithmetic keeps counting well past machine words
    println!("\nC_40 = {}", catalan(40));
    println!("C_64 = {}", catalan(64));
    Ok(())
}
