//! Constructing free-magma terms directly: wrap atoms, graft pairs,
//! and take them apart again.
//!
//! ```bash
//! cargo run --example build_terms
//! ```

use magmatic::{atom_term, graft, Atom};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = atom_term(Atom::symbol("x")?);
    let y = atom_term(Atom::symbol("y")?);
    let z = atom_term(Atom::symbol("z")?);

    // grafting never simplifies: the two three-leaf combinations stay distinct
    let right = graft(x.clone(), graft(y.clone(), z.clone()));
    let left = graft(graft(x, y), z);
    println!("right-nested : {right}");
    println!("left-nested  : {left}");
    println!("equal?       : {}", right == left);

    // both have the same leaf string, read left to right
    let leaves: Vec<String> = right.leaves().iter().map(|a| a.to_string()).collect();
    println!("leaf string  : {}", leaves.join(" "));
    println!(
        "leaves = {}, bracket pairs = {}",
        right.leaf_count(),
        right.internal_count()
    );

    // a term splits uniquely at the top
    let (u, v) = right.top_split()?;
    println!("top split    : {u}  |  {v}");

    // tuple atoms name coordinates of a composite system
    let pair = graft(
        atom_term(Atom::tuple(vec![0, 1])?),
        atom_term(Atom::tuple(vec![1, 0])?),
    );
    println!("tuple term   : {pair}");
    Ok(())
}
