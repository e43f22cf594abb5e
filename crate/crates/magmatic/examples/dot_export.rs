//! Rendering the replacement graph of an explored class as DOT text,
//! one node per member and one labeled edge per in-class split.
//!
//! ```bash
//! cargo run --example dot_export > class.dot
//! dot -Tsvg class.dot -o class.svg   # with graphviz installed
//! ```

use magmatic::{parse, self_magmatic, ExplorationCaps, FiniteMagma};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = self_magmatic(FiniteMagma::const0(2)?)?;
    let handle = ctx.class_of(&parse("(<1> <0>)")?, ExplorationCaps::new(3, 200))?;
    let edges = ctx.class_edges(&handle)?;

    println!("digraph replacement {{");
    for member in handle.members() {
        println!("  \"{member}\";");
    }
    for (from, step, to) in &edges {
        println!("  \"{from}\" -> \"{to}\" [label=\"{step}\"];");
    }
    println!("}}");
    Ok(())
}
