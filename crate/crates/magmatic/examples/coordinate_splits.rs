//! Product spaces and coordinate splits: factoring one coordinate of
//! one tuple atom while every other coordinate is copied unchanged.
//!
//! ```bash
//! cargo run --example coordinate_splits
//! ```

use magmatic::{build_split_table, coordinate_splits, FiniteMagma, ProductSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = ProductSpace::new(vec![FiniteMagma::zn(2)?, FiniteMagma::const0(2)?])?;
    let table = build_split_table(&space);

    println!("space: Z2 x const0:2, arity {}", space.arity());

    // the split table inverts each component's operation
    for (j, component) in space.components().iter().enumerate() {
        for value in 0..component.size() {
            println!(
                "  component {j} ({}), value {value}: factorizations {:?}",
                component.name(),
                table.splits_of(j, value)
            );
        }
    }

    // splitting an atom: coordinate j is factored, the rest duplicated
    for coords in [vec![1, 0], vec![0, 1], vec![1, 1]] {
        let atom = space.atom(coords)?;
        let splits = coordinate_splits(&space, &table, &atom)?;
        println!("splits of {atom}: {}", splits.len());
        for s in &splits {
            println!("  j={} via {:?}: {} {}", s.component, s.pair, s.left, s.right);
        }
    }
    Ok(())
}
