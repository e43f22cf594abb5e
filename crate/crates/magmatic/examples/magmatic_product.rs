//! The magmatic product: quotient classes of the free magma over a
//! product space, the induced operation on representatives, and the
//! canonical embedding of product atoms (which need not be injective).
//!
//! ```bash
//! cargo run --example magmatic_product
//! ```

use magmatic::{
    magmatic_product, parse, Atom, EquivalenceVerdict, ExplorationCaps, FiniteMagma, ProductSpace,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = ProductSpace::new(vec![FiniteMagma::zn(2)?, FiniteMagma::zn(2)?])?;
    let ctx = magmatic_product(space).with_default_caps(ExplorationCaps::new(3, 500));
    let caps = ctx.default_caps();

    // the embedding sends an atom to the class of its one-leaf term
    let embedded = ctx.embed(&Atom::tuple(vec![0, 1])?)?;
    println!(
        "embed <0,1>: members={} exhausted={} rep={}",
        embedded.len(),
        embedded.exhausted(),
        embedded.representative()
    );

    // it is not injective here: <0,1> splits coordinate 0 into equal
    // halves, which then merge at coordinate 1 into <1,0>
    match ctx.equivalent(&parse("<0,1>")?, &parse("<1,0>")?, ExplorationCaps::new(2, 500))? {
        EquivalenceVerdict::Equivalent(path) => {
            println!("\n<0,1> ~ <1,0>:");
            print!("{}", path.render());
        }
        other => println!("unexpected verdict {other:?}"),
    }

    // the quotient operation grafts representatives and re-explores
    let a = ctx.class_of(&parse("<1,1>")?, caps)?;
    let b = ctx.class_of(&parse("<0,1>")?, caps)?;
    let product = ctx.delta(&a, &b, caps)?;
    println!(
        "\ndelta([<1,1>], [<0,1>]): members={} exhausted={} rep={}",
        product.len(),
        product.exhausted(),
        product.representative()
    );
    assert!(product.contains(&parse("(<1,1> <0,1>)")?));
    Ok(())
}
