//! Evaluating terms in a finite magma: a map on generators extends to
//! exactly one morphism out of the free magma, computed leaf-up.
//!
//! ```bash
//! cargo run --example universal_morphism
//! ```

use magmatic::{eval_universal, fiber, graft, parse, Atom, FiniteMagma, GeneratorMap};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = FiniteMagma::zn(2)?;
    let mut ones = GeneratorMap::new();
    for label in ["x", "y", "z", "w"] {
        ones.insert(Atom::symbol(label)?, 1);
    }

    // sending every generator to 1 in Z2 counts leaves mod 2,
    // regardless of bracketing
    for text in ["x", "(x y)", "(x (y z))", "((x y) (z w))"] {
        let term = parse(text)?;
        let value = eval_universal(&ones, &z2, &term)?;
        println!("{text:left$} -> {}", z2.element_name(value), left = 17);
    }

    // bracketing-independence here is a fact about Z2, not about terms:
    // every bracketing of the same leaf string evaluates equally
    let atoms = vec![
        Atom::symbol("x")?,
        Atom::symbol("y")?,
        Atom::symbol("z")?,
        Atom::symbol("w")?,
    ];
    let values: Vec<usize> = fiber(&atoms)?
        .iter()
        .map(|t| eval_universal(&ones, &z2, t).unwrap())
        .collect();
    println!("all 4-leaf bracketings of x y z w -> {values:?}");

    // the morphism law: evaluating a graft multiplies the evaluations
    let u = parse("(x y)")?;
    let v = parse("z")?;
    let left = eval_universal(&ones, &z2, &graft(u.clone(), v.clone()))?;
    let right = z2.apply(
        eval_universal(&ones, &z2, &u)?,
        eval_universal(&ones, &z2, &v)?,
    )?;
    println!("F(u v) = {left}, F(u)F(v) = {right}");
    Ok(())
}
