//! The text form of terms: parsing, formatting, whitespace
//! normalization, and byte-offset error reporting.
//!
//! ```bash
//! cargo run --example parse_roundtrip
//! ```

use magmatic::parse;

fn main() {
    // canonical output has single spaces and no padding
    let noisy = "  ( x   ( y   <2,0> ) ) ";
    let term = parse(noisy).unwrap();
    println!("input     : {noisy:?}");
    println!("canonical : {term}");

    // round trip is exact
    let again = parse(&term.to_string()).unwrap();
    assert_eq!(again, term);
    println!("reparsed  : {again}");

    // errors carry the byte offset of the offending token
    for bad in ["", "(x y z)", "(x y", "x)", "(x 9y)", "(x)"] {
        match parse(bad) {
            Ok(t) => println!("{bad:?} unexpectedly parsed as {t}"),
            Err(e) => println!("{bad:?} -> {e}"),
        }
    }
}
