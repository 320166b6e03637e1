//! Full classification of one pair: every index set is decided by exact
//! linear feasibility, and every compatible parabolic gets a primitive
//! integer witness in the embedded Cartan subalgebra.
//!
//! Run with `cargo run --example classify_pair`.

use parcomp::classify::classify_all;
use parcomp::pairs::{PairFamily, SymmetricPair};

fn main() {
    let pair = SymmetricPair::build(PairFamily::E6Sp8).unwrap();
    let classification = classify_all(&pair).unwrap();

    println!(
        "pair {} on host {}: {} of {} index sets are compatible\n",
        pair.family().describe(),
        pair.host().label(),
        classification.compatible_count(),
        classification.results().len(),
    );

    println!("compatible index sets and witnesses:");
    for result in classification.compatible() {
        let witness = result.witness().expect("compatible entries carry witnesses");
        let embedded = result.embedded_witness().expect("and their embedded form");
        println!("  {:<14} H' = {:<16} H = {}", result.pi().to_string(), witness.to_string(), embedded);
    }

    // Every compatible set is a union of the restriction classes; the
    // incompatible ones all split some class.
    let classes = pair.classes();
    println!("\nrestriction classes: {classes:?}");
    let splitting = classification
        .results()
        .iter()
        .filter(|r| !r.compatible())
        .filter(|r| {
            classes.iter().all(|c| {
                let hits = c.iter().filter(|&&i| r.pi().contains(i)).count();
                hits == 0 || hits == c.len()
            })
        })
        .count();
    println!("incompatible sets that respect every class: {splitting} (must be 0)");
}
