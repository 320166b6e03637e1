//! The symmetric pair catalog: each pair embeds a Cartan subalgebra of the
//! fixed point subalgebra into the host, and the simple roots restrict along
//! that embedding. Simple roots with equal restrictions form the classes
//! that govern the entire classification.
//!
//! Run with `cargo run --example pair_embeddings`.

use parcomp::pairs::{reference_pairs, PairFamily, SymmetricPair};

fn main() {
    let pair = SymmetricPair::build(PairFamily::SlSoOdd { n: 2 }).unwrap();
    println!("pair {} on host {}", pair.family().describe(), pair.host().label());
    println!("embedded Cartan subalgebra dimension: {}", pair.hprime_dim());

    println!("embedding columns (a basis of h' inside the host coordinates):");
    for j in 0..pair.hprime_dim() {
        println!("  b_{} -> {}", j + 1, pair.embedding().col_vec(j));
    }

    println!("restricted simple roots:");
    for alpha in pair.host().simple_roots() {
        let restricted = pair.restrict(alpha);
        println!("  {}|h' = {}", alpha.name(), restricted.coeffs());
    }
    println!("restriction classes: {:?}", pair.classes());

    println!("\nthe whole catalog:");
    for p in reference_pairs() {
        println!(
            "  {:<18} host {:<9} h'dim {}  classes {:?}",
            p.family().to_string(),
            p.host().label().to_string(),
            p.hprime_dim(),
            p.classes()
        );
    }
}
