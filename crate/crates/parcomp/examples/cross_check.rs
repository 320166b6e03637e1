//! Confronts the two independent answers over the whole reference catalog:
//! the exhaustive feasibility oracle and the closed-form class predicate
//! must agree on every one of the roughly five hundred index sets.
//!
//! Run with `cargo run --example cross_check`.

use parcomp::classify::cross_check;
use parcomp::pairs::reference_pairs;

fn main() {
    let mut total = 0;
    let mut compatible = 0;
    for pair in reference_pairs() {
        let report = cross_check(&pair).unwrap();
        total += report.total();
        compatible += report.compatible();
        println!(
            "{:<18} {:>3} subsets, {:>3} compatible, {} mismatches",
            pair.family().to_string(),
            report.total(),
            report.compatible(),
            report.mismatches().len(),
        );
        assert!(report.is_clean(), "oracle and predicate must agree");
    }
    println!("\n{total} subsets checked across the catalog, {compatible} compatible");
    println!("the feasibility oracle and the class predicate agree everywhere");
}
