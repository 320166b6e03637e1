//! The catalogued Borel witnesses: each unequal-rank family carries an
//! explicit hyperbolic element that exhibits the Borel subalgebra (the empty
//! index set) as compatible. The witnesses are verified exactly and shown in
//! both coordinate systems.
//!
//! Run with `cargo run --example explicit_witnesses`.

use parcomp::classify::verify_witness;
use parcomp::pairs::{PairFamily, SymmetricPair};
use parcomp::rootsys::ParabolicIndex;

fn main() {
    let families = [
        PairFamily::SlSoOdd { n: 2 },
        PairFamily::SlSoOdd { n: 3 },
        PairFamily::SlSoEven { n: 2 },
        PairFamily::SlSp { n: 3 },
        PairFamily::SoSoOddOdd { m: 2, n: 1 },
        PairFamily::E6Sp8,
        PairFamily::E6F4,
    ];
    for family in families {
        let pair = SymmetricPair::build(family).unwrap();
        let witness = pair.borel_witness().expect("unequal-rank families have one");
        let embedded = pair.embed(&witness);
        let verified = verify_witness(&pair, &ParabolicIndex::empty(), &witness).unwrap();
        assert!(verified, "catalogued witnesses always verify");

        println!("{}:", pair.family().describe());
        println!("  H' = {witness}  ->  H = {embedded}");
        let values: Vec<String> = pair
            .host()
            .simple_roots()
            .iter()
            .map(|alpha| format!("{}(H) = {}", alpha.name(), alpha.evaluate(&embedded)))
            .collect();
        println!("  {}", values.join(", "));
    }
}
