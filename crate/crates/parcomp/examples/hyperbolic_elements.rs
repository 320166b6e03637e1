//! The two-way dictionary between standard parabolic subalgebras and
//! hyperbolic elements: a nonnegative coweight combination defines the
//! parabolic whose Levi roots are exactly the simple roots it kills, and an
//! arbitrary Cartan element is classified back.
//!
//! Run with `cargo run --example hyperbolic_elements`.

use parcomp::ratlinalg::{rat_int, RatVector};
use parcomp::rootsys::{HyperbolicClass, Label, ParabolicIndex, RootSystem};

fn main() {
    let system = RootSystem::build(Label::A(4)).unwrap();

    // Positive coefficients on T_2 and T_3 kill alpha_1 and alpha_4.
    let h = system.coweight(2).add(&system.coweight(3).scale(&rat_int(5)));
    println!("H = T_2 + 5 T_3 = {h}");
    match system.parabolic_from_hyperbolic(&h).unwrap() {
        HyperbolicClass::Standard(pi) => println!("defines the standard parabolic p_{pi}"),
        HyperbolicClass::NonStandard { .. } => unreachable!("coefficients are nonnegative"),
    }

    let pi = ParabolicIndex::new([1, 4]);
    let descriptor = system.standard_parabolic(&pi);
    println!("\np_{pi} splits the positive roots:");
    println!("  Levi roots:       {}", names(&descriptor.levi_positive_roots));
    println!("  nilradical roots: {}", names(&descriptor.nilradical_roots));

    // A diagonal that is negative on some simple root is not hyperbolic for
    // any standard parabolic.
    let bad = RatVector::from_ints(&[1, -2, 3, -1, -1]);
    println!("\nH = {bad} classifies as:");
    match system.parabolic_from_hyperbolic(&bad).unwrap() {
        HyperbolicClass::Standard(pi) => println!("  standard p_{pi}"),
        HyperbolicClass::NonStandard { signs } => {
            println!("  non-standard; positive-root sign pattern {signs:?}")
        }
    }
}

fn names(roots: &[parcomp::rootsys::Root]) -> String {
    let list: Vec<&str> = roots.iter().map(|r| r.name()).collect();
    if list.is_empty() {
        "(none)".to_string()
    } else {
        list.join(", ")
    }
}
