//! Builds the supported root systems and prints their basic data: simple
//! roots with their coordinate functionals, positive roots in the canonical
//! order, Cartan matrices, and fundamental coweights.
//!
//! Run with `cargo run --example root_systems`.

use parcomp::rootsys::{Label, RootSystem};

fn show(label: Label) {
    let system = RootSystem::build(label).expect("label is supported");
    println!("== {} ==", system.label());
    println!("rank {}, model {}", system.rank(), system.model().describe());

    println!("simple roots:");
    for alpha in system.simple_roots() {
        println!("  {}  as functional {}", alpha.name(), alpha.coeffs());
    }

    let positives = system.positive_roots();
    println!("{} positive roots, by height:", positives.len());
    for root in positives {
        println!("  height {:>2}  {}", root.height(), root);
    }

    println!("fundamental coweights (alpha_i(T_j) = delta_ij):");
    for i in 1..=system.rank() {
        println!("  T_{i} = {}", system.coweight(i));
    }
    println!();
}

fn main() {
    show(Label::A(3));
    show(Label::D(4));
    show(Label::E6);
}
