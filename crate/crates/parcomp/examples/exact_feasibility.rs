//! The exact feasibility core on its own: homogeneous systems of equalities
//! and strict inequalities, decided over the rationals with witnesses.
//!
//! Run with `cargo run --example exact_feasibility`.

use parcomp::feasibility::{decide, verify_solution, FeasibilityOutcome, StrictSystem};
use parcomp::ratlinalg::RatVector;

fn report(name: &str, sys: &StrictSystem) {
    print!("{name}: ");
    match decide(sys) {
        FeasibilityOutcome::Feasible(w) => {
            // decide is sound: its own witness always re-verifies.
            assert_eq!(verify_solution(sys, &w), Ok(true));
            println!("feasible, witness {w} (primitive form {})", w.clear_denominators());
        }
        FeasibilityOutcome::Infeasible => println!("infeasible"),
    }
}

fn main() {
    // x1 = 0 and x2 > 0: witness on the x2 axis.
    let mut sys = StrictSystem::new(2);
    sys.push_equality(RatVector::from_ints(&[1, 0]));
    sys.push_strict_positive(RatVector::from_ints(&[0, 1]));
    report("axis system", &sys);

    // Opposed strict inequalities contradict each other.
    let mut sys = StrictSystem::new(1);
    sys.push_strict_positive(RatVector::from_ints(&[1]));
    sys.push_strict_positive(RatVector::from_ints(&[-1]));
    report("opposed pair", &sys);

    // A chain x1 > x2 > x3 > 0 solved by back-substitution.
    let mut sys = StrictSystem::new(3);
    sys.push_strict_positive(RatVector::from_ints(&[1, -1, 0]));
    sys.push_strict_positive(RatVector::from_ints(&[0, 1, -1]));
    sys.push_strict_positive(RatVector::from_ints(&[0, 0, 1]));
    report("strict chain", &sys);

    // The restriction-collapse shape: two coordinates forced equal, their
    // common value pushed positive.
    let mut sys = StrictSystem::new(2);
    sys.push_equality(RatVector::from_ints(&[1, -1]));
    sys.push_strict_positive(RatVector::from_ints(&[0, 1]));
    report("collapsed pair", &sys);

    println!("\nsystem dump: {}", sys.to_json());
}
