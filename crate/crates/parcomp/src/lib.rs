//! Exact classification of standard parabolic subalgebras compatible with a
//! symmetric subalgebra.
//!
//! Given a complex semisimple Lie algebra `g` with an involution `τ`, a
//! standard parabolic subalgebra `p` of `g` is *compatible* with the fixed
//! point subalgebra `g^τ` when `p` is the nonnegative-eigenvalue subalgebra of
//! `ad(H)` for some hyperbolic element `H` of a Cartan subalgebra `h′ ⊆ g^τ`.
//! Deciding this reduces to an exact linear feasibility question over the
//! rationals: restrict the simple roots of `g` to `h′` and ask for a point
//! where the roots of the Levi factor vanish and all remaining simple roots
//! are strictly positive.
//!
//! The crate answers that question with arbitrary-precision rational
//! arithmetic end to end, so every verdict and every witness is exact:
//!
//! * [`ratlinalg`]: rational scalars, vectors, matrices, and Gaussian
//!   elimination (solving and null spaces).
//! * [`rootsys`]: root systems of types `A(n)`, `D(n)`, and `E6` with
//!   explicit coordinate models, fundamental coweights, and the two-way
//!   dictionary between parabolic index sets and hyperbolic elements.
//! * [`pairs`]: a catalog of symmetric pairs, each with an exact embedding of
//!   a Cartan subalgebra of `g^τ` into the host Cartan subalgebra.
//! * [`feasibility`]: a Fourier-Motzkin decision procedure for homogeneous
//!   systems of linear equalities and strict inequalities, with witness
//!   extraction.
//! * [`classify`]: the compatibility oracle, exhaustive classification,
//!   closed-form class predicate, and cross-checking between the two.
//! * [`cli`]: the `parcomp` command line tool built on all of the above.
//!
//! The `examples/` directory is the guided tour: one runnable program per
//! capability, from building root systems to reproducing the full
//! classification tables.

pub mod classify;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod pairs;
pub mod ratlinalg;
pub mod rootsys;

pub use classify::{
    class_predicate, classify_all, classify_all_parallel, cross_check, is_compatible,
    verify_witness, Classification, CompatibilityResult, CrossCheckReport,
};
pub use error::{Error, Result};
pub use feasibility::{decide, verify_solution, FeasibilityOutcome, StrictSystem};
pub use pairs::{reference_pairs, PairFamily, SymmetricPair};
pub use ratlinalg::{rat, LinearSolution, RatMatrix, RatVector, Rational};
pub use rootsys::{Label, ParabolicIndex, Root, RootSystem};

