//! Exact feasibility for homogeneous systems of linear equalities and strict
//! inequalities over the rationals.
//!
//! A [`StrictSystem`] asks for a point `x` with `e·x = 0` for every equality
//! functional and `s·x > 0` for every strict functional. [`decide`] answers
//! exactly, in two stages:
//!
//! 1. The equalities are removed by substituting a basis of their common
//!    kernel, turning the question into a pure strict-inequality system over
//!    the kernel coordinates.
//! 2. Fourier-Motzkin elimination removes one variable at a time. A positive
//!    combination of two strict inequalities is again strict, so elimination
//!    needs no epsilon bookkeeping: the system is infeasible exactly when some
//!    stage derives the contradiction `0 > 0`.
//!
//! When the system survives elimination, a witness is rebuilt by walking the
//! stages backwards and picking each variable inside its derived open
//! interval: the midpoint when both ends exist, one unit inside a single
//! finite end, and zero when the variable is unconstrained. All of it is
//! rational, so the witness is exact and [`verify_solution`] re-checks it
//! without tolerance.
//!
//! Everything is scale-invariant: multiplying any functional by a positive
//! rational changes neither the verdict nor feasibility of the returned
//! witness. Duplicate functionals (up to positive scale) are removed before
//! each elimination step to keep intermediate systems small.
//!
//! The eliminator always removes variables in ascending index order, which
//! keeps it deterministic. That is tailored to the systems root restriction
//! produces (few variables, sparse functionals, many duplicates); on dense
//! systems in six or more variables with many independent inequalities the
//! method's usual exponential growth applies.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlinalg::{null_space, RatMatrix, RatVector, Rational};

/// Homogeneous constraint system: `e·x = 0` and `s·x > 0` over `Q^dim`.
#[derive(Clone, Debug)]
pub struct StrictSystem {
    dim: usize,
    equalities: Vec<RatVector>,
    strict_positives: Vec<RatVector>,
}

impl StrictSystem {
    pub fn new(dim: usize) -> Self {
        StrictSystem { dim, equalities: Vec::new(), strict_positives: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn push_equality(&mut self, functional: RatVector) {
        assert_eq!(functional.dim(), self.dim, "equality dimension mismatch");
        self.equalities.push(functional);
    }

    pub fn push_strict_positive(&mut self, functional: RatVector) {
        assert_eq!(functional.dim(), self.dim, "strict inequality dimension mismatch");
        self.strict_positives.push(functional);
    }

    pub fn equalities(&self) -> &[RatVector] {
        &self.equalities
    }

    pub fn strict_positives(&self) -> &[RatVector] {
        &self.strict_positives
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows = |v: &[RatVector]| -> Vec<Vec<String>> {
            v.iter()
                .map(|f| f.iter().map(|e| e.to_string()).collect())
                .collect()
        };
        serde_json::json!({
            "dim": self.dim,
            "eq": rows(&self.equalities),
            "gt": rows(&self.strict_positives),
        })
    }
}

/// Exact answer from [`decide`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityOutcome {
    Feasible(RatVector),
    Infeasible,
}

impl FeasibilityOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityOutcome::Feasible(_))
    }

    pub fn witness(&self) -> Option<&RatVector> {
        match self {
            FeasibilityOutcome::Feasible(w) => Some(w),
            FeasibilityOutcome::Infeasible => None,
        }
    }
}

/// Decides a strict system exactly and produces a witness when feasible.
pub fn decide(sys: &StrictSystem) -> FeasibilityOutcome {
    // Stage 1: parameterize the equality kernel.
    let kernel: Vec<RatVector> = if sys.equalities.is_empty() {
        (0..sys.dim).map(|i| RatVector::standard_basis(sys.dim, i)).collect()
    } else {
        null_space(&RatMatrix::from_rows(&sys.equalities))
    };
    if kernel.is_empty() {
        // Only the origin satisfies the equalities.
        return if sys.strict_positives.is_empty() {
            FeasibilityOutcome::Feasible(RatVector::zeros(sys.dim))
        } else {
            FeasibilityOutcome::Infeasible
        };
    }

    // Express every strict functional in kernel coordinates.
    let k = kernel.len();
    let mut rows: Vec<RatVector> = sys
        .strict_positives
        .iter()
        .map(|f| RatVector::new(kernel.iter().map(|b| f.dot(b)).collect()))
        .collect();

    // Stage 2: Fourier-Motzkin elimination in ascending variable order.
    // stages[t] keeps the inequalities that mention variable t, for the
    // back-substitution walk.
    let mut stages: Vec<Vec<RatVector>> = Vec::with_capacity(k);
    for t in 0..k {
        dedup_up_to_positive_scale(&mut rows);
        if rows.iter().any(RatVector::is_zero) {
            return FeasibilityOutcome::Infeasible; // derived 0 > 0
        }
        let mut untouched = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for row in rows.drain(..) {
            match row[t].signum() {
                s if s.is_one() => pos.push(row),
                s if s.is_zero() => untouched.push(row),
                _ => neg.push(row),
            }
        }
        let mut next = untouched;
        for p in &pos {
            for n in &neg {
                // Positive combination cancelling variable t; strictness is
                // preserved because both inputs are strict.
                let combined = p.scale(&-n[t].clone()).add(&n.scale(&p[t]));
                next.push(combined);
            }
        }
        let mut involved = pos;
        involved.extend(neg);
        stages.push(involved);
        rows = next;
    }
    if !rows.is_empty() {
        // Every variable is eliminated, so leftovers all read 0 > 0.
        return FeasibilityOutcome::Infeasible;
    }

    // Back-substitution: pick each variable inside its open interval.
    let mut y = vec![Rational::zero(); k];
    for t in (0..k).rev() {
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for row in &stages[t] {
            let tail: Rational = (t + 1..k).map(|j| &row[j] * &y[j]).sum();
            let bound = -tail / &row[t];
            if row[t].is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        y[t] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l < u, "elimination certified an empty interval");
                (l + u) / Rational::from_integer(2.into())
            }
            (Some(l), None) => l + Rational::one(),
            (None, Some(u)) => u - Rational::one(),
            (None, None) => Rational::zero(),
        };
    }

    let mut x = RatVector::zeros(sys.dim);
    for (coeff, basis) in y.iter().zip(&kernel) {
        x = x.add(&basis.scale(coeff));
    }
    FeasibilityOutcome::Feasible(x)
}

/// Exact membership check for a candidate point.
pub fn verify_solution(sys: &StrictSystem, x: &RatVector) -> Result<bool> {
    if x.dim() != sys.dim {
        return Err(Error::DimensionMismatch(format!(
            "system over {} variables, candidate has {}",
            sys.dim,
            x.dim()
        )));
    }
    Ok(sys.equalities.iter().all(|e| e.dot(x).is_zero())
        && sys.strict_positives.iter().all(|s| s.dot(x).is_positive()))
}

/// Normalizes each functional by its leading absolute value and removes exact
/// duplicates. Positive rescaling never changes the constraint set.
fn dedup_up_to_positive_scale(rows: &mut Vec<RatVector>) {
    for row in rows.iter_mut() {
        if let Some(lead) = row.iter().find(|e| !e.is_zero()) {
            let scale = lead.abs().recip();
            *row = row.scale(&scale);
        }
    }
    rows.sort();
    rows.dedup();
}
