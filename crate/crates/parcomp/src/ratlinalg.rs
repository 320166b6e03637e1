//! Exact rational scalars, vectors, matrices, and Gaussian elimination.
//!
//! Scalars are arbitrary-precision rationals ([`num_rational::BigRational`]),
//! kept reduced with a positive denominator by construction. Elimination picks
//! the first nonzero pivot; with exact arithmetic there is nothing to gain
//! from pivot strategies, and a fixed rule keeps results deterministic.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Rational from an integer numerator and denominator. Panics on a zero
/// denominator; use [`checked_div`] for fallible division.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (the same forms [`format_rational`] emits).
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::ParseRational(s.to_string()))
}

/// Renders as `"p/q"`, or just `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Dense vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVector {
    entries: Vec<Rational>,
}

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector { entries: vec![Rational::zero(); dim] }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RatVector { entries: values.iter().map(|&v| rat_int(v)).collect() }
    }

    /// The `i`-th standard basis vector (0-based) of the given dimension.
    pub fn standard_basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim(), "vector sum dimension mismatch");
        RatVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim(), "vector difference dimension mismatch");
        RatVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> RatVector {
        RatVector::new(self.entries.iter().map(|a| a * k).collect())
    }

    /// Sum of all coordinates (the trace in diagonal models).
    pub fn coord_sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// Rescales by a positive rational so that all entries are integers with
    /// no common factor. The zero vector is returned unchanged.
    pub fn clear_denominators(&self) -> RatVector {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for n in &ints {
            gcd = gcd.gcd(n);
        }
        RatVector::new(ints.into_iter().map(|n| Rational::from_integer(n / &gcd)).collect())
    }

    /// True when every entry has denominator one.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        RatMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Stacks equal-length vectors as rows. Panics on ragged input.
    pub fn from_rows(rows: &[RatVector]) -> Self {
        assert!(!rows.is_empty(), "cannot build a matrix from zero rows");
        let cols = rows[0].dim();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.dim(), cols, "ragged rows");
            data.extend(r.entries().iter().cloned());
        }
        RatMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let vecs: Vec<RatVector> = rows.iter().map(|r| RatVector::from_ints(r)).collect();
        Self::from_rows(&vecs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row_vec(&self, r: usize) -> RatVector {
        RatVector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col_vec(&self, c: usize) -> RatVector {
        RatVector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &RatVector) -> RatVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        RatVector::new((0..self.rows).map(|r| self.row_vec(r).dot(v)).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form over the first `active_cols` columns;
    /// returns the pivot columns. Remaining columns are carried along, which
    /// is how augmented systems are reduced.
    fn rref(&mut self, active_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..active_cols {
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in 0..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j) - &factor * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row_vec(r))?;
        }
        Ok(())
    }
}

/// Result of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(RatVector),
    NoSolution,
    /// Affine solution set `particular + span(null_basis)`.
    Parametric {
        particular: RatVector,
        null_basis: Vec<RatVector>,
    },
}

/// Solves `A x = b` by Gauss-Jordan elimination on the augmented matrix.
pub fn solve_linear(a: &RatMatrix, b: &RatVector) -> Result<LinearSolution> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has {} entries",
            a.rows(),
            b.dim()
        )));
    }
    let n = a.cols();
    let mut aug = RatMatrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let pivots = aug.rref(n);

    for r in pivots.len()..a.rows() {
        if !aug.get(r, n).is_zero() {
            return Ok(LinearSolution::NoSolution);
        }
    }

    let mut particular = RatVector::zeros(n);
    for (r, &c) in pivots.iter().enumerate() {
        particular.entries[c] = aug.get(r, n).clone();
    }
    if pivots.len() == n {
        return Ok(LinearSolution::Unique(particular));
    }
    let null_basis = null_basis_from_rref(&aug, &pivots, n);
    Ok(LinearSolution::Parametric { particular, null_basis })
}

/// Basis of `{x : A x = 0}`; empty when the kernel is trivial.
pub fn null_space(a: &RatMatrix) -> Vec<RatVector> {
    let mut m = a.clone();
    let pivots = m.rref(a.cols());
    null_basis_from_rref(&m, &pivots, a.cols())
}

fn null_basis_from_rref(m: &RatMatrix, pivots: &[usize], n: usize) -> Vec<RatVector> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_set.contains(c)) {
        let mut v = RatVector::zeros(n);
        v.entries[free] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v.entries[c] = -m.get(r, free).clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_arithmetic_is_exact_and_reduced() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(2, 4).denom(), rat(1, 2).denom());
        assert_eq!(rat(7, 10) * rat(10, 7), rat_int(1));
        assert_eq!(rat(-4, -6), rat(2, 3));
        assert!(rat(-1, 2).denom() > &BigInt::zero());
    }

    #[test]
    fn checked_div_reports_zero_divisor() {
        assert_eq!(checked_div(&rat(3, 4), &rat(1, 2)).unwrap(), rat(3, 2));
        assert!(matches!(
            checked_div(&rat_int(1), &Rational::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn rational_round_trips_through_text() {
        for s in ["2/3", "-7/5", "4", "0", "-12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational(" 6/8 ").unwrap(), rat(3, 4));
        assert!(parse_rational("one half").is_err());
    }

    #[test]
    fn solve_diagonal_system() {
        let a = RatMatrix::from_int_rows(&[vec![2, 0], vec![0, 2]]);
        let b = RatVector::from_ints(&[2, 4]);
        assert_eq!(
            solve_linear(&a, &b).unwrap(),
            LinearSolution::Unique(RatVector::from_ints(&[1, 2]))
        );
    }

    #[test]
    fn solve_underdetermined_system() {
        let a = RatMatrix::from_int_rows(&[vec![1, 1]]);
        let b = RatVector::from_ints(&[0]);
        match solve_linear(&a, &b).unwrap() {
            LinearSolution::Parametric { particular, null_basis } => {
                assert!(particular.is_zero());
                assert_eq!(null_basis.len(), 1);
                // The kernel of (1 1) is spanned by (1, -1) up to scale.
                let v = &null_basis[0];
                assert_eq!(v[0], -v[1].clone());
                assert!(!v.is_zero());
            }
            other => panic!("expected parametric solution, got {other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent_system() {
        let a = RatMatrix::from_int_rows(&[vec![1, 0], vec![1, 0]]);
        let b = RatVector::from_ints(&[0, 1]);
        assert_eq!(solve_linear(&a, &b).unwrap(), LinearSolution::NoSolution);
    }

    #[test]
    fn solve_rejects_mismatched_rhs() {
        let a = RatMatrix::from_int_rows(&[vec![1, 0]]);
        let b = RatVector::from_ints(&[1, 2]);
        assert!(matches!(solve_linear(&a, &b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn null_space_examples() {
        let zero = RatMatrix::zeros(1, 2);
        assert_eq!(null_space(&zero).len(), 2);

        let id = RatMatrix::identity(3);
        assert!(null_space(&id).is_empty());

        let a = RatMatrix::from_int_rows(&[vec![1, 1, 1]]);
        let basis = null_space(&a);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.mul_vec(v).is_zero());
        }
        assert_eq!(rank(&basis), 2);
    }

    #[test]
    fn clear_denominators_yields_primitive_integer_vector() {
        let v = RatVector::new(vec![rat(1, 2), rat(-3, 4), rat_int(0)]);
        let w = v.clear_denominators();
        assert_eq!(w, RatVector::from_ints(&[2, -3, 0]));
        assert!(RatVector::zeros(3).clear_denominators().is_zero());
        let u = RatVector::from_ints(&[4, 6]).clear_denominators();
        assert_eq!(u, RatVector::from_ints(&[2, 3]));
    }

    /// Row rank, used to confirm returned bases are linearly independent.
    fn rank(vectors: &[RatVector]) -> usize {
        if vectors.is_empty() {
            return 0;
        }
        let mut m = RatMatrix::from_rows(vectors);
        let cols = m.cols();
        m.rref(cols).len()
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    fn small_matrix_and_point() -> impl Strategy<Value = (RatMatrix, RatVector)> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols)| {
            (
                prop::collection::vec(small_rational(), rows * cols),
                prop::collection::vec(small_rational(), cols),
            )
                .prop_map(move |(data, x)| {
                    (RatMatrix::new(rows, cols, data), RatVector::new(x))
                })
        })
    }

    proptest! {
        /// A system built from a known point is never inconsistent, and the
        /// returned solution reproduces the right-hand side exactly.
        #[test]
        fn solve_recovers_consistent_systems((a, x) in small_matrix_and_point()) {
            let b = a.mul_vec(&x);
            match solve_linear(&a, &b).unwrap() {
                LinearSolution::Unique(sol) => prop_assert_eq!(a.mul_vec(&sol), b),
                LinearSolution::Parametric { particular, null_basis } => {
                    prop_assert_eq!(a.mul_vec(&particular), b);
                    for v in &null_basis {
                        prop_assert!(a.mul_vec(v).is_zero());
                    }
                    prop_assert_eq!(rank(&null_basis), null_basis.len());
                }
                LinearSolution::NoSolution => prop_assert!(false, "consistent system reported unsolvable"),
            }
        }

        /// Kernel basis vectors annihilate the matrix and are independent,
        /// and the rank-nullity count is consistent.
        #[test]
        fn null_space_is_a_kernel_basis((a, _x) in small_matrix_and_point()) {
            let basis = null_space(&a);
            for v in &basis {
                prop_assert!(a.mul_vec(v).is_zero());
            }
            prop_assert_eq!(rank(&basis), basis.len());
            let mut m = a.clone();
            let cols = m.cols();
            let row_rank = m.rref(cols).len();
            prop_assert_eq!(row_rank + basis.len(), a.cols());
        }
    }
}
