//! Root systems of types `A(n)`, `D(n)`, and `E6` over explicit rational
//! coordinate models of a Cartan subalgebra `h`.
//!
//! Roots are stored as linear functionals on the model coordinates together
//! with their expansion over the simple roots, so both evaluation at a Cartan
//! element and support/height queries are exact and cheap. Three models cover
//! every system built here, plus a doubled variant for product algebras
//! `g ⊕ g`:
//!
//! * `A(n)` lives on trace-zero diagonal matrices in `sl(n+1)`: tuples
//!   `(a_1, …, a_{n+1})` with zero sum.
//! * `D(n)` lives on the diagonal Cartan subalgebra of `so(2n)`: free tuples
//!   `(a_1, …, a_n)` standing for `diag(a_1, …, a_n, -a_n, …, -a_1)`.
//! * `E6` uses coordinates over the simple coroots, so a functional's value
//!   on a coroot basis vector is read off the Cartan matrix:
//!   `alpha_i(H_{alpha_j}) = C[i][j]`.
//!
//! The module also supplies both directions of the parabolic dictionary:
//! an index set `Π` of simple roots determines a standard parabolic
//! (Levi/nilradical split of the positive roots), and a hyperbolic element
//! `H` with `alpha(H) ≥ 0` on all simple roots determines the index set
//! `{alpha : alpha(H) = 0}`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlinalg::{rat_int, solve_linear, LinearSolution, RatMatrix, RatVector, Rational};

/// Everything after this many generated roots is treated as runaway input.
const ROOT_CAP: usize = 500;

/// Cartan matrix of `E6`, branch node `alpha_4`: the Dynkin diagram is the
/// chain `alpha_2 - alpha_3 - alpha_4 - alpha_5 - alpha_6` with `alpha_1`
/// attached to `alpha_4`.
const E6_CARTAN: [[i64; 6]; 6] = [
    [2, 0, 0, -1, 0, 0],
    [0, 2, -1, 0, 0, 0],
    [0, -1, 2, -1, 0, 0],
    [-1, 0, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
];

/// Isomorphism type of a constructible root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    A(usize),
    D(usize),
    E6,
    /// Two independent copies of the base system, as in `g ⊕ g`.
    Double(Box<Label>),
}

impl Label {
    /// Parses a CLI-style label: kind `A`/`D`/`E6` plus a rank where needed.
    pub fn from_parts(kind: &str, rank: Option<usize>) -> Result<Label> {
        match (kind.to_ascii_uppercase().as_str(), rank) {
            ("A", Some(n)) => Ok(Label::A(n)),
            ("D", Some(n)) => Ok(Label::D(n)),
            ("E6", _) => Ok(Label::E6),
            ("A" | "D", None) => Err(Error::InvalidParameter(format!(
                "label {kind} needs a rank"
            ))),
            _ => Err(Error::UnsupportedRootSystem(format!(
                "unknown label {kind:?} (expected A, D, or E6)"
            ))),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(n) => write!(f, "A({n})"),
            Label::D(n) => write!(f, "D({n})"),
            Label::E6 => write!(f, "E6"),
            Label::Double(base) => write!(f, "{base}+{base}"),
        }
    }
}

/// Concrete coordinates used for elements of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordinateModel {
    /// Tuples `(a_1, …, a_size)` with zero coordinate sum.
    DiagonalTraceZero { size: usize },
    /// Free tuples `(a_1, …, a_size)`.
    DiagonalFree { size: usize },
    /// Coefficients over the simple coroots `H_{alpha_1}, …, H_{alpha_rank}`.
    CorootBasis { rank: usize },
    /// Two independent blocks of the inner model.
    Double(Box<CoordinateModel>),
}

impl CoordinateModel {
    pub fn ambient_dim(&self) -> usize {
        match self {
            CoordinateModel::DiagonalTraceZero { size } => *size,
            CoordinateModel::DiagonalFree { size } => *size,
            CoordinateModel::CorootBasis { rank } => *rank,
            CoordinateModel::Double(inner) => 2 * inner.ambient_dim(),
        }
    }

    /// Linear functionals that must vanish for a tuple to lie in the model.
    fn gauge_rows(&self) -> Vec<RatVector> {
        match self {
            CoordinateModel::DiagonalTraceZero { size } => {
                vec![RatVector::from_ints(&vec![1; *size])]
            }
            CoordinateModel::DiagonalFree { .. } | CoordinateModel::CorootBasis { .. } => {
                Vec::new()
            }
            CoordinateModel::Double(inner) => {
                let n = inner.ambient_dim();
                let mut rows = Vec::new();
                for block in 0..2 {
                    for row in inner.gauge_rows() {
                        rows.push(shift_into(&row, block * n, 2 * n));
                    }
                }
                rows
            }
        }
    }

    /// Exact membership test for the model's coordinate space.
    pub fn contains(&self, v: &RatVector) -> bool {
        v.dim() == self.ambient_dim() && self.gauge_rows().iter().all(|g| g.dot(v).is_zero())
    }

    pub fn describe(&self) -> String {
        match self {
            CoordinateModel::DiagonalTraceZero { size } => format!("diagonal-trace-zero({size})"),
            CoordinateModel::DiagonalFree { size } => format!("diagonal-free({size})"),
            CoordinateModel::CorootBasis { rank } => format!("coroot-basis({rank})"),
            CoordinateModel::Double(inner) => format!("double({})", inner.describe()),
        }
    }
}

/// Embeds `v` into a wider zero vector starting at `offset`.
fn shift_into(v: &RatVector, offset: usize, total: usize) -> RatVector {
    let mut entries = vec![Rational::zero(); total];
    for (i, e) in v.iter().enumerate() {
        entries[offset + i] = e.clone();
    }
    RatVector::new(entries)
}

/// A root, kept both as a functional on model coordinates and as an integer
/// combination of simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    name: String,
    coeffs: RatVector,
    simple_coeffs: Vec<i64>,
}

impl Root {
    pub fn new(name: String, coeffs: RatVector, simple_coeffs: Vec<i64>) -> Self {
        Root { name, coeffs, simple_coeffs }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Functional coefficients over the ambient model coordinates.
    pub fn coeffs(&self) -> &RatVector {
        &self.coeffs
    }

    /// Expansion over the simple roots.
    pub fn simple_coeffs(&self) -> &[i64] {
        &self.simple_coeffs
    }

    /// Value of the root on a Cartan element in model coordinates.
    pub fn evaluate(&self, h: &RatVector) -> Rational {
        self.coeffs.dot(h)
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }

    /// 1-based indices of the simple roots appearing in the expansion.
    pub fn support(&self) -> Vec<usize> {
        self.simple_coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Display name for a root: `a1-a2` style when the functional is a signed
/// pair of coordinates (diagonal models), `alpha_i` combinations otherwise.
fn compose_root_name(coeffs: &RatVector, simple_coeffs: &[i64]) -> String {
    if let Some(name) = diagonal_style_name(coeffs) {
        return name;
    }
    coroot_style_name(simple_coeffs)
}

fn diagonal_style_name(v: &RatVector) -> Option<String> {
    let nonzero: Vec<(usize, &Rational)> =
        v.iter().enumerate().filter(|(_, e)| !e.is_zero()).collect();
    let [(i, a), (j, b)] = nonzero.as_slice() else {
        return None;
    };
    if !a.is_one() {
        return None;
    }
    if b.is_one() {
        Some(format!("a{}+a{}", i + 1, j + 1))
    } else if (-(*b).clone()).is_one() {
        Some(format!("a{}-a{}", i + 1, j + 1))
    } else {
        None
    }
}

fn coroot_style_name(simple_coeffs: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in simple_coeffs.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(format!("alpha_{}", i + 1)),
            _ => parts.push(format!("{}alpha_{}", c, i + 1)),
        }
    }
    parts.join("+")
}

/// Closes a simple system under root addition using the string property:
/// for a root `beta` and simple root `alpha_i`, `beta + alpha_i` is a root
/// exactly when `p - <beta, alpha_i^v> > 0`, where `p` is the largest `k`
/// with `beta - k alpha_i` still a root. Generation proceeds by height, so
/// every root needed for the downward count is already known.
///
/// Returns all positive roots (simples included) sorted by height, then by
/// descending lexicographic coefficient vector, which places roots supported
/// on earlier simple indices first.
pub fn generate_positive_roots(simple_roots: &[Root], cartan: &RatMatrix) -> Result<Vec<Root>> {
    let rank = simple_roots.len();
    assert_eq!(cartan.rows(), rank, "Cartan matrix must be rank x rank");
    assert_eq!(cartan.cols(), rank, "Cartan matrix must be rank x rank");
    let pairing: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let e = cartan.get(i, j);
                    assert!(e.denom().is_one(), "Cartan entries must be integers");
                    i64::try_from(e.numer().clone()).expect("Cartan entry out of range")
                })
                .collect()
        })
        .collect();

    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut m = vec![0i64; rank];
        m[i] = 1;
        known.insert(m.clone());
        frontier.push(m);
    }

    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                // p = length of the downward alpha_i string through beta.
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&c| c >= 0) && known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let cartan_value: i64 =
                    beta.iter().zip(&pairing).map(|(&m, row)| m * row[i]).sum();
                if p - cartan_value > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if known.len() > ROOT_CAP {
            return Err(Error::RootClosureOverflow { cap: ROOT_CAP });
        }
        frontier = next;
    }

    let mut expansions: Vec<Vec<i64>> = known.into_iter().collect();
    expansions.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let ambient = simple_roots[0].coeffs().dim();
    Ok(expansions
        .into_iter()
        .map(|m| {
            let mut coeffs = RatVector::zeros(ambient);
            for (j, &c) in m.iter().enumerate() {
                if c != 0 {
                    coeffs = coeffs.add(&simple_roots[j].coeffs().scale(&rat_int(c)));
                }
            }
            let name = compose_root_name(&coeffs, &m);
            Root::new(name, coeffs, m)
        })
        .collect())
}

/// Set of simple-root indices (1-based) naming a standard parabolic `p_Π`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicIndex {
    indices: BTreeSet<usize>,
}

impl ParabolicIndex {
    pub fn empty() -> Self {
        ParabolicIndex::default()
    }

    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        ParabolicIndex { indices: indices.into_iter().collect() }
    }

    /// Bit `i` of `mask` selects index `i + 1`, so counting masks upward
    /// enumerates subsets in binary order.
    pub fn from_mask(mask: u64) -> Self {
        ParabolicIndex::new((0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1))
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.contains(&index)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.indices.iter().next_back().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.indices.iter().copied().collect()
    }
}

impl FromIterator<usize> for ParabolicIndex {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ParabolicIndex::new(iter)
    }
}

impl fmt::Display for ParabolicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Positive roots of a standard parabolic split into Levi and nilradical.
#[derive(Clone, Debug)]
pub struct ParabolicDescriptor {
    pub pi: ParabolicIndex,
    pub levi_positive_roots: Vec<Root>,
    pub nilradical_roots: Vec<Root>,
}

/// Sign of a root value, used to report non-dominant hyperbolic elements.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Outcome of reading a parabolic off a hyperbolic element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperbolicClass {
    /// All simple roots are nonnegative on `H`; the parabolic is standard and
    /// indexed by the simple roots vanishing on `H`.
    Standard(ParabolicIndex),
    /// Some simple root is negative on `H`. The full sign vector over the
    /// positive roots (in canonical order) is reported instead.
    NonStandard { signs: Vec<Sign> },
}

/// A built root system: simple roots, all positive roots in canonical order,
/// the Cartan matrix, and the fundamental coweights dual to the simples.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: Label,
    rank: usize,
    model: CoordinateModel,
    simple_roots: Vec<Root>,
    cartan_matrix: RatMatrix,
    positive_roots: Vec<Root>,
    coweights: Vec<RatVector>,
}

impl RootSystem {
    /// Builds the root system named by `label`.
    ///
    /// `A(n)` needs `n >= 1`, `D(n)` needs `n >= 2`, and `E6` is fixed;
    /// anything else is rejected. Doubled labels build the base system and
    /// duplicate it across two independent coordinate blocks.
    pub fn build(label: Label) -> Result<RootSystem> {
        match label {
            Label::A(n) => {
                if n < 1 {
                    return Err(Error::UnsupportedRootSystem(
                        "A(n) requires n >= 1".to_string(),
                    ));
                }
                let model = CoordinateModel::DiagonalTraceZero { size: n + 1 };
                let simples: Vec<RatVector> = (0..n)
                    .map(|i| {
                        let mut v = vec![0i64; n + 1];
                        v[i] = 1;
                        v[i + 1] = -1;
                        RatVector::from_ints(&v)
                    })
                    .collect();
                Self::assemble(Label::A(n), model, simples, None)
            }
            Label::D(n) => {
                if n < 2 {
                    return Err(Error::UnsupportedRootSystem(
                        "D(n) requires n >= 2".to_string(),
                    ));
                }
                let model = CoordinateModel::DiagonalFree { size: n };
                let mut simples: Vec<RatVector> = (0..n - 1)
                    .map(|i| {
                        let mut v = vec![0i64; n];
                        v[i] = 1;
                        v[i + 1] = -1;
                        RatVector::from_ints(&v)
                    })
                    .collect();
                let mut last = vec![0i64; n];
                last[n - 2] = 1;
                last[n - 1] = 1;
                simples.push(RatVector::from_ints(&last));
                Self::assemble(Label::D(n), model, simples, None)
            }
            Label::E6 => {
                let model = CoordinateModel::CorootBasis { rank: 6 };
                let cartan = RatMatrix::from_int_rows(
                    &E6_CARTAN.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
                );
                // In coroot coordinates the functional of alpha_i is row i of
                // the Cartan matrix: alpha_i(H_{alpha_j}) = C[i][j].
                let simples: Vec<RatVector> = (0..6).map(|i| cartan.row_vec(i)).collect();
                Self::assemble(Label::E6, model, simples, Some(cartan))
            }
            Label::Double(base) => {
                let base = Self::build(*base)?;
                Ok(Self::double(&base))
            }
        }
    }

    /// Common construction path: name the simples, derive the Cartan matrix
    /// (as the Gram matrix of the functionals for the simply-laced diagonal
    /// models) unless given, close up the positive roots, solve for the
    /// coweights.
    fn assemble(
        label: Label,
        model: CoordinateModel,
        simple_functionals: Vec<RatVector>,
        cartan: Option<RatMatrix>,
    ) -> Result<RootSystem> {
        let rank = simple_functionals.len();
        let cartan = cartan.unwrap_or_else(|| {
            let mut c = RatMatrix::zeros(rank, rank);
            for i in 0..rank {
                for j in 0..rank {
                    c.set(i, j, simple_functionals[i].dot(&simple_functionals[j]));
                }
            }
            c
        });
        let simple_roots: Vec<Root> = simple_functionals
            .into_iter()
            .enumerate()
            .map(|(i, coeffs)| {
                let mut expansion = vec![0i64; rank];
                expansion[i] = 1;
                let name = compose_root_name(&coeffs, &expansion);
                Root::new(name, coeffs, expansion)
            })
            .collect();
        let positive_roots = generate_positive_roots(&simple_roots, &cartan)?;
        let coweights = compute_coweights(&model, &simple_roots);
        Ok(RootSystem {
            label,
            rank,
            model,
            simple_roots,
            cartan_matrix: cartan,
            positive_roots,
            coweights,
        })
    }

    /// Two independent copies of `base` on doubled coordinates.
    fn double(base: &RootSystem) -> RootSystem {
        let n = base.model.ambient_dim();
        let rank = 2 * base.rank;
        let shift_root = |root: &Root, block: usize| -> Root {
            let coeffs = shift_into(root.coeffs(), block * n, 2 * n);
            let mut expansion = vec![0i64; rank];
            for (j, &c) in root.simple_coeffs().iter().enumerate() {
                expansion[block * base.rank + j] = c;
            }
            let name = compose_root_name(&coeffs, &expansion);
            Root::new(name, coeffs, expansion)
        };

        let mut simple_roots = Vec::with_capacity(rank);
        let mut coweights = Vec::with_capacity(rank);
        for block in 0..2 {
            for root in &base.simple_roots {
                simple_roots.push(shift_root(root, block));
            }
            for w in &base.coweights {
                coweights.push(shift_into(w, block * n, 2 * n));
            }
        }

        let mut cartan = RatMatrix::zeros(rank, rank);
        for block in 0..2 {
            for i in 0..base.rank {
                for j in 0..base.rank {
                    cartan.set(
                        block * base.rank + i,
                        block * base.rank + j,
                        base.cartan_matrix.get(i, j).clone(),
                    );
                }
            }
        }

        let mut positive_roots: Vec<Root> = Vec::with_capacity(2 * base.positive_roots.len());
        for block in 0..2 {
            for root in &base.positive_roots {
                positive_roots.push(shift_root(root, block));
            }
        }
        positive_roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.simple_coeffs().cmp(a.simple_coeffs()))
        });

        RootSystem {
            label: Label::Double(Box::new(base.label.clone())),
            rank,
            model: CoordinateModel::Double(Box::new(base.model.clone())),
            simple_roots,
            cartan_matrix: cartan,
            positive_roots,
            coweights,
        }
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn model(&self) -> &CoordinateModel {
        &self.model
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        assert!((1..=self.rank).contains(&i), "simple root index out of range");
        &self.simple_roots[i - 1]
    }

    pub fn cartan_matrix(&self) -> &RatMatrix {
        &self.cartan_matrix
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Fundamental coweight `T_i` (1-based): the unique element of `h` with
    /// `alpha_j(T_i) = delta_ij` over the simple roots.
    pub fn coweight(&self, i: usize) -> &RatVector {
        assert!((1..=self.rank).contains(&i), "coweight index out of range");
        &self.coweights[i - 1]
    }

    pub fn coweights(&self) -> &[RatVector] {
        &self.coweights
    }

    /// Splits the positive roots of the standard parabolic `p_Π`: the Levi
    /// factor keeps exactly the roots supported inside `Π`, the nilradical
    /// takes the rest.
    pub fn standard_parabolic(&self, pi: &ParabolicIndex) -> ParabolicDescriptor {
        assert!(
            pi.max_index().is_none_or(|m| m <= self.rank),
            "parabolic index out of range for rank {}",
            self.rank
        );
        let mut levi = Vec::new();
        let mut nilradical = Vec::new();
        for root in &self.positive_roots {
            if root.support().iter().all(|&i| pi.contains(i)) {
                levi.push(root.clone());
            } else {
                nilradical.push(root.clone());
            }
        }
        ParabolicDescriptor { pi: pi.clone(), levi_positive_roots: levi, nilradical_roots: nilradical }
    }

    /// Reads the parabolic determined by a hyperbolic element `H`: if every
    /// simple root is nonnegative on `H` the result is `Standard(Π)` with
    /// `Π = {alpha : alpha(H) = 0}`; otherwise the sign vector of `H` over
    /// the positive roots is returned.
    pub fn parabolic_from_hyperbolic(&self, h: &RatVector) -> Result<HyperbolicClass> {
        if h.dim() != self.model.ambient_dim() {
            return Err(Error::ModelMismatch(format!(
                "expected {} coordinates for {}, got {}",
                self.model.ambient_dim(),
                self.model.describe(),
                h.dim()
            )));
        }
        if !self.model.contains(h) {
            return Err(Error::ModelMismatch(format!(
                "element violates the constraints of {}",
                self.model.describe()
            )));
        }
        let values: Vec<Rational> =
            self.simple_roots.iter().map(|a| a.evaluate(h)).collect();
        if values.iter().any(Signed::is_negative) {
            let signs = self
                .positive_roots
                .iter()
                .map(|r| Sign::of(&r.evaluate(h)))
                .collect();
            return Ok(HyperbolicClass::NonStandard { signs });
        }
        Ok(HyperbolicClass::Standard(ParabolicIndex::new(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_zero())
                .map(|(i, _)| i + 1),
        )))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vec_json = |v: &RatVector| -> Vec<String> {
            v.iter().map(|e| e.to_string()).collect()
        };
        serde_json::json!({
            "label": self.label.to_string(),
            "rank": self.rank,
            "model": self.model.describe(),
            "simple_roots": self.simple_roots.iter().map(|r| serde_json::json!({
                "name": r.name(),
                "coeffs": vec_json(r.coeffs()),
            })).collect::<Vec<_>>(),
            "cartan_matrix": (0..self.rank)
                .map(|i| vec_json(&self.cartan_matrix.row_vec(i)))
                .collect::<Vec<_>>(),
            "positive_root_count": self.positive_roots.len(),
        })
    }
}

/// Solves the dual system for every fundamental coweight: simple-root rows
/// plus the model's gauge rows pin each `T_i` inside `h` uniquely.
fn compute_coweights(model: &CoordinateModel, simples: &[Root]) -> Vec<RatVector> {
    let mut rows: Vec<RatVector> = simples.iter().map(|r| r.coeffs().clone()).collect();
    rows.extend(model.gauge_rows());
    let a = RatMatrix::from_rows(&rows);
    (0..simples.len())
        .map(|i| {
            let mut rhs = vec![Rational::zero(); rows.len()];
            rhs[i] = Rational::one();
            match solve_linear(&a, &RatVector::new(rhs)) {
                Ok(LinearSolution::Unique(t)) => t,
                other => unreachable!(
                    "coweight system must have a unique solution, got {other:?}"
                ),
            }
        })
        .collect()
}
