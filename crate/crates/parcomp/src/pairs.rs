//! Catalog of complex symmetric pairs `(g, g^τ)` with exact embeddings
//! `h′ ⊆ h` of a Cartan subalgebra of the fixed point subalgebra into the
//! host Cartan subalgebra.
//!
//! Six families have unequal ranks, and they are the interesting ones: the
//! restriction of the simple roots to `h′` collapses some of them together,
//! which is what constrains the compatible parabolics.
//!
//! * `sl-so-odd`: `(sl(2n+1), so(2n+1))`, host `A(2n)`. `h′` consists of
//!   diagonals `(b_1, …, b_n, 0, -b_n, …, -b_1)`.
//! * `sl-so-even`: `(sl(2n), so(2n))`, host `A(2n-1)`, diagonals
//!   `(b_1, …, b_n, -b_n, …, -b_1)`.
//! * `sl-sp`: `(sl(2n), sp(2n))`, same `h′` as `sl-so-even`.
//! * `so-so`: `(so(2m+2n), so(2m-1) + so(2n+1))`, host `D(m+n)`, diagonals
//!   with the last coordinate forced to zero. Only `m + n` matters for the
//!   embedded subspace, so splits with equal totals classify identically.
//! * `e6-sp8`: `(e6, sp(8))`; `h′` is spanned by four explicit coroot
//!   combinations of the host.
//! * `e6-f4`: `(e6, f4)`; likewise with its own four coroots.
//!
//! Two more families have equal ranks and serve as controls:
//!
//! * `diagonal`: `(g + g, g)` embedded as `b ↦ (b, b)`; compatibility
//!   becomes the coupling `Π_1 = Π_2` between the two factors.
//! * `equal-rank`: `h′ = h`; the identity embedding keeps all simple roots
//!   distinct, so everything is compatible.
//!
//! For the equal-rank and diagonal families the columns of the embedding are
//! the fundamental coweights of the (base) host, which is a basis of `h`
//! valid in every coordinate model, including the trace-zero ones where `h`
//! is a proper subspace of the ambient coordinates.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ratlinalg::{rat_int, RatMatrix, RatVector, Rational};
use crate::rootsys::{Label, Root, RootSystem};
use num_traits::Zero;

/// Parameterized family of symmetric pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairFamily {
    /// `(sl(2n+1), so(2n+1))`, `n >= 1`.
    SlSoOdd { n: usize },
    /// `(sl(2n), so(2n))`, `n >= 2`.
    SlSoEven { n: usize },
    /// `(sl(2n), sp(2n))`, `n >= 2`.
    SlSp { n: usize },
    /// `(so(2m+2n), so(2m-1) + so(2n+1))`, `m >= 1`, `m + n >= 2`.
    SoSoOddOdd { m: usize, n: usize },
    /// `(e6, sp(8))`.
    E6Sp8,
    /// `(e6, f4)`.
    E6F4,
    /// `(g + g, g)` for a base system `g`.
    Diagonal { base: Label },
    /// Any pair whose ranks agree; `name` is display metadata for `g^τ`.
    EqualRank { host: Label, name: String },
}

impl PairFamily {
    /// Stable string tag used by the CLI and JSON output.
    pub fn tag(&self) -> &'static str {
        match self {
            PairFamily::SlSoOdd { .. } => "sl-so-odd",
            PairFamily::SlSoEven { .. } => "sl-so-even",
            PairFamily::SlSp { .. } => "sl-sp",
            PairFamily::SoSoOddOdd { .. } => "so-so",
            PairFamily::E6Sp8 => "e6-sp8",
            PairFamily::E6F4 => "e6-f4",
            PairFamily::Diagonal { .. } => "diagonal",
            PairFamily::EqualRank { .. } => "equal-rank",
        }
    }

    /// Human-readable `(g, g^τ)` description with parameters substituted.
    pub fn describe(&self) -> String {
        match self {
            PairFamily::SlSoOdd { n } => {
                format!("(sl({0}), so({0}))", 2 * n + 1)
            }
            PairFamily::SlSoEven { n } => format!("(sl({0}), so({0}))", 2 * n),
            PairFamily::SlSp { n } => format!("(sl({0}), sp({0}))", 2 * n),
            PairFamily::SoSoOddOdd { m, n } => format!(
                "(so({}), so({}) + so({}))",
                2 * (m + n),
                2 * m - 1,
                2 * n + 1
            ),
            PairFamily::E6Sp8 => "(e6, sp(8))".to_string(),
            PairFamily::E6F4 => "(e6, f4)".to_string(),
            PairFamily::Diagonal { base } => format!("({0}+{0}, diagonal {0})", base),
            PairFamily::EqualRank { host, name } => format!("({host}, {name})"),
        }
    }
}

impl fmt::Display for PairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairFamily::SlSoOdd { n } | PairFamily::SlSoEven { n } | PairFamily::SlSp { n } => {
                write!(f, "{}(n={n})", self.tag())
            }
            PairFamily::SoSoOddOdd { m, n } => write!(f, "so-so(m={m},n={n})"),
            PairFamily::E6Sp8 | PairFamily::E6F4 => write!(f, "{}", self.tag()),
            PairFamily::Diagonal { base } => write!(f, "diagonal({base})"),
            PairFamily::EqualRank { host, .. } => write!(f, "equal-rank({host})"),
        }
    }
}

/// A simple root restricted to `h′`, kept with its source for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedFunctional {
    coeffs: RatVector,
    source: Root,
}

impl RestrictedFunctional {
    /// Functional coefficients over the `h′` coordinates.
    pub fn coeffs(&self) -> &RatVector {
        &self.coeffs
    }

    pub fn source(&self) -> &Root {
        &self.source
    }
}

/// A built symmetric pair: host root system plus the `h′ ⊆ h` embedding.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    family: PairFamily,
    host: RootSystem,
    hprime_dim: usize,
    /// `ambient_dim x hprime_dim`; columns form a basis of `h′` inside `h`.
    embedding: RatMatrix,
    /// Partition of the simple-root indices by equal restriction to `h′`,
    /// ordered by smallest member.
    classes: Vec<BTreeSet<usize>>,
}

impl SymmetricPair {
    /// Builds the pair for a family instance, validating its parameters.
    pub fn build(family: PairFamily) -> Result<SymmetricPair> {
        let (host_label, columns) = match &family {
            PairFamily::SlSoOdd { n } => {
                if *n < 1 {
                    return Err(Error::InvalidParameter(
                        "sl-so-odd requires n >= 1".to_string(),
                    ));
                }
                let size = 2 * n + 1;
                let cols = (1..=*n)
                    .map(|j| signed_pair_column(size, j, size + 1 - j))
                    .collect();
                (Label::A(2 * n), cols)
            }
            PairFamily::SlSoEven { n } | PairFamily::SlSp { n } => {
                if *n < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "{} requires n >= 2",
                        family.tag()
                    )));
                }
                let size = 2 * n;
                let cols = (1..=*n)
                    .map(|j| signed_pair_column(size, j, size + 1 - j))
                    .collect();
                (Label::A(2 * n - 1), cols)
            }
            PairFamily::SoSoOddOdd { m, n } => {
                if *m < 1 || m + n < 2 {
                    return Err(Error::InvalidParameter(
                        "so-so requires m >= 1 and m + n >= 2".to_string(),
                    ));
                }
                let size = m + n;
                let cols = (0..size - 1)
                    .map(|j| RatVector::standard_basis(size, j))
                    .collect();
                (Label::D(size), cols)
            }
            PairFamily::E6Sp8 => {
                let cols = [
                    [2, 0, 1, 2, 1, 0],
                    [0, 1, 0, 0, 0, 1],
                    [0, 0, 1, 0, 1, 0],
                    [0, 0, 0, 1, 0, 0],
                ]
                .iter()
                .map(|c| RatVector::from_ints(c))
                .collect();
                (Label::E6, cols)
            }
            PairFamily::E6F4 => {
                let cols = [
                    [0, 1, 0, 0, 0, 1],
                    [0, 0, 1, 0, 1, 0],
                    [0, 0, 0, 1, 0, 0],
                    [1, 0, 0, 0, 0, 0],
                ]
                .iter()
                .map(|c| RatVector::from_ints(c))
                .collect();
                (Label::E6, cols)
            }
            PairFamily::Diagonal { base } => {
                if matches!(base, Label::Double(_)) {
                    return Err(Error::InvalidParameter(
                        "diagonal pairs take a simple base label".to_string(),
                    ));
                }
                let base_system = RootSystem::build(base.clone())?;
                let dim = base_system.model().ambient_dim();
                let cols = base_system
                    .coweights()
                    .iter()
                    .map(|w| {
                        let mut entries: Vec<Rational> = w.entries().to_vec();
                        entries.extend(w.entries().iter().cloned());
                        RatVector::new(entries)
                    })
                    .collect::<Vec<_>>();
                debug_assert!(cols.iter().all(|c| c.dim() == 2 * dim));
                (Label::Double(Box::new(base.clone())), cols)
            }
            PairFamily::EqualRank { host, .. } => {
                if matches!(host, Label::Double(_)) {
                    return Err(Error::InvalidParameter(
                        "equal-rank pairs take a simple host label".to_string(),
                    ));
                }
                let host_system = RootSystem::build(host.clone())?;
                let cols = host_system.coweights().to_vec();
                (host.clone(), cols)
            }
        };

        let host = RootSystem::build(host_label)?;
        let hprime_dim = columns.len();
        let ambient = host.model().ambient_dim();
        let mut embedding = RatMatrix::zeros(ambient, hprime_dim);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), ambient, "embedding column dimension mismatch");
            for i in 0..ambient {
                embedding.set(i, j, col[i].clone());
            }
        }
        let classes = restriction_partition(&host, &embedding);
        Ok(SymmetricPair { family, host, hprime_dim, embedding, classes })
    }

    pub fn family(&self) -> &PairFamily {
        &self.family
    }

    pub fn host(&self) -> &RootSystem {
        &self.host
    }

    pub fn hprime_dim(&self) -> usize {
        self.hprime_dim
    }

    pub fn embedding(&self) -> &RatMatrix {
        &self.embedding
    }

    /// Restriction classes: simple-root indices with identical restrictions.
    pub fn classes(&self) -> &[BTreeSet<usize>] {
        &self.classes
    }

    /// Image in `h` of an element given in `h′` coordinates.
    pub fn embed(&self, w: &RatVector) -> RatVector {
        self.embedding.mul_vec(w)
    }

    /// Restricts a host root to `h′`: coefficients of the pulled-back
    /// functional over the embedding basis.
    pub fn restrict(&self, root: &Root) -> RestrictedFunctional {
        let coeffs = RatVector::new(
            (0..self.hprime_dim)
                .map(|j| root.coeffs().dot(&self.embedding.col_vec(j)))
                .collect(),
        );
        RestrictedFunctional { coeffs, source: root.clone() }
    }

    /// The explicit hyperbolic element (in `h′` coordinates) defining the
    /// standard Borel subalgebra, for the six unequal-rank families.
    pub fn borel_witness(&self) -> Result<RatVector> {
        match &self.family {
            PairFamily::SlSoOdd { n } | PairFamily::SlSoEven { n } | PairFamily::SlSp { n } => {
                Ok(RatVector::from_ints(
                    &(1..=*n as i64).rev().collect::<Vec<_>>(),
                ))
            }
            PairFamily::SoSoOddOdd { m, n } => Ok(RatVector::from_ints(
                &(1..=(m + n - 1) as i64).rev().collect::<Vec<_>>(),
            )),
            PairFamily::E6Sp8 => Ok(RatVector::from_ints(&[7, 10, 12, 13])),
            PairFamily::E6F4 => Ok(RatVector::from_ints(&[8, 15, 21, 11])),
            PairFamily::Diagonal { .. } | PairFamily::EqualRank { .. } => {
                Err(Error::InvalidParameter(format!(
                    "no explicit Borel witness is catalogued for {}",
                    self.family
                )))
            }
        }
    }

    /// Catalog entry: family tag, host label, `h′` dimension, classes.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.tag(),
            "pair": self.family.describe(),
            "host": self.host.label().to_string(),
            "hprime_dim": self.hprime_dim,
            "classes": self.classes.iter()
                .map(|c| c.iter().copied().collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Column with `+1` at 1-based position `plus` and `-1` at `minus`.
fn signed_pair_column(size: usize, plus: usize, minus: usize) -> RatVector {
    let mut entries = vec![Rational::zero(); size];
    entries[plus - 1] = rat_int(1);
    entries[minus - 1] = rat_int(-1);
    RatVector::new(entries)
}

/// Groups simple-root indices by exact equality of their restrictions.
fn restriction_partition(host: &RootSystem, embedding: &RatMatrix) -> Vec<BTreeSet<usize>> {
    let cols: Vec<RatVector> = (0..embedding.cols()).map(|j| embedding.col_vec(j)).collect();
    let mut groups: Vec<(RatVector, BTreeSet<usize>)> = Vec::new();
    for (i, alpha) in host.simple_roots().iter().enumerate() {
        let restricted =
            RatVector::new(cols.iter().map(|c| alpha.coeffs().dot(c)).collect());
        match groups.iter_mut().find(|(r, _)| *r == restricted) {
            Some((_, set)) => {
                set.insert(i + 1);
            }
            None => groups.push((restricted, BTreeSet::from([i + 1]))),
        }
    }
    groups.into_iter().map(|(_, set)| set).collect()
}

/// The reference instances exercised by the test suite and listed by the
/// CLI: small parameters for each parameterized family plus the exceptional
/// and control pairs.
pub fn reference_pairs() -> Vec<SymmetricPair> {
    let families = vec![
        PairFamily::SlSoOdd { n: 2 },
        PairFamily::SlSoOdd { n: 3 },
        PairFamily::SlSoEven { n: 2 },
        PairFamily::SlSoEven { n: 3 },
        PairFamily::SlSp { n: 2 },
        PairFamily::SlSp { n: 3 },
        PairFamily::SoSoOddOdd { m: 2, n: 1 },
        PairFamily::SoSoOddOdd { m: 2, n: 2 },
        PairFamily::SoSoOddOdd { m: 3, n: 1 },
        PairFamily::E6Sp8,
        PairFamily::E6F4,
        PairFamily::Diagonal { base: Label::A(1) },
        PairFamily::Diagonal { base: Label::A(2) },
        PairFamily::EqualRank { host: Label::A(3), name: "s(gl(2)+gl(2))".to_string() },
        PairFamily::EqualRank { host: Label::D(4), name: "gl(4)".to_string() },
        PairFamily::EqualRank { host: Label::E6, name: "so(10)+C".to_string() },
    ];
    families
        .into_iter()
        .map(|f| SymmetricPair::build(f).expect("reference pair must build"))
        .collect()
}
