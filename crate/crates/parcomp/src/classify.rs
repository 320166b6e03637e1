//! The compatibility oracle and exhaustive classification.
//!
//! A standard parabolic `p_Π` of the host is compatible with the symmetric
//! subalgebra exactly when some `H ∈ h′` satisfies `α(H) = 0` for the simple
//! roots in `Π` and `α(H) > 0` for the simple roots outside `Π`. Simple
//! roots suffice: every positive root is a nonnegative integer combination
//! of them, so a root of the Levi factor (supported in `Π`) vanishes on such
//! an `H` and every other positive root evaluates strictly positively.
//!
//! [`is_compatible`] decides that system exactly and extracts a primitive
//! integer witness when one exists. [`class_predicate`] is the independent
//! closed form: `p_Π` is compatible iff `Π` is a union of restriction
//! classes. [`cross_check`] confronts the two over all `2^rank` subsets.

use crate::error::{Error, Result};
use crate::feasibility::{self, decide, FeasibilityOutcome, StrictSystem};
use crate::pairs::SymmetricPair;
use crate::ratlinalg::{format_rational, RatVector};
use crate::rootsys::ParabolicIndex;
use rayon::prelude::*;

/// Largest host rank for which exhaustive subset enumeration is attempted.
pub const ENUMERATION_LIMIT: usize = 20;

/// Verdict for one index set, with exact witnesses when compatible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityResult {
    pi: ParabolicIndex,
    compatible: bool,
    witness: Option<RatVector>,
    embedded_witness: Option<RatVector>,
}

impl CompatibilityResult {
    pub fn pi(&self) -> &ParabolicIndex {
        &self.pi
    }

    pub fn compatible(&self) -> bool {
        self.compatible
    }

    /// Witness in `h′` coordinates, rescaled to a primitive integer vector.
    pub fn witness(&self) -> Option<&RatVector> {
        self.witness.as_ref()
    }

    /// The same witness pushed into the host Cartan subalgebra.
    pub fn embedded_witness(&self) -> Option<&RatVector> {
        self.embedded_witness.as_ref()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pi": self.pi.to_vec(),
            "compatible": self.compatible,
            "witness": self.witness.as_ref().map(rational_strings),
            "embedded_witness": self.embedded_witness.as_ref().map(rational_strings),
        })
    }
}

/// The feasibility system for `p_Π`: restricted simple roots of the Levi
/// part as equalities, all remaining restricted simple roots strictly
/// positive.
pub fn compatibility_system(pair: &SymmetricPair, pi: &ParabolicIndex) -> StrictSystem {
    let mut sys = StrictSystem::new(pair.hprime_dim());
    for (i, alpha) in pair.host().simple_roots().iter().enumerate() {
        let restricted = pair.restrict(alpha).coeffs().clone();
        if pi.contains(i + 1) {
            sys.push_equality(restricted);
        } else {
            sys.push_strict_positive(restricted);
        }
    }
    sys
}

/// Decides compatibility of `p_Π` and extracts an exact witness if any.
pub fn is_compatible(pair: &SymmetricPair, pi: &ParabolicIndex) -> Result<CompatibilityResult> {
    check_index_range(pair, pi)?;
    let sys = compatibility_system(pair, pi);
    match decide(&sys) {
        FeasibilityOutcome::Feasible(x) => {
            // Positive rescaling preserves both the equalities and the
            // strict inequalities, so the primitive form is still a witness.
            let witness = x.clear_denominators();
            debug_assert!(matches!(
                feasibility::verify_solution(&sys, &witness),
                Ok(true)
            ));
            let embedded_witness = pair.embed(&witness);
            Ok(CompatibilityResult {
                pi: pi.clone(),
                compatible: true,
                witness: Some(witness),
                embedded_witness: Some(embedded_witness),
            })
        }
        FeasibilityOutcome::Infeasible => Ok(CompatibilityResult {
            pi: pi.clone(),
            compatible: false,
            witness: None,
            embedded_witness: None,
        }),
    }
}

/// Closed-form test: `Π` meets each restriction class either fully or not
/// at all (equivalently, `Π` is a union of restriction classes).
pub fn class_predicate(pair: &SymmetricPair, pi: &ParabolicIndex) -> bool {
    pair.classes().iter().all(|class| {
        let inside = class.iter().filter(|&&i| pi.contains(i)).count();
        inside == 0 || inside == class.len()
    })
}

/// Checks a proposed witness against the feasibility system of `p_Π`.
pub fn verify_witness(pair: &SymmetricPair, pi: &ParabolicIndex, w: &RatVector) -> Result<bool> {
    check_index_range(pair, pi)?;
    feasibility::verify_solution(&compatibility_system(pair, pi), w)
}

/// Exhaustive classification over all `2^rank` index sets, in binary
/// counting order of the subset mask (bit `i-1` encodes index `i`).
pub fn classify_all(pair: &SymmetricPair) -> Result<Classification<'_>> {
    let results = subset_masks(pair)?
        .map(|m| is_compatible(pair, &ParabolicIndex::from_mask(m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification::from_results(pair, results))
}

/// Same classification computed on a rayon thread pool; the result order is
/// identical to [`classify_all`].
pub fn classify_all_parallel(pair: &SymmetricPair) -> Result<Classification<'_>> {
    let results = subset_masks(pair)?
        .into_par_iter()
        .map(|m| is_compatible(pair, &ParabolicIndex::from_mask(m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification::from_results(pair, results))
}

/// Runs both the feasibility oracle and the class predicate over every
/// subset and reports any disagreement.
pub fn cross_check(pair: &SymmetricPair) -> Result<CrossCheckReport> {
    Ok(cross_check_classification(&classify_all(pair)?))
}

/// Confronts an already-computed classification with the class predicate.
pub fn cross_check_classification(classification: &Classification<'_>) -> CrossCheckReport {
    let pair = classification.pair();
    let mismatches: Vec<ParabolicIndex> = classification
        .results()
        .iter()
        .filter(|r| r.compatible() != class_predicate(pair, r.pi()))
        .map(|r| r.pi().clone())
        .collect();
    CrossCheckReport {
        pair_tag: pair.family().to_string(),
        total: classification.results().len(),
        compatible: classification.compatible_count(),
        mismatches,
    }
}

fn check_index_range(pair: &SymmetricPair, pi: &ParabolicIndex) -> Result<()> {
    let rank = pair.host().rank();
    if pi.max_index().is_some_and(|m| m > rank) {
        return Err(Error::InvalidParameter(format!(
            "index set {pi} exceeds the host rank {rank}"
        )));
    }
    Ok(())
}

fn subset_masks(pair: &SymmetricPair) -> Result<std::ops::Range<u64>> {
    let rank = pair.host().rank();
    if rank > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard { rank, limit: ENUMERATION_LIMIT });
    }
    Ok(0..(1u64 << rank))
}

fn rational_strings(v: &RatVector) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// The verdicts for every index set of one pair.
#[derive(Clone, Debug)]
pub struct Classification<'p> {
    pair: &'p SymmetricPair,
    results: Vec<CompatibilityResult>,
    compatible_count: usize,
}

impl<'p> Classification<'p> {
    fn from_results(pair: &'p SymmetricPair, results: Vec<CompatibilityResult>) -> Self {
        let compatible_count = results.iter().filter(|r| r.compatible()).count();
        Classification { pair, results, compatible_count }
    }

    pub fn pair(&self) -> &SymmetricPair {
        self.pair
    }

    /// All verdicts, in subset-mask order.
    pub fn results(&self) -> &[CompatibilityResult] {
        &self.results
    }

    pub fn compatible_count(&self) -> usize {
        self.compatible_count
    }

    /// Just the compatible verdicts, same order.
    pub fn compatible(&self) -> impl Iterator<Item = &CompatibilityResult> {
        self.results.iter().filter(|r| r.compatible())
    }

    /// Index sets of the compatible parabolics.
    pub fn compatible_sets(&self) -> Vec<ParabolicIndex> {
        self.compatible().map(|r| r.pi().clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pair": self.pair.to_json(),
            "total": self.results.len(),
            "compatible": self.compatible().map(|r| serde_json::json!({
                "pi": r.pi().to_vec(),
                "witness": rational_strings(r.witness().expect("compatible result has witness")),
                "embedded_witness":
                    rational_strings(r.embedded_witness().expect("compatible result has witness")),
            })).collect::<Vec<_>>(),
            "count": self.compatible_count,
        })
    }

    /// One row per index set: `pi;compatible;witness`, witness entries
    /// comma-joined and empty when incompatible.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pi;compatible;witness\n");
        for r in &self.results {
            let witness = r
                .witness()
                .map(|w| w.iter().map(format_rational).collect::<Vec<_>>().join(","))
                .unwrap_or_default();
            out.push_str(&format!("{};{};{}\n", r.pi(), r.compatible(), witness));
        }
        out
    }
}

/// Outcome of confronting the oracle with the class predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pair_tag: String,
    total: usize,
    compatible: usize,
    mismatches: Vec<ParabolicIndex>,
}

impl CrossCheckReport {
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn compatible(&self) -> usize {
        self.compatible
    }

    pub fn mismatches(&self) -> &[ParabolicIndex] {
        &self.mismatches
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pair": self.pair_tag,
            "total": self.total,
            "compatible": self.compatible,
            "mismatches": self.mismatches.iter()
                .map(|pi| pi.to_vec())
                .collect::<Vec<_>>(),
            "clean": self.is_clean(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::{reference_pairs, PairFamily};
    use crate::ratlinalg::{rat, Rational};
    use crate::rootsys::Label;
    use num_traits::Zero;
    use std::collections::BTreeSet;

    fn pair(family: PairFamily) -> SymmetricPair {
        SymmetricPair::build(family).unwrap()
    }

    fn pi(indices: &[usize]) -> ParabolicIndex {
        ParabolicIndex::new(indices.iter().copied())
    }

    fn compatible_sets(p: &SymmetricPair) -> BTreeSet<Vec<usize>> {
        classify_all(p)
            .unwrap()
            .compatible_sets()
            .into_iter()
            .map(|s| s.to_vec())
            .collect()
    }

    /// Unions of the restriction classes, enumerated directly.
    fn class_unions(p: &SymmetricPair) -> BTreeSet<Vec<usize>> {
        let classes = p.classes();
        (0u64..(1 << classes.len()))
            .map(|mask| {
                let mut union = BTreeSet::new();
                for (k, class) in classes.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        union.extend(class.iter().copied());
                    }
                }
                union.into_iter().collect::<Vec<_>>()
            })
            .collect()
    }

    #[test]
    fn small_odd_special_linear_pair_classification() {
        let p = pair(PairFamily::SlSoOdd { n: 2 });
        let c = classify_all(&p).unwrap();
        assert_eq!(c.results().len(), 16);
        assert_eq!(c.compatible_count(), 4);
        let expected: BTreeSet<Vec<usize>> =
            [vec![], vec![1, 4], vec![2, 3], vec![1, 2, 3, 4]].into_iter().collect();
        assert_eq!(compatible_sets(&p), expected);

        let p = pair(PairFamily::SlSoOdd { n: 3 });
        let c = classify_all(&p).unwrap();
        assert_eq!((c.results().len(), c.compatible_count()), (64, 8));
    }

    #[test]
    fn compatible_sets_equal_unions_of_restriction_classes() {
        for p in reference_pairs() {
            assert_eq!(
                compatible_sets(&p),
                class_unions(&p),
                "class-union law fails for {}",
                p.family()
            );
        }
    }

    #[test]
    fn results_come_in_subset_mask_order() {
        let p = pair(PairFamily::SoSoOddOdd { m: 2, n: 1 });
        let c = classify_all(&p).unwrap();
        let expected: Vec<ParabolicIndex> =
            (0u64..8).map(ParabolicIndex::from_mask).collect();
        let actual: Vec<ParabolicIndex> = c.results().iter().map(|r| r.pi().clone()).collect();
        assert_eq!(actual, expected);
        assert!(c.results()[0].pi().is_empty());
        assert_eq!(c.results()[7].pi().to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn witnesses_are_primitive_verified_and_consistent() {
        for p in reference_pairs() {
            let c = classify_all(&p).unwrap();
            for r in c.compatible() {
                let w = r.witness().unwrap();
                assert!(w.is_integral(), "witness {w} not integral for {}", p.family());
                assert_eq!(&w.clear_denominators(), w, "witness {w} not primitive");
                assert_eq!(verify_witness(&p, r.pi(), w), Ok(true));
                let h = r.embedded_witness().unwrap();
                assert_eq!(h, &p.embed(w));
                assert!(p.host().model().contains(h));
                // An element of the model subspace is recovered from its
                // simple-root values through the fundamental coweights.
                let mut recovered = RatVector::zeros(h.dim());
                for (i, alpha) in p.host().simple_roots().iter().enumerate() {
                    recovered = recovered.add(&p.host().coweight(i + 1).scale(&alpha.evaluate(h)));
                }
                assert_eq!(&recovered, h);
            }
        }
    }

    #[test]
    fn extreme_index_sets_behave_as_expected() {
        for p in reference_pairs() {
            let rank = p.host().rank();
            let full = is_compatible(&p, &pi(&(1..=rank).collect::<Vec<_>>())).unwrap();
            assert!(full.compatible());
            assert!(full.witness().unwrap().is_zero(), "full Levi forces H = 0");

            let empty = is_compatible(&p, &ParabolicIndex::empty()).unwrap();
            assert!(empty.compatible(), "Borel must be compatible for {}", p.family());
            let h = empty.embedded_witness().unwrap();
            for alpha in p.host().simple_roots() {
                assert!(alpha.evaluate(h) > Rational::zero());
            }
        }
    }

    #[test]
    fn catalogued_borel_witnesses_pass_verification() {
        for p in reference_pairs() {
            let Ok(w) = p.borel_witness() else { continue };
            assert_eq!(verify_witness(&p, &ParabolicIndex::empty(), &w), Ok(true));
        }
    }

    #[test]
    fn predicate_fixtures_for_the_odd_pair() {
        let p = pair(PairFamily::SlSoOdd { n: 2 });
        assert!(class_predicate(&p, &ParabolicIndex::empty()));
        assert!(class_predicate(&p, &pi(&[1, 4])));
        assert!(class_predicate(&p, &pi(&[2, 3])));
        assert!(class_predicate(&p, &pi(&[1, 2, 3, 4])));
        assert!(!class_predicate(&p, &pi(&[1])));
        assert!(!class_predicate(&p, &pi(&[1, 2, 3])));
        assert!(!class_predicate(&p, &pi(&[1, 2, 4])));
    }

    #[test]
    fn matched_families_classify_identically() {
        for n in [2, 3] {
            let a = pair(PairFamily::SlSoEven { n });
            let b = pair(PairFamily::SlSp { n });
            assert_eq!(compatible_sets(&a), compatible_sets(&b));
        }
        let a = pair(PairFamily::E6Sp8);
        let b = pair(PairFamily::E6F4);
        assert_eq!(compatible_sets(&a), compatible_sets(&b));
        assert_eq!(compatible_sets(&a).len(), 16);

        let a = pair(PairFamily::SoSoOddOdd { m: 2, n: 2 });
        let b = pair(PairFamily::SoSoOddOdd { m: 3, n: 1 });
        assert_eq!(compatible_sets(&a), compatible_sets(&b));
    }

    #[test]
    fn diagonal_pairs_require_matching_factors() {
        let p = pair(PairFamily::Diagonal { base: Label::A(1) });
        let c = classify_all(&p).unwrap();
        assert_eq!((c.results().len(), c.compatible_count()), (4, 2));

        let p = pair(PairFamily::Diagonal { base: Label::A(2) });
        let c = classify_all(&p).unwrap();
        assert_eq!((c.results().len(), c.compatible_count()), (16, 4));
        // Compatible exactly when the two factors pick matching subsets.
        let r = p.host().rank() / 2;
        for result in c.results() {
            let left: BTreeSet<usize> =
                result.pi().iter().filter(|&i| i <= r).collect();
            let right: BTreeSet<usize> =
                result.pi().iter().filter(|&i| i > r).map(|i| i - r).collect();
            assert_eq!(result.compatible(), left == right);
        }
    }

    #[test]
    fn equal_rank_pairs_admit_every_parabolic() {
        for (host, total) in [(Label::A(3), 8), (Label::D(4), 16), (Label::E6, 64)] {
            let p = pair(PairFamily::EqualRank { host, name: "t".to_string() });
            let c = classify_all(&p).unwrap();
            assert_eq!((c.results().len(), c.compatible_count()), (total, total));
        }
    }

    #[test]
    fn parallel_classification_matches_sequential() {
        for family in [PairFamily::SlSoOdd { n: 3 }, PairFamily::E6Sp8] {
            let p = pair(family);
            let seq = classify_all(&p).unwrap();
            let par = classify_all_parallel(&p).unwrap();
            assert_eq!(seq.results(), par.results());
        }
    }

    #[test]
    fn cross_check_is_clean_on_the_whole_catalog() {
        for p in reference_pairs() {
            let report = cross_check(&p).unwrap();
            assert!(report.is_clean(), "mismatches for {}: {:?}", p.family(), report.mismatches());
            assert_eq!(report.total(), 1 << p.host().rank());
        }
    }

    #[test]
    fn enumeration_guard_refuses_oversized_hosts() {
        let p = pair(PairFamily::EqualRank { host: Label::A(21), name: "t".to_string() });
        assert!(matches!(
            classify_all(&p),
            Err(Error::EnumerationGuard { rank: 21, limit: ENUMERATION_LIMIT })
        ));
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        let p = pair(PairFamily::SlSoOdd { n: 2 });
        assert!(matches!(
            is_compatible(&p, &pi(&[7])),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            verify_witness(&p, &pi(&[7]), &RatVector::zeros(2)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn witness_verification_fixtures() {
        let p = pair(PairFamily::SlSoOdd { n: 2 });
        let target = pi(&[1, 4]);
        assert_eq!(verify_witness(&p, &target, &RatVector::from_ints(&[1, 1])), Ok(true));
        // Positive rescaling keeps a witness valid.
        assert_eq!(
            verify_witness(&p, &target, &RatVector::new(vec![rat(1, 3), rat(1, 3)])),
            Ok(true)
        );
        assert_eq!(verify_witness(&p, &target, &RatVector::from_ints(&[1, 2])), Ok(false));
        assert_eq!(verify_witness(&p, &target, &RatVector::from_ints(&[0, 0])), Ok(false));
        assert!(verify_witness(&p, &target, &RatVector::zeros(3)).is_err());
    }

    #[test]
    fn classification_json_shape() {
        let p = pair(PairFamily::SlSoOdd { n: 2 });
        let v = classify_all(&p).unwrap().to_json();
        assert_eq!(v["total"], 16);
        assert_eq!(v["count"], 4);
        assert_eq!(v["pair"]["family"], "sl-so-odd");
        let compatible = v["compatible"].as_array().unwrap();
        assert_eq!(compatible.len(), 4);
        assert_eq!(compatible[0]["pi"], serde_json::json!([]));
        let entry = compatible
            .iter()
            .find(|e| e["pi"] == serde_json::json!([1, 4]))
            .unwrap();
        assert_eq!(entry["witness"], serde_json::json!(["1", "1"]));
        assert_eq!(
            entry["embedded_witness"],
            serde_json::json!(["1", "1", "0", "-1", "-1"])
        );
    }

    #[test]
    fn classification_csv_shape() {
        let p = pair(PairFamily::SoSoOddOdd { m: 2, n: 1 });
        let csv = classify_all(&p).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "pi;compatible;witness");
        assert!(lines[1].starts_with("{};true;"));
        assert_eq!(lines[3], "{2};false;");
        assert_eq!(lines[8], "{1,2,3};true;0,0");
    }
}
