//! The coarsening relation `⪯₁ ≤ ⪯₂` (`0 ⪯₁ x ⪯₁ y` implies `x ⪯₂ y`),
//! decided by exhaustive refutation search over a universe, and the posets,
//! trees and forests it induces on a catalog.
//!
//! A finite universe can refute `≤` but never prove it, so decisions are
//! three-valued: a pair either has a witness, or survived the search
//! ([`Decision::NotRefuted`]), or survived the search and is also backed by
//! a declared catalog fact ([`Decision::Verified`]).

mod tree;

use serde::Serialize;

use crate::qo::{classify, CatalogEntry, FactRelation, QuasiOrder};
use crate::ring::{Element, Ideal, RingError, Universe};
use crate::verify::{Axiom, AxiomReport, Outcome};

pub use tree::{
    build_poset, check_tree, cross_support_pairs, forest_partition, generalized_tree,
    no_global_maximum_demo, Branch, CrossPair, Forest, HasseEdge, MaximumDemo, OrderCheck,
    Poset, PosetNode, PrimeRelation, Relation, TreeCertificate, UpSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Decision {
    /// `witness = (x, y)` has `0 ⪯₁ x ⪯₁ y` but not `x ⪯₂ y`. When the
    /// catalog cites a witness it is reported here (after being re-checked);
    /// the first universe witness, if the search found one, is kept in
    /// `search_witness`.
    Refuted {
        witness: (Element, Element),
        #[serde(skip_serializing_if = "Option::is_none")]
        search_witness: Option<(Element, Element)>,
        #[serde(skip_serializing_if = "Option::is_none")]
        citation: Option<String>,
    },
    NotRefuted {
        pairs_checked: u64,
        universe: String,
    },
    Verified {
        rule: String,
        citation: String,
        pairs_checked: u64,
        universe: String,
    },
}

impl Decision {
    /// Not refuted; the relation is treated as holding.
    pub fn holds(&self) -> bool {
        !self.is_refuted()
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Decision::Refuted { .. })
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Decision::Verified { .. })
    }

    pub fn witness(&self) -> Option<&(Element, Element)> {
        match self {
            Decision::Refuted { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// The witness found by the universe search, if any.
    pub fn search_witness(&self) -> Option<&(Element, Element)> {
        match self {
            Decision::Refuted { search_witness, .. } => search_witness.as_ref(),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Decision::Refuted { .. } => "refuted",
            Decision::NotRefuted { .. } => "not-refuted",
            Decision::Verified { .. } => "verified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{lower} is declared finer than {upper}, but ({}, {}) refutes it", .witness.0, .witness.1)]
    DeclaredFactRefuted {
        lower: String,
        upper: String,
        witness: Box<(Element, Element)>,
    },
    #[error("cited witness ({}, {}) for {lower} ≰ {upper} does not check out", .witness.0, .witness.1)]
    InvalidCitedWitness {
        lower: String,
        upper: String,
        witness: Box<(Element, Element)>,
    },
    #[error("{0} has no declared support")]
    NoDeclaredSupport(String),
    #[error("{0} is not reflexive under the coarsening relation")]
    Reflexivity(String),
    #[error("antisymmetry fails: {a} ≤ {b} and {b} ≤ {a} both survive the search; the universe is too small to separate them")]
    Antisymmetry { a: String, b: String },
    #[error("transitivity fails: {a} ≤ {b} ≤ {c} but {a} ≤ {c} is refuted")]
    Transitivity { a: String, b: String, c: String },
    #[error("{node} has support {found}, expected {expected}; use the forest partition for mixed supports")]
    MixedSupport {
        node: String,
        found: String,
        expected: String,
    },
    #[error("no trivial quasi-ordering with support {0} among the nodes")]
    NoTrivialNode(String),
    #[error("{node} ≤ {maximum} is refuted, so {maximum} is not the maximum")]
    NotMaximum { node: String, maximum: String },
    #[error("the up-set of {node} is not a chain: {a} and {b} are incomparable")]
    ChainViolation { node: String, a: String, b: String },
    #[error("{0} is not a prime ideal")]
    NotPrime(String),
    #[error("no two trivial quasi-orderings at comparable primes among the entries")]
    NoComparablePrimes,
}

fn same_ring(a: &dyn QuasiOrder, b: &dyn QuasiOrder, u: &Universe) -> Result<(), RingError> {
    for r in [b.ring(), u.ring()] {
        if r != a.ring() {
            return Err(RingError::Mismatch {
                expected: a.ring(),
                found: r,
            });
        }
    }
    Ok(())
}

/// Whether `(x, y)` witnesses `qo1 ≰ qo2`, evaluated on the oracles directly.
pub fn is_coarsening_witness(
    qo1: &dyn QuasiOrder,
    qo2: &dyn QuasiOrder,
    (x, y): &(Element, Element),
) -> bool {
    let ring = qo1.ring();
    if x.in_ring(ring).is_err() || y.in_ring(ring).is_err() {
        return false;
    }
    qo1.le(&ring.zero(), x) && qo1.le(x, y) && !qo2.le(x, y)
}

/// First pair in universe order with `0 ⪯₁ x ⪯₁ y` and not `x ⪯₂ y`,
/// together with the number of hypothesis pairs examined.
fn search(qo1: &dyn QuasiOrder, qo2: &dyn QuasiOrder, u: &Universe) -> (Option<(Element, Element)>, u64) {
    let zero = u.ring().zero();
    let els = u.elements();
    let mut pairs = 0;
    for x in els {
        if !qo1.le(&zero, x) {
            continue;
        }
        for y in els {
            if !qo1.le(x, y) {
                continue;
            }
            pairs += 1;
            if !qo2.le(x, y) {
                return (Some((x.clone(), y.clone())), pairs);
            }
        }
    }
    (None, pairs)
}

/// Decides `qo1 ≤ qo2` on `universe`. The search always runs; a declared
/// `Finer` fact only upgrades a surviving pair to `Verified`, and a declared
/// `Finer` fact that the search refutes is an error. A cited non-finer
/// witness is re-checked against both oracles before it is reported.
pub fn compare_qos(
    qo1: &dyn QuasiOrder,
    qo2: &dyn QuasiOrder,
    universe: &Universe,
) -> Result<Decision, PosetError> {
    same_ring(qo1, qo2, universe)?;
    let fact = qo1.facts().iter().find(|f| f.other == qo2.id());
    let (found, pairs_checked) = search(qo1, qo2, universe);
    let cited = |witness: &(Element, Element), citation: &str, search_witness| {
        if !is_coarsening_witness(qo1, qo2, witness) {
            return Err(PosetError::InvalidCitedWitness {
                lower: qo1.id().to_string(),
                upper: qo2.id().to_string(),
                witness: Box::new(witness.clone()),
            });
        }
        Ok(Decision::Refuted {
            witness: witness.clone(),
            search_witness,
            citation: Some(citation.to_string()),
        })
    };
    let fact = fact.map(|f| (&f.relation, f.citation.as_str()));
    match (found, fact) {
        (Some(w), Some((FactRelation::Finer, _))) => Err(PosetError::DeclaredFactRefuted {
            lower: qo1.id().to_string(),
            upper: qo2.id().to_string(),
            witness: Box::new(w),
        }),
        (Some(w), Some((FactRelation::NotFiner { witness }, citation))) => {
            cited(witness, citation, Some(w))
        }
        (Some(w), None) => Ok(Decision::Refuted {
            witness: w.clone(),
            search_witness: Some(w),
            citation: None,
        }),
        (None, Some((FactRelation::NotFiner { witness }, citation))) => cited(witness, citation, None),
        (None, Some((FactRelation::Finer, citation))) => Ok(Decision::Verified {
            rule: "declared-fact".to_string(),
            citation: citation.to_string(),
            pairs_checked,
            universe: universe.descriptor(),
        }),
        (None, None) if qo1.id() == qo2.id() => Ok(Decision::Verified {
            rule: "reflexivity".to_string(),
            citation: "every quasi-ordering is finer than itself".to_string(),
            pairs_checked,
            universe: universe.descriptor(),
        }),
        (None, None) => Ok(Decision::NotRefuted {
            pairs_checked,
            universe: universe.descriptor(),
        }),
    }
}

/// A universe element in the support of `qo1` but not of `qo2`. Finer
/// quasi-orderings have smaller supports, so a non-refuted `qo1 ≤ qo2` must
/// yield `None`.
pub fn support_monotone_violation(
    qo1: &dyn QuasiOrder,
    qo2: &dyn QuasiOrder,
    universe: &Universe,
) -> Option<Element> {
    universe
        .elements()
        .iter()
        .find(|x| qo1.in_support(x) && !qo2.in_support(x))
        .cloned()
}

/// Checks that nonnegativity transfers from `qo1` to `qo2`, and back again
/// when the two supports agree on the universe and both sides have the same
/// kind. Meant for pairs where `qo1 ≤ qo2` is not refuted.
///
/// The reverse direction is not checked for an ordering below a valuation:
/// there `0 ⪯₂ -1` always holds while `-1 ≺₁ 0`, e.g. for the
/// leading-coefficient cone below the degree valuation.
pub fn positivity_transfer_check(
    qo1: &dyn QuasiOrder,
    qo2: &dyn QuasiOrder,
    universe: &Universe,
) -> Result<AxiomReport, PosetError> {
    same_ring(qo1, qo2, universe)?;
    let zero = universe.ring().zero();
    let els = universe.elements();
    let mut report = AxiomReport::new(qo1, universe);
    report.qo = format!("{} ≤ {}", qo1.id(), qo2.id());

    let transfer = |from: &dyn QuasiOrder, to: &dyn QuasiOrder| {
        let mut tuples = 0;
        for x in els {
            if from.le(&zero, x) {
                tuples += 1;
                if !to.le(&zero, x) {
                    return Outcome::Fail {
                        witness: vec![x.clone()],
                    };
                }
            }
        }
        Outcome::Pass { tuples }
    };
    report.push(Axiom::PositivityTransfer, transfer(qo1, qo2));
    let same_support = els.iter().all(|x| qo1.in_support(x) == qo2.in_support(x));
    if same_support && classify(qo1) == classify(qo2) {
        report.push(Axiom::PositivityEquivalence, transfer(qo2, qo1));
    }
    Ok(report)
}

/// Searches for `0 ⪯ x ⪯ y` with `y` in `ideal` and `x` outside it.
pub fn convexity_check(
    ideal: &Ideal,
    qo: &dyn QuasiOrder,
    universe: &Universe,
) -> Result<Decision, PosetError> {
    for r in [ideal.ring(), universe.ring()] {
        if r != qo.ring() {
            return Err(RingError::Mismatch {
                expected: qo.ring(),
                found: r,
            }
            .into());
        }
    }
    let zero = universe.ring().zero();
    let els = universe.elements();
    let inside: Vec<bool> = els.iter().map(|e| ideal.contains_unchecked(e)).collect();
    let mut pairs_checked = 0;
    for (i, x) in els.iter().enumerate() {
        if !qo.le(&zero, x) {
            continue;
        }
        for (j, y) in els.iter().enumerate() {
            if !inside[j] || !qo.le(x, y) {
                continue;
            }
            pairs_checked += 1;
            if !inside[i] {
                let w = (x.clone(), y.clone());
                return Ok(Decision::Refuted {
                    witness: w.clone(),
                    search_witness: Some(w),
                    citation: None,
                });
            }
        }
    }
    Ok(Decision::NotRefuted {
        pairs_checked,
        universe: universe.descriptor(),
    })
}

/// Convexity of a prime `q` against coarsening into the trivial
/// quasi-ordering at `q`; the two must agree.
#[derive(Debug, Clone, Serialize)]
pub struct QcompReport {
    pub qo: String,
    pub ideal: Ideal,
    pub trivial: String,
    pub convexity: Decision,
    pub coarsening: Decision,
    pub agree: bool,
}

pub fn qcomp_equivalence(
    qo: &dyn QuasiOrder,
    q: &Ideal,
    universe: &Universe,
) -> Result<QcompReport, PosetError> {
    if !q.is_prime() {
        return Err(PosetError::NotPrime(q.to_string()));
    }
    let convexity = convexity_check(q, qo, universe)?;
    let trivial = CatalogEntry::trivial(q.ring(), q.clone());
    let coarsening = compare_qos(qo, &trivial, universe)?;
    Ok(QcompReport {
        qo: qo.id().to_string(),
        ideal: q.clone(),
        trivial: trivial.id().to_string(),
        agree: convexity.is_refuted() == coarsening.is_refuted(),
        convexity,
        coarsening,
    })
}
