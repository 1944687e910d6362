//! Deliberately corrupted oracles used as negative controls: a verifier that
//! accepts one of these is broken.

use serde::Serialize;

use super::{check_ordering_axioms, check_qr_axioms, AxiomResult, VerifyError};
use crate::qo::{classify, Cmp, Kind, QuasiOrder};
use crate::ring::{Element, Ring, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MutantKind {
    /// Less and Greater exchanged.
    Swap,
    /// `-1` replaced by `1` before comparing, forcing `-1 ∼ 1`.
    MinusOneIsOne,
    /// The first strict pair `x ≺ y` that has a third element between them
    /// is reversed (in both argument orders).
    BrokenTransitivity,
}

impl MutantKind {
    pub const ALL: [MutantKind; 3] = [
        MutantKind::Swap,
        MutantKind::MinusOneIsOne,
        MutantKind::BrokenTransitivity,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            MutantKind::Swap => "swap",
            MutantKind::MinusOneIsOne => "minus-one",
            MutantKind::BrokenTransitivity => "transitivity",
        }
    }

    pub fn from_id(s: &str) -> Option<MutantKind> {
        MutantKind::ALL.into_iter().find(|k| k.id() == s)
    }
}

pub struct Mutant<'a> {
    inner: &'a dyn QuasiOrder,
    kind: MutantKind,
    id: String,
    flipped: Option<(Element, Element)>,
    minus_one: Element,
    one: Element,
}

impl<'a> Mutant<'a> {
    /// `universe` is only consulted by [`MutantKind::BrokenTransitivity`] to
    /// pick the pair to reverse; `None` is returned if no strict pair has an
    /// element between its ends.
    pub fn new(kind: MutantKind, inner: &'a dyn QuasiOrder, universe: &Universe) -> Option<Self> {
        let ring: Ring = inner.ring();
        let flipped = match kind {
            MutantKind::BrokenTransitivity => Some(pick_pair(inner, universe)?),
            _ => None,
        };
        Some(Mutant {
            inner,
            kind,
            id: format!("{}#{}", inner.id(), kind.id()),
            flipped,
            minus_one: ring.minus_one(),
            one: ring.one(),
        })
    }

    pub fn kind(&self) -> MutantKind {
        self.kind
    }

    pub fn flipped_pair(&self) -> Option<&(Element, Element)> {
        self.flipped.as_ref()
    }
}

fn pick_pair(qo: &dyn QuasiOrder, u: &Universe) -> Option<(Element, Element)> {
    let els = u.elements();
    for (i, x) in els.iter().enumerate() {
        for (j, y) in els.iter().enumerate() {
            if !qo.lt(x, y) {
                continue;
            }
            let between = els
                .iter()
                .enumerate()
                .any(|(k, z)| k != i && k != j && qo.le(x, z) && qo.le(z, y));
            if between {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

impl QuasiOrder for Mutant<'_> {
    fn id(&self) -> &str {
        &self.id
    }

    fn ring(&self) -> Ring {
        self.inner.ring()
    }

    fn compare(&self, x: &Element, y: &Element) -> Cmp {
        match self.kind {
            MutantKind::Swap => self.inner.compare(x, y).reverse(),
            MutantKind::MinusOneIsOne => {
                let fix = |e: &'_ Element| -> Element {
                    if *e == self.minus_one {
                        self.one.clone()
                    } else {
                        e.clone()
                    }
                };
                self.inner.compare(&fix(x), &fix(y))
            }
            MutantKind::BrokenTransitivity => {
                let c = self.inner.compare(x, y);
                match &self.flipped {
                    Some((a, b)) if (a == x && b == y) || (a == y && b == x) => c.reverse(),
                    _ => c,
                }
            }
        }
    }

    fn provenance(&self) -> &str {
        "negative control"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MutantOutcome {
    pub mutant: String,
    pub kind: MutantKind,
    pub classified: Kind,
    pub failed: Vec<AxiomResult>,
    /// Set when the ordering suite refuses the mutant because it no longer
    /// classifies as an ordering.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering_suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<String>,
    pub caught: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MutationReport {
    pub qo: String,
    pub outcomes: Vec<MutantOutcome>,
}

impl MutationReport {
    pub fn all_caught(&self) -> bool {
        self.outcomes.iter().filter(|o| o.not_applicable.is_none()).all(|o| o.caught)
    }
}

/// Runs the QR battery on each mutant of `qo`. A mutant that passes every
/// axiom is reported with `caught = false`.
pub fn mutation_suite(
    qo: &dyn QuasiOrder,
    universe: &Universe,
    kinds: &[MutantKind],
) -> Result<MutationReport, VerifyError> {
    let mut outcomes = Vec::new();
    for &kind in kinds {
        let skip = |reason: &str| MutantOutcome {
            mutant: format!("{}#{}", qo.id(), kind.id()),
            kind,
            classified: classify(qo),
            failed: vec![],
            ordering_suite: None,
            not_applicable: Some(reason.to_string()),
            caught: false,
        };
        // Outside orderings -1 ∼ 1 already holds and the mutant is the
        // original oracle.
        if kind == MutantKind::MinusOneIsOne && classify(qo) != Kind::Ordering {
            outcomes.push(skip("-1 ∼ 1 already holds"));
            continue;
        }
        let Some(m) = Mutant::new(kind, qo, universe) else {
            outcomes.push(skip("no strict pair with an element in between"));
            continue;
        };
        let report = check_qr_axioms(&m, universe)?;
        let failed: Vec<AxiomResult> = report.failures().cloned().collect();
        let ordering_suite = if kind == MutantKind::MinusOneIsOne {
            match check_ordering_axioms(&m, universe) {
                Err(e @ VerifyError::NotAnOrdering { .. }) => Some(e.to_string()),
                Err(e) => return Err(e),
                Ok(r) => r
                    .failures()
                    .next()
                    .map(|f| format!("ordering axiom {} fails", f.axiom)),
            }
        } else {
            None
        };
        outcomes.push(MutantOutcome {
            mutant: m.id().to_string(),
            kind,
            classified: classify(&m),
            caught: !failed.is_empty(),
            failed,
            ordering_suite,
            not_applicable: None,
        });
    }
    Ok(MutationReport {
        qo: qo.id().to_string(),
        outcomes,
    })
}
