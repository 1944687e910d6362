//! Quasi-ordering oracles and the catalog of closed-form quasi-orderings.

mod catalog;
mod value;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::ring::{Element, Ideal, Ring, RingError, Universe};

pub use catalog::{catalog, CatalogEntry, DEFAULT_PRIME_BOUND};
pub use value::{Extended, GroupValue, InvLex};

/// Outcome of comparing `x` with `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Cmp {
    Less,
    Equivalent,
    Greater,
}

impl Cmp {
    pub fn reverse(self) -> Cmp {
        match self {
            Cmp::Less => Cmp::Greater,
            Cmp::Equivalent => Cmp::Equivalent,
            Cmp::Greater => Cmp::Less,
        }
    }

    /// `x ⪯ y`
    pub fn is_le(self) -> bool {
        self != Cmp::Greater
    }
}

impl From<Ordering> for Cmp {
    fn from(o: Ordering) -> Cmp {
        match o {
            Ordering::Less => Cmp::Less,
            Ordering::Equal => Cmp::Equivalent,
            Ordering::Greater => Cmp::Greater,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ordering,
    Valuation,
    Unknown,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Ordering => "ordering",
            Kind::Valuation => "valuation",
            Kind::Unknown => "unknown",
        })
    }
}

/// A claim about the coarsening relation, declared by a catalog entry about
/// itself (`self` on the left).
#[derive(Debug, Clone)]
pub struct Fact {
    pub other: String,
    pub relation: FactRelation,
    pub citation: String,
}

#[derive(Debug, Clone)]
pub enum FactRelation {
    /// `self ≤ other`.
    Finer,
    /// `self ≰ other`, with a pair `(x, y)` such that `0 ⪯ x ⪯ y` under
    /// `self` but not `x ⪯ y` under `other`.
    NotFiner { witness: (Element, Element) },
}

/// An ideal whose elements all stay on one side of `1`. Such an ideal rules
/// out the existence of multiplicative partners for its non-support
/// elements, because every multiple stays inside it.
#[derive(Debug, Clone)]
pub struct Obstruction {
    pub ideal: Ideal,
    pub kind: ObstructionKind,
    pub explanation: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionKind {
    /// Every `z` in the ideal satisfies `z ≺ 1`: not special, hence not Manis.
    BelowOne,
    /// No `z` in the ideal satisfies `z ∼ 1`: not Manis.
    NeverEquivalentToOne,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QoError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unknown quasi-ordering id `{0}`")]
    UnknownId(String),
    #[error(
        "support of {qo} disagrees with its declared support {declared} at `{element}` \
         (computed: {}in support)", if *.in_computed { "" } else { "not " }
    )]
    SupportMismatch {
        qo: String,
        declared: String,
        element: Element,
        in_computed: bool,
    },
}

/// A total preorder oracle on one of the shipped rings.
///
/// `compare` is only defined on elements of `ring()`; callers holding
/// elements of unknown provenance should use [`QuasiOrder::try_compare`].
pub trait QuasiOrder: Send + Sync {
    fn id(&self) -> &str;

    fn ring(&self) -> Ring;

    fn compare(&self, x: &Element, y: &Element) -> Cmp;

    fn declared_kind(&self) -> Kind {
        Kind::Unknown
    }

    fn declared_support(&self) -> Option<&Ideal> {
        None
    }

    fn provenance(&self) -> &str {
        ""
    }

    /// Whether this is the two-class quasi-ordering at its support.
    fn is_trivial(&self) -> bool {
        false
    }

    /// Closed-form valuation value, for valuation-kind oracles that have one.
    fn value(&self, _x: &Element) -> Option<Extended<GroupValue>> {
        None
    }

    fn facts(&self) -> &[Fact] {
        &[]
    }

    fn obstructions(&self) -> &[Obstruction] {
        &[]
    }

    fn try_compare(&self, x: &Element, y: &Element) -> Result<Cmp, RingError> {
        x.in_ring(self.ring())?;
        y.in_ring(self.ring())?;
        Ok(self.compare(x, y))
    }

    fn le(&self, x: &Element, y: &Element) -> bool {
        self.compare(x, y).is_le()
    }

    fn lt(&self, x: &Element, y: &Element) -> bool {
        self.compare(x, y) == Cmp::Less
    }

    fn equiv(&self, x: &Element, y: &Element) -> bool {
        self.compare(x, y) == Cmp::Equivalent
    }

    /// `x ∼ 0`
    fn in_support(&self, x: &Element) -> bool {
        self.equiv(x, &self.ring().zero())
    }
}

/// Orderings are exactly the quasi-orderings with `-1 ≺ 0`.
pub fn classify(qo: &dyn QuasiOrder) -> Kind {
    let ring = qo.ring();
    if qo.compare(&ring.minus_one(), &ring.zero()) == Cmp::Less {
        Kind::Ordering
    } else {
        Kind::Valuation
    }
}

/// The universe elements equivalent to 0. When the oracle declares a
/// support ideal, the computed set must be exactly its trace on the universe.
pub fn support_of(qo: &dyn QuasiOrder, universe: &Universe) -> Result<Vec<Element>, QoError> {
    universe.elements()[0].in_ring(qo.ring())?;
    let mut out = Vec::new();
    for x in universe.elements() {
        let computed = qo.in_support(x);
        if let Some(ideal) = qo.declared_support() {
            if ideal.contains_unchecked(x) != computed {
                return Err(QoError::SupportMismatch {
                    qo: qo.id().to_string(),
                    declared: ideal.to_string(),
                    element: x.clone(),
                    in_computed: computed,
                });
            }
        }
        if computed {
            out.push(x.clone());
        }
    }
    Ok(out)
}
