//! Special and Manis quasi-orderings, their behavior along the coarsening
//! relation, dependency classes and the Kaplansky properties of finite trees.
//!
//! Both predicates quantify over the whole ring (`∀x ∃y`), so a finite
//! universe can exhibit partners but cannot show that none exist. Negative
//! verdicts therefore only come from exact rules: a catalog obstruction
//! ideal, or maximality of the support for orderings.

mod dependency;

use serde::Serialize;

use crate::poset::{compare_qos, Forest, Poset, PosetError};
use crate::qo::{classify, Kind, ObstructionKind, QuasiOrder};
use crate::ring::{Element, Universe};

pub use dependency::{
    dependency_classes, kaplansky_check, CoveringPair, DependencyPair, DependencyPartition,
    KaplanskyReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    /// Every non-support `x` has some `y` with `1 ⪯ xy`.
    Special,
    /// Every non-support `x` has some `y` with `1 ∼ xy`.
    Manis,
}

impl Property {
    fn partner(self, qo: &dyn QuasiOrder, one: &Element, xy: &Element) -> bool {
        match self {
            Property::Special => qo.le(one, xy),
            Property::Manis => qo.equiv(one, xy),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// A partner `y` for every non-support universe element `x`, as
    /// `(x, y)` pairs in universe order.
    Witnessed { partners: Vec<(Element, Element)> },
    HoldsByRule { rule: String, explanation: String },
    FailsByRule {
        rule: String,
        explanation: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        element: Option<Element>,
    },
    /// The search ran out: `missing` has no partner in the universe.
    Unknown { missing: Element, universe: String },
}

impl Verdict {
    /// `Some(true)` for a positive verdict, `Some(false)` for a rule-based
    /// negative one, `None` when undecided.
    pub fn holds(&self) -> Option<bool> {
        match self {
            Verdict::Witnessed { .. } | Verdict::HoldsByRule { .. } => Some(true),
            Verdict::FailsByRule { .. } => Some(false),
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn is_witnessed(&self) -> bool {
        matches!(self, Verdict::Witnessed { .. })
    }

    pub fn is_fails(&self) -> bool {
        self.holds() == Some(false)
    }

    /// Re-evaluates every recorded partner against the oracle. Verdicts
    /// without a partner map trivially pass.
    pub fn recheck(&self, qo: &dyn QuasiOrder, property: Property) -> bool {
        let Verdict::Witnessed { partners } = self else {
            return true;
        };
        let one = qo.ring().one();
        partners
            .iter()
            .all(|(x, y)| !qo.in_support(x) && property.partner(qo, &one, &(x * y)))
    }
}

/// Searches the universe for partners. Returns the full map, or the first
/// element without a partner.
fn partner_search(qo: &dyn QuasiOrder, u: &Universe, property: Property) -> Result<Vec<(Element, Element)>, Element> {
    let one = u.ring().one();
    let els = u.elements();
    let mut partners = Vec::new();
    for x in els {
        if qo.in_support(x) {
            continue;
        }
        match els.iter().find(|y| property.partner(qo, &one, &(x * *y))) {
            Some(y) => partners.push((x.clone(), y.clone())),
            None => return Err(x.clone()),
        }
    }
    Ok(partners)
}

/// The first catalog obstruction relevant to `property` that applies on this
/// universe: its ideal contains a non-support element `x`, and no universe
/// `y` gives `x·y` a partner relation with 1 (a consistency check of the
/// declared rule, not a proof of it).
fn obstruction_rule(qo: &dyn QuasiOrder, u: &Universe, property: Property) -> Option<Verdict> {
    let one = u.ring().one();
    for ob in qo.obstructions() {
        let relevant = match (property, ob.kind) {
            (Property::Special, ObstructionKind::BelowOne) => true,
            (Property::Special, ObstructionKind::NeverEquivalentToOne) => false,
            (Property::Manis, _) => true,
        };
        if !relevant {
            continue;
        }
        let Some(x) = u
            .elements()
            .iter()
            .find(|x| ob.ideal.contains_unchecked(x) && !qo.in_support(x))
        else {
            continue;
        };
        let consistent = !u
            .elements()
            .iter()
            .any(|y| property.partner(qo, &one, &(x * y)));
        if consistent {
            let rule = match ob.kind {
                ObstructionKind::BelowOne => "ideal-below-one",
                ObstructionKind::NeverEquivalentToOne => "ideal-never-equivalent-to-one",
            };
            return Some(Verdict::FailsByRule {
                rule: rule.to_string(),
                explanation: format!("{}: {}", ob.ideal, ob.explanation),
                element: Some(x.clone()),
            });
        }
    }
    None
}

/// Orderings are Manis exactly when their support is a maximal ideal.
fn maximal_support_rule(qo: &dyn QuasiOrder) -> Option<(bool, String)> {
    if classify(qo) != Kind::Ordering {
        return None;
    }
    let s = qo.declared_support()?;
    let maximal = s.is_maximal();
    let explanation = if maximal {
        format!("the support {s} is maximal, so the residue ring is a field and every non-support x has an inverse modulo the support")
    } else {
        format!("the support {s} is not maximal, so some non-support x has no inverse modulo the support")
    };
    Some((maximal, explanation))
}

pub fn is_special(qo: &dyn QuasiOrder, universe: &Universe) -> Verdict {
    let missing = match partner_search(qo, universe, Property::Special) {
        Ok(partners) => return Verdict::Witnessed { partners },
        Err(x) => x,
    };
    if let Some(v) = obstruction_rule(qo, universe, Property::Special) {
        return v;
    }
    if let Some((true, explanation)) = maximal_support_rule(qo) {
        return Verdict::HoldsByRule {
            rule: "maximal-support".to_string(),
            explanation: format!("{explanation}; Manis quasi-orderings are special"),
        };
    }
    Verdict::Unknown {
        missing,
        universe: universe.descriptor(),
    }
}

pub fn is_manis(qo: &dyn QuasiOrder, universe: &Universe) -> Verdict {
    if let Some((maximal, explanation)) = maximal_support_rule(qo) {
        let rule = "maximal-support".to_string();
        return if maximal {
            Verdict::HoldsByRule { rule, explanation }
        } else {
            Verdict::FailsByRule {
                rule,
                explanation,
                element: None,
            }
        };
    }
    let missing = match partner_search(qo, universe, Property::Manis) {
        Ok(partners) => return Verdict::Witnessed { partners },
        Err(x) => x,
    };
    if let Some(v) = obstruction_rule(qo, universe, Property::Manis) {
        return v;
    }
    Verdict::Unknown {
        missing,
        universe: universe.descriptor(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeVerdicts {
    pub qo: String,
    pub kind: Kind,
    pub special: Verdict,
    pub manis: Verdict,
}

impl NodeVerdicts {
    pub fn get(&self, property: Property) -> &Verdict {
        match property {
            Property::Special => &self.special,
            Property::Manis => &self.manis,
        }
    }

    /// Manis implies special: a positive Manis verdict must not sit next to
    /// a negative special one.
    pub fn manis_implies_special(&self) -> bool {
        !(self.manis.holds() == Some(true) && self.special.is_fails())
    }

    /// Partner maps re-check against the oracle.
    pub fn recheck(&self, qo: &dyn QuasiOrder) -> bool {
        self.special.recheck(qo, Property::Special) && self.manis.recheck(qo, Property::Manis)
    }
}

pub fn node_verdicts<Q: QuasiOrder>(entries: &[Q], universe: &Universe) -> Vec<NodeVerdicts> {
    entries
        .iter()
        .map(|e| NodeVerdicts {
            qo: e.id().to_string(),
            kind: classify(e),
            special: is_special(e, universe),
            manis: is_manis(e, universe),
        })
        .collect()
}

fn verdict_of<'a>(verdicts: &'a [NodeVerdicts], id: &str) -> Option<&'a NodeVerdicts> {
    verdicts.iter().find(|v| v.qo == id)
}

#[derive(Debug, Clone, Serialize)]
pub struct InterplayViolation {
    pub lower: String,
    pub upper: String,
    pub property: Property,
}

/// Along every non-refuted `a ≤ b`, a positive verdict for `a` must not
/// meet a negative verdict for `b`.
#[derive(Debug, Clone, Serialize)]
pub struct InterplayReport {
    pub pairs_checked: u64,
    pub violations: Vec<InterplayViolation>,
}

impl InterplayReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn interplay_check(poset: &Poset, verdicts: &[NodeVerdicts]) -> InterplayReport {
    let mut report = InterplayReport {
        pairs_checked: 0,
        violations: Vec::new(),
    };
    let n = poset.len();
    for i in 0..n {
        for j in 0..n {
            if i == j || !poset.holds(i, j) {
                continue;
            }
            let (a, b) = (&poset.nodes[i].id, &poset.nodes[j].id);
            let (Some(va), Some(vb)) = (verdict_of(verdicts, a), verdict_of(verdicts, b)) else {
                continue;
            };
            for property in [Property::Special, Property::Manis] {
                report.pairs_checked += 1;
                if va.get(property).holds() == Some(true) && vb.get(property).is_fails() {
                    report.violations.push(InterplayViolation {
                        lower: a.clone(),
                        upper: b.clone(),
                        property,
                    });
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, Serialize)]
pub struct SubtreeEntry {
    pub support: String,
    pub members: Vec<String>,
    pub contains_trivial: bool,
    /// `(a, b)` with `a` in the set, `a ≤ b`, and `b` not shown to have the
    /// property.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_upward_closed: Option<(String, String)>,
}

/// For one property: per support, the nodes with the property form an
/// upward-closed subtree containing the trivial node, and no two such
/// nodes of different supports are comparable.
#[derive(Debug, Clone, Serialize)]
pub struct SubtreeReport {
    pub property: Property,
    pub provenance: String,
    pub trees: Vec<SubtreeEntry>,
    pub cross_pairs_checked: u64,
    pub cross_comparable: Vec<(String, String)>,
}

impl SubtreeReport {
    pub fn passed(&self) -> bool {
        self.cross_comparable.is_empty()
            && self
                .trees
                .iter()
                .all(|t| t.contains_trivial && t.not_upward_closed.is_none())
    }
}

pub fn subtree_check<Q: QuasiOrder>(
    forest: &Forest,
    entries: &[Q],
    verdicts: &[NodeVerdicts],
    property: Property,
    universe: &Universe,
) -> Result<SubtreeReport, PosetError> {
    let has = |id: &str| verdict_of(verdicts, id).and_then(|v| v.get(property).holds()) == Some(true);
    let mut trees = Vec::new();
    let mut members_by_tree = Vec::new();
    for tree in &forest.trees {
        let p = &tree.poset;
        let members: Vec<usize> = (0..p.len()).filter(|&i| has(&p.nodes[i].id)).collect();
        let contains_trivial = members.iter().any(|&i| p.nodes[i].trivial);
        let not_upward_closed = members.iter().find_map(|&i| {
            (0..p.len())
                .find(|&j| p.holds(i, j) && !has(&p.nodes[j].id))
                .map(|j| (p.nodes[i].id.clone(), p.nodes[j].id.clone()))
        });
        let ids: Vec<String> = members.iter().map(|&i| p.nodes[i].id.clone()).collect();
        trees.push(SubtreeEntry {
            support: tree.support.as_ref().map_or_else(String::new, |s| s.to_string()),
            members: ids.clone(),
            contains_trivial,
            not_upward_closed,
        });
        members_by_tree.push(ids);
    }
    let find = |id: &str| entries.iter().find(|e| e.id() == id);
    let mut cross_pairs_checked = 0;
    let mut cross_comparable = Vec::new();
    for (t1, m1) in members_by_tree.iter().enumerate() {
        for (t2, m2) in members_by_tree.iter().enumerate() {
            if t1 == t2 {
                continue;
            }
            for a in m1 {
                for b in m2 {
                    let (Some(qa), Some(qb)) = (find(a), find(b)) else {
                        continue;
                    };
                    cross_pairs_checked += 1;
                    if compare_qos(qa, qb, universe)?.holds() {
                        cross_comparable.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    let provenance = match property {
        Property::Special => "ordered disjoint union of the special subtrees",
        Property::Manis => {
            "Manis analogue of the special-subtree decomposition; the statement is derived by \
             analogy and has no separate proof to anchor it"
        }
    };
    Ok(SubtreeReport {
        property,
        provenance: provenance.to_string(),
        trees,
        cross_pairs_checked,
        cross_comparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qo::{catalog, CatalogEntry};
    use crate::ring::Ring;

    fn entry(ring: Ring, id: &str) -> CatalogEntry {
        catalog(ring, 5).into_iter().find(|e| e.id() == id).unwrap()
    }

    #[test]
    fn integer_ordering_is_special_not_manis() {
        let z = Ring::Integers;
        let u = Universe::default_for(z);
        let leq = entry(z, "Z:leq");
        let s = is_special(&leq, &u);
        let Verdict::Witnessed { partners } = &s else {
            panic!("{s:?}")
        };
        // x ↦ x works (1 <= x²) but the search may find an earlier y.
        assert!(partners.iter().all(|(x, y)| leq.le(&z.one(), &(x * y))));
        assert!(s.recheck(&leq, Property::Special));
        assert!(is_manis(&leq, &u).is_fails());
    }

    #[test]
    fn padic_valuation_not_special_by_rule() {
        let z = Ring::Integers;
        let u = Universe::default_for(z);
        for p in [2, 3, 5] {
            let v = is_special(&entry(z, &format!("Z:vp:{p}")), &u);
            match v {
                Verdict::FailsByRule { element, .. } => assert_eq!(element, Some(z.from_int(p))),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn trivials_are_manis_with_partner_one() {
        for ring in Ring::ALL {
            let u = Universe::default_for(ring);
            for e in catalog(ring, 5).iter().filter(|e| e.is_trivial()) {
                let Verdict::Witnessed { partners } = is_manis(e, &u) else {
                    panic!("{}", e.id())
                };
                assert!(partners.iter().all(|(_, y)| y.is_one()), "{}", e.id());
            }
        }
    }

    #[test]
    fn degree_valuation_special_but_not_manis() {
        let r = Ring::PolyUni;
        let u = Universe::default_for(r);
        let vdeg = entry(r, "QX:vdeg");
        assert!(is_special(&vdeg, &u).is_witnessed());
        assert!(is_manis(&vdeg, &u).is_fails());
    }

    #[test]
    fn evaluation_ordering_is_manis_by_maximal_support() {
        let r = Ring::PolyUni;
        let u = Universe::default_for(r);
        let v = is_manis(&entry(r, "QX:eval0"), &u);
        assert!(matches!(v, Verdict::HoldsByRule { .. }), "{v:?}");
    }
}
