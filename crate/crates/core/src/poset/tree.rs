use serde::Serialize;

use super::{compare_qos, convexity_check, is_coarsening_witness, support_monotone_violation, Decision, PosetError};
use crate::qo::{classify, CatalogEntry, Kind, QuasiOrder};
use crate::ring::{Element, Ideal, Universe};

#[derive(Debug, Clone, Serialize)]
pub struct PosetNode {
    pub id: String,
    pub kind: Kind,
    pub support: Option<Ideal>,
    pub trivial: bool,
}

/// One cell of the relation matrix: the decision for `lower ≤ upper`.
#[derive(Debug, Clone, Serialize)]
pub struct Relation {
    pub lower: String,
    pub upper: String,
    pub decision: Decision,
}

/// A covering pair of the relation. `verified` is false when the pair only
/// survived the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub lower: String,
    pub upper: String,
    pub verified: bool,
}

/// Number of instances of each partial-order law that were checked.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OrderCheck {
    pub reflexive: u64,
    pub antisymmetric: u64,
    pub transitive: u64,
}

/// The coarsening relation on a set of quasi-orderings, with every
/// surviving pair treated as holding.
#[derive(Debug, Clone, Serialize)]
pub struct Poset {
    pub universe: String,
    pub nodes: Vec<PosetNode>,
    /// Row-major: `relation[i * n + j]` decides `nodes[i] ≤ nodes[j]`.
    pub relation: Vec<Relation>,
    pub hasse: Vec<HasseEdge>,
    pub maximum: Option<String>,
    pub order_check: OrderCheck,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn decision(&self, i: usize, j: usize) -> &Decision {
        &self.relation[i * self.len() + j].decision
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.decision(i, j).holds()
    }

    /// Looks up `a ≤ b` by id.
    pub fn get(&self, a: &str, b: &str) -> Option<&Decision> {
        Some(self.decision(self.index_of(a)?, self.index_of(b)?))
    }

    /// Indices `j` with `i ≤ j`, including `i`.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.holds(i, j)).collect()
    }

    /// `i < j` with nothing strictly in between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j
            && self.holds(i, j)
            && !(0..self.len()).any(|k| k != i && k != j && self.holds(i, k) && self.holds(k, j))
    }

    fn check_partial_order(&self) -> Result<OrderCheck, PosetError> {
        let n = self.len();
        let id = |i: usize| self.nodes[i].id.clone();
        let mut check = OrderCheck {
            reflexive: 0,
            antisymmetric: 0,
            transitive: 0,
        };
        for i in 0..n {
            check.reflexive += 1;
            if !self.holds(i, i) {
                return Err(PosetError::Reflexivity(id(i)));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                check.antisymmetric += 1;
                if self.holds(i, j) && self.holds(j, i) {
                    return Err(PosetError::Antisymmetry { a: id(i), b: id(j) });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.holds(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.holds(b, c) {
                        check.transitive += 1;
                        if !self.holds(a, c) {
                            return Err(PosetError::Transitivity {
                                a: id(a),
                                b: id(b),
                                c: id(c),
                            });
                        }
                    }
                }
            }
        }
        Ok(check)
    }
}

/// Decides `≤` for every ordered pair of `entries`, checks the partial-order
/// laws and computes the Hasse diagram. Entries must share one ring.
pub fn build_poset<Q: QuasiOrder>(entries: &[Q], universe: &Universe) -> Result<Poset, PosetError> {
    let mut relation = Vec::with_capacity(entries.len() * entries.len());
    for a in entries {
        for b in entries {
            relation.push(Relation {
                lower: a.id().to_string(),
                upper: b.id().to_string(),
                decision: compare_qos(a, b, universe)?,
            });
        }
    }
    let nodes = entries
        .iter()
        .map(|e| PosetNode {
            id: e.id().to_string(),
            kind: classify(e),
            support: e.declared_support().cloned(),
            trivial: e.is_trivial(),
        })
        .collect();
    let mut poset = Poset {
        universe: universe.descriptor(),
        nodes,
        relation,
        hasse: Vec::new(),
        maximum: None,
        order_check: OrderCheck {
            reflexive: 0,
            antisymmetric: 0,
            transitive: 0,
        },
    };
    poset.order_check = poset.check_partial_order()?;
    let n = poset.len();
    for i in 0..n {
        for j in 0..n {
            if poset.covers(i, j) {
                poset.hasse.push(HasseEdge {
                    lower: poset.nodes[i].id.clone(),
                    upper: poset.nodes[j].id.clone(),
                    verified: poset.decision(i, j).is_verified(),
                });
            }
        }
    }
    poset.maximum = (0..n)
        .find(|&m| (0..n).all(|i| poset.holds(i, m)))
        .map(|m| poset.nodes[m].id.clone());
    Ok(poset)
}

/// The up-set of a node, listed from the node itself up to the maximum.
#[derive(Debug, Clone, Serialize)]
pub struct UpSet {
    pub node: String,
    pub chain: Vec<String>,
    /// Pairs inside the up-set shown comparable.
    pub pairs_compared: u64,
}

/// A maximal chain, bottom first.
#[derive(Debug, Clone, Serialize)]
pub struct Branch {
    pub nodes: Vec<String>,
    pub length: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeCertificate {
    pub support: Option<Ideal>,
    pub maximum: String,
    pub up_sets: Vec<UpSet>,
    pub branches: Vec<Branch>,
    pub poset: Poset,
}

impl TreeCertificate {
    pub fn branch_containing(&self, ids: &[&str]) -> Option<&Branch> {
        self.branches
            .iter()
            .find(|b| ids.iter().all(|id| b.nodes.iter().any(|n| n == id)))
    }
}

fn certify(poset: Poset, root: usize, support: Option<Ideal>) -> Result<TreeCertificate, PosetError> {
    let n = poset.len();
    let id = |i: usize| poset.nodes[i].id.clone();
    for i in 0..n {
        if !poset.holds(i, root) {
            return Err(PosetError::NotMaximum {
                node: id(i),
                maximum: id(root),
            });
        }
    }
    let mut up_sets = Vec::with_capacity(n);
    let mut chains = Vec::with_capacity(n);
    for i in 0..n {
        let mut up = poset.up_set(i);
        let mut pairs_compared = 0;
        for (k, &a) in up.iter().enumerate() {
            for &b in &up[k + 1..] {
                pairs_compared += 1;
                if !poset.holds(a, b) && !poset.holds(b, a) {
                    return Err(PosetError::ChainViolation {
                        node: id(i),
                        a: id(a),
                        b: id(b),
                    });
                }
            }
        }
        // In a chain, the more elements lie above a node the lower it is.
        up.sort_by_key(|&a| std::cmp::Reverse(poset.up_set(a).len()));
        up_sets.push(UpSet {
            node: id(i),
            chain: up.iter().map(|&a| id(a)).collect(),
            pairs_compared,
        });
        chains.push(up);
    }
    let branches = (0..n)
        .filter(|&i| (0..n).all(|k| k == i || !poset.holds(k, i)))
        .map(|i| Branch {
            nodes: chains[i].iter().map(|&a| id(a)).collect(),
            length: chains[i].len(),
        })
        .collect();
    Ok(TreeCertificate {
        support,
        maximum: id(root),
        up_sets,
        branches,
        poset,
    })
}

/// Certifies that a poset of quasi-orderings with one common support is a
/// tree whose maximum is the trivial quasi-ordering at that support.
pub fn check_tree(poset: Poset, expected_support: &Ideal) -> Result<TreeCertificate, PosetError> {
    for node in &poset.nodes {
        match &node.support {
            Some(s) if s == expected_support => {}
            Some(s) => {
                return Err(PosetError::MixedSupport {
                    node: node.id.clone(),
                    found: s.to_string(),
                    expected: expected_support.to_string(),
                })
            }
            None => return Err(PosetError::NoDeclaredSupport(node.id.clone())),
        }
    }
    let root = poset
        .nodes
        .iter()
        .position(|n| n.trivial)
        .ok_or_else(|| PosetError::NoTrivialNode(expected_support.to_string()))?;
    certify(poset, root, Some(expected_support.clone()))
}

/// The tree at a prime `q` made of the valuation-type entries with support
/// `q`, the ordering-type entries for which `q` is convex, and the trivial
/// quasi-ordering at `q` (taken from `entries` or built if absent).
pub fn generalized_tree(
    entries: &[CatalogEntry],
    q: &Ideal,
    universe: &Universe,
) -> Result<TreeCertificate, PosetError> {
    if !q.is_prime() {
        return Err(PosetError::NotPrime(q.to_string()));
    }
    let mut nodes = Vec::new();
    let mut trivial = None;
    for e in entries {
        if e.is_trivial() {
            if e.support() == q {
                trivial = Some(e.clone());
            }
            continue;
        }
        let keep = match classify(e) {
            Kind::Ordering => convexity_check(q, e, universe)?.holds(),
            _ => e.support() == q,
        };
        if keep {
            nodes.push(e.clone());
        }
    }
    nodes.push(trivial.unwrap_or_else(|| CatalogEntry::trivial(q.ring(), q.clone())));
    let root = nodes.len() - 1;
    let poset = build_poset(&nodes, universe)?;
    certify(poset, root, Some(q.clone()))
}

/// A non-refuted `≤` between entries with different supports.
#[derive(Debug, Clone, Serialize)]
pub struct CrossPair {
    pub lower: String,
    pub upper: String,
    pub decision: Decision,
    /// A universe element in the support of `lower` but not of `upper`;
    /// must be absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_violation: Option<Element>,
}

/// One tree per declared support, ordered by first appearance in the
/// entries. Comparisons only run inside a support class, which is the
/// relation `≤′`; cross-support pairs are listed separately on request.
#[derive(Debug, Clone, Serialize)]
pub struct Forest {
    pub trees: Vec<TreeCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_pairs: Option<Vec<CrossPair>>,
}

impl Forest {
    pub fn tree(&self, support: &Ideal) -> Option<&TreeCertificate> {
        self.trees.iter().find(|t| t.support.as_ref() == Some(support))
    }
}

fn group_by_support<Q: QuasiOrder + Clone>(entries: &[Q]) -> Result<Vec<(Ideal, Vec<Q>)>, PosetError> {
    let mut groups: Vec<(Ideal, Vec<Q>)> = Vec::new();
    for e in entries {
        let s = e
            .declared_support()
            .ok_or_else(|| PosetError::NoDeclaredSupport(e.id().to_string()))?;
        match groups.iter_mut().find(|(g, _)| g == s) {
            Some((_, members)) => members.push(e.clone()),
            None => groups.push((s.clone(), vec![e.clone()])),
        }
    }
    Ok(groups)
}

pub fn forest_partition<Q: QuasiOrder + Clone>(entries: &[Q], universe: &Universe) -> Result<Forest, PosetError> {
    let mut trees = Vec::new();
    for (support, members) in group_by_support(entries)? {
        let poset = build_poset(&members, universe)?;
        trees.push(check_tree(poset, &support)?);
    }
    Ok(Forest {
        trees,
        cross_pairs: None,
    })
}

/// Every non-refuted `a ≤ b` with `a` and `b` of different declared support.
pub fn cross_support_pairs<Q: QuasiOrder>(entries: &[Q], universe: &Universe) -> Result<Vec<CrossPair>, PosetError> {
    let mut out = Vec::new();
    for a in entries {
        for b in entries {
            if a.declared_support() == b.declared_support() {
                continue;
            }
            let decision = compare_qos(a, b, universe)?;
            if decision.holds() {
                out.push(CrossPair {
                    lower: a.id().to_string(),
                    upper: b.id().to_string(),
                    support_violation: support_monotone_violation(a, b, universe),
                    decision,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeRelation {
    ProperSubset,
    ProperSuperset,
    Incomparable,
}

/// Trivial quasi-orderings at two different primes are never comparable.
/// For `p ⊊ q` the argument picks `y ∈ q \ p`: then `0 ⪯ 1 ⪯ y` at `p`
/// (1 and `y` are both outside `p`) while `y ≺ 1` at `q`.
#[derive(Debug, Clone, Serialize)]
pub struct MaximumDemo {
    pub lower: String,
    pub upper: String,
    pub primes: PrimeRelation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argument_witness: Option<(Element, Element)>,
    pub argument_confirmed: bool,
    pub decision: Decision,
}

impl MaximumDemo {
    pub fn passed(&self) -> bool {
        self.decision.is_refuted()
            && (self.primes != PrimeRelation::ProperSubset || self.argument_confirmed)
    }
}

/// Runs the argument above on every ordered pair of trivial entries with
/// different supports. Requires at least one pair of comparable primes.
pub fn no_global_maximum_demo<Q: QuasiOrder>(entries: &[Q], universe: &Universe) -> Result<Vec<MaximumDemo>, PosetError> {
    let trivials: Vec<&Q> = entries.iter().filter(|e| e.is_trivial()).collect();
    let mut out = Vec::new();
    let mut comparable = false;
    for a in &trivials {
        for b in &trivials {
            let (Some(p), Some(q)) = (a.declared_support(), b.declared_support()) else {
                continue;
            };
            if p == q {
                continue;
            }
            let primes = if p.is_subset_of(q) {
                PrimeRelation::ProperSubset
            } else if q.is_subset_of(p) {
                PrimeRelation::ProperSuperset
            } else {
                PrimeRelation::Incomparable
            };
            let mut argument_witness = None;
            let mut argument_confirmed = false;
            if primes == PrimeRelation::ProperSubset {
                comparable = true;
                let one = universe.ring().one();
                if let Some(y) = universe
                    .elements()
                    .iter()
                    .find(|y| q.contains_unchecked(y) && !p.contains_unchecked(y))
                {
                    let w = (one, y.clone());
                    argument_confirmed = is_coarsening_witness(*a, *b, &w);
                    argument_witness = Some(w);
                }
            }
            out.push(MaximumDemo {
                lower: a.id().to_string(),
                upper: b.id().to_string(),
                primes,
                argument_witness,
                argument_confirmed,
                decision: compare_qos(*a, *b, universe)?,
            });
        }
    }
    if !comparable {
        return Err(PosetError::NoComparablePrimes);
    }
    Ok(out)
}
