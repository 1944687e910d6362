use serde::Serialize;

use crate::poset::{Poset, TreeCertificate};

/// Whether two non-trivial nodes share a coarsening other than the trivial
/// maximum.
#[derive(Debug, Clone, Serialize)]
pub struct DependencyPair {
    pub a: String,
    pub b: String,
    pub dependent: bool,
    /// All common coarsenings; for an independent pair this is just the
    /// maximum, which certifies the independence.
    pub common: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DependencyPartition {
    pub support: Option<String>,
    pub nodes: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub pairs: Vec<DependencyPair>,
    /// Triples `(a, b, c)` with `a ~ b ~ c` for which `a ~ c` was confirmed.
    pub transitive_triples: u64,
    /// First triple breaking transitivity, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transitivity_failure: Option<(String, String, String)>,
}

impl DependencyPartition {
    pub fn is_equivalence(&self) -> bool {
        self.transitivity_failure.is_none()
    }

    pub fn block_of(&self, id: &str) -> Option<&Vec<String>> {
        self.blocks.iter().find(|b| b.iter().any(|n| n == id))
    }
}

/// Dependency on the non-trivial nodes of a tree, read off the tree's own
/// relation matrix. Transitivity is checked on all triples rather than
/// assumed; blocks are only formed when it holds.
pub fn dependency_classes(cert: &TreeCertificate) -> DependencyPartition {
    let p = &cert.poset;
    let root = p.index_of(&cert.maximum);
    let nodes: Vec<usize> = (0..p.len()).filter(|&i| Some(i) != root).collect();
    let common = |a: usize, b: usize| -> Vec<usize> {
        (0..p.len()).filter(|&c| p.holds(a, c) && p.holds(b, c)).collect()
    };
    let dep = |a: usize, b: usize| common(a, b).iter().any(|&c| Some(c) != root);

    let mut pairs = Vec::new();
    for (k, &a) in nodes.iter().enumerate() {
        for &b in &nodes[k + 1..] {
            pairs.push(DependencyPair {
                a: p.nodes[a].id.clone(),
                b: p.nodes[b].id.clone(),
                dependent: dep(a, b),
                common: common(a, b).iter().map(|&c| p.nodes[c].id.clone()).collect(),
            });
        }
    }

    let mut transitive_triples = 0;
    let mut transitivity_failure = None;
    'outer: for &a in &nodes {
        for &b in &nodes {
            if !dep(a, b) {
                continue;
            }
            for &c in &nodes {
                if dep(b, c) {
                    transitive_triples += 1;
                    if !dep(a, c) {
                        transitivity_failure = Some((
                            p.nodes[a].id.clone(),
                            p.nodes[b].id.clone(),
                            p.nodes[c].id.clone(),
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    if transitivity_failure.is_none() {
        for &a in &nodes {
            match blocks.iter_mut().find(|b| dep(b[0], a)) {
                Some(b) => b.push(a),
                None => blocks.push(vec![a]),
            }
        }
    }
    let ids = |v: &[usize]| v.iter().map(|&i| p.nodes[i].id.clone()).collect::<Vec<_>>();
    DependencyPartition {
        support: cert.support.as_ref().map(|s| s.to_string()),
        nodes: ids(&nodes),
        blocks: blocks.iter().map(|b| ids(b)).collect(),
        pairs,
        transitive_triples,
        transitivity_failure,
    }
}

/// A strict pair `lower < upper` and a covering pair `c < d` between them.
#[derive(Debug, Clone, Serialize)]
pub struct CoveringPair {
    pub lower: String,
    pub upper: String,
    pub cover: (String, String),
}

#[derive(Debug, Clone, Serialize)]
pub struct KaplanskyReport {
    /// Every chain has a supremum and an infimum in the node set.
    pub k1: bool,
    /// Every strict pair contains a covering pair.
    pub k2: bool,
    pub chains_checked: u64,
    pub k2_pairs: Vec<CoveringPair>,
    pub failures: Vec<String>,
}

fn supremum(p: &Poset, chain: &[usize]) -> Option<usize> {
    let ub: Vec<usize> = (0..p.len())
        .filter(|&u| chain.iter().all(|&c| p.holds(c, u)))
        .collect();
    ub.iter().copied().find(|&s| ub.iter().all(|&u| p.holds(s, u)))
}

fn infimum(p: &Poset, chain: &[usize]) -> Option<usize> {
    let lb: Vec<usize> = (0..p.len())
        .filter(|&l| chain.iter().all(|&c| p.holds(l, c)))
        .collect();
    lb.iter().copied().find(|&s| lb.iter().all(|&l| p.holds(l, s)))
}

fn comparable(p: &Poset, a: usize, b: usize) -> bool {
    p.holds(a, b) || p.holds(b, a)
}

/// Enumerates every nonempty chain (as an index set, increasing indices)
/// and calls `f` on it.
fn for_each_chain(p: &Poset, mut f: impl FnMut(&[usize])) {
    fn extend(p: &Poset, start: usize, chain: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        for k in start..p.len() {
            if chain.iter().all(|&c| comparable(p, c, k)) {
                chain.push(k);
                f(chain);
                extend(p, k + 1, chain, f);
                chain.pop();
            }
        }
    }
    extend(p, 0, &mut Vec::new(), &mut f);
}

pub fn kaplansky_check(cert: &TreeCertificate) -> KaplanskyReport {
    let p = &cert.poset;
    let id = |i: usize| p.nodes[i].id.clone();
    let mut failures = Vec::new();
    let mut chains_checked = 0;
    for_each_chain(p, |chain| {
        chains_checked += 1;
        if failures.len() < 8 {
            let names = || chain.iter().map(|&i| id(i)).collect::<Vec<_>>().join(", ");
            if supremum(p, chain).is_none() {
                failures.push(format!("K1: chain {{{}}} has no supremum", names()));
            }
            if infimum(p, chain).is_none() {
                failures.push(format!("K1: chain {{{}}} has no infimum", names()));
            }
        }
    });
    let k1 = failures.is_empty();

    let mut k2 = true;
    let mut k2_pairs = Vec::new();
    for a in 0..p.len() {
        for b in 0..p.len() {
            if a == b || !p.holds(a, b) {
                continue;
            }
            let cover = (0..p.len())
                .filter(|&c| p.holds(a, c) && p.holds(c, b))
                .flat_map(|c| (0..p.len()).map(move |d| (c, d)))
                .find(|&(c, d)| p.holds(d, b) && p.covers(c, d));
            match cover {
                Some((c, d)) => k2_pairs.push(CoveringPair {
                    lower: id(a),
                    upper: id(b),
                    cover: (id(c), id(d)),
                }),
                None => {
                    k2 = false;
                    failures.push(format!("K2: no covering pair between {} and {}", id(a), id(b)));
                }
            }
        }
    }
    KaplanskyReport {
        k1,
        k2,
        chains_checked,
        k2_pairs,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_poset, check_tree};
    use crate::qo::{catalog, CatalogEntry, QuasiOrder};
    use crate::ring::{Ideal, Ring, Universe};

    fn tree(ring: Ring, ids: &[&str]) -> TreeCertificate {
        let all = catalog(ring, 5);
        let nodes: Vec<CatalogEntry> = ids
            .iter()
            .map(|id| all.iter().find(|e| e.id() == *id).unwrap().clone())
            .collect();
        let u = Universe::default_for(ring);
        check_tree(build_poset(&nodes, &u).unwrap(), &Ideal::zero(ring)).unwrap()
    }

    #[test]
    fn integer_valuations_and_ordering_independent() {
        let t = tree(Ring::Integers, &["Z:leq", "Z:vp:2", "Z:vp:3", "Z:vp:5", "Z:triv:0"]);
        let d = dependency_classes(&t);
        assert!(d.is_equivalence());
        assert_eq!(d.blocks.len(), 4);
        assert!(d.blocks.iter().all(|b| b.len() == 1));
        assert!(d.pairs.iter().all(|p| p.common == ["Z:triv:0"]));
    }

    #[test]
    fn leading_cone_depends_on_degree() {
        let t = tree(Ring::PolyUni, &["QX:Pa", "QX:Pna", "QX:vdeg", "QX:w", "QX:triv:0"]);
        let d = dependency_classes(&t);
        let b = d.block_of("QX:Pna").unwrap();
        assert!(b.contains(&"QX:vdeg".to_string()));
        let k = kaplansky_check(&t);
        assert!(k.k1 && k.k2, "{:?}", k.failures);
        assert!(k
            .k2_pairs
            .iter()
            .any(|c| c.cover == ("QX:vdeg".to_string(), "QX:triv:0".to_string())));
    }

    #[test]
    fn single_node_tree() {
        let t = tree(Ring::Integers, &["Z:triv:0"]);
        let k = kaplansky_check(&t);
        assert!(k.k1 && k.k2);
        assert_eq!(k.chains_checked, 1);
        assert!(k.k2_pairs.is_empty());
        // The maximum is not dependent on itself: its only coarsening is trivial.
        assert!(dependency_classes(&t).blocks.is_empty());
        let d = dependency_classes(&tree(Ring::Integers, &["Z:leq", "Z:triv:0"]));
        assert_eq!(d.blocks, [["Z:leq"]]);
    }
}
