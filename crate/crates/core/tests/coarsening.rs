mod common;

use common::{coarsening_witness, member};
use quasiord::poset::{
    build_poset, check_tree, compare_qos, convexity_check, cross_support_pairs, forest_partition,
    generalized_tree, is_coarsening_witness, no_global_maximum_demo, positivity_transfer_check,
    qcomp_equivalence, support_monotone_violation, Decision,
};
use quasiord::qo::{catalog, CatalogEntry, QuasiOrder};
use quasiord::ring::{Bounds, Element, Ideal, Ring, Universe};

fn entry(ring: Ring, id: &str) -> CatalogEntry {
    catalog(ring, 5).into_iter().find(|e| e.id() == id).unwrap()
}

fn el(ring: Ring, s: &str) -> Element {
    ring.parse(s).unwrap()
}

fn pair(ring: Ring, x: &str, y: &str) -> (Element, Element) {
    (el(ring, x), el(ring, y))
}

/// Every ordered pair of catalog entries: the search result equals a
/// brute-force search through the test oracles.
#[test]
fn compare_matches_brute_force_on_every_pair() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        let entries = catalog(ring, 5);
        for a in &entries {
            for b in &entries {
                let d = compare_qos(a, b, &u).unwrap();
                let brute = coarsening_witness(a.id(), b.id(), u.elements());
                let label = format!("{} vs {}", a.id(), b.id());
                match &d {
                    Decision::Refuted { witness, search_witness, .. } => {
                        assert_eq!(search_witness.as_ref(), brute.as_ref(), "{label}");
                        assert!(is_coarsening_witness(a, b, witness), "{label}");
                        assert!(common::le(a.id(), &ring.zero(), &witness.0), "{label}");
                        assert!(common::le(a.id(), &witness.0, &witness.1), "{label}");
                        assert!(!common::le(b.id(), &witness.0, &witness.1), "{label}");
                    }
                    _ => assert_eq!(brute, None, "{label}"),
                }
                if d.holds() {
                    assert_eq!(support_monotone_violation(a, b, &u), None, "{label}");
                }
            }
        }
    }
}

#[test]
fn diamond_on_two_variables() {
    let r = Ring::PolyBi;
    let u = Universe::default_for(r);
    let [v, w, uu] = ["QXY:v", "QXY:w", "QXY:u"].map(|id| entry(r, id));
    assert!(compare_qos(&v, &w, &u).unwrap().is_verified());
    assert!(compare_qos(&v, &uu, &u).unwrap().is_verified());

    let uw = compare_qos(&uu, &w, &u).unwrap();
    assert_eq!(uw.witness(), Some(&pair(r, "X", "X^2")));
    let wu = compare_qos(&w, &uu, &u).unwrap();
    assert_eq!(wu.witness(), Some(&pair(r, "Y", "Y^2")));

    let y = Ideal::parse(r, "Y").unwrap();
    for e in [&v, &w, &uu] {
        assert!(!convexity_check(&y, e, &u).unwrap().is_refuted(), "{}", e.id());
    }
    for (lo, hi) in [("QXY:v", "QXY:triv:Y"), ("QXY:u", "QXY:triv:0"), ("QXY:w", "QXY:triv:Y")] {
        let d = compare_qos(&entry(r, lo), &entry(r, hi), &u).unwrap();
        assert!(d.holds(), "{lo} vs {hi}: {d:?}");
    }
}

#[test]
fn valuation_never_finer_than_ordering() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        let entries = catalog(ring, 5);
        for a in entries.iter().filter(|e| e.value(&ring.one()).is_some()) {
            for b in entries.iter().filter(|e| e.value(&ring.one()).is_none()) {
                let d = compare_qos(a, b, &u).unwrap();
                assert!(is_coarsening_witness(a, b, &(ring.zero(), ring.minus_one())));
                assert!(d.is_refuted(), "{} vs {}", a.id(), b.id());
            }
        }
    }
}

#[test]
fn univariate_figure() {
    let r = Ring::PolyUni;
    let u = Universe::default_for(r);
    let ids = ["QX:Pa", "QX:Pna", "QX:vdeg", "QX:w", "QX:triv:0"];
    let nodes: Vec<CatalogEntry> = ids.iter().map(|id| entry(r, id)).collect();
    let p = build_poset(&nodes, &u).unwrap();
    assert!(p.get("QX:Pna", "QX:vdeg").unwrap().holds());
    assert!(p.get("QX:vdeg", "QX:triv:0").unwrap().holds());
    assert!(p.get("QX:Pa", "QX:w").unwrap().holds());
    assert!(p.get("QX:w", "QX:triv:0").unwrap().holds());
    let d = p.get("QX:Pa", "QX:vdeg").unwrap();
    assert!(d.is_refuted());
    assert!(is_coarsening_witness(&nodes[0], &nodes[2], &pair(r, "X", "1")));
    let t = check_tree(p, &Ideal::zero(r)).unwrap();
    assert_eq!(t.maximum, "QX:triv:0");
    assert_eq!(t.branch_containing(&["QX:Pna"]).unwrap().length, 3);
}

#[test]
fn integer_figure_and_witnesses() {
    let z = Ring::Integers;
    let u = Universe::default_for(z);
    let ids = ["Z:leq", "Z:vp:2", "Z:vp:3", "Z:triv:0"];
    let nodes: Vec<CatalogEntry> = ids.iter().map(|id| entry(z, id)).collect();
    let p = build_poset(&nodes, &u).unwrap();
    for a in &ids[..3] {
        assert!(p.get(a, "Z:triv:0").unwrap().holds());
        for b in &ids[..3] {
            if a != b {
                assert!(p.get(a, b).unwrap().is_refuted(), "{a} vs {b}");
            }
        }
    }
    assert!(is_coarsening_witness(&nodes[1], &nodes[2], &pair(z, "2", "3")));
    let t = check_tree(p, &Ideal::zero(z)).unwrap();
    assert_eq!(t.branches.len(), 3);
    assert!(t.branches.iter().all(|b| b.length == 2));
}

/// Bound 23 on a window of 12: a refutation of `a ≤ v_q` needs a multiple
/// of `q` in the window, so the search finds none for q ≥ 13 and the
/// catalog's cited witness carries the decision.
#[test]
fn large_primes_outgrow_the_search_window() {
    let z = Ring::Integers;
    let bounds = Bounds {
        int_bound: 12,
        ..Bounds::default_for(z)
    };
    let u = Universe::enumerate(z, bounds).unwrap();
    let entries: Vec<CatalogEntry> = catalog(z, 23)
        .into_iter()
        .filter(|e| !e.is_trivial())
        .collect();
    assert_eq!(entries.len(), 10);
    for a in &entries {
        for b in &entries {
            if a.id() == b.id() {
                continue;
            }
            let d = compare_qos(a, b, &u).unwrap();
            assert!(d.is_refuted(), "{} vs {}", a.id(), b.id());
            let q: Option<u64> = b.id().strip_prefix("Z:vp:").map(|p| p.parse().unwrap());
            let searchable = q.is_none_or(|q| q <= 12);
            assert_eq!(d.search_witness().is_some(), searchable, "{} vs {}", a.id(), b.id());
            let w = d.witness().unwrap();
            assert!(is_coarsening_witness(a, b, w));
        }
    }
}

#[test]
fn convexity_examples() {
    let z = Ring::Integers;
    let u = Universe::default_for(z);
    let d = convexity_check(&Ideal::integer(2), &entry(z, "Z:leq"), &u).unwrap();
    assert_eq!(d.witness(), Some(&pair(z, "1", "2")));
    for p in [2u64, 3] {
        let vp = entry(z, &format!("Z:vp:{p}"));
        for k in 1..=3 {
            let ideal = Ideal::integer(p.pow(k));
            assert!(!convexity_check(&ideal, &vp, &u).unwrap().is_refuted(), "({p}^{k})");
        }
    }
}

/// Convexity on every (entry, shipped prime) pair against a brute-force
/// membership search, and agreement with coarsening into the trivial.
#[test]
fn qcomp_agrees_everywhere() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        let zero = ring.zero();
        for e in catalog(ring, 5) {
            for q in Ideal::shipped_primes(ring, 5) {
                let rep = qcomp_equivalence(&e, &q, &u).unwrap();
                assert!(rep.agree, "{} at {q}", e.id());
                let label = q.label();
                let brute = u.elements().iter().any(|y| {
                    member(&label, y)
                        && u.elements().iter().any(|x| {
                            common::le(e.id(), &zero, x) && common::le(e.id(), x, y) && !member(&label, x)
                        })
                });
                assert_eq!(rep.convexity.is_refuted(), brute, "{} at {q}", e.id());
            }
        }
    }
    let z = Ring::Integers;
    let u = Universe::default_for(z);
    let rep = qcomp_equivalence(&entry(z, "Z:leq"), &Ideal::integer(2), &u).unwrap();
    assert!(rep.convexity.is_refuted() && rep.coarsening.is_refuted());
    assert!(qcomp_equivalence(&entry(z, "Z:leq"), &Ideal::integer(4), &u).is_err());
}

#[test]
fn positivity_transfer_examples() {
    let r = Ring::PolyUni;
    let u = Universe::default_for(r);
    let rep = positivity_transfer_check(&entry(r, "QX:Pna"), &entry(r, "QX:vdeg"), &u).unwrap();
    assert!(rep.all_pass());
    let b = Ring::PolyBi;
    let ub = Universe::default_for(b);
    let rep = positivity_transfer_check(&entry(b, "QXY:v"), &entry(b, "QXY:u"), &ub).unwrap();
    assert!(rep.all_pass());
    assert!(rep.results.len() >= 2, "{rep:?}");
    let pa = entry(r, "QX:Pa");
    assert!(positivity_transfer_check(&pa, &pa, &u).unwrap().all_pass());
}

#[test]
fn forests() {
    let z = Ring::Integers;
    let f = forest_partition(&catalog(z, 5), &Universe::default_for(z)).unwrap();
    assert_eq!(f.trees.len(), 4);
    for p in [2, 3, 5] {
        let t = f.tree(&Ideal::integer(p)).unwrap();
        assert_eq!(t.poset.len(), 1);
    }
    let b = Ring::PolyBi;
    let ub = Universe::default_for(b);
    let entries = catalog(b, 5);
    let f = forest_partition(&entries, &ub).unwrap();
    let keys: Vec<String> = f.trees.iter().map(|t| t.support.as_ref().unwrap().label()).collect();
    for k in ["0", "Y", "X,Y"] {
        assert!(keys.contains(&k.to_string()), "{keys:?}");
    }
    // Cross-support pairs that survive still respect support inclusion.
    for c in cross_support_pairs(&entries, &ub).unwrap() {
        assert_eq!(c.support_violation, None, "{} vs {}", c.lower, c.upper);
    }
    let empty: Vec<CatalogEntry> = Vec::new();
    assert!(forest_partition(&empty, &ub).unwrap().trees.is_empty());
}

#[test]
fn trivials_at_nested_primes_are_incomparable() {
    let b = Ring::PolyBi;
    let ub = Universe::default_for(b);
    let trivials: Vec<CatalogEntry> = catalog(b, 5).into_iter().filter(|e| e.is_trivial()).collect();
    let demos = no_global_maximum_demo(&trivials, &ub).unwrap();
    assert!(!demos.is_empty());
    for d in &demos {
        assert!(d.passed(), "{} vs {}", d.lower, d.upper);
        if let Some(w) = &d.argument_witness {
            let lower = trivials.iter().find(|e| e.id() == d.lower).unwrap();
            let upper = trivials.iter().find(|e| e.id() == d.upper).unwrap();
            assert!(is_coarsening_witness(lower, upper, w));
        }
    }
    let one = [CatalogEntry::trivial(b, Ideal::zero(b))];
    assert!(no_global_maximum_demo(&one, &ub).is_err());
}

#[test]
fn generalized_tree_keeps_convex_orderings() {
    let r = Ring::PolyUni;
    let u = Universe::default_for(r);
    let x = Ideal::parse(r, "X").unwrap();
    let t = generalized_tree(&catalog(r, 5), &x, &u).unwrap();
    let ids: Vec<&str> = t.poset.nodes.iter().map(|n| n.id.as_str()).collect();
    // (X) is convex for the cone with X positive infinitesimal.
    assert_eq!(ids, ["QX:Pa", "QX:eval0", "QX:triv:X"]);
    assert_eq!(t.maximum, "QX:triv:X");
}
