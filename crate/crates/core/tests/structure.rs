mod common;

use quasiord::poset::{build_poset, check_tree, convexity_check, forest_partition};
use quasiord::qo::{catalog, CatalogEntry, QuasiOrder};
use quasiord::ring::{Element, Ideal, Ring, Universe};
use quasiord::structure::{
    dependency_classes, interplay_check, is_manis, is_special, kaplansky_check, node_verdicts,
    subtree_check, Property, Verdict,
};

fn entry(ring: Ring, id: &str) -> CatalogEntry {
    catalog(ring, 5).into_iter().find(|e| e.id() == id).unwrap()
}

/// First non-support universe element with no partner, via the test
/// oracles.
fn missing_partner(e: &CatalogEntry, u: &Universe, property: Property) -> Option<Element> {
    let ring = u.ring();
    let one = ring.one();
    let support = e.support().label();
    let ok = |xy: &Element| match property {
        Property::Special => common::le(e.id(), &one, xy),
        Property::Manis => common::le(e.id(), &one, xy) && common::le(e.id(), xy, &one),
    };
    u.elements()
        .iter()
        .filter(|x| !common::member(&support, x))
        .find(|x| !u.elements().iter().any(|y| ok(&(*x * y))))
        .cloned()
}

#[test]
fn verdicts_agree_with_brute_force_partners() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        for e in catalog(ring, 5) {
            for (property, v) in [(Property::Special, is_special(&e, &u)), (Property::Manis, is_manis(&e, &u))] {
                let missing = missing_partner(&e, &u, property);
                match &v {
                    Verdict::Witnessed { .. } => assert_eq!(missing, None, "{} {property:?}", e.id()),
                    Verdict::Unknown { missing: m, .. } => assert_eq!(missing.as_ref(), Some(m)),
                    Verdict::FailsByRule { element: Some(x), .. } => {
                        assert!(!common::member(&e.support().label(), x));
                        assert!(missing.is_some(), "{} {property:?}", e.id());
                    }
                    _ => {}
                }
                assert!(v.recheck(&e, property), "{} {property:?}", e.id());
            }
        }
    }
}

#[test]
fn integer_verdicts() {
    let z = Ring::Integers;
    let u = Universe::default_for(z);
    let leq = entry(z, "Z:leq");
    assert!(is_special(&leq, &u).is_witnessed());
    assert!(is_manis(&leq, &u).is_fails());
    for e in catalog(z, 5) {
        if e.id().starts_with("Z:vp:") {
            assert!(is_special(&e, &u).is_fails(), "{}", e.id());
            assert!(is_manis(&e, &u).is_fails(), "{}", e.id());
        }
    }
}

#[test]
fn trivials_are_manis_and_manis_implies_special() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        let entries = catalog(ring, 5);
        for (e, nv) in entries.iter().zip(node_verdicts(&entries, &u)) {
            assert!(nv.manis_implies_special(), "{}", e.id());
            assert!(nv.recheck(e));
            if e.is_trivial() {
                assert!(nv.manis.is_witnessed(), "{}", e.id());
            }
        }
    }
}

/// A quasi-ordering is special iff its support is its only proper convex
/// ideal. Among the shipped primes, every one strictly containing the
/// support must then fail convexity, and a convex one rules specialness out.
#[test]
fn special_means_no_convex_prime_above_the_support() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        for e in catalog(ring, 5) {
            let s = e.support().clone();
            let convex_above = Ideal::shipped_primes(ring, 5)
                .into_iter()
                .filter(|q| s.is_subset_of(q) && *q != s && q.is_proper())
                .any(|q| !convexity_check(&q, &e, &u).unwrap().is_refuted());
            if is_special(&e, &u).holds() == Some(true) {
                assert!(!convex_above, "{}", e.id());
            }
        }
    }
}

#[test]
fn properties_move_up_and_form_subtrees() {
    for ring in Ring::ALL {
        let u = Universe::default_for(ring);
        let entries = catalog(ring, 5);
        let verdicts = node_verdicts(&entries, &u);
        let forest = forest_partition(&entries, &u).unwrap();
        for tree in &forest.trees {
            let r = interplay_check(&tree.poset, &verdicts);
            assert!(r.passed(), "{:?}", r.violations);
        }
        for property in [Property::Special, Property::Manis] {
            let r = subtree_check(&forest, &entries, &verdicts, property, &u).unwrap();
            assert!(r.passed(), "{ring:?} {property:?}: {r:?}");
        }
    }
}

fn tree(ring: Ring, ids: &[&str]) -> quasiord::poset::TreeCertificate {
    let nodes: Vec<CatalogEntry> = ids.iter().map(|id| entry(ring, id)).collect();
    let u = Universe::default_for(ring);
    check_tree(build_poset(&nodes, &u).unwrap(), &Ideal::zero(ring)).unwrap()
}

#[test]
fn dependency_blocks() {
    let z = tree(Ring::Integers, &["Z:leq", "Z:vp:2", "Z:vp:3", "Z:vp:5", "Z:triv:0"]);
    let d = dependency_classes(&z);
    assert!(d.is_equivalence());
    assert_eq!(d.blocks, [["Z:leq"], ["Z:vp:2"], ["Z:vp:3"], ["Z:vp:5"]]);
    assert!(d.pairs.iter().all(|p| !p.dependent));

    let q = tree(Ring::PolyUni, &["QX:Pa", "QX:Pna", "QX:vdeg", "QX:w", "QX:triv:0"]);
    let d = dependency_classes(&q);
    assert!(d.is_equivalence());
    assert_eq!(d.block_of("QX:Pna"), d.block_of("QX:vdeg"));
    let p = d.pairs.iter().find(|p| p.a == "QX:Pna" && p.b == "QX:vdeg").unwrap();
    assert!(p.common.contains(&"QX:vdeg".to_string()));
    // Dependency across the two branches would need a common non-trivial
    // coarsening; there is none.
    assert_ne!(d.block_of("QX:Pa"), d.block_of("QX:Pna"));
}

#[test]
fn kaplansky_on_integer_and_univariate_trees() {
    for t in [
        tree(Ring::Integers, &["Z:leq", "Z:vp:2", "Z:vp:3", "Z:vp:5", "Z:triv:0"]),
        tree(Ring::PolyUni, &["QX:Pa", "QX:Pna", "QX:vdeg", "QX:w", "QX:triv:0"]),
    ] {
        let k = kaplansky_check(&t);
        assert!(k.k1 && k.k2, "{:?}", k.failures);
        // Number of strict pairs in the tree, one covering pair each.
        let p = &t.poset;
        let strict = (0..p.len())
            .flat_map(|i| (0..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && p.holds(i, j))
            .count();
        assert_eq!(k.k2_pairs.len(), strict);
    }
}
