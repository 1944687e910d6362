mod common;

use common::{element, oracle};
use proptest::prelude::*;
use quasiord::qo::{catalog, classify, CatalogEntry, Kind, QuasiOrder};
use quasiord::ring::{Bounds, Element, Ring, Universe};
use quasiord::verify::{
    check_ordering_axioms, check_qr_axioms, mutation_suite, recheck, Mutant, Axiom, Battery, MutantKind, Outcome,
};

fn all_entries() -> Vec<CatalogEntry> {
    Ring::ALL.iter().flat_map(|&r| catalog(r, 7)).collect()
}

fn entry_and_triple() -> impl Strategy<Value = (CatalogEntry, Element, Element, Element, Element)> {
    prop::sample::select(all_entries()).prop_flat_map(|e| {
        let r = e.ring();
        (Just(e), element(r), element(r), element(r), element(r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn catalog_matches_independent_oracle((e, x, y, _, _) in entry_and_triple()) {
        prop_assert_eq!(e.compare(&x, &y), oracle(e.id(), &x, &y), "{} on ({}, {})", e.id(), x, y);
    }

    #[test]
    fn qr_axioms_off_universe((e, a, b, x, y) in entry_and_triple()) {
        let r = e.ring();
        let zero = r.zero();
        let (axb, ayb) = (&(&a * &x) * &b, &(&a * &y) * &b);
        if e.le(&zero, &a) && e.le(&zero, &b) && e.le(&x, &y) {
            prop_assert!(e.le(&axb, &ayb), "QR2 {}", e.id());
        }
        if e.lt(&zero, &a) && e.lt(&zero, &b) && e.le(&axb, &ayb) {
            prop_assert!(e.le(&x, &y), "QR3 {}", e.id());
        }
        // QR4 with z = a.
        if !e.equiv(&a, &y) && e.le(&x, &y) {
            prop_assert!(e.le(&(&x + &a), &(&y + &a)), "QR4 {}", e.id());
        }
        prop_assert_eq!(e.compare(&y, &x), e.compare(&x, &y).reverse());
    }

    #[test]
    fn kind_specific_laws((e, a, b, x, _) in entry_and_triple()) {
        let zero = e.ring().zero();
        match classify(&e) {
            Kind::Ordering => {
                // O4 without the guard, and the sign split of the cone.
                if e.le(&a, &b) {
                    prop_assert!(e.le(&(&a + &x), &(&b + &x)));
                }
                prop_assert!(e.le(&zero, &a) || e.le(&a, &zero));
            }
            _ => {
                prop_assert!(e.le(&zero, &a));
                let s = &a + &b;
                let max = if e.le(&a, &b) { &b } else { &a };
                prop_assert!(e.le(&s, max), "ultrametric {}", e.id());
                let (va, vb, vab) = (e.value(&a).unwrap(), e.value(&b).unwrap(), e.value(&(&a * &b)).unwrap());
                prop_assert_eq!(va.checked_add(vb), Some(vab));
            }
        }
    }
}

#[test]
fn declared_kind_agrees_with_classify() {
    for e in all_entries() {
        assert_eq!(classify(&e), e.declared_kind(), "{}", e.id());
    }
}

fn tiny(ring: Ring) -> Universe {
    let mut b = Bounds::default_for(ring);
    b.int_bound = 3;
    b.max_exp = 1;
    b.max_terms = 2;
    Universe::enumerate(ring, b).unwrap()
}

/// Tuple counts reported by the optimized checks equal a naive count of
/// hypothesis-satisfying tuples.
#[test]
fn tuple_counts_match_naive_enumeration() {
    for ring in Ring::ALL {
        let u = tiny(ring);
        let els = u.elements();
        let zero = ring.zero();
        for e in catalog(ring, 3) {
            let rep = check_qr_axioms(&e, &u).unwrap();
            let (mut n2, mut n3, mut n4) = (0u64, 0u64, 0u64);
            for a in els {
                for b in els {
                    for x in els {
                        for y in els {
                            if e.le(&zero, a) && e.le(&zero, b) && e.le(x, y) {
                                n2 += 1;
                            }
                            let (axb, ayb) = (&(a * x) * b, &(a * y) * b);
                            if e.lt(&zero, a) && e.lt(&zero, b) && e.le(&axb, &ayb) {
                                n3 += 1;
                            }
                        }
                    }
                    // Reuse (a, b) as (x, y) for the three-element QR4 count.
                    for z in els {
                        if e.le(a, b) && !e.equiv(z, b) {
                            n4 += 1;
                        }
                    }
                }
            }
            assert_eq!(rep.get(Axiom::QR2), Some(&Outcome::Pass { tuples: n2 }), "{}", e.id());
            assert_eq!(rep.get(Axiom::QR3), Some(&Outcome::Pass { tuples: n3 }), "{}", e.id());
            assert_eq!(rep.get(Axiom::QR4), Some(&Outcome::Pass { tuples: n4 }), "{}", e.id());
        }
    }
}

#[test]
fn battery_passes_on_small_universes() {
    for ring in Ring::ALL {
        let u = tiny(ring);
        for e in catalog(ring, 3) {
            let b = Battery::run(&e, &u).unwrap();
            assert!(b.all_pass(), "{}: {:?}", e.id(), b);
            match classify(&e) {
                Kind::Ordering => assert!(b.ordering.is_some() && b.value_table.is_none()),
                _ => assert!(matches!(b.value_table, Some(Ok(_)))),
            }
        }
    }
}

#[test]
fn every_mutant_is_caught_with_genuine_witness() {
    for ring in Ring::ALL {
        let u = tiny(ring);
        for e in catalog(ring, 3) {
            let report = mutation_suite(&e, &u, &MutantKind::ALL).unwrap();
            assert!(report.all_caught(), "{}: {:?}", e.id(), report);
            for o in &report.outcomes {
                // -1 ∼ 1 only changes an ordering.
                let applies = match o.kind {
                    MutantKind::MinusOneIsOne => classify(&e) == Kind::Ordering,
                    MutantKind::Swap => true,
                    MutantKind::BrokenTransitivity => Mutant::new(o.kind, &e, &u).is_some(),
                };
                assert_eq!(o.not_applicable.is_none(), applies, "{}", o.mutant);
                assert_eq!(o.caught, applies, "{}", o.mutant);
            }
        }
    }
    // Witnesses re-evaluate as failures against the mutant itself.
    let z = Ring::Integers;
    let u = Universe::default_for(z);
    let leq = catalog(z, 3).into_iter().next().unwrap();
    for kind in MutantKind::ALL {
        let m = Mutant::new(kind, &leq, &u).unwrap();
        let rep = check_qr_axioms(&m, &u).unwrap();
        let f = rep.failures().next().unwrap();
        if let Outcome::Fail { witness } = &f.outcome {
            assert_eq!(recheck(&m, f.axiom, witness), Some(false), "{kind:?} {}", f.axiom);
        }
    }
}

#[test]
fn ordering_suite_refuses_valuations() {
    let z = Ring::Integers;
    let u = Universe::default_for(z);
    let v2 = catalog(z, 3).into_iter().find(|e| e.id() == "Z:vp:2").unwrap();
    assert!(check_ordering_axioms(&v2, &u).is_err());
}
