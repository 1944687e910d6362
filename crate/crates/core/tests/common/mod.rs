//! Test-side oracles: every catalog rule re-derived from the polynomial
//! terms or integer digits, sharing no code with the library's oracles.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use quasiord::qo::Cmp;
use quasiord::ring::{Element, Monomial, Poly, Ring};

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn element(ring: Ring) -> BoxedStrategy<Element> {
    match ring {
        Ring::Integers => (-2_000i64..=2_000).prop_map(|n| Element::Int(BigInt::from(n))).boxed(),
        _ => {
            let nvars = ring.nvars();
            let ymax = if nvars == 2 { 3u32 } else { 0 };
            prop::collection::vec((0u32..=3, 0u32..=ymax, rational()), 0..4)
                .prop_map(move |ts| {
                    Element::Poly(Poly::from_terms(
                        nvars,
                        ts.into_iter().map(|(x, y, c)| (Monomial::new(x, y), c)),
                    ))
                })
                .boxed()
        }
    }
}

/// Value of the independent re-implementation; `None` is infinity. For
/// orderings the oracle compares via the sign of `y - x` instead.
pub fn value(id: &str, x: &Element) -> Option<(i64, i64)> {
    if x.is_zero() {
        return None;
    }
    let int = |v: i64| Some((v, 0));
    match x {
        Element::Int(n) => {
            if let Some(p) = id.strip_prefix("Z:vp:") {
                let p: i64 = p.parse().unwrap();
                let mut m = n.clone();
                let mut k = 0;
                while (&m % p).is_zero() {
                    m /= p;
                    k += 1;
                }
                return int(k);
            }
            let q: i64 = id.strip_prefix("Z:triv:").unwrap().parse().unwrap();
            if q != 0 && (n % q).is_zero() {
                None
            } else {
                int(0)
            }
        }
        Element::Poly(f) => {
            let ms: Vec<Monomial> = f.terms().iter().map(|(m, _)| *m).collect();
            match id {
                "QX:vdeg" => int(-(ms.iter().map(|m| m.x).max().unwrap() as i64)),
                "QX:w" => int(ms.iter().map(|m| m.x).min().unwrap() as i64),
                // Inverse lexicographic: Y exponent first.
                "QXY:v" => ms.iter().map(|m| (m.y as i64, m.x as i64)).min(),
                "QXY:w" => ms.iter().filter(|m| m.y == 0).map(|m| (m.x as i64, 0)).min(),
                "QXY:u" => int(ms.iter().map(|m| m.y).min().unwrap() as i64),
                "QX:triv:0" | "QXY:triv:0" => int(0),
                "QX:triv:X" | "QXY:triv:X" => {
                    if ms.iter().all(|m| m.x >= 1) {
                        None
                    } else {
                        int(0)
                    }
                }
                "QXY:triv:Y" => {
                    if ms.iter().all(|m| m.y >= 1) {
                        None
                    } else {
                        int(0)
                    }
                }
                "QXY:triv:X,Y" => {
                    if ms.iter().all(|m| m.x + m.y >= 1) {
                        None
                    } else {
                        int(0)
                    }
                }
                other => panic!("no oracle for {other}"),
            }
        }
    }
}

pub fn sign_of_difference(id: &str, x: &Element, y: &Element) -> Option<Ordering> {
    let d = y - x;
    let positive = |c: &BigRational| if c.is_positive() { Ordering::Less } else { Ordering::Greater };
    match (id, &d) {
        ("Z:leq", Element::Int(n)) => Some(if n.is_zero() {
            Ordering::Equal
        } else if n.is_positive() {
            Ordering::Less
        } else {
            Ordering::Greater
        }),
        ("QX:Pa", Element::Poly(f)) => Some(f.terms().first().map_or(Ordering::Equal, |(_, c)| positive(c))),
        ("QX:Pna", Element::Poly(f)) => Some(f.terms().last().map_or(Ordering::Equal, |(_, c)| positive(c))),
        ("QX:eval0", Element::Poly(f)) => {
            let c = f.coeff(Monomial::ONE).cloned().unwrap_or_else(BigRational::zero);
            Some(if c.is_zero() { Ordering::Equal } else { positive(&c) })
        }
        _ => None,
    }
}

pub fn oracle(id: &str, x: &Element, y: &Element) -> Cmp {
    if let Some(o) = sign_of_difference(id, x, y) {
        return o.into();
    }
    // x ⪯ y iff v(y) <= v(x), with None as infinity.
    let key = |v: Option<(i64, i64)>| v.map_or((1u8, (0, 0)), |p| (0u8, p));
    key(value(id, y)).cmp(&key(value(id, x))).into()
}

pub fn le(id: &str, x: &Element, y: &Element) -> bool {
    oracle(id, x, y) != Cmp::Greater
}

/// Membership in a shipped prime, read from the ideal's label.
pub fn member(label: &str, x: &Element) -> bool {
    match x {
        Element::Int(n) => {
            let p: i64 = label.parse().unwrap();
            if p == 0 {
                n.is_zero()
            } else {
                (n % p).is_zero()
            }
        }
        Element::Poly(f) => f.terms().iter().all(|(m, _)| match label {
            "0" => false,
            "X" => m.x >= 1,
            "Y" => m.y >= 1,
            "X,Y" => m.x + m.y >= 1,
            other => panic!("unexpected ideal {other}"),
        }),
    }
}

/// First `(x, y)` in `els` order with `0 ⪯₁ x ⪯₁ y` and not `x ⪯₂ y`.
pub fn coarsening_witness(id1: &str, id2: &str, els: &[Element]) -> Option<(Element, Element)> {
    let zero = els[0].ring().zero();
    for x in els {
        if !le(id1, &zero, x) {
            continue;
        }
        for y in els {
            if le(id1, x, y) && !le(id2, x, y) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}
