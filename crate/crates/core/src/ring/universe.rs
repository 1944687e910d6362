use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Element, Monomial, Poly, Ring, RingError};

/// Enumeration bounds for a [`Universe`].
///
/// `int_bound` applies to the integers; the polynomial rings use the maximum
/// exponent (componentwise), the maximum number of nonzero terms and the
/// coefficient set. `samples` extra pseudo-random elements, drawn from
/// slightly looser bounds with a ChaCha stream seeded by `seed`, are appended
/// after the exhaustive part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub int_bound: u64,
    pub max_exp: u32,
    pub max_terms: usize,
    #[serde(serialize_with = "serialize_coeffs")]
    pub coeffs: Vec<BigRational>,
    pub samples: usize,
    pub seed: u64,
}

fn serialize_coeffs<S: serde::Serializer>(c: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|q| q.to_string()))
}

fn ints(xs: &[i64]) -> Vec<BigRational> {
    xs.iter()
        .map(|&n| BigRational::from_integer(BigInt::from(n)))
        .collect()
}

impl Bounds {
    /// The default universe for each ring: `B = 8` on the integers,
    /// `D = 3, T = 2, C = {-2,-1,1,2}` on `Q[X]` and `D = 2, T = 2, C = {-1,1}`
    /// on `Q[X,Y]`.
    pub fn default_for(ring: Ring) -> Bounds {
        let (max_exp, coeffs) = match ring {
            Ring::Integers | Ring::PolyUni => (3, ints(&[-2, -1, 1, 2])),
            Ring::PolyBi => (2, ints(&[-1, 1])),
        };
        Bounds {
            int_bound: 8,
            max_exp,
            max_terms: 2,
            coeffs,
            samples: 0,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), RingError> {
        let bad = |m: &str| Err(RingError::Bounds(m.to_string()));
        if self.int_bound < 2 {
            return bad("integer bound B must be at least 2");
        }
        if self.max_exp < 1 {
            return bad("maximum exponent D must be at least 1");
        }
        if self.max_terms < 1 {
            return bad("maximum term count T must be at least 1");
        }
        if self.coeffs.is_empty() {
            return bad("coefficient set is empty");
        }
        if self.coeffs.iter().any(|c| c.is_zero()) {
            return bad("coefficient set contains 0");
        }
        if !self.coeffs.iter().any(|c| c.abs() == BigRational::from_integer(1.into())) {
            return bad("coefficient set must contain 1 or -1");
        }
        Ok(())
    }

    /// Coefficient set closed under negation, in rank order
    /// `1, -1, 2, -2, ...` (by absolute value, positive first).
    fn signed_coeffs(&self) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = self
            .coeffs
            .iter()
            .flat_map(|c| [c.clone(), -c.clone()])
            .collect();
        out.sort_by_key(coeff_rank);
        out.dedup();
        out
    }

    fn describe(&self, ring: Ring) -> String {
        let tail = format!("S={},seed={}", self.samples, self.seed);
        match ring {
            Ring::Integers => format!("B={},{tail}", self.int_bound),
            _ => {
                let c: Vec<String> = self.coeffs.iter().map(|q| q.to_string()).collect();
                format!(
                    "D={},T={},C={{{}}},{tail}",
                    self.max_exp,
                    self.max_terms,
                    c.join(",")
                )
            }
        }
    }
}

fn coeff_rank(c: &BigRational) -> (BigRational, bool) {
    (c.abs(), c.is_negative())
}

/// A finite, deterministically ordered set of ring elements over which
/// universally quantified claims are tested.
///
/// Always contains `0`, `1`, `-1`, is closed under negation and has no
/// duplicates. The order is canonical: smaller elements (by magnitude, then
/// degree and term count) come first, so witness searches report the simplest
/// counterexample.
#[derive(Debug, Clone)]
pub struct Universe {
    ring: Ring,
    bounds: Bounds,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
}

impl Universe {
    pub fn enumerate(ring: Ring, bounds: Bounds) -> Result<Universe, RingError> {
        bounds.validate()?;
        let mut elements = match ring {
            Ring::Integers => enumerate_integers(bounds.int_bound),
            _ => enumerate_polys(ring, &bounds),
        };
        if bounds.samples > 0 {
            let mut seen: std::collections::HashSet<Element> = elements.iter().cloned().collect();
            let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
            for _ in 0..bounds.samples {
                let x = sample(ring, &bounds, &mut rng);
                for e in [x.clone(), -&x] {
                    if seen.insert(e.clone()) {
                        elements.push(e);
                    }
                }
            }
        }
        if elements.is_empty() {
            return Err(RingError::Bounds("bounds produce an empty universe".into()));
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(Universe {
            ring,
            bounds,
            elements,
            index,
        })
    }

    pub fn default_for(ring: Ring) -> Universe {
        Self::enumerate(ring, Bounds::default_for(ring)).expect("default bounds are valid")
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index.contains_key(x)
    }

    /// Human readable identification of the universe, e.g.
    /// `QX[D=3,T=2,C={-2,-1,1,2},S=0,seed=0] (113 elements)`.
    pub fn descriptor(&self) -> String {
        format!(
            "{}[{}] ({} elements)",
            self.ring.id(),
            self.bounds.describe(self.ring),
            self.len()
        )
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn enumerate_integers(bound: u64) -> Vec<Element> {
    let mut out = vec![Element::Int(BigInt::zero())];
    for n in 1..=bound {
        out.push(Element::Int(BigInt::from(n)));
        out.push(Element::Int(-BigInt::from(n)));
    }
    out
}

fn enumerate_polys(ring: Ring, bounds: &Bounds) -> Vec<Element> {
    let nvars = ring.nvars();
    let d = bounds.max_exp;
    let ymax = if nvars == 2 { d } else { 0 };
    let mut monos: Vec<Monomial> = (0..=d)
        .flat_map(|x| (0..=ymax).map(move |y| Monomial::new(x, y)))
        .collect();
    monos.sort();
    let coeffs = bounds.signed_coeffs();

    let mut polys: Vec<Poly> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    subsets(&monos, bounds.max_terms, 0, &mut chosen, &mut |support| {
        let mut assignment = vec![0usize; support.len()];
        loop {
            let terms = support
                .iter()
                .zip(&assignment)
                .map(|(m, &k)| (*m, coeffs[k].clone()));
            polys.push(Poly::from_terms(nvars, terms));
            // Odometer over coefficient choices.
            let mut pos = 0;
            loop {
                if pos == assignment.len() {
                    return;
                }
                assignment[pos] += 1;
                if assignment[pos] < coeffs.len() {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    });
    polys.sort_by_cached_key(poly_key);
    polys.dedup();
    std::iter::once(Element::Poly(Poly::zero(nvars)))
        .chain(polys.into_iter().map(Element::Poly))
        .collect()
}

/// Calls `f` on every nonempty subset of `monos` of size at most `max`.
fn subsets(
    monos: &[Monomial],
    max: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut dyn FnMut(&[Monomial]),
) {
    if !chosen.is_empty() {
        let support: Vec<Monomial> = chosen.iter().map(|&i| monos[i]).collect();
        f(&support);
    }
    if chosen.len() == max {
        return;
    }
    for i in start..monos.len() {
        chosen.push(i);
        subsets(monos, max, i + 1, chosen, f);
        chosen.pop();
    }
}

type PolyKey = (u32, usize, Vec<(u32, Reverse<u32>)>, Vec<(BigRational, bool)>);

/// Canonical universe order: leading degree, number of terms, the monomials
/// in print order, then the coefficients by rank.
fn poly_key(p: &Poly) -> PolyKey {
    let terms = p.terms();
    (
        p.degree().unwrap_or(0),
        terms.len(),
        terms
            .iter()
            .rev()
            .map(|(m, _)| (m.degree(), Reverse(m.x)))
            .collect(),
        terms.iter().rev().map(|(_, c)| coeff_rank(c)).collect(),
    )
}

fn sample(ring: Ring, bounds: &Bounds, rng: &mut ChaCha8Rng) -> Element {
    match ring {
        Ring::Integers => {
            let b = 2 * bounds.int_bound as i64;
            Element::Int(BigInt::from(rng.gen_range(-b..=b)))
        }
        _ => {
            let nvars = ring.nvars();
            let d = bounds.max_exp + 1;
            let nterms = rng.gen_range(1..=bounds.max_terms + 1);
            let coeffs = bounds.signed_coeffs();
            let terms: Vec<(Monomial, BigRational)> = (0..nterms)
                .map(|_| {
                    let x = rng.gen_range(0..=d);
                    let y = if nvars == 2 { rng.gen_range(0..=d) } else { 0 };
                    let c = &coeffs[rng.gen_range(0..coeffs.len())];
                    let scale = BigRational::new(
                        BigInt::from(rng.gen_range(1..=3)),
                        BigInt::from(rng.gen_range(1..=2)),
                    );
                    (Monomial::new(x, y), c * scale)
                })
                .collect();
            Element::Poly(Poly::from_terms(nvars, terms))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(u: &Universe) -> Vec<String> {
        u.elements().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn small_integer_universe() {
        let b = Bounds {
            int_bound: 3,
            ..Bounds::default_for(Ring::Integers)
        };
        let u = Universe::enumerate(Ring::Integers, b).unwrap();
        assert_eq!(strings(&u), ["0", "1", "-1", "2", "-2", "3", "-3"]);
    }

    #[test]
    fn negation_is_forced() {
        let b = Bounds {
            max_exp: 1,
            max_terms: 1,
            coeffs: ints(&[1]),
            ..Bounds::default_for(Ring::PolyUni)
        };
        let u = Universe::enumerate(Ring::PolyUni, b).unwrap();
        assert_eq!(strings(&u), ["0", "1", "-1", "X", "-X"]);
    }

    #[test]
    fn default_sizes() {
        assert_eq!(Universe::default_for(Ring::Integers).len(), 17);
        assert_eq!(Universe::default_for(Ring::PolyUni).len(), 113);
        assert_eq!(Universe::default_for(Ring::PolyBi).len(), 163);
    }

    #[test]
    fn bivariate_contains_expected_members() {
        let u = Universe::default_for(Ring::PolyBi);
        for s in ["X^2", "X*Y", "Y^2", "X - Y", "-X^2", "-X*Y", "-Y^2", "-X + Y"] {
            assert!(u.contains(&Ring::PolyBi.parse(s).unwrap()), "{s}");
        }
        assert!(!u.contains(&Ring::PolyBi.parse("X^3").unwrap()));
    }

    #[test]
    fn rejects_bad_bounds() {
        let base = Bounds::default_for(Ring::PolyUni);
        for b in [
            Bounds { coeffs: vec![], ..base.clone() },
            Bounds { coeffs: ints(&[2]), ..base.clone() },
            Bounds { max_terms: 0, ..base.clone() },
            Bounds { max_exp: 0, ..base.clone() },
            Bounds { int_bound: 1, ..base.clone() },
        ] {
            assert!(Universe::enumerate(Ring::PolyUni, b).is_err());
        }
    }

    #[test]
    fn samples_are_deterministic_and_closed_under_negation() {
        let b = Bounds {
            samples: 20,
            seed: 7,
            ..Bounds::default_for(Ring::PolyBi)
        };
        let u1 = Universe::enumerate(Ring::PolyBi, b.clone()).unwrap();
        let u2 = Universe::enumerate(Ring::PolyBi, b).unwrap();
        assert_eq!(u1.elements(), u2.elements());
        assert!(u1.len() > 163);
        for e in u1.elements() {
            assert!(u1.contains(&-e));
        }
    }
}
