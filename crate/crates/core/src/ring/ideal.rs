use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Element, Monomial, Ring, RingError};

/// An ideal from one of the shipped families, with decidable membership:
/// arbitrary ideals of the integers (principal, generated by the gcd) and
/// monomial ideals of the polynomial rings.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    repr: Repr,
    generators: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Nonnegative generator `g`; the ideal is `gZ`.
    Int(BigInt),
    /// Minimal monomial generators, sorted; empty means the zero ideal.
    Monomial(Vec<Monomial>),
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.repr == other.repr
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.repr.hash(state);
    }
}

impl Ideal {
    pub fn zero(ring: Ring) -> Ideal {
        match ring {
            Ring::Integers => Self::integer(BigInt::zero()),
            _ => Ideal {
                ring,
                repr: Repr::Monomial(Vec::new()),
                generators: Vec::new(),
            },
        }
    }

    /// The principal ideal `(n)` of the integers.
    pub fn integer(n: impl Into<BigInt>) -> Ideal {
        let g = n.into().abs();
        Ideal {
            ring: Ring::Integers,
            generators: vec![Element::Int(g.clone())],
            repr: Repr::Int(g),
        }
    }

    /// The ideal of the integers generated by `gens`, i.e. `(gcd gens)`.
    pub fn integer_generated(gens: &[BigInt]) -> Ideal {
        let g = gens.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut ideal = Self::integer(g);
        ideal.generators = gens.iter().cloned().map(Element::Int).collect();
        ideal
    }

    /// A monomial ideal of `Q[X]` or `Q[X,Y]`. Every generator must be a
    /// single term (the coefficient is a unit and is ignored); zero
    /// generators are dropped.
    pub fn monomial(ring: Ring, gens: &[Element]) -> Result<Ideal, RingError> {
        if ring == Ring::Integers {
            return Err(RingError::Ideal(
                "monomial ideals live in the polynomial rings".into(),
            ));
        }
        let mut monos = Vec::new();
        for g in gens {
            g.in_ring(ring)?;
            let p = g.as_poly().expect("polynomial ring element");
            if p.is_zero() {
                continue;
            }
            if !p.is_monomial() {
                return Err(RingError::Ideal(format!(
                    "generator `{g}` is not a monomial; only monomial ideals are supported"
                )));
            }
            monos.push(p.terms()[0].0);
        }
        monos.sort();
        monos.dedup();
        let minimal: Vec<Monomial> = monos
            .iter()
            .copied()
            .filter(|m| !monos.iter().any(|d| d != m && d.divides(m)))
            .collect();
        let generators = minimal
            .iter()
            .map(|m| {
                ring.term(*m, num_rational::BigRational::one())
                    .expect("monomial of the ring")
            })
            .collect();
        Ok(Ideal {
            ring,
            repr: Repr::Monomial(minimal),
            generators,
        })
    }

    /// Parses `(0)`, `(6)`, `(X)`, `(X, Y)`, or the same without parentheses.
    pub fn parse(ring: Ring, s: &str) -> Result<Ideal, RingError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let gens = inner
            .split(',')
            .map(|g| ring.parse(g))
            .collect::<Result<Vec<_>, _>>()?;
        match ring {
            Ring::Integers => Ok(Self::integer_generated(
                &gens
                    .iter()
                    .map(|g| g.as_int().cloned().expect("integer"))
                    .collect::<Vec<_>>(),
            )),
            _ => Self::monomial(ring, &gens),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Checked membership test.
    pub fn contains(&self, x: &Element) -> Result<bool, RingError> {
        x.in_ring(self.ring)?;
        Ok(self.contains_unchecked(x))
    }

    /// Membership for an element already known to lie in `self.ring()`.
    pub fn contains_unchecked(&self, x: &Element) -> bool {
        match (&self.repr, x) {
            (Repr::Int(g), Element::Int(n)) => {
                if g.is_zero() {
                    n.is_zero()
                } else {
                    n.is_multiple_of(g)
                }
            }
            (Repr::Monomial(gens), Element::Poly(p)) => p
                .terms()
                .iter()
                .all(|(m, _)| gens.iter().any(|g| g.divides(m))),
            _ => false,
        }
    }

    pub fn is_zero_ideal(&self) -> bool {
        match &self.repr {
            Repr::Int(g) => g.is_zero(),
            Repr::Monomial(gens) => gens.is_empty(),
        }
    }

    pub fn is_proper(&self) -> bool {
        match &self.repr {
            Repr::Int(g) => !g.is_one(),
            Repr::Monomial(gens) => !gens.contains(&Monomial::ONE),
        }
    }

    pub fn is_prime(&self) -> bool {
        match &self.repr {
            Repr::Int(g) => g.is_zero() || is_prime(g),
            // A monomial ideal is prime iff it is generated by variables.
            Repr::Monomial(gens) => gens.iter().all(|m| m.degree() == 1),
        }
    }

    pub fn is_maximal(&self) -> bool {
        match &self.repr {
            Repr::Int(g) => is_prime(g),
            Repr::Monomial(gens) => {
                let nvars = self.ring.nvars() as usize;
                gens.iter().all(|m| m.degree() == 1) && gens.len() == nvars
            }
        }
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        if self.ring != other.ring {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => {
                if b.is_zero() {
                    a.is_zero()
                } else {
                    a.is_multiple_of(b)
                }
            }
            (Repr::Monomial(a), Repr::Monomial(b)) => {
                a.iter().all(|m| b.iter().any(|g| g.divides(m)))
            }
            _ => false,
        }
    }

    /// Compact label used inside catalog ids: `0`, `2`, `X`, `X,Y`.
    pub fn label(&self) -> String {
        match &self.repr {
            Repr::Int(g) => g.to_string(),
            Repr::Monomial(gens) if gens.is_empty() => "0".to_string(),
            Repr::Monomial(gens) => gens
                .iter()
                .rev()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// The prime ideals shipped with each ring: `(0)` and `(p)` for primes up
    /// to `prime_bound` in the integers; `(0)`, `(X)` in `Q[X]`; `(0)`, `(X)`,
    /// `(Y)`, `(X,Y)` in `Q[X,Y]`.
    pub fn shipped_primes(ring: Ring, prime_bound: u64) -> Vec<Ideal> {
        match ring {
            Ring::Integers => std::iter::once(Ideal::zero(ring))
                .chain(primes_up_to(prime_bound).into_iter().map(Ideal::integer))
                .collect(),
            Ring::PolyUni => vec![Ideal::zero(ring), var_ideal(ring, &[Monomial::X])],
            Ring::PolyBi => vec![
                Ideal::zero(ring),
                var_ideal(ring, &[Monomial::X]),
                var_ideal(ring, &[Monomial::Y]),
                var_ideal(ring, &[Monomial::X, Monomial::Y]),
            ],
        }
    }
}

fn var_ideal(ring: Ring, vars: &[Monomial]) -> Ideal {
    let gens: Vec<Element> = vars
        .iter()
        .map(|m| ring.term(*m, num_rational::BigRational::one()).expect("variable"))
        .collect();
    Ideal::monomial(ring, &gens).expect("monomial generators")
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

impl serde::Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(n: &BigInt) -> bool {
    let Some(n) = n.abs().to_u64() else {
        // Out of range for the shipped catalogs.
        return false;
    };
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound)
        .filter(|&n| is_prime(&BigInt::from(n)))
        .collect()
}
