//! Exact arithmetic for the concrete rings: the integers, `Q[X]` and `Q[X,Y]`.
//!
//! Elements of all three rings share the [`Element`] type so that oracles,
//! reports and the command line can move between rings at runtime. Mixing
//! elements of different rings is a [`RingError::Mismatch`] on the checked
//! entry points and a panic in the operator impls.

mod ideal;
mod poly;
mod syntax;
mod universe;

pub(crate) use ideal::primes_up_to;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

pub use ideal::Ideal;
pub use poly::{Monomial, Poly};
pub use syntax::parse_element;
pub use universe::{Bounds, Universe};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("ring mismatch: expected an element of {expected}, found one of {found}")]
    Mismatch { expected: Ring, found: Ring },
    #[error("cannot parse `{input}` in {ring}: {reason}")]
    Parse {
        ring: Ring,
        input: String,
        reason: String,
    },
    #[error("invalid ideal: {0}")]
    Ideal(String),
    #[error("invalid universe bounds: {0}")]
    Bounds(String),
    #[error("unknown ring `{0}` (expected Z, QX or QXY)")]
    UnknownRing(String),
}

/// The shipped commutative unital rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    /// `Q[X]`
    PolyUni,
    /// `Q[X,Y]`
    PolyBi,
}

impl Ring {
    pub const ALL: [Ring; 3] = [Ring::Integers, Ring::PolyUni, Ring::PolyBi];

    /// Short id used in catalog ids and on the command line.
    pub fn id(&self) -> &'static str {
        match self {
            Ring::Integers => "Z",
            Ring::PolyUni => "QX",
            Ring::PolyBi => "QXY",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Ring::Integers => "integers",
            Ring::PolyUni => "Q[X]",
            Ring::PolyBi => "Q[X,Y]",
        }
    }

    pub fn from_id(s: &str) -> Result<Ring, RingError> {
        match s {
            "Z" => Ok(Ring::Integers),
            "QX" => Ok(Ring::PolyUni),
            "QXY" => Ok(Ring::PolyBi),
            other => Err(RingError::UnknownRing(other.to_string())),
        }
    }

    /// Number of polynomial variables, 0 for the integers.
    pub fn nvars(&self) -> u8 {
        match self {
            Ring::Integers => 0,
            Ring::PolyUni => 1,
            Ring::PolyBi => 2,
        }
    }

    pub fn from_int(&self, n: i64) -> Element {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> Element {
        match self {
            Ring::Integers => Element::Int(n),
            _ => Element::Poly(Poly::constant(self.nvars(), BigRational::from_integer(n))),
        }
    }

    pub fn zero(&self) -> Element {
        self.from_int(0)
    }

    pub fn one(&self) -> Element {
        self.from_int(1)
    }

    pub fn minus_one(&self) -> Element {
        self.from_int(-1)
    }

    /// `c * m` in a polynomial ring.
    pub fn term(&self, m: Monomial, c: BigRational) -> Result<Element, RingError> {
        match self {
            Ring::Integers => Err(RingError::Mismatch {
                expected: Ring::PolyUni,
                found: Ring::Integers,
            }),
            Ring::PolyUni if m.y > 0 => Err(RingError::Mismatch {
                expected: Ring::PolyBi,
                found: Ring::PolyUni,
            }),
            _ => Ok(Element::Poly(Poly::monomial(self.nvars(), m, c))),
        }
    }

    pub fn parse(&self, s: &str) -> Result<Element, RingError> {
        parse_element(*self, s)
    }

    pub fn is_commutative(&self) -> bool {
        true
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Ring {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ring::from_id(s)
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// An element of one of the shipped rings, always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Int(BigInt),
    Poly(Poly),
}

impl Element {
    pub fn ring(&self) -> Ring {
        match self {
            Element::Int(_) => Ring::Integers,
            Element::Poly(p) if p.nvars() == 1 => Ring::PolyUni,
            Element::Poly(_) => Ring::PolyBi,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Int(n) => n.is_zero(),
            Element::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Element::Int(n) => n.is_one(),
            Element::Poly(p) => p.constant_term().is_some_and(|c| c.is_one()) && p.terms().len() == 1,
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Element::Int(n) => Some(n),
            Element::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Element::Poly(p) => Some(p),
            Element::Int(_) => None,
        }
    }

    /// Ok when `other` lives in the same ring as `self`.
    pub fn same_ring(&self, other: &Element) -> Result<(), RingError> {
        let (expected, found) = (self.ring(), other.ring());
        if expected == found {
            Ok(())
        } else {
            Err(RingError::Mismatch { expected, found })
        }
    }

    pub fn in_ring(&self, ring: Ring) -> Result<(), RingError> {
        if self.ring() == ring {
            Ok(())
        } else {
            Err(RingError::Mismatch {
                expected: ring,
                found: self.ring(),
            })
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, RingError> {
        self.same_ring(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, RingError> {
        self.same_ring(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, RingError> {
        self.same_ring(other)?;
        Ok(self * other)
    }

    /// Parse back the textual syntax produced by `Display`.
    pub fn parse(ring: Ring, s: &str) -> Result<Element, RingError> {
        parse_element(ring, s)
    }
}

/// Arithmetic operation selector for [`ring_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

/// Checked arithmetic; `Neg` ignores `y` apart from the ring check.
pub fn ring_arith(x: &Element, y: &Element, op: ArithOp) -> Result<Element, RingError> {
    x.same_ring(y)?;
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Mul => x * y,
        ArithOp::Neg => -x,
    })
}

fn mismatch_panic(a: &Element, b: &Element) -> ! {
    panic!(
        "ring mismatch in arithmetic: {} vs {}",
        a.ring(),
        b.ring()
    )
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        match (self, rhs) {
            (Element::Int(a), Element::Int(b)) => Element::Int(a + b),
            (Element::Poly(a), Element::Poly(b)) if a.nvars() == b.nvars() => Element::Poly(a.add(b)),
            _ => mismatch_panic(self, rhs),
        }
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        match (self, rhs) {
            (Element::Int(a), Element::Int(b)) => Element::Int(a - b),
            (Element::Poly(a), Element::Poly(b)) if a.nvars() == b.nvars() => Element::Poly(a.sub(b)),
            _ => mismatch_panic(self, rhs),
        }
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        match (self, rhs) {
            (Element::Int(a), Element::Int(b)) => Element::Int(a * b),
            (Element::Poly(a), Element::Poly(b)) if a.nvars() == b.nvars() => Element::Poly(a.mul(b)),
            _ => mismatch_panic(self, rhs),
        }
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        match self {
            Element::Int(a) => Element::Int(-a),
            Element::Poly(p) => Element::Poly(p.neg()),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(n) => write!(f, "{n}"),
            Element::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
