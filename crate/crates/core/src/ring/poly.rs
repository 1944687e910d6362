use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A monomial `X^x * Y^y`. Univariate polynomials keep `y == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };
    pub const X: Monomial = Monomial { x: 1, y: 0 };
    pub const Y: Monomial = Monomial { x: 0, y: 1 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }

    /// `self | other` in the monoid of monomials.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }
}

/// Graded lexicographic order, X compared before Y.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let mut first = true;
        for (var, exp) in [("X", self.x), ("Y", self.y)] {
            if exp == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(var)?;
            if exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

// Universe coefficients are almost always integers; skipping the gcd
// normalization of `Ratio` for them roughly halves the cost of a product.
fn mul_q(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn add_q(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

/// Sparse polynomial over the rationals in one or two variables.
///
/// Terms are kept sorted ascending in graded lexicographic order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: u8,
    terms: Vec<(Monomial, BigRational)>,
}

impl Poly {
    pub fn zero(nvars: u8) -> Self {
        debug_assert!(nvars == 1 || nvars == 2);
        Poly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: u8, c: BigRational) -> Self {
        Self::monomial(nvars, Monomial::ONE, c)
    }

    pub fn monomial(nvars: u8, m: Monomial, c: BigRational) -> Self {
        debug_assert!(nvars == 2 || m.y == 0, "Y in a univariate polynomial");
        if c.is_zero() {
            Self::zero(nvars)
        } else {
            Poly { nvars, terms: vec![(m, c)] }
        }
    }

    /// Builds the canonical form of an arbitrary list of terms.
    pub fn from_terms<I>(nvars: u8, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut raw: Vec<(Monomial, BigRational)> = terms.into_iter().collect();
        debug_assert!(nvars == 2 || raw.iter().all(|(m, _)| m.y == 0));
        raw.sort_by_key(|(m, _)| *m);
        let mut terms: Vec<(Monomial, BigRational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == m => *acc = add_q(acc, &c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Highest term in graded lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.last()
    }

    /// Lowest term in graded lexicographic order.
    pub fn trailing(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: Monomial) -> Option<&BigRational> {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(&m))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn constant_term(&self) -> Option<&BigRational> {
        match self.terms.first() {
            Some((m, c)) if *m == Monomial::ONE => Some(c),
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = add_q(ca, cb);
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.times(*mb), mul_q(ca, cb)));
            }
        }
        Poly::from_terms(self.nvars, raw)
    }

    /// Evaluation at the origin.
    pub fn at_origin(&self) -> BigRational {
        self.constant_term().cloned().unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn grlex_orders_by_degree_then_x() {
        let mut ms = vec![
            Monomial::new(0, 2),
            Monomial::new(2, 0),
            Monomial::new(1, 1),
            Monomial::ONE,
            Monomial::Y,
            Monomial::X,
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::ONE,
                Monomial::Y,
                Monomial::X,
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0),
            ]
        );
    }

    #[test]
    fn from_terms_combines_and_drops_zeros() {
        let p = Poly::from_terms(
            2,
            vec![
                (Monomial::X, q(1)),
                (Monomial::Y, q(2)),
                (Monomial::X, q(-1)),
            ],
        );
        assert_eq!(p.terms(), &[(Monomial::Y, q(2))]);
    }

    #[test]
    fn difference_of_squares() {
        let x = Poly::monomial(2, Monomial::X, q(1));
        let y = Poly::monomial(2, Monomial::Y, q(1));
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.to_string(), "X^2 - Y^2");
    }

    #[test]
    fn display_mixed_coefficients() {
        let p = Poly::from_terms(
            2,
            vec![
                (Monomial::new(2, 1), q(3)),
                (Monomial::ONE, BigRational::new(BigInt::from(-1), BigInt::from(2))),
            ],
        );
        assert_eq!(p.to_string(), "3*X^2*Y - 1/2");
        assert_eq!(Poly::monomial(1, Monomial::X, q(-1)).to_string(), "-X");
    }
}
