//! Textual element syntax: decimals for integers, `3*X^2*Y - 1/2` for
//! polynomials. The printer in `Display` emits exactly the canonical form this
//! parser accepts; the parser is lenient about whitespace, term order and
//! repeated factors.

use std::iter::Peekable;
use std::str::Chars;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Element, Monomial, Poly, Ring, RingError};

pub fn parse_element(ring: Ring, input: &str) -> Result<Element, RingError> {
    let fail = |reason: &str| RingError::Parse {
        ring,
        input: input.to_string(),
        reason: reason.to_string(),
    };
    match ring {
        Ring::Integers => {
            let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
            if compact.is_empty() {
                return Err(fail("empty input"));
            }
            BigInt::from_str(&compact)
                .map(Element::Int)
                .map_err(|_| fail("expected a decimal integer"))
        }
        Ring::PolyUni | Ring::PolyBi => {
            let mut p = Parser {
                chars: input.chars().peekable(),
                nvars: ring.nvars(),
                terms: Vec::new(),
            };
            p.expr().map_err(|r| fail(&r))?;
            Ok(Element::Poly(Poly::from_terms(ring.nvars(), p.terms)))
        }
    }
}

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
    nvars: u8,
    terms: Vec<(Monomial, BigRational)>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn expr(&mut self) -> Result<(), String> {
        let mut sign = BigRational::one();
        match self.peek() {
            None => return Err("empty input".into()),
            Some('-') => {
                self.chars.next();
                sign = -sign;
            }
            Some('+') => {
                self.chars.next();
            }
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            self.terms.push((m, c * &sign));
            match self.peek() {
                None => return Ok(()),
                Some('+') => {
                    self.chars.next();
                    sign = BigRational::one();
                }
                Some('-') => {
                    self.chars.next();
                    sign = -BigRational::one();
                }
                Some(other) => return Err(format!("unexpected `{other}`")),
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), String> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::ONE;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.number()?;
                    if self.peek() == Some('/') {
                        self.chars.next();
                        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return Err("expected denominator after `/`".into());
                        }
                        let den = self.number()?;
                        if den.is_zero() {
                            return Err("zero denominator".into());
                        }
                        coeff *= BigRational::new(num, den);
                    } else {
                        coeff *= BigRational::from_integer(num);
                    }
                }
                Some('X') => {
                    self.chars.next();
                    mono = mono.times(Monomial::new(self.exponent()?, 0));
                }
                Some('Y') => {
                    if self.nvars < 2 {
                        return Err("variable Y does not exist in Q[X]".into());
                    }
                    self.chars.next();
                    mono = mono.times(Monomial::new(0, self.exponent()?));
                }
                Some(other) => return Err(format!("unexpected `{other}`")),
                None => return Err("unexpected end of input".into()),
            }
            if self.peek() == Some('*') {
                self.chars.next();
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn exponent(&mut self) -> Result<u32, String> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.chars.next();
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err("expected exponent after `^`".into());
        }
        let e = self.number()?;
        u32::try_from(e).map_err(|_| "exponent too large".to_string())
    }

    fn number(&mut self) -> Result<BigInt, String> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(c) = self.chars.peek().copied() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        BigInt::from_str(&digits).map_err(|_| "expected a number".to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_round_trips() {
        for (ring, s) in [
            (Ring::PolyBi, "3*X^2*Y - 1/2"),
            (Ring::PolyBi, "X^2 - Y^2"),
            (Ring::PolyUni, "-2*X^3 + X - 1"),
            (Ring::PolyUni, "0"),
            (Ring::Integers, "-17"),
        ] {
            let e = parse_element(ring, s).unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn lenient_input_is_canonicalized() {
        let e = parse_element(Ring::PolyBi, "Y*X + 2 * X^1 - X + Y^0").unwrap();
        assert_eq!(e.to_string(), "X*Y + X + 1");
        let e = parse_element(Ring::PolyUni, "  1/2 * 4 ").unwrap();
        assert_eq!(e.to_string(), "2");
    }

    #[test]
    fn rejects_bad_input() {
        for (ring, s) in [
            (Ring::PolyUni, "Y"),
            (Ring::PolyUni, "X^"),
            (Ring::PolyUni, "1/0"),
            (Ring::PolyUni, ""),
            (Ring::PolyBi, "X +"),
            (Ring::PolyBi, "Z"),
            (Ring::Integers, "X"),
            (Ring::Integers, "1.5"),
        ] {
            assert!(parse_element(ring, s).is_err(), "accepted {s:?}");
        }
    }
}
