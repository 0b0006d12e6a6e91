use num::{BigInt, BigRational, Num, Zero};

use super::poly::{Poly, Rational};

/// Errors raised while reading a polynomial expression. Positions are
/// zero-based byte offsets into the input.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { position: usize, name: String },
    #[error("exponent at position {position} exceeds 2^31")]
    ExponentOverflow { position: usize },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
}

/// Parse an expression in `z0..z3` into an expanded, collected polynomial.
///
/// Grammar (whitespace-insensitive):
/// ```text
/// expr   := term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := base ('^' nat)?
/// base   := rational | variable | '(' expr ')'
/// ```
/// with an optional unary minus before a term. Implicit multiplication is
/// rejected.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.input.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut negate = false;
        // Unary sign before the first term.
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let pos = self.pos;
            let n = self.nat()?;
            let exp: u32 = n
                .to_str_radix(10)
                .parse()
                .ok()
                .filter(|&e| e <= 1 << 31)
                .ok_or(ParseError::ExponentOverflow { position: pos })?;
            Ok(base.pow(exp))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => self.rational().map(Poly::constant),
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => self.variable(),
            _ => Err(self.syntax("expected a number, variable, or `(`")),
        }
    }

    fn variable(&mut self) -> Result<Poly, ParseError> {
        let start = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        match name {
            "z0" => Ok(Poly::var(0)),
            "z1" => Ok(Poly::var(1)),
            "z2" => Ok(Poly::var(2)),
            "z3" => Ok(Poly::var(3)),
            _ => Err(ParseError::UnknownIdentifier {
                position: start,
                name: name.to_string(),
            }),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.nat()?;
        // A '/' directly after a natural number is part of the literal.
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let pos = self.pos;
            let denom = self.nat()?;
            if denom.is_zero() {
                return Err(ParseError::ZeroDenominator { position: pos });
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from(numer))
        }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(BigInt::from_str_radix(digits, 10).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::{rat, rat_int};
    use super::*;

    fn z(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn parses_expanded_forms() {
        assert_eq!(parse_poly("z0^2 + z1*z2").unwrap(), &z(0).pow(2) + &(&z(1) * &z(2)));
        assert_eq!(parse_poly("  - z3 ").unwrap(), -&z(3));
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(parse_poly("3/2*z0").unwrap(), z(0).scale(&rat(3, 2)));
    }

    #[test]
    fn parse_commutes_with_arithmetic() {
        let lhs = parse_poly("(z0 + z1)*(z0 - z1)").unwrap();
        let rhs = &parse_poly("z0^2").unwrap() - &parse_poly("z1^2").unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            parse_poly("(z0 + 1)^3").unwrap(),
            parse_poly("z0^3 + 3*z0^2 + 3*z0 + 1").unwrap()
        );
    }

    #[test]
    fn rejects_implicit_multiplication() {
        assert!(matches!(
            parse_poly("2 z0"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("z0(z1)"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn reports_unknown_identifier() {
        assert_eq!(
            parse_poly("z0 + w"),
            Err(ParseError::UnknownIdentifier {
                position: 5,
                name: "w".to_string()
            })
        );
        assert!(matches!(
            parse_poly("z4"),
            Err(ParseError::UnknownIdentifier { .. })
        ));
    }

    #[test]
    fn reports_exponent_overflow() {
        assert!(matches!(
            parse_poly("z0^2147483649"),
            Err(ParseError::ExponentOverflow { .. })
        ));
    }

    #[test]
    fn reports_zero_denominator() {
        assert!(matches!(
            parse_poly("1/0"),
            Err(ParseError::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn round_trips_canonical_display() {
        for text in [
            "z0^2 - 3/2*z1*z2 - 1",
            "z0*z1*z2*z3",
            "0",
            "-z0 + 7",
            "2*z3^5 - z0^3*z1^2",
        ] {
            let p = parse_poly(text).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
        let _ = rat_int(1);
    }
}
