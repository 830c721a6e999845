//! Parser for the p-adic integrand grammar: a signed sum of terms, each a
//! rational coefficient, a power of `t`, a power of `[x]`, or a coefficient
//! times one of the powers.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := coef | [coef '*'] atom
//! atom  := 't' ['^' int] | '[x]' ['^' uint]
//! ```

use crate::exact::{int, parse_rational, Coeff, LaurentT, Rational};
use crate::qcalc::bracket_laurent;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let rest = self.rest();
        let len = rest.find(|c: char| !f(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn integer(&mut self) -> Result<i64, String> {
        self.skip_ws();
        let negative = self.eat("-");
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        let value: i64 = digits.parse().map_err(|_| format!("expected an integer exponent at offset {}", self.pos))?;
        Ok(if negative { -value } else { value })
    }

    fn exponent(&mut self) -> Result<i64, String> {
        if self.eat("^") {
            self.integer()
        } else {
            Ok(1)
        }
    }

    fn atom(&mut self, q: &Rational) -> Result<Option<LaurentT>, String> {
        if self.eat("[x]") {
            let k = self.exponent()?;
            let k = usize::try_from(k).map_err(|_| "[x] takes a non-negative exponent".to_string())?;
            return Ok(Some(Coeff::pow(&bracket_laurent(q), k)));
        }
        if self.eat("t") {
            return Ok(Some(LaurentT::monomial(int(1), self.exponent()?)));
        }
        Ok(None)
    }

    fn term(&mut self, q: &Rational) -> Result<LaurentT, String> {
        if let Some(atom) = self.atom(q)? {
            return Ok(atom);
        }
        self.skip_ws();
        let text = self.take_while(|c| c.is_ascii_digit() || c == '/');
        if text.is_empty() {
            return Err(format!("expected a term at offset {}", self.pos));
        }
        let coef = parse_rational(text).map_err(|e| e.to_string())?;
        if self.eat("*") {
            let atom = self.atom(q)?.ok_or_else(|| format!("expected t or [x] at offset {}", self.pos))?;
            Ok(atom.scale(&coef))
        } else {
            Ok(LaurentT::constant(coef))
        }
    }
}

/// Parses `src` into a Laurent polynomial in `t = q^x`.
pub fn parse_integrand(src: &str, q: &Rational) -> Result<LaurentT, String> {
    let mut cur = Cursor { src, pos: 0 };
    let mut total = LaurentT::zero();
    let mut negative = cur.eat("-");
    loop {
        let term = cur.term(q)?;
        total = if negative { total - term } else { total + term };
        if cur.eat("+") {
            negative = false;
        } else if cur.eat("-") {
            negative = true;
        } else {
            break;
        }
    }
    cur.skip_ws();
    if !cur.rest().is_empty() {
        return Err(format!("unexpected input at offset {}: {:?}", cur.pos, cur.rest()));
    }
    Ok(total)
}
