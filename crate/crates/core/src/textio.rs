//! Text forms of series, points and reports.
//!
//! Series grammar (whitespace between tokens is ignored):
//!
//! ```text
//! series := ['+'|'-'] term (('+'|'-') term)* ['+' order]
//! order  := 'O' '(' mono ')'
//! term   := coeff | coeff '*' mono | mono
//! mono   := 'X' ['^' exp]
//! exp    := int | '(' int ['/' int] ')'
//! coeff  := digits ['/' digits]
//! int    := ['-'|'+'] digits
//! ```
//!
//! Points of the half plane are written `x ; y`, tree points `u ; t` with `t`
//! a rational height.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::hplane::HPoint;
use crate::report::{Status, Summary, VerificationReport};
use crate::series::{Exponent, PuiseuxSeries, Rational};
use crate::tree::TreePoint;

pub const SERIES_GRAMMAR: &str = "\
series := ['+'|'-'] term (('+'|'-') term)* ['+' order]
order  := 'O' '(' mono ')'          (unknown terms at or below mono)
term   := coeff | coeff '*' mono | mono
mono   := 'X' ['^' exp]
exp    := int | '(' int ['/' int] ')'
coeff  := digits ['/' digits]
int    := ['-'|'+'] digits
point  := series ';' series        (x ; y with y > 0)
tree   := series ';' rational      (u ; t)";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("zero denominator at byte {offset}")]
    ZeroDenominator { offset: usize },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, base: usize) -> Self {
        Self { bytes: text.as_bytes(), pos: 0, base }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { offset: self.offset(), message: message.into() })
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            self.error(format!("expected '{}'", b as char))
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let n = self.digits()?;
        Ok(if negative { -n } else { n })
    }

    fn fraction_tail(&mut self, numer: BigInt) -> Result<Rational, ParseError> {
        if self.eat(b'/') {
            let at = self.offset();
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(ParseError::ZeroDenominator { offset: at });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn exponent(&mut self) -> Result<Exponent, ParseError> {
        if self.eat(b'(') {
            let numer = self.signed_int()?;
            let e = self.fraction_tail(numer)?;
            self.expect(b')')?;
            Ok(e)
        } else {
            Ok(Rational::from_integer(self.signed_int()?))
        }
    }

    fn mono(&mut self) -> Result<Exponent, ParseError> {
        self.expect(b'X')?;
        if self.eat(b'^') {
            self.exponent()
        } else {
            Ok(Exponent::one())
        }
    }

    fn term(&mut self) -> Result<(Exponent, Rational), ParseError> {
        match self.peek() {
            Some(b'X') => Ok((self.mono()?, Rational::one())),
            Some(b) if b.is_ascii_digit() => {
                let numer = self.digits()?;
                let c = self.fraction_tail(numer)?;
                if self.eat(b'*') {
                    Ok((self.mono()?, c))
                } else {
                    Ok((Exponent::zero(), c))
                }
            }
            _ => self.error("expected a term"),
        }
    }

    fn series(&mut self) -> Result<PuiseuxSeries, ParseError> {
        let mut pairs = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut precision = None;
        loop {
            if !negative && self.peek() == Some(b'O') {
                precision = Some(self.order_term()?);
                break;
            }
            let (e, c) = self.term()?;
            pairs.push((e, if negative { -c } else { c }));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        let series = PuiseuxSeries::from_terms(pairs);
        Ok(match precision {
            Some(p) => series.with_precision(p),
            None => series,
        })
    }

    fn order_term(&mut self) -> Result<Exponent, ParseError> {
        self.expect(b'O')?;
        self.expect(b'(')?;
        let e = self.mono()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(b) => self.error(format!("unexpected '{}'", b as char)),
        }
    }
}

pub fn parse_series(text: &str) -> Result<PuiseuxSeries, ParseError> {
    parse_series_at(text, 0)
}

fn parse_series_at(text: &str, base: usize) -> Result<PuiseuxSeries, ParseError> {
    let mut cur = Cursor::new(text, base);
    let s = cur.series()?;
    cur.finish()?;
    Ok(s)
}

/// Parses `[sign] digits ['/' digits]`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    parse_rational_at(text, 0)
}

fn parse_rational_at(text: &str, base: usize) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(text, base);
    let numer = cur.signed_int()?;
    let r = cur.fraction_tail(numer)?;
    cur.finish()?;
    Ok(r)
}

fn split_pair(text: &str) -> Result<(&str, &str, usize), ParseError> {
    match text.find(';') {
        Some(i) => Ok((&text[..i], &text[i + 1..], i + 1)),
        None => Err(ParseError::Syntax { offset: text.len(), message: "expected ';'".into() }),
    }
}

/// Parses `x ; y` into a point of the half plane.
pub fn parse_point(text: &str) -> Result<HPoint, ParseError> {
    let (xs, ys, at) = split_pair(text)?;
    let x = parse_series_at(xs, 0)?;
    let y = parse_series_at(ys, at)?;
    HPoint::new(x, y).map_err(|e| ParseError::InvalidPoint(e.to_string()))
}

/// Parses `u ; t` into a tree point; `u` is truncated to canonical form.
pub fn parse_tree_point(text: &str) -> Result<TreePoint, ParseError> {
    let (us, ts, at) = split_pair(text)?;
    let u = parse_series_at(us, 0)?;
    let t = parse_rational_at(ts, at)?;
    Ok(TreePoint::new(&u, t))
}

fn format_term(out: &mut String, e: &Exponent, c: &Rational, first: bool) {
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else {
        out.push_str(if c.is_negative() { " - " } else { " + " });
    }
    let mag = c.abs();
    if e.is_zero() {
        out.push_str(&mag.to_string());
        return;
    }
    if !mag.is_one() {
        out.push_str(&mag.to_string());
        out.push('*');
    }
    out.push_str(&format_monomial(e));
}

fn format_monomial(e: &Exponent) -> String {
    if e.is_one() {
        "X".to_string()
    } else {
        format!("X^({e})")
    }
}

/// Canonical text: descending exponents, parenthesized exponents (except the
/// bare `X` for exponent one and plain constants), coefficients in lowest
/// terms. A truncated series ends in `O(X^(p))`.
pub fn format_series(s: &PuiseuxSeries) -> String {
    let mut out = String::new();
    for (i, (e, c)) in s.terms().enumerate() {
        format_term(&mut out, e, c, i == 0);
    }
    match s.precision() {
        Some(p) => {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("O(X^({p}))"));
        }
        None if out.is_empty() => out.push('0'),
        None => {}
    }
    out
}

pub fn format_point(z: &HPoint) -> String {
    format!("{} ; {}", format_series(z.x()), format_series(z.y()))
}

pub fn format_tree_point(p: &TreePoint) -> String {
    format!("{} ; {}", format_series(p.foot()), p.height())
}

#[derive(Serialize)]
struct JsonWitness<'a> {
    params: &'a BTreeMap<String, String>,
    counts: &'a BTreeMap<String, u64>,
    data: &'a [String],
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    status: Status,
    witness: JsonWitness<'a>,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    command: &'a str,
    params: &'a BTreeMap<String, String>,
    checks: Vec<JsonCheck<'a>>,
    summary: Summary,
}

/// Renders reports as
/// `{"command","params","checks":[{"name","status","witness"}],"summary":{"pass","fail","skip"}}`.
///
/// Key order is fixed by the struct layout and sorted maps, so equal inputs
/// give byte-identical output.
pub fn report_to_json(
    command: &str,
    params: &BTreeMap<String, String>,
    reports: &[VerificationReport],
) -> String {
    let doc = JsonDocument {
        command,
        params,
        checks: reports
            .iter()
            .map(|r| JsonCheck {
                name: &r.name,
                status: r.status,
                witness: JsonWitness { params: &r.params, counts: &r.counts, data: &r.witnesses },
            })
            .collect(),
        summary: Summary::of(reports),
    };
    serde_json::to_string_pretty(&doc).expect("report serialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn a2() -> PuiseuxSeries {
        PuiseuxSeries::from_terms([(rat(-1, 2), int(1)), (rat(-3, 4), int(1))])
    }

    #[test]
    fn parses_grammar_examples() {
        assert_eq!(parse_series("X^(-1/2) + X^(-3/4)").unwrap(), a2());
        assert!(parse_series("0").unwrap().is_zero());
        assert!(parse_series("2*X - X - X").unwrap().is_zero());
        assert_eq!(
            parse_series(" -3/2 * X^2 + X^-1 ").unwrap(),
            PuiseuxSeries::from_terms([(int(2), rat(-3, 2)), (int(-1), int(1))])
        );
        assert_eq!(parse_series("X^(4/2)").unwrap(), PuiseuxSeries::x_pow(int(2)));
    }

    #[test]
    fn order_term() {
        let s = parse_series("1 + X^(-1) + O(X^(-2))").unwrap();
        assert_eq!(s.precision(), Some(&int(-2)));
        assert_eq!(format_series(&s), "1 + X^(-1) + O(X^(-2))");
        let absorbed = parse_series("1 + X^(-3) + O(X^(-2))").unwrap();
        assert_eq!(absorbed, PuiseuxSeries::one().with_precision(int(-2)));
        assert_eq!(parse_series("O(X)").unwrap().precision(), Some(&int(1)));
        assert!(parse_series("O(X^(-1)) + 1").is_err());
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(
            parse_series("X^(1/0)"),
            Err(ParseError::ZeroDenominator { offset: 5 })
        );
        assert!(matches!(parse_series("X +"), Err(ParseError::Syntax { offset: 3, .. })));
        assert!(matches!(parse_series("2X"), Err(ParseError::Syntax { offset: 1, .. })));
        assert!(matches!(parse_series("1.5"), Err(ParseError::Syntax { offset: 1, .. })));
        assert!(matches!(parse_series(""), Err(ParseError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_series("3/0*X"), Err(ParseError::ZeroDenominator { offset: 2 })));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_series(&a2()), "X^(-1/2) + X^(-3/4)");
        assert_eq!(format_series(&parse_series("1+X").unwrap()), "X + 1");
        assert_eq!(format_series(&parse_series("-X^2 - 2/4").unwrap()), "-X^(2) - 1/2");
        assert_eq!(format_series(&PuiseuxSeries::zero()), "0");
        let t = PuiseuxSeries::one().with_precision(int(-3));
        assert_eq!(format_series(&t), "1 + O(X^(-3))");
    }

    #[test]
    fn points() {
        let z = parse_point("X^(-1/2) ; X^(-1/2)").unwrap();
        assert_eq!(format_point(&z), "X^(-1/2) ; X^(-1/2)");
        assert!(matches!(parse_point("0;0"), Err(ParseError::InvalidPoint(_))));
        assert!(matches!(parse_point("0;-X"), Err(ParseError::InvalidPoint(_))));
        assert!(matches!(parse_point("0"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_point("0; X^(1/0)"), Err(ParseError::ZeroDenominator { offset: 8 })));
        let p = parse_tree_point("X^(-1/2) + X^(-3/4) ; -3/4").unwrap();
        assert_eq!(format_tree_point(&p), "X^(-1/2) ; -3/4");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 32 ").unwrap(), int(32));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn json_summary_counts_failures() {
        let mut r = VerificationReport::new("bad");
        r.fail("witness");
        let json = report_to_json("verify", &BTreeMap::new(), &[r]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["summary"]["fail"], 1);
        assert_eq!(v["checks"][0]["status"], "fail");
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 4);
        assert!(json.find("\"command\"").unwrap() < json.find("\"summary\"").unwrap());
    }
}
