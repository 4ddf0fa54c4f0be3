//! Text and JSON forms of [`LaurentPoly`].
//!
//! Text: terms in canonical order joined by `" + "`, each written as
//! `c*x1^e1*...*xn^en` with zero exponents omitted, `^1` dropped and a
//! coefficient of `1`/`-1` abbreviated (`x1`, `-x1^-2`). The zero polynomial
//! prints as `0`.
//!
//! JSON: `{"n": 2, "terms": [{"exps": [1, 0], "coeff": "2"}]}` with the same
//! term order and decimal-string coefficients.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

fn write_monomial(f: &mut impl fmt::Write, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write_monomial(f, m)?;
            } else if (-c).is_one() {
                f.write_char('-')?;
                write_monomial(f, m)?;
            } else {
                write!(f, "{c}*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

fn parse_factor(tok: &str, n: usize, exps: &mut [i32]) -> Result<()> {
    let bad = || Error::Parse(format!("bad factor {tok:?}"));
    let rest = tok.strip_prefix('x').ok_or_else(bad)?;
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e.parse::<i32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let idx: usize = idx.parse().map_err(|_| bad())?;
    if idx == 0 || idx > n {
        return Err(Error::Parse(format!(
            "variable x{idx} out of range for {n} variables"
        )));
    }
    exps[idx - 1] += exp;
    Ok(())
}

fn parse_term(term: &str, n: usize) -> Result<(Monomial, BigInt)> {
    let term = term.trim();
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut exps = vec![0; n];
    let mut coeff = BigInt::one();
    let mut body = term;
    if let Some(rest) = term.strip_prefix('-') {
        if rest.starts_with('x') {
            coeff = -coeff;
            body = rest;
        }
    }
    for (i, tok) in body.split('*').enumerate() {
        if i == 0 && !tok.starts_with('x') {
            coeff = BigInt::from_str(tok)
                .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?;
            continue;
        }
        parse_factor(tok, n, &mut exps)?;
    }
    Ok((Monomial::new(exps), coeff))
}

impl LaurentPoly {
    /// Parses the text form in a ring of `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<LaurentPoly> {
        let s = s.trim();
        let mut p = LaurentPoly::zero(n);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let (m, c) = parse_term(term, n)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            n: self.n(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exps: m.exps().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly> {
        let v: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        LaurentPoly::try_from(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<i32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(v: PolyJson) -> Result<Self> {
        let mut p = LaurentPoly::zero(v.n);
        for t in v.terms {
            if t.exps.len() != v.n {
                return Err(Error::VariableCountMismatch {
                    left: v.n,
                    right: t.exps.len(),
                });
            }
            let c = BigInt::from_str(&t.coeff)
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient in JSON term".into()));
            }
            p.add_term(Monomial::new(t.exps), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize, e: i32, n: usize) -> LaurentPoly {
        LaurentPoly::term(1, Monomial::var(i, e, n))
    }

    #[test]
    fn formats_examples() {
        let p = &(&x(0, 1, 2) + &x(0, -1, 2)) + &x(1, 1, 2);
        assert_eq!(p.scale(2).to_string(), "2*x1 + 2*x1^-1 + 2*x2");
        let d = &x(0, 2, 1) - &x(0, -2, 1);
        assert_eq!(d.to_string(), "x1^2 + -x1^-2");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
        assert_eq!(LaurentPoly::constant(-4, 2).to_string(), "-4");
        let m = LaurentPoly::term(-3, Monomial::new(vec![1, -2, 5]));
        assert_eq!(m.to_string(), "-3*x1*x2^-2*x3^5");
    }

    #[test]
    fn parses_and_rejects() {
        let p = LaurentPoly::parse("2*x1 + 2*x1^-1 + 2*x2", 2).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&Monomial::new(vec![-1, 0])), BigInt::from(2));
        assert!(LaurentPoly::parse("x3", 2).is_err());
        assert!(LaurentPoly::parse("2*y1", 2).is_err());
        assert!(LaurentPoly::parse("", 2).is_err());
        assert_eq!(LaurentPoly::parse("0", 2).unwrap(), LaurentPoly::zero(2));
        assert_eq!(
            LaurentPoly::parse("-x1^-2 + 1", 1).unwrap(),
            &LaurentPoly::one(1) - &x(0, -2, 1)
        );
    }

    #[test]
    fn json_shape() {
        let p = (&x(0, 1, 2) + &x(1, -1, 2)).scale(3);
        assert_eq!(
            p.to_json(),
            r#"{"n":2,"terms":[{"exps":[1,0],"coeff":"3"},{"exps":[0,-1],"coeff":"3"}]}"#
        );
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
        assert!(LaurentPoly::from_json(r#"{"n":2,"terms":[{"exps":[1],"coeff":"3"}]}"#).is_err());
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-3i32..=3, n), -50i64..=50), 0..6).prop_map(
            move |ts| {
                LaurentPoly::from_terms(n, ts.into_iter().map(|(e, c)| (Monomial::new(e), c)))
                    .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly(3)) {
            let s = p.to_string();
            let q = LaurentPoly::parse(&s, 3).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), s);
        }

        #[test]
        fn json_round_trip(p in arb_poly(2)) {
            let s = p.to_json();
            let q = LaurentPoly::from_json(&s).unwrap();
            prop_assert_eq!(q.to_json(), s);
        }
    }
}
