use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LgError, Result};
use crate::rational::Rational;

/// Exponent vector `r`; `x^r = x_1^{r_1} ... x_N^{r_N}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Indices of variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial with exact rational coefficients in `x1..xN`.
///
/// Terms are kept in descending lexicographic order of exponent vectors
/// (`x1^5` before `x2^5`), with no repeated monomials and no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    variable_count: usize,
    terms: Vec<(Rational, Monomial)>,
}

impl Polynomial {
    /// Builds a canonical polynomial from arbitrary terms; like monomials are
    /// merged and zero terms dropped. An empty result is allowed here (it is
    /// the zero-variable restriction), only the parser rejects it.
    pub fn from_terms(variable_count: usize, terms: Vec<(Rational, Monomial)>) -> Result<Self> {
        let mut merged: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (c, m) in terms {
            if m.len() != variable_count {
                return Err(LgError::DimensionMismatch {
                    expected: variable_count,
                    got: m.len(),
                });
            }
            *merged.entry(m).or_insert_with(Rational::zero) += c;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        Ok(Polynomial {
            variable_count,
            terms,
        })
    }

    /// The polynomial in zero variables with no terms.
    pub fn empty() -> Self {
        Polynomial {
            variable_count: 0,
            terms: Vec::new(),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn terms(&self) -> &[(Rational, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keeps the terms supported on `fixed` and renames `fixed[k]` to `x_{k+1}`.
    pub fn restrict(&self, fixed: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.support().all(|i| fixed.contains(&i)))
            .map(|(c, m)| (c.clone(), Monomial(fixed.iter().map(|&i| m.0[i]).collect())))
            .collect();
        Polynomial::from_terms(fixed.len(), terms).expect("restricted dimensions agree")
    }

    /// Reorders variables: new variable `k` is old variable `order[k]`.
    pub fn permute_variables(&self, order: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), Monomial(order.iter().map(|&i| m.0[i]).collect())))
            .collect();
        Polynomial::from_terms(order.len(), terms).expect("permuted dimensions agree")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let constant = m.0.iter().all(|&e| e == 0);
            if constant {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the polynomial grammar: `+`/`-` separated terms, each an optional
/// integer or `p/q` coefficient and `*`-separated powers `xK^E` (`K, E >= 1`,
/// `^E` optional). Whitespace is ignored. `N` is the largest index used.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        pos: 0,
        end: text.len(),
    };
    let raw = parser.polynomial()?;
    let n = raw
        .iter()
        .flat_map(|(_, powers)| powers.iter().map(|&(v, _)| v))
        .max()
        .unwrap_or(0);
    let terms = raw
        .into_iter()
        .map(|(c, powers)| {
            let mut e = vec![0u32; n];
            for (v, p) in powers {
                e[v - 1] += p;
            }
            (c, Monomial(e))
        })
        .collect();
    let p = Polynomial::from_terms(n, terms)?;
    if p.is_zero() {
        return Err(LgError::ZeroPolynomial);
    }
    Ok(p)
}

type RawTerm = (Rational, Vec<(usize, u32)>);

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(LgError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn polynomial(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, powers) = self.term()?;
            terms.push((c * Rational::from_integer(BigInt::from(sign)), powers));
            match self.peek() {
                None => return Ok(terms),
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(c) => return self.error(format!("unexpected `{c}`")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = Rational::one();
        let mut powers = Vec::new();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let n = self.integer()?;
            coeff = Rational::from_integer(n);
            if self.peek() == Some('/') {
                self.pos += 1;
                let d = self.integer()?;
                if d.is_zero() {
                    return self.error("zero denominator");
                }
                coeff /= Rational::from_integer(d);
            }
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if c.is_ascii_alphabetic() => {}
                _ => return Ok((coeff, powers)),
            }
        }
        loop {
            powers.push(self.power()?);
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((coeff, powers));
            }
        }
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        let start = self.offset();
        let mut name = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric()) {
            name.push(c);
            self.pos += 1;
        }
        if name.is_empty() {
            return self.error("expected a variable");
        }
        let index = name
            .strip_prefix('x')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k >= 1 && !name[1..].starts_with('0'));
        let Some(index) = index else {
            return Err(LgError::UnknownVariable {
                name,
                offset: start,
            });
        };
        let mut exp = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            exp = match u32::try_from(e) {
                Ok(e) if e >= 1 => e,
                _ => return self.error("exponent must be a positive integer"),
            };
        }
        Ok((index, exp))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return match self.peek() {
                Some(c) => self.error(format!("expected an integer, found `{c}`")),
                None => self.error("expected an integer, found end of input"),
            };
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}
