//! Indexed families of Hochschild chains closed under the operator `A`.
//!
//! Every family is `head | sh(prefix, e1^I, e2^J, e3^K)` for a fixed head
//! letter and prefix word; the family and its indices determine the chain.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::words::{power, shuffle_many, Letter, Word, WordCombination};
use crate::error::{LgError, Result};
use crate::rational::{big, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogWord {
    /// `e123 | sh(e1^I, e2^J, e3^K)`.
    Top { i: u32, j: u32, k: u32 },
    /// `e3 | sh(e1|e2, e1^I, e2^J, e3^K)`.
    PairHead3 { i: u32, j: u32, k: u32 },
    /// `1 | sh(e12|e3, e1^I, e2^J, e3^K)`.
    UnitPair { i: u32, j: u32, k: u32 },
    /// `e_l | sh(e1^I, e2^J, e3^K)`, `l` in `1..=3`.
    Head { l: u8, i: u32, j: u32, k: u32 },
    /// `1 | sh(e12, e1^I, e2^J, e3^K)`.
    UnitWedge { i: u32, j: u32, k: u32 },
}

impl CatalogWord {
    pub fn indices(&self) -> (u32, u32, u32) {
        match *self {
            CatalogWord::Top { i, j, k }
            | CatalogWord::PairHead3 { i, j, k }
            | CatalogWord::UnitPair { i, j, k }
            | CatalogWord::Head { i, j, k, .. }
            | CatalogWord::UnitWedge { i, j, k } => (i, j, k),
        }
    }

    fn head_and_prefix(&self) -> (Letter, Word) {
        match *self {
            CatalogWord::Top { .. } => (Letter::E123, Vec::new()),
            CatalogWord::PairHead3 { .. } => (Letter::E3, vec![Letter::E1, Letter::E2]),
            CatalogWord::UnitPair { .. } => (Letter::UNIT, vec![Letter::E12, Letter::E3]),
            CatalogWord::Head { l, .. } => (Letter::e(l as usize), Vec::new()),
            CatalogWord::UnitWedge { .. } => (Letter::UNIT, vec![Letter::E12]),
        }
    }

    /// Occurrences of `e1, e2, e3`, the same for every word of the expansion.
    pub fn epsilon_counts(&self) -> [u32; 3] {
        let (head, prefix) = self.head_and_prefix();
        let (i, j, k) = self.indices();
        let mut c = [i, j, k];
        for l in std::iter::once(&head).chain(&prefix) {
            for (n, x) in c.iter_mut().enumerate() {
                *x += l.count(n + 1);
            }
        }
        c
    }

    /// The explicit sum of tensor words.
    pub fn expand(&self) -> WordCombination {
        let (head, prefix) = self.head_and_prefix();
        let (i, j, k) = self.indices();
        let mut args = Vec::new();
        if !prefix.is_empty() {
            args.push(prefix);
        }
        for (letter, n) in [(Letter::E1, i), (Letter::E2, j), (Letter::E3, k)] {
            if n > 0 {
                args.push(power(letter, n as usize));
            }
        }
        shuffle_many(&args).prepend(head)
    }
}

impl fmt::Display for CatalogWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, prefix) = self.head_and_prefix();
        let (i, j, k) = self.indices();
        write!(f, "{head}|sh(")?;
        if !prefix.is_empty() {
            write!(f, "{}, ", super::words::word_to_string(&prefix))?;
        }
        write!(f, "e1^{i}, e2^{j}, e3^{k})")
    }
}

/// Linear combination of `(catalog word, u exponent)` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainCombination {
    terms: BTreeMap<(CatalogWord, i32), Rational>,
}

impl ChainCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w: CatalogWord, u: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let key = (w, u);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CatalogWord, i32), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: CatalogWord, u: i32) -> Rational {
        self.terms.get(&(w, u)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((w, u), c) in &o.terms {
            out.add_term(*w, *u, c);
        }
        out
    }

    /// Explicit words at one power of `u`.
    pub fn expand_at(&self, u: i32) -> WordCombination {
        let mut out = WordCombination::zero();
        for ((w, e), c) in &self.terms {
            if *e == u {
                out = out.add(&w.expand().scale(c));
            }
        }
        out
    }
}

fn dec(x: u32) -> Option<u32> {
    x.checked_sub(1)
}

/// `A` on one catalog word. Terms whose index would drop below zero vanish;
/// `Head` and `UnitWedge` are sent to zero, since no rule for them is known
/// and they never feed back into `Top`.
pub fn a_action_word(w: CatalogWord) -> Vec<(CatalogWord, Rational)> {
    let one = Rational::one;
    let half = || big(1, 2);
    let mut out = Vec::new();
    match w {
        CatalogWord::Top { i, j, k } => {
            if let (Some(i), Some(j), Some(k)) = (dec(i), dec(j), dec(k)) {
                out.push((CatalogWord::Top { i, j, k }, one()));
            }
        }
        CatalogWord::PairHead3 { i, j, k } => {
            if let Some(k1) = dec(k) {
                let c = Rational::from_integer(i.into()) + half();
                out.push((CatalogWord::Head { l: 3, i, j, k: k1 }, c));
            }
            if let (Some(i), Some(j), Some(k)) = (dec(i), dec(j), dec(k)) {
                out.push((CatalogWord::PairHead3 { i, j, k }, one()));
            }
        }
        CatalogWord::UnitPair { i, j, k } => {
            if let Some(i1) = dec(i) {
                out.push((CatalogWord::Head { l: 1, i: i1, j, k }, half()));
            }
            if let Some(j1) = dec(j) {
                out.push((CatalogWord::Head { l: 2, i, j: j1, k }, -half()));
            }
            if let (Some(i1), Some(j1)) = (dec(i), dec(j)) {
                if let Some(k1) = dec(k) {
                    out.push((CatalogWord::UnitPair { i: i1, j: j1, k: k1 }, one()));
                }
                out.push((CatalogWord::UnitWedge { i: i1, j: j1, k }, one()));
            }
        }
        CatalogWord::Head { .. } | CatalogWord::UnitWedge { .. } => {}
    }
    out
}

/// `A` extended linearly; `u` exponents are unchanged.
pub fn a_action(c: &ChainCombination) -> ChainCombination {
    let mut out = ChainCombination::zero();
    for ((w, u), x) in c.terms() {
        for (v, y) in a_action_word(*w) {
            out.add_term(v, *u, &(x * &y));
        }
    }
    out
}

/// Recognizes an explicit single word as a catalog word with coefficient 1,
/// which holds only for words with at most one kind of repeated letter.
pub fn catalog_word_of(w: &[Letter]) -> Result<CatalogWord> {
    let outside = || LgError::WordOutsideCatalog {
        word: super::words::word_to_string(w),
    };
    let (&head, rest) = w.split_first().ok_or_else(outside)?;
    let count = |l: Letter| rest.iter().filter(|&&x| x == l).count() as u32;
    if rest.iter().any(|l| ![Letter::E1, Letter::E2, Letter::E3].contains(l)) {
        return Err(outside());
    }
    let (i, j, k) = (count(Letter::E1), count(Letter::E2), count(Letter::E3));
    let candidate = match head {
        h if h == Letter::E123 => CatalogWord::Top { i, j, k },
        h if h == Letter::E1 => CatalogWord::Head { l: 1, i, j, k },
        h if h == Letter::E2 => CatalogWord::Head { l: 2, i, j, k },
        h if h == Letter::E3 => CatalogWord::Head { l: 3, i, j, k },
        _ => return Err(outside()),
    };
    if candidate.expand() == WordCombination::word(w.to_vec()) {
        Ok(candidate)
    } else {
        Err(outside())
    }
}
