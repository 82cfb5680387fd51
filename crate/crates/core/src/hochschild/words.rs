//! Hochschild tensor words over the exterior algebra on `e1, e2, e3`, with
//! shuffle and cyclic shuffle products.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// A basis element `e_I` of the exterior algebra, `I` a bitmask of `{1,2,3}`.
/// The empty set is the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const UNIT: Letter = Letter(0);
    pub const E1: Letter = Letter(0b001);
    pub const E2: Letter = Letter(0b010);
    pub const E3: Letter = Letter(0b100);
    pub const E12: Letter = Letter(0b011);
    pub const E123: Letter = Letter(0b111);

    /// `e_i` for `i` in `1..=3`.
    pub fn e(i: usize) -> Letter {
        assert!((1..=3).contains(&i), "no letter e{i}");
        Letter(1 << (i - 1))
    }

    pub fn from_mask(mask: u8) -> Letter {
        assert!(mask < 8, "mask {mask} outside {{1,2,3}}");
        Letter(mask)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// Exterior degree mod 2.
    pub fn parity(self) -> u8 {
        (self.0.count_ones() % 2) as u8
    }

    /// `|a|' = |a| + 1 mod 2`.
    pub fn shifted_parity(self) -> u8 {
        1 - self.parity()
    }

    /// How many times `e_i` occurs (0 or 1).
    pub fn count(self, i: usize) -> u32 {
        u32::from((self.0 >> (i - 1)) & 1)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in 1..=3 {
            if self.count(i) == 1 {
                write!(f, "{i}")?;
            }
        }
        Ok(())
    }
}

pub type Word = Vec<Letter>;

pub fn word_to_string(w: &[Letter]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join("|")
}

/// `e_i | e_i | ... | e_i` (`n` letters).
pub fn power(letter: Letter, n: usize) -> Word {
    vec![letter; n]
}

/// Koszul sign of arranging labelled letters in `order`, relative to
/// increasing label order: each inverted pair of odd (shifted) letters flips it.
pub fn koszul_sign(order: &[usize], shifted: &[u8]) -> i64 {
    let mut odd_inversions = 0;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            if order[a] > order[b] && shifted[order[a]] == 1 && shifted[order[b]] == 1 {
                odd_inversions += 1;
            }
        }
    }
    if odd_inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Finite linear combination of words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordCombination {
    terms: BTreeMap<Word, Rational>,
}

impl WordCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        let mut c = Self::zero();
        c.add_term(w, &Rational::one());
        c
    }

    pub fn add_term(&mut self, w: Word, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[Letter]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    /// `head | w` for every word `w`.
    pub fn prepend(&self, head: Letter) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(head);
            v.extend_from_slice(w);
            out.add_term(v, c);
        }
        out
    }

    /// Sum of coefficients (number of labelled terms when all signs are +).
    pub fn total_weight(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

/// Sum over interleavings of `u` and `v` preserving both internal orders.
pub fn shuffle(u: &[Letter], v: &[Letter]) -> WordCombination {
    let labels: Vec<Letter> = u.iter().chain(v).copied().collect();
    let shifted: Vec<u8> = labels.iter().map(|l| l.shifted_parity()).collect();
    let mut out = WordCombination::zero();
    let mut order = Vec::with_capacity(labels.len());
    interleave(u.len(), v.len(), 0, 0, &mut order, &mut |ord| {
        let w = ord.iter().map(|&i| labels[i]).collect();
        out.add_term(w, &Rational::from_integer(koszul_sign(ord, &shifted).into()));
    });
    out
}

fn interleave(n: usize, m: usize, i: usize, j: usize, order: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if i == n && j == m {
        f(order);
        return;
    }
    if i < n {
        order.push(i);
        interleave(n, m, i + 1, j, order, f);
        order.pop();
    }
    if j < m {
        order.push(n + j);
        interleave(n, m, i, j + 1, order, f);
        order.pop();
    }
}

/// Bilinear extension of [`shuffle`].
pub fn shuffle_combinations(a: &WordCombination, b: &WordCombination) -> WordCombination {
    let mut out = WordCombination::zero();
    for (u, x) in a.terms() {
        for (v, y) in b.terms() {
            let xy = x * y;
            for (w, c) in shuffle(u, v).terms() {
                out.add_term(w.clone(), &(&xy * c));
            }
        }
    }
    out
}

/// `sh(w_1, ..., w_k)`, left to right; the empty product is the empty word.
pub fn shuffle_many(words: &[Word]) -> WordCombination {
    words.iter().fold(WordCombination::word(Vec::new()), |acc, w| {
        shuffle_combinations(&acc, &WordCombination::word(w.clone()))
    })
}

/// Cyclic shuffle: rotate both words, then interleave so that the first
/// letter of `u` precedes the first letter of `v`. An empty argument acts as
/// the identity.
pub fn cyclic_shuffle(u: &[Letter], v: &[Letter]) -> WordCombination {
    if u.is_empty() {
        return WordCombination::word(v.to_vec());
    }
    if v.is_empty() {
        return WordCombination::word(u.to_vec());
    }
    let (n, m) = (u.len(), v.len());
    let labels: Vec<Letter> = u.iter().chain(v).copied().collect();
    let shifted: Vec<u8> = labels.iter().map(|l| l.shifted_parity()).collect();
    let mut out = WordCombination::zero();
    for p in 0..n {
        let ru: Vec<usize> = (0..n).map(|k| (k + p) % n).collect();
        for q in 0..m {
            let rv: Vec<usize> = (0..m).map(|k| n + (k + q) % m).collect();
            let mut order = Vec::with_capacity(n + m);
            interleave(n, m, 0, 0, &mut order, &mut |ord| {
                let labelled: Vec<usize> = ord.iter().map(|&x| if x < n { ru[x] } else { rv[x - n] }).collect();
                let pos_u0 = labelled.iter().position(|&x| x == 0).expect("u nonempty");
                let pos_v0 = labelled.iter().position(|&x| x == n).expect("v nonempty");
                if pos_u0 < pos_v0 {
                    let w = labelled.iter().map(|&i| labels[i]).collect();
                    out.add_term(w, &Rational::from_integer(koszul_sign(&labelled, &shifted).into()));
                }
            });
        }
    }
    out
}

/// Bilinear extension of [`cyclic_shuffle`].
pub fn cyclic_shuffle_combinations(a: &WordCombination, b: &WordCombination) -> WordCombination {
    let mut out = WordCombination::zero();
    for (u, x) in a.terms() {
        for (v, y) in b.terms() {
            let xy = x * y;
            for (w, c) in cyclic_shuffle(u, v).terms() {
                out.add_term(w.clone(), &(&xy * c));
            }
        }
    }
    out
}

/// Occurrences of `e1, e2, e3` across all letters.
pub fn epsilon_counts(w: &[Letter]) -> [u32; 3] {
    let mut c = [0; 3];
    for l in w {
        for (i, x) in c.iter_mut().enumerate() {
            *x += l.count(i + 1);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::big_int;

    #[test]
    fn letters() {
        assert_eq!(Letter::E123.to_string(), "e123");
        assert_eq!(Letter::UNIT.to_string(), "1");
        assert_eq!(Letter::E1.shifted_parity(), 0);
        assert_eq!(Letter::E12.shifted_parity(), 1);
        assert_eq!(Letter::UNIT.shifted_parity(), 1);
    }

    #[test]
    fn two_single_letters() {
        let s = shuffle(&[Letter::E1], &[Letter::E2]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.coefficient(&[Letter::E1, Letter::E2]), big_int(1));
        assert_eq!(s.coefficient(&[Letter::E2, Letter::E1]), big_int(1));
        assert_eq!(shuffle(&[Letter::E1, Letter::E1], &[Letter::E2]).len(), 3);
    }

    #[test]
    fn odd_letters_anticommute() {
        let s = shuffle(&[Letter::E12], &[Letter::UNIT]);
        assert_eq!(s.coefficient(&[Letter::E12, Letter::UNIT]), big_int(1));
        assert_eq!(s.coefficient(&[Letter::UNIT, Letter::E12]), big_int(-1));
    }

    #[test]
    fn triple_shuffle_has_six_orderings() {
        let s = shuffle_many(&[vec![Letter::E1], vec![Letter::E2], vec![Letter::E3]]);
        assert_eq!(s.len(), 6);
        assert!(s.terms().all(|(_, c)| *c == big_int(1)));
    }

    #[test]
    fn cyclic_shuffle_degenerate_and_small() {
        let u = vec![Letter::E1, Letter::E1];
        assert_eq!(cyclic_shuffle(&u, &[]), WordCombination::word(u.clone()));
        let s = cyclic_shuffle(&[Letter::E1], &[Letter::E2]);
        assert_eq!(s, WordCombination::word(vec![Letter::E1, Letter::E2]));
        // 2 rotations of e1|e1: three labelled terms
        let s = cyclic_shuffle(&u, &[Letter::E2]);
        assert_eq!(s.coefficient(&[Letter::E1, Letter::E1, Letter::E2]), big_int(2));
        assert_eq!(s.coefficient(&[Letter::E1, Letter::E2, Letter::E1]), big_int(1));
    }
}
