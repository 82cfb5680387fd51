//! Chain-level splitting for the Fermat cubic `(1/3)(x1^3 + x2^3 + x3^3)`
//! and its flat extension along the marginal deformation `t x1 x2 x3`.

pub mod catalog;
pub mod words;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::series::FormalPowerSeries;
pub use catalog::{a_action, a_action_word, CatalogWord, ChainCombination};
use words::{cyclic_shuffle_combinations, power, shuffle_combinations, shuffle_many, Letter, WordCombination};
pub use words::{cyclic_shuffle, shuffle};

/// Which basis class the splitting is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingClass {
    /// `s([e123])`.
    S0,
    /// `s([e123 | sh(e1, e2, e3)])`.
    Omega,
}

/// `prod_{l=1}^{n} (3l - shift)`: `d_n` for shift 2, `c_n` for shift 1.
fn coefficient_product(n: u32, shift: i64) -> BigInt {
    (1..=i64::from(n)).fold(BigInt::one(), |acc, l| acc * BigInt::from(3 * l - shift))
}

/// Index offset and coefficient shift of each class.
fn class_data(class: SplittingClass) -> (u32, i64) {
    match class {
        SplittingClass::S0 => (0, 2),
        SplittingClass::Omega => (1, 1),
    }
}

/// The three families of the splitting with `u` exponent at most `u_order`.
///
/// The cyclic-shuffle families are stored through the identities
/// `e3|sh(sh^c(e1^a, e2^b), e3^c) = PairHead3(a-1, b-1, c)` and
/// `1|sh^c(e12|sh(e1^a, e2^b), e3^c) = UnitPair(a, b, c-1)`.
pub fn canonical_splitting(class: SplittingClass, u_order: u32) -> ChainCombination {
    let (off, shift) = class_data(class);
    let mut out = ChainCombination::zero();
    for i in 0..=u_order {
        for j in 0..=u_order - i {
            for k in 0..=u_order - i - j {
                let n = i + j + k;
                let prod = coefficient_product(i, shift) * coefficient_product(j, shift) * coefficient_product(k, shift);
                let c = Rational::from_integer(if n % 2 == 0 { prod } else { -prod });
                let (a, b, e) = (3 * i + off, 3 * j + off, 3 * k + off);
                out.add_term(CatalogWord::Top { i: a, j: b, k: e }, n as i32, &c);
                if n < u_order {
                    out.add_term(CatalogWord::PairHead3 { i: a, j: b, k: e }, n as i32 + 1, &-&c);
                    out.add_term(CatalogWord::UnitPair { i: a, j: b, k: e }, n as i32 + 1, &c);
                }
            }
        }
    }
    out
}

/// The splitting at one `u` power, expanded into words straight from the
/// cyclic-shuffle formulas (no catalog identities involved).
pub fn splitting_words_from_formula(class: SplittingClass, u: u32) -> WordCombination {
    let (off, shift) = class_data(class);
    let off = off as usize;
    let mut out = WordCombination::zero();
    for i in 0..=u {
        for j in 0..=u - i {
            for k in 0..=u - i - j {
                let n = i + j + k;
                let prod = coefficient_product(i, shift) * coefficient_product(j, shift) * coefficient_product(k, shift);
                let c = Rational::from_integer(if n % 2 == 0 { prod } else { -prod });
                let (a, b, e) = (3 * i as usize + off, 3 * j as usize + off, 3 * k as usize + off);
                if n == u {
                    let top = shuffle_many(&[power(Letter::E1, a), power(Letter::E2, b), power(Letter::E3, e)]);
                    out = out.add(&top.prepend(Letter::E123).scale(&c));
                }
                if n + 1 == u {
                    let e1 = WordCombination::word(power(Letter::E1, a + 1));
                    let e2 = WordCombination::word(power(Letter::E2, b + 1));
                    let e3 = WordCombination::word(power(Letter::E3, e));
                    let second = shuffle_combinations(&cyclic_shuffle_combinations(&e1, &e2), &e3);
                    out = out.add(&second.prepend(Letter::E3).scale(&-&c));

                    let inner = shuffle_many(&[power(Letter::E1, a), power(Letter::E2, b)]).prepend(Letter::E12);
                    let e3 = WordCombination::word(power(Letter::E3, e + 1));
                    let third = cyclic_shuffle_combinations(&inner, &e3);
                    out = out.add(&third.prepend(Letter::UNIT).scale(&c));
                }
            }
        }
    }
    out
}

/// All words carry the same `(Z/3)^3` character, i.e. their `e_i` counts
/// agree mod 3.
pub fn equivariance_check(c: &ChainCombination) -> bool {
    let mut reference: Option<[u32; 3]> = None;
    for ((w, _), _) in c.terms() {
        let counts = w.epsilon_counts().map(|x| x % 3);
        match reference {
            None => reference = Some(counts),
            Some(r) if r != counts => return false,
            Some(_) => {}
        }
    }
    true
}

/// Same check on explicit words.
pub fn words_equivariant(c: &WordCombination) -> bool {
    let mut it = c.terms().map(|(w, _)| words::epsilon_counts(w).map(|x| x % 3));
    match it.next() {
        None => true,
        Some(first) => it.all(|x| x == first),
    }
}

/// `e^{tA/u}` applied to the splitting, projected to `e123` at `u^0` (for
/// `S0`) or `u^{-1}` (for `Omega`), to order `t^{t_order}`.
pub fn flat_extension(class: SplittingClass, t_order: u32) -> FormalPowerSeries {
    let target_u = match class {
        SplittingClass::S0 => 0,
        SplittingClass::Omega => -1,
    };
    let top = CatalogWord::Top { i: 0, j: 0, k: 0 };
    let mut current = canonical_splitting(class, t_order + 1);
    let mut coeffs = Vec::with_capacity(t_order as usize + 1);
    let mut factorial = BigInt::one();
    for n in 0..=t_order {
        if n > 0 {
            factorial *= BigInt::from(n);
            current = a_action(&current);
        }
        // t^n/n! u^{-n} A^n s lands on u^{target} from the u^{target + n} part
        let c = current.coefficient(top, target_u + n as i32);
        coeffs.push(if c.is_zero() {
            Rational::zero()
        } else {
            c / Rational::from_integer(factorial.clone())
        });
    }
    FormalPowerSeries::new(coeffs, t_order as usize)
}
