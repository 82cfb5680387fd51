//! Normal forms and residues for `W_psi = (1/5) sum x_i^5 - psi x1 x2 x3 x4 x5`.
//!
//! The Jacobian ideal is spanned by the binomials
//! `x^a d_j W = x^{a + 4 e_j} - psi x^{a + 1 - e_j}`, which preserve both the
//! total degree and the residues `(r_i - r_1) mod 5`. Each such class of
//! monomials is reduced independently against the box `{0..3}^5`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::error::{LgError, Result};
use crate::poly::Monomial;
use crate::ratfunc::{RationalFunction, UniPoly};
use crate::rational::{big_int, Rational};

pub const QUINTIC_VARS: usize = 5;
/// Total degree of the socle monomial `(x1...x5)^3`.
pub const SOCLE_DEGREE: u32 = 15;
pub const DEFAULT_MAX_DEGREE: u32 = 20;
const MILNOR_NUMBER: i64 = 1024;

/// A polynomial in `x1..x5` with coefficients in `Q(psi)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyElement {
    coefficients: BTreeMap<Monomial, RationalFunction>,
}

impl FamilyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(r: [u32; QUINTIC_VARS], c: RationalFunction) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial(r.to_vec()), &c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, RationalFunction)>) -> Result<Self> {
        let mut e = Self::zero();
        for (m, c) in terms {
            if m.len() != QUINTIC_VARS {
                return Err(LgError::DimensionMismatch {
                    expected: QUINTIC_VARS,
                    got: m.len(),
                });
            }
            e.add_term(m, &c);
        }
        Ok(e)
    }

    /// `(x1 x2 x3 x4 x5)^k`.
    pub fn power_of_product(k: u32) -> Self {
        Self::monomial([k; QUINTIC_VARS], RationalFunction::one())
    }

    fn add_term(&mut self, m: Monomial, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coefficients.get(&m) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coefficients.remove(&m);
        } else {
            self.coefficients.insert(m, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RationalFunction)> {
        self.coefficients.iter()
    }

    pub fn coefficient(&self, r: &[u32]) -> RationalFunction {
        self.coefficients
            .get(&Monomial(r.to_vec()))
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn add(&self, o: &FamilyElement) -> FamilyElement {
        let mut out = self.clone();
        for (m, c) in &o.coefficients {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> FamilyElement {
        let mut out = FamilyElement::zero();
        for (m, x) in &self.coefficients {
            out.add_term(m.clone(), &(x * c));
        }
        out
    }

    pub fn mul(&self, o: &FamilyElement) -> FamilyElement {
        let mut out = FamilyElement::zero();
        for (m, a) in &self.coefficients {
            for (n, b) in &o.coefficients {
                out.add_term(m.mul(n), &(a * b));
            }
        }
        out
    }

    /// The common total degree, `NotHomogeneous` if there is none, `None` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut it = self.coefficients.keys();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let d = first.total_degree();
        for m in it {
            if m.total_degree() != d {
                return Err(LgError::NotHomogeneous {
                    first: d,
                    second: m.total_degree(),
                });
            }
        }
        Ok(Some(d))
    }

    /// Every coefficient evaluated at `psi = x`; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<BTreeMap<Monomial, Rational>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.coefficients {
            let v = c.eval(x)?;
            if v != Rational::from_integer(0.into()) {
                out.insert(m.clone(), v);
            }
        }
        Some(out)
    }
}

impl fmt::Display for FamilyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

fn psi_times(c: i64) -> RationalFunction {
    RationalFunction::from_poly(UniPoly::monomial(big_int(c), 1))
}

/// `x^alpha d_j W_psi`.
pub fn jacobian_multiple(alpha: [u32; QUINTIC_VARS], j: usize) -> FamilyElement {
    let mut a = alpha;
    a[j] += 4;
    let mut b = alpha;
    for (k, e) in b.iter_mut().enumerate() {
        if k != j {
            *e += 1;
        }
    }
    FamilyElement::monomial(a, RationalFunction::one()).add(&FamilyElement::monomial(b, psi_times(-1)))
}

/// Hessian determinant of `W_psi`, expanded over all 120 permutations.
pub fn hessian() -> FamilyElement {
    let mut out = FamilyElement::zero();
    let mut perm: Vec<usize> = (0..QUINTIC_VARS).collect();
    permutations(&mut perm, 0, &mut |p| {
        let sign = permutation_sign(p);
        let mut r = [0u32; QUINTIC_VARS];
        let mut fixed = 0u32;
        let mut moved = 0usize;
        for (i, &j) in p.iter().enumerate() {
            if i == j {
                r[i] += 3;
                fixed += 1;
            } else {
                moved += 1;
                for (k, e) in r.iter_mut().enumerate() {
                    if k != i && k != j {
                        *e += 1;
                    }
                }
            }
        }
        // 4^fixed (-psi)^moved
        let c = big_int(sign * 4i64.pow(fixed) * if moved.is_multiple_of(2) { 1 } else { -1 });
        out.add_term(
            Monomial(r.to_vec()),
            &RationalFunction::from_poly(UniPoly::monomial(c, moved)),
        );
    });
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn in_box(r: &[u32]) -> bool {
    r.iter().all(|&e| e <= 3)
}

type BlockKey = (u32, [u32; 4]);

fn block_key(r: &[u32]) -> BlockKey {
    let d = r.iter().sum();
    let mut diffs = [0; 4];
    for i in 1..QUINTIC_VARS {
        diffs[i - 1] = (r[i] + 5 - r[0] % 5) % 5;
    }
    (d, diffs)
}

/// Box expansion of every non-box monomial in one class.
#[derive(Debug)]
struct BlockReduction {
    nf: HashMap<Vec<u32>, Vec<(Vec<u32>, RationalFunction)>>,
}

fn block_monomials(key: &BlockKey) -> Vec<Vec<u32>> {
    let (d, diffs) = *key;
    let mut out = Vec::new();
    for r0 in 0..=d {
        let mut r = vec![r0];
        fill(&mut r, d - r0, &diffs, &mut out);
    }
    out
}

fn fill(r: &mut Vec<u32>, left: u32, diffs: &[u32; 4], out: &mut Vec<Vec<u32>>) {
    let i = r.len();
    if i == QUINTIC_VARS {
        if left == 0 {
            out.push(r.clone());
        }
        return;
    }
    let residue = (r[0] + diffs[i - 1]) % 5;
    let mut e = residue;
    while e <= left {
        r.push(e);
        fill(r, left - e, diffs, out);
        r.pop();
        e += 5;
    }
}

type Row = BTreeMap<usize, RationalFunction>;

fn reduce_block(key: &BlockKey) -> Result<BlockReduction> {
    let mut monomials = block_monomials(key);
    // non-box columns first, the most reducible ones leading
    monomials.sort_by(|a, b| {
        let ka = (in_box(a), std::cmp::Reverse(*a.iter().max().unwrap_or(&0)), a.clone());
        let kb = (in_box(b), std::cmp::Reverse(*b.iter().max().unwrap_or(&0)), b.clone());
        ka.cmp(&kb)
    });
    let index: HashMap<Vec<u32>, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let non_box = monomials.iter().filter(|m| !in_box(m)).count();

    let mut pivots: HashMap<usize, Row> = HashMap::new();
    for m in monomials.iter().take(non_box) {
        for j in 0..QUINTIC_VARS {
            if m[j] < 4 {
                continue;
            }
            let mut partner = m.clone();
            for (k, e) in partner.iter_mut().enumerate() {
                if k == j {
                    *e -= 4;
                } else {
                    *e += 1;
                }
            }
            let mut row = Row::new();
            row.insert(index[m], RationalFunction::one());
            let p = *index
                .get(&partner)
                .ok_or_else(|| LgError::internal("relation leaves its class"))?;
            row.insert(p, psi_times(-1));
            insert_row(&mut pivots, row, non_box)?;
        }
    }
    if pivots.len() != non_box {
        return Err(LgError::internal(format!(
            "class {key:?}: {} of {non_box} non-box monomials reducible",
            pivots.len()
        )));
    }

    // back substitution, highest column first
    let mut solved: HashMap<usize, Vec<(usize, RationalFunction)>> = HashMap::new();
    for c in (0..non_box).rev() {
        let row = &pivots[&c];
        let mut acc: BTreeMap<usize, RationalFunction> = BTreeMap::new();
        for (&col, coef) in row.range(c + 1..) {
            let neg = -coef;
            if col >= non_box {
                accumulate(&mut acc, col, &neg);
            } else {
                for (b, x) in &solved[&col] {
                    accumulate(&mut acc, *b, &(&neg * x));
                }
            }
        }
        solved.insert(c, acc.into_iter().collect());
    }
    let nf = solved
        .into_iter()
        .map(|(c, combo)| {
            let combo = combo.into_iter().map(|(b, x)| (monomials[b].clone(), x)).collect();
            (monomials[c].clone(), combo)
        })
        .collect();
    Ok(BlockReduction { nf })
}

fn accumulate(acc: &mut BTreeMap<usize, RationalFunction>, col: usize, x: &RationalFunction) {
    let sum = match acc.get(&col) {
        Some(old) => old + x,
        None => x.clone(),
    };
    if sum.is_zero() {
        acc.remove(&col);
    } else {
        acc.insert(col, sum);
    }
}

/// Reduces `row` against the pivots and stores it if it brings a new one.
fn insert_row(pivots: &mut HashMap<usize, Row>, mut row: Row, non_box: usize) -> Result<()> {
    loop {
        let Some((&lead, lead_coef)) = row.iter().next() else {
            return Ok(());
        };
        let lead_coef = lead_coef.clone();
        match pivots.get(&lead) {
            Some(p) => {
                for (&col, x) in p {
                    accumulate(&mut row, col, &-&(&lead_coef * x));
                }
            }
            None => {
                if lead >= non_box {
                    return Err(LgError::internal("box monomials are dependent modulo the Jacobian ideal"));
                }
                let inv = lead_coef.recip();
                let normalized = row.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
                pivots.insert(lead, normalized);
                return Ok(());
            }
        }
    }
}

/// The quintic family with a memo of per-class reductions.
#[derive(Debug)]
pub struct QuinticFamily {
    max_degree: u32,
    memo: Mutex<HashMap<BlockKey, Arc<BlockReduction>>>,
    hessian_socle: OnceLock<RationalFunction>,
}

impl Default for QuinticFamily {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_DEGREE)
    }
}

impl QuinticFamily {
    pub fn new(max_degree: u32) -> Self {
        QuinticFamily {
            max_degree,
            memo: Mutex::new(HashMap::new()),
            hessian_socle: OnceLock::new(),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn reduction(&self, key: BlockKey) -> Result<Arc<BlockReduction>> {
        if let Some(r) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(r.clone());
        }
        // computed outside the lock; a racing duplicate is identical
        let r = Arc::new(reduce_block(&key)?);
        self.memo.lock().expect("memo poisoned").entry(key).or_insert(r.clone());
        Ok(r)
    }

    /// Box representative of `f` modulo the Jacobian ideal of `W_psi`.
    pub fn normal_form(&self, f: &FamilyElement) -> Result<FamilyElement> {
        let Some(d) = f.homogeneous_degree()? else {
            return Ok(FamilyElement::zero());
        };
        if d > self.max_degree {
            return Err(LgError::DegreeTooLarge {
                degree: d,
                bound: self.max_degree,
            });
        }
        let mut out = FamilyElement::zero();
        for (m, c) in f.terms() {
            if in_box(&m.0) {
                out.add_term(m.clone(), c);
                continue;
            }
            let red = self.reduction(block_key(&m.0))?;
            for (b, x) in &red.nf[&m.0] {
                out.add_term(Monomial(b.clone()), &(c * x));
            }
        }
        Ok(out)
    }

    /// Coefficient of `(x1...x5)^3` in the normal form of `Hess W_psi`.
    pub fn hessian_socle(&self) -> Result<RationalFunction> {
        if let Some(l) = self.hessian_socle.get() {
            return Ok(l.clone());
        }
        let nf = self.normal_form(&hessian())?;
        let l = nf.coefficient(&[3; QUINTIC_VARS]);
        if l.is_zero() {
            return Err(LgError::internal("Hessian has zero socle component"));
        }
        Ok(self.hessian_socle.get_or_init(|| l).clone())
    }

    /// Residue normalized by `Res(Hess) = mu = 1024`; zero off degree 15.
    pub fn residue(&self, f: &FamilyElement) -> Result<RationalFunction> {
        match f.homogeneous_degree()? {
            Some(SOCLE_DEGREE) => {}
            Some(d) if d > self.max_degree => {
                return Err(LgError::DegreeTooLarge {
                    degree: d,
                    bound: self.max_degree,
                })
            }
            _ => return Ok(RationalFunction::zero()),
        }
        let socle = self.normal_form(f)?.coefficient(&[3; QUINTIC_VARS]);
        let lambda = self.hessian_socle()?;
        let mu = RationalFunction::constant(big_int(MILNOR_NUMBER));
        Ok(&(&mu * &socle) * &lambda.recip())
    }

    /// `C(psi) = Res((x1...x5)^3)`, the Yukawa coupling in the `psi` frame.
    pub fn yukawa(&self) -> Result<RationalFunction> {
        self.residue(&FamilyElement::power_of_product(3))
    }
}

/// `true` when every denominator in `f` is a power of `(1 - psi^5)`.
pub fn poles_only_at_fifth_roots(f: &FamilyElement) -> bool {
    f.terms().all(|(_, c)| c.pole_order_at_fifth_roots().is_some())
}

pub fn one() -> RationalFunction {
    RationalFunction::constant(Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::big;

    #[test]
    fn first_partial_reduces_to_psi_times_product() {
        let fam = QuinticFamily::default();
        let f = FamilyElement::monomial([4, 0, 0, 0, 0], one());
        let nf = fam.normal_form(&f).unwrap();
        assert_eq!(nf, FamilyElement::monomial([0, 1, 1, 1, 1], psi_times(1)));
    }

    #[test]
    fn hessian_at_zero_is_diagonal() {
        let h = hessian();
        let at0 = h.eval(&big_int(0)).unwrap();
        assert_eq!(at0.len(), 1);
        assert_eq!(at0[&Monomial(vec![3; 5])], big_int(1024));
        assert_eq!(h.homogeneous_degree().unwrap(), Some(15));
    }

    #[test]
    fn fourth_power_of_product_vanishes() {
        let fam = QuinticFamily::default();
        let nf = fam.normal_form(&FamilyElement::power_of_product(4)).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn residues() {
        let fam = QuinticFamily::default();
        assert_eq!(fam.residue(&hessian()).unwrap(), RationalFunction::constant(big_int(1024)));
        let c = fam.yukawa().unwrap();
        assert_eq!(c.eval(&big_int(0)), Some(big_int(1)));
        assert!(fam.residue(&FamilyElement::power_of_product(2)).unwrap().is_zero());
        assert!(c.pole_order_at_fifth_roots().is_some());
        assert!(c.eval(&big(1, 2)).is_some());
    }

    #[test]
    fn rejects_bad_input() {
        let fam = QuinticFamily::new(20);
        let f = FamilyElement::monomial([21, 0, 0, 0, 0], one());
        assert!(matches!(fam.normal_form(&f), Err(LgError::DegreeTooLarge { .. })));
        let g = FamilyElement::monomial([1, 0, 0, 0, 0], one()).add(&FamilyElement::monomial([2, 0, 0, 0, 0], one()));
        assert!(matches!(fam.normal_form(&g), Err(LgError::NotHomogeneous { .. })));
    }

    #[test]
    fn jacobian_multiples_vanish() {
        let fam = QuinticFamily::default();
        for (alpha, j) in [([0, 0, 0, 0, 0], 0), ([1, 2, 0, 3, 1], 2), ([3, 3, 3, 3, 2], 4)] {
            assert!(fam.normal_form(&jacobian_multiple(alpha, j)).unwrap().is_zero());
        }
    }
}
