//! Graded monomial bases of Jacobian rings and group characters on them.

pub mod quintic;

use num_traits::Zero;

use crate::error::{LgError, Result};
use crate::poly::{AtomicBlock, AtomicDecomposition, AtomicKind, Monomial, WeightSystem};
use crate::rational::{mod_one, SmallRational};
use crate::symmetry::PhaseVector;

pub use quintic::{FamilyElement, QuinticFamily};

/// Monomial basis `{x^r dx}` of `Jac(W) dx` with exact degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMonomialBasis {
    pub ambient: AtomicDecomposition,
    /// Sorted by monomial; `degree = c_W - 2 q.r`.
    pub elements: Vec<(Monomial, SmallRational)>,
    pub weight_system: WeightSystem,
}

impl GradedMonomialBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|(m, _)| m)
    }
}

/// Per-block basis in block-local coordinates.
pub fn block_basis(kind: AtomicKind, a: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut r = vec![0u32; a.len()];
    loop {
        if kind == AtomicKind::Loop || !chain_excluded(a, &r) {
            out.push(r.clone());
        }
        // odometer over the box 0 <= r_k <= a_k - 1
        let mut k = a.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if r[k] + 1 < a[k] {
                r[k] += 1;
                break;
            }
            r[k] = 0;
        }
    }
}

/// Chain exclusion (head first, 1-based positions): some `l >= 0` has
/// `r_p = a_p - 1` at `p = N-2l, N-2l+2, .., N`, `r_p = 0` in between, and
/// either `N - 2l = 1` or `r_{N-2l-1} >= 1`. A Fermat block is the case `N = 1`.
pub fn chain_excluded(a: &[u32], r: &[u32]) -> bool {
    let n = a.len();
    // 0-based: start = n - 1 - 2l
    let mut start = n as isize - 1;
    while start >= 0 {
        let s = start as usize;
        let tail_ok = (s..n).all(|p| {
            if (n - 1 - p).is_multiple_of(2) {
                r[p] + 1 == a[p]
            } else {
                r[p] == 0
            }
        });
        if !tail_ok {
            // a longer tail contains this one
            return false;
        }
        if s == 0 || r[s - 1] >= 1 {
            return true;
        }
        start -= 2;
    }
    false
}

/// Tensor product of the block bases, mapped back to original variables.
pub fn milnor_basis(d: &AtomicDecomposition, w: &WeightSystem) -> Result<GradedMonomialBasis> {
    let n = d.dim();
    if w.dim() != n {
        return Err(LgError::DimensionMismatch {
            expected: n,
            got: w.dim(),
        });
    }
    let mut monomials: Vec<Vec<u32>> = vec![vec![0; n]];
    for b in &d.blocks {
        let local = block_basis(b.kind, &b.exponents);
        monomials = tensor(&monomials, b, &local);
    }
    if n == 0 {
        monomials = vec![Vec::new()];
    }
    let mu = w.milnor_number();
    if SmallRational::from(monomials.len() as i64) != mu {
        return Err(LgError::internal(format!(
            "basis has {} elements but mu = {mu}",
            monomials.len()
        )));
    }
    let mut elements = monomials
        .into_iter()
        .map(|r| {
            let m = Monomial(r);
            let deg = degree_of(&m, w)?;
            Ok((m, deg))
        })
        .collect::<Result<Vec<_>>>()?;
    elements.sort();
    Ok(GradedMonomialBasis {
        ambient: d.clone(),
        elements,
        weight_system: w.clone(),
    })
}

fn tensor(partial: &[Vec<u32>], b: &AtomicBlock, local: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(partial.len() * local.len());
    for p in partial {
        for l in local {
            let mut r = p.clone();
            for (k, &v) in b.variables.iter().enumerate() {
                r[v] = l[k];
            }
            out.push(r);
        }
    }
    out
}

/// `deg(x^r dx) = c_W - 2 q.r`.
pub fn degree_of(r: &Monomial, w: &WeightSystem) -> Result<SmallRational> {
    if r.len() != w.dim() {
        return Err(LgError::DimensionMismatch {
            expected: w.dim(),
            got: r.len(),
        });
    }
    let qr: SmallRational = w.weights.iter().zip(&r.0).map(|(q, &e)| q * i64::from(e)).sum();
    Ok(w.central_charge - qr * 2)
}

/// Phase of `g` on `x^r dx`: `sum theta_i (r_i + 1) mod 1`.
pub fn character(g: &PhaseVector, r: &Monomial) -> Result<SmallRational> {
    if r.len() != g.dim() {
        return Err(LgError::DimensionMismatch {
            expected: g.dim(),
            got: r.len(),
        });
    }
    let s = g
        .phases()
        .iter()
        .zip(&r.0)
        .fold(SmallRational::zero(), |acc, (t, &e)| acc + t * (i64::from(e) + 1));
    Ok(mod_one(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::InvertiblePolynomial;
    use crate::rational::small;

    fn basis(text: &str) -> GradedMonomialBasis {
        let p = InvertiblePolynomial::parse(text).unwrap();
        milnor_basis(&p.decomposition, &p.weights).unwrap()
    }

    #[test]
    fn fermat_basis_and_degrees() {
        let b = basis("x1^5");
        let ms: Vec<_> = b.monomials().map(|m| m.0[0]).collect();
        assert_eq!(ms, vec![0, 1, 2, 3]);
        for (m, d) in &b.elements {
            let k = i64::from(m.0[0]);
            assert_eq!(*d, small(5 - 2 * k - 2, 5));
        }
    }

    #[test]
    fn chain_three_three_excludes_two_monomials() {
        let b = basis("x1^3 + x1*x2^3");
        assert_eq!(b.len(), 7);
        let ms: Vec<_> = b.monomials().map(|m| m.0.clone()).collect();
        assert!(!ms.contains(&vec![1, 2]));
        assert!(!ms.contains(&vec![2, 2]));
        assert!(ms.contains(&vec![0, 2]));
    }

    #[test]
    fn chain_two_two_two() {
        assert!(chain_excluded(&[2, 2, 2], &[1, 0, 1]));
        assert!(chain_excluded(&[2, 2, 2], &[0, 1, 1]));
        assert!(!chain_excluded(&[2, 2, 2], &[0, 0, 1]));
        assert_eq!(basis("x1^2 + x1*x2^2 + x2*x3^2").len(), 5);
    }

    #[test]
    fn loop_is_full_box() {
        let b = basis("x1^2*x2 + x2^2*x1");
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn quintic_diagonal_degrees() {
        let b = basis("x1^5+x2^5+x3^5+x4^5+x5^5");
        assert_eq!(b.len(), 1024);
        for i in 0..4u32 {
            let d = degree_of(&Monomial(vec![i; 5]), &b.weight_system).unwrap();
            assert_eq!(d, SmallRational::from(3 - 2 * i64::from(i)));
        }
    }

    #[test]
    fn characters() {
        let g = PhaseVector::new(vec![small(1, 5)]);
        for k in 0..4 {
            assert_eq!(character(&g, &Monomial(vec![k])).unwrap(), mod_one(small(i64::from(k) + 1, 5)));
        }
        let j = PhaseVector::new(vec![small(1, 5); 5]);
        for i in 0..4 {
            assert!(character(&j, &Monomial(vec![i; 5])).unwrap().is_zero());
        }
        assert!(character(&j, &Monomial(vec![0; 3])).is_err());
    }

    #[test]
    fn empty_polynomial_has_one_class() {
        let p = InvertiblePolynomial::new(crate::poly::Polynomial::empty()).unwrap();
        let b = milnor_basis(&p.decomposition, &p.weights).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.elements[0].1, SmallRational::zero());
    }
}
