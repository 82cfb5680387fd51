//! Invertible polynomials: parsing, exponent matrices, atomic blocks, weights.

pub mod atomic;
pub mod exponent;
pub mod polynomial;

use num_traits::Zero;

pub use atomic::{decompose_atomic, AtomicBlock, AtomicDecomposition, AtomicKind};
pub use exponent::{
    chain_inverse_closed_form, check_invertible, loop_inverse_closed_form, weights, ExponentMatrix,
    WeightSystem,
};
pub use polynomial::{parse_polynomial, Monomial, Polynomial};

use crate::error::{LgError, Result};
use crate::rational::{to_small, SmallRational};

/// Exact inverse of `E`. Chain and loop blocks are additionally evaluated
/// through their closed forms and compared entry by entry with the generic
/// Gauss-Jordan result; any disagreement is an internal error.
pub fn inverse_exponent_matrix(e: &ExponentMatrix) -> Result<Vec<Vec<SmallRational>>> {
    let n = e.dim();
    let generic = e.generic_inverse();
    let mut inv = vec![vec![SmallRational::zero(); n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = to_small(generic.get(i, j))
                .ok_or_else(|| LgError::internal("inverse entry does not fit"))?;
        }
    }
    if n == 0 {
        return Ok(inv);
    }
    let d = decompose_atomic(e)?;
    for b in &d.blocks {
        let closed = match b.kind {
            AtomicKind::Chain => chain_inverse_closed_form(&b.exponents),
            AtomicKind::Loop => loop_inverse_closed_form(&b.exponents),
            AtomicKind::Fermat => continue,
        };
        // E[row m_k][col v_l] = local[k][l], so E^{-1}[v_l][m_k] = local^{-1}[l][k].
        for (l, &v) in b.variables.iter().enumerate() {
            for (k, &m) in b.monomials.iter().enumerate() {
                if inv[v][m] != closed[l][k] {
                    return Err(LgError::internal(format!(
                        "{:?} closed-form inverse disagrees at ({l}, {k}): {} vs {}",
                        b.kind, closed[l][k], inv[v][m]
                    )));
                }
            }
        }
    }
    Ok(inv)
}

pub fn transpose_polynomial(e: &ExponentMatrix) -> ExponentMatrix {
    e.transpose()
}

/// An invertible polynomial together with everything derived from `E_W`.
#[derive(Debug, Clone)]
pub struct InvertiblePolynomial {
    pub polynomial: Polynomial,
    pub exponents: ExponentMatrix,
    pub decomposition: AtomicDecomposition,
    pub weights: WeightSystem,
    /// `inverse[i][j] = (E^{-1})_{ij}`; rows are indexed by variables.
    pub inverse: Vec<Vec<SmallRational>>,
}

impl InvertiblePolynomial {
    pub fn new(polynomial: Polynomial) -> Result<Self> {
        let exponents = check_invertible(&polynomial)?;
        let decomposition = decompose_atomic(&exponents)?;
        let weights = if exponents.dim() == 0 {
            WeightSystem {
                weights: Vec::new(),
                central_charge: SmallRational::zero(),
            }
        } else {
            weights(&exponents)?
        };
        let inverse = inverse_exponent_matrix(&exponents)?;
        Ok(InvertiblePolynomial {
            polynomial,
            exponents,
            decomposition,
            weights,
            inverse,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_polynomial(text)?)
    }

    pub fn dim(&self) -> usize {
        self.exponents.dim()
    }

    /// `mu = prod (1/q_j - 1)`; an internal error if it is not a positive integer.
    pub fn milnor_number(&self) -> Result<usize> {
        let mu = self.weights.milnor_number();
        if !mu.is_integer() || *mu.numer() < 1 {
            return Err(LgError::internal(format!("Milnor number {mu} is not a positive integer")));
        }
        Ok(*mu.numer() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::small;

    #[test]
    fn chain_and_loop_inverses_match_closed_forms() {
        let p = InvertiblePolynomial::parse("x1^3 + x1*x2^3").unwrap();
        assert_eq!(
            p.inverse,
            vec![vec![small(1, 3), small(0, 1)], vec![small(-1, 9), small(1, 3)]]
        );
        let p = InvertiblePolynomial::parse("x1^2*x2 + x2^2*x1").unwrap();
        assert_eq!(
            p.inverse,
            vec![vec![small(2, 3), small(-1, 3)], vec![small(-1, 3), small(2, 3)]]
        );
    }

    #[test]
    fn permuted_chain_still_agrees() {
        // chain x3 -> x1 -> x2 scattered over the variables, monomials in lex order
        let p = InvertiblePolynomial::parse("x3^2 + x3*x1^3 + x1*x2^2").unwrap();
        assert_eq!(p.decomposition.blocks[0].variables, vec![2, 0, 1]);
        // q = (1/6, 5/12, 1/2), mu = 5 * 7/5 * 1
        assert_eq!(p.milnor_number().unwrap(), 7);
    }

    #[test]
    fn fermat_inverse_is_diagonal() {
        let p = InvertiblePolynomial::parse("x1^5+x2^5+x3^5+x4^5+x5^5").unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(p.inverse[i][j], if i == j { small(1, 5) } else { small(0, 1) });
            }
        }
    }

    #[test]
    fn empty_polynomial_is_trivially_invertible() {
        let p = InvertiblePolynomial::new(Polynomial::empty()).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.milnor_number().unwrap(), 1);
    }
}
