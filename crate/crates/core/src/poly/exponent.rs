use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::polynomial::Polynomial;
use crate::error::{LgError, Result};
use crate::rational::{integer_determinant, to_small, DenseMatrix, SmallRational};

/// Determinants above this bound are refused; group phases and degrees are
/// carried in machine-word rationals with denominators dividing `|det|`.
const MAX_DETERMINANT: i64 = 1 << 31;

/// Square matrix of exponents; row `i` is the exponent vector of the `i`-th
/// monomial of `W` (in the polynomial's canonical term order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentMatrix {
    rows: Vec<Vec<u32>>,
}

impl ExponentMatrix {
    /// Wraps a square matrix; fails on non-square input or zero determinant.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(LgError::NotSquare {
                terms: n,
                variables: bad.len(),
            });
        }
        let m = ExponentMatrix { rows };
        let det = m.determinant();
        if det.is_zero() {
            return Err(LgError::SingularExponentMatrix);
        }
        if det.abs() > BigInt::from(MAX_DETERMINANT) {
            return Err(LgError::TooLarge {
                det: det.to_string(),
            });
        }
        Ok(m)
    }

    /// The empty matrix of the zero-variable polynomial.
    pub fn empty() -> Self {
        ExponentMatrix { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    fn signed_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&e| i64::from(e)).collect())
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        integer_determinant(&self.signed_rows())
    }

    /// `|det E|`, which is also the order of the maximal diagonal symmetry group.
    pub fn abs_determinant(&self) -> i64 {
        self.determinant()
            .abs()
            .to_i64()
            .expect("determinant bounded at construction")
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_integer_rows(&self.signed_rows())
    }

    /// Exponent matrix of the transposed polynomial `W^t`.
    pub fn transpose(&self) -> ExponentMatrix {
        let n = self.dim();
        ExponentMatrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }

    /// Integer adjugate `adj(E) = det(E) E^{-1}`, used by hot loops that test
    /// integrality of `v E^{-1}` without rational arithmetic.
    pub fn adjugate(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let inv = self.generic_inverse();
        let det = self.determinant();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = inv.get(i, j) * num_rational::BigRational::from_integer(det.clone());
                        debug_assert!(v.is_integer());
                        v.to_integer().to_i64().expect("adjugate entries are small")
                    })
                    .collect()
            })
            .collect()
    }

    pub(crate) fn generic_inverse(&self) -> DenseMatrix {
        if self.dim() == 0 {
            return DenseMatrix::zeros(0, 0);
        }
        self.to_dense()
            .inverse()
            .expect("nonsingular at construction")
    }
}

/// Reads the exponent matrix off an invertible candidate.
pub fn exponent_matrix(p: &Polynomial) -> Result<ExponentMatrix> {
    let n = p.variable_count();
    if p.terms().len() != n {
        return Err(LgError::NotSquare {
            terms: p.terms().len(),
            variables: n,
        });
    }
    ExponentMatrix::new(p.terms().iter().map(|(_, m)| m.0.clone()).collect())
}

/// Rational weights `q` with `E q = (1,...,1)^t` and the central charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub weights: Vec<SmallRational>,
    pub central_charge: SmallRational,
}

impl WeightSystem {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Milnor number `prod (1/q_j - 1)`, as an exact rational.
    pub fn milnor_number(&self) -> SmallRational {
        self.weights
            .iter()
            .map(|q| q.recip() - SmallRational::one())
            .product()
    }
}

/// Solves `E q = 1` and checks `q_j` in `(0, 1/2]`.
pub fn weights(e: &ExponentMatrix) -> Result<WeightSystem> {
    let n = e.dim();
    let inv = e.generic_inverse();
    let half = SmallRational::new(1, 2);
    let mut ws = Vec::with_capacity(n);
    for i in 0..n {
        let q: num_rational::BigRational = (0..n).map(|j| inv.get(i, j).clone()).sum();
        let q = to_small(&q).ok_or_else(|| LgError::internal("weight does not fit"))?;
        if q <= SmallRational::zero() || q > half {
            return Err(LgError::WeightOutOfRange {
                index: i + 1,
                weight: q.to_string(),
            });
        }
        ws.push(q);
    }
    let central_charge = ws
        .iter()
        .map(|q| SmallRational::one() - q * 2)
        .sum();
    Ok(WeightSystem {
        weights: ws,
        central_charge,
    })
}

/// Full invertibility check: square, nonsingular, weights in `(0, 1/2]`.
pub fn check_invertible(p: &Polynomial) -> Result<ExponentMatrix> {
    if p.variable_count() == 0 {
        return if p.is_zero() {
            Ok(ExponentMatrix::empty())
        } else {
            Err(LgError::NotSquare {
                terms: p.terms().len(),
                variables: 0,
            })
        };
    }
    let e = exponent_matrix(p)?;
    weights(&e)?;
    Ok(e)
}

/// Closed form of the inverse of a chain block
/// `x_1^{a_1} + x_1 x_2^{a_2} + ... + x_{k-1} x_k^{a_k}`:
/// entry `(i, j)` is `(-1)^{i+j} / (a_j ... a_i)` for `i >= j`, zero above.
pub fn chain_inverse_closed_form(a: &[u32]) -> Vec<Vec<SmallRational>> {
    let k = a.len();
    let mut out = vec![vec![SmallRational::zero(); k]; k];
    for i in 0..k {
        for j in 0..=i {
            let prod: i64 = a[j..=i].iter().map(|&x| i64::from(x)).product();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            out[i][j] = SmallRational::new(sign, prod);
        }
    }
    out
}

/// Determinant `prod a_k - (-1)^k` of a loop block.
pub fn loop_determinant(a: &[u32]) -> i64 {
    let prod: i64 = a.iter().map(|&x| i64::from(x)).product();
    if a.len().is_multiple_of(2) {
        prod - 1
    } else {
        prod + 1
    }
}

/// Closed form of the inverse of a loop block
/// `x_1^{a_1} x_k + x_1 x_2^{a_2} + ... + x_{k-1} x_k^{a_k}` (empty products are 1).
pub fn loop_inverse_closed_form(a: &[u32]) -> Vec<Vec<SmallRational>> {
    let k = a.len();
    let d = loop_determinant(a);
    let prod = |lo: usize, hi: usize| -> i64 {
        // product of a_l for 1-based l in lo..=hi
        (lo..=hi).map(|l| i64::from(a[l - 1])).product()
    };
    let mut out = vec![vec![SmallRational::zero(); k]; k];
    for i in 1..=k {
        for j in 1..=k {
            let value = if i < j {
                let sign = if (k + i + j).is_multiple_of(2) { 1 } else { -1 };
                sign * prod(i + 1, j - 1)
            } else {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                sign * prod(i + 1, k) * prod(1, j - 1)
            };
            out[i - 1][j - 1] = SmallRational::new(value, d);
        }
    }
    out
}

pub fn chain_matrix(a: &[u32]) -> Vec<Vec<u32>> {
    let k = a.len();
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        m[i][i] = a[i];
        if i > 0 {
            m[i][i - 1] = 1;
        }
    }
    m
}

pub fn loop_matrix(a: &[u32]) -> Vec<Vec<u32>> {
    let mut m = chain_matrix(a);
    let k = a.len();
    m[0][k - 1] += 1;
    m
}

#[cfg(test)]
fn is_unit_row_sum(e: &ExponentMatrix, q: &[SmallRational]) -> bool {
    e.rows().iter().all(|row| {
        row.iter()
            .zip(q)
            .map(|(&x, w)| w * i64::from(x))
            .sum::<SmallRational>()
            .is_one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::parse_polynomial;
    use crate::rational::small;

    #[test]
    fn fermat_quintic_matrix_is_diagonal() {
        let p = parse_polynomial("x1^5+x2^5+x3^5+x4^5+x5^5").unwrap();
        let e = check_invertible(&p).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(e.entry(i, j), if i == j { 5 } else { 0 });
            }
        }
    }

    #[test]
    fn two_variable_loop_reads_exponents() {
        let p = parse_polynomial("x1^2*x2 + x2^2*x1").unwrap();
        let e = check_invertible(&p).unwrap();
        let mut rows = e.rows().to_vec();
        rows.sort();
        assert_eq!(rows, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn singular_and_non_square_inputs() {
        let p = parse_polynomial("x1^2*x2^2 + x1*x2").unwrap();
        assert_eq!(check_invertible(&p), Err(LgError::SingularExponentMatrix));
        let p = parse_polynomial("x1^3 + x2^3 + x1*x2").unwrap();
        assert!(matches!(check_invertible(&p), Err(LgError::NotSquare { .. })));
    }

    #[test]
    fn linear_fermat_weight_out_of_range() {
        let p = parse_polynomial("x1 + x2^3").unwrap();
        assert!(matches!(
            check_invertible(&p),
            Err(LgError::WeightOutOfRange { index: 1, .. })
        ));
    }

    #[test]
    fn quintic_and_chain_weights() {
        let e = ExponentMatrix::new(vec![
            vec![5, 0, 0, 0, 0],
            vec![0, 5, 0, 0, 0],
            vec![0, 0, 5, 0, 0],
            vec![0, 0, 0, 5, 0],
            vec![0, 0, 0, 0, 5],
        ])
        .unwrap();
        let w = weights(&e).unwrap();
        assert!(w.weights.iter().all(|q| *q == small(1, 5)));
        assert_eq!(w.central_charge, small(3, 1));
        assert_eq!(w.milnor_number(), small(1024, 1));

        let chain = ExponentMatrix::new(chain_matrix(&[3, 3])).unwrap();
        let w = weights(&chain).unwrap();
        assert_eq!(w.weights, vec![small(1, 3), small(2, 9)]);
        assert_eq!(w.central_charge, small(8, 9));
        assert_eq!(w.milnor_number(), small(7, 1));
        assert!(is_unit_row_sum(&chain, &w.weights));
    }

    #[test]
    fn closed_forms_of_small_blocks() {
        let c = chain_inverse_closed_form(&[3, 3]);
        assert_eq!(c, vec![vec![small(1, 3), small(0, 1)], vec![small(-1, 9), small(1, 3)]]);
        assert_eq!(loop_determinant(&[2, 2]), 3);
        let l = loop_inverse_closed_form(&[2, 2]);
        assert_eq!(l, vec![vec![small(2, 3), small(-1, 3)], vec![small(-1, 3), small(2, 3)]]);
    }

    #[test]
    fn transpose_is_an_involution() {
        let e = ExponentMatrix::new(chain_matrix(&[3, 3])).unwrap();
        assert_eq!(e.transpose().rows(), &[vec![3, 1], vec![0, 3]]);
        assert_eq!(e.transpose().transpose(), e);
    }

    #[test]
    fn adjugate_is_det_times_inverse() {
        let e = ExponentMatrix::new(loop_matrix(&[2, 3, 4])).unwrap();
        let adj = e.adjugate();
        let det: i64 = e.determinant().try_into().unwrap();
        assert_eq!(det, loop_determinant(&[2, 3, 4]));
        for i in 0..3 {
            for j in 0..3 {
                let s: i64 = (0..3).map(|k| i64::from(e.entry(i, k)) * adj[k][j]).sum();
                assert_eq!(s, if i == j { det } else { 0 });
            }
        }
    }
}
