//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Rows of a chain block `x1^a1 + x1 x2^a2 + ...`.
pub fn chain_rows(a: &[u32]) -> Vec<Vec<u32>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = a[i];
            if i > 0 {
                r[i - 1] = 1;
            }
            r
        })
        .collect()
}

/// Rows of a loop block `x1^a1 xN + x1 x2^a2 + ...`.
pub fn loop_rows(a: &[u32]) -> Vec<Vec<u32>> {
    let mut rows = chain_rows(a);
    let n = a.len();
    rows[0][n - 1] += 1;
    rows
}

/// Block-diagonal sum of exponent matrices.
pub fn direct_sum(blocks: &[Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = Vec::new();
    let mut off = 0;
    for b in blocks {
        for r in b {
            let mut row = vec![0; n];
            row[off..off + r.len()].copy_from_slice(r);
            out.push(row);
        }
        off += b.len();
    }
    out
}

/// `x1^a*x2^b + ...` with unit coefficients.
pub fn poly_text(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Solves `rows . q = 1` by Gauss-Jordan elimination.
pub fn weights(rows: &[Vec<u32>]) -> Vec<Q> {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| {
            let mut v: Vec<Q> = r.iter().map(|&x| Q::from_integer(x.into())).collect();
            v.push(Q::one());
            v
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("singular exponent matrix");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..=n {
                    let s = &m[c][k] * &f;
                    m[r][k] -= s;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n].clone()).collect()
}

/// Integer weights `w_i` and total degree `D` with `q_i = w_i / D`.
fn integer_weights(rows: &[Vec<u32>]) -> (Vec<i64>, i64) {
    let q = weights(rows);
    let d = q.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let w = q.iter().map(|x| (x * Q::from_integer(d.clone())).to_integer().try_into().unwrap()).collect();
    (w, d.try_into().unwrap())
}

fn monomials_of_degree(w: &[i64], d: i64) -> Vec<Vec<u32>> {
    fn rec(w: &[i64], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e as i64 * w[i] <= left {
            cur.push(e);
            rec(w, i + 1, left - e as i64 * w[i], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(w, 0, d, &mut Vec::new(), &mut out);
    out
}

fn rank(mut m: Vec<Vec<Q>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in c..cols {
                    let s = &m[r][k] * &f;
                    m[i][k] -= s;
                }
            }
        }
        r += 1;
    }
    r
}

/// Graded pieces of the Jacobian ideal in weighted degree `d`, as rows over
/// the monomials of that degree.
fn ideal_rows(rows: &[Vec<u32>], w: &[i64], big_d: i64, d: i64, index: &BTreeMap<Vec<u32>, usize>) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        let md = d - (big_d - w[i]);
        if md < 0 {
            continue;
        }
        for m in monomials_of_degree(w, md) {
            let mut v = vec![Q::zero(); index.len()];
            for r in rows {
                if r[i] == 0 {
                    continue;
                }
                let e: Vec<u32> = (0..w.len()).map(|k| m[k] + r[k] - u32::from(k == i)).collect();
                v[index[&e]] += Q::from_integer(r[i].into());
            }
            out.push(v);
        }
    }
    out
}

/// `dim Jac(W)` per weighted degree (in units of `1/D`), by exact rank.
pub fn jacobian_quotient_dims(rows: &[Vec<u32>]) -> BTreeMap<i64, usize> {
    let (w, big_d) = integer_weights(rows);
    let top: i64 = w.iter().map(|&x| big_d - 2 * x).sum();
    let mut out = BTreeMap::new();
    for d in 0..=top {
        let monos = monomials_of_degree(&w, d);
        if monos.is_empty() {
            continue;
        }
        let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = monos.len() - rank(ideal_rows(rows, &w, big_d, d, &index));
        if dim > 0 {
            out.insert(d, dim);
        }
    }
    out
}

pub fn jacobian_dimension(rows: &[Vec<u32>]) -> usize {
    jacobian_quotient_dims(rows).values().sum()
}

/// True iff `basis` projects to a basis of `Jac(W)`: in every degree the
/// basis monomials together with the ideal span everything, with no slack.
pub fn is_jacobian_basis(rows: &[Vec<u32>], basis: &[Vec<u32>]) -> bool {
    let (w, big_d) = integer_weights(rows);
    let deg = |m: &Vec<u32>| m.iter().zip(&w).map(|(&e, &x)| e as i64 * x).sum::<i64>();
    let mut by_degree: BTreeMap<i64, Vec<&Vec<u32>>> = BTreeMap::new();
    for m in basis {
        by_degree.entry(deg(m)).or_default().push(m);
    }
    let dims = jacobian_quotient_dims(rows);
    if dims.keys().ne(by_degree.keys()) {
        return false;
    }
    by_degree.iter().all(|(&d, ms)| {
        let monos = monomials_of_degree(&w, d);
        let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = ideal_rows(rows, &w, big_d, d, &index);
        for b in ms {
            let mut v = vec![Q::zero(); index.len()];
            v[index[*b]] = Q::one();
            m.push(v);
        }
        ms.len() == dims[&d] && rank(m) == monos.len()
    })
}
