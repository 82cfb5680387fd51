//! Degree-gap certificate: no `G^max`-equivariant maps between graded pieces
//! of `Jac(W) dx` of different degrees.
//!
//! `x^r dx` and `x^{r'} dx` carry the same `G^max` character iff
//! `(r' - r) E^{-1}` is integral, i.e. iff `r adj(E) = r' adj(E) mod |det E|`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Signed;
use rayon::prelude::*;

use crate::error::Result;
use crate::milnor::milnor_basis;
use crate::poly::{AtomicKind, InvertiblePolynomial, Monomial, Polynomial};
use crate::rational::SmallRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub r: Monomial,
    pub r_prime: Monomial,
    /// `deg x^{r'} dx - deg x^r dx`.
    pub degree_gap: SmallRational,
    /// `(r' - r) E^{-1}`, integral.
    pub witness: Vec<SmallRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivarianceCertificate {
    pub polynomial: String,
    pub milnor_number: usize,
    /// Ordered pairs `(r, r')` with `r != r'`: `mu (mu - 1)`.
    pub pairs_checked: u64,
    pub degree_differing_pairs: u64,
    /// Same character and same degree (the even-loop alternating case among others).
    pub equal_degree_integral_pairs: u64,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
}

/// Character key `r adj(E) mod |det E|` of every basis monomial.
fn character_keys(p: &InvertiblePolynomial, basis: &[(Monomial, SmallRational)]) -> Vec<Vec<i64>> {
    let n = p.dim();
    let adj = p.exponents.adjugate();
    let d = p.exponents.abs_determinant().max(1);
    basis
        .iter()
        .map(|(m, _)| {
            (0..n)
                .map(|j| {
                    let s: i64 = (0..n).map(|i| i64::from(m.0[i]) * adj[i][j]).sum();
                    s.rem_euclid(d)
                })
                .collect()
        })
        .collect()
}

fn witness(p: &InvertiblePolynomial, r: &Monomial, rp: &Monomial) -> Vec<SmallRational> {
    let n = p.dim();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| p.inverse[i][j] * (i64::from(rp.0[i]) - i64::from(r.0[i])))
                .sum()
        })
        .collect()
}

/// Brute force over all ordered pairs of basis monomials.
pub fn verify_degree_gap(w: &Polynomial) -> Result<EquivarianceCertificate> {
    let p = InvertiblePolynomial::new(w.clone())?;
    let basis = milnor_basis(&p.decomposition, &p.weights)?.elements;
    let keys = character_keys(&p, &basis);
    let mu = basis.len();

    let per_row: Vec<(u64, u64, Vec<Violation>)> = (0..mu)
        .into_par_iter()
        .map(|a| {
            let mut differing = 0u64;
            let mut equal_integral = 0u64;
            let mut violations = Vec::new();
            for b in 0..mu {
                if a == b {
                    continue;
                }
                let same_degree = basis[a].1 == basis[b].1;
                let integral = keys[a] == keys[b];
                if !same_degree {
                    differing += 1;
                    if integral {
                        violations.push(Violation {
                            r: basis[a].0.clone(),
                            r_prime: basis[b].0.clone(),
                            degree_gap: basis[b].1 - basis[a].1,
                            witness: witness(&p, &basis[a].0, &basis[b].0),
                        });
                    }
                } else if integral {
                    equal_integral += 1;
                }
            }
            (differing, equal_integral, violations)
        })
        .collect();

    let mut degree_differing_pairs = 0;
    let mut equal_degree_integral_pairs = 0;
    let mut violations = Vec::new();
    for (d, e, v) in per_row {
        degree_differing_pairs += d;
        equal_degree_integral_pairs += e;
        violations.extend(v);
    }
    let verdict = if violations.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(EquivarianceCertificate {
        polynomial: w.to_string(),
        milnor_number: mu,
        pairs_checked: (mu as u64) * (mu.saturating_sub(1) as u64),
        degree_differing_pairs,
        equal_degree_integral_pairs,
        violations,
        verdict,
    })
}

/// Re-evaluates a recorded violation from scratch.
pub fn audit_violation(w: &Polynomial, v: &Violation) -> Result<bool> {
    let p = InvertiblePolynomial::new(w.clone())?;
    let wit = witness(&p, &v.r, &v.r_prime);
    let deg = |m: &Monomial| crate::milnor::degree_of(m, &p.weights);
    Ok(wit == v.witness && wit.iter().all(|x| x.is_integer()) && deg(&v.r)? != deg(&v.r_prime)?)
}

/// One row of the lifting-ambiguity table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionRow {
    pub source_degree: SmallRational,
    pub k: u32,
    pub target_degree: SmallRational,
    pub source_dim: usize,
    pub target_dim: usize,
    /// `dim Hom_{G^max}(source, target)`.
    pub equivariant_dim: usize,
}

/// For each basis degree `d` and `k >= 1` with `d + 2k` at most the top degree.
pub fn splitting_obstruction_dims(w: &Polynomial) -> Result<Vec<ObstructionRow>> {
    let p = InvertiblePolynomial::new(w.clone())?;
    let basis = milnor_basis(&p.decomposition, &p.weights)?.elements;
    let keys = character_keys(&p, &basis);
    // degree -> character key -> multiplicity
    let mut pieces: BTreeMap<SmallRational, HashMap<Vec<i64>, usize>> = BTreeMap::new();
    for ((_, deg), key) in basis.iter().zip(keys) {
        *pieces.entry(*deg).or_default().entry(key).or_default() += 1;
    }
    let Some(top) = pieces.keys().next_back().copied() else {
        return Ok(Vec::new());
    };
    let empty = HashMap::new();
    let mut rows = Vec::new();
    for (d, src) in &pieces {
        let mut k = 1u32;
        while *d + SmallRational::from(2 * i64::from(k)) <= top {
            let t = *d + SmallRational::from(2 * i64::from(k));
            let tgt = pieces.get(&t).unwrap_or(&empty);
            let equivariant_dim = src.iter().map(|(key, m)| m * tgt.get(key).copied().unwrap_or(0)).sum();
            rows.push(ObstructionRow {
                source_degree: *d,
                k,
                target_degree: t,
                source_dim: src.values().sum(),
                target_dim: tgt.values().sum(),
                equivariant_dim,
            });
            k += 1;
        }
    }
    Ok(rows)
}

/// `|sum_{i >= j} (-1)^{i+j} (r_i - r'_i) / prod_{j <= l <= i} a_l| < 1` for
/// every `j`, on every pair of basis monomials of every chain block of `W`.
pub fn chain_inequality_holds(w: &Polynomial) -> Result<bool> {
    let p = InvertiblePolynomial::new(w.clone())?;
    for b in p.decomposition.blocks.iter().filter(|b| b.kind == AtomicKind::Chain) {
        let local = crate::milnor::block_basis(b.kind, &b.exponents);
        let a = &b.exponents;
        for r in &local {
            for rp in &local {
                for j in 0..a.len() {
                    let mut s = SmallRational::from(0);
                    let mut prod = 1i64;
                    for i in j..a.len() {
                        prod *= i64::from(a[i]);
                        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                        s += SmallRational::new(sign * (i64::from(r[i]) - i64::from(rp[i])), prod);
                    }
                    if s.abs() >= SmallRational::from(1) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
