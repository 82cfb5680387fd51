//! Splitting an exponent matrix into Fermat, chain and loop blocks.
//!
//! Each monomial is paired with a "diagonal" variable carrying its big
//! exponent. The remaining support of a monomial is at most one further
//! variable with exponent 1, which gives a directed graph
//! `v -> p` ("the monomial of `v` contains `p`"). The matrix is atomic
//! decomposable exactly when some pairing makes that graph a disjoint union
//! of isolated points (Fermat), simple paths (chain) and simple cycles (loop).

use serde::Serialize;

use super::exponent::{chain_matrix, loop_matrix, ExponentMatrix};
use crate::error::{LgError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomicKind {
    Fermat,
    Chain,
    Loop,
}

/// One atomic summand. `variables[k]` is the original (0-based) index of the
/// block's `k`-th variable and `monomials[k]` the row of `E` paired with it.
///
/// Chains are ordered head first: `x_1^{a_1} + x_1 x_2^{a_2} + ...`; loops
/// start at their smallest variable and row `k` contains variable `k - 1`
/// (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomicBlock {
    pub kind: AtomicKind,
    pub variables: Vec<usize>,
    pub monomials: Vec<usize>,
    pub exponents: Vec<u32>,
}

impl AtomicBlock {
    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    /// The block's exponent matrix in block-local order.
    pub fn local_matrix(&self) -> Vec<Vec<u32>> {
        match self.kind {
            AtomicKind::Fermat => vec![vec![self.exponents[0]]],
            AtomicKind::Chain => chain_matrix(&self.exponents),
            AtomicKind::Loop => loop_matrix(&self.exponents),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomicDecomposition {
    pub blocks: Vec<AtomicBlock>,
    /// Concatenated block variables: new variable `k` is original `permutation[k]`.
    pub permutation: Vec<usize>,
    /// Concatenated block monomials (rows of `E`) in the same order.
    pub monomial_order: Vec<usize>,
}

impl AtomicDecomposition {
    pub fn dim(&self) -> usize {
        self.permutation.len()
    }

    /// Rebuilds `E` (in original row and column order) from the blocks.
    pub fn reassemble(&self) -> Vec<Vec<u32>> {
        let n = self.dim();
        let mut rows = vec![vec![0; n]; n];
        for b in &self.blocks {
            let local = b.local_matrix();
            for (k, &row) in b.monomials.iter().enumerate() {
                for (l, &col) in b.variables.iter().enumerate() {
                    rows[row][col] = local[k][l];
                }
            }
        }
        rows
    }
}

/// Decomposes `E` into atomic blocks, sorted by smallest original variable.
pub fn decompose_atomic(e: &ExponentMatrix) -> Result<AtomicDecomposition> {
    let n = e.dim();
    let candidates: Vec<Vec<usize>> = (0..n).map(|i| partner_candidates(e.rows()[i].as_slice())).collect();
    if let Some(i) = candidates.iter().position(Vec::is_empty) {
        return Err(LgError::NotAtomicDecomposable {
            reason: format!("monomial {} is not of the form x^a or x^a*y", i + 1),
        });
    }
    let mut pairing = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut last_reason = String::from("no pairing of monomials with variables exists");
    let found = search(e, &candidates, 0, &mut pairing, &mut used, &mut last_reason);
    match found {
        Some(blocks) => {
            let permutation = blocks.iter().flat_map(|b| b.variables.clone()).collect();
            let monomial_order = blocks.iter().flat_map(|b| b.monomials.clone()).collect();
            Ok(AtomicDecomposition {
                blocks,
                permutation,
                monomial_order,
            })
        }
        None => Err(LgError::NotAtomicDecomposable {
            reason: last_reason,
        }),
    }
}

/// Variables a row may be paired with: any support variable such that the
/// rest of the row is empty or a single exponent 1.
fn partner_candidates(row: &[u32]) -> Vec<usize> {
    let support: Vec<usize> = (0..row.len()).filter(|&j| row[j] > 0).collect();
    match support.as_slice() {
        [j] => vec![*j],
        [j, k] => {
            let mut out = Vec::new();
            if row[*k] == 1 {
                out.push(*j);
            }
            if row[*j] == 1 {
                out.push(*k);
            }
            out
        }
        _ => Vec::new(),
    }
}

/// Backtracking over pairings in lexicographic order; returns the first one
/// whose support graph is made of points, paths and cycles.
fn search(
    e: &ExponentMatrix,
    candidates: &[Vec<usize>],
    row: usize,
    pairing: &mut Vec<usize>,
    used: &mut Vec<bool>,
    reason: &mut String,
) -> Option<Vec<AtomicBlock>> {
    if row == candidates.len() {
        return match blocks_from_pairing(e, pairing) {
            Ok(b) => Some(b),
            Err(r) => {
                *reason = r;
                None
            }
        };
    }
    for &v in &candidates[row] {
        if used[v] {
            continue;
        }
        used[v] = true;
        pairing[row] = v;
        if let Some(b) = search(e, candidates, row + 1, pairing, used, reason) {
            return Some(b);
        }
        used[v] = false;
    }
    None
}

fn blocks_from_pairing(e: &ExponentMatrix, pairing: &[usize]) -> std::result::Result<Vec<AtomicBlock>, String> {
    let n = pairing.len();
    let mut row_of = vec![0; n];
    for (row, &v) in pairing.iter().enumerate() {
        row_of[v] = row;
    }
    // out[v]: the extra variable in v's monomial; incoming[p]: who points at p.
    let mut out: Vec<Option<usize>> = vec![None; n];
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let row = &e.rows()[row_of[v]];
        if let Some(p) = (0..n).find(|&j| j != v && row[j] > 0) {
            out[v] = Some(p);
            incoming[p].push(v);
        }
    }
    if let Some(p) = (0..n).find(|&p| incoming[p].len() > 1) {
        return Err(format!(
            "variable x{} occurs as the linear factor of several monomials",
            p + 1
        ));
    }
    let diag = |v: usize| e.rows()[row_of[v]][v];
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // walk to the head of the component (out-degree 0) or around a cycle
        let mut head = start;
        let mut steps = 0;
        while let Some(p) = out[head] {
            head = p;
            steps += 1;
            if head == start || steps > n {
                break;
            }
        }
        let is_cycle = out[head].is_some();
        let mut vars = Vec::new();
        if is_cycle {
            let first = collect_cycle(start, &out).into_iter().min().expect("nonempty cycle");
            let mut v = first;
            loop {
                vars.push(v);
                // next variable: the one whose monomial contains v
                v = incoming[v][0];
                if v == first {
                    break;
                }
            }
        } else {
            let mut v = head;
            loop {
                vars.push(v);
                match incoming[v].first() {
                    Some(&next) => v = next,
                    None => break,
                }
            }
        }
        for &v in &vars {
            seen[v] = true;
        }
        let exponents: Vec<u32> = vars.iter().map(|&v| diag(v)).collect();
        let kind = if is_cycle {
            AtomicKind::Loop
        } else if vars.len() == 1 {
            AtomicKind::Fermat
        } else {
            AtomicKind::Chain
        };
        let too_small = match kind {
            AtomicKind::Chain => exponents[..exponents.len() - 1].iter().any(|&a| a < 2),
            _ => exponents.iter().any(|&a| a < 2),
        };
        if too_small {
            return Err(format!("{kind:?} block on {vars:?} has an exponent below 2"));
        }
        blocks.push(AtomicBlock {
            kind,
            monomials: vars.iter().map(|&v| row_of[v]).collect(),
            variables: vars,
            exponents,
        });
    }
    blocks.sort_by_key(|b| *b.variables.iter().min().expect("nonempty block"));
    Ok(blocks)
}

fn collect_cycle(start: usize, out: &[Option<usize>]) -> Vec<usize> {
    // `start` may hang off a cycle only if in-degrees exceed 1, excluded above
    let mut vars = vec![start];
    let mut v = out[start].expect("on a cycle");
    while v != start {
        vars.push(v);
        v = out[v].expect("on a cycle");
    }
    vars
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::exponent::check_invertible;
    use crate::poly::polynomial::parse_polynomial;

    fn decompose(text: &str) -> AtomicDecomposition {
        let p = parse_polynomial(text).unwrap();
        let e = check_invertible(&p).unwrap();
        let d = decompose_atomic(&e).unwrap();
        assert_eq!(d.reassemble(), e.rows().to_vec());
        d
    }

    #[test]
    fn quintic_is_five_fermat_blocks() {
        let d = decompose("x1^5+x2^5+x3^5+x4^5+x5^5");
        assert_eq!(d.blocks.len(), 5);
        assert!(d.blocks.iter().all(|b| b.kind == AtomicKind::Fermat && b.exponents == [5]));
        assert_eq!(d.permutation, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn chain_is_head_first() {
        let d = decompose("x1^3 + x1*x2^3");
        assert_eq!(d.blocks.len(), 1);
        let b = &d.blocks[0];
        assert_eq!(b.kind, AtomicKind::Chain);
        assert_eq!(b.variables, vec![0, 1]);
        assert_eq!(b.exponents, vec![3, 3]);

        // same chain with the variables renamed
        let d = decompose("x2^3 + x2*x1^4");
        assert_eq!(d.blocks[0].variables, vec![1, 0]);
        assert_eq!(d.blocks[0].exponents, vec![3, 4]);
    }

    #[test]
    fn three_cycle_is_a_loop() {
        let d = decompose("x1^2*x2 + x2^2*x3 + x3^2*x1");
        assert_eq!(d.blocks.len(), 1);
        let b = &d.blocks[0];
        assert_eq!(b.kind, AtomicKind::Loop);
        assert_eq!(b.exponents, vec![2, 2, 2]);
        assert_eq!(b.variables[0], 0);
    }

    #[test]
    fn chain_tail_exponent_one() {
        let d = decompose("x1^2 + x1*x2");
        assert_eq!(d.blocks[0].kind, AtomicKind::Chain);
        assert_eq!(d.blocks[0].exponents, vec![2, 1]);
    }

    #[test]
    fn mixed_blocks_sorted_by_smallest_index() {
        let d = decompose("x3^4 + x1^2*x4 + x4^2*x1 + x2^3 + x2*x5^2");
        let kinds: Vec<_> = d.blocks.iter().map(|b| b.kind).collect();
        assert_eq!(kinds, vec![AtomicKind::Loop, AtomicKind::Chain, AtomicKind::Fermat]);
        assert_eq!(d.blocks[1].variables, vec![1, 4]);
    }

    #[test]
    fn rejects_non_atomic_shapes() {
        // x1 occurs linearly in two monomials
        let e = ExponentMatrix::new(vec![vec![3, 0, 0], vec![1, 3, 0], vec![1, 0, 3]]).unwrap();
        assert!(matches!(
            decompose_atomic(&e),
            Err(LgError::NotAtomicDecomposable { .. })
        ));
        let e = ExponentMatrix::new(vec![vec![2, 2], vec![0, 3]]).unwrap();
        assert!(decompose_atomic(&e).is_err());
    }
}
