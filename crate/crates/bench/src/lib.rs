//! Inputs shared by the benchmarks.

use lgorb_core::symmetry::parse_generators;
use lgorb_core::{check_invertible, max_symmetry_group, parse_polynomial, subgroup, Polynomial, SymmetryGroup};

pub const FERMAT_QUINTIC: &str = "x1^5+x2^5+x3^5+x4^5+x5^5";

/// The Fermat quintic with its special linear subgroup of `(Z/5)^5`.
pub fn quintic_with_sl() -> (Polynomial, SymmetryGroup) {
    let w = parse_polynomial(FERMAT_QUINTIC).expect("valid polynomial");
    let e = check_invertible(&w).expect("invertible");
    let gmax = max_symmetry_group(&e).expect("group");
    let gens = parse_generators("1,4,0,0,0; 0,1,4,0,0; 0,0,1,4,0; 0,0,0,1,4", Some(5)).expect("generators");
    let sl = subgroup(gens, &gmax).expect("subgroup");
    (w, sl)
}
