//! Finite diagonal symmetry groups, written additively.
//!
//! A diagonal symmetry `x_i -> exp(2 pi i theta_i) x_i` is stored as its phase
//! vector `theta` in `(Q/Z)^N`, so group arithmetic is exact addition mod 1.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{LgError, Result};
use crate::poly::{check_invertible, weights, ExponentMatrix, Polynomial};
use crate::rational::{mod_one, parse_fraction, to_small, SmallRational};

/// Group element: phases reduced to `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseVector(Vec<SmallRational>);

impl PhaseVector {
    pub fn new(phases: Vec<SmallRational>) -> Self {
        PhaseVector(phases.into_iter().map(mod_one).collect())
    }

    pub fn identity(n: usize) -> Self {
        PhaseVector(vec![SmallRational::zero(); n])
    }

    pub fn phases(&self) -> &[SmallRational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &PhaseVector) -> PhaseVector {
        PhaseVector(self.0.iter().zip(&other.0).map(|(a, b)| mod_one(a + b)).collect())
    }

    /// Phases restricted to the given coordinates.
    pub fn restrict(&self, indices: &[usize]) -> PhaseVector {
        PhaseVector(indices.iter().map(|&i| self.0[i]).collect())
    }

    /// Does the element fix every monomial of `E`, i.e. is `E theta` integral?
    pub fn preserves(&self, e: &ExponentMatrix) -> bool {
        e.rows().iter().all(|row| {
            row.iter()
                .zip(&self.0)
                .map(|(&a, t)| t * i64::from(a))
                .sum::<SmallRational>()
                .is_integer()
        })
    }
}

impl fmt::Display for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for PhaseVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

/// `sum theta_i` is an integer.
pub fn is_special_linear(g: &PhaseVector) -> bool {
    g.0.iter().sum::<SmallRational>().is_integer()
}

/// Indices `i` with `theta_i = 0`.
pub fn fixed_locus(g: &PhaseVector) -> Vec<usize> {
    (0..g.dim()).filter(|&i| g.0[i].is_zero()).collect()
}

/// A finite group of phase vectors, fully enumerated in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    ambient_dim: usize,
    generators: Vec<PhaseVector>,
    elements: Vec<PhaseVector>,
    /// The exponential grading element `J = (q_1, ..., q_N) mod 1`, when known.
    grading_element: Option<PhaseVector>,
}

impl SymmetryGroup {
    /// Closure of `generators` under addition (breadth first).
    pub fn generated_by(ambient_dim: usize, generators: Vec<PhaseVector>) -> Result<Self> {
        for g in &generators {
            if g.dim() != ambient_dim {
                return Err(LgError::DimensionMismatch {
                    expected: ambient_dim,
                    got: g.dim(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        let zero = PhaseVector::identity(ambient_dim);
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &generators {
                    let y = x.add(g);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(SymmetryGroup {
            ambient_dim,
            generators,
            elements: seen.into_iter().collect(),
            grading_element: None,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[PhaseVector] {
        &self.generators
    }

    pub fn elements(&self) -> &[PhaseVector] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &PhaseVector) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn grading_element(&self) -> Option<&PhaseVector> {
        self.grading_element.as_ref()
    }

    /// Every element is special linear (checking generators suffices).
    pub fn is_special_linear(&self) -> bool {
        self.generators.iter().all(is_special_linear)
    }

    /// `Some(true)` if `J` lies in the group, `None` if `J` is unknown.
    pub fn contains_grading_element(&self) -> Option<bool> {
        self.grading_element.as_ref().map(|j| self.contains(j))
    }
}

/// `G_W^max`: generated by the columns of `E^{-1}` mod 1. Its order is checked
/// against `|det E|`.
pub fn max_symmetry_group(e: &ExponentMatrix) -> Result<SymmetryGroup> {
    let n = e.dim();
    let inv = e.generic_inverse();
    let mut generators = Vec::with_capacity(n);
    for j in 0..n {
        let col = (0..n)
            .map(|i| to_small(inv.get(i, j)).ok_or_else(|| LgError::internal("phase does not fit")))
            .collect::<Result<Vec<_>>>()?;
        generators.push(PhaseVector::new(col));
    }
    let mut group = SymmetryGroup::generated_by(n, generators)?;
    let det = if n == 0 { 1 } else { e.abs_determinant() };
    if group.order() as i64 != det {
        return Err(LgError::internal(format!(
            "|G_max| = {} but |det E| = {det}",
            group.order()
        )));
    }
    if n > 0 {
        let w = weights(e)?;
        let j = PhaseVector::new(w.weights);
        if !group.contains(&j) {
            return Err(LgError::internal("grading element J not in G_max"));
        }
        group.grading_element = Some(j);
    }
    Ok(group)
}

/// The subgroup generated by `generators`, each of which must lie in `ambient`.
pub fn subgroup(generators: Vec<PhaseVector>, ambient: &SymmetryGroup) -> Result<SymmetryGroup> {
    for g in &generators {
        if g.dim() != ambient.ambient_dim {
            return Err(LgError::DimensionMismatch {
                expected: ambient.ambient_dim,
                got: g.dim(),
            });
        }
        if !ambient.contains(g) {
            return Err(LgError::GeneratorNotInAmbient {
                generator: g.to_string(),
            });
        }
    }
    let mut group = SymmetryGroup::generated_by(ambient.ambient_dim, generators)?;
    group.grading_element = ambient.grading_element.clone();
    Ok(group)
}

/// `W` restricted to `{x_i : i in fixed}`; must again be invertible.
pub fn restrict_to_fixed_locus(p: &Polynomial, fixed: &[usize]) -> Result<Polynomial> {
    let r = p.restrict(fixed);
    match check_invertible(&r) {
        Ok(_) => Ok(r),
        Err(err) => Err(LgError::RestrictionNotInvertible {
            fixed: fixed.iter().map(|i| i + 1).collect(),
            reason: err.to_string(),
        }),
    }
}

/// Parses generators: `;`-separated, each a `,`-separated list of rationals.
/// With `modulus = Some(k)` entries are integers read as `a / k`.
pub fn parse_generators(text: &str, modulus: Option<i64>) -> Result<Vec<PhaseVector>> {
    if modulus == Some(0) {
        return Err(LgError::GroupSyntax("modulus must be nonzero".into()));
    }
    text.split(';')
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(|g| {
            let phases = g
                .split(',')
                .map(|entry| {
                    let q = parse_fraction(entry)
                        .and_then(|q| to_small(&q))
                        .ok_or_else(|| LgError::GroupSyntax(format!("bad entry `{}`", entry.trim())))?;
                    match modulus {
                        Some(_) if !q.is_integer() => Err(LgError::GroupSyntax(format!(
                            "entry `{}` must be an integer with a modulus",
                            entry.trim()
                        ))),
                        Some(k) => Ok(q / k),
                        None => Ok(q),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(PhaseVector::new(phases))
        })
        .collect()
}
