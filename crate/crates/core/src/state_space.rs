//! Orbifold state spaces by localization over twisted sectors.

use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{LgError, Result};
use crate::milnor::{character, milnor_basis};
use crate::poly::{check_invertible, InvertiblePolynomial, Monomial, Polynomial};
use crate::rational::SmallRational;
use crate::symmetry::{fixed_locus, max_symmetry_group, restrict_to_fixed_locus, PhaseVector, SymmetryGroup};

/// The `g`-twisted summand: `G`-invariants of `Jac(W|_{V^g}) dx_{V^g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub twist: PhaseVector,
    /// 0-based indices of `V^g`.
    pub fixed_indices: Vec<usize>,
    /// `W` on `V^g`, in renamed variables `x1..x_{|V^g|}`.
    pub restricted_poly: Polynomial,
    pub restricted_milnor_number: usize,
    /// Monomials in the renamed variables with their unshifted degrees.
    pub invariant_classes: Vec<(Monomial, SmallRational)>,
    /// `|V^g| mod 2`.
    pub parity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldStateSpace {
    /// One sector per group element, in the group's sorted element order.
    pub sectors: Vec<Sector>,
    pub odd_dim: usize,
    pub even_dim: usize,
    /// `G` lies in `SL`. Otherwise the sector action ignores any
    /// determinant twist on normal directions.
    pub special_linear: bool,
}

/// `HH_*(MF_G(W))` as the sum over `g` of invariant restricted Milnor rings.
pub fn localize(w: &Polynomial, g: &SymmetryGroup) -> Result<OrbifoldStateSpace> {
    let e = check_invertible(w)?;
    if g.ambient_dim() != e.dim() {
        return Err(LgError::DimensionMismatch {
            expected: e.dim(),
            got: g.ambient_dim(),
        });
    }
    let gmax = max_symmetry_group(&e)?;
    if let Some(bad) = g.generators().iter().find(|x| !gmax.contains(x)) {
        return Err(LgError::GroupNotInMaxSymmetry {
            element: bad.to_string(),
        });
    }
    let sectors = g
        .elements()
        .par_iter()
        .map(|twist| sector(w, g, twist))
        .collect::<Result<Vec<_>>>()?;
    let mut odd_dim = 0;
    let mut even_dim = 0;
    for s in &sectors {
        if s.parity == 1 {
            odd_dim += s.invariant_classes.len();
        } else {
            even_dim += s.invariant_classes.len();
        }
    }
    Ok(OrbifoldStateSpace {
        sectors,
        odd_dim,
        even_dim,
        special_linear: g.is_special_linear(),
    })
}

fn sector(w: &Polynomial, g: &SymmetryGroup, twist: &PhaseVector) -> Result<Sector> {
    let fixed = fixed_locus(twist);
    let restricted = restrict_to_fixed_locus(w, &fixed)?;
    let inv = InvertiblePolynomial::new(restricted.clone())?;
    let basis = milnor_basis(&inv.decomposition, &inv.weights)?;
    let restricted_milnor_number = basis.len();
    let generators: Vec<PhaseVector> = g.generators().iter().map(|h| h.restrict(&fixed)).collect();
    let mut invariant_classes = Vec::new();
    for (m, deg) in basis.elements {
        let mut invariant = true;
        for h in &generators {
            if !character(h, &m)?.is_zero() {
                invariant = false;
                break;
            }
        }
        if invariant {
            invariant_classes.push((m, deg));
        }
    }
    Ok(Sector {
        twist: twist.clone(),
        parity: fixed.len() % 2,
        fixed_indices: fixed,
        restricted_poly: restricted,
        restricted_milnor_number,
        invariant_classes,
    })
}

/// One row of the sector table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorRow {
    pub twist: PhaseVector,
    pub fixed_dim: usize,
    pub restricted_milnor_number: usize,
    pub invariant_count: usize,
    /// Sorted ascending.
    pub degrees: Vec<SmallRational>,
}

pub fn sector_report(s: &OrbifoldStateSpace) -> Vec<SectorRow> {
    s.sectors
        .iter()
        .map(|sec| {
            let mut degrees: Vec<SmallRational> = sec.invariant_classes.iter().map(|(_, d)| *d).collect();
            degrees.sort();
            SectorRow {
                twist: sec.twist.clone(),
                fixed_dim: sec.fixed_indices.len(),
                restricted_milnor_number: sec.restricted_milnor_number,
                invariant_count: sec.invariant_classes.len(),
                degrees,
            }
        })
        .collect()
}

/// Tab-separated table with a header line.
pub fn sector_report_tsv(rows: &[SectorRow]) -> String {
    let mut out = String::from("twist\tfixed_dim\trestricted_mu\tinvariant_count\tdegrees\n");
    for r in rows {
        let degrees: Vec<String> = r.degrees.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.twist,
            r.fixed_dim,
            r.restricted_milnor_number,
            r.invariant_count,
            degrees.join(",")
        );
    }
    out
}
