//! Payload builders. Every number leaves as an exact fraction string.

use std::fmt::Display;

use lgorb_core::hochschild::{canonical_splitting, equivariance_check, flat_extension, SplittingClass};
use lgorb_core::state_space::sector_report_tsv;
use lgorb_core::symmetry::parse_generators;
use lgorb_core::{
    check_invertible, cubic_flat_coordinate, cubic_g_h, localize, max_symmetry_group, milnor_basis,
    parse_polynomial, quintic_mirror_map, quintic_omegas, quintic_yukawa, sector_report, subgroup,
    verify_degree_gap, FormalPowerSeries, InvertiblePolynomial, LgError, QuinticFamily, RationalFunction, Result,
    Verdict,
};
use serde_json::{json, Value};

fn strings<T: Display>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn series(s: &FormalPowerSeries) -> Value {
    json!(strings(s.coeffs()))
}

fn rational_function(f: &RationalFunction) -> Value {
    json!({
        "display": f.to_string(),
        "numerator": strings(f.numerator().coeffs()),
        "denominator": strings(f.denominator().coeffs()),
    })
}

pub fn analyze(text: &str) -> Result<Value> {
    let p = InvertiblePolynomial::parse(text)?;
    let group = max_symmetry_group(&p.exponents)?;
    let basis = milnor_basis(&p.decomposition, &p.weights)?;
    let blocks: Vec<Value> = p
        .decomposition
        .blocks
        .iter()
        .map(|b| {
            json!({
                "kind": format!("{:?}", b.kind).to_lowercase(),
                "variables": b.variables.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "exponents": b.exponents,
            })
        })
        .collect();
    Ok(json!({
        "polynomial": p.polynomial.to_string(),
        "invertible": true,
        "exponent_matrix": p.exponents.rows(),
        "decomposition": blocks,
        "inverse": p.inverse.iter().map(strings).collect::<Vec<_>>(),
        "weights": strings(&p.weights.weights),
        "central_charge": p.weights.central_charge.to_string(),
        "milnor_number": p.milnor_number()?,
        "group_order": group.order(),
        "milnor_basis": basis
            .elements
            .iter()
            .map(|(m, d)| json!({ "monomial": m.exponents(), "degree": d.to_string() }))
            .collect::<Vec<_>>(),
    }))
}

/// Sector table as JSON, or as TSV text when `tsv` is set.
pub fn state_space(text: &str, group: &str, modulus: Option<i64>, tsv: bool) -> Result<Value> {
    let w = parse_polynomial(text)?;
    let e = check_invertible(&w)?;
    let gmax = max_symmetry_group(&e)?;
    let g = subgroup(parse_generators(group, modulus)?, &gmax)?;
    let s = localize(&w, &g)?;
    let rows = sector_report(&s);
    if tsv {
        return Ok(Value::String(sector_report_tsv(&rows)));
    }
    let sectors: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "twist": r.twist,
                "fixed_dim": r.fixed_dim,
                "restricted_milnor_number": r.restricted_milnor_number,
                "invariant_count": r.invariant_count,
                "degrees": strings(&r.degrees),
            })
        })
        .collect();
    Ok(json!({
        "group_order": g.order(),
        "special_linear": s.special_linear,
        "contains_grading_element": g.contains_grading_element(),
        "odd_dim": s.odd_dim,
        "even_dim": s.even_dim,
        "sectors": sectors,
    }))
}

pub fn verify_splitting(text: &str) -> Result<Value> {
    let c = verify_degree_gap(&parse_polynomial(text)?)?;
    let violations: Vec<Value> = c
        .violations
        .iter()
        .map(|v| {
            json!({
                "r": v.r.exponents(),
                "r_prime": v.r_prime.exponents(),
                "degree_gap": v.degree_gap.to_string(),
                "witness": strings(&v.witness),
            })
        })
        .collect();
    Ok(json!({
        "polynomial": c.polynomial,
        "milnor_number": c.milnor_number,
        "pairs_checked": c.pairs_checked,
        "degree_differing_pairs": c.degree_differing_pairs,
        "equal_degree_integral_pairs": c.equal_degree_integral_pairs,
        "violations": violations,
        "verdict": match c.verdict {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        },
    }))
}

pub fn mirror_map(model: &str, order: usize) -> Result<Value> {
    match model {
        "cubic" => {
            let f = cubic_flat_coordinate(order)?;
            Ok(json!({
                "model": "cubic",
                "order": order,
                "g": series(&f.g.truncate(order)),
                "h": series(&f.h.truncate(order)),
                "tau": series(&f.tau.truncate(order)),
                "t_of_tau": series(&f.t_of_tau.truncate(order)),
                "prepotential": f.prepotential,
            }))
        }
        "quintic" => {
            let (tau, psi) = quintic_mirror_map(order)?;
            let omega: Vec<Value> = quintic_omegas(order).iter().map(series).collect();
            Ok(json!({
                "model": "quintic",
                "order": order,
                "omega": omega,
                "tau": series(&tau.truncate(order)),
                "psi_of_tau": series(&psi.truncate(order)),
            }))
        }
        other => Err(LgError::Syntax {
            offset: 0,
            message: format!("unknown model `{other}` (expected cubic or quintic)"),
        }),
    }
}

pub fn yukawa(order: usize, max_degree: u32) -> Result<Value> {
    let fam = QuinticFamily::new(max_degree);
    let p = quintic_yukawa(&fam, order)?;
    Ok(json!({
        "order": order,
        "max_degree": max_degree,
        "hessian_socle": rational_function(&fam.hessian_socle()?),
        "yukawa_psi": rational_function(&p.yukawa_psi),
        "pole_order_at_fifth_roots": p.yukawa_psi.pole_order_at_fifth_roots(),
        "tau": series(&p.tau),
        "psi_of_tau": series(&p.psi_of_tau),
        "f3": series(&p.f3),
        "normalization": p.normalization,
    }))
}

pub fn hochschild_cubic(order: usize) -> Result<Value> {
    let t_order = u32::try_from(order).map_err(|_| LgError::Syntax {
        offset: 0,
        message: format!("order {order} is too large"),
    })?;
    let s0 = flat_extension(SplittingClass::S0, t_order);
    let omega = flat_extension(SplittingClass::Omega, t_order);
    let (g, h) = cubic_g_h(order);
    let equivariant = [SplittingClass::S0, SplittingClass::Omega]
        .iter()
        .all(|&c| equivariance_check(&canonical_splitting(c, t_order)));
    Ok(json!({
        "order": order,
        "s0_flat": series(&s0),
        "omega_flat": series(&omega),
        "matches_closed_form": s0 == g && omega == h,
        "equivariant": equivariant,
    }))
}
