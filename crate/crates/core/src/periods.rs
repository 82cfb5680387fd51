//! Period series of the Fermat cubic and quintic families, mirror maps and
//! the quintic Yukawa coupling in flat coordinates.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{LgError, Result};
use crate::milnor::QuinticFamily;
use crate::ratfunc::RationalFunction;
use crate::rational::Rational;
use crate::series::FormalPowerSeries;

/// Normalization attached to every reported Yukawa value.
pub const YUKAWA_NORMALIZATION: &str =
    "Res(Hess W_psi) = 1024; C(psi) = Res((x1*x2*x3*x4*x5)^3); F3 = C(psi(tau)) * psi'(tau)^3 / omega0(psi(tau))^2";

/// Closed form of the cubic prepotential; `t0` is the unit direction.
pub const CUBIC_PREPOTENTIAL: &str = "F = 1/2 * t0^2 * tau";

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `prod_{l=1}^{n} (3l - shift)`.
fn cubic_product(n: usize, shift: i64) -> BigInt {
    (1..=n as i64).fold(BigInt::one(), |acc, l| acc * BigInt::from(3 * l - shift))
}

/// `g = sum (-1)^n d_n^3 t^{3n} / (3n)!`, `h = sum (-1)^n c_n^3 t^{3n+1} / (3n+1)!`
/// with `d_n = prod (3l - 2)`, `c_n = prod (3l - 1)`.
pub fn cubic_g_h(order: usize) -> (FormalPowerSeries, FormalPowerSeries) {
    let mut g = vec![Rational::zero(); order + 1];
    let mut h = vec![Rational::zero(); order + 1];
    for n in 0..=order / 3 {
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let d = cubic_product(n, 2);
        g[3 * n] = Rational::new(&sign * d.pow(3), factorial(3 * n));
        if 3 * n < order {
            let c = cubic_product(n, 1);
            h[3 * n + 1] = Rational::new(&sign * c.pow(3), factorial(3 * n + 1));
        }
    }
    (FormalPowerSeries::new(g, order), FormalPowerSeries::new(h, order))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicFlatStructure {
    pub g: FormalPowerSeries,
    pub h: FormalPowerSeries,
    /// `tau = h / g`.
    pub tau: FormalPowerSeries,
    pub t_of_tau: FormalPowerSeries,
    pub prepotential: &'static str,
}

pub fn cubic_flat_coordinate(order: usize) -> Result<CubicFlatStructure> {
    let order = order.max(1);
    let (g, h) = cubic_g_h(order);
    let tau = h.div(&g)?;
    let t_of_tau = tau.revert()?;
    Ok(CubicFlatStructure {
        g,
        h,
        tau,
        t_of_tau,
        prepotential: CUBIC_PREPOTENTIAL,
    })
}

/// `omega_i = sum_k [prod_{m<k} (5m + 1 + i)]^5 psi^{5k+i} / (5k+i)!`, `i = 0..3`.
pub fn quintic_omegas(order: usize) -> [FormalPowerSeries; 4] {
    std::array::from_fn(|i| {
        let mut c = vec![Rational::zero(); order + 1];
        let mut k = 0;
        while 5 * k + i <= order {
            let p = (0..k).fold(BigInt::one(), |acc, m| acc * BigInt::from(5 * m + 1 + i));
            c[5 * k + i] = Rational::new(p.pow(5), factorial(5 * k + i));
            k += 1;
        }
        FormalPowerSeries::new(c, order)
    })
}

/// `tau = omega_1 / omega_0` and its compositional inverse `psi(tau)`.
pub fn quintic_mirror_map(order: usize) -> Result<(FormalPowerSeries, FormalPowerSeries)> {
    let order = order.max(1);
    let [w0, w1, _, _] = quintic_omegas(order);
    let tau = w1.div(&w0)?;
    let psi = tau.revert()?;
    Ok((tau, psi))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticPeriods {
    pub omega: [FormalPowerSeries; 4],
    pub tau: FormalPowerSeries,
    pub psi_of_tau: FormalPowerSeries,
    pub yukawa_psi: RationalFunction,
    /// Third derivative of the prepotential in the flat coordinate.
    pub f3: FormalPowerSeries,
    pub normalization: &'static str,
}

/// Completes the quintic data to `order` in `psi` and `tau`.
pub fn quintic_yukawa(family: &QuinticFamily, order: usize) -> Result<QuinticPeriods> {
    let order = order.max(1);
    let c = family.yukawa()?;
    // one extra order absorbs the derivative
    let (tau, psi) = quintic_mirror_map(order + 1)?;
    let omega = quintic_omegas(order + 1);
    let c_series = FormalPowerSeries::from_rational_function(&c, order + 1)?;
    let c_of_tau = c_series.compose(&psi)?;
    let dpsi = psi.derivative();
    let w0_of_tau = omega[0].compose(&psi)?;
    let f3 = c_of_tau
        .truncate(order)
        .mul(&dpsi.pow(3).truncate(order))
        .div(&w0_of_tau.pow(2).truncate(order))?;
    Ok(QuinticPeriods {
        omega: omega.map(|w| w.truncate(order)),
        tau: tau.truncate(order),
        psi_of_tau: psi.truncate(order),
        yukawa_psi: c,
        f3,
        normalization: YUKAWA_NORMALIZATION,
    })
}

/// `C(psi)` at a rational point off the locus `psi^5 = 1`.
pub fn yukawa_at(family: &QuinticFamily, psi: &Rational) -> Result<Rational> {
    family.yukawa()?.eval(psi).ok_or_else(|| LgError::PoleAtRequestedPoint { psi: psi.to_string() })
}
