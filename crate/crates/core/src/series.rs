//! Truncated formal power series over `Q`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{LgError, Result};
use crate::ratfunc::RationalFunction;
use crate::rational::Rational;

/// `sum_{k <= order} c_k t^k`; every coefficient up to `order` is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalPowerSeries {
    coeffs: Vec<Rational>,
}

impl FormalPowerSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        FormalPowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// The variable `t`.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    fn common(&self, o: &Self) -> usize {
        self.order().min(o.order())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.common(o);
        Self::new((0..=n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect(), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.common(o);
        Self::new((0..=n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect(), n)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormalPowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.common(o);
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        FormalPowerSeries { coeffs: out }
    }

    /// `self / o`; `o` must have a nonzero constant term.
    pub fn div(&self, o: &Self) -> Result<Self> {
        let c0 = &o.coeffs[0];
        if c0.is_zero() {
            return Err(LgError::DivisionByNonUnit);
        }
        let inv0 = c0.recip();
        let n = self.common(o);
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut s = self.coeffs[k].clone();
            for j in 1..=k {
                if !o.coeffs[j].is_zero() {
                    s -= &o.coeffs[j] * &q[k - j];
                }
            }
            q.push(s * &inv0);
        }
        Ok(FormalPowerSeries { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..=n).map(|k| &self.coeffs[k] * Rational::from_integer(k.into())).collect();
        // the top coefficient of the derivative is unknown, so the order drops
        Self::new(coeffs, n.saturating_sub(1))
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(LgError::CompositionNotDefined);
        }
        let n = self.common(inner);
        // Horner: a_0 + g (a_1 + g (a_2 + ...)), exact to order n since g = O(t)
        let g = inner.truncate(n);
        let mut acc = Self::zero(n);
        for k in (0..=n).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse: `self(revert(t)) = t`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(LgError::ReversionNotDefined);
        }
        let n = self.order();
        let inv1 = self.coeffs[1].recip();
        let mut g = Self::new(vec![Rational::zero(), inv1.clone()], n);
        // fix one coefficient at a time; [t^k] self(g) is linear in g_k with slope a_1
        for k in 2..=n {
            let trial = self.truncate(k).compose(&g.truncate(k))?;
            let err = trial.coeffs[k].clone();
            g.coeffs[k] = -err * &inv1;
        }
        Ok(g)
    }

    /// Taylor expansion at 0 of a rational function without a pole there.
    pub fn from_rational_function(f: &RationalFunction, order: usize) -> Result<Self> {
        let num = Self::new(f.numerator().coeffs().to_vec(), order);
        let den = Self::new(f.denominator().coeffs().to_vec(), order);
        num.div(&den)
    }

    /// Exponents with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }
}

impl fmt::Display for FormalPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
