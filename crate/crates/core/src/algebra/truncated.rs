//! Truncated Laurent series in `u` over [`PolyXY`].
//!
//! A value is `(x+y)^unit_power · Σ_{k=lowest}^{order-1} c_k u^k + O(u^order)`.
//! The `(x+y)` power lets the characteristic series of the two-parameter
//! genus, whose pole carries a `1/(x+y)`, stay polynomial in every
//! coefficient. The stored form is normalised: `unit_power ≤ 0`, and when it
//! is negative the coefficients are not all divisible by `x + y`.

use std::fmt;

use num::One;

use crate::error::{Error, Result};

use super::{PolyXY, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct SeriesU {
    lowest: i64,
    order: i64,
    unit_power: i64,
    coeffs: Vec<PolyXY>,
}

/// Selector for [`series_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl SeriesU {
    /// Builds `Σ coeffs[k] u^(lowest+k)` truncated at `order`; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn new(lowest: i64, order: i64, mut coeffs: Vec<PolyXY>) -> Result<Self> {
        if lowest > order {
            return Err(Error::InvalidParameter(format!(
                "series lowest exponent {lowest} exceeds order {order}"
            )));
        }
        coeffs.resize((order - lowest) as usize, PolyXY::zero());
        Ok(Self::normalized(lowest, order, 0, coeffs))
    }

    pub fn zero(order: i64) -> Self {
        let lowest = order.min(0);
        Self::normalized(lowest, order, 0, vec![PolyXY::zero(); (order - lowest) as usize])
    }

    /// The constant `c + O(u^order)`.
    pub fn constant(c: PolyXY, order: i64) -> Result<Self> {
        Self::new(0, order, vec![c])
    }

    /// `c · u^k + O(u^order)`.
    pub fn monomial(c: PolyXY, k: i64, order: i64) -> Result<Self> {
        Self::new(k, order, vec![c])
    }

    fn normalized(lowest: i64, order: i64, mut unit_power: i64, mut coeffs: Vec<PolyXY>) -> Self {
        if coeffs.iter().all(PolyXY::is_zero) {
            unit_power = 0;
        }
        if unit_power > 0 {
            let f = PolyXY::x_plus_y().pow(unit_power as u32);
            for c in coeffs.iter_mut() {
                *c = &*c * &f;
            }
            unit_power = 0;
        }
        let s = PolyXY::x_plus_y();
        while unit_power < 0 {
            let divided: Option<Vec<PolyXY>> = coeffs.iter().map(|c| c.div_exact(&s)).collect();
            match divided {
                Some(d) => {
                    coeffs = d;
                    unit_power += 1;
                }
                None => break,
            }
        }
        Self {
            lowest,
            order,
            unit_power,
            coeffs,
        }
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Power of `(x+y)` multiplying every stored coefficient (never positive).
    pub fn unit_power(&self) -> i64 {
        self.unit_power
    }

    /// Stored coefficient of `u^k`, before applying the `(x+y)` power.
    pub fn raw_coeff(&self, k: i64) -> PolyXY {
        if k < self.lowest || k >= self.order {
            return PolyXY::zero();
        }
        self.coeffs[(k - self.lowest) as usize].clone()
    }

    /// Coefficient of `u^k` as `(numerator, e)` meaning `numerator · (x+y)^e`,
    /// with as many `(x+y)` factors cancelled as possible.
    pub fn coeff(&self, k: i64) -> (PolyXY, i64) {
        let mut c = self.raw_coeff(k);
        let mut e = self.unit_power;
        if c.is_zero() {
            return (c, 0);
        }
        let s = PolyXY::x_plus_y();
        while e < 0 {
            match c.div_exact(&s) {
                Some(d) => {
                    c = d;
                    e += 1;
                }
                None => break,
            }
        }
        (c, e)
    }

    /// Coefficient of `u^k` when it is a polynomial in `x`, `y`.
    pub fn poly_coeff(&self, k: i64) -> Option<PolyXY> {
        match self.coeff(k) {
            (c, 0) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(PolyXY::is_zero)
    }

    /// Smallest exponent whose coefficient is nonzero.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| self.lowest + p as i64)
    }

    /// Re-truncates at a lower order.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order).max(self.lowest);
        let coeffs = self.coeffs[..(order - self.lowest) as usize].to_vec();
        Self::normalized(self.lowest, order, self.unit_power, coeffs)
    }

    /// Substitutes `u ↦ w·u`.
    pub fn scale_u(&self, w: i64) -> Self {
        assert!(w != 0, "cannot rescale u by zero");
        let w = Rational::from_integer(w.into());
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(p, c)| {
                let k = self.lowest + p as i64;
                let f = if k >= 0 {
                    num::pow(w.clone(), k as usize)
                } else {
                    Rational::one() / num::pow(w.clone(), (-k) as usize)
                };
                c.scale(&f)
            })
            .collect();
        Self {
            lowest: self.lowest,
            order: self.order,
            unit_power: self.unit_power,
            coeffs,
        }
    }

    pub fn scale(&self, c: &PolyXY) -> Self {
        let coeffs = self.coeffs.iter().map(|v| v * c).collect();
        Self::normalized(self.lowest, self.order, self.unit_power, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            lowest: self.lowest,
            order: self.order,
            unit_power: self.unit_power,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let lowest = self.lowest.min(other.lowest);
        let order = self.order.min(other.order);
        let lowest = lowest.min(order);
        let up = self.unit_power.min(other.unit_power);
        let s = PolyXY::x_plus_y();
        let lift_a = s.pow((self.unit_power - up) as u32);
        let lift_b = s.pow((other.unit_power - up) as u32);
        let mut coeffs = Vec::with_capacity((order - lowest) as usize);
        for k in lowest..order {
            let a = self.raw_coeff(k);
            let b = other.raw_coeff(k);
            let a = if a.is_zero() { a } else { &a * &lift_a };
            let b = if b.is_zero() { b } else { &b * &lift_b };
            coeffs.push(if negate { &a - &b } else { &a + &b });
        }
        Self::normalized(lowest, order, up, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }

    /// Product; the result is known up to `min(order_a + lowest_b, order_b + lowest_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        let lowest = self.lowest + other.lowest;
        let order = (self.order + other.lowest).min(other.order + self.lowest);
        let len = (order - lowest).max(0) as usize;
        let mut coeffs = vec![PolyXY::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Self::normalized(lowest, order.max(lowest), self.unit_power + other.unit_power, coeffs)
    }

    /// Quotient `self / divisor`.
    ///
    /// The divisor's lowest nonzero coefficient must be a nonzero rational
    /// multiple of `(x+y)^k`, and its other coefficients must be exactly
    /// divisible by that leading coefficient.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor
            .valuation()
            .ok_or_else(|| Error::UnsupportedDivision("divisor has no nonzero retained coefficient".into()))?;
        let c0 = divisor.raw_coeff(lead);
        let (r, k) = split_unit(&c0).ok_or_else(|| {
            Error::UnsupportedDivision(format!(
                "leading coefficient {c0} is not a rational multiple of a power of (x+y)"
            ))
        })?;
        let unit_k = PolyXY::x_plus_y().pow(k);
        let rinv = Rational::one() / r;
        let rel = (divisor.order - lead).min(self.order - self.lowest);
        // divisor = c0 · u^lead · (1 + β_1 u + β_2 u² + …)
        let mut beta = Vec::with_capacity(rel as usize);
        for p in 0..rel {
            let c = divisor.raw_coeff(lead + p);
            let q = c.div_exact(&unit_k).ok_or_else(|| {
                Error::UnsupportedDivision(format!(
                    "divisor coefficient {c} is not divisible by the leading coefficient {c0}"
                ))
            })?;
            beta.push(q.scale(&rinv));
        }
        let mut inv: Vec<PolyXY> = Vec::with_capacity(rel as usize);
        for p in 0..rel as usize {
            if p == 0 {
                inv.push(PolyXY::one());
                continue;
            }
            let mut acc = PolyXY::zero();
            for i in 1..=p {
                if !beta[i].is_zero() && !inv[p - i].is_zero() {
                    acc -= &(&beta[i] * &inv[p - i]);
                }
            }
            inv.push(acc);
        }
        let lowest = self.lowest - lead;
        let order = lowest + rel;
        let mut coeffs = vec![PolyXY::zero(); rel as usize];
        for (i, a) in self.coeffs.iter().enumerate().take(rel as usize) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inv.iter().enumerate() {
                if i + j >= rel as usize {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        for c in coeffs.iter_mut() {
            *c = c.scale(&rinv);
        }
        Ok(Self::normalized(
            lowest,
            order,
            self.unit_power - divisor.unit_power - k as i64,
            coeffs,
        ))
    }
}

/// Writes `c = r · (x+y)^k` when possible.
fn split_unit(c: &PolyXY) -> Option<(Rational, u32)> {
    if c.is_zero() {
        return None;
    }
    let s = PolyXY::x_plus_y();
    let mut rest = c.clone();
    let mut k = 0;
    loop {
        if let Some(r) = rest.as_constant() {
            return Some((r, k));
        }
        rest = rest.div_exact(&s)?;
        k += 1;
    }
}

pub fn series_arith(a: &SeriesU, b: &SeriesU, op: SeriesOp) -> Result<SeriesU> {
    Ok(match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b)?,
    })
}

/// `exp(c·u) = Σ_{k<order} c^k/k! · u^k`.
pub fn series_exp(c: &PolyXY, order: i64) -> Result<SeriesU> {
    if order < 1 {
        return Err(Error::InvalidParameter(format!(
            "series order must be at least 1, got {order}"
        )));
    }
    let mut coeffs = Vec::with_capacity(order as usize);
    let mut term = PolyXY::one();
    for k in 0..order {
        if k > 0 {
            term = (&term * c).scale(&(Rational::one() / Rational::from_integer(k.into())));
        }
        coeffs.push(term.clone());
    }
    SeriesU::new(0, order, coeffs)
}

impl fmt::Display for SeriesU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for k in self.lowest..self.order {
            let (c, e) = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let unit = if e == 0 {
                String::new()
            } else {
                format!("/(x + y)^{}", -e)
            };
            parts.push(format!("({c}){unit}*u^{k}"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(u^{})", parts.join(" + "), self.order)
    }
}

impl fmt::Debug for SeriesU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeriesU({self})")
    }
}
