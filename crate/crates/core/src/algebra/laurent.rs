//! Laurent polynomials in `z` with [`PolyXY`] coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::poly::RingOp;
use super::{PolyXY, Rational};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentZ {
    terms: BTreeMap<i64, PolyXY>,
}

impl LaurentZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(PolyXY::one())
    }

    pub fn constant(c: PolyXY) -> Self {
        Self::term(c, 0)
    }

    /// `c · z^e`.
    pub fn term(c: PolyXY, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `z^a − 1`.
    pub fn z_pow_minus_one(a: i64) -> Self {
        let mut out = Self::term(PolyXY::one(), a);
        out.add_term(0, &PolyXY::from_int(-1));
        out
    }

    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, PolyXY)>,
    {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero `z`-terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &PolyXY)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> PolyXY {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Highest `z`-exponent with its coefficient.
    pub fn top(&self) -> Option<(i64, &PolyXY)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn bottom(&self) -> Option<(i64, &PolyXY)> {
        self.terms.iter().next().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, e: i64, c: &PolyXY) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_owned(&mut self, e: i64, c: PolyXY) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &PolyXY) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (&e, v) in &self.terms {
            out.add_owned(e, v * c);
        }
        out
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Substitutes `z ↦ z^t`.
    pub fn stretch(&self, t: i64) -> Self {
        assert!(t > 0, "stretch factor must be positive");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * t, c.clone())).collect(),
        }
    }

    /// Substitutes numeric `x`, `y`; every coefficient becomes a constant.
    pub fn specialize(&self, x0: &Rational, y0: &Rational) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, &PolyXY::constant(c.eval(x0, y0)));
        }
        out
    }

    /// Substitutes `x ↦ −z^a`, `y ↦ 1`.
    pub fn substitute_x_pow(&self, a: i64) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out += &poly_at_x_pow(c, a).shift(e);
        }
        out
    }

    /// Evaluates at numeric `x`, `y`, `z` (`z` must be nonzero).
    pub fn eval(&self, x0: &Rational, y0: &Rational, z0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            acc += c.eval(x0, y0) * pow_int(z0, e);
        }
        acc
    }
}

/// The image of a [`PolyXY`] under `x ↦ −z^a`, `y ↦ 1`.
pub fn poly_at_x_pow(p: &PolyXY, a: i64) -> LaurentZ {
    let mut out = LaurentZ::zero();
    for (&(i, _), c) in p.terms() {
        let c = if i % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(a * i as i64, &PolyXY::constant(c));
    }
    out
}

fn pow_int(z: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num::pow(z.clone(), e as usize)
    } else {
        Rational::one() / num::pow(z.clone(), (-e) as usize)
    }
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, c)| match e {
                0 => format!("({c})"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentZ({self})")
    }
}

impl AddAssign<&LaurentZ> for LaurentZ {
    fn add_assign(&mut self, rhs: &LaurentZ) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentZ> for LaurentZ {
    fn sub_assign(&mut self, rhs: &LaurentZ) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl Add for &LaurentZ {
    type Output = LaurentZ;
    fn add(self, rhs: &LaurentZ) -> LaurentZ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentZ {
    type Output = LaurentZ;
    fn sub(self, rhs: &LaurentZ) -> LaurentZ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentZ {
    type Output = LaurentZ;
    fn mul(self, rhs: &LaurentZ) -> LaurentZ {
        let mut out = LaurentZ::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_owned(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentZ {
    type Output = LaurentZ;
    fn neg(self) -> LaurentZ {
        LaurentZ {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

pub fn laurent_arith(a: &LaurentZ, b: &LaurentZ, op: RingOp) -> LaurentZ {
    match op {
        RingOp::Add => a + b,
        RingOp::Sub => a - b,
        RingOp::Mul => a * b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt(c: PolyXY, e: i64) -> LaurentZ {
        LaurentZ::term(c, e)
    }

    #[test]
    fn exponent_shift() {
        let a = &zt(PolyXY::x(), 1) + &zt(PolyXY::y(), 0);
        let b = zt(PolyXY::one(), -1);
        let want = &zt(PolyXY::x(), 0) + &zt(PolyXY::y(), -1);
        assert_eq!(laurent_arith(&a, &b, RingOp::Mul), want);
    }

    #[test]
    fn z_minus_one_times_inverse() {
        let got = &LaurentZ::z_pow_minus_one(1) * &zt(PolyXY::one(), -1);
        let want = &LaurentZ::one() - &zt(PolyXY::one(), -1);
        assert_eq!(got, want);
    }

    #[test]
    fn cancellation_is_empty() {
        let a = &zt(PolyXY::x(), 1) + &zt(PolyXY::y(), 0);
        let d = laurent_arith(&a, &a, RingOp::Sub);
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn substitute_x_pow_on_factor() {
        // x z^b + y at x = -z^a, y = 1 is 1 - z^(a+b).
        let (a, b) = (3, 2);
        let f = &zt(PolyXY::x(), b) + &zt(PolyXY::y(), 0);
        let want = &LaurentZ::one() - &zt(PolyXY::one(), a + b);
        assert_eq!(f.substitute_x_pow(a), want);
        // x + y z^b becomes z^b - z^a.
        let g = &zt(PolyXY::x(), 0) + &zt(PolyXY::y(), b);
        let want = &zt(PolyXY::one(), b) - &zt(PolyXY::one(), a);
        assert_eq!(g.substitute_x_pow(a), want);
    }
}
