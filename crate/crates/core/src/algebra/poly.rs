//! Sparse polynomials in the two formal variables `x` and `y` over ℚ.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Signed, Zero};

use super::Rational;

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Monomial = (u32, u32);

/// A polynomial in `x`, `y` with rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent pair, so iteration is in
/// lexicographic `(i, j)` order and two equal polynomials always have equal
/// term maps. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyXY {
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyXY {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `c · x^i · y^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(i, j, c)` triples, summing duplicates.
    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = Self::zero();
        for (i, j, c) in it {
            p.add_term((i, j), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `((i, j), coefficient)` in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Returns the rational value if the polynomial has no `x`/`y` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Maximum total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// True when every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|&(i, j)| i + j == d)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&m, v)| (m, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c · x^i y^j`.
    pub fn mul_monomial(&self, c: &Rational, i: u32, j: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + i, b + j), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `x + y`, the unit tracked symbolically by the series back-end.
    pub fn x_plus_y() -> Self {
        &Self::x() + &Self::y()
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Evaluates at rational `x0`, `y0`.
    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow_rat(x0, i) * pow_rat(y0, j);
        }
        acc
    }

    /// Exact division. Returns `None` unless `self = q · d` for a polynomial `q`.
    ///
    /// Single-term divisors are handled directly; anything else runs sparse
    /// division with respect to the lexicographic order `x > y`, which has a
    /// zero remainder exactly when `d` divides `self`.
    pub fn div_exact(&self, d: &PolyXY) -> Option<PolyXY> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (&(di, dj), dc) = d.terms.iter().next().unwrap();
            let mut q = BTreeMap::new();
            for (&(i, j), c) in &self.terms {
                if i < di || j < dj {
                    return None;
                }
                q.insert((i - di, j - dj), c / dc);
            }
            return Some(Self { terms: q });
        }
        let (&(di, dj), dc) = d.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(ri, rj), rc)) = rem.terms.iter().next_back() {
            if ri < di || rj < dj {
                return None;
            }
            let c = rc / dc;
            let (qi, qj) = (ri - di, rj - dj);
            rem -= &d.mul_monomial(&c, qi, qj);
            quot.add_term((qi, qj), c);
        }
        Some(quot)
    }
}

fn pow_rat(r: &Rational, e: u32) -> Rational {
    num::pow(r.clone(), e as usize)
}

impl fmt::Display for PolyXY {
    /// Human-readable form, highest `x`-degree first, e.g. `-x^2*y + x*y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                parts.push(abs.to_string());
            }
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyXY({self})")
    }
}

impl AddAssign<&PolyXY> for PolyXY {
    fn add_assign(&mut self, rhs: &PolyXY) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, c.clone());
        }
    }
}

impl SubAssign<&PolyXY> for PolyXY {
    fn sub_assign(&mut self, rhs: &PolyXY) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, -c.clone());
        }
    }
}

impl Add for &PolyXY {
    type Output = PolyXY;
    fn add(self, rhs: &PolyXY) -> PolyXY {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &PolyXY {
    type Output = PolyXY;
    fn sub(self, rhs: &PolyXY) -> PolyXY {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &PolyXY {
    type Output = PolyXY;
    fn mul(self, rhs: &PolyXY) -> PolyXY {
        let mut out = PolyXY::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &PolyXY {
    type Output = PolyXY;
    fn neg(self) -> PolyXY {
        PolyXY {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyXY {
            type Output = PolyXY;
            fn $m(self, rhs: PolyXY) -> PolyXY {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PolyXY {
    type Output = PolyXY;
    fn neg(self) -> PolyXY {
        -&self
    }
}

/// Binary operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &PolyXY, b: &PolyXY, op: RingOp) -> PolyXY {
    match op {
        RingOp::Add => a + b,
        RingOp::Sub => a - b,
        RingOp::Mul => a * b,
    }
}
