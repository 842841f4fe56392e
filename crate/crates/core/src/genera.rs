//! Fixed-point data and the `z`-domain rigidity identity for the `T_{x,y}`
//! genus.
//!
//! With `z = e^{(x+y)u}` the equivariant genus of data `{w_ij, ε_i}` is
//!
//! ```text
//!   Σ_i ε_i Π_j (x z^{w_ij} + y) / (z^{w_ij} − 1)
//! ```
//!
//! and rigidity means this rational function of `z` is the constant
//! `Σ_i ε_i x^{s_i^+} (−y)^{s_i^-}`. Every decision here is made by clearing
//! denominators and testing an exact Laurent polynomial identity.

use std::fmt;

use num::integer::gcd;

use crate::algebra::{
    fraction_add, fraction_is_constant, FactoredFraction, LaurentZ, PolyXY, Rational,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_int(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidSign(v)),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Tangent weights and orientation sign at one isolated fixed point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedPoint {
    pub weights: Vec<i64>,
    pub sign: Sign,
}

impl FixedPoint {
    pub fn new(weights: Vec<i64>, sign: Sign) -> Self {
        Self { weights, sign }
    }

    pub fn s_plus(&self) -> u32 {
        self.weights.iter().filter(|&&w| w > 0).count() as u32
    }

    pub fn s_minus(&self) -> u32 {
        self.weights.iter().filter(|&&w| w < 0).count() as u32
    }

    pub fn negated(&self) -> Self {
        Self {
            weights: self.weights.iter().map(|w| -w).collect(),
            sign: self.sign,
        }
    }
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({}; {})", ws.join(","), self.sign)
    }
}

/// `m` isolated fixed points of a `2n`-dimensional circle action.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedPointData {
    n: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    pub fn new(n: usize, points: Vec<FixedPoint>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if points.is_empty() {
            return Err(Error::NoPoints);
        }
        for (pi, p) in points.iter().enumerate() {
            if p.weights.len() != n {
                return Err(Error::WeightCount {
                    point: pi,
                    expected: n,
                    found: p.weights.len(),
                });
            }
            if let Some(wi) = p.weights.iter().position(|&w| w == 0) {
                return Err(Error::ZeroWeight {
                    point: pi,
                    index: wi,
                });
            }
        }
        Ok(Self { n, points })
    }

    /// Convenience constructor from `(weights, sign)` pairs with integer signs.
    pub fn from_pairs(points: &[(&[i64], i64)]) -> Result<Self> {
        let n = points.first().map(|p| p.0.len()).unwrap_or(0);
        let pts = points
            .iter()
            .map(|(w, s)| Ok(FixedPoint::new(w.to_vec(), Sign::from_int(*s)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, pts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<FixedPoint> {
        self.points
    }

    /// Every weight of every point negated.
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            points: self.points.iter().map(FixedPoint::negated).collect(),
        }
    }

    /// Every weight multiplied by `t`.
    pub fn scaled(&self, t: i64) -> Self {
        assert!(t > 0, "scale factor must be positive");
        Self {
            n: self.n,
            points: self
                .points
                .iter()
                .map(|p| FixedPoint::new(p.weights.iter().map(|w| w * t).collect(), p.sign))
                .collect(),
        }
    }

    /// gcd of all `|w_ij|`; 1 for effective data.
    pub fn weight_gcd(&self) -> u64 {
        self.points
            .iter()
            .flat_map(|p| p.weights.iter())
            .fold(0i64, |g, &w| gcd(g, w))
            .unsigned_abs()
    }
}

impl fmt::Display for FixedPointData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        f.write_str(&ps.join(", "))
    }
}

/// Outcome of the exact rigidity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub rigid: bool,
    pub constant: Option<PolyXY>,
    /// `N − C·D` after clearing denominators; zero iff rigid.
    pub defect: LaurentZ,
    pub ah_constant: PolyXY,
    pub limits_symmetric: bool,
    pub weight_gcd: u64,
}

fn factor_numerator(w: i64) -> LaurentZ {
    if w > 0 {
        &LaurentZ::term(PolyXY::x(), w) + &LaurentZ::term(PolyXY::y(), 0)
    } else {
        // (x z^{-a} + y)/(z^{-a} - 1) = -(x + y z^a)/(z^a - 1)
        let a = -w;
        -&(&LaurentZ::term(PolyXY::x(), 0) + &LaurentZ::term(PolyXY::y(), a))
    }
}

/// `ε_p Π_j (x z^{w} + y)/(z^{w} − 1)` with every denominator factor written
/// as `z^{|w|} − 1`.
pub fn point_term(p: &FixedPoint) -> FactoredFraction {
    let mut num = LaurentZ::constant(PolyXY::from_int(p.sign.value()));
    for &w in &p.weights {
        num = &num * &factor_numerator(w);
    }
    let den = p.weights.iter().map(|w| w.abs()).collect();
    FactoredFraction::new(num, den).expect("weights are nonzero")
}

/// Left side of the rigidity identity as a single factored fraction.
pub fn rigidity_sum(d: &FixedPointData) -> FactoredFraction {
    d.points
        .iter()
        .map(point_term)
        .fold(FactoredFraction::zero(), |acc, t| fraction_add(&acc, &t))
}

fn signed_monomial(sign: Sign, x_exp: u32, neg_y_exp: u32) -> PolyXY {
    let s = if neg_y_exp.is_multiple_of(2) { sign.value() } else { -sign.value() };
    PolyXY::monomial(Rational::from_integer(s.into()), x_exp, neg_y_exp)
}

/// `Σ_i ε_i x^{s_i^+} (−y)^{s_i^-}`.
pub fn ah_constant(d: &FixedPointData) -> PolyXY {
    let mut out = PolyXY::zero();
    for p in &d.points {
        out += &signed_monomial(p.sign, p.s_plus(), p.s_minus());
    }
    out
}

/// `Σ_i ε_i x^{s_i^-} (−y)^{s_i^+}`, the `z → 0` limit of the rigidity sum.
pub fn ah_constant_swapped(d: &FixedPointData) -> PolyXY {
    let mut out = PolyXY::zero();
    for p in &d.points {
        out += &signed_monomial(p.sign, p.s_minus(), p.s_plus());
    }
    out
}

pub fn rigidity_defect(d: &FixedPointData) -> LaurentZ {
    rigidity_sum(d).defect_against(&ah_constant(d))
}

/// The `z → ∞` and `z → 0` limits of the rigidity sum agree.
pub fn limit_symmetry(d: &FixedPointData) -> bool {
    ah_constant(d) == ah_constant_swapped(d)
}

pub fn is_rigid(d: &FixedPointData) -> GenusReport {
    let ah = ah_constant(d);
    let defect = rigidity_sum(d).defect_against(&ah);
    let rigid = defect.is_zero();
    GenusReport {
        rigid,
        constant: rigid.then(|| ah.clone()),
        defect,
        limits_symmetric: limit_symmetry(d),
        ah_constant: ah,
        weight_gcd: d.weight_gcd(),
    }
}

/// Constant value of the rigidity sum if it has one, found without reference
/// to the fixed-point formula.
pub fn sum_constant(d: &FixedPointData) -> Option<PolyXY> {
    fraction_is_constant(&rigidity_sum(d))
}

/// Substitutes numeric `x`, `y` into a fraction.
pub fn specialize(f: &FactoredFraction, x0: &Rational, y0: &Rational) -> FactoredFraction {
    f.specialize(x0, y0)
}

/// Substitutes `x ↦ −z^a`, `y ↦ 1`.
pub fn substitute_x_pow(f: &FactoredFraction, a: i64) -> Result<FactoredFraction> {
    if a < 1 {
        return Err(Error::InvalidParameter(format!(
            "substitution exponent must be positive, got {a}"
        )));
    }
    Ok(f.substitute_x_pow(a))
}
