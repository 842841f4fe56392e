//! Quotients `N / Π (z^a − 1)` with the denominator kept in factored form.
//!
//! Nothing here ever reduces to lowest terms. Sums are formed over the least
//! common multiset of denominator factors, and equality/constancy questions
//! are answered by clearing denominators and testing an exact [`LaurentZ`]
//! identity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{LaurentZ, PolyXY, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFraction {
    numerator: LaurentZ,
    /// Sorted ascending; every entry is positive.
    denominator: Vec<i64>,
}

impl FactoredFraction {
    pub fn new(numerator: LaurentZ, mut denominator: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = denominator.iter().find(|&&a| a <= 0) {
            return Err(Error::InvalidDenominator(bad));
        }
        denominator.sort_unstable();
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentZ::zero())
    }

    pub fn from_laurent(numerator: LaurentZ) -> Self {
        Self {
            numerator,
            denominator: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &LaurentZ {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i64] {
        &self.denominator
    }

    /// `Π (z^a − 1)` expanded as a Laurent polynomial.
    pub fn expanded_denominator(&self) -> LaurentZ {
        expand_factors(&self.denominator)
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&other.denominator);
        den.sort_unstable();
        Self {
            numerator: &self.numerator * &other.numerator,
            denominator: den,
        }
    }

    /// Rewrites the fraction over the larger denominator `target`, which must
    /// contain `self.denominator` as a sub-multiset.
    fn lift_to(&self, target: &[i64]) -> LaurentZ {
        let extra = multiset_difference(target, &self.denominator);
        if extra.is_empty() {
            self.numerator.clone()
        } else {
            &self.numerator * &expand_factors(&extra)
        }
    }

    /// Applies `f` to the numerator and keeps the denominator.
    pub fn map_numerator(&self, f: impl FnOnce(&LaurentZ) -> LaurentZ) -> Self {
        Self {
            numerator: f(&self.numerator),
            denominator: self.denominator.clone(),
        }
    }

    /// Substitutes numeric `x`, `y`.
    pub fn specialize(&self, x0: &Rational, y0: &Rational) -> Self {
        self.map_numerator(|n| n.specialize(x0, y0))
    }

    /// Substitutes `x ↦ −z^a`, `y ↦ 1`.
    pub fn substitute_x_pow(&self, a: i64) -> Self {
        self.map_numerator(|n| n.substitute_x_pow(a))
    }

    /// Evaluates at numbers; `z0` must not be a root of any denominator factor.
    pub fn eval(&self, x0: &Rational, y0: &Rational, z0: &Rational) -> Rational {
        self.numerator.eval(x0, y0, z0) / self.expanded_denominator().eval(x0, y0, z0)
    }

    /// `N − c · D`, zero exactly when the fraction equals the constant `c`.
    pub fn defect_against(&self, c: &PolyXY) -> LaurentZ {
        &self.numerator - &self.expanded_denominator().scale(c)
    }
}

/// `Π_{a ∈ factors} (z^a − 1)`.
pub fn expand_factors(factors: &[i64]) -> LaurentZ {
    factors.iter().fold(LaurentZ::one(), |acc, &a| {
        &acc * &LaurentZ::z_pow_minus_one(a)
    })
}

fn counts(xs: &[i64]) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for &x in xs {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// Least multiset containing both arguments.
fn multiset_union(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut ca = counts(a);
    for (x, k) in counts(b) {
        let e = ca.entry(x).or_insert(0);
        *e = (*e).max(k);
    }
    ca.into_iter()
        .flat_map(|(x, k)| std::iter::repeat_n(x, k))
        .collect()
}

fn multiset_difference(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut ca = counts(a);
    for x in b {
        if let Some(k) = ca.get_mut(x) {
            *k = k.saturating_sub(1);
        }
    }
    ca.into_iter()
        .flat_map(|(x, k)| std::iter::repeat_n(x, k))
        .collect()
}

/// Exact sum over the least common denominator multiset.
pub fn fraction_add(a: &FactoredFraction, b: &FactoredFraction) -> FactoredFraction {
    if a.numerator.is_zero() && b.numerator.is_zero() {
        return FactoredFraction::zero();
    }
    if b.numerator.is_zero() {
        return a.clone();
    }
    if a.numerator.is_zero() {
        return b.clone();
    }
    let den = multiset_union(&a.denominator, &b.denominator);
    let numerator = &a.lift_to(&den) + &b.lift_to(&den);
    FactoredFraction {
        numerator,
        denominator: den,
    }
}

/// Returns the constant `C` when `N = C · Π (z^a − 1)` identically.
///
/// The candidate is the ratio of the top `z`-coefficients of `N` and the
/// expanded denominator, and is then confirmed by an exact identity test.
pub fn fraction_is_constant(f: &FactoredFraction) -> Option<PolyXY> {
    if f.numerator.is_zero() {
        return Some(PolyXY::zero());
    }
    let d = f.expanded_denominator();
    let (ne, ntop) = f.numerator.top()?;
    let (de, dtop) = d.top()?;
    if ne != de {
        return None;
    }
    let c = ntop.div_exact(dtop)?;
    if f.defect_against(&c).is_zero() {
        Some(c)
    } else {
        None
    }
}
