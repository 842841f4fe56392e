//! The three known two-point weight families and the classification of
//! rigid two-point data.
//!
//! - Z: both points carry the same weights `a_1, …, a_n` with opposite signs.
//! - L₁: `n = 1`, weights `a` and `−a` (`a > 0`) with equal signs.
//! - S₃: `n = 3`, weights `(a, b, −(a+b))` and `(−a, −b, a+b)` with equal signs.
//!
//! [`replay_proof`] walks the argument that rigid two-point data outside Z
//! must be L₁ or S₃: antipodal pairing of weights, the `y = 0` balance
//! `Σa = Σb`, the substitution `x = −z^a, y = 1` giving `k·a = Σb`, and the
//! final `k = 1, ℓ = 2, a = b_1 + b_2`.

use std::cmp::Reverse;
use std::fmt;

use crate::algebra::{poly_at_x_pow, rat, PolyXY};
use crate::error::{Error, Result};
use crate::genera::{ah_constant, is_rigid, rigidity_sum, FixedPoint, FixedPointData, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Z(Vec<i64>),
    L1(i64),
    S3(i64, i64),
    NotRigid,
    /// Rigid data outside Z, L₁ and S₃. Never expected for two points.
    RigidUnclassified,
}

impl FamilyTag {
    pub fn is_family(&self) -> bool {
        matches!(self, FamilyTag::Z(_) | FamilyTag::L1(_) | FamilyTag::S3(..))
    }

    /// Short family name: `Z`, `L1`, `S3`, `NotRigid` or `RigidUnclassified`.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::Z(_) => "Z",
            FamilyTag::L1(_) => "L1",
            FamilyTag::S3(..) => "S3",
            FamilyTag::NotRigid => "NotRigid",
            FamilyTag::RigidUnclassified => "RigidUnclassified",
        }
    }

    /// Family parameters (empty for the non-family tags).
    pub fn params(&self) -> Vec<i64> {
        match self {
            FamilyTag::Z(a) => a.clone(),
            FamilyTag::L1(a) => vec![*a],
            FamilyTag::S3(a, b) => vec![*a, *b],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::NotRigid | FamilyTag::RigidUnclassified => f.write_str(self.name()),
            _ => {
                let ps: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
                write!(f, "{}({})", self.name(), ps.join(","))
            }
        }
    }
}

pub fn make_z(a: &[i64]) -> Result<FixedPointData> {
    FixedPointData::new(
        a.len(),
        vec![
            FixedPoint::new(a.to_vec(), Sign::Plus),
            FixedPoint::new(a.to_vec(), Sign::Minus),
        ],
    )
}

pub fn make_l1(a: i64) -> Result<FixedPointData> {
    if a <= 0 {
        return Err(Error::InvalidParameter(format!("L1 needs a > 0, got {a}")));
    }
    FixedPointData::new(
        1,
        vec![
            FixedPoint::new(vec![a], Sign::Plus),
            FixedPoint::new(vec![-a], Sign::Plus),
        ],
    )
}

pub fn make_s3(a: i64, b: i64) -> Result<FixedPointData> {
    if a <= 0 || b <= 0 {
        return Err(Error::InvalidParameter(format!(
            "S3 needs a, b > 0, got ({a}, {b})"
        )));
    }
    FixedPointData::new(
        3,
        vec![
            FixedPoint::new(vec![a, b, -(a + b)], Sign::Plus),
            FixedPoint::new(vec![-a, -b, a + b], Sign::Plus),
        ],
    )
}

fn require_two(d: &FixedPointData) -> Result<(&FixedPoint, &FixedPoint)> {
    match d.points() {
        [p, q] => Ok((p, q)),
        _ => Err(Error::PointCount {
            expected: 2,
            found: d.m(),
        }),
    }
}

fn sorted(ws: &[i64]) -> Vec<i64> {
    let mut v = ws.to_vec();
    v.sort_unstable();
    v
}

fn match_z(p: &FixedPoint, q: &FixedPoint) -> Option<FamilyTag> {
    if p.sign == q.sign || sorted(&p.weights) != sorted(&q.weights) {
        return None;
    }
    let plus = if p.sign == Sign::Plus { p } else { q };
    Some(FamilyTag::Z(plus.weights.clone()))
}

fn match_l1(p: &FixedPoint, q: &FixedPoint) -> Option<FamilyTag> {
    if p.sign != q.sign || p.weights.len() != 1 {
        return None;
    }
    let (w, v) = (p.weights[0], q.weights[0]);
    (w == -v).then(|| FamilyTag::L1(w.abs()))
}

fn match_s3(p: &FixedPoint, q: &FixedPoint) -> Option<FamilyTag> {
    if p.sign != q.sign || p.weights.len() != 3 {
        return None;
    }
    let (head, other) = if p.s_plus() == 2 { (p, q) } else { (q, p) };
    let pos: Vec<i64> = head.weights.iter().copied().filter(|&w| w > 0).collect();
    let neg: Vec<i64> = head.weights.iter().copied().filter(|&w| w < 0).collect();
    if pos.len() != 2 || neg.len() != 1 {
        return None;
    }
    let (a, b) = (pos[0], pos[1]);
    if neg[0] != -(a + b) {
        return None;
    }
    let mirrored: Vec<i64> = head.weights.iter().map(|w| -w).collect();
    (sorted(&other.weights) == sorted(&mirrored)).then_some(FamilyTag::S3(a, b))
}

/// Exact family membership of two-point data, falling back to the rigidity
/// test when no family matches.
pub fn classify_two_points(d: &FixedPointData) -> Result<FamilyTag> {
    let (p, q) = require_two(d)?;
    if let Some(tag) = match_z(p, q)
        .or_else(|| match_l1(p, q))
        .or_else(|| match_s3(p, q))
    {
        return Ok(tag);
    }
    Ok(if is_rigid(d).rigid {
        FamilyTag::RigidUnclassified
    } else {
        FamilyTag::NotRigid
    })
}

/// `{|w_1i|} = {|w_2i|}` as multisets.
pub fn pairing_check(d: &FixedPointData) -> Result<bool> {
    let (p, q) = require_two(d)?;
    let abs = |f: &FixedPoint| sorted(&f.weights.iter().map(|w| w.abs()).collect::<Vec<_>>());
    Ok(abs(p) == abs(q))
}

/// Pairs the weights of the two points by absolute value, preferring
/// opposite-sign partners among equal absolute values. Returns `None` when
/// the absolute-value multisets differ.
pub fn matched_pairing(d: &FixedPointData) -> Result<Option<Vec<(i64, i64)>>> {
    if !pairing_check(d)? {
        return Ok(None);
    }
    let (p, q) = require_two(d)?;
    let mut left = p.weights.clone();
    let mut right = q.weights.clone();
    left.sort_unstable_by_key(|w| (Reverse(w.abs()), Reverse(*w)));
    right.sort_unstable_by_key(|w| (Reverse(w.abs()), *w));
    // Within a block of equal |w|, `left` lists positives first and `right`
    // negatives first, so zipping pairs opposite signs as often as possible.
    Ok(Some(left.into_iter().zip(right).collect()))
}

/// Positive weights of the oriented first point (`a`-list) and absolute
/// values of its negative weights (`b`-list), both sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub k: usize,
    pub l: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Partition {
    fn of(p: &FixedPoint) -> Self {
        let mut a: Vec<i64> = p.weights.iter().copied().filter(|&w| w > 0).collect();
        let mut b: Vec<i64> = p.weights.iter().filter(|&&w| w < 0).map(|w| -w).collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        Self {
            k: a.len(),
            l: b.len(),
            a,
            b,
        }
    }

    /// The largest weight `a = a_1`.
    pub fn max_a(&self) -> Option<i64> {
        self.a.first().copied()
    }

    pub fn sum_a(&self) -> i64 {
        self.a.iter().sum()
    }

    pub fn sum_b(&self) -> i64 {
        self.b.iter().sum()
    }
}

/// The conclusion `k = 1, ℓ = 2, a = b_1 + b_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conclusion {
    pub k: usize,
    pub l: usize,
    pub a: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    /// `|w_1i| = |w_2i|` after matching.
    pub paired: bool,
    /// The matched pairing satisfies `w_1i = −w_2i` for every `i`.
    pub antipodal: bool,
    /// The points were exchanged so the largest `|w|` is positive at the first.
    pub swapped_points: bool,
    /// The largest `|w|` occurs with both signs at the oriented first point,
    /// so the strict inequality `a_1 > b_j` needed later fails.
    pub max_weight_tie: bool,
    /// `n = 1`: the data is L₁ directly and the remaining steps are skipped.
    pub n1_shortcut: bool,
    pub partition: Partition,
    /// The identity survives the specialisation `y = 0` (forces `Σa = Σb`).
    pub eq6_holds: bool,
    /// The identity survives `x = −z^a, y = 1`.
    pub eq7_holds: bool,
    /// `k·a = Σb`.
    pub eq8_holds: bool,
    pub eq9_conclusion: Option<Conclusion>,
}

/// Replays the classification argument on non-Z two-point data whose weight
/// absolute values pair up.
pub fn replay_proof(d: &FixedPointData) -> Result<ProofTrace> {
    let (p, q) = require_two(d)?;
    let pairs = matched_pairing(d)?
        .ok_or_else(|| Error::NotApplicable("absolute weight multisets differ".into()))?;
    if match_z(p, q).is_some() {
        return Err(Error::NotApplicable("data belongs to family Z".into()));
    }
    let antipodal = pairs.iter().all(|&(w, v)| w == -v);

    let max_abs = p.weights.iter().map(|w| w.abs()).max().unwrap_or(0);
    let swapped_points = !p.weights.contains(&max_abs);
    let first = if swapped_points { q } else { p };
    let partition = Partition::of(first);
    let max_weight_tie =
        partition.a.contains(&max_abs) && partition.b.contains(&max_abs);

    let mut trace = ProofTrace {
        paired: true,
        antipodal,
        swapped_points,
        max_weight_tie,
        n1_shortcut: d.n() == 1,
        partition,
        eq6_holds: false,
        eq7_holds: false,
        eq8_holds: false,
        eq9_conclusion: None,
    };
    if trace.n1_shortcut {
        return Ok(trace);
    }

    let sum = rigidity_sum(d);
    let ah = ah_constant(d);
    let den = sum.expanded_denominator();

    let y0 = sum.specialize(&rat(1), &rat(0));
    let c_y0 = PolyXY::constant(ah.eval(&rat(1), &rat(0)));
    trace.eq6_holds = (y0.numerator() - &den.scale(&c_y0)).is_zero();

    let part = &trace.partition;
    if let Some(a) = part.max_a() {
        let sub = sum.substitute_x_pow(a);
        trace.eq7_holds = sub.numerator() == &(&den * &poly_at_x_pow(&ah, a));
        trace.eq8_holds = part.k as i64 * a == part.sum_b();
        if part.k == 1 && part.l == 2 && a == part.b[0] + part.b[1] {
            trace.eq9_conclusion = Some(Conclusion {
                k: part.k,
                l: part.l,
                a,
            });
        }
    }
    Ok(trace)
}
