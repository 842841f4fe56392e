//! Exhaustive search for rigid fixed-point data within weight bounds.
//!
//! Candidates are enumerated directly in canonical form: weights sorted
//! descending inside each point, points sorted by `(sign, weights)`, and of a
//! datum and its global negation only the lexicographically smaller one is
//! kept. Each candidate then goes through a ladder of cheap necessary
//! conditions before the exact `z`-domain test.

use std::cmp::Ordering;

use num::Zero;
use rayon::prelude::*;

use crate::classify::{classify_two_points, pairing_check, FamilyTag};
use crate::error::{Error, Result};
use crate::genera::{is_rigid, limit_symmetry, FixedPoint, FixedPointData, GenusReport, Sign};
use crate::series::leading_pole_coefficient;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignPatterns {
    All,
    /// Allowed sign multisets; order inside a pattern is ignored.
    Fixed(Vec<Vec<Sign>>),
}

impl SignPatterns {
    fn allows(&self, signs: &[Sign]) -> bool {
        match self {
            SignPatterns::All => true,
            SignPatterns::Fixed(list) => {
                let mut s = signs.to_vec();
                s.sort_unstable();
                list.iter().any(|p| {
                    let mut p = p.clone();
                    p.sort_unstable();
                    p == s
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub n: usize,
    pub m: usize,
    pub max_abs_weight: i64,
    pub sign_patterns: SignPatterns,
    pub require_effective: bool,
    /// Enumerate one representative per canonical class (`true`) or every
    /// ordered tuple of ordered weight vectors (`false`).
    pub dedupe: bool,
}

impl SearchParams {
    pub fn new(n: usize, m: usize, max_abs_weight: i64) -> Self {
        Self {
            n,
            m,
            max_abs_weight,
            sign_patterns: SignPatterns::All,
            require_effective: false,
            dedupe: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::InvalidParameter("n and m must be at least 1".into()));
        }
        if self.max_abs_weight < 0 {
            return Err(Error::InvalidParameter("max weight must be nonnegative".into()));
        }
        if let SignPatterns::Fixed(list) = &self.sign_patterns {
            if let Some(p) = list.iter().find(|p| p.len() != self.m) {
                return Err(Error::InvalidParameter(format!(
                    "sign pattern of length {} does not match m = {}",
                    p.len(),
                    self.m
                )));
            }
        }
        Ok(())
    }
}

fn point_cmp(a: &FixedPoint, b: &FixedPoint) -> Ordering {
    a.sign.cmp(&b.sign).then_with(|| a.weights.cmp(&b.weights))
}

/// Canonical representative under point permutation, within-point weight
/// permutation and global weight negation.
pub fn canonical_form(d: &FixedPointData) -> FixedPointData {
    let sort = |d: &FixedPointData| -> Vec<FixedPoint> {
        let mut pts: Vec<FixedPoint> = d
            .points()
            .iter()
            .map(|p| {
                let mut w = p.weights.clone();
                w.sort_unstable_by(|a, b| b.cmp(a));
                FixedPoint::new(w, p.sign)
            })
            .collect();
        pts.sort_by(point_cmp);
        pts
    };
    let a = sort(d);
    let b = sort(&d.negated());
    let cmp = a
        .iter()
        .zip(&b)
        .map(|(p, q)| point_cmp(p, q))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal);
    let pts = if cmp == Ordering::Greater { b } else { a };
    FixedPointData::new(d.n(), pts).expect("canonical form of valid data")
}

/// Nonincreasing sequences of length `n` over `values` (given descending).
fn descending_multisets(values: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(values: &[i64], start: usize, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            rec(values, i, n, cur, out);
            cur.pop();
        }
    }
    rec(values, 0, n, &mut cur, &mut out);
    out
}

fn all_vectors(values: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// The candidate space for one set of parameters.
pub struct Enumeration {
    params: SearchParams,
    points: Vec<FixedPoint>,
    /// `neg[i]` is the index of point `i` with its weights negated.
    neg: Vec<usize>,
}

impl Enumeration {
    pub fn new(params: &SearchParams) -> Result<Self> {
        params.validate()?;
        let w = params.max_abs_weight;
        let values: Vec<i64> = (1..=w).rev().chain((-w..=-1).rev()).collect();
        let mut points = Vec::new();
        if !values.is_empty() {
            let vecs = if params.dedupe {
                descending_multisets(&values, params.n)
            } else {
                all_vectors(&values, params.n)
            };
            for sign in [Sign::Minus, Sign::Plus] {
                for v in &vecs {
                    points.push(FixedPoint::new(v.clone(), sign));
                }
            }
        }
        points.sort_by(point_cmp);
        let neg = points
            .iter()
            .map(|p| {
                let mut q = p.negated();
                if params.dedupe {
                    q.weights.sort_unstable_by(|a, b| b.cmp(a));
                }
                points
                    .binary_search_by(|r| point_cmp(r, &q))
                    .expect("negation stays in range")
            })
            .collect();
        Ok(Self {
            params: params.clone(),
            points,
            neg,
        })
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Candidates whose first point has index `first`, in enumeration order.
    pub fn shard(&self, first: usize) -> Vec<FixedPointData> {
        let mut out = Vec::new();
        let (m, np) = (self.params.m, self.points.len());
        if first >= np {
            return out;
        }
        let mut idx = vec![if self.params.dedupe { first } else { 0 }; m];
        idx[0] = first;
        loop {
            self.emit(&idx, &mut out);
            // advance positions 1..m
            let mut pos = m;
            loop {
                if pos <= 1 {
                    return out;
                }
                pos -= 1;
                if idx[pos] + 1 < np {
                    idx[pos] += 1;
                    let base = if self.params.dedupe { idx[pos] } else { 0 };
                    for v in idx.iter_mut().skip(pos + 1) {
                        *v = base;
                    }
                    break;
                }
            }
        }
    }

    fn emit(&self, idx: &[usize], out: &mut Vec<FixedPointData>) {
        if self.params.dedupe {
            let mut nidx: Vec<usize> = idx.iter().map(|&i| self.neg[i]).collect();
            nidx.sort_unstable();
            if nidx.as_slice() < idx {
                return;
            }
        }
        let pts: Vec<FixedPoint> = idx.iter().map(|&i| self.points[i].clone()).collect();
        let signs: Vec<Sign> = pts.iter().map(|p| p.sign).collect();
        if !self.params.sign_patterns.allows(&signs) {
            return;
        }
        let d = FixedPointData::new(self.params.n, pts).expect("enumerated data is valid");
        if self.params.require_effective && d.weight_gcd() != 1 {
            return;
        }
        out.push(d);
    }

    pub fn iter(&self) -> impl Iterator<Item = FixedPointData> + '_ {
        (0..self.points.len()).flat_map(move |i| self.shard(i))
    }
}

/// All candidates in deterministic order.
pub fn enumerate(params: &SearchParams) -> Result<Vec<FixedPointData>> {
    Ok(Enumeration::new(params)?.iter().collect())
}

/// First necessary condition for rigidity that fails, cheapest checks first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PruneReason {
    /// `z → 0` and `z → ∞` limits of the rigidity sum differ.
    LimitSymmetry,
    /// Two points whose absolute weight multisets differ.
    Pairing,
    /// The `u^{-n}` coefficient of the genus series is nonzero.
    LeadingPole,
}

pub fn prune_reason(d: &FixedPointData) -> Option<PruneReason> {
    if !limit_symmetry(d) {
        return Some(PruneReason::LimitSymmetry);
    }
    if d.m() == 2 && !pairing_check(d).unwrap_or(true) {
        return Some(PruneReason::Pairing);
    }
    if !leading_pole_coefficient(d).is_zero() {
        return Some(PruneReason::LeadingPole);
    }
    None
}

/// `true` keeps the candidate; `false` means a necessary condition fails.
pub fn prune(d: &FixedPointData) -> bool {
    prune_reason(d).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub data: FixedPointData,
    pub report: GenusReport,
    /// Two-point classification; `None` when `m ≠ 2`.
    pub family: Option<FamilyTag>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchCounts {
    pub candidates: u64,
    pub pruned: u64,
    pub exactly_checked: u64,
    pub rigid: u64,
}

impl SearchCounts {
    fn merge(&mut self, o: &SearchCounts) {
        self.candidates += o.candidates;
        self.pruned += o.pruned;
        self.exactly_checked += o.exactly_checked;
        self.rigid += o.rigid;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub params: SearchParams,
    pub hits: Vec<SearchHit>,
    pub counts: SearchCounts,
}

fn run_shard(e: &Enumeration, first: usize) -> (Vec<SearchHit>, SearchCounts) {
    let mut hits = Vec::new();
    let mut c = SearchCounts::default();
    for d in e.shard(first) {
        c.candidates += 1;
        if !prune(&d) {
            c.pruned += 1;
            continue;
        }
        c.exactly_checked += 1;
        let report = is_rigid(&d);
        if report.rigid {
            c.rigid += 1;
            let family = (d.m() == 2).then(|| classify_two_points(&d).expect("m = 2"));
            hits.push(SearchHit {
                data: d,
                report,
                family,
            });
        }
    }
    (hits, c)
}

/// Runs the search and hands each rigid hit to `sink` in enumeration order
/// as soon as its shard is done.
///
/// `jobs` > 1 evaluates batches of shards (split by first point) on a thread
/// pool; the order of `sink` calls and the counts do not depend on it.
pub fn search_stream<F>(params: &SearchParams, jobs: usize, mut sink: F) -> Result<SearchCounts>
where
    F: FnMut(&SearchHit),
{
    let e = Enumeration::new(params)?;
    let mut counts = SearchCounts::default();
    let mut emit = |(hits, c): (Vec<SearchHit>, SearchCounts)| {
        hits.iter().for_each(&mut sink);
        counts.merge(&c);
    };
    if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|err| Error::InvalidParameter(format!("thread pool: {err}")))?;
        let shards: Vec<usize> = (0..e.point_count()).collect();
        for batch in shards.chunks(jobs * 8) {
            let done: Vec<_> = pool.install(|| batch.par_iter().map(|&i| run_shard(&e, i)).collect());
            done.into_iter().for_each(&mut emit);
        }
    } else {
        (0..e.point_count()).map(|i| run_shard(&e, i)).for_each(&mut emit);
    }
    Ok(counts)
}

/// Every rigid candidate in range, in enumeration order.
pub fn search_rigid(params: &SearchParams, jobs: usize) -> Result<SearchOutcome> {
    let mut hits = Vec::new();
    let counts = search_stream(params, jobs, |h| hits.push(h.clone()))?;
    Ok(SearchOutcome {
        params: params.clone(),
        hits,
        counts,
    })
}
