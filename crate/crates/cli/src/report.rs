//! Machine-readable report documents. Every report deserializes back into
//! the type that produced it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use txy_core::classify::{Conclusion, Partition};
use txy_core::{PolyXY, ProofTrace};

use crate::doc::InputDocument;

/// One term `coeff · x^x · y^y`; the coefficient is a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub coeff: String,
}

/// Terms sorted by `(x, y)` exponents, zero terms omitted.
pub fn monomials(p: &PolyXY) -> Vec<Monomial> {
    p.terms()
        .map(|(&(x, y), c)| Monomial {
            x,
            y,
            coeff: c.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub m: usize,
    pub rigid: bool,
    /// The constant value, present only when rigid.
    pub constant: Option<Vec<Monomial>>,
    pub ah_constant: Vec<Monomial>,
    pub ah_constant_pretty: String,
    pub defect_terms: usize,
    pub limits_symmetric: bool,
    pub weight_gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub k: usize,
    pub l: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConclusionDoc {
    pub k: usize,
    pub l: usize,
    pub a: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofDoc {
    pub paired: bool,
    pub antipodal: bool,
    pub swapped_points: bool,
    pub max_weight_tie: bool,
    pub n1_shortcut: bool,
    pub partition: PartitionDoc,
    pub eq6_holds: bool,
    pub eq7_holds: bool,
    pub eq8_holds: bool,
    pub eq9_conclusion: Option<ConclusionDoc>,
}

impl From<&ProofTrace> for ProofDoc {
    fn from(t: &ProofTrace) -> Self {
        let Partition { k, l, a, b } = t.partition.clone();
        ProofDoc {
            paired: t.paired,
            antipodal: t.antipodal,
            swapped_points: t.swapped_points,
            max_weight_tie: t.max_weight_tie,
            n1_shortcut: t.n1_shortcut,
            partition: PartitionDoc { k, l, a, b },
            eq6_holds: t.eq6_holds,
            eq7_holds: t.eq7_holds,
            eq8_holds: t.eq8_holds,
            eq9_conclusion: t
                .eq9_conclusion
                .map(|Conclusion { k, l, a }| ConclusionDoc { k, l, a }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    /// `Z`, `L1`, `S3`, `NotRigid` or `RigidUnclassified`.
    pub family: String,
    pub params: Vec<i64>,
    pub tag: String,
    pub proof: Option<ProofDoc>,
    /// Why no proof trace was produced.
    pub proof_note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub exponent: i64,
    /// The coefficient is `numerator · (x+y)^unit_power`.
    pub numerator: Vec<Monomial>,
    pub unit_power: i64,
    pub pretty: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub genus: String,
    pub order: i64,
    pub lowest: i64,
    pub coefficients: Vec<SeriesRow>,
    pub constant: bool,
    pub value: Option<Vec<Monomial>>,
    /// `agree` or `disagree` with the exact verdict; only for `txy`.
    pub cross_check: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    pub data: InputDocument,
    pub tag: Option<String>,
    pub constant: Vec<Monomial>,
    pub constant_pretty: String,
    pub weight_gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub n: usize,
    pub m: usize,
    pub max_weight: i64,
    pub effective_only: bool,
    pub signs: String,
    pub candidates: u64,
    pub pruned: u64,
    pub exactly_checked: u64,
    pub rigid: u64,
    /// Hit counts per family name; empty when `m ≠ 2`.
    pub families: BTreeMap<String, u64>,
}

/// One line of search output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase")]
pub enum SearchRecord {
    Hit(HitRecord),
    Summary(SummaryRecord),
}

/// Any report the CLI prints, tagged by command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Verify(VerifyReport),
    Classify(ClassifyReport),
    Replay(ProofDoc),
    Series(SeriesReport),
}
