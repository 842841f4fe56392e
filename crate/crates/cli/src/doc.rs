//! The input document: fixed-point data plus an optional genus and order.
//!
//! Integers are written as decimal strings (`"-3"`); bare JSON numbers are
//! accepted too. Genus coefficients are reduced fractions such as `"-1/720"`.

use std::fmt;

use serde::{Deserialize, Serialize};
use txy_core::series::DEFAULT_ORDER;
use txy_core::{Error as CoreError, FixedPoint, FixedPointData, GenusSeries, Rational, Sign};

use crate::error::CliError;

/// A JSON integer given either as a string or as a number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntText {
    Text(String),
    Number(i64),
}

impl IntText {
    pub fn from_int(v: i64) -> Self {
        IntText::Text(v.to_string())
    }

    fn parse(&self, field: &str) -> Result<i64, CliError> {
        match self {
            IntText::Number(v) => Ok(*v),
            IntText::Text(s) => s
                .trim()
                .trim_start_matches('+')
                .parse()
                .map_err(|_| CliError::field(field, format!("not a machine-size integer: {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub weights: Vec<IntText>,
    pub sign: IntText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenusDoc {
    pub name: String,
    /// Taylor coefficients of `H(u)/u − 1/u` from `u⁰` upward.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub n: IntText,
    pub points: Vec<PointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<GenusDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<IntText>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn from_data(d: &FixedPointData) -> Self {
        InputDocument {
            n: IntText::from_int(d.n() as i64),
            points: d
                .points()
                .iter()
                .map(|p| PointDoc {
                    weights: p.weights.iter().map(|&w| IntText::from_int(w)).collect(),
                    sign: IntText::Text(p.sign.to_string()),
                })
                .collect(),
            genus: None,
            order: None,
        }
    }

    pub fn data(&self) -> Result<FixedPointData, CliError> {
        let n = self.n.parse("n")?;
        if n < 1 {
            return Err(CliError::field("n", "dimension must be positive"));
        }
        let mut points = Vec::with_capacity(self.points.len());
        for (pi, p) in self.points.iter().enumerate() {
            let weights = p
                .weights
                .iter()
                .enumerate()
                .map(|(wi, w)| w.parse(&format!("points[{pi}].weights[{wi}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let field = format!("points[{pi}].sign");
            let sign = Sign::from_int(p.sign.parse(&field)?)
                .map_err(|e| CliError::field(&field, e.to_string()))?;
            points.push(FixedPoint::new(weights, sign));
        }
        FixedPointData::new(n as usize, points).map_err(locate)
    }

    /// The requested genus; `txy` when absent.
    pub fn genus(&self) -> Result<GenusSeries, CliError> {
        let Some(g) = &self.genus else {
            return Ok(GenusSeries::txy());
        };
        if let Some(cs) = &g.coefficients {
            let coeffs = cs
                .iter()
                .enumerate()
                .map(|(i, c)| parse_rational(c).map_err(|m| CliError::field(&format!("genus.coefficients[{i}]"), m)))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(GenusSeries::custom(g.name.clone(), coeffs));
        }
        match g.name.to_ascii_lowercase().as_str() {
            "txy" | "t_xy" => Ok(GenusSeries::txy()),
            "todd" => Ok(GenusSeries::todd()),
            other => Err(CliError::field(
                "genus.name",
                format!("unknown genus {other:?} and no coefficient list"),
            )),
        }
    }

    /// The document's order, or the default.
    pub fn order(&self) -> Result<i64, CliError> {
        self.order.as_ref().map_or(Ok(DEFAULT_ORDER), |o| o.parse("order"))
    }
}

fn locate(e: CoreError) -> CliError {
    match &e {
        CoreError::ZeroWeight { point, index } => {
            CliError::field(&format!("points[{point}].weights[{index}]"), e.to_string())
        }
        CoreError::WeightCount { point, .. } => CliError::field(&format!("points[{point}].weights"), e.to_string()),
        CoreError::NoPoints => CliError::field("points", e.to_string()),
        CoreError::ZeroDimension => CliError::field("n", e.to_string()),
        _ => CliError::Core(e),
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse()
        .map_err(|e| format!("not a rational number {s:?}: {e}"))
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}
