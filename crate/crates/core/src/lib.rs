//! Exact rigidity checks for the two-parameter Hirzebruch genus `T_{x,y}` on
//! fixed-point data of circle actions with isolated fixed points.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: exact coefficient arithmetic and the carrier types.
//! - [`genera`]: fixed-point data, the `z`-domain rigidity identity and the
//!   fixed-point formula for the genus value.
//! - [`classify`]: the families Z, L₁, S₃, the two-point classifier and the
//!   replay of the classification argument.
//! - [`series`]: an independent back-end that expands the equivariant genus
//!   as a truncated series in `u`.
//! - [`search`]: canonical enumeration and exhaustive search.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod genera;
pub mod search;
pub mod series;

pub use algebra::{FactoredFraction, LaurentZ, PolyXY, Rational, SeriesU};
pub use classify::{FamilyTag, ProofTrace};
pub use error::{Error, Result};
pub use genera::{FixedPoint, FixedPointData, GenusReport, Sign};
pub use search::{SearchParams, SearchOutcome};
pub use series::GenusSeries;
