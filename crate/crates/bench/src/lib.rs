//! Shared inputs for the benchmarks.

use txy_core::classify::{make_l1, make_s3, make_z};
use txy_core::FixedPointData;

/// Named rigid data of increasing size.
pub fn rigid_fixtures() -> Vec<(&'static str, FixedPointData)> {
    vec![
        ("L1(5)", make_l1(5).unwrap()),
        ("S3(2,3)", make_s3(2, 3).unwrap()),
        ("Z(5,4,-3,2)", make_z(&[5, 4, -3, 2]).unwrap()),
    ]
}

/// A two-point datum that passes every prune but is not rigid.
pub fn near_miss() -> FixedPointData {
    FixedPointData::from_pairs(&[(&[4, 3, -2, -1], 1), (&[-4, -3, 2, 1], -1)]).unwrap()
}
