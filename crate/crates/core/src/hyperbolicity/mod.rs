//! Gromov hyperbolicity: the four-point constant (exact and sampled), the
//! thin-triangle constant on tiny graphs, and the tree-approximation bound
//! `Λ_n = ⌈4 + 3δ + 2δ·log₂ n⌉` derived from either.

mod four_point;
mod insize;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::graph::Vertex;

pub use four_point::{delta_four_point_exact, delta_four_point_sampled, four_point_value, DEFAULT_EXACT_CAP};
pub use insize::{delta_insize_exact, DEFAULT_INSIZE_CAP, GEODESIC_CAP};

/// A non-negative multiple of ½, stored doubled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: u32) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(v: u32) -> Self {
        HalfInt(2 * v)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Smallest integer not below this value.
    pub fn ceil(self) -> u32 {
        self.0.div_ceil(2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidHalfInt(s.to_owned());
        let s = s.trim();
        let (whole, frac) = match s.split_once('.') {
            Some((w, f)) => (w, f.trim_end_matches('0')),
            None => (s, ""),
        };
        let whole: u32 = whole.parse().map_err(|_| bad())?;
        let half = match frac {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        whole
            .checked_mul(2)
            .and_then(|w| w.checked_add(half))
            .map(HalfInt)
            .ok_or_else(bad)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_multiple_of(2) {
            serializer.serialize_u32(self.0 / 2)
        } else {
            serializer.serialize_f64(self.as_f64())
        }
    }
}

/// `⌈4 + 3δ + 2δ·log₂ n⌉`.
pub fn lambda_n(delta: HalfInt, n: usize) -> u32 {
    let d = delta.as_f64();
    let log = (n.max(1) as f64).log2();
    (4.0 + 3.0 * d + 2.0 * d * log).ceil() as u32
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperbolicityReport {
    pub delta_four_point: HalfInt,
    pub exact: bool,
    pub samples_used: u64,
    pub witness_quadruple: [Vertex; 4],
    pub lambda_n: u32,
}
