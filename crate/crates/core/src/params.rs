//! Parameter validation and region classification for the class C(A,B).
//!
//! A pair (A, B) with -1 <= B < A <= 1 selects the class of normalized
//! convex maps whose curvature transform is subordinate to (1+Az)/(1+Bz).
//! The admissible parameter set splits into three regions E1, E2, E3 that
//! decide which sharp bound formula applies.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// Validated parameter pair (A, B) with -1 <= B < A <= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiParams {
    a: f64,
    b: f64,
}

/// The region of the parameter set a pair belongs to.
///
/// E1 is open, E2 and E3 are closed on the shared boundaries
/// |A+B| = 1 -+ sqrt(1-B^2); the three sets partition the admissible pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionClass {
    E1,
    E2,
    E3,
}

impl fmt::Display for RegionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionClass::E1 => write!(f, "E1"),
            RegionClass::E2 => write!(f, "E2"),
            RegionClass::E3 => write!(f, "E3"),
        }
    }
}

impl JanowskiParams {
    /// Validates -1 <= B < A <= 1 (strict B < A) and returns the pair.
    ///
    /// NaN inputs are rejected: every comparison below fails on NaN.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if -1.0 <= b && b < a && a <= 1.0 {
            Ok(Self { a, b })
        } else {
            Err(Error::InvalidParams { a, b })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// |A + B|, the combination every bound formula is driven by.
    pub fn abs_a_plus_b(&self) -> f64 {
        (self.a + self.b).abs()
    }

    /// sqrt(1 - B^2).
    pub fn sqrt_one_minus_b2(&self) -> f64 {
        (1.0 - self.b * self.b).sqrt()
    }

    /// Classifies the pair into E1, E2 or E3.
    ///
    /// E1 is tested first (open band 1 - sqrt(1-B^2) < |A+B| < 1 + sqrt(1-B^2));
    /// outside the band, |A+B| <= |B| separates E2 from E3. Comparisons are
    /// exactly as the set definitions state, with no epsilon slack.
    pub fn classify(&self) -> RegionClass {
        let s = self.abs_a_plus_b();
        let root = self.sqrt_one_minus_b2();
        if 1.0 - root < s && s < 1.0 + root {
            RegionClass::E1
        } else if s <= self.b.abs() {
            RegionClass::E2
        } else {
            RegionClass::E3
        }
    }
}
