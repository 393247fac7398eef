//! Sharp pointwise bound on |S_f(z)| and sharp bound on the Schwarzian norm
//! over C(A,B), with the auxiliary functions the case analysis runs on.
//!
//! Pointwise, with u = |A+B| and t = |z|:
//!
//!   E1 u E2:  (A-B) (2 - u(1-t^2)) / [(1-t^2) (2 - u(1-t^2) - 2 B^2 t^2)]
//!   E3:       the same inside S = {t < delta1 or t > delta2}, and
//!             |A^2-B^2| / (2 (1 - |B| t)^2) on the annulus [delta1, delta2].
//!
//! The norm bound follows by maximizing the weighted version in t; the
//! maximizer is 0, the root alpha of a quartic h, or the annulus point
//! beta = (1 - sqrt(1-B^2)) / |B| depending on the branch.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::params::{JanowskiParams, RegionClass};

/// Interval-width tolerance for the quartic bisection; h can be flat near
/// the root for near-degenerate parameters, so the stop test is on t.
const BISECTION_WIDTH: f64 = 1e-12;
const BISECTION_MAX_ITERS: usize = 200;

/// Which side of the pointwise case analysis applies at a given modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBranch {
    /// Critical point s0 interior: the rational bound in t applies.
    Interior,
    /// Annulus branch of E3: the gate polynomial k is nonpositive.
    Annulus,
}

/// Case analysis behind the pointwise bound at modulus t = |z|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointwiseBoundParts {
    /// Critical modulus s0(t) = 2 |B| t^2 / (2 - |A+B| (1 - t^2)).
    pub s0: f64,
    /// Annulus radii, present exactly for E3 parameters.
    pub delta1: Option<f64>,
    pub delta2: Option<f64>,
    pub branch: BoundBranch,
}

/// Critical modulus s0(t) of the inner maximization.
pub fn s0_of(params: &JanowskiParams, t: f64) -> f64 {
    let u = params.abs_a_plus_b();
    2.0 * params.b().abs() * t * t / (2.0 - u * (1.0 - t * t))
}

/// Gate polynomial k(t) = 2 - |A+B| - 2|B| t + |A+B| t^2; s0(t) < t iff k(t) > 0.
pub fn gate_poly(params: &JanowskiParams, t: f64) -> f64 {
    let u = params.abs_a_plus_b();
    2.0 - u - 2.0 * params.b().abs() * t + u * t * t
}

/// Annulus radii (delta1, delta2) where the gate polynomial is nonpositive.
/// Present exactly for E3 parameters; then 0 < delta1 <= delta2 <= 1.
///
/// For B = -1 the radical formula degenerates to the same values, so the
/// pair is set explicitly to (2/|A-1| - 1, 1).
pub fn annulus_radii(params: &JanowskiParams) -> Option<(f64, f64)> {
    if params.classify() != RegionClass::E3 {
        return None;
    }
    if params.b() == -1.0 {
        return Some((2.0 / (params.a() - 1.0).abs() - 1.0, 1.0));
    }
    let u = params.abs_a_plus_b();
    let abs_b = params.b().abs();
    let rad = (abs_b * abs_b - u * (2.0 - u)).sqrt();
    Some(((abs_b - rad) / u, (abs_b + rad) / u))
}

/// Resolves the case analysis at modulus t.
pub fn bound_parts(params: &JanowskiParams, t: f64) -> PointwiseBoundParts {
    let (delta1, delta2, branch) = match annulus_radii(params) {
        Some((d1, d2)) => {
            let branch = if d1 <= t && t <= d2 {
                BoundBranch::Annulus
            } else {
                BoundBranch::Interior
            };
            (Some(d1), Some(d2), branch)
        }
        None => (None, None, BoundBranch::Interior),
    };
    PointwiseBoundParts {
        s0: s0_of(params, t),
        delta1,
        delta2,
        branch,
    }
}

fn interior_bound(params: &JanowskiParams, t: f64) -> f64 {
    let (a, b) = (params.a(), params.b());
    let u = params.abs_a_plus_b();
    let one_minus_t2 = 1.0 - t * t;
    let core = 2.0 - u * one_minus_t2;
    (a - b) * core / (one_minus_t2 * (core - 2.0 * b * b * t * t))
}

fn annulus_bound(params: &JanowskiParams, t: f64) -> f64 {
    let (a, b) = (params.a(), params.b());
    let den = 1.0 - b.abs() * t;
    (a * a - b * b).abs() / (2.0 * den * den)
}

/// Sharp pointwise bound on |S_f(z)| over C(A,B); depends on z through |z|.
pub fn pointwise_bound(params: &JanowskiParams, z: num_complex::Complex64) -> Result<f64> {
    let t = z.norm();
    if t >= 1.0 {
        return Err(Error::OutsideDisk { modulus: t });
    }
    Ok(match bound_parts(params, t).branch {
        BoundBranch::Interior => interior_bound(params, t),
        BoundBranch::Annulus => annulus_bound(params, t),
    })
}

/// (1 - t^2)^2 times the pointwise bound at modulus t; the function whose
/// supremum over [0, 1) is the norm bound.
pub fn weighted_pointwise_bound(params: &JanowskiParams, t: f64) -> Result<f64> {
    let w = 1.0 - t * t;
    Ok(w * w * pointwise_bound(params, num_complex::Complex64::new(t, 0.0))?)
}

/// gamma(t) = (1-t^2)(2 - u(1-t^2)) / (2 - u(1-t^2) - 2 B^2 t^2).
pub fn gamma(params: &JanowskiParams, t: f64) -> f64 {
    let u = params.abs_a_plus_b();
    let b = params.b();
    let one_minus_t2 = 1.0 - t * t;
    let core = 2.0 - u * one_minus_t2;
    one_minus_t2 * core / (core - 2.0 * b * b * t * t)
}

/// gamma1(t) = u (1-t^2)^2 / (2 (1 - |B| t)^2), the weighted annulus bound
/// divided by (A-B).
pub fn gamma1(params: &JanowskiParams, t: f64) -> f64 {
    let u = params.abs_a_plus_b();
    let one_minus_t2 = 1.0 - t * t;
    let den = 1.0 - params.b().abs() * t;
    u * one_minus_t2 * one_minus_t2 / (2.0 * den * den)
}

/// The branch quartic
/// h(t) = (2-u)(u + 2B^2 - 2) - 2u(2-u) t^2 + u(2B^2 - u) t^4,
/// whose sign drives gamma': gamma'(t) = 2 t h(t) / (...)^2.
pub fn h_poly(params: &JanowskiParams, t: f64) -> f64 {
    let u = params.abs_a_plus_b();
    let b2 = params.b() * params.b();
    let t2 = t * t;
    (2.0 - u) * (u + 2.0 * b2 - 2.0) - 2.0 * u * (2.0 - u) * t2 + u * (2.0 * b2 - u) * t2 * t2
}

/// h'(t) = -4 t u [2 (1 - B^2 t^2) - u (1 - t^2)]; strictly negative on (0,1)
/// whenever u > 0.
pub fn h_poly_deriv(params: &JanowskiParams, t: f64) -> f64 {
    let u = params.abs_a_plus_b();
    let b2 = params.b() * params.b();
    let t2 = t * t;
    -4.0 * t * u * (2.0 * (1.0 - b2 * t2) - u * (1.0 - t2))
}

/// Unique root of h in (0, 1), by bisection on the sign change
/// h(0) > 0 > h(1); h is strictly decreasing there.
///
/// Applicable only for B != -1 with |A+B| > 2(1 - B^2) (equivalently
/// h(0) > 0); otherwise the root does not exist in the open interval.
pub fn alpha_root(params: &JanowskiParams) -> Result<f64> {
    let h0 = h_poly(params, 0.0);
    if params.b() == -1.0 || h0 <= 0.0 {
        return Err(Error::NoInteriorRoot { h_at_zero: h0 });
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..BISECTION_MAX_ITERS {
        if hi - lo <= BISECTION_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if h_poly(params, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Which closed form the norm bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormBranch {
    /// E1 u E2 with B = -1: the constant 2.
    #[serde(rename = "Bm1")]
    BIsMinusOne,
    /// E1 u E2, B != -1, |A+B| <= 2(1-B^2): the value A - B, attained at 0.
    #[serde(rename = "AminusB")]
    AMinusB,
    /// E1 u E2, B != -1, |A+B| > 2(1-B^2): (A-B) gamma(alpha).
    GammaAlpha,
    /// E3: 2 |A^2-B^2| (1 - sqrt(1-B^2))^2 / B^4.
    E3Formula,
}

impl fmt::Display for NormBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormBranch::BIsMinusOne => write!(f, "Bm1"),
            NormBranch::AMinusB => write!(f, "AminusB"),
            NormBranch::GammaAlpha => write!(f, "GammaAlpha"),
            NormBranch::E3Formula => write!(f, "E3Formula"),
        }
    }
}

/// Sharp norm bound together with the branch that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormBoundReport {
    pub region: RegionClass,
    pub branch: NormBranch,
    pub bound: f64,
    /// Root of h in (0,1); present exactly for the GammaAlpha branch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// bound / 2, reported when bound < 2: every member of the class then
    /// extends to a (bound/2)-quasiconformal mapping of the sphere.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qc_constant: Option<f64>,
}

/// Sharp bound on the Schwarzian norm over C(A,B).
pub fn norm_bound(params: &JanowskiParams) -> NormBoundReport {
    let (a, b) = (params.a(), params.b());
    let region = params.classify();
    let u = params.abs_a_plus_b();

    let (branch, bound, alpha) = if region == RegionClass::E3 {
        // For B = -1 this reduces to 2(1 - A^2) exactly: the radical is 0
        // and B^4 = 1, so no separate code path is needed.
        let root = params.sqrt_one_minus_b2();
        let b4 = b * b * b * b;
        let value = 2.0 * (a * a - b * b).abs() * (1.0 - root) * (1.0 - root) / b4;
        (NormBranch::E3Formula, value, None)
    } else if b == -1.0 {
        (NormBranch::BIsMinusOne, 2.0, None)
    } else if u <= 2.0 * (1.0 - b * b) {
        (NormBranch::AMinusB, a - b, None)
    } else {
        let alpha = alpha_root(params).expect("branch gate guarantees h(0) > 0 and B != -1");
        (
            NormBranch::GammaAlpha,
            (a - b) * gamma(params, alpha),
            Some(alpha),
        )
    };

    NormBoundReport {
        region,
        branch,
        bound,
        alpha,
        qc_constant: (bound < 2.0).then(|| bound / 2.0),
    }
}
