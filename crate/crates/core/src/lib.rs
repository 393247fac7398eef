//! Sharp Schwarzian-derivative bounds for Janowski convex functions.
//!
//! The class C(A,B), for -1 <= B < A <= 1, consists of the normalized
//! convex maps f of the unit disk with 1 + z f''/f' subordinate to
//! (1 + Az)/(1 + Bz). This crate computes
//!
//! - the region E1/E2/E3 of the parameter pair, which selects the bound
//!   formulas ([`params`]);
//! - Schwarz functions omega = z psi built from finite Blaschke products,
//!   with exact derivatives and the derivative-variability check
//!   ([`schwarz`]);
//! - the Schwarzian derivative S_f of the member induced by a Schwarz
//!   function, plus closed forms for the extremal maps ([`schwarzian`]);
//! - the sharp pointwise bound on |S_f(z)| and the sharp bound on the
//!   hyperbolic sup-norm ||S_f||, with quasiconformal constants when the
//!   norm stays below 2 ([`bounds`]);
//! - the extremal maps themselves and their Taylor series ([`extremal`],
//!   [`series`]);
//! - brute-force verification of all of the above by supremum search and
//!   randomized dominance tests ([`verifier`]).

pub mod bounds;
pub mod error;
pub mod extremal;
pub mod params;
pub mod schwarz;
pub mod schwarzian;
pub mod series;
pub mod verifier;

pub use bounds::{
    alpha_root, annulus_radii, gamma, gamma1, h_poly, norm_bound, pointwise_bound,
    weighted_pointwise_bound, NormBoundReport, NormBranch, PointwiseBoundParts,
};
pub use error::{Error, Result};
pub use extremal::{
    choose_pq, extremal_weighted_value, f0_series, fzpq_series, is_admissible_base, k_series,
    solve_b, ExtremalSpec,
};
pub use params::{JanowskiParams, RegionClass};
pub use schwarz::{BlaschkeProduct, SchwarzFunction};
pub use schwarzian::{schwarzian, schwarzian_of_f0, schwarzian_of_k, SchwarzianSample};
pub use series::PowerSeries;
pub use verifier::{
    check_pointwise_dominance, check_sharpness, dieudonne_suite, numeric_norm, sup_weighted_bound,
    GridSpec, VerificationReport, Witness,
};
