//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by validation and the bound/extremal constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The pair (A, B) violates -1 <= B < A <= 1.
    #[error("invalid parameter pair (A, B) = ({a}, {b}): need -1 <= B < A <= 1")]
    InvalidParams { a: f64, b: f64 },

    /// Evaluation point outside the open unit disk.
    #[error("evaluation point with |z| = {modulus} lies outside the open unit disk")]
    OutsideDisk { modulus: f64 },

    /// Base point z0 must be nonzero and interior.
    #[error("base point with |z0| = {modulus} must satisfy 0 < |z0| < 1")]
    InvalidBasePoint { modulus: f64 },

    /// Base point falls in the closed annulus where the critical-point
    /// construction is unavailable (E3 parameters only).
    #[error("base point z0 = {z0} lies in the annulus [{delta1}, {delta2}] where the two-point extremal construction does not apply")]
    InadmissibleBasePoint { z0: f64, delta1: f64, delta2: f64 },

    /// The branch quartic has no interior root for these parameters.
    #[error("no root of the branch quartic in (0, 1): h(0) = {h_at_zero} <= 0 or B = -1")]
    NoInteriorRoot { h_at_zero: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
