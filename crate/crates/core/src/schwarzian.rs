//! Schwarzian derivative of the convex map attached to a Schwarz function,
//! and closed forms for the named extremal maps.
//!
//! A member f of C(A,B) arises from a Schwarz function omega through
//! f''/f' = (A-B) omega / (z (1 + B omega)). Writing omega = z psi turns the
//! Schwarzian into the regular form
//!
//!   S_f(z) = (A-B) [psi'(z) - (A+B) psi(z)^2 / 2] / (1 + B z psi(z))^2,
//!
//! which is finite at z = 0; no limits are taken anywhere.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::JanowskiParams;
use crate::schwarz::SchwarzFunction;

/// One Schwarzian sample: the value S_f(z) and its hyperbolic weight
/// (1 - |z|^2)^2 |S_f(z)|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzianSample {
    pub z: Complex64,
    pub value: Complex64,
    pub weighted: f64,
}

impl SchwarzianSample {
    fn new(z: Complex64, value: Complex64) -> Self {
        let one_minus = 1.0 - z.norm_sqr();
        Self {
            z,
            value,
            weighted: one_minus * one_minus * value.norm(),
        }
    }
}

fn check_in_disk(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r >= 1.0 {
        Err(Error::OutsideDisk { modulus: r })
    } else {
        Ok(())
    }
}

/// S_f(z) for the member of C(A,B) induced by omega = z psi.
pub fn schwarzian(
    params: &JanowskiParams,
    w: &SchwarzFunction,
    z: Complex64,
) -> Result<SchwarzianSample> {
    check_in_disk(z)?;
    let (a, b) = (params.a(), params.b());
    let (psi, psi_deriv) = w.psi_with_deriv(z);
    let den = 1.0 + b * z * psi;
    let value = (a - b) * (psi_deriv - 0.5 * (a + b) * psi * psi) / (den * den);
    Ok(SchwarzianSample::new(z, value))
}

/// Closed-form Schwarzian of the canonical extremal K_{A,B}:
/// S(z) = -(A^2 - B^2) / (2 (1 + B z)^2).
pub fn schwarzian_of_k(params: &JanowskiParams, z: Complex64) -> Result<SchwarzianSample> {
    check_in_disk(z)?;
    let (a, b) = (params.a(), params.b());
    let den = 1.0 + b * z;
    let value = Complex64::new(-(a * a - b * b), 0.0) / (2.0 * den * den);
    Ok(SchwarzianSample::new(z, value))
}

/// Closed-form Schwarzian of the symmetric extremal f_0 (omega = z^2):
/// S(z) = (A-B)(2 - (A+B) z^2) / (2 (1 + B z^2)^2); in particular S(0) = A-B.
pub fn schwarzian_of_f0(params: &JanowskiParams, z: Complex64) -> Result<SchwarzianSample> {
    check_in_disk(z)?;
    let (a, b) = (params.a(), params.b());
    let z2 = z * z;
    let den = 1.0 + b * z2;
    let value = (a - b) * (2.0 - (a + b) * z2) / (2.0 * den * den);
    Ok(SchwarzianSample::new(z, value))
}
