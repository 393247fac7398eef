//! Schwarz functions omega(z) = z * psi(z) built from finite Blaschke products.
//!
//! Storing the regularizing factor psi instead of omega itself removes the
//! z = 0 singularity from every downstream formula: the Schwarzian evaluator
//! only ever needs psi and psi'.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest modulus for randomly drawn Blaschke zeros; keeps derivatives
/// numerically tame near the boundary.
const RANDOM_ZERO_RADIUS: f64 = 0.95;

/// Finite Blaschke product  c * prod_j (z - a_j) / (1 - conj(a_j) z)
/// with |c| = 1 and all |a_j| < 1. Degree 0 is the constant c.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    rotation: Complex64,
    zeros: Vec<Complex64>,
}

impl BlaschkeProduct {
    /// Product with front factor e^{i theta}.
    pub fn new(theta: f64, zeros: Vec<Complex64>) -> Self {
        Self::with_rotation_factor(Complex64::from_polar(1.0, theta), zeros)
    }

    /// Product with an explicit unimodular front factor. Useful when the
    /// factor is exactly +-1 and the rounding of e^{i pi} must be avoided.
    pub fn with_rotation_factor(rotation: Complex64, zeros: Vec<Complex64>) -> Self {
        assert!(
            (rotation.norm() - 1.0).abs() <= 1e-12,
            "front factor must be unimodular"
        );
        for a in &zeros {
            assert!(
                a.norm() < 1.0,
                "Blaschke zeros must lie in the open unit disk"
            );
        }
        Self { rotation, zeros }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn rotation_factor(&self) -> Complex64 {
        self.rotation
    }

    /// Evaluates the product at z (|z| <= 1).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_with_deriv(z).0
    }

    /// Analytic derivative at z (|z| < 1); each factor contributes
    /// (1 - |a_j|^2) / (1 - conj(a_j) z)^2 through the product rule.
    pub fn eval_deriv(&self, z: Complex64) -> Complex64 {
        self.eval_with_deriv(z).1
    }

    /// Value and derivative in one pass, accumulating the product rule so
    /// zeros of individual factors cause no division.
    pub fn eval_with_deriv(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = self.rotation;
        let mut deriv = Complex64::new(0.0, 0.0);
        for a in &self.zeros {
            let den = 1.0 - a.conj() * z;
            let factor = (z - a) / den;
            let factor_deriv = (1.0 - a.norm_sqr()) / (den * den);
            deriv = deriv * factor + value * factor_deriv;
            value *= factor;
        }
        (value, deriv)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Psi {
    /// psi identically zero, hence omega identically zero.
    Zero,
    Product(BlaschkeProduct),
}

/// Schwarz function omega(z) = z * psi(z) with psi a finite Blaschke
/// product or the zero function; omega(0) = 0 and |omega(z)| <= |z| hold
/// by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzFunction {
    psi: Psi,
}

impl SchwarzFunction {
    /// omega identically zero.
    pub fn zero() -> Self {
        Self { psi: Psi::Zero }
    }

    /// omega(z) = z, i.e. psi identically 1.
    pub fn identity() -> Self {
        Self::from_psi(BlaschkeProduct::new(0.0, Vec::new()))
    }

    /// omega(z) = z * psi(z) for the given Blaschke factor psi.
    pub fn from_psi(psi: BlaschkeProduct) -> Self {
        Self {
            psi: Psi::Product(psi),
        }
    }

    /// Random omega = z * psi with psi of the given degree: zeros drawn
    /// uniformly (by area) in the disk of radius 0.95, rotation uniform in
    /// [0, 2 pi). Deterministic per seed.
    pub fn random(degree: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_rng(degree, &mut rng)
    }

    pub(crate) fn from_rng<R: Rng>(degree: usize, rng: &mut R) -> Self {
        let theta = rng.gen::<f64>() * std::f64::consts::TAU;
        let zeros = (0..degree)
            .map(|_| {
                let r = RANDOM_ZERO_RADIUS * rng.gen::<f64>().sqrt();
                let phi = rng.gen::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(r, phi)
            })
            .collect();
        Self::from_psi(BlaschkeProduct::new(theta, zeros))
    }

    pub fn is_zero_fn(&self) -> bool {
        matches!(self.psi, Psi::Zero)
    }

    /// The regularizing factor, when omega is not identically zero.
    pub fn blaschke_factor(&self) -> Option<&BlaschkeProduct> {
        match &self.psi {
            Psi::Zero => None,
            Psi::Product(b) => Some(b),
        }
    }

    /// Blaschke degree of omega itself (1 + degree of psi).
    pub fn degree(&self) -> Option<usize> {
        self.blaschke_factor().map(|b| b.degree() + 1)
    }

    /// psi(z).
    pub fn psi(&self, z: Complex64) -> Complex64 {
        match &self.psi {
            Psi::Zero => Complex64::new(0.0, 0.0),
            Psi::Product(b) => b.eval(z),
        }
    }

    /// psi'(z).
    pub fn psi_deriv(&self, z: Complex64) -> Complex64 {
        match &self.psi {
            Psi::Zero => Complex64::new(0.0, 0.0),
            Psi::Product(b) => b.eval_deriv(z),
        }
    }

    /// psi(z) and psi'(z) in one pass.
    pub fn psi_with_deriv(&self, z: Complex64) -> (Complex64, Complex64) {
        match &self.psi {
            Psi::Zero => (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
            Psi::Product(b) => b.eval_with_deriv(z),
        }
    }

    /// omega(z) = z * psi(z).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        z * self.psi(z)
    }

    /// omega'(z) = psi(z) + z * psi'(z).
    pub fn eval_deriv(&self, z: Complex64) -> Complex64 {
        let (v, d) = self.psi_with_deriv(z);
        v + z * d
    }

    /// Both sides of the derivative-variability inequality at z0:
    /// lhs = |omega'(z0) - omega(z0)/z0|,
    /// rhs = (|z0|^2 - |omega(z0)|^2) / (|z0| (1 - |z0|^2)).
    ///
    /// lhs <= rhs always; equality exactly on Blaschke products of degree 2.
    pub fn dieudonne_gap(&self, z0: Complex64) -> Result<(f64, f64)> {
        let r = z0.norm();
        if r == 0.0 || r >= 1.0 {
            return Err(Error::InvalidBasePoint { modulus: r });
        }
        let omega = self.eval(z0);
        let omega_deriv = self.eval_deriv(z0);
        let lhs = (omega_deriv - omega / z0).norm();
        let rhs = (r * r - omega.norm_sqr()) / (r * (1.0 - r * r));
        Ok((lhs, rhs))
    }
}
