//! Extremal members of C(A,B): the canonical map K, the symmetric map f0,
//! and the two-point construction f_{z0,p,q} that attains the pointwise
//! bound at a prescribed real base point.
//!
//! Each map is represented by the Schwarz function driving it and by the
//! Taylor series of the normalized map itself (a0 = 0, a1 = 1), obtained by
//! integrating f''/f' = (A-B) psi / (1 + B z psi) with series arithmetic.

use num_complex::Complex64;

use crate::bounds::annulus_radii;
use crate::error::{Error, Result};
use crate::params::JanowskiParams;
use crate::schwarz::{BlaschkeProduct, SchwarzFunction};
use crate::schwarzian::schwarzian;
use crate::series::PowerSeries;

/// Which extremal map a spec describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtremalSpec {
    /// K_{A,B}, driven by omega(z) = z.
    K,
    /// f_0, driven by omega(z) = z^2.
    F0,
    /// f_{z0,p,q}, driven by omega = z psi with psi(z) = p (z - b)/(1 - b z).
    Fzpq { z0: f64, p: f64, q: f64, b: f64 },
}

/// Sign pair (p, q) for the two-point construction:
/// (1,1) when A+B <= 0; (-1,1) when A+B > 0, B >= 0; (-1,-1) when A+B > 0, B < 0.
pub fn choose_pq(params: &JanowskiParams) -> (f64, f64) {
    let sum = params.a() + params.b();
    if sum <= 0.0 {
        (1.0, 1.0)
    } else if params.b() >= 0.0 {
        (-1.0, 1.0)
    } else {
        (-1.0, -1.0)
    }
}

/// True when the two-point construction exists at the real base point z0:
/// z0 nonzero and interior, and for E3 parameters outside the closed
/// annulus [delta1, delta2].
pub fn is_admissible_base(params: &JanowskiParams, z0: f64) -> bool {
    if z0 == 0.0 || z0.abs() >= 1.0 || z0.is_nan() {
        return false;
    }
    match annulus_radii(params) {
        Some((d1, d2)) => z0.abs() < d1 || z0.abs() > d2,
        None => true,
    }
}

/// Solves for the Blaschke zero b of psi(z) = p (z - b)/(1 - b z):
/// b = z0 (2 - 2q|B| - |A+B|(1 - z0^2)) / (2 - 2q|B| z0^2 - |A+B|(1 - z0^2)).
///
/// The resulting b lies in (-1, 1) and z0 (z0 - b)/(1 - b z0) = q s0(|z0|).
pub fn solve_b(params: &JanowskiParams, z0: f64) -> Result<f64> {
    if z0 == 0.0 || z0.abs() >= 1.0 || z0.is_nan() {
        return Err(Error::InvalidBasePoint { modulus: z0.abs() });
    }
    if let Some((d1, d2)) = annulus_radii(params) {
        if d1 <= z0.abs() && z0.abs() <= d2 {
            return Err(Error::InadmissibleBasePoint {
                z0,
                delta1: d1,
                delta2: d2,
            });
        }
    }
    let (_, q) = choose_pq(params);
    let u = params.abs_a_plus_b();
    let two_qb = 2.0 * q * params.b().abs();
    let tail = u * (1.0 - z0 * z0);
    Ok(z0 * (2.0 - two_qb - tail) / (2.0 - two_qb * z0 * z0 - tail))
}

impl ExtremalSpec {
    /// Two-point spec at a real base point, with (p, q) from the sign table
    /// and b from the defining equation.
    pub fn for_base_point(params: &JanowskiParams, z0: f64) -> Result<Self> {
        let (p, q) = choose_pq(params);
        let b = solve_b(params, z0)?;
        Ok(ExtremalSpec::Fzpq { z0, p, q, b })
    }

    /// The Schwarz function omega = z psi driving this extremal map.
    pub fn schwarz_function(&self) -> SchwarzFunction {
        match self {
            ExtremalSpec::K => SchwarzFunction::identity(),
            ExtremalSpec::F0 => {
                SchwarzFunction::from_psi(BlaschkeProduct::new(0.0, vec![Complex64::new(0.0, 0.0)]))
            }
            // p is exactly +-1; pass it through as the front factor rather
            // than rounding e^{i pi}.
            ExtremalSpec::Fzpq { p, b, .. } => {
                SchwarzFunction::from_psi(BlaschkeProduct::with_rotation_factor(
                    Complex64::new(*p, 0.0),
                    vec![Complex64::new(*b, 0.0)],
                ))
            }
        }
    }

    /// psi as a truncated series.
    pub fn psi_series(&self, order: usize) -> PowerSeries {
        match self {
            ExtremalSpec::K => PowerSeries::constant(Complex64::new(1.0, 0.0), order),
            ExtremalSpec::F0 => PowerSeries::coordinate(order),
            ExtremalSpec::Fzpq { p, b, .. } => {
                let b = Complex64::new(*b, 0.0);
                let numerator =
                    PowerSeries::coordinate(order).sub(&PowerSeries::constant(b, order));
                let denominator = PowerSeries::constant(Complex64::new(1.0, 0.0), order)
                    .sub(&PowerSeries::coordinate(order).scale(b));
                numerator
                    .mul(&denominator.reciprocal())
                    .scale(Complex64::new(*p, 0.0))
            }
        }
    }
}

/// (1 - z0^2)^2 |S_{f_{z0,p,q}}(z0)|, computed by evaluating the Schwarzian
/// on the constructed Schwarz function (not from the closed form, so bound
/// attainment is a genuine cross-check).
pub fn extremal_weighted_value(params: &JanowskiParams, z0: f64) -> Result<f64> {
    let spec = ExtremalSpec::for_base_point(params, z0)?;
    let w = spec.schwarz_function();
    Ok(schwarzian(params, &w, Complex64::new(z0, 0.0))?.weighted)
}

/// Taylor coefficients of f'' / f' = (A-B) psi / (1 + B z psi), integrated
/// twice with exp in between; the result is normalized (a0 = 0, a1 = 1).
fn series_from_psi(params: &JanowskiParams, psi: &PowerSeries, order: usize) -> PowerSeries {
    let (a, b) = (params.a(), params.b());
    let one = PowerSeries::constant(Complex64::new(1.0, 0.0), psi.order() + 1);
    let den = one.add(&psi.mul_by_z().scale(Complex64::new(b, 0.0)));
    let q = psi.mul(&den.reciprocal()).scale(Complex64::new(a - b, 0.0));
    let f_prime = q.integral().exp();
    f_prime.integral().truncated(order)
}

/// Series of K_{A,B}. All three closed-form branches (general power,
/// logarithm at A = 0, exponential at B = 0) share the coefficient
/// recurrence a_1 = 1, a_n = a_{n-1} (A - (n-1) B) / n, which is exact in
/// the degenerate cases as well.
pub fn k_series(params: &JanowskiParams, order: usize) -> PowerSeries {
    assert!(order >= 2, "series order must be at least 2");
    let (a, b) = (params.a(), params.b());
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    coeffs[1] = Complex64::new(1.0, 0.0);
    for n in 2..=order {
        coeffs[n] = coeffs[n - 1] * ((a - (n - 1) as f64 * b) / n as f64);
    }
    PowerSeries::from_coeffs(coeffs)
}

/// Series of f_0 (omega = z^2), by integrating the defining relation.
pub fn f0_series(params: &JanowskiParams, order: usize) -> PowerSeries {
    assert!(order >= 2, "series order must be at least 2");
    series_from_psi(params, &PowerSeries::coordinate(order), order)
}

/// Series of f_{z0,p,q}, by integrating the defining relation with
/// psi(z) = p (z - b)/(1 - b z).
pub fn fzpq_series(params: &JanowskiParams, spec: &ExtremalSpec, order: usize) -> PowerSeries {
    assert!(order >= 2, "series order must be at least 2");
    assert!(
        matches!(spec, ExtremalSpec::Fzpq { .. }),
        "fzpq_series requires a two-point spec"
    );
    series_from_psi(params, &spec.psi_series(order), order)
}

/// Largest residual coefficient, through order f.order() - 2, of
/// 1 + z f''/f' - (1 + A omega)/(1 + B omega) with omega = z psi, where
/// f''/f' is recomputed from the series itself. A small residual certifies
/// that `f` solves the defining subordination.
pub fn subordination_residual(params: &JanowskiParams, f: &PowerSeries, psi: &PowerSeries) -> f64 {
    let (a, b) = (params.a(), params.b());
    let f_prime = f.derivative();
    let f_second = f_prime.derivative();
    let lhs = PowerSeries::constant(Complex64::new(1.0, 0.0), f.order() - 1)
        .add(&f_second.mul(&f_prime.reciprocal()).mul_by_z());

    let omega = psi.mul_by_z();
    let one = PowerSeries::constant(Complex64::new(1.0, 0.0), omega.order());
    let rhs = one
        .add(&omega.scale(Complex64::new(a, 0.0)))
        .mul(&one.add(&omega.scale(Complex64::new(b, 0.0))).reciprocal());

    let residual = lhs.sub(&rhs);
    (0..=f.order().saturating_sub(2))
        .map(|n| residual.coeff(n).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{alpha_root, norm_bound, pointwise_bound, s0_of};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params(a: f64, b: f64) -> JanowskiParams {
        JanowskiParams::new(a, b).unwrap()
    }

    #[test]
    fn sign_table() {
        assert_eq!(choose_pq(&params(1.0, -1.0)), (1.0, 1.0));
        assert_eq!(choose_pq(&params(1.0, 0.0)), (-1.0, 1.0));
        assert_eq!(choose_pq(&params(0.5, -0.2)), (-1.0, -1.0));
    }

    #[test]
    fn solve_b_examples() {
        let b = solve_b(&params(1.0, -1.0), 0.5).unwrap();
        assert!(b.abs() < 1e-15);

        let b = solve_b(&params(1.0, 0.0), 0.5).unwrap();
        assert!((b - 0.5).abs() < 1e-15);

        let b = solve_b(&params(0.2, -0.5), 0.5).unwrap();
        assert!((b - 0.3875 / 1.525).abs() < 1e-15);
    }

    #[test]
    fn solve_b_satisfies_defining_equation() {
        for (a, b_par, z0) in [
            (1.0, -1.0, 0.5),
            (1.0, 0.0, 0.5),
            (0.2, -0.5, 0.5),
            (0.7, -0.3, -0.6),
            (0.5, -0.95, 0.8),
        ] {
            let p = params(a, b_par);
            let (_, q) = choose_pq(&p);
            let b = solve_b(&p, z0).unwrap();
            let lhs = z0 * (z0 - b) / (1.0 - b * z0);
            let rhs = q * s0_of(&p, z0.abs());
            assert!((lhs - rhs).abs() < 1e-12, "({a},{b_par}) at {z0}");
        }
    }

    #[test]
    fn solve_b_rejects_bad_points() {
        let p = params(1.0, -1.0);
        assert!(solve_b(&p, 0.0).is_err());
        assert!(solve_b(&p, 1.0).is_err());

        // E3 annulus: (-0.5,-1) has [delta1, delta2] = [1/3, 1].
        let p = params(-0.5, -1.0);
        assert!(matches!(
            solve_b(&p, 0.5),
            Err(Error::InadmissibleBasePoint { .. })
        ));
        assert!(solve_b(&p, 0.25).is_ok());
        assert!(!is_admissible_base(&p, 0.5));
        assert!(is_admissible_base(&p, 0.25));
    }

    #[test]
    fn solve_b_random_admissible_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut accepted = 0;
        while accepted < 100 {
            let b_par = -1.0 + 2.0 * rng.gen::<f64>();
            let a = b_par + (1.0 - b_par) * rng.gen::<f64>();
            let Ok(p) = JanowskiParams::new(a, b_par) else {
                continue;
            };
            let z0 = -0.95 + 1.9 * rng.gen::<f64>();
            if !is_admissible_base(&p, z0) {
                continue;
            }
            let (_, q) = choose_pq(&p);
            let b = solve_b(&p, z0).unwrap();
            assert!(b.abs() < 1.0, "b = {b} for ({a},{b_par}) at {z0}");
            let lhs = z0 * (z0 - b) / (1.0 - b * z0);
            assert!((lhs - q * s0_of(&p, z0.abs())).abs() < 1e-12);
            accepted += 1;
        }
    }

    #[test]
    fn weighted_value_attains_pointwise_bound() {
        // (1,-1): the bound is attained with weighted value 2 at every z0.
        let p = params(1.0, -1.0);
        let v = extremal_weighted_value(&p, 0.5).unwrap();
        assert!((v - 2.0).abs() < 1e-12);

        // (-0.5,-1) at z0 = 0.25 (inside S since delta1 = 1/3).
        let p = params(-0.5, -1.0);
        let v = extremal_weighted_value(&p, 0.25).unwrap();
        let wb = 0.9375_f64.powi(2) * pointwise_bound(&p, Complex64::new(0.25, 0.0)).unwrap();
        assert!((v - wb).abs() < 1e-10);

        // (0.5,-0.95) at z0 = alpha: the norm bound itself is attained.
        let p = params(0.5, -0.95);
        let alpha = alpha_root(&p).unwrap();
        let v = extremal_weighted_value(&p, alpha).unwrap();
        assert!((v - norm_bound(&p).bound).abs() < 1e-10);
    }

    /// Closed form of the two-point Schwarzian, derived by substituting psi
    /// into the regular formula by hand; used as an independent oracle.
    fn fzpq_schwarzian_closed(par: &JanowskiParams, p: f64, b: f64, z: Complex64) -> Complex64 {
        let (a, bb) = (par.a(), par.b());
        let zb = z - b;
        let den = 1.0 - b * z + bb * p * z * zb;
        (a - bb) * (2.0 * p * (1.0 - b * b) - (a + bb) * zb * zb) / (2.0 * den * den)
    }

    #[test]
    fn schwarzian_on_construction_matches_closed_form() {
        for (a, b_par, z0) in [(1.0, 0.0, 0.5), (0.2, -0.5, 0.5), (0.9, 0.3, -0.4)] {
            let par = params(a, b_par);
            let spec = ExtremalSpec::for_base_point(&par, z0).unwrap();
            let ExtremalSpec::Fzpq { p, b, .. } = spec else {
                unreachable!()
            };
            let w = spec.schwarz_function();
            for z in [
                Complex64::new(z0, 0.0),
                Complex64::new(0.1, 0.3),
                Complex64::new(-0.7, 0.2),
            ] {
                let direct = schwarzian(&par, &w, z).unwrap().value;
                let closed = fzpq_schwarzian_closed(&par, p, b, z);
                assert!((direct - closed).norm() < 1e-12, "({a},{b_par}) at {z}");
            }
        }
    }

    #[test]
    fn k_series_examples() {
        // (1,-1): z/(1-z), all coefficients exactly 1.
        let s = k_series(&params(1.0, -1.0), 5);
        for n in 1..=5 {
            assert_eq!(s.coeff(n), Complex64::new(1.0, 0.0));
        }
        assert_eq!(s.coeff(0), Complex64::new(0.0, 0.0));

        // A = 0: log branch, a_n = (-1)^{n-1} B^{n-1} / n.
        let b = -0.5;
        let s = k_series(&params(0.0, b), 6);
        assert!((s.coeff(2).re - (-b / 2.0)).abs() < 1e-15);
        for n in 1..=6 {
            let expected = (-1.0_f64).powi(n as i32 - 1) * b.powi(n as i32 - 1) / n as f64;
            assert!((s.coeff(n).re - expected).abs() < 1e-15, "n = {n}");
        }

        // B = 0: exponential branch, a_n = A^{n-1} / n!.
        let a = 0.7;
        let s = k_series(&params(a, 0.0), 6);
        let mut factorial = 1.0;
        for n in 1..=6 {
            factorial *= n as f64;
            let expected = a.powi(n as i32 - 1) / factorial;
            assert!((s.coeff(n).re - expected).abs() < 1e-15, "n = {n}");
        }
    }

    #[test]
    fn f0_series_for_convex_class_is_atanh() {
        let s = f0_series(&params(1.0, -1.0), 5);
        let expected = [0.0, 1.0, 0.0, 1.0 / 3.0, 0.0, 0.2];
        for (n, e) in expected.iter().enumerate() {
            assert!((s.coeff(n).re - e).abs() < 1e-15, "n = {n}");
            assert!(s.coeff(n).im == 0.0);
        }
    }

    #[test]
    fn series_are_normalized_exactly() {
        let par = params(0.5, -0.95);
        let spec = ExtremalSpec::for_base_point(&par, 0.3).unwrap();
        for s in [
            k_series(&par, 16),
            f0_series(&par, 16),
            fzpq_series(&par, &spec, 16),
        ] {
            assert_eq!(s.coeff(0), Complex64::new(0.0, 0.0));
            assert_eq!(s.coeff(1), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn ode_round_trip() {
        let order = 32;
        for (a, b_par) in [(1.0, -1.0), (0.5, -0.95), (0.3, 0.1), (-0.5, -1.0)] {
            let par = params(a, b_par);

            let r = subordination_residual(
                &par,
                &k_series(&par, order),
                &ExtremalSpec::K.psi_series(order),
            );
            assert!(r < 1e-10, "K ({a},{b_par}): residual {r}");

            let r = subordination_residual(
                &par,
                &f0_series(&par, order),
                &ExtremalSpec::F0.psi_series(order),
            );
            assert!(r < 1e-10, "f0 ({a},{b_par}): residual {r}");
        }

        for (a, b_par, z0) in [(1.0, 0.0, 0.5), (0.2, -0.5, 0.5), (0.5, -0.95, -0.7)] {
            let par = params(a, b_par);
            let spec = ExtremalSpec::for_base_point(&par, z0).unwrap();
            let r = subordination_residual(
                &par,
                &fzpq_series(&par, &spec, order),
                &spec.psi_series(order),
            );
            assert!(r < 1e-10, "fzpq ({a},{b_par}) at {z0}: residual {r}");
        }
    }

    #[test]
    fn constructed_maps_respect_pointwise_bound() {
        let par = params(0.5, -0.5);
        let spec = ExtremalSpec::for_base_point(&par, 0.4).unwrap();
        for w in [ExtremalSpec::F0.schwarz_function(), spec.schwarz_function()] {
            for k in 0..50 {
                let t = -0.9 + 1.8 * k as f64 / 49.0;
                let z = Complex64::new(t, 0.25);
                let s = schwarzian(&par, &w, z).unwrap();
                let bound = pointwise_bound(&par, z).unwrap();
                let weight = (1.0 - z.norm_sqr()).powi(2);
                assert!(s.weighted <= weight * bound + 1e-9);
            }
        }
    }
}
