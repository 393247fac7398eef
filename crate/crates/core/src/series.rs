//! Truncated Taylor series over Complex64.
//!
//! A series carries its coefficients up to a fixed order (the highest power
//! kept). Binary operations truncate to the smaller order of the operands,
//! so every coefficient a series reports is exact for the underlying formal
//! power series.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    /// coeffs[n] is the coefficient of z^n; len = order + 1.
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series of z itself.
    pub fn coordinate(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^n (zero beyond the truncation order).
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs
            .get(n)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n] + rhs.coeffs[n])
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n] - rhs.coeffs[n])
                .collect(),
        }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order. The convolution is
    /// summed in ascending k, so truncating the inputs first produces
    /// bit-identical coefficients.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..=n {
                acc += self.coeffs[k] * rhs.coeffs[n - k];
            }
            *c = acc;
        }
        Self { coeffs }
    }

    /// Multiplication by z; raises the order by one.
    pub fn mul_by_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Termwise derivative; lowers the order by one (order 0 input stays a
    /// zero constant).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: (1..=self.order())
                .map(|n| self.coeffs[n] * n as f64)
                .collect(),
        }
    }

    /// Antiderivative with constant term 0; raises the order by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / (n + 1) as f64),
        );
        Self { coeffs }
    }

    /// 1 / self; requires a nonzero constant term. Standard recurrence
    /// c_n = -(sum_{k=1..n} a_k c_{n-k}) / a_0.
    pub fn reciprocal(&self) -> Self {
        let a0 = self.coeffs[0];
        assert!(
            a0.norm() > 0.0,
            "cannot invert a series with zero constant term"
        );
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len()];
        coeffs[0] = 1.0 / a0;
        for n in 1..coeffs.len() {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=n {
                acc += self.coeffs[k] * coeffs[n - k];
            }
            coeffs[n] = -acc / a0;
        }
        Self { coeffs }
    }

    /// exp(self), by the recurrence n e_n = sum_{k=1..n} k a_k e_{n-k}.
    pub fn exp(&self) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len()];
        coeffs[0] = self.coeffs[0].exp();
        for n in 1..coeffs.len() {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=n {
                acc += self.coeffs[k] * coeffs[n - k] * k as f64;
            }
            coeffs[n] = acc / n as f64;
        }
        Self { coeffs }
    }
}
