//! Complex floating-point scalars with a running magnitude bound.
//!
//! Each value carries `mag`, an upper estimate of the absolute size of the
//! terms that were combined to produce it. The zero test is
//! `|value| ≤ tol · mag`, i.e. relative to the largest magnitude that entered
//! the comparison, which is what separates cancellation noise from genuine
//! small values.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug)]
pub struct Approx {
    value: Complex64,
    mag: f64,
    tol: f64,
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Approx {
    pub fn new(value: Complex64, tol: f64) -> Self {
        Approx {
            value,
            mag: value.norm(),
            tol,
        }
    }

    pub fn with_mag(value: Complex64, mag: f64, tol: f64) -> Self {
        Approx {
            value,
            mag: mag.max(value.norm()),
            tol,
        }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn mag(&self) -> f64 {
        self.mag
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn is_zero(&self) -> bool {
        self.value.norm() <= self.tol * self.mag
    }

    /// `|value| / mag`, the quantity the zero test compares against `tol`.
    pub fn relative_size(&self) -> f64 {
        if self.mag == 0.0 {
            0.0
        } else {
            self.value.norm() / self.mag
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Approx::with_mag(self.value + o.value, self.mag + o.mag, self.tol)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Approx::with_mag(self.value - o.value, self.mag + o.mag, self.tol)
    }

    pub fn neg(&self) -> Self {
        Approx {
            value: -self.value,
            ..*self
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Approx::with_mag(self.value * o.value, self.mag * o.mag, self.tol)
    }

    /// Inverse, or `None` when the value is indistinguishable from zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let v = self.value.inv();
        let a = self.value.norm();
        Some(Approx::with_mag(v, self.mag / (a * a), self.tol))
    }

    pub fn powu(&self, e: u32) -> Self {
        let mut acc = Approx::with_mag(Complex64::new(1.0, 0.0), 1.0, self.tol);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Principal root: argument in `(−π/n, π/n]`.
    pub fn nth_root(&self, n: usize) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (r, mut theta) = self.value.to_polar();
        if theta <= -std::f64::consts::PI {
            // −0.0 imaginary parts land on −π
            theta = std::f64::consts::PI;
        }
        let root = Complex64::from_polar(r.powf(1.0 / n as f64), theta / n as f64);
        let rel = self.mag / r;
        Some(Approx::with_mag(root, root.norm() * rel, self.tol))
    }
}
