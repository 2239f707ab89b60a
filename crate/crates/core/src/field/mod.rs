//! Scalar fields standing in for an algebraically closed field of
//! characteristic zero.
//!
//! Two backends are provided: exact arithmetic in the cyclotomic field
//! `Q(ζ_L)` for a run-level conductor `L`, and complex floating point with a
//! relative tolerance. Roots of unity and `n`-th roots are explicit,
//! fallible capabilities: the exact backend never extends itself silently.

mod approx;
mod cyclotomic;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use malachite_q::Rational;
use num_complex::Complex64;

pub use approx::Approx;
pub use cyclotomic::{Cyclotomic, CyclotomicField, MAX_CONDUCTOR};

use crate::error::{Error, Result};

pub const DEFAULT_CONDUCTOR: usize = 24;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The coefficient field of a computation.
#[derive(Clone, Debug)]
pub enum Field {
    Exact(Arc<CyclotomicField>),
    Approx { tol: f64 },
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Exact(a), Field::Exact(b)) => a.conductor() == b.conductor(),
            (Field::Approx { tol: a }, Field::Approx { tol: b }) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Exact(c) => write!(f, "exact(conductor={})", c.conductor()),
            Field::Approx { tol } => write!(f, "approx(tol={tol:e})"),
        }
    }
}

impl Field {
    pub fn exact(conductor: usize) -> Result<Field> {
        if conductor == 0 || conductor > MAX_CONDUCTOR {
            return Err(Error::OrderMismatch(format!(
                "conductor must lie in 1..={MAX_CONDUCTOR}, got {conductor}"
            )));
        }
        Ok(Field::Exact(CyclotomicField::get(conductor)))
    }

    pub fn approx(tol: f64) -> Result<Field> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::OrderMismatch(format!("tolerance must be positive, got {tol}")));
        }
        Ok(Field::Approx { tol })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Field::Exact(_))
    }

    pub fn conductor(&self) -> Option<usize> {
        match self {
            Field::Exact(c) => Some(c.conductor()),
            Field::Approx { .. } => None,
        }
    }

    pub fn tolerance(&self) -> Option<f64> {
        match self {
            Field::Exact(_) => None,
            Field::Approx { tol } => Some(*tol),
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Exact(c) => FieldElement::Exact(Cyclotomic::zero(c)),
            Field::Approx { tol } => FieldElement::Approx(Approx::new(Complex64::new(0.0, 0.0), *tol)),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        self.from_rational(&Rational::from(v))
    }

    pub fn from_ratio(&self, p: i64, q: i64) -> FieldElement {
        self.from_rational(&Rational::from_signeds(p, q))
    }

    pub fn from_rational(&self, q: &Rational) -> FieldElement {
        match self {
            Field::Exact(c) => FieldElement::Exact(Cyclotomic::from_rational(c, q.clone())),
            Field::Approx { tol } => {
                use malachite_base::num::conversion::traits::RoundingFrom;
                use malachite_base::rounding_modes::RoundingMode;
                let (x, _) = f64::rounding_from(q, RoundingMode::Nearest);
                FieldElement::Approx(Approx::new(Complex64::new(x, 0.0), *tol))
            }
        }
    }

    /// A complex number in the approximate backend; `None` for the exact one.
    pub fn from_complex(&self, z: Complex64) -> Option<FieldElement> {
        match self {
            Field::Exact(_) => None,
            Field::Approx { tol } => Some(FieldElement::Approx(Approx::new(z, *tol))),
        }
    }

    /// `e^{2πij/n}`.
    pub fn root_of_unity(&self, n: usize, j: usize) -> Result<FieldElement> {
        assert!(n >= 1, "root of unity of order zero");
        match self {
            Field::Exact(c) => {
                let l = c.conductor();
                if l % n != 0 {
                    return Err(Error::ConductorTooSmall {
                        order: n,
                        conductor: l,
                    });
                }
                Ok(FieldElement::Exact(Cyclotomic::zeta_power(c, (j % n) * (l / n))))
            }
            Field::Approx { tol } => {
                let theta = std::f64::consts::TAU * (j % n) as f64 / n as f64;
                Ok(FieldElement::Approx(Approx::with_mag(Complex64::from_polar(1.0, theta), 1.0, *tol)))
            }
        }
    }

    /// All `n`-th roots of unity, sorted by index.
    pub fn roots_of_unity(&self, n: usize) -> Result<Vec<RootOfUnity>> {
        if n == 0 {
            return Err(Error::OrderMismatch("roots of unity of order 0".into()));
        }
        if let Field::Exact(c) = self {
            if c.conductor() % n != 0 {
                return Err(Error::ConductorTooSmall {
                    order: n,
                    conductor: c.conductor(),
                });
            }
        }
        Ok((0..n).map(|index| RootOfUnity { order: n, index }).collect())
    }

    /// Carries an exact element into this field: into `Q(ζ_M)` from `Q(ζ_L)`
    /// when `L | M`, or into an approximate field. Approximate elements are
    /// accepted only by an approximate field.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        match (self, x) {
            (Field::Exact(c), FieldElement::Exact(e)) if c.conductor() == e.field().conductor() => Ok(x.clone()),
            (Field::Exact(c), FieldElement::Exact(e)) if c.conductor() % e.field().conductor() == 0 => {
                let step = c.conductor() / e.field().conductor();
                let src = e.coords();
                let mut coords = vec![Rational::from(0); (src.len().max(1) - 1) * step + 1];
                for (j, q) in src.into_iter().enumerate() {
                    coords[j * step] = q;
                }
                Ok(FieldElement::Exact(Cyclotomic::from_coords(c, coords)))
            }
            (Field::Approx { tol }, FieldElement::Exact(e)) => {
                Ok(FieldElement::Approx(Approx::new(e.to_complex(), *tol)))
            }
            (Field::Approx { tol }, FieldElement::Approx(a)) => {
                Ok(FieldElement::Approx(Approx::with_mag(a.value(), a.mag(), *tol)))
            }
            _ => Err(Error::BackendMismatch),
        }
    }
}

/// `e^{2πi·index/order}`, realised on demand in a concrete field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootOfUnity {
    pub order: usize,
    pub index: usize,
}

impl RootOfUnity {
    pub fn is_primitive(&self) -> bool {
        gcd(self.index, self.order) == 1
    }

    pub fn value(&self, field: &Field) -> Result<FieldElement> {
        field.root_of_unity(self.order, self.index)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A scalar of either backend. Mixing backends in one operation panics.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldElement {
    Exact(Cyclotomic),
    Approx(Approx),
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Exact(c) => write!(f, "{c}"),
            FieldElement::Approx(a) => {
                let v = a.value();
                if v.im == 0.0 {
                    write!(f, "{}", v.re)
                } else {
                    write!(f, "({}{:+}i)", v.re, v.im)
                }
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match (self, rhs) {
                    (FieldElement::Exact(a), FieldElement::Exact(b)) => FieldElement::Exact(a.$method(b)),
                    (FieldElement::Approx(a), FieldElement::Approx(b)) => FieldElement::Approx(a.$method(b)),
                    _ => panic!("{}", Error::BackendMismatch),
                }
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Exact(a) => FieldElement::Exact(a.neg()),
            FieldElement::Approx(a) => FieldElement::Approx(a.neg()),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl FieldElement {
    /// Zero with no rounding history: exact zero, or an approximate zero
    /// with zero magnitude bound. Skipping such terms loses nothing, whereas
    /// skipping a tolerance-zero would drop its magnitude from later bounds.
    pub fn is_structural_zero(&self) -> bool {
        match self {
            FieldElement::Exact(a) => a.is_zero(),
            FieldElement::Approx(a) => a.mag() == 0.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Exact(a) => a.is_zero(),
            FieldElement::Approx(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Exact(a) => a.is_one(),
            FieldElement::Approx(a) => {
                let one = Approx::with_mag(Complex64::new(1.0, 0.0), 1.0, a.tol());
                a.sub(&one).is_zero()
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, FieldElement::Exact(_))
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElement::Exact(a) => Field::Exact(a.field().clone()),
            FieldElement::Approx(a) => Field::Approx { tol: a.tol() },
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        match self {
            FieldElement::Exact(a) => Ok(FieldElement::Exact(a.inv()?)),
            FieldElement::Approx(a) => a.inv().map(FieldElement::Approx).ok_or(Error::DivisionByZero),
        }
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplication by a small integer.
    pub fn mul_int(&self, k: i64) -> FieldElement {
        match self {
            FieldElement::Exact(a) => FieldElement::Exact(a.scale(&Rational::from(k))),
            FieldElement::Approx(a) => {
                let f = Approx::with_mag(Complex64::new(k as f64, 0.0), (k as f64).abs(), a.tol());
                FieldElement::Approx(a.mul(&f))
            }
        }
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        match self {
            FieldElement::Exact(a) => FieldElement::Exact(a.pow(e)),
            FieldElement::Approx(a) => FieldElement::Approx(a.powu(e as u32)),
        }
    }

    /// Canonical `n`-th root. Exact: `p·ζ^j` with `p > 0` rational and the
    /// smallest `j`; approximate: the principal root.
    pub fn nth_root(&self, n: usize) -> Result<FieldElement> {
        assert!(n >= 1, "root of order zero");
        match self {
            FieldElement::Exact(a) => Ok(FieldElement::Exact(a.nth_root(n)?)),
            FieldElement::Approx(a) => a.nth_root(n).map(FieldElement::Approx).ok_or(Error::ZeroInput),
        }
    }

    /// Smallest `d ≤ max_order` with `self^d = 1`.
    pub fn root_of_unity_order(&self, max_order: usize) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        if let FieldElement::Approx(a) = self {
            // |a| must be 1 up to tolerance for any power to return to 1
            if (a.value().norm() - 1.0).abs() > a.tol().sqrt() {
                return None;
            }
        }
        let mut p = self.clone();
        for d in 1..=max_order {
            if p.is_one() {
                return Some(d);
            }
            p = &p * self;
        }
        None
    }

    /// The rational value of an exact element lying in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElement::Exact(a) => a.as_rational(),
            FieldElement::Approx(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            FieldElement::Exact(a) => a.to_complex(),
            FieldElement::Approx(a) => a.value(),
        }
    }

    /// Size of this element seen as a residual: `0` for exact zero, the
    /// complex modulus for other exact values, and `|value|/mag` for
    /// approximate values.
    pub fn residual_size(&self) -> f64 {
        match self {
            FieldElement::Exact(a) => {
                if a.is_zero() {
                    0.0
                } else {
                    a.to_complex().norm().max(f64::MIN_POSITIVE)
                }
            }
            FieldElement::Approx(a) => a.relative_size(),
        }
    }
}

/// All `n`-th roots of unity of `field`, sorted by index.
pub fn roots_of_unity(field: &Field, n: usize) -> Result<Vec<RootOfUnity>> {
    field.roots_of_unity(n)
}

/// Canonical `n`-th root of `a`.
pub fn nth_root(a: &FieldElement, n: usize) -> Result<FieldElement> {
    a.nth_root(n)
}

/// Smallest `d ≤ max_order` with `a^d = 1`, if any.
pub fn element_is_root_of_unity(a: &FieldElement, max_order: usize) -> Option<usize> {
    a.root_of_unity_order(max_order)
}
