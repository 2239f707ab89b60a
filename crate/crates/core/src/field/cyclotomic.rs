//! Exact arithmetic in `Q(ζ_L)`, stored in the power basis `1, ζ, …, ζ^{φ(L)−1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use malachite_base::num::arithmetic::traits::{CheckedRoot, Reciprocal};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use crate::error::{Error, Result};

/// Largest conductor accepted. Multiplication cost grows like `φ(L)²`.
pub const MAX_CONDUCTOR: usize = 512;

/// Shared per-conductor data: the reduction table for powers of `ζ_L`.
pub struct CyclotomicField {
    conductor: usize,
    degree: usize,
    /// `xpow[k]` holds `ζ^k` reduced modulo `Φ_L`, for `k < max(L, 2φ(L))`.
    xpow: Vec<Vec<i64>>,
    /// Residues in `[1, L)` coprime to `L`; the Galois group of `Q(ζ_L)`.
    units: Vec<usize>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact division of integer polynomials (coefficients low to high).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().expect("nonempty divisor");
    let mut quot = vec![0i64; num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn cyclotomic_polynomial(n: usize, memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d, memo);
            p = poly_div_exact(&p, &phi_d);
        }
    }
    memo.insert(n, p.clone());
    p
}

impl CyclotomicField {
    fn build(conductor: usize) -> Self {
        let mut memo = HashMap::new();
        let modulus = cyclotomic_polynomial(conductor, &mut memo);
        let degree = modulus.len() - 1;
        let count = conductor.max(2 * degree);
        let mut xpow = Vec::with_capacity(count);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..count {
            xpow.push(cur.clone());
            // multiply by x and reduce with x^φ = −Σ m_i x^i
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] -= top * modulus[i];
                }
            }
        }
        let units = (1..conductor.max(2))
            .filter(|&k| gcd(k, conductor) == 1)
            .collect();
        CyclotomicField {
            conductor,
            degree,
            xpow,
            units,
        }
    }

    /// The shared instance for conductor `L`.
    pub fn get(conductor: usize) -> Arc<CyclotomicField> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().expect("cyclotomic cache poisoned");
        map.entry(conductor)
            .or_insert_with(|| Arc::new(CyclotomicField::build(conductor)))
            .clone()
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// `φ(L)`, the dimension over the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An element of `Q(ζ_L)`. Coordinates are trimmed (no trailing zeros), so the
/// zero element has no coordinates and rationals have at most one.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coords: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coords == other.coords
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if *c == Rational::ZERO {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*ζ{}", self.field.conductor)?,
                _ => write!(f, "({c})*ζ{}^{i}", self.field.conductor)?,
            }
        }
        Ok(())
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| *c == Rational::ZERO) {
        v.pop();
    }
    v
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coords: Vec::new(),
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        Cyclotomic {
            field: field.clone(),
            coords: trim(vec![q]),
        }
    }

    /// Builds an element from power-basis coordinates; extra coordinates beyond
    /// `φ(L)` are reduced.
    pub fn from_coords(field: &Arc<CyclotomicField>, coords: Vec<Rational>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coords: reduce(field, coords),
        }
    }

    /// `ζ_L^k`.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: usize) -> Self {
        let k = k % field.conductor;
        let coords = field.xpow[k].iter().map(|&c| Rational::from(c)).collect();
        Cyclotomic {
            field: field.clone(),
            coords: trim(coords),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coordinates padded to length `φ(L)`.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.coords.clone();
        v.resize(self.field.degree, Rational::ZERO);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coords.len() == 1 && self.coords[0] == Rational::ONE
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coords.len() {
            0 => Some(Rational::ZERO),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor,
            "mixing cyclotomic fields of conductor {} and {}",
            self.field.conductor,
            other.field.conductor
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let n = self.coords.len().max(other.coords.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coords.get(i), other.coords.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            v.push(c);
        }
        Cyclotomic {
            field: self.field.clone(),
            coords: trim(v),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if *q == Rational::ZERO {
            return Cyclotomic::zero(&self.field);
        }
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        if self.coords.is_empty() || other.coords.is_empty() {
            return Cyclotomic::zero(&self.field);
        }
        if self.coords.len() == 1 {
            return other.scale(&self.coords[0]);
        }
        if other.coords.len() == 1 {
            return self.scale(&other.coords[0]);
        }
        let mut prod = vec![Rational::ZERO; self.coords.len() + other.coords.len() - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if *a == Rational::ZERO {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if *b == Rational::ZERO {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            coords: reduce(&self.field, prod),
        }
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k`.
    fn galois(&self, k: usize) -> Self {
        let l = self.field.conductor;
        let mut v = vec![Rational::ZERO; self.field.degree];
        for (i, c) in self.coords.iter().enumerate() {
            if *c == Rational::ZERO {
                continue;
            }
            for (t, &x) in self.field.xpow[(i * k) % l].iter().enumerate() {
                if x != 0 {
                    v[t] += c * Rational::from(x);
                }
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            coords: trim(v),
        }
    }

    /// Multiplicative inverse through the norm: `a^{-1} = Π_{σ≠1} σ(a) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyclotomic::from_rational(&self.field, q.reciprocal()));
        }
        let mut cofactor = Cyclotomic::from_rational(&self.field, Rational::ONE);
        for &k in self.field.units.iter().filter(|&&k| k != 1) {
            cofactor = cofactor.mul(&self.galois(k));
        }
        let norm = self
            .mul(&cofactor)
            .as_rational()
            .expect("norm of a cyclotomic element is rational");
        Ok(cofactor.scale(&norm.reciprocal()))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::from_rational(&self.field, Rational::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Writes the element as `q·ζ^k` when possible.
    pub fn as_rational_times_root(&self) -> Option<(Rational, usize)> {
        if let Some(q) = self.as_rational() {
            return (q != Rational::ZERO).then_some((q, 0));
        }
        let l = self.field.conductor;
        (1..l).find_map(|k| {
            let q = self
                .mul(&Cyclotomic::zeta_power(&self.field, l - k))
                .as_rational()?;
            Some((q, k))
        })
    }

    /// Canonical `n`-th root: `p·ζ^j` with `p > 0` rational and `j` minimal;
    /// a negative rational factor is only used when no positive one exists.
    pub fn nth_root(&self, n: usize) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let not_representable = || Error::RootNotRepresentable {
            what: self.to_string(),
            n,
        };
        if n == 1 {
            return Ok(self.clone());
        }
        let (q, _) = self.as_rational_times_root().ok_or_else(not_representable)?;
        let abs_q = if q < Rational::ZERO { -q.clone() } else { q.clone() };
        let p = (&abs_q).checked_root(n as u64).ok_or_else(not_representable)?;
        if q > Rational::ZERO && self.coords.len() == 1 {
            return Ok(Cyclotomic::from_rational(&self.field, p));
        }
        let l = self.field.conductor;
        for sign in [Rational::ONE, -Rational::ONE] {
            let base = &p * &sign;
            for j in 0..l {
                let cand = Cyclotomic::zeta_power(&self.field, j).scale(&base);
                if cand.pow(n as u64) == *self {
                    return Ok(cand);
                }
            }
        }
        Err(not_representable())
    }

    /// Numerical value with `ζ_L = e^{2πi/L}`.
    pub fn to_complex(&self) -> num_complex::Complex64 {
        use malachite_base::num::conversion::traits::RoundingFrom;
        use malachite_base::rounding_modes::RoundingMode;
        let l = self.field.conductor as f64;
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let (x, _) = f64::rounding_from(c, RoundingMode::Nearest);
                num_complex::Complex64::from_polar(x, std::f64::consts::TAU * i as f64 / l)
            })
            .sum()
    }
}

/// Reduces a coefficient vector of arbitrary length modulo `Φ_L`.
fn reduce(field: &CyclotomicField, mut v: Vec<Rational>) -> Vec<Rational> {
    let d = field.degree;
    if v.len() > d {
        let high: Vec<Rational> = v.drain(d..).collect();
        for (off, c) in high.into_iter().enumerate() {
            if c == Rational::ZERO {
                continue;
            }
            let k = d + off;
            let row = if k < field.xpow.len() {
                field.xpow[k].clone()
            } else {
                field.xpow[k % field.conductor].clone()
            };
            for (i, &x) in row.iter().enumerate() {
                if x != 0 {
                    v[i] += &c * Rational::from(x);
                }
            }
        }
    }
    trim(v)
}
