//! Truncated power series with honest precision tracking.
//!
//! A series with truncation `N` is known modulo `z^{N+1}`. Every operation
//! computes the largest `N'` for which its result is fully determined by the
//! known coefficients of its operands and returns a series truncated there, so
//! a result never claims more precision than it has. For composition this is
//! usually more than `min(N_A, N_B)`: the unknown tail of the outer series is
//! pushed up by the order of the inner one.

use std::fmt;
use std::ops::Deref;

use malachite_q::Rational;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    field: Field,
    coeffs: Vec<FieldElement>,
    ord: Option<usize>,
}

/// Coefficientwise equality up to the smaller truncation.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.equiv(other)
    }
}

fn first_nonzero(c: &[FieldElement]) -> Option<usize> {
    c.iter().position(|x| !x.is_zero())
}

/// Product of two coefficient vectors, truncated at degree `t`. Missing
/// coefficients are read as zero.
pub(crate) fn mul_raw(field: &Field, a: &[FieldElement], b: &[FieldElement], t: usize) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); t + 1];
    let bnz: Vec<usize> = (0..b.len().min(t + 1)).filter(|&j| !b[j].is_structural_zero()).collect();
    for (i, ai) in a.iter().enumerate().take(t + 1) {
        if ai.is_structural_zero() {
            continue;
        }
        for &j in &bnz {
            if i + j > t {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * &b[j]);
        }
    }
    out
}

impl TruncatedSeries {
    /// Builds a series known modulo `z^{trunc+1}`; `coeffs` is padded with
    /// zeros or cut to length `trunc + 1`.
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, field.zero());
        debug_assert!(coeffs.iter().all(|c| c.is_exact() == field.is_exact()));
        let ord = first_nonzero(&coeffs);
        TruncatedSeries {
            field: field.clone(),
            coeffs,
            ord,
        }
    }

    pub fn zero(field: &Field, trunc: usize) -> Self {
        Self::new(field, Vec::new(), trunc)
    }

    /// `c·z^k`.
    pub fn monomial(field: &Field, c: FieldElement, k: usize, trunc: usize) -> Self {
        let mut v = vec![field.zero(); trunc + 1];
        if k <= trunc {
            v[k] = c;
        }
        Self::new(field, v, trunc)
    }

    /// `z^k`.
    pub fn z_pow(field: &Field, k: usize, trunc: usize) -> Self {
        Self::monomial(field, field.one(), k, trunc)
    }

    /// The identity series `z`.
    pub fn identity(field: &Field, trunc: usize) -> Self {
        Self::z_pow(field, 1, trunc)
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64], trunc: usize) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect(), trunc)
    }

    pub fn from_rationals(field: &Field, coeffs: &[Rational], trunc: usize) -> Self {
        Self::new(field, coeffs.iter().map(|c| field.from_rational(c)).collect(), trunc)
    }

    /// Sparse constructor from `(index, coefficient)` pairs.
    pub fn from_terms(field: &Field, terms: &[(usize, FieldElement)], trunc: usize) -> Self {
        let mut v = vec![field.zero(); trunc + 1];
        for (k, c) in terms {
            if *k <= trunc {
                v[*k] = &v[*k] + c;
            }
        }
        Self::new(field, v, trunc)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the truncation is not implied, so
    /// asking for it panics.
    pub fn coeff(&self, k: usize) -> &FieldElement {
        &self.coeffs[k]
    }

    /// Valuation, or `None` when the series vanishes to its precision.
    pub fn ord(&self) -> Option<usize> {
        self.ord
    }

    /// Lower bound on the valuation: `ord`, or `trunc + 1` for a series zero
    /// to precision.
    pub fn val(&self) -> usize {
        self.ord.unwrap_or(self.trunc() + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.ord.is_none()
    }

    /// Coefficient at the valuation.
    pub fn leading(&self) -> Option<&FieldElement> {
        self.ord.map(|k| &self.coeffs[k])
    }

    pub fn is_exact(&self) -> bool {
        self.field.is_exact()
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    /// True when exactly one coefficient is nonzero.
    pub fn is_monomial(&self) -> bool {
        self.support().len() == 1
    }

    /// Drops precision to `min(trunc, t)`.
    pub fn with_trunc(&self, t: usize) -> Self {
        if t >= self.trunc() {
            return self.clone();
        }
        Self::new(&self.field, self.coeffs[..=t].to_vec(), t)
    }

    /// Coefficientwise comparison modulo `z^{min(N_A, N_B)+1}`.
    pub fn equiv(&self, other: &Self) -> bool {
        let t = self.trunc().min(other.trunc());
        (0..=t).all(|k| (&self.coeffs[k] - &other.coeffs[k]).is_zero())
    }

    /// Largest coefficient residual of `self − other` up to the common
    /// truncation (see [`FieldElement::residual_size`]).
    pub fn residual(&self, other: &Self) -> f64 {
        let t = self.trunc().min(other.trunc());
        (0..=t)
            .map(|k| (&self.coeffs[k] - &other.coeffs[k]).residual_size())
            .fold(0.0, f64::max)
    }

    /// `self ≡ z` to precision.
    pub fn is_identity(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| if k == 1 { c.is_one() } else { c.is_zero() })
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        let v = (0..=t).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Self::new(&self.field, v, t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        let v = (0..=t).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        Self::new(&self.field, v, t)
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| -c).collect(), self.trunc())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|x| x * c).collect(), self.trunc())
    }

    /// Ring product; known modulo `z^{min(N_A + v_B, N_B + v_A)+1}`.
    pub fn mul(&self, other: &Self) -> Self {
        let t = (self.trunc() + other.val()).min(other.trunc() + self.val());
        Self::new(&self.field, mul_raw(&self.field, &self.coeffs, &other.coeffs, t), t)
    }

    /// `z^r · self`.
    pub fn shift(&self, r: usize) -> Self {
        let mut v = vec![self.field.zero(); r];
        v.extend(self.coeffs.iter().cloned());
        Self::new(&self.field, v, self.trunc() + r)
    }

    /// `self / z^r`; the first `r` coefficients must vanish.
    pub fn unshift(&self, r: usize) -> Result<Self> {
        if r > self.trunc() + 1 || self.coeffs[..r.min(self.coeffs.len())].iter().any(|c| !c.is_zero()) {
            return Err(Error::OrderMismatch(format!("series is not divisible by z^{r}")));
        }
        if r == self.trunc() + 1 {
            return Err(Error::PrecisionExhausted("dividing a zero series by z^{N+1}".into()));
        }
        Ok(Self::new(&self.field, self.coeffs[r..].to_vec(), self.trunc() - r))
    }

    /// `self^k` by repeated squaring; `k = 0` gives the constant 1.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::monomial(&self.field, self.field.one(), 0, self.trunc());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `1/self` for a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0inv = self.coeffs[0].inv().map_err(|_| Error::NotUnit { found: self.ord })?;
        let t = self.trunc();
        let mut out: Vec<FieldElement> = Vec::with_capacity(t + 1);
        out.push(c0inv.clone());
        for j in 1..=t {
            let mut s = self.field.zero();
            for i in 1..=j {
                if !self.coeffs[i].is_structural_zero() {
                    s = &s + &(&self.coeffs[i] * &out[j - i]);
                }
            }
            out.push(-(&s * &c0inv));
        }
        Ok(Self::new(&self.field, out, t))
    }

    /// Canonical `n`-th root of a series with nonzero constant term: the
    /// constant term takes the canonical scalar root, the rest follows from
    /// the power recurrence.
    pub fn nth_root_series(&self, n: usize) -> Result<Self> {
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            return Err(Error::ZeroInput);
        }
        let p0 = s0.nth_root(n)?;
        let s0inv = s0.inv()?;
        let t = self.trunc();
        let nn = n as i64;
        let mut p: Vec<FieldElement> = vec![p0];
        for j in 1..=t {
            let mut acc = self.field.zero();
            for i in 1..=j {
                if self.coeffs[i].is_structural_zero() {
                    continue;
                }
                // ((1/n + 1)·i − j) = ((n+1)i − nj)/n
                let w = (nn + 1) * i as i64 - nn * j as i64;
                if w == 0 {
                    continue;
                }
                acc = &acc + &(&self.coeffs[i] * &p[j - i]).mul_int(w);
            }
            let f = self.field.from_ratio(1, nn * j as i64);
            p.push(&(&acc * &s0inv) * &f);
        }
        Ok(Self::new(&self.field, p, t))
    }

    fn compose_trunc(&self, inner: &Self) -> usize {
        let (ta, tb) = (self.trunc(), inner.trunc());
        let vb = inner.val();
        let va = self.val();
        let t1 = (ta + 1) * vb - 1;
        let t2 = tb + va.saturating_sub(1) * vb;
        t1.min(t2).min(ta.max(tb))
    }

    /// `self ∘ inner`. The inner series must have positive valuation.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionUndefined);
        }
        let t = self.compose_trunc(inner);
        let vb = inner.val();
        let top = self.trunc().min(t / vb);
        let b = &inner.coeffs[..=t.min(inner.trunc())];
        let mut acc = vec![self.field.zero(); t + 1];
        acc[0] = self.coeffs[top].clone();
        for k in (0..top).rev() {
            acc = mul_raw(&self.field, &acc, b, t);
            acc[0] = &acc[0] + &self.coeffs[k];
        }
        Ok(Self::new(&self.field, acc, t))
    }

    /// `self(c·z^n)` for an exact monomial; known modulo `z^{(N+1)n}`.
    pub fn compose_monomial(&self, c: &FieldElement, n: usize) -> Self {
        assert!(n >= 1, "monomial substitution needs a positive exponent");
        let t = (self.trunc() + 1) * n - 1;
        let mut v = vec![self.field.zero(); t + 1];
        let mut ck = self.field.one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_structural_zero() {
                v[k * n] = a * &ck;
            }
            ck = &ck * c;
        }
        Self::new(&self.field, v, t)
    }

    /// `z^n ∘ self`, i.e. `self^n`.
    pub fn power_of(&self, n: usize) -> Self {
        self.pow(n as u64)
    }

    /// `l`-fold self-composition.
    pub fn iterate(&self, l: usize) -> Result<Self> {
        assert!(l >= 1, "iterate count must be positive");
        if !self.coeffs[0].is_zero() {
            return Err(Error::CompositionUndefined);
        }
        let mut acc = self.clone();
        for _ in 1..l {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// Compositional inverse of a unit series, by Lagrange inversion:
    /// `[z^k]V = (1/k)·[w^{k−1}](w/U(w))^k`.
    pub fn invert_unit(&self) -> Result<Self> {
        if self.ord != Some(1) {
            return Err(Error::NotUnit { found: self.ord });
        }
        let t = self.trunc();
        let g = self.unshift(1)?.reciprocal()?;
        let mut out = vec![self.field.zero(); t + 1];
        let mut gk = vec![self.field.one()];
        for k in 1..=t {
            gk = mul_raw(&self.field, &gk, g.coeffs(), t - 1);
            out[k] = &gk[k - 1] * &self.field.from_ratio(1, k as i64);
        }
        Ok(Self::new(&self.field, out, t))
    }

    /// Carries the series into another field (exact → approximate, or a
    /// tolerance change).
    pub fn embed(&self, field: &Field) -> Result<Self> {
        let v = self.coeffs.iter().map(|c| field.embed(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(field, v, self.trunc()))
    }

    /// Splits `self = z^r R(z^m)` with `r = ord mod m`.
    pub fn split_symmetric(&self, m: usize) -> Result<(usize, TruncatedSeries)> {
        assert!(m >= 1, "symmetry modulus must be positive");
        let o = self.ord.ok_or(Error::ZeroSeries)?;
        let r = o % m;
        if let Some(index) = (0..=self.trunc()).find(|&k| k % m != r && !self.coeffs[k].is_zero()) {
            return Err(Error::NotSymmetric { m, index });
        }
        let tr = (self.trunc() - r) / m;
        let v = (0..=tr).map(|j| self.coeffs[r + j * m].clone()).collect();
        Ok((r, TruncatedSeries::new(&self.field, v, tr)))
    }

    /// `z^r R(z^m)`, the inverse of [`split_symmetric`](Self::split_symmetric).
    pub fn reassemble(r: usize, big_r: &TruncatedSeries, m: usize) -> TruncatedSeries {
        big_r.compose_monomial(&big_r.field.one(), m).shift(r)
    }

    /// `z^r R(z)^n`: the series `μ₂` with `z^n ∘ z^r R(z^n) = μ₂ ∘ z^n`.
    pub fn symmetric_mate(big_r: &TruncatedSeries, r: usize, n: usize) -> TruncatedSeries {
        big_r.pow(n as u64).shift(r)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let (neg, body) = match c.as_rational() {
                Some(q) => {
                    let neg = q < 0;
                    let a = if neg { -q } else { q };
                    let s = a.to_string();
                    if k > 0 && s == "1" {
                        (neg, mono)
                    } else if k > 0 {
                        (neg, format!("{s}*{mono}"))
                    } else {
                        (neg, s)
                    }
                }
                None => {
                    if k > 0 {
                        (false, format!("({c})*{mono}"))
                    } else {
                        (false, format!("({c})"))
                    }
                }
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.trunc() + 1)
    }
}

macro_rules! wrapper {
    ($name:ident, $check:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name(TruncatedSeries);

        impl $name {
            pub fn new(s: TruncatedSeries) -> Result<Self> {
                let check: fn(&TruncatedSeries) -> Result<()> = $check;
                check(&s)?;
                Ok($name(s))
            }

            pub fn as_series(&self) -> &TruncatedSeries {
                &self.0
            }

            pub fn into_series(self) -> TruncatedSeries {
                self.0
            }
        }

        impl Deref for $name {
            type Target = TruncatedSeries;
            fn deref(&self) -> &TruncatedSeries {
                &self.0
            }
        }

        impl TryFrom<TruncatedSeries> for $name {
            type Error = Error;
            fn try_from(s: TruncatedSeries) -> Result<Self> {
                $name::new(s)
            }
        }

        impl From<$name> for TruncatedSeries {
            fn from(s: $name) -> TruncatedSeries {
                s.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

wrapper!(
    UnitSeries,
    |s| match s.ord() {
        Some(1) => Ok(()),
        found => Err(Error::NotUnit { found }),
    },
    "A series of order exactly one: invertible under composition."
);

wrapper!(
    GammaSeries,
    |s| match s.ord() {
        Some(k) if k >= 2 => Ok(()),
        found => Err(Error::NotGamma { found }),
    },
    "A series of order at least two, known past its leading term."
);

impl UnitSeries {
    pub fn inverse(&self) -> UnitSeries {
        UnitSeries(self.0.invert_unit().expect("unit series is invertible"))
    }
}

impl GammaSeries {
    /// The order `n = ord A`.
    pub fn order(&self) -> usize {
        self.0.ord().expect("gamma series is nonzero")
    }
}

/// `compose(A, B)` as a free function.
pub fn compose(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.compose(b)
}

/// Compositional inverse of a unit series.
pub fn invert_unit(u: &UnitSeries) -> UnitSeries {
    u.inverse()
}

/// `l`-fold self-composition.
pub fn iterate(a: &TruncatedSeries, l: usize) -> Result<TruncatedSeries> {
    a.iterate(l)
}

pub fn split_symmetric(mu: &TruncatedSeries, m: usize) -> Result<(usize, TruncatedSeries)> {
    mu.split_symmetric(m)
}

pub fn symmetric_mate(big_r: &TruncatedSeries, r: usize, n: usize) -> TruncatedSeries {
    TruncatedSeries::symmetric_mate(big_r, r, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::exact(24).unwrap()
    }

    fn s(c: &[i64], t: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64s(&q(), c, t)
    }

    fn zp(k: usize, t: usize) -> TruncatedSeries {
        TruncatedSeries::z_pow(&q(), k, t)
    }

    fn ratios(f: &Field, v: &[(i64, i64)]) -> Vec<FieldElement> {
        v.iter().map(|&(p, d)| f.from_ratio(p, d)).collect()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(zp(2, 10).compose(&zp(3, 10)).unwrap(), zp(6, 10));
        let c = zp(2, 10).compose(&s(&[0, 1, 1], 10)).unwrap();
        assert_eq!(c, s(&[0, 0, 1, 2, 1], 10));
        // (z+z²)³ by hand: z³ + 3z⁴ + 3z⁵ + z⁶
        let c = zp(3, 4).compose(&s(&[0, 1, 1], 4)).unwrap();
        assert_eq!(c.trunc(), 4);
        assert_eq!(c, s(&[0, 0, 0, 1, 3], 4));
        assert_eq!(zp(2, 4).compose(&s(&[1, 1], 4)), Err(Error::CompositionUndefined));
    }

    #[test]
    fn composition_precision() {
        // outer known to z^5, inner of order 2: result known to z^11
        let a = s(&[0, 0, 1, 1, 0, 2], 5);
        let b = s(&[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], 12);
        assert_eq!(a.compose(&b).unwrap().trunc(), 11);
        // unit outer of lower precision limits the result
        let u = s(&[0, 1, 1], 3);
        assert_eq!(u.compose(&zp(2, 20)).unwrap().trunc(), 7);
        assert_eq!(zp(2, 20).compose(&u).unwrap().trunc(), 4);
    }

    #[test]
    fn invert_unit_examples() {
        let f = q();
        let id = zp(1, 8);
        assert_eq!(id.invert_unit().unwrap(), id);
        let two = s(&[0, 2], 8);
        let half = TruncatedSeries::new(&f, ratios(&f, &[(0, 1), (1, 2)]), 8);
        assert_eq!(two.invert_unit().unwrap(), half);
        // U∘V = z solved by hand: v1 = 1, v2 = 1/2, v3 = 1/2
        let u = TruncatedSeries::new(&f, ratios(&f, &[(0, 1), (1, 1), (-1, 2)]), 8);
        let v = u.invert_unit().unwrap();
        let expect = TruncatedSeries::new(&f, ratios(&f, &[(0, 1), (1, 1), (1, 2), (1, 2)]), 3);
        assert_eq!(v.with_trunc(3), expect);
        assert!(u.compose(&v).unwrap().is_identity());
        assert!(v.compose(&u).unwrap().is_identity());
        assert_eq!(zp(2, 5).invert_unit(), Err(Error::NotUnit { found: Some(2) }));
    }

    #[test]
    fn iterate_examples() {
        assert_eq!(zp(2, 20).iterate(3).unwrap(), zp(8, 20));
        assert!(s(&[0, -1], 10).iterate(2).unwrap().is_identity());
        // (z²+z³)² + (z²+z³)³ = z⁴ + 2z⁵ + 2z⁶ + O(z⁷)
        let a = s(&[0, 0, 1, 1], 6);
        assert_eq!(a.iterate(2).unwrap().with_trunc(6), s(&[0, 0, 0, 0, 1, 2, 2], 6));
    }

    #[test]
    fn split_examples() {
        let (r, big_r) = s(&[0, 0, 0, 1, 0, 0, 0, 1], 7).split_symmetric(4).unwrap();
        assert_eq!(r, 3);
        assert_eq!(big_r, s(&[1, 1], 1));
        assert_eq!(
            s(&[0, 0, 1, 1], 7).split_symmetric(2),
            Err(Error::NotSymmetric { m: 2, index: 3 })
        );
        let mu = s(&[0, 1, 0, 1, 0, 1], 5);
        let (r, big_r) = mu.split_symmetric(2).unwrap();
        assert_eq!((r, big_r.clone()), (1, s(&[1, 1, 1], 2)));
        assert_eq!(TruncatedSeries::reassemble(r, &big_r, 2), mu);
    }

    #[test]
    fn symmetric_mate_examples() {
        assert_eq!(TruncatedSeries::symmetric_mate(&s(&[1], 8), 0, 3), s(&[1], 8));
        let m = TruncatedSeries::symmetric_mate(&s(&[1, 1], 8), 1, 2);
        assert_eq!(m, s(&[0, 1, 2, 1], 8));
        // z² ∘ (1+z²) = (1+z)²∘z² expanded to degree 8
        let inner = s(&[1, 0, 1], 8);
        let lhs = inner.pow(2);
        let rhs = TruncatedSeries::symmetric_mate(&s(&[1, 1], 8), 0, 2).compose(&zp(2, 8)).unwrap();
        assert_eq!(lhs.ord(), Some(0));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_roots_and_reciprocals() {
        let a = s(&[1, 3, -2, 5], 10);
        let r = a.nth_root_series(3).unwrap();
        assert_eq!(r.pow(3), a);
        assert_eq!(a.mul(&a.reciprocal().unwrap()), s(&[1], 10));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[0, 0, 1, 0, 0, 3, 0, -1], 8).to_string(), "z^2 + 3*z^5 - z^7 + O(z^9)");
        assert_eq!(s(&[], 3).to_string(), "0 + O(z^4)");
    }
}
