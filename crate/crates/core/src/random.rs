//! Seeded generators of test series.

use malachite_q::Rational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElement};
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};

/// Sparse random series with small rational coefficients.
///
/// Coefficients are `p/q` with `q ∈ {1, 2, 3}` and `|p/q| ≤ 3`. Series carry a
/// handful of low-degree terms so exact arithmetic stays cheap at `N = 32`.
pub struct Sampler {
    rng: ChaCha8Rng,
    field: Field,
    trunc: usize,
    /// Extra nonzero terms beyond the leading one.
    pub terms: usize,
    /// Highest degree offset of the extra terms.
    pub spread: usize,
}

impl Sampler {
    pub fn new(seed: u64, field: &Field, trunc: usize) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field: field.clone(),
            trunc,
            terms: 3,
            spread: 5,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn choose<T: Clone>(&mut self, items: &[T]) -> T {
        items.choose(&mut self.rng).expect("nonempty choice").clone()
    }

    pub fn rational(&mut self) -> Rational {
        loop {
            let q: i64 = self.rng.gen_range(1..=3);
            let p: i64 = self.rng.gen_range(-3 * q..=3 * q);
            if p != 0 {
                return Rational::from(p) / Rational::from(q);
            }
        }
    }

    pub fn scalar(&mut self) -> FieldElement {
        let q = self.rational();
        self.field.from_rational(&q)
    }

    /// `z^n + (a few terms of degree n+1..=n+spread)` with the given step, so
    /// `step > 1` produces series of the form `z^n R(z^step)`.
    pub fn sparse(&mut self, n: usize, leading: FieldElement, step: usize) -> TruncatedSeries {
        let mut terms = vec![(n, leading)];
        let count = self.rng.gen_range(1..=self.terms.max(1));
        for _ in 0..count {
            let k = n + step * self.rng.gen_range(1..=self.spread.max(1));
            if k <= self.trunc {
                terms.push((k, self.scalar()));
            }
        }
        terms.sort_by_key(|t| t.0);
        terms.dedup_by_key(|t| t.0);
        TruncatedSeries::from_terms(&self.field, &terms, self.trunc)
    }

    /// Monic series of order `n`.
    pub fn gamma(&mut self, n: usize) -> GammaSeries {
        let one = self.field.one();
        GammaSeries::new(self.sparse(n, one, 1)).expect("order at least 2")
    }

    /// `z + ...` with rational coefficients.
    pub fn unit(&mut self) -> UnitSeries {
        let one = self.field.one();
        UnitSeries::new(self.sparse(1, one, 1)).expect("order one")
    }

    /// `z + ...` with a nonlinear term guaranteed at degree 2.
    pub fn nonlinear_unit(&mut self) -> UnitSeries {
        let u = self.unit();
        let mut c = u.coeffs().to_vec();
        if c[2].is_zero() {
            c[2] = self.scalar();
        }
        UnitSeries::new(TruncatedSeries::new(&self.field, c, self.trunc)).expect("order one")
    }

    /// A random element of `[lo, hi]` dividing `m`, if any.
    pub fn divisor_in(&mut self, m: usize, lo: usize, hi: usize) -> Option<usize> {
        let ds: Vec<usize> = (lo..=hi).filter(|d| m % d == 0).collect();
        ds.choose(&mut self.rng).copied()
    }
}
