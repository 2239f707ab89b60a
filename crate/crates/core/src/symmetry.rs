//! Symmetric series `z^r R(z^m)`: detection, the Böttcher and transition
//! characterizations, symmetric right factors and decompositions of
//! symmetric series.

use crate::boettcher::{boettcher, BoettcherData};
use crate::error::{Error, Result};
use crate::field::gcd;
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};
use crate::solvers::{monic, solve_right_with, unit_left_factor};
use crate::transition::{element_order, series_from_transition, transition_group, TransitionGroup};

/// The moduli `m ≥ 2` for which the subject is `z^r R(z^m)` modulo
/// `z^{N+1}`, largest first.
#[derive(Clone, Debug)]
pub struct SymmetryProfile {
    pub subject: GammaSeries,
    pub pairs: Vec<(usize, usize)>,
    /// `None` when no `m ≥ 2` works. A monomial is symmetric for every `m`;
    /// it reports `N`.
    pub maximal_m: Option<usize>,
}

impl SymmetryProfile {
    pub fn has(&self, m: usize) -> bool {
        self.pairs.iter().any(|&(k, _)| k == m)
    }
}

pub fn detect_symmetry(a: &GammaSeries) -> SymmetryProfile {
    let support = a.support();
    let o = support[0];
    let g = support.iter().skip(1).fold(0, |g, &k| gcd(g, k - o));
    let maximal = if g == 0 { a.trunc() } else { g };
    let pairs: Vec<(usize, usize)> = if g == 0 {
        (2..=maximal).rev().map(|m| (m, o % m)).collect()
    } else {
        (2..=maximal).rev().filter(|m| g % m == 0).map(|m| (m, o % m)).collect()
    };
    SymmetryProfile {
        subject: a.clone(),
        maximal_m: if pairs.is_empty() { None } else { Some(maximal) },
        pairs,
    }
}

fn is_z_times_even_power(s: &TruncatedSeries, m: usize) -> bool {
    matches!(s.split_symmetric(m), Ok((1, _)))
}

/// Whether `β = z L(z^m)`.
pub fn boettcher_symmetry(d: &BoettcherData, m: usize) -> bool {
    is_z_times_even_power(d.beta(), m)
}

/// Whether the transition functions have the form `z M(z^m)`; checking the
/// generator suffices since the shape is closed under composition.
pub fn transition_symmetry(g: &TransitionGroup, m: usize) -> bool {
    is_z_times_even_power(g.generator(), m)
}

/// `(μ, r, R)` with `A = μ∘z^r R(z^m)`.
///
/// `ν` is the unit with `A∘ε_m z = ν∘A`; when it is not the identity, the
/// series built from `ν` has a Böttcher function `μ` conjugating `ν` to a
/// rotation, and `μ^{-1}∘A` then commutes with `ε_m z` up to a rotation.
pub fn traa_normal_form(a: &GammaSeries, m: usize) -> Result<(UnitSeries, usize, TruncatedSeries)> {
    let field = a.field().clone();
    let eps = field.root_of_unity(m, 1)?;
    let rotated = GammaSeries::new(a.compose_monomial(&eps, 1))?;
    let nu = match unit_left_factor(&rotated, a) {
        Ok(nu) => nu.into_series(),
        Err(Error::NoSolution) => {
            return Err(a.split_symmetric(m).err().unwrap_or(Error::NotSymmetric { m, index: a.order() }))
        }
        Err(e) => return Err(e),
    };
    let mu = if nu.is_identity() {
        UnitSeries::new(TruncatedSeries::identity(&field, a.trunc()))?
    } else {
        let d = element_order(&nu, m).ok_or_else(|| {
            Error::PrecisionExhausted("the normalizing unit has no finite order at this truncation".into())
        })?;
        let f = monic(&series_from_transition(&UnitSeries::new(nu)?, d)?)?;
        boettcher(&f)?.beta().clone()
    };
    let stripped = mu.inverse().compose(a)?;
    let (r, big_r) = stripped.split_symmetric(m)?;
    Ok((mu, r, big_r))
}

/// A right factor `C = z^r R(z^m)` of order `≥ 2` with `A = B∘C`, if some
/// nontrivial transition function of `A` has the form `z M(z^m)`.
pub fn symmetric_right_factor(d: &BoettcherData, m: usize) -> Result<Option<(GammaSeries, TruncatedSeries)>> {
    let a = d.series();
    let n = d.order();
    let group = transition_group(d)?;
    for k in (2..=n).filter(|k| n % k == 0) {
        let phi = group.element(n / k)?;
        if !is_z_times_even_power(&phi, m) {
            continue;
        }
        let c0 = monic(&series_from_transition(&phi, k)?)?;
        let (mu, _, _) = traa_normal_form(&c0, m)?;
        let c = GammaSeries::new(mu.inverse().compose(&c0)?)?;
        let b = solve_right_with(d, &boettcher(&c)?)?;
        if !b.compose(&c)?.equiv(a) {
            return Err(Error::VerificationFailed("symmetric right factor does not recompose".into()));
        }
        return Ok(Some((c, b)));
    }
    Ok(None)
}

/// Structure of `A = A₁∘A₂` for symmetric `A = z^r R(z^m)`:
/// `A₂ = μ∘z^{r₂}R₂(z^m)` and `A₁∘μ = z^{r₁}R₁(z^{m/gcd(r₂,m)})`.
#[derive(Clone, Debug)]
pub struct SymmetricDecomposition {
    pub mu: UnitSeries,
    pub r1: usize,
    pub big_r1: TruncatedSeries,
    pub r2: usize,
    pub big_r2: TruncatedSeries,
    /// `m / gcd(r₂, m)`, the modulus of the outer factor.
    pub m1: usize,
}

pub fn decompose_symmetric(
    a: &GammaSeries,
    a1: &GammaSeries,
    a2: &GammaSeries,
    m: usize,
    r: usize,
) -> Result<SymmetricDecomposition> {
    let (ra, _) = a.split_symmetric(m)?;
    if ra != r % m {
        return Err(Error::NotSymmetric { m, index: a.order() });
    }
    if !a1.compose(a2)?.equiv(a) {
        return Err(Error::NotADoubleDecomposition);
    }
    let (mu, r2, big_r2) = traa_normal_form(a2, m)?;
    let m1 = m / gcd(r2, m);
    let (r1, big_r1) = a1.compose(&mu)?.split_symmetric(m1)?;
    if (r1 * r2) % m != r % m {
        return Err(Error::VerificationFailed(format!(
            "r1·r2 = {}·{} is not ≡ {r} (mod {m})",
            r1, r2
        )));
    }
    Ok(SymmetricDecomposition {
        mu,
        r1,
        big_r1,
        r2,
        big_r2,
        m1,
    })
}

/// `(A^{∘s} is z^r R(z^m), A is z^r R(z^m))`; the two always agree.
pub fn reznick_check(a: &GammaSeries, s: usize, m: usize) -> Result<(bool, bool)> {
    let it = GammaSeries::new(a.iterate(s)?)?;
    Ok((detect_symmetry(&it).has(m), detect_symmetry(a).has(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::exact(24).unwrap()
    }

    fn s(c: &[i64], t: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64s(&q(), c, t)
    }

    fn g(c: &[i64], t: usize) -> GammaSeries {
        GammaSeries::new(s(c, t)).unwrap()
    }

    fn zn(n: usize, t: usize) -> GammaSeries {
        GammaSeries::new(TruncatedSeries::z_pow(&q(), n, t)).unwrap()
    }

    #[test]
    fn detection() {
        let p = detect_symmetry(&g(&[0, 0, 1, 0, 1], 16));
        assert_eq!(p.pairs, vec![(2, 0)]);
        let p = detect_symmetry(&g(&[0, 0, 0, 1, 0, 0, 0, 1], 16));
        assert_eq!(p.pairs, vec![(4, 3), (2, 1)]);
        assert_eq!(p.maximal_m, Some(4));
        let p = detect_symmetry(&g(&[0, 0, 1, 1], 16));
        assert!(p.pairs.is_empty());
        assert_eq!(p.maximal_m, None);
        let p = detect_symmetry(&zn(3, 10));
        assert_eq!(p.maximal_m, Some(10));
        assert_eq!(p.pairs.len(), 9);
    }

    #[test]
    fn boettcher_shapes() {
        for m in 2..5 {
            assert!(boettcher_symmetry(&boettcher(&zn(3, 16)).unwrap(), m));
        }
        let even = boettcher(&g(&[0, 0, 1, 0, 1], 16)).unwrap();
        assert!(boettcher_symmetry(&even, 2));
        let d = boettcher(&g(&[0, 0, 1, 1], 16)).unwrap();
        assert!(!boettcher_symmetry(&d, 2));
        assert_eq!(
            d.beta().split_symmetric(2),
            Err(Error::NotSymmetric { m: 2, index: 2 })
        );
    }

    #[test]
    fn transition_shapes() {
        let gz = transition_group(&boettcher(&zn(4, 24)).unwrap()).unwrap();
        for m in 2..6 {
            assert!(transition_symmetry(&gz, m));
        }
        let mu = s(&[0, 1, 1, -1], 32);
        let a = GammaSeries::new(mu.compose(&g(&[0, 0, 1, 0, 1], 32)).unwrap()).unwrap();
        assert!(transition_symmetry(&transition_group(&boettcher(&a).unwrap()).unwrap(), 2));
        let b = g(&[0, 0, 1, 1], 32);
        assert!(!transition_symmetry(&transition_group(&boettcher(&b).unwrap()).unwrap(), 2));
    }

    #[test]
    fn right_factors() {
        let (c, b) = symmetric_right_factor(&boettcher(&zn(4, 32)).unwrap(), 2).unwrap().unwrap();
        assert_eq!(c.as_series(), zn(2, 32).as_series());
        assert_eq!(b, TruncatedSeries::z_pow(&q(), 2, 32));

        let outer = s(&[0, 0, 1, 1], 32);
        let inner = s(&[0, 0, 0, 1, 0, 1], 32);
        let a = GammaSeries::new(outer.compose(&inner).unwrap()).unwrap();
        let (c, b) = symmetric_right_factor(&boettcher(&a).unwrap(), 2).unwrap().unwrap();
        assert_eq!(c.split_symmetric(2).unwrap().0, 1);
        assert_eq!(&b.compose(&c).unwrap(), a.as_series());

        assert!(symmetric_right_factor(&boettcher(&g(&[0, 0, 1, 1], 32)).unwrap(), 2)
            .unwrap()
            .is_none());
    }

    #[test]
    fn symmetric_decomposition_examples() {
        let a1 = g(&[0, 0, 1, 0, 1], 32);
        let a2 = g(&[0, 0, 0, 1, 0, 1], 32);
        let a = GammaSeries::new(a1.compose(&a2).unwrap()).unwrap();
        let sd = decompose_symmetric(&a, &a1, &a2, 2, 0).unwrap();
        assert!(sd.mu.is_identity());
        assert_eq!((sd.r1, sd.r2), (0, 1));

        let sd = decompose_symmetric(&zn(6, 32), &zn(2, 32), &zn(3, 32), 3, 0).unwrap();
        assert_eq!((sd.r1 * sd.r2) % 3, 0);

        // A₂ = μ₀∘odd with a generic μ₀, A₁ chosen so A is even
        let mu0 = UnitSeries::new(s(&[0, 1, 1, 2], 32)).unwrap();
        let a2 = GammaSeries::new(mu0.compose(&a2.as_series().clone()).unwrap()).unwrap();
        let a1 = GammaSeries::new(s(&[0, 0, 1, 0, 1], 32).compose(&mu0.inverse()).unwrap()).unwrap();
        let a = GammaSeries::new(a1.compose(&a2).unwrap()).unwrap();
        assert_eq!(a.split_symmetric(2).unwrap().0, 0);
        assert!(a2.split_symmetric(2).is_err());
        let sd = decompose_symmetric(&a, &a1, &a2, 2, 0).unwrap();
        assert_eq!(sd.r2 % 2, 1);
        assert_eq!(a1.compose(&sd.mu).unwrap().split_symmetric(2).unwrap().0, 0);
    }

    #[test]
    fn reznick() {
        assert_eq!(reznick_check(&g(&[0, 0, 0, 1, 0, 1], 32), 2, 2).unwrap(), (true, true));
        assert_eq!(reznick_check(&g(&[0, 0, 1, 1], 32), 2, 2).unwrap(), (false, false));
        for (s_, m) in [(2, 2), (3, 5)] {
            assert_eq!(reznick_check(&zn(3, 32), s_, m).unwrap(), (true, true));
        }
    }
}
