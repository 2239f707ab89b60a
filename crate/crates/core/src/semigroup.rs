//! Shared Böttcher functions, commutation, and conjugation of finitely
//! generated semigroups onto monomials `c·z^m`.

use malachite_q::Rational;

use crate::boettcher::{boettcher, BoettcherData};
use crate::error::{Error, Result};
use crate::field::{gcd, Cyclotomic, CyclotomicField, Field, FieldElement, MAX_CONDUCTOR};
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};

/// `coefficient · z^exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialImage {
    pub coefficient: FieldElement,
    pub exponent: usize,
}

impl MonomialImage {
    pub fn to_series(&self, field: &Field, trunc: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(field, self.coefficient.clone(), self.exponent, trunc)
    }
}

/// `c` with `β_A = β_B∘cz`, for the canonical Böttcher functions.
///
/// Other branch pairs change `β_A` and `β_B` by roots of unity of orders
/// `ord A − 1` and `ord B − 1`, which only multiplies `c` by such a root; so
/// the answer is decided by the canonical pair.
pub fn shared_boettcher_scale(da: &BoettcherData, db: &BoettcherData) -> Option<FieldElement> {
    let gamma = db.beta_inv().compose(da.beta()).ok()?;
    if gamma.support() == [1] {
        Some(gamma.coeff(1).clone())
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommuteCheck {
    Direct,
    Criterion,
    Both,
}

impl CommuteCheck {
    pub fn as_str(&self) -> &'static str {
        match self {
            CommuteCheck::Direct => "direct",
            CommuteCheck::Criterion => "criterion",
            CommuteCheck::Both => "both",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommuteVerdict {
    pub commute: bool,
    pub c: Option<FieldElement>,
    /// Which tests support the verdict: `Both` when the shared-scale
    /// criterion and the direct comparison agree, `Direct` when they do not
    /// (the direct comparison is then reported).
    pub check: CommuteCheck,
    pub criterion: Option<bool>,
    pub direct: bool,
}

/// Whether `c^k = 1`, with an ambiguity band `(τ, 10³τ]` on the
/// approximate backend.
fn is_root_of_unity_power(c: &FieldElement, k: usize) -> Result<bool> {
    let p = c.pow(k as u64);
    match c {
        FieldElement::Exact(_) => Ok(p.is_one()),
        FieldElement::Approx(a) => {
            let tol = a.tol();
            let dev = (p.to_complex() - num_complex::Complex64::new(1.0, 0.0)).norm();
            if dev <= tol {
                Ok(true)
            } else if dev <= 1e3 * tol {
                Err(Error::ToleranceAmbiguous(format!("|c^{k} − 1| = {dev:e}")))
            } else {
                Ok(false)
            }
        }
    }
}

/// `A∘B = B∘A` decided by `β_A = β_B∘cz` with `c^{(n−1)(m−1)} = 1`, and
/// cross-checked by direct composition.
///
/// When a Böttcher function needs a root outside the field the criterion is
/// skipped (`criterion = None`) and the direct comparison decides.
pub fn commute_check(a: &GammaSeries, b: &GammaSeries) -> Result<CommuteVerdict> {
    let direct = a.compose(b)?.equiv(&b.compose(a)?);
    let (c, criterion) = match (boettcher(a), boettcher(b)) {
        (Ok(da), Ok(db)) => {
            let c = shared_boettcher_scale(&da, &db);
            let crit = match &c {
                Some(c) => is_root_of_unity_power(c, (a.order() - 1) * (b.order() - 1))?,
                None => false,
            };
            (c, Some(crit))
        }
        (Err(Error::RootNotRepresentable { .. }), _) | (_, Err(Error::RootNotRepresentable { .. })) => (None, None),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    Ok(CommuteVerdict {
        commute: direct,
        c,
        check: if criterion == Some(direct) { CommuteCheck::Both } else { CommuteCheck::Direct },
        criterion,
        direct,
    })
}

/// `β` (the Böttcher function of the first generator) with
/// `β^{-1}∘B∘β = c_B^{m−1}z^m` for every generator `B`.
pub fn monomialize(generators: &[GammaSeries]) -> Result<(UnitSeries, Vec<MonomialImage>)> {
    let first = generators
        .first()
        .ok_or_else(|| Error::OrderMismatch("no generators".into()))?;
    let d0 = boettcher(first)?;
    let beta = d0.beta().clone();
    let field = first.field().clone();
    let mut images = Vec::with_capacity(generators.len());
    for (index, b) in generators.iter().enumerate() {
        let db = boettcher(b)?;
        let c = shared_boettcher_scale(&d0, &db).ok_or(Error::NotConjugate { index })?;
        let m = b.order();
        let image = MonomialImage {
            coefficient: c.pow((m - 1) as u64),
            exponent: m,
        };
        let conj = d0.beta_inv().compose(&b.compose(&beta)?)?;
        if !conj.equiv(&image.to_series(&field, conj.trunc())) {
            return Err(Error::NotConjugate { index });
        }
        images.push(image);
    }
    Ok((beta, images))
}

/// Whether `δ∘ζ_{kb}z∘δ^{-1}` has the form `z M(z^{ka})`, i.e. commutes with
/// the rotations of order `ka`.
///
/// For rational `δ` the coefficients of the conjugate are polynomials in
/// `ζ` with rational coefficients, `Σ_j δ_j [z^k](δ^{-1})^j ζ^j`; each is tested
/// for vanishing in `Q(ζ_{kb})`, so no root of unity outside the run's field
/// is needed.
fn rotation_conjugate_commutes(delta: &UnitSeries, kb: usize, ka: usize) -> Result<bool> {
    let field = delta.field().clone();
    let t = delta.trunc();
    let rational: Option<Vec<Rational>> = delta.coeffs().iter().map(|c| c.as_rational()).collect();
    match (&field, rational) {
        (Field::Exact(_), Some(d)) => {
            let cyc = CyclotomicField::get(kb);
            let inv = delta.inverse();
            let mut power = inv.as_series().clone();
            // poly[k][j mod kb] accumulates the coefficient of ζ^j in ψ_k
            let mut poly = vec![vec![Rational::from(0); kb]; t + 1];
            for (j, dj) in d.iter().enumerate().skip(1) {
                if j > 1 {
                    power = power.mul(inv.as_series());
                }
                if dj == &Rational::from(0) {
                    continue;
                }
                for (k, row) in poly.iter_mut().enumerate().take(t + 1).skip(j) {
                    let pk = power.coeff(k).as_rational().expect("rational power");
                    row[j % kb] += dj * pk;
                }
            }
            Ok(poly
                .into_iter()
                .enumerate()
                .filter(|(k, _)| *k >= 1 && k % ka != 1 % ka)
                .all(|(_, row)| Cyclotomic::from_coords(&cyc, row).is_zero()))
        }
        (Field::Exact(cf), None) => {
            // adjoin ζ_{kb}: work in Q(ζ_M) with M = lcm(L, kb)
            let l = cf.conductor();
            let big = l / gcd(l, kb) * kb;
            if big > MAX_CONDUCTOR {
                return Err(Error::ConductorTooSmall { order: kb, conductor: l });
            }
            let wide = Field::exact(big)?;
            rotation_test_direct(&UnitSeries::new(delta.embed(&wide)?)?, kb, ka)
        }
        _ => rotation_test_direct(delta, kb, ka),
    }
}

fn rotation_test_direct(delta: &UnitSeries, kb: usize, ka: usize) -> Result<bool> {
    let zeta = delta.field().root_of_unity(kb, 1)?;
    let psi = delta.compose(&delta.inverse().scale(&zeta))?;
    Ok(psi.split_symmetric(ka).map(|(r, _)| r == 1).unwrap_or(false))
}

/// Whether `X∘A^{∘l} = Y∘B^{∘s}` is solvable for all `l ≤ l_max`,
/// `s ≤ s_max`, decided by commutation of the transition groups of the
/// iterates, `β_A∘U_{n^l}∘β_A^{-1}` and `β_B∘U_{m^s}∘β_B^{-1}`.
pub fn reversibility_probe(a: &GammaSeries, b: &GammaSeries, l_max: usize, s_max: usize) -> Result<bool> {
    assert!(l_max >= 1 && s_max >= 1, "probe bounds must be positive");
    let (da, db) = (boettcher(a)?, boettcher(b)?);
    // B's groups seen in A's Böttcher coordinates, where A's are rotations
    let delta = UnitSeries::new(da.beta_inv().compose(db.beta())?)?;
    let (n, m) = (a.order(), b.order());
    for l in 1..=l_max {
        for s in 1..=s_max {
            if !rotation_conjugate_commutes(&delta, m.pow(s as u32), n.pow(l as u32))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
