//! Solvers for `F = X∘A`, `F = A∘X`, `A∘X = Y∘B`, `X∘A = Y∘B`, common right
//! factors and factorization through a composition.

use crate::boettcher::{boettcher, BoettcherData};
use crate::error::{Error, Result};
use crate::field::gcd;
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};
use crate::transition::{element_order, series_from_transition, subgroup_test, transition_group, TransitionGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionKind {
    Unique,
    FiniteList,
    Parametric,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub x: TruncatedSeries,
    pub y: Option<TruncatedSeries>,
    pub residual_ok: bool,
}

/// Solutions of one equation, each checked when the family is built.
#[derive(Clone, Debug)]
pub struct SolutionFamily {
    pub kind: SolutionKind,
    pub solutions: Vec<Solution>,
    /// `(r, R)` for the parametric semiconjugacy family.
    pub parameters: Option<(usize, TruncatedSeries)>,
}

impl SolutionFamily {
    pub fn all_ok(&self) -> bool {
        self.solutions.iter().all(|s| s.residual_ok)
    }
}

/// Replaces coefficient `k` of a series known to `k − 1`.
fn push_coeff(x: &TruncatedSeries, c: crate::field::FieldElement) -> TruncatedSeries {
    let mut v = x.coeffs().to_vec();
    v.push(c);
    let t = x.trunc() + 1;
    TruncatedSeries::new(x.field(), v, t)
}

fn padded(x: &TruncatedSeries) -> TruncatedSeries {
    let t = x.trunc() + 1;
    TruncatedSeries::new(x.field(), x.coeffs().to_vec(), t)
}

/// Brings a candidate `X` with `X∘A ≡ F` up to the precision `F` determines,
/// `⌊N_F / n⌋`, by the triangular comparison at index `n·k`.
fn extend_right(mut x: TruncatedSeries, a: &GammaSeries, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = a.order();
    let target = f.trunc() / n;
    if x.trunc() >= target {
        return Ok(x.with_trunc(target));
    }
    let lead = a.coeff(n).clone();
    while x.trunc() < target {
        let k = x.trunc() + 1;
        let trial = padded(&x);
        let res = f.with_trunc(n * k).sub(&trial.compose(a)?);
        let c = res.coeff(n * k).div(&lead.pow(k as u64))?;
        x = push_coeff(&x, c);
    }
    Ok(x)
}

/// Brings a candidate `X` with `A∘X ≡ F` up to precision `N_F − (n−1)m`.
fn extend_left(mut x: TruncatedSeries, a: &GammaSeries, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = a.order();
    let m = x.ord().ok_or(Error::ZeroSeries)?;
    let shift = (n - 1) * m;
    if f.trunc() < shift {
        return Ok(x);
    }
    let target = f.trunc() - shift;
    if x.trunc() >= target {
        return Ok(x.with_trunc(target));
    }
    let pivot = (a.coeff(n) * &x.coeff(m).pow((n - 1) as u64)).mul_int(n as i64);
    while x.trunc() < target {
        let k = x.trunc() + 1;
        let trial = padded(&x);
        let res = f.with_trunc(k + shift).sub(&a.compose(&trial)?);
        let c = res.coeff(k + shift).div(&pivot)?;
        x = push_coeff(&x, c);
    }
    Ok(x)
}

/// The unit `ν` with `ν∘A = F` for `ord F = ord A`, by triangular comparison
/// alone; no roots are taken, so `F` need not be monic.
pub(crate) fn unit_left_factor(f: &GammaSeries, a: &GammaSeries) -> Result<UnitSeries> {
    let n = a.order();
    if f.order() != n {
        return Err(Error::OrderMismatch(format!("ord F = {} but ord A = {n}", f.order())));
    }
    let field = a.field();
    let lead = f.coeff(n).div(a.coeff(n))?;
    let x = extend_right(TruncatedSeries::monomial(field, lead, 1, 1), a, f)?;
    if !x.compose(a)?.equiv(f) {
        return Err(Error::NoSolution);
    }
    UnitSeries::new(x)
}

fn ratio(f: &GammaSeries, a: &GammaSeries) -> Result<usize> {
    let (nf, n) = (f.order(), a.order());
    if nf % n != 0 {
        return Err(Error::OrderMismatch(format!("ord A = {n} does not divide ord F = {nf}")));
    }
    Ok(nf / n)
}

/// The unique `X` with `X∘A = F`, or `NoSolution`.
pub fn solve_right(f: &GammaSeries, a: &GammaSeries) -> Result<TruncatedSeries> {
    solve_right_with(&boettcher(f)?, &boettcher(a)?)
}

/// [`solve_right`] from precomputed Böttcher data.
pub fn solve_right_with(df: &BoettcherData, da: &BoettcherData) -> Result<TruncatedSeries> {
    let (f, a) = (df.series(), da.series());
    let m = ratio(f, a)?;
    let n = a.order();
    let gamma = df.beta_inv().compose(da.beta())?.pow(m as u64);
    let (r, big_r) = match gamma.split_symmetric(n) {
        Ok(v) => v,
        Err(Error::NotSymmetric { .. }) => return Err(Error::NoSolution),
        Err(e) => return Err(e),
    };
    let mate = TruncatedSeries::symmetric_mate(&big_r, r, n);
    let x = df.beta().compose(&mate.compose(da.beta_inv())?)?;
    let x = extend_right(x, a, f)?;
    if !x.compose(a)?.equiv(f) {
        return Err(Error::NoSolution);
    }
    Ok(x)
}

/// `G_A ⊆ G_F`, the group-theoretic form of the solvability test.
pub fn solve_right_criterion(f: &GammaSeries, a: &GammaSeries) -> Result<bool> {
    ratio(f, a)?;
    let gf = transition_group(&boettcher(f)?)?;
    let ga = transition_group(&boettcher(a)?)?;
    Ok(subgroup_test(&ga, &gf))
}

/// The `n` solutions of `A∘X = F`, indexed by `ε ∈ U_n`.
pub fn solve_left(f: &GammaSeries, a: &GammaSeries) -> Result<Vec<TruncatedSeries>> {
    let m = ratio(f, a)?;
    let n = a.order();
    let field = a.field().clone();
    let roots = field.roots_of_unity(n)?;
    let (df, da) = (boettcher(f)?, boettcher(a)?);
    let delta = da.beta_inv().compose(&df.beta().compose_monomial(&field.one(), m))?;
    let w = delta.unshift(m)?;
    let big_w = w.nth_root_series(n)?;
    let inner = big_w.compose_monomial(&field.one(), n).shift(m);
    let mut out: Vec<TruncatedSeries> = Vec::with_capacity(n);
    for r in roots {
        let eps = r.value(&field)?;
        let xt = inner.scale(&eps);
        let x = da.beta().compose(&xt.compose(df.beta_inv())?)?;
        let x = extend_left(x, a, f)?;
        if !a.compose(&x)?.equiv(f) {
            return Err(Error::VerificationFailed(format!("left solution {} does not recompose", r.index)));
        }
        out.push(x);
    }
    Ok(out)
}

/// `X = β_A∘z^rR(z^n)∘β_B^{-1}`, `Y = β_A∘z^rR^n(z)∘β_B^{-1}`, a solution of
/// `A∘X = Y∘B`.
pub fn semiconjugacy_family(
    a: &GammaSeries,
    b: &GammaSeries,
    r: usize,
    big_r: &TruncatedSeries,
) -> Result<SolutionFamily> {
    let n = a.order();
    if b.order() != n {
        return Err(Error::OrderMismatch(format!("ord A = {n} but ord B = {}", b.order())));
    }
    if r >= n {
        return Err(Error::OrderMismatch(format!("r = {r} must lie in 0..{n}")));
    }
    let xt = TruncatedSeries::reassemble(r, big_r, n);
    if xt.val() < 1 {
        return Err(Error::OrderMismatch("z^r R(z^n) must vanish at 0".into()));
    }
    let yt = TruncatedSeries::symmetric_mate(big_r, r, n);
    let (da, db) = (boettcher(a)?, boettcher(b)?);
    let x = da.beta().compose(&xt.compose(db.beta_inv())?)?;
    let y = da.beta().compose(&yt.compose(db.beta_inv())?)?;
    let ok = a.compose(&x)?.equiv(&y.compose(b)?);
    Ok(SolutionFamily {
        kind: SolutionKind::Parametric,
        solutions: vec![Solution {
            x,
            y: Some(y),
            residual_ok: ok,
        }],
        parameters: Some((r, big_r.clone())),
    })
}

/// Element of order `lcm(n, m)` in the group generated by two commuting
/// cyclic groups: the product of the components of coprime order.
fn joint_generator(ga: &TransitionGroup, gb: &TransitionGroup) -> Result<(UnitSeries, usize)> {
    let (n, m) = (ga.order(), gb.order());
    let (mut a_part, mut b_part) = (1usize, 1usize);
    let mut rest_n = n;
    let mut rest_m = m;
    let mut p = 2;
    while rest_n > 1 || rest_m > 1 {
        let (mut pn, mut pm) = (1, 1);
        while rest_n % p == 0 {
            rest_n /= p;
            pn *= p;
        }
        while rest_m % p == 0 {
            rest_m /= p;
            pm *= p;
        }
        if pn >= pm {
            a_part *= pn;
        } else {
            b_part *= pm;
        }
        p += 1;
    }
    let ha = ga.element(n / a_part)?;
    let hb = gb.element(m / b_part)?;
    Ok((UnitSeries::new(ha.compose(&hb)?)?, a_part * b_part))
}

/// A solution of `X∘A = Y∘B`, or `NoSolution` when `G_A` and `G_B` do not
/// commute.
///
/// When they commute they generate a cyclic group `H` of order
/// `lcm(ord A, ord B)`; the series built from a generator of `H` is fixed by
/// both groups and therefore factors through `A` and through `B`.
pub fn solve_joint(a: &GammaSeries, b: &GammaSeries) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let (da, db) = (boettcher(a)?, boettcher(b)?);
    let (ga, gb) = (transition_group(&da)?, transition_group(&db)?);
    if !ga.commutes_with(&gb)? {
        return Err(Error::NoSolution);
    }
    let (h, order) = joint_generator(&ga, &gb)?;
    if element_order(&h, order) != Some(order) {
        return Err(Error::PrecisionExhausted(
            "joint transition element has the wrong order at this truncation".into(),
        ));
    }
    let f = monic(&series_from_transition(&h, order)?)?;
    let df = boettcher(&f)?;
    let x = solve_right_with(&df, &da)?;
    let y = solve_right_with(&df, &db)?;
    if !x.compose(a)?.equiv(&y.compose(b)?) {
        return Err(Error::VerificationFailed("joint solution does not satisfy X∘A = Y∘B".into()));
    }
    Ok((x, y))
}

/// Whether the transition groups of `A` and `B` commute elementwise.
pub fn groups_commute(a: &GammaSeries, b: &GammaSeries) -> Result<bool> {
    let ga = transition_group(&boettcher(a)?)?;
    let gb = transition_group(&boettcher(b)?)?;
    ga.commutes_with(&gb)
}

/// `A` divided by its leading coefficient.
pub(crate) fn monic(a: &GammaSeries) -> Result<GammaSeries> {
    let lead = a.leading().expect("gamma series is nonzero").inv()?;
    GammaSeries::new(a.scale(&lead))
}

/// A common right factor `W` of order `d` with `A = Ã∘W`, `B = B̃∘W`.
pub fn common_right_factor(
    a: &GammaSeries,
    b: &GammaSeries,
    d: usize,
) -> Result<(GammaSeries, TruncatedSeries, TruncatedSeries)> {
    let (n, m) = (a.order(), b.order());
    if d < 2 || gcd(n, m) % d != 0 {
        return Err(Error::OrderMismatch(format!("d = {d} does not divide gcd({n}, {m})")));
    }
    let (da, db) = (boettcher(a)?, boettcher(b)?);
    let ga = transition_group(&da)?;
    let gb = transition_group(&db)?;
    // the unique subgroup of order d in G_A, tested against G_B
    let h = ga.element(n / d)?;
    if !gb.contains(&h) {
        return Err(Error::NoFactor);
    }
    let w = monic(&series_from_transition(&h, d)?)?;
    let dw = boettcher(&w)?;
    let at = solve_right_with(&da, &dw).map_err(|e| if e == Error::NoSolution { Error::NoFactor } else { e })?;
    let bt = solve_right_with(&db, &dw).map_err(|e| if e == Error::NoSolution { Error::NoFactor } else { e })?;
    Ok((w, at, bt))
}

/// `X` with `A∘C = X∘D`, provided `C∘φ_D ∈ G_A∘C` for the generator `φ_D`.
///
/// `C` may be a unit as well as a member of Γ.
pub fn factor_through(a: &GammaSeries, c: &TruncatedSeries, d: &GammaSeries) -> Result<TruncatedSeries> {
    let oc = c.ord().ok_or(Error::ZeroSeries)?;
    if oc == 0 {
        return Err(Error::CompositionUndefined);
    }
    if (a.order() * oc) % d.order() != 0 {
        return Err(Error::OrderMismatch(format!(
            "ord D = {} does not divide ord A · ord C = {}",
            d.order(),
            a.order() * oc
        )));
    }
    let gd = transition_group(&boettcher(d)?)?;
    let psi = c.compose(gd.generator())?;
    let phi_a = if oc == 1 {
        psi.compose(&c.invert_unit()?)?
    } else {
        let cg = GammaSeries::new(c.clone())?;
        match solve_right(&GammaSeries::new(psi)?, &cg) {
            Ok(v) => v,
            Err(Error::NoSolution) => return Err(Error::NoSolution),
            Err(e) => return Err(e),
        }
    };
    if phi_a.ord() != Some(1) || !a.compose(&phi_a)?.equiv(a) {
        return Err(Error::NoSolution);
    }
    let ac = GammaSeries::new(a.compose(c)?)?;
    solve_right(&ac, d)
}
