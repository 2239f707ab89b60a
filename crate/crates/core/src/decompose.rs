//! Decompositions `A = A₁∘A₂∘…∘A_k` into factors of order at least two:
//! enumeration of equivalence classes, equivalence witnesses and the gcd
//! refinement of a double decomposition.

use crate::boettcher::{boettcher, unit_power_solve, BoettcherData};
use crate::error::{Error, Result};
use crate::field::gcd;
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};

/// A tuple of integers `≥ 2` with product `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedFactorization {
    pub n: usize,
    pub parts: Vec<usize>,
}

/// Factors listed outermost first, so the target is `factors[0]∘factors[1]∘…`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub target: GammaSeries,
    pub factors: Vec<GammaSeries>,
    pub bridges: Option<Vec<UnitSeries>>,
}

impl Decomposition {
    pub fn new(target: GammaSeries, factors: Vec<GammaSeries>) -> Self {
        Decomposition {
            target,
            factors,
            bridges: None,
        }
    }

    /// `factors[0]∘…∘factors[k−1]`.
    pub fn recompose(&self) -> Result<TruncatedSeries> {
        compose_chain(self.factors.iter().map(|f| f.as_series()))
    }

    pub fn orders(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.order()).collect()
    }

    /// The chain recomposes to the target and the orders multiply out.
    pub fn is_valid(&self) -> bool {
        self.orders().iter().product::<usize>() == self.target.order()
            && self.recompose().map(|r| r.equiv(&self.target)).unwrap_or(false)
    }
}

fn compose_chain<'a>(mut it: impl DoubleEndedIterator<Item = &'a TruncatedSeries>) -> Result<TruncatedSeries> {
    let mut acc = it.next_back().expect("nonempty chain").clone();
    while let Some(f) = it.next_back() {
        acc = f.compose(&acc)?;
    }
    Ok(acc)
}

/// All ordered factorizations of `n`, lexicographically.
pub fn ordered_factorizations(n: usize) -> Vec<OrderedFactorization> {
    assert!(n >= 2, "factorizations need n ≥ 2");
    fn rec(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for d in 2..=n {
            if n % d != 0 {
                continue;
            }
            if d == n {
                out.push(vec![n]);
            } else {
                for rest in rec(n / d) {
                    let mut v = vec![d];
                    v.extend(rest);
                    out.push(v);
                }
            }
        }
        out
    }
    rec(n)
        .into_iter()
        .map(|parts| OrderedFactorization { n, parts })
        .collect()
}

/// Number of ordered factorizations, `H(n) = Σ_{d|n, d<n} H(d)`, `H(1) = 1`.
pub fn kalmar_count(n: usize) -> u64 {
    let mut h = vec![0u64; n + 1];
    if n >= 1 {
        h[1] = 1;
    }
    for k in 2..=n {
        h[k] = (1..k).filter(|d| k % d == 0).map(|d| h[d]).sum();
    }
    h[n]
}

/// `[β∘z^{n₁}, z^{n₂}, …, z^{n_r}∘β^{-1}]`, or `[A]` for a single part.
pub fn canonical_decomposition(d: &BoettcherData, f: &OrderedFactorization) -> Result<Decomposition> {
    let a = d.series();
    if f.n != d.order() || f.parts.iter().product::<usize>() != f.n {
        return Err(Error::OrderMismatch(format!(
            "factorization of {} does not match ord A = {}",
            f.n,
            d.order()
        )));
    }
    let r = f.parts.len();
    if r == 1 {
        return Ok(Decomposition::new(a.clone(), vec![a.clone()]));
    }
    let field = a.field();
    let big_n = a.trunc();
    let mut factors = Vec::with_capacity(r);
    factors.push(GammaSeries::new(d.beta().compose_monomial(&field.one(), f.parts[0]))?);
    for &p in &f.parts[1..r - 1] {
        factors.push(GammaSeries::new(TruncatedSeries::z_pow(field, p, big_n))?);
    }
    factors.push(GammaSeries::new(d.beta_inv().pow(f.parts[r - 1] as u64))?);
    Ok(Decomposition::new(a.clone(), factors))
}

/// One canonical decomposition per ordered factorization of `ord A`.
pub fn enumerate_classes(d: &BoettcherData) -> Result<Vec<Decomposition>> {
    if d.order() < 2 {
        return Ok(Vec::new());
    }
    ordered_factorizations(d.order())
        .iter()
        .map(|f| canonical_decomposition(d, f))
        .collect()
}

/// All unit `μ` with `A∘μ = T` (one per `n`-th root of `t_n/a_n`).
fn unit_solutions(a: &GammaSeries, t: &TruncatedSeries) -> Result<Vec<UnitSeries>> {
    let n = a.order();
    if t.ord() != Some(n) {
        return Ok(Vec::new());
    }
    let field = a.field().clone();
    let base = t.coeff(n).div(a.coeff(n))?.nth_root(n)?;
    let top = a.trunc().min(t.trunc());
    let jmax = top - n;
    let mut out = Vec::new();
    for r in field.roots_of_unity(n)? {
        let u0 = &base * &r.value(&field)?;
        let u = unit_power_solve(a, u0, jmax, |e, _| t.coeff(e).clone())?;
        out.push(UnitSeries::new(TruncatedSeries::new(&field, u, jmax).shift(1))?);
    }
    Ok(out)
}

/// Bridges `μ₁…μ_{k−1}` with `A₁ = Â₁∘μ₁^{-1}`, `A_i = μ_{i−1}∘Â_i∘μ_i^{-1}`,
/// `A_k = μ_{k−1}∘Â_k`, where `D1 = [A_i]`, `D2 = [Â_i]`.
pub fn equivalence_witness(d1: &Decomposition, d2: &Decomposition) -> Result<Vec<UnitSeries>> {
    if d1.orders() != d2.orders() {
        return Err(Error::NotEquivalent);
    }
    let k = d1.factors.len();
    if k == 1 {
        return if d1.factors[0].equiv(&d2.factors[0]) {
            Ok(Vec::new())
        } else {
            Err(Error::NotEquivalent)
        };
    }
    let field = d1.target.field().clone();
    let trunc = d1.target.trunc();
    let id = TruncatedSeries::identity(&field, trunc);

    // depth-first over the n_i branches of each bridge
    fn dfs(
        i: usize,
        prev: &TruncatedSeries,
        d1: &Decomposition,
        d2: &Decomposition,
        chain: &mut Vec<UnitSeries>,
    ) -> Result<bool> {
        let k = d1.factors.len();
        let t = prev.compose(&d2.factors[i])?;
        if i == k - 1 {
            return Ok(d1.factors[i].equiv(&t));
        }
        for mu in unit_solutions(&d1.factors[i], &t)? {
            chain.push(mu.clone());
            if dfs(i + 1, &mu, d1, d2, chain)? {
                return Ok(true);
            }
            chain.pop();
        }
        Ok(false)
    }

    let mut chain = Vec::new();
    if dfs(0, &id, d1, d2, &mut chain)? {
        Ok(chain)
    } else {
        Err(Error::NotEquivalent)
    }
}

/// Output of [`engstrom_refine`]: `A = U∘Ã`, `B = U∘B̃`, `C = C̃∘V`,
/// `D = D̃∘V`, `Ã∘C̃ = B̃∘D̃`. The tilde factors may have order one.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub u: TruncatedSeries,
    pub v: TruncatedSeries,
    pub a: TruncatedSeries,
    pub b: TruncatedSeries,
    pub c: TruncatedSeries,
    pub d: TruncatedSeries,
}

/// Refines `A∘C = B∘D` through `U` of order `gcd(ord A, ord B)` and `V` of
/// order `gcd(ord C, ord D)`.
pub fn engstrom_refine(a: &GammaSeries, c: &GammaSeries, b: &GammaSeries, d: &GammaSeries) -> Result<Refinement> {
    let f = a.compose(c)?;
    if !f.equiv(&b.compose(d)?) {
        return Err(Error::NotADoubleDecomposition);
    }
    let f = GammaSeries::new(f)?;
    let field = f.field().clone();
    let df = boettcher(&f)?;
    let (oa, oc, ob, od) = (a.order(), c.order(), b.order(), d.order());
    let bridge = |x: &GammaSeries, y: &GammaSeries, ox: usize, oy: usize| -> Result<UnitSeries> {
        let canon = canonical_decomposition(&df, &OrderedFactorization { n: ox * oy, parts: vec![ox, oy] })?;
        let given = Decomposition::new(f.clone(), vec![x.clone(), y.clone()]);
        Ok(equivalence_witness(&given, &canon)?.remove(0))
    };
    let nu = bridge(a, c, oa, oc)?;
    let mu = bridge(b, d, ob, od)?;
    let (u, v) = (gcd(oa, ob), gcd(oc, od));
    let one = field.one();
    let big_u = df.beta().compose_monomial(&one, u);
    let big_v = df.beta_inv().pow(v as u64);
    let at = nu.inverse().pow((oa / u) as u64);
    let bt = mu.inverse().pow((ob / u) as u64);
    let ct = nu.compose(&TruncatedSeries::z_pow(&field, oc / v, f.trunc()))?;
    let dt = mu.compose(&TruncatedSeries::z_pow(&field, od / v, f.trunc()))?;
    let checks = [
        big_u.compose(&at)?.equiv(a),
        big_u.compose(&bt)?.equiv(b),
        ct.compose(&big_v)?.equiv(c),
        dt.compose(&big_v)?.equiv(d),
        at.compose(&ct)?.equiv(&bt.compose(&dt)?),
    ];
    if checks.iter().any(|ok| !ok) {
        return Err(Error::VerificationFailed("refinement relations".into()));
    }
    Ok(Refinement {
        u: big_u,
        v: big_v,
        a: at,
        b: bt,
        c: ct,
        d: dt,
    })
}
