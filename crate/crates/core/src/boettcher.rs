//! Böttcher functions: unit series `β` with `A∘β = β∘z^n`.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};

/// A series `A` of order `n`, one of its Böttcher functions and the branch
/// index `i` with `β = β₀∘ε^i z`, `ε` the canonical primitive `(n−1)`-th root
/// of unity.
#[derive(Clone, Debug)]
pub struct BoettcherData {
    a: GammaSeries,
    n: usize,
    beta: UnitSeries,
    beta_inv: UnitSeries,
    branch: usize,
}

impl BoettcherData {
    pub fn series(&self) -> &GammaSeries {
        &self.a
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> &UnitSeries {
        &self.beta
    }

    /// `β^{-1}`, computed once at construction.
    pub fn beta_inv(&self) -> &UnitSeries {
        &self.beta_inv
    }

    pub fn branch(&self) -> usize {
        self.branch
    }

    /// The same data with `β` replaced by branch `i` of the family.
    pub fn with_branch(&self, i: usize) -> Result<BoettcherData> {
        let k = self.n - 1;
        let i = i % k;
        if i == self.branch {
            return Ok(self.clone());
        }
        let f = self.a.field();
        let eps = f.root_of_unity(k, (i + k - self.branch) % k)?;
        let beta = UnitSeries::new(self.beta.compose_monomial(&eps, 1))?;
        let beta_inv = beta.inverse();
        Ok(BoettcherData {
            a: self.a.clone(),
            n: self.n,
            beta,
            beta_inv,
            branch: i,
        })
    }

    /// `A∘β − β∘z^n` measured by [`TruncatedSeries::residual`].
    pub fn residual(&self) -> f64 {
        let (lhs, rhs) = self.defining_sides();
        lhs.residual(&rhs)
    }

    /// True when the defining identity holds to the backend's zero test.
    pub fn residual_ok(&self) -> bool {
        let (lhs, rhs) = self.defining_sides();
        lhs.equiv(&rhs)
    }

    fn defining_sides(&self) -> (TruncatedSeries, TruncatedSeries) {
        let lhs = self.a.compose(&self.beta).expect("unit inner series");
        let rhs = self.beta.compose_monomial(&self.a.field().one(), self.n);
        (lhs, rhs)
    }
}

/// Solves `A(z·u(z)) = T(z)` for `u`, given `u₀` with `c_n u₀^n = t_n`.
///
/// `rhs(e, u)` returns the target coefficient at index `e = n + j`; it may
/// read `u_0..u_{j−1}`. Comparing coefficients of `z^{n+j}` gives one linear
/// equation for `u_j` with pivot `n·c_n·u₀^{n−1}`; the powers `P_k = u^k` are
/// maintained by `j·u₀·P_k[j] = Σ_{i=1}^{j} ((k+1)i − j)·u_i·P_k[j−i]`.
pub(crate) fn unit_power_solve(
    a: &TruncatedSeries,
    u0: FieldElement,
    jmax: usize,
    mut rhs: impl FnMut(usize, &[FieldElement]) -> FieldElement,
) -> Result<Vec<FieldElement>> {
    let field = a.field().clone();
    let n = a.ord().ok_or(Error::ZeroSeries)?;
    let top = a.trunc().min(n + jmax);
    let c = a.coeffs();
    let cn = &c[n];
    let u0_inv = u0.inv()?;
    let ks: Vec<usize> = (n + 1..=top).filter(|&k| !c[k].is_structural_zero()).collect();
    let mut p: Vec<Vec<FieldElement>> = vec![Vec::new(); top + 1];
    for &k in std::iter::once(&n).chain(ks.iter()) {
        p[k].push(u0.pow(k as u64));
    }
    let pivot = (cn * &u0.pow((n - 1) as u64)).mul_int(n as i64);
    if pivot.is_zero() {
        return Err(Error::PrecisionExhausted("triangular pivot vanished".into()));
    }
    let pivot_inv = pivot.inv()?;
    let mut u: Vec<FieldElement> = vec![u0];

    let power_term = |k: usize, j: usize, u: &[FieldElement], pk: &[FieldElement], skip_last: bool| {
        let last = if skip_last { j - 1 } else { j };
        let mut acc = field.zero();
        for i in 1..=last {
            let w = (k as i64 + 1) * i as i64 - j as i64;
            if w == 0 || u[i].is_structural_zero() || pk[j - i].is_structural_zero() {
                continue;
            }
            acc = &acc + &(&u[i] * &pk[j - i]).mul_int(w);
        }
        &(&acc * &u0_inv) * &field.from_ratio(1, j as i64)
    };

    for j in 1..=jmax {
        let e = n + j;
        let mut lhs = field.zero();
        for &k in &ks {
            if k > e {
                break;
            }
            lhs = &lhs + &(&c[k] * &p[k][e - k]);
        }
        let rest_n = power_term(n, j, &u, &p[n], true);
        lhs = &lhs + &(cn * &rest_n);
        let target = rhs(e, &u);
        u.push(&(&target - &lhs) * &pivot_inv);
        for &k in std::iter::once(&n).chain(ks.iter()) {
            if j + k <= top {
                let v = power_term(k, j, &u, &p[k], false);
                p[k].push(v);
            }
        }
    }
    Ok(u)
}

/// Branch-0 Böttcher data of `A`: `β = z·u(z)` with `u₀^{n−1} = 1/c_n`
/// (canonical root) and `A(β) = β(z^n)` solved coefficient by coefficient.
pub fn boettcher(a: &GammaSeries) -> Result<BoettcherData> {
    let field = a.field().clone();
    let n = a.order();
    let jmax = a.trunc() - n;
    let u0 = a.coeff(n).inv()?.nth_root(n - 1)?;
    let zero = field.zero();
    let u = unit_power_solve(a, u0, jmax, |e, u| if e % n == 0 { u[e / n - 1].clone() } else { zero.clone() })?;
    let beta = UnitSeries::new(TruncatedSeries::new(&field, u, jmax).shift(1))?;
    let beta_inv = beta.inverse();
    Ok(BoettcherData {
        a: a.clone(),
        n,
        beta,
        beta_inv,
        branch: 0,
    })
}

/// The full family `β∘εz`, `ε ∈ U_{n−1}`, indexed by branch.
pub fn all_boettcher(d: &BoettcherData) -> Result<Vec<UnitSeries>> {
    let k = d.n - 1;
    let f = d.a.field();
    let roots = f.roots_of_unity(k)?;
    roots
        .iter()
        .map(|r| {
            let eps = f.root_of_unity(k, (r.index + k - d.branch) % k)?;
            UnitSeries::new(d.beta.compose_monomial(&eps, 1))
        })
        .collect()
}

/// `β^{-1}∘A∘β`, which is `z^n` to precision.
pub fn normalize(d: &BoettcherData) -> Result<GammaSeries> {
    let inner = d.a.compose(&d.beta)?;
    GammaSeries::new(d.beta_inv.compose(&inner)?)
}
