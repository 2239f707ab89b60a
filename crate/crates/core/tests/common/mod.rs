//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the Böttcher or transition machinery: the solvers are
//! undetermined-coefficient linear systems and the counts are plain
//! recursions.

#![allow(dead_code)]

use gamma_series::{Field, FieldElement, GammaSeries, TruncatedSeries};

/// Gaussian elimination on `rows · x = rhs`. Returns `(solution, rank)` with
/// free unknowns set to zero, or `None` when the system is inconsistent.
pub fn solve_linear(
    field: &Field,
    mut rows: Vec<Vec<FieldElement>>,
    mut rhs: Vec<FieldElement>,
    unknowns: usize,
) -> Option<(Vec<FieldElement>, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][col].inv().unwrap();
        for j in col..unknowns {
            rows[r][j] = &rows[r][j] * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in col..unknowns {
                let d = &f * &rows[r][j];
                rows[i][j] = &rows[i][j] - &d;
            }
            let d = &f * &rhs[r];
            rhs[i] = &rhs[i] - &d;
        }
        pivots.push(col);
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some((x, pivots.len()))
}

/// Powers `A^j`, `j = 0..=k`.
fn powers(a: &TruncatedSeries, k: usize) -> Vec<TruncatedSeries> {
    let f = a.field();
    let mut out = vec![TruncatedSeries::monomial(f, f.one(), 0, a.trunc())];
    for j in 1..=k {
        out.push(out[j - 1].mul(a));
    }
    out
}

pub struct BruteRight {
    pub x: TruncatedSeries,
    pub unique: bool,
}

/// `X∘A = F` for polynomial `X` of degree `≤ k`, compared on the rows where
/// the cut of `X` is invisible: indices `< ord A·(k+1)` and `≤ min(N_A, N_F)`.
pub fn brute_right(f: &TruncatedSeries, a: &TruncatedSeries, k: usize) -> Option<BruteRight> {
    let field = a.field().clone();
    let n = a.ord().unwrap();
    let rows_top = f.trunc().min(a.trunc()).min(n * (k + 1) - 1);
    let p = powers(a, k);
    let rows: Vec<Vec<FieldElement>> = (0..=rows_top)
        .map(|e| (1..=k).map(|j| p[j].coeff(e).clone()).collect())
        .collect();
    let rhs = (0..=rows_top).map(|e| f.coeff(e).clone()).collect();
    let (sol, rank) = solve_linear(&field, rows, rhs, k)?;
    let mut c = vec![field.zero()];
    c.extend(sol);
    let x = TruncatedSeries::new(&field, c, rows_top / n);
    Some(BruteRight { x, unique: rank == k })
}

/// Solvability of `X∘A = Y∘B` with `ord X = ord B`, `ord Y = ord A` and `X`
/// monic, for polynomials of degree `≤ k`.
pub fn brute_joint(a: &TruncatedSeries, b: &TruncatedSeries, k: usize) -> bool {
    let field = a.field().clone();
    let (n, m) = (a.ord().unwrap(), b.ord().unwrap());
    let rows_top = a.trunc().min(b.trunc()).min(n.min(m) * (k + 1) - 1);
    let pa = powers(a, k);
    let pb = powers(b, k);
    // unknowns x_{m+1..=k}, then y_{n..=k}
    let xs: Vec<usize> = (m + 1..=k).collect();
    let ys: Vec<usize> = (n..=k).collect();
    let unknowns = xs.len() + ys.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for e in 0..=rows_top {
        let mut row: Vec<FieldElement> = xs.iter().map(|&j| pa[j].coeff(e).clone()).collect();
        row.extend(ys.iter().map(|&j| -pb[j].coeff(e).clone()));
        rows.push(row);
        rhs.push(-pa[m].coeff(e).clone());
    }
    solve_linear(&field, rows, rhs, unknowns).is_some()
}

/// Ordered factorizations of `n` into parts `≥ 2`, counted by recursion on
/// the first part.
pub fn kalmar(n: usize) -> u64 {
    if n == 1 {
        return 1;
    }
    (2..=n).filter(|d| n % d == 0).map(|d| kalmar(n / d)).sum()
}

/// Support test: every nonzero index `≡ ord A (mod m)`.
pub fn support_symmetric(a: &TruncatedSeries, m: usize) -> bool {
    let n = a.ord().unwrap();
    a.support().iter().all(|k| k % m == n % m)
}

/// `a z^n ∘ b z^m = b z^m ∘ a z^n`, i.e. `a b^n = b a^m`.
pub fn monomials_commute(a: &FieldElement, n: usize, b: &FieldElement, m: usize) -> bool {
    let l = a * &b.pow(n as u64);
    let r = b * &a.pow(m as u64);
    (&l - &r).is_zero()
}

pub fn gamma(s: TruncatedSeries) -> GammaSeries {
    GammaSeries::new(s).unwrap()
}
