//! Seeded property checks over every module, for the `selftest` command.

use crate::boettcher::boettcher;
use crate::decompose::{enumerate_classes, kalmar_count};
use crate::error::Result;
use crate::field::Field;
use crate::random::Sampler;
use crate::semigroup::commute_check;
use crate::series::{GammaSeries, TruncatedSeries};
use crate::solvers::{solve_left, solve_right};
use crate::symmetry::{boettcher_symmetry, detect_symmetry, transition_symmetry};
use crate::transition::transition_group;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

type Case = fn(&mut Sampler, usize) -> Result<bool>;

fn field_case(s: &mut Sampler, _: usize) -> Result<bool> {
    let f = s.field().clone();
    let (a, b) = (s.scalar(), s.scalar());
    let z = f.root_of_unity(12, s.range(0, 11))?;
    let ab = &(&a * &z) * &b;
    let back = ab.div(&b)?.div(&z)?;
    let root = a.pow(2).nth_root(2)?;
    Ok((&back - &a).is_zero() && (&root.pow(2) - &a.pow(2)).is_zero())
}

fn series_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let u = s.unit();
    let a = s.gamma(2 + i % 3);
    let b = s.gamma(2);
    let id = u.compose(&u.inverse())?;
    let left = a.compose(&b)?.compose(&u)?;
    let right = a.compose(&b.compose(&u)?)?;
    Ok(id.is_identity() && left.equiv(&right))
}

fn boettcher_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let a = s.gamma(2 + i % 5);
    Ok(boettcher(&a)?.residual_ok())
}

fn transition_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let a = s.gamma([2, 3, 4, 6][i % 4]);
    let g = transition_group(&boettcher(&a)?)?;
    let mut ok = true;
    for (j, e) in g.elements().iter().enumerate() {
        ok &= a.compose(e)?.equiv(&a);
        ok &= g.elements()[..j].iter().all(|x| !x.equiv(e));
    }
    Ok(ok)
}

fn solver_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let n = [2, 3, 4][i % 3];
    let a = s.gamma(n);
    let x = s.gamma(2);
    let f = GammaSeries::new(x.compose(&a)?)?;
    let right = solve_right(&f, &a)?.equiv(&x);
    let g = GammaSeries::new(a.compose(&x)?)?;
    let left = solve_left(&g, &a)?;
    Ok(right && left.len() == n && left.iter().any(|y| y.equiv(&x)))
}

fn decompose_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let n = 2 + i % 11;
    let a = s.gamma(n);
    let classes = enumerate_classes(&boettcher(&a)?)?;
    let mut ok = classes.len() as u64 == kalmar_count(n);
    for c in &classes {
        ok &= c.recompose()?.equiv(&a);
    }
    Ok(ok)
}

fn symmetry_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let n = [2, 3, 4, 6][i % 4];
    let m = 2 + i % 3;
    let f = s.field().clone();
    // a z^{n+1} term rules out every μ∘z^r R(z^m)
    let a = if i % 2 == 0 {
        GammaSeries::new(s.sparse(n, f.one(), m))?
    } else {
        let (g, c) = (s.gamma(n), s.scalar());
        let bump = TruncatedSeries::monomial(&f, c, n + 1, s.trunc());
        let a = g.add(&bump);
        GammaSeries::new(if a.coeff(n + 1).is_zero() { a.add(&bump) } else { a })?
    };
    let d = boettcher(&a)?;
    let g = transition_group(&d)?;
    let support = detect_symmetry(&a).has(m);
    Ok(support == boettcher_symmetry(&d, m) && support == transition_symmetry(&g, m))
}

fn semigroup_case(s: &mut Sampler, i: usize) -> Result<bool> {
    let f = s.field().clone();
    let n = 2 + i % 3;
    let beta = s.unit();
    let b_coef = f.root_of_unity(24, ((n - 1) * s.range(0, 23)) % 24)?;
    let conj = |c, k| -> Result<GammaSeries> {
        let m = TruncatedSeries::monomial(&f, c, k, beta.trunc());
        GammaSeries::new(beta.compose(&m.compose(&beta.inverse())?)?)
    };
    let a = conj(f.one(), 2)?;
    let b = conj(b_coef, n)?;
    let v = commute_check(&a, &b)?;
    Ok(v.criterion == Some(v.direct))
}

pub const SUITES: [(&str, Case); 8] = [
    ("coeff_field", field_case),
    ("series_core", series_case),
    ("boettcher", boettcher_case),
    ("transition", transition_case),
    ("solvers", solver_case),
    ("decompose", decompose_case),
    ("symmetry", symmetry_case),
    ("semigroup", semigroup_case),
];

/// Runs every suite with `cases` instances each; identical seeds give
/// identical reports.
pub fn run(field: &Field, trunc: usize, seed: u64, cases: usize) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(k, (name, case))| {
            let mut s = Sampler::new(seed.wrapping_add(k as u64), field, trunc);
            let mut passed = 0;
            let mut failures = Vec::new();
            for i in 0..cases {
                match case(&mut s, i) {
                    Ok(true) => passed += 1,
                    Ok(false) => failures.push(format!("case {i}: property violated")),
                    Err(e) => failures.push(format!("case {i}: {e}")),
                }
            }
            SuiteResult {
                name,
                passed,
                total: cases,
                failures,
            }
        })
        .collect()
}
