//! Acceptance suite: eight criteria at desk scale (N = 32, conductor 24,
//! orders ≤ 12), each printed as one PASS/FAIL line. The last criterion
//! re-runs the first seven on the floating-point backend and compares.

mod common;

use std::time::Instant;

use gamma_series::boettcher::boettcher;
use gamma_series::decompose::enumerate_classes;
use gamma_series::random::Sampler;
use gamma_series::semigroup::{commute_check, monomialize, reversibility_probe, shared_boettcher_scale};
use gamma_series::solvers::{groups_commute, solve_joint, solve_left, solve_right, solve_right_criterion};
use gamma_series::symmetry::{
    boettcher_symmetry, decompose_symmetric, detect_symmetry, reznick_check, transition_symmetry,
};
use gamma_series::transition::transition_group;
use gamma_series::{Error, Field, FieldElement, GammaSeries, TruncatedSeries, UnitSeries};

use common::{brute_joint, brute_right, gamma, kalmar, monomials_commute, support_symmetric};

const N: usize = 32;
const SEED: u64 = 0x5eed_2024;

#[derive(Default)]
struct Report {
    verdicts: Vec<bool>,
    failures: Vec<String>,
    residual: f64,
    notes: Vec<String>,
}

impl Report {
    fn fail(&mut self, msg: String) {
        if self.failures.len() < 8 {
            self.failures.push(msg);
        } else if self.failures.len() == 8 {
            self.failures.push("...".into());
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) -> bool {
        if !ok {
            self.fail(msg());
        }
        ok
    }

    /// `a ≡ b`, recording the residual.
    fn same(&mut self, a: &TruncatedSeries, b: &TruncatedSeries, what: impl FnOnce() -> String) -> bool {
        self.residual = self.residual.max(a.residual(b));
        self.check(a.equiv(b), what)
    }

    fn ok<T>(&mut self, r: Result<T, Error>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{what}: {e}"));
                None
            }
        }
    }
}

fn conj(mu: &UnitSeries, core: &TruncatedSeries) -> GammaSeries {
    gamma(mu.compose(&core.compose(&mu.inverse()).unwrap()).unwrap())
}

fn mono(field: &Field, c: FieldElement, n: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(field, c, n, N)
}

/// `ζ_24^{(m−1)k} 2^{(m−1)e}`, a coefficient whose Böttcher root stays in
/// the field.
fn friendly(field: &Field, m: usize, k: usize, e: usize) -> FieldElement {
    let z = field.root_of_unity(24, ((m - 1) * k) % 24).unwrap();
    &z * &field.from_i64(2).pow(((m - 1) * e) as u64)
}

fn c1(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 1, field, N);
    s.terms = 4;
    s.spread = 8;
    let start = Instant::now();
    for i in 0..100 {
        let n = 2 + i % 5;
        let a = s.gamma(n);
        let Some(d) = rep.ok(boettcher(&a), "boettcher") else { continue };
        let lhs = a.compose(d.beta()).unwrap();
        let rhs = d.beta().compose_monomial(&field.one(), n);
        rep.check(lhs.trunc().min(rhs.trunc()) >= N, || format!("instance {i}: sides known only to {}", lhs.trunc()));
        let ok = rep.same(&lhs, &rhs, || format!("instance {i}: A∘β ≠ β∘z^{n}"));
        rep.verdicts.push(ok);
    }
    let secs = start.elapsed().as_secs_f64();
    rep.notes.push(format!("{secs:.2}s"));
    rep.check(secs < 10.0, || format!("runtime {secs:.1}s exceeds 10s"));
    rep
}

fn c2(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 2, field, N);
    for (n, h) in [(4, 2), (8, 4), (12, 8)] {
        rep.check(kalmar(n) == h, || format!("oracle H({n}) = {} ≠ {h}", kalmar(n)));
    }
    for n in 2..=16 {
        let a = s.gamma(n);
        let Some(d) = rep.ok(boettcher(&a), "boettcher") else { continue };
        let Some(classes) = rep.ok(enumerate_classes(&d), "enumerate_classes") else { continue };
        rep.check(classes.len() as u64 == kalmar(n), || {
            format!("n = {n}: {} classes, oracle {}", classes.len(), kalmar(n))
        });
        let mut orders: Vec<Vec<usize>> = classes.iter().map(|c| c.orders()).collect();
        orders.sort();
        orders.dedup();
        rep.check(orders.len() == classes.len(), || format!("n = {n}: repeated order tuples"));
        for (j, c) in classes.iter().enumerate() {
            let r = c.recompose().unwrap();
            rep.same(&r, &a, || format!("n = {n}: class {j} does not recompose"));
        }
        rep.verdicts.push(classes.len() as u64 == kalmar(n));
    }
    rep
}

fn c3(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 3, field, N);
    let exact = field.is_exact();
    let pairs: Vec<(usize, usize)> = (2..=6).flat_map(|n| (1..=12 / n).map(move |m| (n, m))).collect();
    let random_x = |s: &mut Sampler, m: usize| -> TruncatedSeries {
        if m == 1 {
            s.unit().into_series()
        } else {
            s.gamma(m).into_series()
        }
    };
    // F = X∘A
    for i in 0..200 {
        let (n, m) = pairs[i % pairs.len()];
        let a = s.gamma(n);
        let x = random_x(&mut s, m);
        let f = gamma(x.compose(&a).unwrap());
        let Some(xh) = rep.ok(solve_right(&f, &a), "solve_right") else { continue };
        let ok = rep.same(&xh, &x, || format!("right {i}: recovered X differs"));
        rep.check(xh.trunc() == N / n, || format!("right {i}: X known to {} only", xh.trunc()));
        if exact {
            let b = brute_right(&f, &a, N / n);
            rep.check(b.as_ref().is_some_and(|b| b.unique && b.x.equiv(&x)), || {
                format!("right {i}: oracle does not find a unique X")
            });
        }
        rep.verdicts.push(ok);
    }
    // F = A∘X
    let lpairs: Vec<(usize, usize)> =
        [2usize, 3, 4, 6].iter().flat_map(|&n| (1..=12 / n).map(move |m| (n, m))).collect();
    for i in 0..200 {
        let (n, m) = lpairs[i % lpairs.len()];
        let a = s.gamma(n);
        let x = random_x(&mut s, m);
        let f = gamma(a.compose(&x).unwrap());
        let Some(sols) = rep.ok(solve_left(&f, &a), "solve_left") else { continue };
        rep.check(sols.len() == n, || format!("left {i}: {} solutions for n = {n}", sols.len()));
        for (j, y) in sols.iter().enumerate() {
            rep.same(&a.compose(y).unwrap(), &f, || format!("left {i}: solution {j} does not recompose"));
            for z in &sols[..j] {
                rep.check(!y.equiv(z), || format!("left {i}: repeated solution"));
            }
        }
        let found = sols.iter().any(|y| y.equiv(&x));
        rep.check(found, || format!("left {i}: constructed X not among the solutions"));
        rep.verdicts.push(found);
    }
    // perturbed F = X∘A + δz^{mn+j}
    for i in 0..100 {
        let (n, m) = pairs[i % pairs.len()];
        let a = s.gamma(n);
        let x = random_x(&mut s, m);
        let j = s.range(1, n - 1);
        let delta = s.scalar();
        let f = gamma(x.compose(&a).unwrap().add(&mono(field, delta, m * n + j)));
        let r = solve_right(&f, &a);
        let none = matches!(r, Err(Error::NoSolution));
        rep.check(none, || format!("perturbed {i}: expected NoSolution, got {r:?}"));
        if exact {
            let b = brute_right(&f, &a, 12);
            rep.check(b.is_none(), || format!("perturbed {i}: oracle finds a solution"));
        }
        rep.verdicts.push(none);
    }
    rep
}

fn c4(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 4, field, N);
    let exact = field.is_exact();

    // (a) solve_right succeeds iff G_A ⊆ G_F
    let pairs: Vec<(usize, usize)> = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6), (3, 1), (3, 2), (3, 4), (4, 1), (4, 2), (4, 3), (6, 1), (6, 2)]
        .to_vec();
    let mut positives = 0;
    for i in 0..200 {
        let (n, m) = pairs[i % pairs.len()];
        let a = s.gamma(n);
        let f = match i % 4 {
            0 | 2 => gamma(if m == 1 { s.unit().into_series() } else { s.gamma(m).into_series() }.compose(&a).unwrap()),
            1 => s.gamma(n * m),
            _ => {
                let k = s.range(1, 4);
                let b = gamma(a.add(&mono(field, s.scalar(), n + k)));
                let x = if m == 1 { s.unit().into_series() } else { s.gamma(m).into_series() };
                gamma(x.compose(&b).unwrap())
            }
        };
        let solved = match solve_right(&f, &a) {
            Ok(x) => {
                rep.same(&x.compose(&a).unwrap(), &f, || format!("4a {i}: X∘A ≠ F"));
                true
            }
            Err(Error::NoSolution) => false,
            Err(e) => {
                rep.fail(format!("4a {i}: {e}"));
                continue;
            }
        };
        let Some(crit) = rep.ok(solve_right_criterion(&f, &a), "criterion") else { continue };
        rep.check(solved == crit, || format!("4a {i}: solve_right {solved}, G_A ⊆ G_F {crit}"));
        if i % 2 == 0 {
            rep.check(solved, || format!("4a {i}: constructed F = X∘A not solved"));
        }
        positives += solved as usize;
        rep.verdicts.push(solved);
    }
    rep.notes.push(format!("a: {positives}/200 solvable"));

    // (b) solve_joint succeeds iff the transition groups commute
    let orders = [2usize, 3, 4, 6];
    let mut positives = 0;
    let mut brute_checked = 0;
    for i in 0..100 {
        let n = orders[i % 4];
        let m = orders[(i / 4) % 4];
        let (a, b) = match i % 3 {
            0 => {
                let nu = s.unit();
                let (m1, m2) = (s.unit(), s.unit());
                let a = gamma(m1.compose(&TruncatedSeries::z_pow(field, n, N).compose(&nu).unwrap()).unwrap());
                let b = gamma(m2.compose(&TruncatedSeries::z_pow(field, m, N).compose(&nu).unwrap()).unwrap());
                (a, b)
            }
            1 => {
                let (nu1, nu2) = (s.unit(), s.nonlinear_unit());
                let a = gamma(TruncatedSeries::z_pow(field, n, N).compose(&nu1).unwrap());
                let b = gamma(TruncatedSeries::z_pow(field, m, N).compose(&nu2.compose(&nu1).unwrap()).unwrap());
                (a, b)
            }
            _ => (s.gamma(n), s.gamma(m)),
        };
        let solved = match solve_joint(&a, &b) {
            Ok((x, y)) => {
                rep.same(&x.compose(&a).unwrap(), &y.compose(&b).unwrap(), || format!("4b {i}: X∘A ≠ Y∘B"));
                true
            }
            Err(Error::NoSolution) => false,
            Err(e) => {
                rep.fail(format!("4b {i}: {e}"));
                continue;
            }
        };
        let Some(comm) = rep.ok(groups_commute(&a, &b), "groups_commute") else { continue };
        rep.check(solved == comm, || format!("4b {i}: solve_joint {solved}, commuting groups {comm}"));
        if i % 3 == 0 {
            rep.check(solved, || format!("4b {i}: shared right factor not detected"));
        }
        if exact && brute_checked < 20 {
            brute_checked += 1;
            let bj = brute_joint(&a, &b, 12);
            rep.check(bj == solved, || format!("4b {i}: oracle says {bj}, solver {solved}"));
        }
        positives += solved as usize;
        rep.verdicts.push(solved);
    }
    rep.notes.push(format!("b: {positives}/100 solvable, {brute_checked} oracle checks"));

    // (c) a shared Böttcher scale exists iff the probe finds every iterate equation solvable
    let mut positives = 0;
    for i in 0..100 {
        let n = 2 + i % 4;
        let m = 2 + (i / 4) % 3;
        let a_coef = friendly(field, n, 0, s.range(0, 1));
        let b_coef = friendly(field, m, s.range(0, 23), s.range(0, 1));
        let beta = s.unit();
        let a = conj(&beta, &mono(field, a_coef, n));
        let b = match i % 3 {
            0 => conj(&beta, &mono(field, b_coef, m)),
            1 => conj(&s.nonlinear_unit(), &mono(field, b_coef, m)),
            _ => s.gamma(m),
        };
        let (Some(da), Some(db)) = (rep.ok(boettcher(&a), "boettcher"), rep.ok(boettcher(&b), "boettcher")) else {
            continue;
        };
        let scale = shared_boettcher_scale(&da, &db).is_some();
        let Some(probe) = rep.ok(reversibility_probe(&a, &b, 3, 3), "probe") else { continue };
        rep.check(scale == probe, || format!("4c {i}: scale {scale}, probe {probe}"));
        rep.check(scale == (i % 3 == 0), || format!("4c {i}: unexpected verdict {scale}"));
        positives += scale as usize;
        rep.verdicts.push(scale);
    }
    rep.notes.push(format!("c: {positives}/100 shared"));
    rep
}

fn c5(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 5, field, N);
    let orders = [2usize, 3, 4, 6];
    let moduli = [2usize, 3, 4];

    // symmetric S, μ∘S, and series with a z^{n+1} term (never μ∘symmetric)
    for i in 0..100 {
        let n = orders[i % 4];
        let m = moduli[(i / 4) % 3];
        let sym = gamma(s.sparse(n, field.one(), m));
        let a = match i % 3 {
            0 => sym,
            1 => gamma(s.nonlinear_unit().compose(&sym).unwrap()),
            _ => {
                let (g, c) = (s.gamma(n), s.scalar());
                let a = g.add(&mono(field, c.clone(), n + 1));
                gamma(if a.coeff(n + 1).is_zero() { a.add(&mono(field, c, n + 1)) } else { a })
            }
        };
        let support = support_symmetric(&a, m);
        let detected = detect_symmetry(&a).has(m);
        let Some(d) = rep.ok(boettcher(&a), "boettcher") else { continue };
        let Some(g) = rep.ok(transition_group(&d), "transition_group") else { continue };
        let bs = boettcher_symmetry(&d, m);
        let ts = transition_symmetry(&g, m);
        rep.check(support == detected && detected == bs && ts == (i % 3 != 2), || {
            format!("sym {i}: support {support}, detect {detected}, boettcher {bs}, transition {ts}")
        });
        if i % 3 == 0 {
            rep.check(support, || format!("sym {i}: constructed symmetric series not detected"));
        }
        rep.verdicts.push(support);
        rep.verdicts.push(ts);
    }

    let mut coprime = 0;
    for i in 0..100 {
        let m = [2usize, 3, 4, 6][i % 4];
        let n2 = 2 + (i / 4) % 3;
        let n1 = 2 + (i / 12) % 2;
        let r2 = n2 % m;
        let m1 = m / gcd(r2, m);
        let s2 = s.sparse(n2, field.one(), m);
        let s1 = s.sparse(n1, field.one(), m1);
        let mu = s.unit();
        let a2 = gamma(mu.compose(&s2).unwrap());
        let a1 = gamma(s1.compose(&mu.inverse()).unwrap());
        let a = gamma(a1.compose(&a2).unwrap());
        let r = (n1 * n2) % m;
        let Some(sd) = rep.ok(decompose_symmetric(&a, &a1, &a2, m, r), "decompose_symmetric") else { continue };
        let ok = (sd.r1 * sd.r2) % m == r;
        rep.check(ok, || format!("dee {i}: r1·r2 = {}·{} ≢ {r} mod {m}", sd.r1, sd.r2));
        if gcd(r, m) == 1 {
            coprime += 1;
            rep.check(gcd(sd.r1, m) == 1 && gcd(sd.r2, m) == 1, || format!("dee {i}: r_i not coprime to {m}"));
        }
        rep.verdicts.push(ok);
    }
    rep.notes.push(format!("{coprime} coprime decompositions"));

    for i in 0..100 {
        let sit = 2 + i % 2;
        let n = if sit == 3 { 2 + (i / 2) % 2 } else { 2 + (i / 2) % 4 };
        let m = moduli[(i / 8) % 3];
        let a = if i % 3 == 0 { gamma(s.sparse(n, field.one(), m)) } else { s.gamma(n) };
        let Some((it, base)) = rep.ok(reznick_check(&a, sit, m), "reznick_check") else { continue };
        rep.check(it == base && base == support_symmetric(&a, m), || {
            format!("rez {i}: iterate {it}, base {base}")
        });
        rep.verdicts.push(base);
    }
    rep
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn c6(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 6, field, N);
    let orders = [2usize, 3, 4, 5];
    let mut boundary = 0;
    let mut positives = 0;
    for i in 0..100 {
        let n = orders[i % 4];
        let m = orders[(i / 4) % 4];
        let beta = s.unit();
        let (a, b, expect) = match i % 4 {
            0 | 1 => {
                let k = if i % 4 == 0 {
                    let step = 24 / gcd(24, (n - 1) * (m - 1));
                    step * s.range(0, 24 / step - 1)
                } else {
                    s.range(0, 23)
                };
                let e = if i % 8 == 1 { 1 } else { 0 };
                let bc = friendly(field, m, k, e);
                let expect = monomials_commute(&field.one(), n, &bc, m);
                if e == 0 && !bc.is_one() && expect {
                    boundary += 1;
                }
                let a = conj(&beta, &mono(field, field.one(), n));
                (a, conj(&beta, &mono(field, bc, m)), Some(expect))
            }
            2 => (s.gamma(n), s.gamma(m), None),
            _ => {
                let n = 2 + i % 2;
                let a = s.gamma(n);
                let b = gamma(a.iterate(2).unwrap());
                (a, b, Some(true))
            }
        };
        let direct = a.compose(&b).unwrap().equiv(&b.compose(&a).unwrap());
        if let Some(e) = expect {
            rep.check(e == direct, || format!("commute {i}: monomial oracle {e}, direct {direct}"));
        }
        let Some(v) = rep.ok(commute_check(&a, &b), "commute_check") else { continue };
        rep.check(v.commute == direct && v.criterion == Some(direct), || {
            format!("commute {i}: verdict {}, criterion {:?}, direct {direct}", v.commute, v.criterion)
        });
        positives += direct as usize;
        rep.verdicts.push(v.commute);
    }
    let g = |c: &[i64]| gamma(TruncatedSeries::from_i64s(field, c, N));
    match commute_check(&g(&[0, 0, 2]), &g(&[0, 0, 0, 4])) {
        Ok(v) => {
            rep.check(v.commute, || "(2z², 4z³) should commute".into());
        }
        Err(e) => rep.fail(format!("(2z², 4z³): {e}")),
    }
    match commute_check(&g(&[0, 0, 2]), &g(&[0, 0, 0, 5])) {
        Ok(v) => {
            rep.check(!v.commute, || "(2z², 5z³) should not commute".into());
        }
        Err(e) => rep.fail(format!("(2z², 5z³): {e}")),
    }
    rep.notes.push(format!("{positives}/100 commuting, {boundary} root-of-unity boundary cases"));
    rep
}

fn c7(field: &Field) -> Report {
    let mut rep = Report::default();
    let mut s = Sampler::new(SEED + 7, field, N);
    let orders = [2usize, 3, 4, 5];
    for i in 0..50 {
        let count = 2 + i % 2;
        let alpha = s.unit();
        let mut gens = Vec::new();
        let mut monos = Vec::new();
        for _ in 0..count {
            let n = s.choose(&orders);
            let c = friendly(field, n, s.range(0, 23), s.range(0, 1));
            gens.push(conj(&alpha, &mono(field, c.clone(), n)));
            monos.push((c, n));
        }
        let Some((beta, images)) = rep.ok(monomialize(&gens), "monomialize") else { continue };
        // β = α∘uz with u the canonical (n₁−1)-th root of 1/c₁
        let (c1, n1) = &monos[0];
        let u = c1.inv().unwrap().nth_root(n1 - 1).unwrap();
        let expected_beta = alpha.compose(&mono(field, u.clone(), 1)).unwrap();
        rep.same(&beta, &expected_beta, || format!("mono {i}: β ≠ α∘uz"));
        for (j, ((c, n), img)) in monos.iter().zip(&images).enumerate() {
            let want = c * &u.pow((*n - 1) as u64);
            rep.check(img.exponent == *n && (&img.coefficient - &want).is_zero(), || {
                format!("mono {i}: image {j} is {:?} z^{}", img.coefficient, img.exponent)
            });
            let back = beta.compose(&img.to_series(field, N).compose(&beta.inverse()).unwrap()).unwrap();
            rep.same(&back, &gens[j], || format!("mono {i}: generator {j} does not round-trip"));
        }
        rep.verdicts.push(true);
    }
    for i in 0..50 {
        let gens: Vec<GammaSeries> = (0..2 + i % 2).map(|_| { let n = s.choose(&orders); s.gamma(n) }).collect();
        let r = monomialize(&gens);
        let ok = matches!(r, Err(Error::NotConjugate { index: 1 }));
        rep.check(ok, || format!("generic {i}: expected NotConjugate at 1, got {:?}", r.map(|x| x.1)));
        rep.verdicts.push(false);
    }
    rep
}

type Criterion = fn(&Field) -> Report;

fn main() {
    let exact = Field::exact(24).unwrap();
    let approx = Field::approx(1e-9).unwrap();
    let criteria: [(&str, Criterion); 7] = [
        ("1 boettcher residual", c1),
        ("2 decomposition class counts", c2),
        ("3 solver round trips", c3),
        ("4 criterion equivalences", c4),
        ("5 symmetry suite", c5),
        ("6 commutation", c6),
        ("7 monomialization", c7),
    ];
    let mut all_pass = true;
    let mut exact_reports = Vec::new();
    for (name, run) in criteria {
        let t = Instant::now();
        let rep = run(&exact);
        let pass = rep.failures.is_empty();
        all_pass &= pass;
        println!(
            "criterion {name}: {} ({} instances, {:.1}s{}{})",
            if pass { "PASS" } else { "FAIL" },
            rep.verdicts.len(),
            t.elapsed().as_secs_f64(),
            if rep.notes.is_empty() { "" } else { "; " },
            rep.notes.join("; ")
        );
        for f in &rep.failures {
            println!("    {f}");
        }
        exact_reports.push(rep);
    }

    let t = Instant::now();
    let mut problems = Vec::new();
    let mut worst: f64 = 0.0;
    for ((name, run), ex) in criteria.iter().zip(&exact_reports) {
        let rep = run(&approx);
        worst = worst.max(rep.residual);
        for f in &rep.failures {
            problems.push(format!("{name}: {f}"));
        }
        if rep.verdicts != ex.verdicts {
            let diff = rep.verdicts.iter().zip(&ex.verdicts).filter(|(a, b)| a != b).count();
            problems.push(format!(
                "{name}: {diff} verdicts differ ({} approx vs {} exact instances)",
                rep.verdicts.len(),
                ex.verdicts.len()
            ));
        }
        if rep.residual >= 1e-8 {
            problems.push(format!("{name}: residual {:e}", rep.residual));
        }
    }
    let pass = problems.is_empty();
    all_pass &= pass;
    println!(
        "criterion 8 backend agreement: {} (max residual {worst:.1e}, {:.1}s)",
        if pass { "PASS" } else { "FAIL" },
        t.elapsed().as_secs_f64()
    );
    for p in &problems {
        println!("    {p}");
    }
    if !all_pass {
        std::process::exit(1);
    }
}
