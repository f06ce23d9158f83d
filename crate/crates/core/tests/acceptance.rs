//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero when the set of failing criteria differs from the known
//! unattainable ones.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use inframonogenic::ball::{harmonic_inner_closed_form, inner_product, norm2, scalar_inner, PiRational};
use inframonogenic::basis::{enumerate_basis, infr_dimension, infr_nullspace, sandwich_matrix, shared, spans_within, BasisId, Family};
use inframonogenic::fourier::{parseval_defect, parseval_defect_by_degree, project, reconstruct, residual_norm2};
use inframonogenic::harmonics::{harmonic_poly, HarmonicId, Parity, Recurrence};
use inframonogenic::identities::{check_identities, identity_names, Status};
use inframonogenic::linalg::Matrix;
use inframonogenic::ops::{apply_left, apply_right, sandwich};
use inframonogenic::poly::{Axis, Monomial, ScalarPoly};
use inframonogenic::report::{verify_paper_formulas, ReportStatus};
use inframonogenic::tables::{compare_row, golden_tables};
use inframonogenic::{rat, QPoly, Rational};
use num_bigint::BigInt;
use rayon::prelude::*;

/// Criteria whose statement does not hold for the constructed basis; see the
/// detail lines for the counterexamples.
const KNOWN_UNATTAINABLE: [u32; 2] = [4, 11];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn el(id: BasisId) -> QPoly {
    (*shared().element(id).unwrap()).clone()
}

fn pi(numer: i64, denom: i64) -> PiRational {
    PiRational::new(rat(numer, denom))
}

fn factorial_ratio(top: i64, bottom: i64) -> Rational {
    let v: BigInt = (bottom + 1..=top).map(BigInt::from).product();
    Rational::from_integer(v)
}

fn parities(m: u32) -> &'static [Parity] {
    if m == 0 {
        &[Parity::Plus]
    } else {
        &Parity::BOTH
    }
}

fn dimension() -> Outcome {
    let dims: Vec<usize> = (0..=8).map(infr_dimension).collect();
    let expected: Vec<usize> = (0..=8).map(|n| 6 * n + 3).collect();
    let cols = sandwich_matrix(8).cols();
    outcome(dims == expected && cols == 135, format!("nullities {dims:?}, {cols} columns at n=8"))
}

fn annihilation() -> Outcome {
    let ids: Vec<BasisId> = (0..=8).flat_map(enumerate_basis).collect();
    let bad: Vec<String> = ids
        .par_iter()
        .filter(|&&id| {
            let f = el(id);
            !f.is_reduced() || !f.is_homogeneous(id.n) || !sandwich(false, &f).is_zero()
        })
        .map(|id| id.to_string())
        .collect();
    let expected: usize = (0..=8).map(|n| 6 * n + 3).sum();
    outcome(ids.len() == expected && bad.is_empty(), format!("{} elements, {} not annihilated {bad:?}", ids.len(), bad.len()))
}

fn basis_property() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 0..=8 {
        let elements: Vec<QPoly> = enumerate_basis(n).into_iter().map(el).collect();
        let (rank, inside) = spans_within(&elements, &infr_nullspace(n), n);
        ok &= rank == 6 * n as usize + 3 && inside;
        lines.push(rank.to_string());
    }
    outcome(ok, format!("ranks {} with every element in the nullspace", lines.join(",")))
}

fn orthogonality() -> Outcome {
    let mut ok = true;
    let mut within = Vec::new();
    for n in 0..=6 {
        let g = shared().gram(&enumerate_basis(n)).unwrap();
        let good = g.is_diagonal() && g.diagonal_positive();
        ok &= good;
        if !good {
            within.push(n);
        }
    }
    let mut cross = Vec::new();
    let mut pairs = 0;
    for n in 0..=6 {
        for n2 in n + 1..=6 {
            let (a, b) = (enumerate_basis(n), enumerate_basis(n2));
            let g = shared().cross_gram(&a, &b).unwrap();
            for (i, row) in g.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    pairs += 1;
                    if !v.is_zero() {
                        cross.push((n2 - n, format!("<{}, {}> = {v}", a[i], b[j])));
                    }
                }
            }
        }
    }
    ok &= cross.is_empty();
    let gaps: BTreeSet<u32> = cross.iter().map(|(d, _)| *d).collect();
    let first = cross.first().map(|(_, s)| s.as_str()).unwrap_or("none");
    outcome(
        ok,
        format!(
            "within-degree Gram diagonal and positive for n<=6: {}; cross-degree: {} of {pairs} products nonzero, degree gaps {gaps:?}, e.g. {first}",
            within.is_empty(),
            cross.len()
        ),
    )
}

fn alpha_constants() -> Outcome {
    let mut wrong = Vec::new();
    let mut count = 0;
    for n in 2..=6u32 {
        for m in 1..=n {
            let (ni, mi) = (n as i64, m as i64);
            let expected = rat(ni - mi + 1, (ni + 1) * (2 * ni + 1));
            for &p in &Parity::BOTH {
                count += 1;
                let x = el(BasisId::x(n, m, p).unwrap());
                let zu = el(BasisId::zu(n, m, p).unwrap());
                let alpha = -(inner_product(&zu, &x).ratio(&norm2(&x)));
                if alpha != expected {
                    wrong.push(format!("({n},{m},{p})"));
                }
            }
        }
    }
    outcome(wrong.is_empty(), format!("{count} Gram-Schmidt constants checked, mismatches {wrong:?}"))
}

fn norm_formulas() -> Outcome {
    let mut wrong = Vec::new();
    let mut count = 0;
    for n in 0..=6u32 {
        let ni = n as i64;
        for m in 0..=n + 1 {
            let mi = m as i64;
            let expected = if m == 0 {
                pi(4 * (ni + 1), 2 * ni + 3)
            } else {
                PiRational::new(rat(2 * (ni + 1), 2 * ni + 3) * factorial_ratio(ni + 1 + mi, ni + 1 - mi))
            };
            for &p in parities(m) {
                count += 1;
                let id = BasisId::x(n, m, p).unwrap();
                if norm2(&el(id)) != expected {
                    wrong.push(id.to_string());
                }
            }
        }
        if let Ok(id) = BasisId::zu(n, 0, Parity::Plus) {
            count += 1;
            if norm2(&el(id)) != pi(4 * ni * (ni + 1), (2 * ni + 1) * (2 * ni + 3)) {
                wrong.push(id.to_string());
            }
        }
    }
    let report = verify_paper_formulas(6).unwrap();
    let mut missing = Vec::new();
    for n in 2..=6u32 {
        for m in 0..=n {
            for &p in parities(m) {
                let idx = format!("n={n}, m={m}, {p}");
                let mut names = vec!["norm2_Zu", if m == 0 { "inner_X_Zu_order_zero" } else { "inner_X_Zu" }];
                if m < n {
                    names.push("norm2_Y");
                }
                if m >= 1 && m < n {
                    names.push("inner_Y_Zu");
                }
                for name in names {
                    if report.find(name, &idx).is_none() {
                        missing.push(format!("{name} {idx}"));
                    }
                }
            }
        }
    }
    let y20 = report.find("norm2_Y", "n=2, m=0, +");
    let anchored = y20.is_some_and(|e| {
        e.status == ReportStatus::Mismatch && e.paper_value == "8112π/35" && e.computed_value == "544π/21"
    });
    outcome(
        wrong.is_empty() && missing.is_empty() && anchored,
        format!(
            "{count} X and Zu(n,0) norms checked, mismatches {wrong:?}; report has {} entries ({} match, {} mismatch), missing {missing:?}, Y(2,0,+) recorded as 8112π/35 vs 544π/21: {anchored}",
            report.entries.len(),
            report.count(ReportStatus::Match),
            report.count(ReportStatus::Mismatch)
        ),
    )
}

fn golden_tables_criterion() -> Outcome {
    let mut y_rows = 0;
    let mut zu_rows = 0;
    let mut strays = 0;
    let mut problems = Vec::new();
    for entry in golden_tables() {
        let c = compare_row(entry).unwrap();
        let (n, m) = (entry.id.n as i64, entry.id.m as i64);
        match entry.id.family {
            Family::Y => {
                y_rows += 1;
                if !c.exact() || ![1, 2, 4].contains(&entry.table) {
                    problems.push(format!("table {} {}", entry.table, entry.id));
                }
            }
            Family::Zu => {
                zu_rows += 1;
                if !c.scale.as_ref().is_some_and(|s| *s != rat(0, 1)) || ![1, 3, 5].contains(&entry.table) {
                    problems.push(format!("table {} {}", entry.table, entry.id));
                }
                if !c.stray.is_zero() {
                    strays += 1;
                    let alpha = rat(n - m + 1, (n + 1) * (2 * n + 1));
                    if c.stray != QPoly::along(2, ScalarPoly::constant(alpha)) {
                        problems.push(format!("stray constant of {} is not alpha e2", entry.id));
                    }
                }
            }
            _ => problems.push(format!("unexpected row {}", entry.id)),
        }
    }
    outcome(
        problems.is_empty(),
        format!("{y_rows} Y rows exact, {zu_rows} Zu rows equal up to scale, {strays} stray constants all equal alpha e2, problems {problems:?}"),
    )
}

fn appell() -> Outcome {
    let mut wrong = Vec::new();
    let mut count = 0;
    for n in 0..=6u32 {
        for m in 0..=n + 1 {
            for &p in parities(m) {
                count += 1;
                let x = el(BasisId::x(n, m, p).unwrap());
                let expected = if m == n + 1 || n == 0 {
                    QPoly::zero()
                } else {
                    el(BasisId::x(n - 1, m, p).unwrap()).scale(&rat(2 * (n + m + 1) as i64, 1))
                };
                if apply_left(true, &x) != expected || apply_right(true, &x) != expected {
                    wrong.push(format!("({n},{m},{p})"));
                }
            }
        }
    }
    outcome(wrong.is_empty(), format!("{count} X elements, failures {wrong:?}"))
}

fn identity_suite() -> Outcome {
    let mut rng = common::rng(2024);
    let mut passes: Vec<(&str, usize)> = identity_names().map(|n| (n, 0)).collect();
    let mut failures = Vec::new();
    let mut record = |f: &QPoly, g: &QPoly| {
        for (c, slot) in check_identities(f, g).into_iter().zip(passes.iter_mut()) {
            match c.status {
                Status::Pass => slot.1 += 1,
                Status::Fail => failures.push(c.identity),
                Status::NotApplicable => {}
            }
        }
    };
    for _ in 0..200 {
        let (f, g) = (common::random_reduced(&mut rng, 4), common::random_reduced(&mut rng, 4));
        record(&f, &g);
        let (f, g) = (common::random_monogenic(&mut rng, 4), common::random_reduced(&mut rng, 4));
        record(&f, &g);
    }
    for _ in 0..50 {
        let (f, g) = (common::random_full(&mut rng, 4), common::random_full(&mut rng, 4));
        record(&f, &g);
    }
    let least = passes.iter().min_by_key(|(_, k)| *k).unwrap();
    outcome(
        failures.is_empty() && least.1 >= 200,
        format!("{} identities, fewest passes {} ({}), failures {failures:?}", passes.len(), least.1, least.0),
    )
}

/// Coordinates of `p` in the monomials of degree `n`.
fn coords(p: &ScalarPoly<Rational>, n: u32) -> Vec<Rational> {
    Monomial::of_degree(n).iter().map(|m| p.coeff(m).cloned().unwrap_or_else(|| rat(0, 1))).collect()
}

/// Nullity of `Δᵏ` on homogeneous polynomials of degree `n`.
fn laplace_nullity(n: u32, k: u32) -> usize {
    let monos = Monomial::of_degree(n);
    if n < 2 * k {
        return monos.len();
    }
    let columns: Vec<Vec<Rational>> = monos
        .iter()
        .map(|&m| {
            let p = (0..k).fold(ScalarPoly::term(m, rat(1, 1)), |q, _| q.laplacian());
            coords(&p, n - 2 * k)
        })
        .collect();
    let a = Matrix::from_columns(&columns, Monomial::of_degree(n - 2 * k).len());
    monos.len() - a.rank()
}

fn harmonic_ids(n: u32) -> Vec<HarmonicId> {
    (0..=n as i32)
        .flat_map(|m| parities(m as u32).iter().map(move |&p| HarmonicId::new(n, m, p).unwrap()))
        .collect()
}

fn rank(polys: &[ScalarPoly<Rational>], n: u32) -> usize {
    let rows: Vec<Vec<Rational>> = polys.iter().map(|p| coords(p, n)).collect();
    Matrix::from_rows(rows, Monomial::of_degree(n).len()).rank()
}

fn harmonics_layer() -> Outcome {
    let mut problems = Vec::new();
    let rho2 = ScalarPoly::radius_squared();
    for n in 0..=8u32 {
        let us: Vec<ScalarPoly<Rational>> = harmonic_ids(n).into_iter().map(harmonic_poly).collect();
        if us.iter().any(|u| !u.laplacian().is_zero()) {
            problems.push(format!("Laplacian n={n}"));
        }
        if laplace_nullity(n, 1) != 2 * n as usize + 1 || rank(&us, n) != 2 * n as usize + 1 {
            problems.push(format!("dim Har n={n}"));
        }
        if n >= 1 {
            let d2 = harmonic_poly(HarmonicId::plus(n, 1).unwrap()).partial(Axis::X2);
            let d1 = harmonic_poly(HarmonicId::minus(n, 1).unwrap()).partial(Axis::X1);
            if d2 != d1 {
                problems.push(format!("d2 U+(n,1) = d1 U-(n,1) fails at n={n}"));
            }
        }
        if n >= 2 {
            let lifted: Vec<ScalarPoly<Rational>> =
                harmonic_ids(n - 2).into_iter().map(|id| &rho2 * &harmonic_poly(id)).collect();
            if lifted.iter().any(|p| p.laplacian().is_zero() || !p.laplacian().laplacian().is_zero()) {
                problems.push(format!("biharmonic n={n}"));
            }
            let all = [us.clone(), lifted].concat();
            if laplace_nullity(n, 2) != 4 * n as usize - 2 || rank(&all, n) != 4 * n as usize - 2 {
                problems.push(format!("dim Bih n={n}"));
            }
        }
    }
    let mut recurrences = 0;
    for rec in Recurrence::ALL {
        for n in 1..=6 {
            for m in rec.min_order()..=n {
                recurrences += 1;
                if !rec.holds(n, m) {
                    problems.push(format!("{} ({n},{m})", rec.name()));
                }
            }
        }
    }
    let ids: Vec<HarmonicId> = (0..=6).flat_map(harmonic_ids).collect();
    let lifted: Vec<Vec<ScalarPoly<Rational>>> = ids
        .iter()
        .map(|&id| {
            let u = harmonic_poly(id);
            vec![u.clone(), &rho2 * &u, &(&rho2 * &rho2) * &u]
        })
        .collect();
    let jobs: Vec<(usize, usize, u32, u32)> = (0..ids.len())
        .flat_map(|i| (0..ids.len()).flat_map(move |j| (0..3).flat_map(move |k| (0..3).map(move |k2| (i, j, k, k2)))))
        .collect();
    let bad: Vec<String> = jobs
        .par_iter()
        .filter(|&&(i, j, k, k2)| {
            harmonic_inner_closed_form(k, k2, ids[i], ids[j]).unwrap()
                != scalar_inner(&lifted[i][k as usize], &lifted[j][k2 as usize])
        })
        .map(|&(i, j, k, k2)| format!("{} {} k={k} k'={k2}", ids[i], ids[j]))
        .collect();
    problems.extend(bad.into_iter().take(5));
    outcome(
        problems.is_empty(),
        format!("harmonic n<=8, {recurrences} recurrence instances, {} integral pairs, problems {problems:?}", jobs.len()),
    )
}

fn expansion_round_trip() -> Outcome {
    let mut rng = common::rng(11);
    let (mut round_trips, mut parseval, mut by_degree, mut unexplained) = (0, 0, 0, 0);
    let mut example = None;
    for _ in 0..100 {
        let (e, f) = common::random_combination(&mut rng, 5);
        let p = project(&f, 5).unwrap();
        if p == e && reconstruct(&p).unwrap() == f {
            round_trips += 1;
        }
        let defect = parseval_defect(&f, &p).unwrap();
        if defect.is_zero() {
            parseval += 1;
        } else {
            let degrees: BTreeSet<u32> = e.coefficients().keys().map(|id| id.n).collect();
            if !degrees.iter().any(|n| degrees.contains(&(n + 2))) {
                unexplained += 1;
            }
            example.get_or_insert_with(|| format!("{degrees:?} gives defect {defect}"));
        }
        if parseval_defect_by_degree(&f, &p).unwrap().iter().all(PiRational::is_zero) {
            by_degree += 1;
        }
    }
    let x0 = ScalarPoly::var(Axis::X0);
    let g = QPoly::along(1, &x0 * &x0);
    let residual = residual_norm2(&g, &project(&g, 2).unwrap()).unwrap();
    outcome(
        round_trips == 100 && parseval == 100 && residual.is_positive(),
        format!(
            "round trip {round_trips}/100, Parseval {parseval}/100 (defects need degrees n and n+2 together, unexplained {unexplained}; e.g. degrees {}), degree-wise Parseval {by_degree}/100, residual of x0^2 e1 = {residual}",
            example.unwrap_or_else(|| "none".into())
        ),
    )
}

fn scalar_classification() -> Outcome {
    let mut rng = common::rng(5);
    let (x0, x1, x2) = (ScalarPoly::var(Axis::X0), ScalarPoly::var(Axis::X1), ScalarPoly::var(Axis::X2));
    let quadratic = &(&(&x0 * &x0).scale(&rat(2, 1)) + &(&x1 * &x1)) + &(&x2 * &x2);
    // Re and Im of (x1 + i x2)^k
    let mut planar = vec![(ScalarPoly::one(), ScalarPoly::zero())];
    for k in 1..=4 {
        let (re, im) = planar[k - 1].clone();
        planar.push((&(&re * &x1) - &(&im * &x2), &(&re * &x2) + &(&im * &x1)));
    }
    let mut failures = 0;
    for _ in 0..100 {
        let mut f = &(&quadratic.scale(&common::random_rational(&mut rng)) + &x0.scale(&common::random_rational(&mut rng)))
            + &ScalarPoly::constant(common::random_rational(&mut rng));
        for (re, im) in &planar {
            f = &(&f + &re.scale(&common::random_rational(&mut rng))) + &im.scale(&common::random_rational(&mut rng));
        }
        if !sandwich(false, &QPoly::scalar(f)).is_zero() {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("100 random scalar functions, {failures} not annihilated"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "dimension", dimension),
        (2, "annihilation", annihilation),
        (3, "basis property", basis_property),
        (4, "orthogonality", orthogonality),
        (5, "alpha constants", alpha_constants),
        (6, "norm formulas and report", norm_formulas),
        (7, "golden tables", golden_tables_criterion),
        (8, "Appell property", appell),
        (9, "identity suite", identity_suite),
        (10, "harmonics layer", harmonics_layer),
        (11, "expansion round trip", expansion_round_trip),
        (12, "scalar classification", scalar_classification),
    ];
    let mut failed = BTreeSet::new();
    for (k, title, run) in criteria {
        let start = Instant::now();
        let o = run();
        let mark = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {k:>2} [{mark}] {title} ({:.1}s, exact): {}", start.elapsed().as_secs_f64(), o.detail);
        if !o.passed {
            failed.insert(k);
        }
    }
    let known: BTreeSet<u32> = KNOWN_UNATTAINABLE.into_iter().collect();
    println!("{} of 12 criteria pass; failing {failed:?}, known unattainable {known:?}", 12 - failed.len());
    if failed != known {
        eprintln!("acceptance outcome differs from the known state");
        std::process::exit(1);
    }
}
