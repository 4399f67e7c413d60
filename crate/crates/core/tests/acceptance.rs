//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use univalent_radii::equations::{caratheodory_margin, caratheodory_radius, sum_n_pow};
use univalent_radii::extremal::{ComplexPoint, ExtremalFunction};
use univalent_radii::problem::ClassSpec;
use univalent_radii::solver::solve_radius;
use univalent_radii::verify::{self, Grid};

struct Outcome {
    passed: bool,
    summary: String,
}

fn tally(checked: usize, failures: Vec<String>, what: &str) -> Outcome {
    for f in failures.iter().take(10) {
        eprintln!("    {f}");
    }
    Outcome {
        passed: failures.is_empty() && checked > 0,
        summary: format!("{checked} {what}, {} failed", failures.len()),
    }
}

fn from_reports(reports: &[univalent_radii::VerificationReport], what: &str) -> Outcome {
    let failures = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| {
            format!(
                "{}: measured {:e} expected {:e} ({})",
                r.check_name, r.measured, r.expected, r.detail
            )
        })
        .collect();
    tally(reports.len(), failures, what)
}

/// Nine published radii to 1e-5 (1e-4 for the five-digit one).
fn constants() -> Outcome {
    let reports: Vec<_> = verify::constants_suite()
        .into_iter()
        .filter(|r| r.check_name == "constant")
        .collect();
    let mut out = from_reports(&reports, "constants");
    out.passed &= reports.len() == 9 && reports.iter().all(|r| r.tolerance <= 1e-4);
    out
}

/// Radical closed forms against numeric roots to 1e-12.
fn radicals() -> Outcome {
    let reports: Vec<_> = verify::constants_suite()
        .into_iter()
        .filter(|r| r.check_name == "radical")
        .collect();
    let mut out = from_reports(&reports, "radicals");
    out.passed &= reports.len() == 6 && reports.iter().all(|r| r.tolerance <= 1e-12);
    out
}

/// `|w - 1| = 1 - α` and `Re w = α` at `z = r0` for every coarse grid point.
fn sharpness() -> Outcome {
    let mut failures = Vec::new();
    let queries = Grid::coarse().queries();
    for q in &queries {
        match verify::check_sharpness(q.class, q.kind) {
            Ok(r) if r.passed && r.tolerance <= 1e-8 => {}
            Ok(r) => failures.push(r.detail),
            Err(e) => failures.push(format!("{q:?}: {e}")),
        }
    }
    tally(queries.len(), failures, "grid points")
}

/// Solved radius within `1e-9 + width` of the partial-sum oracle root on the
/// full grid.
fn oracle() -> Outcome {
    let queries = Grid::default_grid().queries();
    let failures: Vec<String> = queries
        .iter()
        .filter_map(|q| {
            let solved = match solve_radius(q) {
                Ok(r) => r.radius,
                Err(e) => return Some(format!("{q:?}: {e}")),
            };
            match verify::oracle_root(q.class, q.kind, 10_000) {
                Ok(o) if (solved - o.estimate()).abs() <= 1e-9 + o.width() => None,
                Ok(o) => Some(format!("{q:?}: solved {solved} oracle {o:?}")),
                Err(e) => Some(format!("{q:?}: oracle {e}")),
            }
        })
        .collect();
    tally(queries.len(), failures, "grid points")
}

/// Inside `0.9 r0` the property holds, beyond it fails, on the full grid.
fn bracketing() -> Outcome {
    let reports: Vec<_> = verify::sharpness_suite(&Grid::default_grid())
        .into_iter()
        .filter(|r| r.check_name.starts_with("scan-inside") || r.check_name == "scan-beyond")
        .collect();
    from_reports(&reports, "scans")
}

/// Closed-form radius satisfies the sum identity and `|p0(r0) - 1| = 1 - α`.
fn caratheodory() -> Outcome {
    let grid = Grid::coarse();
    let mut failures = Vec::new();
    let mut checked = 0;
    for &alpha in &grid.alphas {
        for &b in &grid.bs {
            for &m in &grid.ms {
                checked += 1;
                let r0 = match caratheodory_radius(alpha, b, m) {
                    Ok(r) => r,
                    Err(e) => {
                        failures.push(format!("alpha={alpha} b={b} m={m}: {e}"));
                        continue;
                    }
                };
                let residual = caratheodory_margin(alpha, b, m, r0).unwrap();
                let p0 = ExtremalFunction::new(ClassSpec::caratheodory(b, m))
                    .unwrap()
                    .eval(ComplexPoint::real(r0).unwrap());
                let modulus = (p0 - 1.0).norm() - (1.0 - alpha);
                if residual.abs() > 1e-12 || modulus.abs() > 1e-10 {
                    failures.push(format!(
                        "alpha={alpha} b={b} m={m}: residual {residual:e}, |p0-1|-(1-alpha) {modulus:e}"
                    ));
                }
            }
        }
    }
    tally(checked, failures, "grid points")
}

/// Strictly decreasing in α, nonincreasing in b, and `r1 > r0` for a
/// vanishing second coefficient.
fn monotonicity() -> Outcome {
    let reports = verify::monotonicity_suite(&Grid::default_grid());
    let mut out = from_reports(&reports, "sweeps");
    let comparisons = reports
        .iter()
        .filter(|r| r.check_name == "vanishing-second-coefficient")
        .count();
    out.passed &= comparisons == 3;
    out
}

fn central_difference(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
    (f(z + h) - f(z - h)) / (2.0 * h)
}

fn csv_is_finite(args: &[&str], failures: &mut Vec<String>) -> usize {
    let out = Command::new(env!("CARGO_BIN_EXE_radii"))
        .args(args)
        .env_remove("RADII_DEFAULT_TOL")
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout).to_lowercase();
    if text.contains("nan") || text.contains("inf") {
        failures.push(format!("non-finite value in output of {args:?}"));
    }
    if !matches!(out.status.code(), Some(0) | Some(3)) {
        failures.push(format!("exit {:?} for {args:?}", out.status.code()));
    }
    text.lines().count()
}

/// Derivatives against finite differences, series sums against partial
/// sums, and finite CSV output.
fn hygiene() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;

    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let classes = [
        ClassSpec::bound_by_n(1.0),
        ClassSpec::bound_by_m(0.5, 1.0),
        ClassSpec::bound_by_m_over_n(0.5, 2.0),
        ClassSpec::caratheodory(1.0, 1.0),
    ];
    for class in classes {
        let f = ExtremalFunction::new(class).unwrap();
        for _ in 0..100 {
            checked += 1;
            let z =
                Complex64::from_polar(0.7 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..2.0 * PI));
            let at = |w: Complex64| ComplexPoint::from_complex(w).unwrap();
            let d1 = central_difference(|w| f.eval(at(w)), z, 1e-6);
            let d2 = central_difference(|w| f.eval_d1(at(w)), z, 1e-6);
            let e1 = (d1 - f.eval_d1(at(z))).norm();
            let e2 = (d2 - f.eval_d2(at(z))).norm();
            if e1 > 1e-6 || e2 > 1e-6 {
                failures.push(format!(
                    "{class:?} at {z}: f' off by {e1:e}, f'' off by {e2:e}"
                ));
            }
        }
    }

    for k in 0..=3 {
        for start in 1..=3 {
            for r in [0.0, 0.01, 0.1, 0.25, 0.5, 0.7] {
                checked += 1;
                let closed = sum_n_pow(k, r, start).unwrap();
                let partial: f64 = (start..4000)
                    .map(|n| f64::from(n).powi(k as i32) * r.powi(n as i32 - 1))
                    .sum();
                if (closed - partial).abs() > 1e-12 {
                    failures.push(format!(
                        "sum n^{k} r^(n-1) from {start} at r={r}: {closed} vs {partial}"
                    ));
                }
            }
        }
    }

    let sweeps: [(&str, &str, &[&str]); 8] = [
        ("n", "starlike", &[]),
        ("n", "convex", &[]),
        ("m", "starlike", &["--sweep", "m=0.5,1,2"]),
        ("m", "convex", &["--sweep", "m=0.5,1,2"]),
        ("m-over-n", "starlike", &["--sweep", "m=0.5,1,2"]),
        ("m-over-n", "convex", &["--sweep", "m=0.5,1,2"]),
        ("caratheodory", "positive-real", &["--sweep", "m=0.5,1,2"]),
        ("n", "ucv", &[]),
    ];
    for (class, kind, extra) in sweeps {
        let mut args = vec![
            "table",
            "--class",
            class,
            "--kind",
            kind,
            "--sweep",
            "alpha=0:0.95:0.05",
            "--sweep",
            "b=0:1:0.1",
        ];
        args.extend_from_slice(extra);
        checked += csv_is_finite(&args, &mut failures);
    }
    for (class, m, r) in [
        ("n", None, "auto"),
        ("m", Some("5"), "0.99"),
        ("m-over-n", Some("2"), "0.9"),
        ("caratheodory", Some("1"), "0.6"),
    ] {
        let kind = if class == "caratheodory" {
            "positive-real"
        } else {
            "starlike"
        };
        let mut args = vec![
            "trace", "--class", class, "--kind", kind, "--alpha", "0", "--b", "1", "--r", r,
        ];
        if let Some(m) = m {
            args.extend_from_slice(&["--m", m]);
        }
        checked += csv_is_finite(&args, &mut failures);
    }
    tally(checked, failures, "checks")
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("constants reproduction", constants),
        ("radical identities", radicals),
        ("sharpness equalities", sharpness),
        ("oracle equivalence", oracle),
        ("membership/violation bracketing", bracketing),
        ("caratheodory identity", caratheodory),
        ("monotonicity", monotonicity),
        ("numerical hygiene", hygiene),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        all &= outcome.passed;
        println!(
            "{} {}. {name}: {} ({:.2}s)",
            if outcome.passed { "PASS" } else { "FAIL" },
            i + 1,
            outcome.summary,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
