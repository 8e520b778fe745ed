//! One PASS/FAIL line per acceptance criterion, then one for the three-station
//! special form. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use pathrsk_core::symfunc::{rational, Rational};
use pathrsk_core::verify::{self, McComparison, SuiteReport};

const SEED: u64 = 20_240_601;

struct Line {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn summarize(reports: &[SuiteReport]) -> (bool, String) {
    let passed = reports.iter().all(SuiteReport::passed);
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    let failures: u64 = reports.iter().map(|r| r.failures).sum();
    let mut detail = format!("{checked} checked, {failures} failed");
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        detail.push_str(&format!("; {r}"));
    }
    (passed, detail)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn with_budget(id: u32, title: &'static str, reports: Vec<SuiteReport>, took: Duration, budget: Option<Duration>) -> Line {
    let (mut passed, mut detail) = summarize(&reports);
    detail.push_str(&format!(" in {took:.2?}"));
    if let Some(b) = budget {
        if took > b {
            passed = false;
            detail.push_str(&format!(" (budget {b:?} exceeded)"));
        }
    }
    Line { id, title, passed, detail }
}

fn p(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| rational(a, b)).collect()
}

fn mc_line(c: &McComparison) -> SuiteReport {
    let mut r = SuiteReport::new(&c.label);
    r.check(c.agrees(3.0), || {
        format!("formula {:.6} vs simulation {:.6} ± {:.6}", c.formula, c.estimate.value, c.estimate.stderr)
    });
    r
}

fn main() {
    let mut lines = Vec::new();

    let (r, took) = timed(verify::worked_example);
    lines.push(with_budget(1, "worked example fixtures", vec![r], took, Some(Duration::from_millis(1))));

    let (r, took) = timed(|| verify::array_tableau(4, 8));
    lines.push(with_budget(2, "array tableau equals column insertion", vec![r], took, Some(Duration::from_secs(60))));

    let (r, took) = timed(|| verify::greene_suite(3, 8));
    lines.push(with_budget(3, "Greene invariants", vec![r], took, Some(Duration::from_secs(120))));

    let (r, took) = timed(|| vec![verify::path_identities(10), verify::recovery(3, 8).0]);
    lines.push(with_budget(4, "path identities, coupling and recovery", r, took, None));

    let k2 = [p(&[(1, 2), (1, 2)]), p(&[(1, 3), (2, 3)])];
    let k3 = p(&[(1, 6), (1, 3), (1, 2)]);

    let (r, took) = timed(|| {
        let mut out: Vec<_> = k2.iter().map(|q| verify::shape_law(q, 8)).collect();
        out.push(verify::shape_law(&k3, 6));
        out
    });
    lines.push(with_budget(5, "shape law three ways", r, took, None));

    let (r, took) = timed(|| {
        let mut out: Vec<_> = k2.iter().map(|q| verify::intertwining(q, 8)).collect();
        out.push(verify::intertwining(&k3, 6));
        out
    });
    lines.push(with_budget(6, "intertwinings", r, took, None));

    let laws = [
        p(&[(1, 2), (1, 2)]),
        p(&[(1, 3), (2, 3)]),
        p(&[(2, 3), (1, 3)]),
        p(&[(1, 6), (1, 3), (1, 2)]),
        p(&[(1, 2), (1, 3), (1, 6)]),
        p(&[(1, 3), (1, 3), (1, 3)]),
    ];
    let (r, took) = timed(|| laws.iter().map(|q| verify::g_law(q, 6)).collect());
    lines.push(with_budget(7, "law of G(X) equals the conditioned chain", r, took, None));

    let (r, took) = timed(|| laws.iter().map(|q| verify::conditional_law(q, 6)).collect());
    lines.push(with_budget(8, "conditional law given the recording chain", r, took, None));

    let (r, took) = timed(|| {
        let mut out = vec![verify::k2_vs_mixture(20, SEED, 1e-9)];
        match verify::queuelen_mc(100_000, SEED) {
            Ok(cs) => out.extend(cs.iter().map(mc_line)),
            Err(e) => {
                let mut r = SuiteReport::new("queue length");
                r.error(&e);
                out.push(r);
            }
        }
        match verify::k3_mc(100_000, SEED + 1) {
            Ok(c) => out.push(mc_line(&c)),
            Err(e) => {
                let mut r = SuiteReport::new("three-station form");
                r.error(&e);
                out.push(r);
            }
        }
        out.push(verify::barnes_suite(6, 6));
        out
    });
    lines.push(with_budget(9, "queueing formulas", r, took, Some(Duration::from_secs(120))));

    let (s, took) = timed(|| verify::survival(2000, 1_000_000, SEED));
    let mut r = SuiteReport::new("survival ratio");
    match &s {
        Ok(s) => {
            println!("# survival: ratio {:.6} ± {:.6}, target {:.6}", s.ratio, s.stderr, s.target);
            r.check(s.agrees(3.0), || format!("ratio {:.6} ± {:.6} vs {:.6}", s.ratio, s.stderr, s.target));
        }
        Err(e) => r.error(e),
    }
    lines.push(with_budget(10, "survival ratio", vec![r], took, None));

    let (r, took) = timed(|| vec![verify::continuous_embedding(3, 8, 6), verify::continuous_random(200, SEED)]);
    lines.push(with_budget(11, "continuous suite", r, took, None));

    for l in &lines {
        println!("{} {:>2} {}: {}", if l.passed { "PASS" } else { "FAIL" }, l.id, l.title, l.detail);
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    println!("{} of {} criteria passed", lines.len() - failed, lines.len());

    let (r, took) = timed(|| verify::k3_vs_mixture(20, SEED, 1e-9));
    let extra = with_budget(0, "three-station special form vs Poisson mixture", vec![r], took, None);
    println!("{} invariant {}: {}", if extra.passed { "PASS" } else { "FAIL" }, extra.title, extra.detail);

    if failed > 0 || !extra.passed {
        std::process::exit(1);
    }
}
