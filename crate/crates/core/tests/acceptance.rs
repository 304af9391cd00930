//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use innerform::checks::{self, CheckResult};
use innerform::classes::closure_leq;
use innerform::incidence::qualifying_matrices;
use innerform::measures::{gamma, FieldCase, GammaConstant, LocalParams};
use innerform::partitions::Partition;
use innerform::ratio::{q, qi};
use serde_json::{json, Value};

const SEED: u64 = 20240611;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_checks(results: &[CheckResult], elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let mut passed = results.iter().all(CheckResult::passed);
    let mut detail: Vec<String> = results
        .iter()
        .map(|r| format!("{}: {}/{} ok", r.name, r.checked - r.failures, r.checked))
        .collect();
    for r in results.iter().filter(|r| !r.passed()) {
        if let Some(c) = &r.counterexample {
            detail.push(format!("first counterexample of {}: {c}", r.name));
        }
    }
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail.push(format!("over the {limit:?} budget"));
        }
    }
    detail.push(format!("{elapsed:.2?}"));
    Outcome {
        passed,
        detail: detail.join("; "),
    }
}

fn timed<F: FnOnce() -> Vec<CheckResult>>(limit: Option<Duration>, f: F) -> Outcome {
    let start = Instant::now();
    let results = f();
    from_checks(&results, start.elapsed(), limit)
}

fn c1_worked_transfer() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/worked_transfer.json");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_innerform"))
        .args(["run", path])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let got: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    let want = json!({"global": false, "per_place": {"3": true, "inf_1": false, "inf_2": false}});
    Outcome {
        passed: out.status.success() && got == want && elapsed < Duration::from_secs(1),
        detail: format!("{got} in {elapsed:.2?}"),
    }
}

fn c6_gamma() -> Outcome {
    let start = Instant::now();
    let mut results = vec![checks::gamma_transitivity(6)];
    let elapsed = start.elapsed();
    let mut spot = CheckResult {
        name: "closed-form-spot-values".into(),
        checked: 0,
        failures: 0,
        counterexample: None,
    };
    let mut expect = |got: GammaConstant, want: GammaConstant, label: &str| {
        spot.checked += 1;
        if got != want {
            spot.failures += 1;
            spot.counterexample.get_or_insert(json!({"case": label, "got": got, "want": want}));
        }
    };
    expect(
        gamma(FieldCase::RealSplit, &[1, 1], None).unwrap(),
        GammaConstant::Archimedean {
            coeff: qi(1),
            pi_half_exp: 2,
        },
        "real GL2 minimal",
    );
    for qq in [2u64, 3, 5, 7, 9] {
        let qf = qi(qq as i64);
        let want = (qi(1) - qi(1) / &qf) / (qi(1) - qi(1) / (&qf * &qf));
        expect(
            gamma(FieldCase::NonArch, &[1, 1], Some(LocalParams { q: qq, d: 1 })).unwrap(),
            GammaConstant::NonArchimedean {
                value: want,
                disc_quarter_exp: 2,
            },
            "nonarch GL2 minimal",
        );
    }
    expect(
        gamma(FieldCase::NonArch, &[1, 1], Some(LocalParams { q: 3, d: 1 })).unwrap(),
        GammaConstant::NonArchimedean {
            value: q(3, 4),
            disc_quarter_exp: 2,
        },
        "q = 3",
    );
    results.push(spot);
    from_checks(&results, elapsed, Some(Duration::from_secs(10)))
}

/// Transpose read off a Young grid: column `j` has as many boxes as rows of
/// length greater than `j`.
fn grid_transpose(l: &Partition) -> Partition {
    let parts = l.parts();
    let width = parts.first().copied().unwrap_or(0) as usize;
    let mut grid = vec![vec![false; width]; parts.len()];
    for (i, &p) in parts.iter().enumerate() {
        for cell in grid[i].iter_mut().take(p as usize) {
            *cell = true;
        }
    }
    Partition::new((0..width).map(|j| grid.iter().filter(|row| row[j]).count() as u32).collect())
}

fn c9_partition_lemma() -> Outcome {
    let start = Instant::now();
    let mut res = checks::transpose_scaling(8, 4);
    for n in 0..=8 {
        for l in Partition::all(n) {
            for e in 1..=4u32 {
                // e·λ multiplies every part by e; e×λ repeats every part e times
                let dot = Partition::new(l.parts().iter().map(|&p| p * e).collect());
                let repeat = |m: &Partition| {
                    Partition::new(m.parts().iter().flat_map(|&p| std::iter::repeat(p).take(e as usize)).collect())
                };
                let times = repeat(&l);
                res.checked += 1;
                if grid_transpose(&dot) != repeat(&grid_transpose(&l))
                    || dot != l.dot(e)
                    || times != l.times(e)
                {
                    res.failures += 1;
                }
            }
        }
    }
    from_checks(&[res], start.elapsed(), None)
}

fn c10_minor_lemma() -> Outcome {
    let start = Instant::now();
    let literal = checks::minor_lemma_literal(5);
    let elapsed = start.elapsed();
    let total: usize = (1..=5).map(|c| qualifying_matrices(c).len()).sum();
    let mut out = from_checks(&[literal], elapsed, None);
    out.detail.push_str(&format!("; {total} matrices enumerated"));
    if !out.passed {
        let structured = checks::minor_lemma_two_groups(5);
        out.detail.push_str(&format!(
            "; with rows in two groups each column meets: {}/{} ok",
            structured.checked - structured.failures,
            structured.checked
        ));
    }
    out
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 worked transfer example", Box::new(c1_worked_transfer)),
        (
            "2 closure order vs rank oracle",
            Box::new(|| timed(Some(Duration::from_secs(60)), || vec![checks::closure_oracle(5, closure_leq), checks::closure_oracle(7, closure_leq)])),
        ),
        (
            "3 generic induction and Richardson classes",
            Box::new(|| timed(None, || vec![checks::generic_induction(5, 20, SEED)])),
        ),
        (
            "4 transfer commutes with induction",
            Box::new(|| timed(None, || vec![checks::transfer_commutes_with_induction(8, &[1, 2, 4])])),
        ),
        (
            "5 local-global transfer principle",
            Box::new(|| timed(None, || vec![checks::local_global_principle(500, SEED)])),
        ),
        ("6 gamma transitivity and closed forms", Box::new(c6_gamma)),
        (
            "7 vol(K) and self-dual constants",
            Box::new(|| timed(None, || vec![checks::measure_constants(6)])),
        ),
        (
            "8 Arthur identities and compact support",
            Box::new(|| {
                timed(None, || {
                    vec![checks::arthur_identities(4, 1000, SEED), checks::arthur_compact_support(4, 200, SEED)]
                })
            }),
        ),
        ("9 transpose scaling lemma", Box::new(c9_partition_lemma)),
        ("10 0/1 matrix minor lemma", Box::new(c10_minor_lemma)),
        (
            "11 class enumeration counts",
            Box::new(|| {
                timed(None, || {
                    vec![checks::enumeration_counts(8, &[1, 2, 3, 4]), checks::realize_round_trip(6)]
                })
            }),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let o = run();
        failed += usize::from(!o.passed);
        println!("{} criterion {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
