//! Acceptance run: one PASS/FAIL line per criterion.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rank2_triangle::campaigns::{self, CampaignSummary};
use rank2_triangle::cli::figure_data;
use rank2_triangle::concurrence::pure_concurrence;
use rank2_triangle::decompositions::{example_endpoint, linspace, sweep_example};
use rank2_triangle::states::{catalog, BipartiteShape};

const SEED: u64 = 20_240_601;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn campaign_line(s: &CampaignSummary) -> String {
    format!("{} [{}] worst margin {:.3e}", s.name, s.summary_line(), s.worst_margin)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn criterion_1() -> Outcome {
    let (s, t) = timed(|| campaigns::lemma1(100_000, SEED));
    Outcome {
        pass: s.passed() && s.samples == 100_000 && t < Duration::from_secs(10),
        detail: format!("{} in {:.2}s (limit 10s)", campaign_line(&s), t.as_secs_f64()),
    }
}

fn criterion_2() -> Outcome {
    let (s, t) = timed(|| campaigns::wootters_equivalence(10_000, SEED));
    Outcome {
        pass: s.passed() && s.samples == 10_000 && t < Duration::from_secs(30),
        detail: format!(
            "{} at tolerance 1e-8 in {:.2}s (limit 30s)",
            campaign_line(&s),
            t.as_secs_f64()
        ),
    }
}

fn criterion_3() -> Outcome {
    let s = campaigns::triangle_two_qubit(100_000, SEED);
    Outcome {
        pass: s.passed() && s.samples == 100_000,
        detail: campaign_line(&s),
    }
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (d1, d2) in [(3, 3), (2, 3)] {
        let shape = BipartiteShape::new(d1, d2).unwrap();
        let s = campaigns::triangle_highdim(shape, 10_000, 100, SEED).unwrap();
        pass &= s.passed() && s.samples == 10_000;
        detail.push(campaign_line(&s));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for d in [2, 3] {
        let shape = BipartiteShape::single(d).unwrap();
        for s in [
            campaigns::l1_triangle(shape, 100_000, SEED),
            campaigns::roof_sandwich(shape, 100_000, 20, SEED),
        ] {
            pass &= s.passed() && s.samples == 100_000;
            detail.push(campaign_line(&s));
        }
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9;

    let c0 = example_endpoint(0.0).unwrap();
    let c1 = example_endpoint(1.0).unwrap();
    if !close(c0, 0.5) || !close(c1, 1.0) {
        failures.push(format!("endpoints C(P=0)={c0}, C(P=1)={c1}"));
    }
    let cpsi1 = pure_concurrence(&catalog::example_psi1()).unwrap();
    let cpsi2 = pure_concurrence(&catalog::example_psi2()).unwrap();
    if !close(cpsi1, 1.0) || !close(cpsi2, 0.5) {
        failures.push(format!("pure concurrences {cpsi1}, {cpsi2}"));
    }

    let data = figure_data(101, 200, SEED).unwrap();
    let rows = data.rows.len();
    let below = data.rows.iter().filter(|r| r.violates_upper).count();
    let above = data.rows.iter().filter(|r| r.violates_lower).count();
    if rows != 101 * 200 || below != 0 || above != 0 {
        failures.push(format!(
            "{rows} rows, {below} sums below C(rho), {above} differences above C(rho)"
        ));
    }

    // running max over each P is nondecreasing, and a longer run extends a
    // shorter one with the same seed
    let grid = linspace(0.01, 0.99, 101);
    let short = sweep_example(&grid, 100, SEED).unwrap();
    let long = sweep_example(&grid, 200, SEED).unwrap();
    for (a, b) in short.iter().zip(&long) {
        let trace = b.coa_trace();
        if trace.windows(2).any(|w| w[1] < w[0]) {
            failures.push(format!("COA trace decreases at P={}", b.p));
        }
        if a.coa_trace()[..] != trace[..100] || a.coa_estimate() > b.coa_estimate() {
            failures.push(format!("COA at P={} not monotone in sample count", b.p));
        }
        if b.coa_estimate() < b.c_rho - 1e-9 {
            failures.push(format!("COA below C(rho) at P={}", b.p));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "C(P=0)={c0:.12}, C(P=1)={c1:.12}, C(psi1)={cpsi1:.12}, C(psi2)={cpsi2:.12}; {rows} sweep rows, 0 ordering violations; COA nondecreasing"
            )
        } else {
            failures.join("; ")
        },
    }
}

fn run_bin(args: &[&str], dir: &Path) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_rank2-triangle"))
        .args(args)
        .current_dir(dir)
        .env_remove("RANK2_TRIANGLE_SEED")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_7() -> Outcome {
    let bell = r#"{"shape": [2, 2], "amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]}"#;
    let ens = r#"{"shape": [2, 2], "ensemble": {"p1": 0.5,
        "psi1": [[0.5, 0], [0.5, 0], [0.5, 0], [-0.5, 0]],
        "psi2": [[0.5, 0], [0.5, 0], [0, 0.5], [0, 0.5]]}}"#;
    let commands: [(&str, &str, &[&str]); 8] = [
        (
            "verify-lemma1",
            "verify-lemma1 --samples 5000 --seed 3 --output out.json",
            &["out.json"],
        ),
        (
            "verify-triangle-concurrence",
            "verify-triangle-concurrence --dims 3x3 --samples 300 --remixes 20 --seed 3 --output out.json",
            &["out.json"],
        ),
        (
            "verify-triangle-l1",
            "verify-triangle-l1 --dims 3 --samples 5000 --seed 3 --output out.csv --format csv",
            &["out.csv"],
        ),
        (
            "verify-roof-sandwich",
            "verify-roof-sandwich --dims 2 --samples 2000 --seed 3 --output out.json",
            &["out.json"],
        ),
        (
            "figure-1",
            "figure-1 --grid 11 --samples 50 --seed 3 --format csv --output fig.csv",
            &["fig.csv", "fig_summary.csv"],
        ),
        (
            "figure-2",
            "figure-2 --grid 11 --samples 50 --seed 3 --format json --output fig.json",
            &["fig.json"],
        ),
        ("eval (pure)", "eval --state bell.json", &[]),
        ("eval (ensemble)", "eval --state ens.json --samples 300 --seed 3", &[]),
    ];
    let mut failures = Vec::new();
    for (label, args, files) in &commands {
        let mut artifacts = Vec::new();
        for _ in 0..2 {
            let dir = tempfile::tempdir().unwrap();
            std::fs::write(dir.path().join("bell.json"), bell).unwrap();
            std::fs::write(dir.path().join("ens.json"), ens).unwrap();
            let args: Vec<&str> = args.split_whitespace().collect();
            let (code, stdout) = run_bin(&args, dir.path());
            let mut bytes = vec![stdout];
            for f in *files {
                bytes.push(std::fs::read(dir.path().join(f)).unwrap_or_default());
            }
            artifacts.push((code, bytes));
        }
        let (a, b) = (&artifacts[0], &artifacts[1]);
        if a.0 != 0 || a != b || a.1.iter().any(Vec::is_empty) {
            failures.push(format!("{label} (exit {}, identical {})", a.0, a == b));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{} commands byte-identical across two runs", commands.len())
        } else {
            failures.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("lemma 1 campaign", criterion_1),
        ("rank-2 vs spin-flip concurrence", criterion_2),
        ("two-qubit concurrence triangle", criterion_3),
        ("high-dimensional concurrence sandwich", criterion_4),
        ("l1 triangle and convex-roof sandwich", criterion_5),
        ("figure sweep reproduction", criterion_6),
        ("determinism", criterion_7),
    ];
    let mut all = true;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let (outcome, t) = timed(check);
        all &= outcome.pass;
        println!(
            "criterion {} ({name}): {} [{:.2}s] {}",
            k + 1,
            if outcome.pass { "PASS" } else { "FAIL" },
            t.as_secs_f64(),
            outcome.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
