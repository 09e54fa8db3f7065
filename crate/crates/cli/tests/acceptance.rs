//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//!
//! Runs with `harness = false` so the lines are always printed by `cargo test`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dedekind_lab::dedekind::{dedekind_sum_naive, symbol_from_matrix};
use dedekind_lab::exact_arith::totient;
use dedekind_lab::{
    dedekind_sum_fast, dedekind_symbol, erdos_turan_bound, gcd, kloosterman_classical,
    kloosterman_partial_sum, kloosterman_twisted, phi_cocycle, pi_count, random_group_word,
    sample_stream, star_discrepancy, vardi_check, weil_ratio, weyl_sum, zeta_partial, DoubleCoset,
    GroupSpec, Rational, UnimodularMatrix, Weight, Weighting,
};

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn runtime(&mut self, t: Instant, limit: Duration) {
        let el = t.elapsed();
        self.note(format!("{:.2}s", el.as_secs_f64()));
        self.check(el < limit, format!("runtime {el:?} exceeds {limit:?}"));
    }
}

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn half() -> Weight {
    Weight::Exact(q(1, 2))
}

fn sl2z() -> GroupSpec {
    GroupSpec::sl2z()
}

fn coprime_pairs(c_max: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..=c_max).flat_map(|c| (0..c).filter(move |&a| gcd(a, c) == 1).map(move |a| (a, c)))
}

fn oracle_equivalence(o: &mut Outcome) {
    let t = Instant::now();
    let mut pairs = 0;
    for (a, c) in coprime_pairs(300) {
        pairs += 1;
        let naive = dedekind_sum_naive(a, c).unwrap();
        let fast = dedekind_sum_fast(a, c).unwrap();
        o.check(
            naive == fast,
            format!("s({a};{c}): fast {fast} != naive {naive}"),
        );
    }
    o.note(format!("{pairs} pairs"));
    o.runtime(t, Duration::from_secs(10));
}

fn reciprocity(o: &mut Outcome) {
    let mut pairs = 0;
    for c in 2..=500i64 {
        for a in 1..c {
            if gcd(a, c) != 1 {
                continue;
            }
            pairs += 1;
            let lhs = &dedekind_sum_naive(a, c).unwrap() + &dedekind_sum_naive(c, a).unwrap();
            let (a1, c1) = (a as i128, c as i128);
            let rhs = &q(a1 * a1 + c1 * c1 + 1, 12 * a1 * c1) - &q(1, 4);
            o.check(
                lhs == rhs,
                format!("reciprocity fails at ({a}, {c}): {lhs} != {rhs}"),
            );
        }
    }
    o.note(format!("{pairs} pairs"));
}

fn phi_integrality(o: &mut Outcome) {
    let mut violations = 0;
    for i in 0..10_000u64 {
        let len = 1 + (i % 30) as usize;
        let g = random_group_word(len, i).unwrap();
        match phi_cocycle(&g) {
            Ok(v) if v.is_integer() => {}
            other => {
                violations += 1;
                o.check(false, format!("word seed {i}: Φ({g}) = {other:?}"));
            }
        }
    }
    o.note(format!("10000 words, {violations} violations"));
}

fn symbol_identification(o: &mut Outcome) {
    let mut checked = 0;
    for (a, c) in coprime_pairs(200) {
        let coset = DoubleCoset::new(sl2z(), a as u64, c as u64).unwrap();
        let s = dedekind_sum_naive(a, c).unwrap();
        o.check(
            dedekind_symbol(&coset).unwrap() == s,
            format!("symbol({a},{c}) != s"),
        );
        let d = coset.d() as i128;
        let b = (a as i128 * d - 1) / c as i128;
        let g = UnimodularMatrix::new(a, b, c, d).unwrap();
        for m in -3..=3 {
            for n in -3..=3 {
                let h = &(&UnimodularMatrix::t_pow(m) * &g) * &UnimodularMatrix::t_pow(n);
                checked += 1;
                let v = symbol_from_matrix(&h).unwrap();
                o.check(v == s, format!("T^{m} γ T^{n} for ({a},{c}): {v} != {s}"));
            }
        }
    }
    o.note(format!("{checked} completions"));
}

fn vardi(o: &mut Outcome) {
    let t = Instant::now();
    let weights = [
        half(),
        Weight::integer(1),
        Weight::float(3.3).unwrap(),
        Weight::integer(12),
    ];
    let mut worst: f64 = 0.0;
    for k in &weights {
        for c in 1..=200u64 {
            let r = vardi_check(k, c).unwrap();
            let tol = 1e-9 * (totient(c) as f64).max(1.0);
            worst = worst.max(r / tol);
            o.check(r <= tol, format!("k={k} c={c}: residual {r:e} > {tol:e}"));
        }
    }
    for c in 1..=300u64 {
        let tw = kloosterman_twisted(&Weight::integer(12), c, sl2z())
            .unwrap()
            .value;
        let cl = kloosterman_classical(1, 1, c).unwrap().value;
        let diff = (tw - cl).norm();
        o.check(diff <= 1e-10, format!("k=12 collapse at c={c}: {diff:e}"));
    }
    o.note(format!("worst residual/tolerance {worst:.1e}"));
    o.runtime(t, Duration::from_secs(30));
}

fn counting(o: &mut Outcome) {
    let t = Instant::now();
    o.check(
        pi_count(sl2z(), 10.0).unwrap().count == 32,
        "π(10) != 32 for SL(2,Z)",
    );
    let g2 = GroupSpec::gamma0(2).unwrap();
    o.check(
        pi_count(g2, 10.0).unwrap().count == 13,
        "π(10) != 13 for Γ0(2)",
    );
    for group in [sl2z(), g2, GroupSpec::gamma0(6).unwrap()] {
        let r = pi_count(group, 1e4).unwrap();
        let dev = (r.ratio - 1.0).abs();
        o.check(dev < 0.01, format!("{group}: |ratio - 1| = {dev}"));
    }
    for x in [1e2, 1e3, 1e4] {
        let r = pi_count(sl2z(), x).unwrap();
        let bound = 2.0 * x * (x + 2.0).ln();
        o.check(
            r.remainder.abs() <= bound,
            format!("|R({x})| = {} > {bound}", r.remainder.abs()),
        );
    }
    o.runtime(t, Duration::from_secs(5));
}

fn zeta(o: &mut Outcome) {
    let z = zeta_partial(sl2z(), 2.0, 1e4).unwrap();
    o.note(format!("Z(2; 1e4) = {z:.7}"));
    o.check(
        (z - 1.110626).abs() < 1e-3,
        format!("|{z} - 1.110626| >= 1e-3"),
    );
}

fn weil(o: &mut Outcome) {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    let mut primes = 0;
    for p in 2..=10_000u64 {
        if let Ok(r) = weil_ratio(1, 1, p) {
            primes += 1;
            worst = worst.max(r);
            o.check(r <= 1.0, format!("|S(1,1;{p})| > 2 sqrt p (ratio {r})"));
        }
    }
    o.note(format!("{primes} primes, max |S|/(2 sqrt p) = {worst:.6}"));
    o.runtime(t, Duration::from_secs(60));
}

fn equidistribution(o: &mut Outcome) {
    for k in [Weight::integer(12), Weight::integer(1), half()] {
        let small = sample_stream(&k, sl2z(), 100.0).unwrap();
        let large = sample_stream(&k, sl2z(), 2000.0).unwrap();
        for m in 1..=5 {
            let w_small = weyl_sum(&small, m).unwrap().normalized;
            let w_large = weyl_sum(&large, m).unwrap().normalized;
            o.check(
                w_large < w_small,
                format!("k={k} m={m}: Weyl {w_large:.5} at x=2000 not below {w_small:.5} at x=100"),
            );
            o.check(
                w_large < 0.05,
                format!("k={k} m={m}: Weyl {w_large:.5} at x=2000 not < 0.05"),
            );
        }
        let d = star_discrepancy(&large).unwrap();
        o.check(d < 0.05, format!("k={k}: D* = {d:.5} at x=2000 not < 0.05"));
        for stream in [&small, &large] {
            for truncation in [1, 10, 50] {
                let r = erdos_turan_bound(stream, truncation).unwrap();
                o.check(
                    r.et_bound >= r.star_discrepancy,
                    format!(
                        "k={k} M={truncation}: ET {} < D* {}",
                        r.et_bound, r.star_discrepancy
                    ),
                );
            }
        }
        o.note(format!("k={k}: D*(2000) = {d:.5}"));
    }
}

fn goldfeld_sarnak(o: &mut Outcome) {
    let xs = [1e2, 1e3, 1e4];
    let values: Vec<f64> = xs
        .iter()
        .map(|&x| {
            kloosterman_partial_sum(1, 1, x, Weighting::OverC)
                .unwrap()
                .norm()
        })
        .collect();
    for (x, v) in xs.iter().zip(&values) {
        o.check(*v < x.sqrt(), format!("|P({x})| = {v} >= sqrt x"));
    }
    for i in 1..xs.len() {
        let slope = (values[i] / values[i - 1]).ln() / (xs[i] / xs[i - 1]).ln();
        o.check(
            slope < 0.5,
            format!(
                "growth exponent {slope} between {} and {}",
                xs[i - 1],
                xs[i]
            ),
        );
    }
    o.note(format!(
        "|P| = {:.4}, {:.4}, {:.4}",
        values[0], values[1], values[2]
    ));
}

fn determinism(o: &mut Outcome) {
    let dir = tempfile::tempdir().unwrap();
    let runs: [&[&str]; 3] = [
        &[
            "count",
            "--group",
            "gamma0(6)",
            "--x",
            "10000",
            "--format",
            "json",
        ],
        &["vardi", "--k", "1/2", "--cmax", "150", "--format", "csv"],
        &[
            "weyl", "--k", "3.3", "--x", "400", "--M", "8", "--format", "csv",
        ],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for threads in ["1", "8"] {
            let path = dir.path().join(format!("{}-{threads}.out", args[0]));
            let status = Command::new(env!("CARGO_BIN_EXE_dedekind-lab"))
                .args(args)
                .args(["--threads", threads, "--out"])
                .arg(&path)
                .status()
                .unwrap();
            o.check(
                status.success(),
                format!("{} --threads {threads} exited with {status}", args[0]),
            );
            outputs.push(std::fs::read(&path).unwrap_or_default());
        }
        o.check(
            !outputs[0].is_empty() && outputs[0] == outputs[1],
            format!("{}: outputs differ between 1 and 8 threads", args[0]),
        );
    }
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn(&mut Outcome));
    let criteria: [Criterion; 11] = [
        (
            1,
            "oracle equivalence fast = naive, c <= 300",
            oracle_equivalence,
        ),
        (2, "reciprocity, 1 <= a < c <= 500", reciprocity),
        (3, "Φ integrality on random words", phi_integrality),
        (
            4,
            "symbol = s(a;c) for all completions T^m γ T^n",
            symbol_identification,
        ),
        (5, "Vardi identity and k = 12 collapse", vardi),
        (6, "double coset counting", counting),
        (7, "Z(2) partial sum", zeta),
        (8, "Weil bound for p <= 10^4", weil),
        (9, "equidistribution of {k s(a;c)}", equidistribution),
        (10, "growth of Σ S(1,1;c)/c", goldfeld_sarnak),
        (11, "CLI output independent of thread count", determinism),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let mut o = Outcome::new();
        f(&mut o);
        let status = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let notes = if o.notes.is_empty() {
            String::new()
        } else {
            format!(" ({})", o.notes.join("; "))
        };
        println!("{status} criterion {id:>2}: {name}{notes}");
        for f in o.failures.iter().take(10) {
            println!("      - {f}");
        }
        if o.failures.len() > 10 {
            println!("      - ... {} more", o.failures.len() - 10);
        }
        if !o.failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
