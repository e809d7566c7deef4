//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use transcend::approximants::{build_q_p_general, identity_23, record_indices, z_value, ZParams};
use transcend::battery::{run_battery, BatteryConfig};
use transcend::criteria::{
    min_required_base, required_bases, BaseKind, CriterionParams, ExponentBounds, Grid, GrowthVerdict, Theorem,
};
use transcend::exactmath::{iv_compare, iv_from_rat, Cmp, IntervalReal, Precision, Verdict};
use transcend::numberfield::{rational_coords, NumberField};
use transcend::reproduce::{run_example, Claim, ExampleRun, RunSettings};
use transcend::sequences::{builtin_example, fib, phi_power, ExampleId, ExampleOptions};
use transcend::{BigInt, BigRat};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fibonacci() -> Outcome {
    let start = Instant::now();
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for m in 0..=20_000u64 {
        ensure(fib(m) == a, format!("F({m}) differs from the recurrence"))?;
        let t = &a + &b;
        a = std::mem::replace(&mut b, t);
    }
    ensure(fib(9) == BigInt::from(34) && fib(14) == BigInt::from(377), "F(9) or F(14) wrong")?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, format!("took {secs:.2}s"))?;
    Ok(format!("m ≤ 20000 exact, {secs:.2}s"))
}

fn phi_powers() -> Outcome {
    let k = NumberField::golden();
    let phi = k.phi().map_err(|e| e.to_string())?.ok_or("no φ")?;
    let basis = k.basis_elements();
    let mut acc = k.one();
    let (mut prev, mut cur) = (BigInt::from(1), BigInt::from(0));
    for m in 0..=1000i64 {
        let p = phi_power(&k, m).map_err(|e| e.to_string())?;
        ensure(p == acc, format!("φ^{m} differs from repeated multiplication"))?;
        let c = rational_coords(&p, &basis).map_err(|e| e.to_string())?;
        let want = [BigRat::from_integer(prev.clone()), BigRat::from_integer(cur.clone())];
        ensure(c == want, format!("φ^{m} coordinates are not (F_{{m−1}}, F_m)"))?;
        acc = &acc * &phi;
        let t = &prev + &cur;
        prev = std::mem::replace(&mut cur, t);
    }
    Ok("m ≤ 1000".into())
}

fn heights() -> Outcome {
    let r = run_battery(&BatteryConfig::default()).map_err(|e| e.to_string())?;
    ensure(r.instances >= 200, "fewer than 200 instances")?;
    let bad: Vec<_> = r.tallies.iter().filter(|t| t.fails > 0 || t.undecided > 0).map(|t| t.name).collect();
    ensure(bad.is_empty(), format!("refuted or undecided: {bad:?}"))?;
    Ok(format!("{} checks on {} instances", r.tallies.len(), r.instances))
}

fn base_arithmetic() -> Outcome {
    let mut p = CriterionParams::new(Theorem::RationalA);
    p.y = q(2, 1);
    let b = required_bases(Theorem::RationalA, 2, &p).map_err(|e| e.to_string())?;
    let t = b.iter().filter(|b| b.kind == BaseKind::Transcendence).map(|b| b.value.clone()).max().ok_or("no base")?;
    ensure(t == q(9, 1) && t > q(7, 1), format!("golden-power rewrite base {t}"))?;

    let e = |s: &str| Some(s.parse().unwrap());
    let floor = ExponentBounds { y1: e("1"), y2: e("0"), beta: e("0"), ..Default::default() };
    for d in 4..=6 {
        let (m, _) = min_required_base(Theorem::General, d, &floor, &[q(0, 1)]).map_err(|e| e.to_string())?;
        ensure(m >= q(17, 1) && m > q(9, 1), format!("d = {d}: {m}"))?;
    }
    let upper = ExponentBounds {
        y1: e("(2 - c/4)/(2 + c)"),
        y2: e("(1 + c)/(2 + c)"),
        beta: e("(1 + c)/(2 + c)"),
        ..Default::default()
    };
    let grid: Grid = "(-1,3]:1/10".parse().map_err(|e: transcend::Error| e.to_string())?;
    for c in grid.points().map_err(|e| e.to_string())? {
        let (m, _) = min_required_base(Theorem::General, 2, &upper, std::slice::from_ref(&c)).map_err(|e| e.to_string())?;
        ensure(m == q(13, 1) + q(3, 1) * &c && m > q(9, 1), format!("c = {c}: {m}"))?;
    }
    let lower = ExponentBounds { y1: e("(2 - c/4)/(2 + c)"), y2: e("0"), beta: e("0"), ..Default::default() };
    let grid: Grid = "(-19/10,-1]:1/10".parse().map_err(|e: transcend::Error| e.to_string())?;
    for c in grid.points().map_err(|e| e.to_string())? {
        let (m, _) = min_required_base(Theorem::General, 2, &lower, std::slice::from_ref(&c)).map_err(|e| e.to_string())?;
        let want = (q(8, 1) - &c) / (q(2, 1) + &c) + q(1, 1);
        ensure(m == want && m >= q(10, 1), format!("c = {c}: {m}"))?;
    }

    let spec = builtin_example(ExampleId::Mixed, &ExampleOptions::default()).map_err(|e| e.to_string())?;
    let mut p = CriterionParams::new(Theorem::General).with_declared(&spec.exponents);
    p.epsilon = q(2, 1);
    let b = required_bases(Theorem::General, 2, &p).map_err(|e| e.to_string())?;
    let second = &b.iter().filter(|b| b.kind == BaseKind::Transcendence).nth(1).ok_or("no second base")?.value;
    ensure(*second == q(13, 1) && *second < q(14, 1), format!("second base {second}"))?;
    Ok("9 > 7, 17 > 9, 13 + 3c, (8 − c)/(2 + c) + 1, 13 < 14".into())
}

fn example(id: ExampleId) -> Result<ExampleRun, String> {
    let settings = RunSettings {
        n_range: (2, 4),
        prec: Precision::new(256, 1024).map_err(|e| e.to_string())?,
        delta: q(1, 100),
    };
    run_example(id, &ExampleOptions::default(), &settings).map_err(|e| e.to_string())
}

fn hypotheses() -> Outcome {
    let mut notes = Vec::new();
    for id in [ExampleId::PolyPower, ExampleId::GoldenPower, ExampleId::Mixed] {
        let run = example(id)?;
        for e in &run.entries {
            let Some(r) = &e.report else { continue };
            let tag = format!("{id} {} {}", e.theorem, e.variant);
            for h in &r.hypotheses {
                ensure(h.verdicts.iter().all(|(_, v)| *v == Verdict::Holds), format!("{tag}: {} not all Holds", h.label))?;
            }
            let g = r.growth_for(BaseKind::Transcendence).ok_or(format!("{tag}: no transcendence base"))?;
            match e.claim {
                Claim::Applicable => ensure(g.diverges(), format!("{tag}: growth {g:?}"))?,
                Claim::NotApplicable => ensure(g == GrowthVerdict::Bounded, format!("{tag}: growth {g:?}"))?,
            }
            if id == ExampleId::PolyPower {
                ensure(
                    r.growth.iter().any(|(_, v)| *v == GrowthVerdict::BoundaryDiverges),
                    format!("{tag}: no BoundaryDiverges base"),
                )?;
            }
            notes.push(format!("{id}/{}: {g:?}", e.theorem));
        }
    }
    let run = example(ExampleId::TwoSeries)?;
    let r = run.entries.first().and_then(|e| e.report.as_ref()).ok_or("2.1 has no report")?;
    let g = r.growth_for(BaseKind::Transcendence);
    ensure(g == Some(GrowthVerdict::BoundaryBounded), format!("2.1 adjacent growth {g:?}"))?;
    notes.push("2.1 adjacent: BoundaryBounded".into());
    Ok(notes.join(", "))
}

fn construction() -> Outcome {
    let start = Instant::now();
    let spec = builtin_example(ExampleId::Mixed, &ExampleOptions::default()).map_err(|e| e.to_string())?;
    let mut p = CriterionParams::new(Theorem::General).with_declared(&spec.exponents);
    p.epsilon = q(2, 1);
    p.zeta = spec.zeta.clone();
    let prec = Precision::new(512, 8192).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for n in 2..=4 {
        // non-integral p_{i,N} is a hard error inside the construction
        let a = build_q_p_general(&spec, n, &p, prec).map_err(|e| format!("N = {n}: {e}"))?;
        for label in ["(21)", "(22)"] {
            ensure(a.checks.get(label) == Some(&Verdict::Holds), format!("N = {n}: {label} {:?}", a.checks.get(label)))?;
        }
        out.push(a);
    }
    ensure(out.windows(2).all(|w| w[1].err.hi() < w[0].err.lo()), "err does not strictly decrease")?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!("N = 2..4 integral, (21) and (22) Hold, err decreasing, {secs:.2}s"))
}

fn z_quantity() -> Outcome {
    let spec = builtin_example(ExampleId::GoldenPower, &ExampleOptions::default()).map_err(|e| e.to_string())?;
    let zp = ZParams::new(q(5, 1), q(1, 2), q(0, 1)).map_err(|e| e.to_string())?;
    let prec = Precision::new(256, 4096).map_err(|e| e.to_string())?;
    let zs = (2..=5).map(|n| z_value(&spec, &zp, n, prec)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let shown: Vec<String> = zs.iter().map(|z| format!("{:.4e}", z.to_f64())).collect();
    let decreasing = zs.windows(2).all(|w| w[1].hi() < w[0].lo());
    let bar = iv_from_rat(&q(1, 1000), prec);
    let small = iv_compare(&IntervalReal::point(zs[3].hi().clone()), &bar) == Cmp::Less;
    ensure(decreasing && small, format!("Z_2..Z_5 = {shown:?}; strictly decreasing: {decreasing}; Z_5 < 1e-3: {small}"))?;
    Ok(format!("Z_2..Z_5 = {shown:?}"))
}

fn identity_and_records() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(23);
    for _ in 0..100 {
        let m = q(rng.gen_range(1..200), rng.gen_range(1..20));
        let delta = q(rng.gen_range(0..100), rng.gen_range(1..20));
        let k = rng.gen_range(0..8);
        let n = k + rng.gen_range(1..10);
        ensure(identity_23(&m, &delta, k, n).map_err(|e| e.to_string())?, format!("M = {m}, δ = {delta}, k = {k}, N = {n}"))?;
    }
    for base in [2i64, 3, 10] {
        let ys: Vec<_> = (0..15).map(|i| IntervalReal::from_int(base.pow(i))).collect();
        let s = record_indices(&ys, 15);
        ensure(s.records == (2..=15).collect::<Vec<_>>(), format!("base {base}: records {:?}", s.records))?;
    }
    let flat = vec![IntervalReal::from_int(5); 15];
    let s = record_indices(&flat, 15);
    ensure(s.records.is_empty() && s.undecided.is_empty(), "records on a constant sequence")?;
    Ok("100 tuples exact, records on every doubling index and none on constants".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_transcend"))
            .args(["example", "2.7", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), "nonzero exit")?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, "outputs differ")?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fast-doubling Fibonacci", fibonacci),
        ("φ-power coordinates", phi_powers),
        ("height and norm inequalities", heights),
        ("required-base arithmetic", base_arithmetic),
        ("hypotheses on 2.4, 2.5, 2.7", hypotheses),
        ("approximants for 2.7", construction),
        ("Z_N for 2.5", z_quantity),
        ("identity (23) and record scans", identity_and_records),
        ("deterministic JSON", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
