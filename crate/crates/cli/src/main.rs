use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use transcend::approximants::{
    build_q_p_general, build_q_p_rational, partial_sum, sum_enclosure, tail_enclosure, z_value, Approximant,
    RationalParams, ZParams,
};
use transcend::battery::{run_battery, BatteryConfig};
use transcend::criteria::{
    report_json, report_text, verify, BoundExpr, CriterionParams, ExponentBounds, Grid, Overall, Theorem,
};
use transcend::exactmath::{IntervalComplex, IntervalReal, Precision, Round, Verdict};
use transcend::numberfield::{parse_rat, FieldSpec};
use transcend::reproduce::{
    applicability_json, applicability_text, run_applicability, run_example, two_series_branches, Branch, RunSettings,
};
use transcend::sequences::{builtin_variant, ExampleId, ExampleOptions, IndexConvention, SequenceFile, SequenceSpec};
use transcend::{BigRat, Error};

#[derive(Parser, Debug)]
#[command(name = "transcend", version, about = "Check irrationality and transcendence criteria for series over number fields")]
struct Cli {
    /// working precision in bits
    #[arg(long, global = true, default_value_t = 256)]
    precision: u32,
    /// precision ceiling for refinement
    #[arg(long, global = true, default_value_t = 4096)]
    max_precision: u32,
    /// index range a..b checked for each hypothesis
    #[arg(long, global = true, default_value = "2..4", value_parser = parse_range)]
    n_range: (u64, u64),
    #[arg(long, global = true, value_enum, default_value_t = Convention::Adjacent)]
    index_convention: Convention,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    Adjacent,
    Nested,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a built-in family (2.1, 2.4, 2.5, 2.6, 2.7) against every criterion it is discussed under
    Example {
        id: String,
        /// the multiplier x of the two-series family, e.g. "phibar"
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value = "1/100")]
        delta: String,
    },
    /// Check one criterion's hypotheses and growth condition on a sequence
    Verify {
        #[command(flatten)]
        source: Source,
        /// 1.1, 1.2, 1.3, 1.4, 1.6, 1.7 or 7.1
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Smallest required base over a grid of exponent choices, compared with a growth base
    Applicability {
        /// built-in case analysis; "two-series" covers the two-series family under 1.7
        #[arg(long, conflicts_with_all = ["theorem", "bound", "grid"])]
        preset: Option<String>,
        #[arg(long)]
        theorem: Option<String>,
        /// field degree
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// exponent bound as name=expr in the grid variable c, e.g. beta="(1+c)/(2+c)"
        #[arg(long)]
        bound: Vec<String>,
        /// e.g. "(-1,3]:1/10" or a single value
        #[arg(long)]
        grid: Option<String>,
        /// growth base of the family
        #[arg(long, default_value = "9")]
        g: String,
        #[arg(long, default_value = "1/100")]
        delta: String,
    },
    /// Build the approximants (q, p) for each N in the range and check their inequalities
    Approximate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        params: ParamFlags,
        /// M in the error bound of the rational construction
        #[arg(long, default_value = "1")]
        m: String,
        /// E in the numerator bound of the rational construction
        #[arg(long, default_value = "1")]
        e: String,
    },
    /// Partial sums, tail enclosures and optionally Z_N over the range
    Sum {
        #[command(flatten)]
        source: Source,
        /// M of Z_N; Z_N is printed when given
        #[arg(long)]
        z_m: Option<String>,
        #[arg(long, default_value = "1/2")]
        z_c: String,
        #[arg(long, default_value = "0")]
        z_beta: String,
    },
    /// Seeded randomized checks of the height, house and norm inequalities in Q(sqrt 5)
    Invariants {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// built-in family, optionally with a decomposition: 2.5 or 2.5:rewrite
    #[arg(long)]
    builtin: Option<String>,
    /// sequence description file (JSON)
    #[arg(long)]
    sequence: Option<PathBuf>,
}

#[derive(Args, Debug, Default)]
struct ParamFlags {
    /// field description file (JSON), replacing the field of the sequence file
    #[arg(long)]
    field: Option<PathBuf>,
    #[arg(long)]
    epsilon: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    y: Option<String>,
    #[arg(long)]
    y1: Option<String>,
    #[arg(long)]
    y2: Option<String>,
    #[arg(long)]
    eta1: Option<String>,
    #[arg(long)]
    eta2: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a == 0 || a > b {
        return Err(format!("need 1 <= a <= b, got {a}..{b}"));
    }
    Ok((a, b))
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse { .. } | Error::UndefinedSymbol(_)) => 3,
            Failure::Lib(Error::EmptyGrid) => 4,
            Failure::Lib(Error::NotGalois) => 5,
            _ => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(m) => f.write_str(m),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

struct Ctx {
    prec: Precision,
    n_range: (u64, u64),
    convention: IndexConvention,
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // usage errors share the generic error code; 2 is reserved for inconclusive runs
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            if let Err(e) = emit(&text, cli.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let prec = Precision::new(cli.precision, cli.max_precision)?;
    let ctx = Ctx {
        prec,
        n_range: cli.n_range,
        convention: match cli.index_convention {
            Convention::Adjacent => IndexConvention::Adjacent,
            Convention::Nested => IndexConvention::Nested,
        },
        json: cli.format == Format::Json,
    };
    match &cli.command {
        Command::Example { id, x, delta } => cmd_example(&ctx, id, x.clone(), delta),
        Command::Verify { source, theorem, params } => cmd_verify(&ctx, source, theorem, params),
        Command::Applicability { preset, theorem, d, bound, grid, g, delta } => {
            cmd_applicability(&ctx, preset.as_deref(), theorem.as_deref(), *d, bound, grid.as_deref(), g, delta)
        }
        Command::Approximate { source, params, m, e } => cmd_approximate(&ctx, source, params, m, e),
        Command::Sum { source, z_m, z_c, z_beta } => cmd_sum(&ctx, source, z_m.as_deref(), z_c, z_beta),
        Command::Invariants { seed, instances } => cmd_invariants(&ctx, *seed, *instances),
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_spec(ctx: &Ctx, source: &Source, field: Option<&Path>) -> Result<SequenceSpec, Failure> {
    if let Some(b) = &source.builtin {
        if field.is_some() {
            return Err(Failure::Io("--field applies to --sequence files only".into()));
        }
        let (id, variant) = b.split_once(':').unwrap_or((b, "primary"));
        let opts = ExampleOptions { convention: ctx.convention, ..Default::default() };
        return Ok(builtin_variant(id.parse::<ExampleId>()?, variant, &opts)?);
    }
    let path = source.sequence.as_deref().ok_or_else(|| Failure::Io("no sequence given".into()))?;
    let mut file = SequenceFile::from_json(&read(path)?)?;
    if let Some(f) = field {
        file.field = Some(FieldSpec::from_json(&read(f)?)?);
    }
    if file.index_convention.is_none() {
        file.index_convention = Some(ctx.convention);
    }
    Ok(file.build()?)
}

fn params_for(theorem: Theorem, spec: &SequenceSpec, f: &ParamFlags) -> Result<CriterionParams, Failure> {
    let mut p = CriterionParams::new(theorem).with_declared(&spec.exponents);
    let set = |dst: &mut BigRat, src: &Option<String>| -> Result<(), Failure> {
        if let Some(s) = src {
            *dst = parse_rat(s)?;
        }
        Ok(())
    };
    set(&mut p.epsilon, &f.epsilon)?;
    set(&mut p.alpha, &f.alpha)?;
    set(&mut p.beta, &f.beta)?;
    set(&mut p.delta, &f.delta)?;
    set(&mut p.y, &f.y)?;
    set(&mut p.y1, &f.y1)?;
    set(&mut p.y2, &f.y2)?;
    set(&mut p.eta1, &f.eta1)?;
    set(&mut p.eta2, &f.eta2)?;
    if let Some(g) = &f.gamma {
        p.gamma = Some(parse_rat(g)?);
    }
    p.zeta = spec.zeta.clone();
    p.validate(spec.field.degree())?;
    Ok(p)
}

fn cmd_example(ctx: &Ctx, id: &str, x: Option<String>, delta: &str) -> Outcome {
    let id: ExampleId = id.parse()?;
    let opts = ExampleOptions { convention: ctx.convention, x, field: None };
    let settings = RunSettings { n_range: ctx.n_range, prec: ctx.prec, delta: parse_rat(delta)? };
    let run = run_example(id, &opts, &settings)?;
    let code = if run.inconclusive() { 2 } else { 0 };
    let text = if ctx.json { to_json(&run.to_json()) } else { run.to_text() };
    Ok((text, code))
}

fn cmd_verify(ctx: &Ctx, source: &Source, theorem: &str, flags: &ParamFlags) -> Outcome {
    let spec = load_spec(ctx, source, flags.field.as_deref())?;
    let params = params_for(theorem.parse()?, &spec, flags)?;
    let r = verify(&spec, &params, ctx.n_range, ctx.prec)?;
    let code = if r.overall == Overall::Inconclusive { 2 } else { 0 };
    let text = if ctx.json { report_json(&r) + "\n" } else { report_text(&r) };
    Ok((text, code))
}

#[allow(clippy::too_many_arguments)]
fn cmd_applicability(
    ctx: &Ctx,
    preset: Option<&str>,
    theorem: Option<&str>,
    d: usize,
    bounds: &[String],
    grid: Option<&str>,
    g: &str,
    delta: &str,
) -> Outcome {
    let delta = parse_rat(delta)?;
    let mut branches = match preset {
        Some("two-series") => two_series_branches()?,
        Some(other) => return Err(Failure::Io(format!("unknown preset {other:?}; available: two-series"))),
        None => {
            let theorem: Theorem =
                theorem.ok_or_else(|| Failure::Io("--theorem is required without --preset".into()))?.parse()?;
            let grid: Grid = grid.ok_or_else(|| Failure::Io("--grid is required without --preset".into()))?.parse()?;
            let mut eb = ExponentBounds::default();
            for b in bounds {
                let (name, expr) =
                    b.split_once('=').ok_or_else(|| Failure::Io(format!("bound {b:?}: expected name=expr")))?;
                let e: Option<BoundExpr> = Some(expr.parse()?);
                match name.trim() {
                    "beta" => eb.beta = e,
                    "y" => eb.y = e,
                    "y1" => eb.y1 = e,
                    "y2" => eb.y2 = e,
                    "eta1" => eb.eta1 = e,
                    "eta2" => eb.eta2 = e,
                    other => return Err(Failure::Io(format!("unknown exponent {other:?}"))),
                }
            }
            vec![Branch { name: "custom".into(), theorem, d, bounds: eb, grid }]
        }
    };
    for b in &mut branches {
        b.bounds.delta = delta.clone();
    }
    let results = run_applicability(&branches, &parse_rat(g)?)?;
    let text = if ctx.json { to_json(&applicability_json(&results)) } else { applicability_text(&results) };
    Ok((text, 0))
}

fn cmd_approximate(ctx: &Ctx, source: &Source, flags: &ParamFlags, m: &str, e: &str) -> Outcome {
    let spec = load_spec(ctx, source, flags.field.as_deref())?;
    let (lo, hi) = ctx.n_range;
    let mut out: Vec<Approximant> = Vec::new();
    let rational = spec.field.degree() == 1
        || (1..hi).all(|n| spec.term(n).is_ok_and(|t| t.a.as_rational().is_some_and(|r| r.is_integer())));
    if rational {
        let y = flags.y.as_deref().map(parse_rat).transpose()?;
        let rp = RationalParams {
            m: parse_rat(m)?,
            e: parse_rat(e)?,
            y: vec![y.or_else(|| spec.exponents.y.clone()).unwrap_or_else(|| BigRat::from_integer(1.into()))],
            alpha: flags.alpha.as_deref().map(parse_rat).transpose()?.unwrap_or_else(|| parse_rat("1/2").unwrap()),
        };
        for n in lo..=hi {
            out.push(build_q_p_rational(&spec, n, &rp, ctx.prec)?);
        }
    } else {
        let params = params_for(Theorem::General, &spec, flags)?;
        for n in lo..=hi {
            out.push(build_q_p_general(&spec, n, &params, ctx.prec)?);
        }
    }
    let decreasing = out.windows(2).all(|w| w[1].err.hi() < w[0].err.lo());
    let mut summary = std::collections::BTreeMap::new();
    for a in &out {
        for (k, v) in &a.checks {
            let e = summary.entry(k.clone()).or_insert(Verdict::Holds);
            *e = e.and(*v);
        }
    }
    let construction = if rational { "rational" } else { "galois" };
    let text = if ctx.json {
        let summary: serde_json::Map<String, Value> =
            summary.iter().map(|(k, v)| (k.clone(), Value::String(v.as_str().into()))).collect();
        to_json(&json!({
            "sequence": spec.name,
            "construction": construction,
            "approximants": out.iter().map(Approximant::to_json).collect::<Vec<_>>(),
            "summary": summary,
            "err_strictly_decreasing": decreasing,
        }))
    } else {
        let mut s = format!("{construction} approximants for {}\n", spec.name);
        for a in &out {
            let checks: Vec<String> = a.checks.iter().map(|(k, v)| format!("{k} {}", v.as_str())).collect();
            s += &format!(
                "N = {}: q = {}\n  p = [{}]\n  |error| in {}\n  {}\n",
                a.n,
                a.q,
                a.p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
                real_text(&a.err),
                checks.join(", ")
            );
        }
        let all: Vec<String> = summary.iter().map(|(k, v)| format!("{k} {}", v.as_str())).collect();
        s += &format!("summary: {}; error strictly decreasing: {decreasing}\n", all.join(", "));
        s
    };
    Ok((text, 0))
}

fn real_text(x: &IntervalReal) -> String {
    format!("[{}, {}]", x.lo().to_sci_string(20, Round::Down), x.hi().to_sci_string(20, Round::Up))
}

fn complex_value(z: &IntervalComplex) -> Value {
    json!({"re": real_value(&z.re), "im": real_value(&z.im)})
}

fn real_value(x: &IntervalReal) -> Value {
    json!({"lo": x.lo().to_sci_string(20, Round::Down), "hi": x.hi().to_sci_string(20, Round::Up)})
}

fn complex_text(z: &IntervalComplex) -> String {
    if z.im.is_point() && z.im.lo().is_zero() {
        real_text(&z.re)
    } else {
        format!("{} + i{}", real_text(&z.re), real_text(&z.im))
    }
}

fn cmd_sum(ctx: &Ctx, source: &Source, z_m: Option<&str>, z_c: &str, z_beta: &str) -> Outcome {
    let spec = load_spec(ctx, source, None)?;
    let zp = z_m.map(|m| ZParams::new(parse_rat(m)?, parse_rat(z_c)?, parse_rat(z_beta)?)).transpose()?;
    let total = sum_enclosure(&spec, ctx.prec)?;
    let mut rows = Vec::new();
    for n in ctx.n_range.0..=ctx.n_range.1 {
        let s = partial_sum(&spec, n)?;
        let coords: Vec<String> = transcend::numberfield::rational_coords(&s, &spec.basis)?.iter().map(|c| c.to_string()).collect();
        let tail = tail_enclosure(&spec, n, ctx.prec)?;
        let z = zp.as_ref().map(|zp| z_value(&spec, zp, n, ctx.prec)).transpose()?;
        rows.push((n, coords, tail, z));
    }
    let text = if ctx.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(n, coords, tail, z)| {
                let mut v = json!({"N": n, "partial_sum": coords, "tail": complex_value(tail)});
                if let Some(z) = z {
                    v["Z"] = real_value(z);
                }
                v
            })
            .collect();
        to_json(&json!({
            "sequence": spec.name,
            "basis": spec.basis_names,
            "sum": complex_value(&total),
            "rows": rows,
        }))
    } else {
        let mut s = format!("{} over the basis [{}]\nsum in {}\n", spec.name, spec.basis_names.join(", "), complex_text(&total));
        for (n, coords, tail, z) in &rows {
            s += &format!("N = {n}: s_N = ({})  tail in {}", coords.join(", "), complex_text(tail));
            if let Some(z) = z {
                s += &format!("  Z_N in {}", real_text(z));
            }
            s.push('\n');
        }
        s
    };
    Ok((text, 0))
}

fn cmd_invariants(ctx: &Ctx, seed: u64, instances: usize) -> Outcome {
    let cfg = BatteryConfig { seed, instances, prec: ctx.prec.with_bits(ctx.prec.bits.min(128)), ..Default::default() };
    let r = run_battery(&cfg)?;
    let text = if ctx.json { to_json(&r.to_json()) } else { r.to_text() };
    Ok((text, if r.passed() { 0 } else { 1 }))
}
