//! Command-line front end: batch/single identity verification, series
//! printing, and golden-file maintenance.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qseries_core::ExpScale;
use qverify::catalog;
use qverify::golden::{self, GoldenOutcome};
use qverify::instance::{IdentityInstance, Mode};
use qverify::seriescmd::{self, SeriesParams};

#[derive(Parser)]
#[command(name = "qverify", version, about = "Exact q-series identity verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one identity (by id) or the whole catalog ("all").
    Verify(VerifyArgs),
    /// Print a named series in the canonical format.
    Series(SeriesArgs),
    /// Check or regenerate golden files.
    Golden(GoldenArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id from the catalog, or "all".
    id: String,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    l: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    i: Option<i64>,
    #[arg(long)]
    ip: Option<i64>,
    #[arg(long)]
    order: Option<i64>,
    /// bivariate | specialized
    #[arg(long)]
    mode: Option<String>,
    /// Specialization point "sigma,j", e.g. "+1,2".
    #[arg(long, value_name = "SIGMA,J", allow_hyphen_values = true)]
    x_point: Option<String>,
    /// Substitute q -> q^U before specializing.
    #[arg(long)]
    qsub: Option<i64>,
    /// JSON manifest of instances (overrides the built-in catalog).
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 4)]
    jobs: usize,
    /// Write the JSON summary here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Harness self-test: add q^E to the left side of the first sub-case.
    #[arg(long, value_name = "E")]
    debug_perturb: Option<i64>,
}

#[derive(Args)]
struct SeriesArgs {
    /// theta_pm | theta_pm_star | f_abc | f_tm | U | H | G | theta |
    /// theta_over_factor | pochhammer | V | Y
    name: String,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    i: Option<i64>,
    #[arg(long)]
    ip: Option<i64>,
    /// Parts bound L of the partition generating function.
    #[arg(long)]
    len: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    /// Middle coefficient of the double-sum form.
    #[arg(long = "bq")]
    bb: Option<i64>,
    #[arg(long)]
    c: Option<i64>,
    /// Monomial "sigma,d,e" (e may be n/d).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    arg: Option<String>,
    /// Base exponent u of q^u (may be n/d).
    #[arg(long)]
    base: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    h: Option<i64>,
    /// Pochhammer length: a number or "inf".
    #[arg(long = "length")]
    poch_n: Option<String>,
    /// product | sum
    #[arg(long)]
    form: Option<String>,
    /// Evaluate U at -x instead of x.
    #[arg(long, default_value_t = false)]
    neg: bool,
    #[arg(long)]
    order: i64,
    /// Lattice denominator D.
    #[arg(long, default_value_t = 1)]
    scale: i64,
    /// text | json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct GoldenArgs {
    /// check | bless
    action: String,
    /// Case name or "all".
    #[arg(default_value = "all")]
    name: String,
    /// Directory holding the golden files.
    #[arg(long, default_value = "golden/v1")]
    dir: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Series(args) => series(args),
        Command::Golden(args) => golden_cmd(args),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let instances: Vec<IdentityInstance> = if let Some(path) = &args.manifest {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("cannot read manifest {path:?}: {e}");
                return ExitCode::from(2);
            }
        };
        match qverify::runner::parse_manifest(&text) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
        }
    } else if args.id == "all" {
        catalog::default_catalog()
    } else {
        let mut base = catalog::defaults_for(&args.id);
        if base.is_empty() {
            if catalog::REQUIRED_IDS.contains(&args.id.as_str()) {
                base.push(IdentityInstance::new(&args.id, args.order.unwrap_or(20)));
            } else {
                eprintln!("unknown identity id {:?}", args.id);
                return ExitCode::from(2);
            }
        }
        // Single-id mode: start from the first default and apply overrides.
        let mut inst = base.remove(0);
        if let Some(t) = args.t {
            inst.t = Some(t);
        }
        if let Some(m) = args.m {
            inst.m = Some(m);
        }
        if let Some(p) = args.p {
            inst.p = Some(p);
        }
        if let Some(l) = args.l {
            inst.l = Some(l);
        }
        if let Some(k) = args.k {
            inst.k = Some(k);
        }
        if let Some(i) = args.i {
            inst.i = Some(i);
        }
        if let Some(ip) = args.ip {
            inst.ip = Some(ip);
        }
        if let Some(order) = args.order {
            inst.order = order;
        }
        if let Some(mode) = &args.mode {
            inst.mode = match mode.as_str() {
                "bivariate" => Mode::Bivariate,
                "specialized" => Mode::Specialized,
                other => {
                    eprintln!("unknown mode {other:?} (expected bivariate|specialized)");
                    return ExitCode::from(2);
                }
            };
        }
        if let Some(point) = &args.x_point {
            let parts: Vec<&str> = point.split(',').collect();
            if parts.len() != 2 {
                eprintln!("--x-point must be SIGMA,J");
                return ExitCode::from(2);
            }
            inst.sigma = match parts[0] {
                "1" | "+1" | "+" => Some(1),
                "-1" | "-" => Some(-1),
                _ => {
                    eprintln!("--x-point sign must be +1 or -1");
                    return ExitCode::from(2);
                }
            };
            inst.j = parts[1].parse().ok();
            inst.mode = Mode::Specialized;
        }
        if let Some(qsub) = args.qsub {
            inst.qsub = Some(qsub);
        }
        inst.debug_perturb = args.debug_perturb;
        vec![inst]
    };

    let summary = qverify::run_all(&instances, args.jobs);
    for report in &summary.reports {
        println!("{}", report.one_line());
    }
    println!(
        "{} checks: {} passed, {} failed, {} errors",
        summary.total, summary.passed, summary.failed, summary.errors
    );
    if let Some(path) = &args.json {
        match serde_json::to_string_pretty(&summary) {
            Ok(text) => {
                if let Err(e) = fs::write(path, text) {
                    eprintln!("cannot write {path:?}: {e}");
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("cannot serialize summary: {e}");
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::from(summary.exit_code() as u8)
}

fn series(args: SeriesArgs) -> ExitCode {
    let mut params = SeriesParams {
        t: args.t,
        m: args.m,
        p: args.p,
        b: args.b,
        n: args.n,
        k: args.k,
        i: args.i,
        ip: args.ip,
        len: args.len,
        a: args.a,
        bb: args.bb,
        c: args.c,
        h: args.h,
        poch_n: args.poch_n.clone(),
        form: args.form.clone(),
        neg: args.neg,
        ..Default::default()
    };
    macro_rules! parse_mono {
        ($field:ident, $src:expr) => {
            if let Some(text) = $src {
                match seriescmd::parse_monomial(text) {
                    Ok(m) => params.$field = Some(m),
                    Err(e) => {
                        eprintln!("{e}");
                        return ExitCode::from(2);
                    }
                }
            }
        };
    }
    parse_mono!(x, &args.x);
    parse_mono!(y, &args.y);
    parse_mono!(arg, &args.arg);
    if let Some(text) = &args.base {
        match seriescmd::parse_qexp(text) {
            Ok(e) => params.base = Some(e),
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
        }
    }
    let scale = ExpScale::new(args.scale);
    match seriescmd::build_series(&args.name, &params, scale, args.order) {
        Ok(s) => {
            if args.format == "json" {
                println!("{}", seriescmd::series_json(&s));
            } else {
                print!("{}", s.print_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn golden_cmd(args: GoldenArgs) -> ExitCode {
    let cases = golden::registry();
    let selected: Vec<_> = cases
        .iter()
        .filter(|c| args.name == "all" || c.name == args.name)
        .collect();
    if selected.is_empty() {
        eprintln!("no golden case named {:?}", args.name);
        return ExitCode::from(2);
    }
    match args.action.as_str() {
        "bless" => {
            for case in selected {
                match golden::bless(&args.dir, case) {
                    Ok(path) => println!("blessed {}", path.display()),
                    Err(e) => {
                        eprintln!("{e}");
                        return ExitCode::from(2);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        "check" => {
            let mut failed = false;
            let mut errored = false;
            for case in selected {
                match golden::check(&args.dir, case) {
                    Ok(GoldenOutcome::Pass) => println!("PASS  {}", case.name),
                    Ok(GoldenOutcome::Fail {
                        line,
                        expected,
                        actual,
                    }) => {
                        println!(
                            "FAIL  {} at line {line}: stored {expected:?}, regenerated {actual:?}",
                            case.name
                        );
                        failed = true;
                    }
                    Ok(GoldenOutcome::MissingFile(path)) => {
                        println!(
                            "ERROR {}: missing golden file {}",
                            case.name,
                            path.display()
                        );
                        errored = true;
                    }
                    Err(e) => {
                        println!("ERROR {}: {e}", case.name);
                        errored = true;
                    }
                }
            }
            if errored {
                ExitCode::from(2)
            } else if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        other => {
            eprintln!("unknown golden action {other:?} (expected check|bless)");
            ExitCode::from(2)
        }
    }
}
