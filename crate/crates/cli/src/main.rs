//! Batch front end: parses function models and differential polynomials,
//! runs the computations and verification suites, and writes deterministic
//! CSV/JSON/plot-data artifacts.
//!
//! Exit codes: 0 on success, 1 when any inequality check reports a
//! violation (or a slope analysis misses its target), 2 on usage errors and
//! computation failures.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use nevanlinna::bounds::{
    clunie_certificate, mohonko_certificate, optimize_kappa, BoundCertificate, CertificateMode,
    CoeffProximityMode,
};
use nevanlinna::charfn::{characteristic, counting, proximity};
use nevanlinna::diffpoly::validate_clunie_split;
use nevanlinna::difftext::parse_diffpoly;
use nevanlinna::modeltext::parse_model;
use nevanlinna::quad::QuadratureConfig;
use nevanlinna::report::{
    certificates_json, characteristic_csv, check_report_csv, check_report_dat,
    check_report_json, check_reports_json, kappa_json, painleve_json, sharpness_csv,
};
use nevanlinna::util::{format_sig, parse_grid_spec};
use nevanlinna::verify::{
    check_gg, check_lemma_b, check_lemma_c, check_theorem_c, gg_suite, lemma_b_suite,
    lemma_c_suite, painleve_case, riccati_case, sharpness_experiment, theorem_c_suite,
    CorpusEntry, PainleveEquation,
};
use nevanlinna::{AngleSet, CheckReport};

#[derive(Parser)]
#[command(
    name = "nevanlinna",
    version,
    about = "Nevanlinna characteristic functions, logarithmic-derivative bounds, and differential-polynomial certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate m(r), N(r), T(r) for a model over a radius grid
    Characteristic(CharacteristicArgs),
    /// Run an inequality suite and report margins and violations
    #[command(subcommand)]
    Check(CheckCommand),
    /// Emit itemized bound certificates over a radius grid
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Asymptotic log-r slope analyses for the worked ODE cases
    #[command(subcommand)]
    Slope(SlopeCommand),
    /// Minimize the kappa objective over the open unit square
    OptimizeKappa(KappaArgs),
    /// Run the exp(z^n) sharpness experiment
    Sharpness(SharpnessArgs),
    /// Run the deterministic casebook and write all its artifacts
    Casebook(CasebookArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Radius grid as a:b:n or a:b:n:log
    #[arg(long = "r-grid", value_name = "SPEC", default_value = "5:500:40:log")]
    r_grid: String,
    /// Comparison radius factor c, used as rho = c*r
    #[arg(long = "rho-factor", value_name = "C", default_value_t = 2.0)]
    rho_factor: f64,
}

#[derive(Args)]
struct OutArgs {
    /// Directory for CSV/JSON/plot-data artifacts (created if missing)
    #[arg(long = "out", value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharacteristicArgs {
    /// Function model, e.g. "(z^2+1)/(z-2)", "exp(z^3)", "tan(0.5*z+1)"
    #[arg(long = "model", value_name = "TEXT")]
    model: String,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// m(r, f'/f) against its bound, for models with f(0) = 1
    Gg(CheckArgs),
    /// m(r, f^(k)/f^(j)) against the higher-order derivative bound
    TheoremC(CheckArgs),
    /// The mean-of-log bound on angle sets
    LemmaB(CheckArgs),
    /// The alpha-mean integral bound (log-scale comparison)
    LemmaC(CheckArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Check a single model instead of the seeded corpus
    #[arg(long = "model", value_name = "TEXT")]
    model: Option<String>,
    /// Corpus seed
    #[arg(long = "seed", default_value_t = 42)]
    seed: u64,
    /// Derivative order k (theorem-c, lemma-c)
    #[arg(long = "k", default_value_t = 1)]
    k: u32,
    /// Derivative order j (theorem-c, lemma-c)
    #[arg(long = "j", default_value_t = 0)]
    j: u32,
    /// Exponent alpha (lemma-b, lemma-c)
    #[arg(long = "alpha", default_value_t = 0.5)]
    alpha: f64,
    /// Parameter beta (lemma-c)
    #[arg(long = "beta", default_value_t = 0.5)]
    beta: f64,
    /// Slack epsilon added to the constant (lemma-c)
    #[arg(long = "epsilon", default_value_t = 1e-9)]
    epsilon: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Certificate for m(r, P) from a product split f^n * P = Q
    Clunie(ClunieArgs),
    /// Certificate for m(r, 1/f) from a defining equation P(z, f) = 0
    Mohonko(MohonkoArgs),
}

#[derive(Args)]
struct ClunieArgs {
    /// The factor polynomial P of the split f^n * P = Q
    #[arg(long = "equation-p", value_name = "TEXT")]
    equation_p: String,
    /// The right-hand side Q, every term of total degree at most n
    #[arg(long = "equation-q", value_name = "TEXT")]
    equation_q: String,
    /// The power n in f^n * P = Q
    #[arg(long = "n-power", value_name = "N")]
    n_power: u32,
    /// Model whose characteristic T(rho) feeds the certificate
    #[arg(long = "model", value_name = "TEXT")]
    model: String,
    /// Charging mode: per-term sums (erratum) or maxima (legacy)
    #[arg(long = "mode", default_value = "erratum")]
    mode: String,
    /// Named constant binding, repeatable: --const name=value
    #[arg(long = "const", value_name = "NAME=VALUE")]
    constants: Vec<String>,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct MohonkoArgs {
    /// The differential polynomial P(z, w) the model satisfies
    #[arg(long = "equation", value_name = "TEXT")]
    equation: String,
    /// Model whose characteristic T(rho) feeds the certificate
    #[arg(long = "model", value_name = "TEXT")]
    model: String,
    /// Charging mode: per-term sums (erratum) or maxima (legacy)
    #[arg(long = "mode", default_value = "erratum")]
    mode: String,
    /// Named constant binding, repeatable: --const name=value
    #[arg(long = "const", value_name = "NAME=VALUE")]
    constants: Vec<String>,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Subcommand)]
enum SlopeCommand {
    /// w'' = 6w^2 + z: published slope 4 log r
    #[command(name = "painleve-I", alias = "painleve-i")]
    PainleveI(SlopeOutArgs),
    /// w'' = 2w^3 + zw + alpha: published slope 5 log r
    #[command(name = "painleve-II", alias = "painleve-ii")]
    PainleveII(SlopeOutArgs),
    /// ww'' = (1/2)(w')^2 + (3/2)w^4 + 4zw^3 + 2(z^2-beta)w^2 + gamma: slope 15 log r
    #[command(name = "painleve-IV", alias = "painleve-iv")]
    PainleveIV(SlopeOutArgs),
    /// tan's equation w' = w^2 + 1: m(r, tan) and m(r, 1/tan) stay bounded
    Riccati(RiccatiArgs),
}

#[derive(Args)]
struct SlopeOutArgs {
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct RiccatiArgs {
    /// Radius grid as a:b:n or a:b:n:log
    #[arg(long = "r-grid", value_name = "SPEC", default_value = "5:50:40")]
    r_grid: String,
    /// Comparison radius factor c, used as rho = c*r
    #[arg(long = "rho-factor", value_name = "C", default_value_t = 2.0)]
    rho_factor: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct KappaArgs {
    /// Slack epsilon in the objective
    #[arg(long = "epsilon", default_value_t = 1e-9)]
    epsilon: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SharpnessArgs {
    /// Comma-separated exponents n (each at least 2)
    #[arg(long = "n", value_name = "LIST", default_value = "8,16,32,64")]
    n_list: String,
    /// Comma-separated radii
    #[arg(long = "r", value_name = "LIST", default_value = "100")]
    r_list: String,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct CasebookArgs {
    /// Seed echoed into the artifacts (the casebook itself is deterministic)
    #[arg(long = "seed", default_value_t = 42)]
    seed: u64,
    /// Directory for the casebook artifacts
    #[arg(long = "out", value_name = "DIR")]
    out: PathBuf,
}

/// Anything that stops a run before results exist: bad flags, unparseable
/// inputs, or a computation error. All map to exit code 2.
#[derive(Debug)]
struct RunError(String);

impl<E: std::fmt::Display> From<E> for RunError {
    fn from(e: E) -> Self {
        RunError(e.to_string())
    }
}

type RunResult = Result<u8, RunError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Characteristic(args) => run_characteristic(args),
        Command::Check(cmd) => run_check(cmd),
        Command::Bound(cmd) => run_bound(cmd),
        Command::Slope(cmd) => run_slope(cmd),
        Command::OptimizeKappa(args) => run_kappa(args),
        Command::Sharpness(args) => run_sharpness(args),
        Command::Casebook(args) => run_casebook(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(RunError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

fn grid_from(args: &GridArgs) -> Result<Vec<f64>, RunError> {
    parse_grid_spec(&args.r_grid).map_err(|e| RunError(format!("--r-grid: {e}")))
}

fn mode_from(text: &str) -> Result<CertificateMode, RunError> {
    match text {
        "erratum" => Ok(CertificateMode::Erratum),
        "legacy" => Ok(CertificateMode::Legacy),
        other => Err(RunError(format!(
            "--mode must be 'erratum' or 'legacy', got '{other}'"
        ))),
    }
}

fn constants_from(pairs: &[String]) -> Result<HashMap<String, Complex64>, RunError> {
    let mut map = HashMap::new();
    for pair in pairs {
        let (name, value) = pair.split_once('=').ok_or_else(|| {
            RunError(format!("--const expects name=value, got '{pair}'"))
        })?;
        let v: f64 = value
            .parse()
            .map_err(|_| RunError(format!("--const {name}: '{value}' is not a number")))?;
        map.insert(name.to_string(), Complex64::new(v, 0.0));
    }
    Ok(map)
}

fn ensure_dir(dir: &Path) -> Result<(), RunError> {
    fs::create_dir_all(dir).map_err(|e| RunError(format!("cannot create {}: {e}", dir.display())))
}

fn write_artifact(dir: &Path, name: &str, content: &str) -> Result<(), RunError> {
    let path = dir.join(name);
    fs::write(&path, content).map_err(|e| RunError(format!("cannot write {}: {e}", path.display())))
}

/// Stable slug for report filenames.
fn slug(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    let mut last_dash = false;
    for c in name.chars() {
        if c.is_ascii_alphanumeric() || c == '.' {
            out.push(c.to_ascii_lowercase());
            last_dash = false;
        } else if !last_dash {
            out.push('-');
            last_dash = true;
        }
    }
    out.trim_matches('-').to_string()
}

fn write_report_files(dir: &Path, report: &CheckReport) -> Result<(), RunError> {
    let base = slug(&report.name);
    write_artifact(dir, &format!("{base}.csv"), &check_report_csv(report))?;
    write_artifact(dir, &format!("{base}.json"), &check_report_json(report))?;
    write_artifact(dir, &format!("{base}.dat"), &check_report_dat(report))?;
    Ok(())
}

fn print_report_line(report: &CheckReport) {
    let status = if report.holds() {
        "ok".to_string()
    } else {
        format!("VIOLATED at {} radii", report.violations.len())
    };
    let slope = match report.slope_fit {
        Some(s) => format!(", slope {}", format_sig(s)),
        None => String::new(),
    };
    println!(
        "{}: {status} (min margin {}{slope})",
        report.name,
        format_sig(report.min_margin)
    );
}

/// The exit-code half of the contract: 0 when every report holds, 1 when any
/// report records a violation.
fn exit_for_reports(reports: &[CheckReport]) -> u8 {
    if reports.iter().all(|r| r.holds()) {
        0
    } else {
        1
    }
}

fn emit_reports(reports: &[CheckReport], out: &OutArgs, summary_name: &str) -> RunResult {
    for report in reports {
        print_report_line(report);
    }
    if let Some(dir) = &out.out {
        ensure_dir(dir)?;
        for report in reports {
            write_report_files(dir, report)?;
        }
        write_artifact(dir, summary_name, &check_reports_json(reports))?;
    }
    Ok(exit_for_reports(reports))
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn run_characteristic(args: CharacteristicArgs) -> RunResult {
    let model = parse_model(&args.model)?;
    let grid = grid_from(&args.grid)?;
    let cfg = QuadratureConfig::default();
    let mut rows = Vec::new();
    println!("r, m(r), N(r), T(r), quad_error");
    for &r in &grid {
        let m = proximity(&model, r, &cfg)?;
        let n = counting(&model, r)?;
        let t = characteristic(&model, r, &cfg)?;
        println!(
            "{}, {}, {}, {}, {}",
            format_sig(r),
            format_sig(m.value),
            format_sig(n.value),
            format_sig(t.value),
            format_sig(t.quadrature_error)
        );
        rows.push((r, m.value, n.value, t.value, t.quadrature_error));
    }
    if let Some(dir) = &args.out.out {
        ensure_dir(dir)?;
        write_artifact(dir, "characteristic.csv", &characteristic_csv(&rows))?;
    }
    Ok(0)
}

fn run_check(cmd: CheckCommand) -> RunResult {
    let cfg = QuadratureConfig::default();
    match cmd {
        CheckCommand::Gg(args) => {
            let grid = grid_from(&args.grid)?;
            let reports = match &args.model {
                Some(text) => {
                    let model = parse_model(text)?;
                    let member = CorpusEntry { name: "model".to_string(), model };
                    check_gg(&[member], &grid, args.grid.rho_factor, &cfg)?
                }
                None => gg_suite(args.seed, &grid, args.grid.rho_factor, &cfg)?,
            };
            emit_reports(&reports, &args.out, "gg-summary.json")
        }
        CheckCommand::TheoremC(args) => {
            let grid = grid_from(&args.grid)?;
            let reports = match &args.model {
                Some(text) => {
                    let model = parse_model(text)?;
                    vec![check_theorem_c(
                        &model,
                        args.k,
                        args.j,
                        &grid,
                        args.grid.rho_factor,
                        &cfg,
                    )?]
                }
                None => theorem_c_suite(args.seed, &grid, args.grid.rho_factor, &cfg)?,
            };
            emit_reports(&reports, &args.out, "theorem-c-summary.json")
        }
        CheckCommand::LemmaB(args) => {
            let grid = grid_from(&args.grid)?;
            let reports = match &args.model {
                Some(text) => {
                    let model = parse_model(text)?;
                    vec![check_lemma_b(
                        &model,
                        &AngleSet::full_circle(),
                        args.alpha,
                        &grid,
                        &cfg,
                    )?]
                }
                None => lemma_b_suite(args.seed, &grid, &cfg)?,
            };
            emit_reports(&reports, &args.out, "lemma-b-summary.json")
        }
        CheckCommand::LemmaC(args) => {
            let grid = grid_from(&args.grid)?;
            let reports = match &args.model {
                Some(text) => {
                    let model = parse_model(text)?;
                    vec![check_lemma_c(
                        &model,
                        args.k,
                        args.j,
                        args.alpha,
                        args.beta,
                        args.epsilon,
                        &grid,
                        args.grid.rho_factor,
                        &cfg,
                    )?]
                }
                None => lemma_c_suite(args.seed, &grid, args.grid.rho_factor, &cfg)?,
            };
            emit_reports(&reports, &args.out, "lemma-c-summary.json")
        }
    }
}

fn certificate_table(certs: &[BoundCertificate]) {
    println!("r, rho, T(rho), total");
    for cert in certs {
        println!(
            "{}, {}, {}, {}",
            format_sig(cert.r),
            format_sig(cert.rho),
            format_sig(cert.t_rho),
            format_sig(cert.total)
        );
    }
}

fn run_bound(cmd: BoundCommand) -> RunResult {
    let cfg = QuadratureConfig::default();
    match cmd {
        BoundCommand::Clunie(args) => {
            let constants = constants_from(&args.constants)?;
            let mode = mode_from(&args.mode)?;
            let p = parse_diffpoly(&args.equation_p, &constants)?;
            let q = parse_diffpoly(&args.equation_q, &constants)?;
            let form = validate_clunie_split(args.n_power, p, q)?;
            let model = parse_model(&args.model)?;
            let grid = grid_from(&args.grid)?;
            let mut certs = Vec::new();
            for &r in &grid {
                let rho = args.grid.rho_factor * r;
                let t = characteristic(&model, rho, &cfg)?;
                certs.push(clunie_certificate(
                    &form,
                    r,
                    rho,
                    t.value,
                    mode,
                    &CoeffProximityMode::ClosedForm,
                )?);
            }
            certificate_table(&certs);
            if let Some(dir) = &args.out.out {
                ensure_dir(dir)?;
                write_artifact(dir, "clunie-certificates.json", &certificates_json(&certs))?;
            }
            Ok(0)
        }
        BoundCommand::Mohonko(args) => {
            let constants = constants_from(&args.constants)?;
            let mode = mode_from(&args.mode)?;
            let p = parse_diffpoly(&args.equation, &constants)?;
            let model = parse_model(&args.model)?;
            let grid = grid_from(&args.grid)?;
            let mut certs = Vec::new();
            for &r in &grid {
                let rho = args.grid.rho_factor * r;
                let t = characteristic(&model, rho, &cfg)?;
                certs.push(mohonko_certificate(
                    &p,
                    r,
                    rho,
                    t.value,
                    mode,
                    &CoeffProximityMode::ClosedForm,
                )?);
            }
            certificate_table(&certs);
            if let Some(dir) = &args.out.out {
                ensure_dir(dir)?;
                write_artifact(dir, "mohonko-certificates.json", &certificates_json(&certs))?;
            }
            Ok(0)
        }
    }
}

fn run_painleve(which: PainleveEquation, out: &OutArgs) -> RunResult {
    let report = painleve_case(which)?;
    let text = painleve_json(&report);
    println!("{text}");
    if let Some(dir) = &out.out {
        ensure_dir(dir)?;
        write_artifact(dir, &format!("{}.json", report.name), &text)?;
    }
    Ok(if report.matches { 0 } else { 1 })
}

const RICCATI_SLOPE_LIMIT: f64 = 0.05;

fn run_slope(cmd: SlopeCommand) -> RunResult {
    match cmd {
        SlopeCommand::PainleveI(args) => run_painleve(PainleveEquation::I, &args.out),
        SlopeCommand::PainleveII(args) => run_painleve(PainleveEquation::II, &args.out),
        SlopeCommand::PainleveIV(args) => run_painleve(PainleveEquation::IV, &args.out),
        SlopeCommand::Riccati(args) => {
            let grid = parse_grid_spec(&args.r_grid).map_err(|e| RunError(format!("--r-grid: {e}")))?;
            let cfg = QuadratureConfig::default();
            let (tan_report, cot_report) = riccati_case(&grid, args.rho_factor, &cfg)?;
            let reports = vec![tan_report, cot_report];
            let mut code = emit_reports(&reports, &args.out, "riccati-summary.json")?;
            for report in &reports {
                if report.slope_fit.map(|s| s.abs() > RICCATI_SLOPE_LIMIT).unwrap_or(true) {
                    println!("{}: slope exceeds {RICCATI_SLOPE_LIMIT}", report.name);
                    code = 1;
                }
            }
            Ok(code)
        }
    }
}

fn run_kappa(args: KappaArgs) -> RunResult {
    let result = optimize_kappa(args.epsilon)?;
    let text = kappa_json(&result);
    println!("{text}");
    if let Some(dir) = &args.out.out {
        ensure_dir(dir)?;
        write_artifact(dir, "kappa.json", &text)?;
    }
    Ok(0)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, RunError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| RunError(format!("--{what}: '{part}' is not valid")))
        })
        .collect()
}

fn run_sharpness(args: SharpnessArgs) -> RunResult {
    let n_list: Vec<u32> = parse_list(&args.n_list, "n")?;
    let r_list: Vec<f64> = parse_list(&args.r_list, "r")?;
    let cfg = QuadratureConfig::default();
    let rows = sharpness_experiment(&n_list, &r_list, &cfg)?;
    println!("n, r, lhs, main term, gap, target");
    for row in &rows {
        println!(
            "{}, {}, {}, {}, {}, {}",
            row.n,
            format_sig(row.r),
            format_sig(row.lhs),
            format_sig(row.main_term),
            format_sig(row.gap),
            format_sig(row.target)
        );
    }
    if let Some(dir) = &args.out.out {
        ensure_dir(dir)?;
        write_artifact(dir, "sharpness.csv", &sharpness_csv(&rows))?;
    }
    Ok(0)
}

fn run_casebook(args: CasebookArgs) -> RunResult {
    let dir = &args.out;
    ensure_dir(dir)?;
    let cfg = QuadratureConfig::default();

    let kappa = optimize_kappa(1e-9)?;
    write_artifact(dir, "kappa.json", &kappa_json(&kappa))?;
    println!("kappa objective: {}", format_sig(kappa.objective));

    let rows = sharpness_experiment(&[8, 16, 32, 64], &[100.0], &cfg)?;
    write_artifact(dir, "sharpness.csv", &sharpness_csv(&rows))?;
    println!("sharpness gaps: {}", rows.iter().map(|r| format_sig(r.gap)).collect::<Vec<_>>().join(", "));

    let grid = parse_grid_spec("5:50:40").map_err(RunError)?;
    let (tan_report, cot_report) = riccati_case(&grid, 2.0, &cfg)?;
    let riccati_reports = vec![tan_report, cot_report];
    for report in &riccati_reports {
        print_report_line(report);
        write_report_files(dir, report)?;
    }
    write_artifact(dir, "riccati-summary.json", &check_reports_json(&riccati_reports))?;

    let mut painleve_texts = Vec::new();
    for which in [PainleveEquation::I, PainleveEquation::II, PainleveEquation::IV] {
        let report = painleve_case(which)?;
        println!(
            "{}: slope {} (target {})",
            report.name,
            format_sig(report.erratum.slope),
            format_sig(report.target)
        );
        let text = painleve_json(&report);
        write_artifact(dir, &format!("{}.json", report.name), &text)?;
        painleve_texts.push((report.matches, text));
    }

    let all_hold = riccati_reports.iter().all(|r| r.holds())
        && riccati_reports
            .iter()
            .all(|r| r.slope_fit.map(|s| s.abs() <= RICCATI_SLOPE_LIMIT).unwrap_or(false))
        && painleve_texts.iter().all(|(m, _)| *m);
    let summary = format!(
        "{{\"seed\": {}, \"kappa_objective\": {}, \"riccati_holds\": {}, \"painleve_matches\": {}, \"all_hold\": {}}}",
        args.seed,
        format_sig(kappa.objective),
        riccati_reports.iter().all(|r| r.holds()),
        painleve_texts.iter().all(|(m, _)| *m),
        all_hold,
    );
    write_artifact(dir, "casebook.json", &summary)?;
    println!("casebook artifacts written to {}", dir.display());
    Ok(if all_hold { 0 } else { 1 })
}
