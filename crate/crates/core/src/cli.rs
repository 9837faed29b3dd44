//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal verification failure, 2 user error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arrangement::{normalize, NormalizedArrangement};
use crate::error::Error;
use crate::input::{read_arrangement, InputFormat};
use crate::lattice::{build_lattice, Flat};
use crate::oracle::{self, MAX_BRUTEFORCE_FLATS, MAX_BRUTEFORCE_HYPERPLANES};
use crate::parser::to_factored_text;
use crate::rational::{self, Rational};
use crate::rlct::{rlct_affine, rlct_from_lattice, rlct_line_arrangement_2d, LocalizationReport, RlctPair, RlctResult};
use crate::volume::{self, AsymptoticFit, SamplingBox, VolumeSample};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hyperrlct", version, about = "Real log canonical thresholds of hyperplane arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute (λ, m); affine inputs go through localization.
    Compute(ComputeArgs),
    /// Report every maximal central localization with its local pair.
    Localize(ComputeArgs),
    /// Monte Carlo volume asymptotics compared with the exact pair.
    VolumeFit(VolumeArgs),
    /// Normalize an arrangement and print it back.
    Parse(ParseArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Arrangement file (.json, .csv, or factored polynomial text).
    #[arg(long, conflicts_with = "poly")]
    pub input: Option<PathBuf>,
    /// Factored polynomial, e.g. "x*y^2*(x+y)".
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cross-check against the brute-force oracles.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = volume::DEFAULT_EPS_MIN)]
    pub eps_min: f64,
    #[arg(long, default_value_t = volume::DEFAULT_EPS_MAX)]
    pub eps_max: f64,
    #[arg(long, default_value_t = volume::DEFAULT_EPS_POINTS)]
    pub eps_points: usize,
    /// Samples per epsilon (one shared point set).
    #[arg(long, default_value_t = volume::DEFAULT_SAMPLES)]
    pub samples: u64,
    /// Sampling box "lo,hi;lo,hi;..."; defaults to [-1,1]^d.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub region: Option<String>,
    /// Also write a whitespace-separated data file for log-log plots.
    #[arg(long)]
    pub data_out: Option<PathBuf>,
    /// Fit noise-free model data instead of sampling.
    #[arg(long)]
    pub self_test: bool,
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let hint = match e {
            Error::InsufficientData(_) => " (try more --samples or a larger --eps-min)",
            _ => "",
        };
        Failure::Usage(format!("{e}{hint}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a, false, out, err),
        Command::Localize(a) => cmd_compute(a, true, out, err),
        Command::VolumeFit(a) => cmd_volume_fit(a, out),
        Command::Parse(a) => cmd_parse(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_VERIFY
        }
    }
}

fn load(input: &InputArgs) -> std::result::Result<NormalizedArrangement, Failure> {
    let spec = match (&input.input, &input.poly) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            read_arrangement(&text, InputFormat::detect(Some(path), &text))?
        }
        (None, Some(poly)) => read_arrangement(poly, InputFormat::Polynomial)?,
        _ => return Err(Failure::Usage("exactly one of --input or --poly is required".into())),
    };
    Ok(normalize(&spec)?)
}

#[derive(Serialize)]
struct Verification {
    lattice: &'static str,
    chain: &'static str,
    closed_form: &'static str,
}

fn verify_central(arr: &NormalizedArrangement, result: &RlctResult) -> std::result::Result<Verification, Failure> {
    let lattice = if arr.len() <= MAX_BRUTEFORCE_HYPERPLANES {
        let fast = build_lattice(arr)?;
        let brute = oracle::lattice_bruteforce(arr)?;
        if fast != brute {
            return Err(Failure::Verify(format!(
                "closure lattice has {} flats, brute force has {}",
                fast.len(),
                brute.len()
            )));
        }
        "ok"
    } else {
        "skipped"
    };
    let chain = if result.minimizer_flats.len() <= MAX_BRUTEFORCE_FLATS {
        let m = oracle::longest_chain_bruteforce(&result.minimizer_flats)?;
        if m != result.pair.m {
            return Err(Failure::Verify(format!("chain DP gives m = {}, exhaustive search gives {m}", result.pair.m)));
        }
        "ok"
    } else {
        "skipped"
    };
    let closed_form = if arr.dim() == 2 {
        let pair = rlct_line_arrangement_2d(arr.multiplicities())?;
        if pair != result.pair {
            return Err(Failure::Verify(format!("lattice gives {}, closed form gives {pair}", result.pair)));
        }
        "ok"
    } else {
        "not applicable"
    };
    Ok(Verification { lattice, chain, closed_form })
}

#[derive(Serialize)]
struct LocalEntry<'a> {
    #[serde(with = "rational::serde_vec")]
    point: &'a [Rational],
    members: &'a [usize],
    #[serde(flatten)]
    pair: &'a RlctPair,
    witness_chain: &'a [Flat],
}

#[derive(Serialize)]
struct ComputeDoc<'a> {
    central: bool,
    dimension: usize,
    hyperplanes: usize,
    #[serde(flatten)]
    pair: &'a RlctPair,
    minimizer_flats: &'a [Flat],
    witness_chain: &'a [Flat],
    #[serde(skip_serializing_if = "Option::is_none")]
    localizations: Option<Vec<LocalEntry<'a>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    verification: Vec<Verification>,
}

fn local_entries(report: &LocalizationReport) -> Vec<LocalEntry<'_>> {
    report
        .localizations
        .iter()
        .map(|l| LocalEntry {
            point: &l.localization.point,
            members: &l.localization.members,
            pair: &l.result.pair,
            witness_chain: &l.result.witness_chain,
        })
        .collect()
}

fn cmd_compute(args: &ComputeArgs, force_localize: bool, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let arr = load(&args.input)?;
    let mut verification = Vec::new();

    let report;
    let central_result;
    let (result, localizations) = if arr.is_central() && !force_localize {
        let lattice = build_lattice(&arr)?;
        central_result = rlct_from_lattice(&lattice);
        (&central_result, None)
    } else {
        report = rlct_affine(&arr)?;
        (report.global_result(), Some(&report))
    };

    if args.verify {
        match localizations {
            None => verification.push(verify_central(&arr, result)?),
            Some(rep) => {
                for l in &rep.localizations {
                    verification.push(verify_central(&l.localization.arrangement, &l.result)?);
                }
            }
        }
        if verification.iter().any(|v| v.lattice == "skipped" || v.chain == "skipped") {
            writeln!(err, "note: some oracle checks skipped (input too large for brute force)")?;
        }
    }

    match args.format {
        Format::Json => {
            let doc = ComputeDoc {
                central: arr.is_central(),
                dimension: arr.dim(),
                hyperplanes: arr.len(),
                pair: &result.pair,
                minimizer_flats: &result.minimizer_flats,
                witness_chain: &result.witness_chain,
                localizations: localizations.map(local_entries),
                verification,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => match localizations.filter(|_| force_localize) {
            Some(rep) => {
                writeln!(out, "point,members,lambda,m")?;
                for l in &rep.localizations {
                    let point: Vec<String> = l.localization.point.iter().map(rational::format).collect();
                    let members: Vec<String> = l.localization.members.iter().map(usize::to_string).collect();
                    writeln!(out, "{},{},{},{}", point.join(";"), members.join(";"), l.result.pair.lambda, l.result.pair.m)?;
                }
            }
            None => {
                writeln!(out, "lambda,m")?;
                writeln!(out, "{},{}", result.pair.lambda, result.pair.m)?;
            }
        },
        Format::Human => {
            writeln!(out, "arrangement: {}", to_factored_text(&arr))?;
            writeln!(out, "rlct = {}", result.pair)?;
            writeln!(out, "minimizing flats: {}", result.minimizer_flats.len())?;
            writeln!(out, "witness chain:")?;
            for f in &result.witness_chain {
                writeln!(out, "  codim {} s {} normals {}", f.codim, f.s, f.normal_space)?;
            }
            if let Some(rep) = localizations {
                writeln!(out, "localizations:")?;
                for l in &rep.localizations {
                    let point: Vec<String> = l.localization.point.iter().map(rational::format).collect();
                    writeln!(out, "  at ({}): rlct = {}", point.join(", "), l.result.pair)?;
                }
            }
            if !verification.is_empty() {
                writeln!(out, "verified against brute-force oracles")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VolumeDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<&'a RlctPair>,
    self_test: bool,
    #[serde(rename = "box", skip_serializing_if = "Option::is_none")]
    region: Option<&'a SamplingBox>,
    seed: u64,
    samples: &'a [VolumeSample],
    fit: &'a AsymptoticFit,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit_lambda_given_m: Option<AsymptoticFit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit_m_given_lambda: Option<AsymptoticFit>,
}

const SELF_TEST_TOLERANCE: f64 = 1e-6;

fn cmd_volume_fit(args: &VolumeArgs, out: &mut dyn Write) -> CliResult {
    if !(args.eps_max < 1.0) {
        return Err(Failure::Usage("--eps-max must be below 1".into()));
    }
    let grid = volume::geometric_grid(args.eps_min, args.eps_max, args.eps_points)?;
    let has_input = args.input.input.is_some() || args.input.poly.is_some();

    let (exact, region, samples) = if args.self_test {
        let exact = if has_input {
            rlct_affine(&load(&args.input)?)?.global_pair
        } else {
            RlctPair::new(rational::ratio(1, 2), 3)
        };
        let data = volume::synthetic_samples(rational::to_f64(&exact.lambda), exact.m as f64, 1.0, &grid);
        (exact, None, data)
    } else {
        let arr = load(&args.input)?;
        let exact = rlct_affine(&arr)?.global_pair;
        let region = match &args.region {
            Some(text) => SamplingBox::parse(text)?,
            None => SamplingBox::symmetric_unit(arr.dim()),
        };
        let data = volume::estimate_volume_grid(&arr, &region, &grid, args.samples, args.seed)?;
        (exact, Some(region), data)
    };

    let fit = volume::fit_asymptotics(&samples)?;
    let by_lambda = volume::fit_lambda_given_m(&samples, exact.m as f64)?;
    let by_m = volume::fit_m_given_lambda(&samples, rational::to_f64(&exact.lambda))?;

    if let Some(path) = &args.data_out {
        let mut f = std::fs::File::create(path)?;
        writeln!(f, "# epsilon volume std_error")?;
        for s in &samples {
            writeln!(f, "{:e} {:e} {:e}", s.epsilon, s.volume_estimate, s.std_error)?;
        }
    }

    match args.format {
        Format::Json => {
            let doc = VolumeDoc {
                exact: Some(&exact),
                self_test: args.self_test,
                region: region.as_ref(),
                seed: args.seed,
                samples: &samples,
                fit: &fit,
                fit_lambda_given_m: Some(by_lambda),
                fit_m_given_lambda: Some(by_m),
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "epsilon,volume,std_error")?;
            for s in &samples {
                writeln!(out, "{:e},{:e},{:e}", s.epsilon, s.volume_estimate, s.std_error)?;
            }
        }
        Format::Human => {
            writeln!(out, "exact rlct = {} (lambda ~ {:.6})", exact, rational::to_f64(&exact.lambda))?;
            writeln!(out, "{:>12} {:>14} {:>12}", "epsilon", "volume", "std_error")?;
            for s in &samples {
                writeln!(out, "{:>12.4e} {:>14.6e} {:>12.4e}", s.epsilon, s.volume_estimate, s.std_error)?;
            }
            writeln!(out, "free fit:        lambda = {:.4}, m = {:.4}", fit.lambda_hat, fit.m_hat)?;
            writeln!(out, "m fixed at {}:    lambda = {:.4}", exact.m, by_lambda.lambda_hat)?;
            writeln!(out, "lambda fixed:    m = {:.4}", by_m.m_hat)?;
        }
    }

    if args.self_test {
        let lambda = rational::to_f64(&exact.lambda);
        let ok = (fit.lambda_hat - lambda).abs() <= SELF_TEST_TOLERANCE
            && (fit.m_hat - exact.m as f64).abs() <= SELF_TEST_TOLERANCE;
        if !ok {
            return Err(Failure::Verify(format!(
                "synthetic fit recovered ({}, {}) instead of {exact}",
                fit.lambda_hat, fit.m_hat
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ParseDoc<'a> {
    #[serde(flatten)]
    arrangement: &'a NormalizedArrangement,
    polynomial: String,
}

fn cmd_parse(args: &ParseArgs, out: &mut dyn Write) -> CliResult {
    let arr = load(&args.input)?;
    match args.format {
        Format::Json => {
            let doc = ParseDoc { arrangement: &arr, polynomial: to_factored_text(&arr) };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let names = arr.variable_names();
            writeln!(out, "{},mult,offset", names.join(","))?;
            for i in 0..arr.len() {
                let row: Vec<String> = arr.normal(i).iter().map(rational::format).collect();
                writeln!(out, "{},{},{}", row.join(","), arr.multiplicities()[i], arr.offsets()[i])?;
            }
        }
        Format::Human => writeln!(out, "{}", to_factored_text(&arr))?,
    }
    Ok(())
}
