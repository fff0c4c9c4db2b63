//! Command-line front door: simulate → check → report → plot, plus the
//! exact-rational ideal-order demonstration.
//!
//! Exit codes: 0 = ran and produced verdicts (expected axiom failures
//! included), 1 = internal error, 2 = usage or input error, 3 = axiom
//! failure under `--strict-dlo`.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordinal_gate::dataset::{read_dataset, write_dataset};
use ordinal_gate::dlo::{check_all, check_numeric, render_matrix, AxiomVerdict, Witness};
use ordinal_gate::ideal::{
    above_witness, below_witness, bisect_chain, density_witness, parse_rational,
    quantized_projection, sample_probes, verify_ideal_axioms, OpenInterval, Rational,
};
use ordinal_gate::plot::{aggregate_scores, emit_plot, figure_bundle, PlotError, FIGURE_LABEL};
use ordinal_gate::simulate::{run_simulation, SampleSet, SimulationConfig};
use ordinal_gate::stats::{composite_score, specs_from_summaries, summarize};

#[derive(Parser)]
#[command(name = "ordinal-gate", version, about = "Seeded Likert simulation and dense-order axiom checking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the seeded Likert dataset and write it as CSV.
    Simulate(SimulateArgs),
    /// Verify the six dense-order axioms per theme, with witnesses.
    Check(CheckArgs),
    /// Theme summaries plus the inverse-variance composite, as JSON.
    Report(ReportArgs),
    /// Emit the histogram/curve/tangent figure as SVG plus CSV series.
    Plot(PlotArgs),
    /// Exact-rational dense order on (1, 5) where all six axioms hold.
    Ideal(IdealArgs),
}

/// Flags shared by every dataset-shaped subcommand. Precedence: flag, then
/// ORDINAL_GATE_SEED, then the config file, then built-in defaults.
#[derive(Args)]
struct ConfigArgs {
    /// JSON simulation config; omitted fields keep built-in defaults.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// RNG seed override.
    #[arg(long, env = "ORDINAL_GATE_SEED")]
    seed: Option<u32>,
    /// Override for the number of simulated students per theme.
    #[arg(long)]
    n: Option<usize>,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<SimulationConfig, Fail> {
        let mut config = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| Fail::input(format!("{}: {e}", path.display())))?
            }
            None => SimulationConfig::default(),
        };
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(n) = self.n {
            config.n = n;
        }
        config.validate().map_err(Fail::input)?;
        Ok(config)
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Output CSV path.
    #[arg(long, default_value = "dataset.csv")]
    out: PathBuf,
    /// Print the first N rows after writing.
    #[arg(long, value_name = "N")]
    head: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    /// Dataset CSV; omitted = check the freshly generated dataset.
    dataset: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigArgs,
    /// Also write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit 3 when any axiom fails (A4-A6 fail on every finite sample).
    #[arg(long)]
    strict_dlo: bool,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Weighting {
    /// Inverse variance of the configured theme parameters.
    Spec,
    /// Inverse variance of the realized sample standard deviations.
    Sample,
}

#[derive(Args)]
struct ReportArgs {
    /// Dataset CSV; omitted = report on the freshly generated dataset.
    dataset: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigArgs,
    /// Where the composite weights take their sigmas from.
    #[arg(long, value_enum, default_value_t = Weighting::Spec)]
    weighting: Weighting,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// "figure3" (unclipped aggregate normal) or "theme:<name>".
    #[arg(long, default_value = "figure3")]
    source: String,
    /// Output SVG path; CSV series land next to it.
    #[arg(long, default_value = "figure.svg")]
    out: PathBuf,
}

#[derive(Args)]
struct IdealArgs {
    /// Number of rational probe points.
    #[arg(long, default_value_t = 1000)]
    probes: usize,
    /// Probe-placement seed.
    #[arg(long, env = "ORDINAL_GATE_SEED", default_value_t = 42)]
    seed: u32,
    /// Bisect an interval: lower bound, upper bound, halvings.
    #[arg(long, num_args = 3, value_names = ["A", "B", "K"], allow_hyphen_values = true)]
    bisect: Option<Vec<String>>,
    /// Also write a JSON transcript here.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Fail {
    code: u8,
    message: String,
}

impl Fail {
    fn input(e: impl Display) -> Self {
        Fail { code: 2, message: e.to_string() }
    }

    fn internal(e: impl Display) -> Self {
        Fail { code: 1, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(fail) => {
            eprintln!("error: {}", fail.message);
            ExitCode::from(fail.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.command {
        Command::Simulate(args) => cmd_simulate(args),
        Command::Check(args) => cmd_check(args),
        Command::Report(args) => cmd_report(args),
        Command::Plot(args) => cmd_plot(args),
        Command::Ideal(args) => cmd_ideal(args),
    }
}

fn load_or_generate(dataset: Option<&Path>, config: &ConfigArgs) -> Result<Vec<SampleSet>, Fail> {
    match dataset {
        Some(path) => read_dataset(path).map_err(Fail::input),
        None => run_simulation(&config.resolve()?).map_err(Fail::input),
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail::internal(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn to_pretty(value: &impl serde::Serialize) -> Result<String, Fail> {
    serde_json::to_string_pretty(value).map_err(Fail::internal)
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), Fail> {
    let config = args.config.resolve()?;
    let sets = run_simulation(&config).map_err(Fail::input)?;
    write_dataset(&args.out, &sets, config.decimals).map_err(Fail::input)?;
    if let Some(rows) = args.head {
        print_head(&sets, rows, config.decimals as usize);
    }
    println!("wrote {}", args.out.display());
    Ok(())
}

fn print_head(sets: &[SampleSet], rows: usize, decimals: usize) {
    let rows = rows.min(sets.first().map_or(0, |s| s.len()));
    let id_width = rows.saturating_sub(1).to_string().len().max(2);
    print!("{:>id_width$}", "ID");
    for set in sets {
        print!("  {}", set.theme);
    }
    println!();
    for i in 0..rows {
        print!("{i:>id_width$}");
        for set in sets {
            print!("  {:>width$.decimals$}", set.values()[i], width = set.theme.len());
        }
        println!();
    }
}

fn cmd_check(args: CheckArgs) -> Result<(), Fail> {
    let sets = load_or_generate(args.dataset.as_deref(), &args.config)?;
    let matrix = check_all(&sets).map_err(Fail::input)?;
    print!("{}", render_matrix(&matrix));
    if let Some(path) = &args.out {
        write_text(path, &format!("{}\n", to_pretty(&matrix)?))?;
    }
    if args.strict_dlo {
        let mut failed: Vec<&str> = matrix
            .rows
            .iter()
            .flat_map(|r| r.verdicts.iter())
            .filter(|v| !v.passed)
            .map(|v| v.axiom.code())
            .collect();
        failed.sort_unstable();
        failed.dedup();
        if !failed.is_empty() {
            return Err(Fail {
                code: 3,
                message: format!("strict-dlo: failed axioms: {}", failed.join(", ")),
            });
        }
    }
    Ok(())
}

fn cmd_report(args: ReportArgs) -> Result<(), Fail> {
    let sets = load_or_generate(args.dataset.as_deref(), &args.config)?;
    let summaries = sets
        .iter()
        .map(summarize)
        .collect::<Result<Vec<_>, _>>()
        .map_err(Fail::input)?;
    let specs = match args.weighting {
        Weighting::Spec => args.config.resolve()?.themes,
        Weighting::Sample => specs_from_summaries(&summaries),
    };
    let composite = composite_score(&summaries, &specs).map_err(Fail::input)?;
    let report = json!({
        "weighting": if args.weighting == Weighting::Spec { "spec" } else { "sample" },
        "themes": &summaries,
        "composite": &composite,
    });
    let text = to_pretty(&report)?;
    match &args.out {
        Some(path) => write_text(path, &format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn cmd_plot(args: PlotArgs) -> Result<(), Fail> {
    let config = args.config.resolve()?;
    let bundle = if args.source == "figure3" {
        let sample = aggregate_scores(config.seed, config.n);
        figure_bundle(&sample, FIGURE_LABEL)
    } else if let Some(name) = args.source.strip_prefix("theme:") {
        let sets = run_simulation(&config).map_err(Fail::input)?;
        let set = sets
            .into_iter()
            .find(|s| s.theme == name)
            .ok_or_else(|| Fail::input(format!("no theme named {name:?} in the configuration")))?;
        let label = set.theme.clone();
        figure_bundle(&set, &label)
    } else {
        return Err(Fail::input(format!(
            "--source must be \"figure3\" or \"theme:<name>\", got {:?}",
            args.source
        )));
    }
    .map_err(Fail::input)?;
    let written = emit_plot(&bundle, &args.out).map_err(|e| match e {
        PlotError::Io { .. } => Fail::internal(e),
        other => Fail::input(other),
    })?;
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_ideal(args: IdealArgs) -> Result<(), Fail> {
    if args.probes == 0 {
        return Err(Fail::input("--probes must be at least 1"));
    }
    let iv = OpenInterval::likert();
    let ideal = verify_ideal_axioms(&iv, args.probes, args.seed).map_err(Fail::input)?;
    let probes = sample_probes(&iv, args.probes, args.seed);
    let projected_set = quantized_projection(&probes, 1.0, 5.0, 4).map_err(Fail::input)?;
    let projected = check_numeric(&projected_set).map_err(Fail::input)?;

    println!("ideal dense order on (1, 5): {} probes, seed {}", args.probes, args.seed);
    for v in &ideal {
        println!("  {}", describe(&v.clone().map(|r| r.to_string())));
    }

    let mut distinct = probes.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() >= 2 {
        let (lo_p, hi_p) = (&distinct[0], &distinct[distinct.len() - 1]);
        println!("Skolem witnesses (exact):");
        let mid = density_witness(lo_p, &distinct[1]).map_err(Fail::internal)?;
        println!("  between {lo_p} and {}: {mid}", distinct[1]);
        let above = above_witness(hi_p, &iv).map_err(Fail::internal)?;
        println!("  above {hi_p}: {above}");
        let below = below_witness(lo_p, &iv).map_err(Fail::internal)?;
        println!("  below {lo_p}: {below}");
    }

    println!("quantized projection (4 decimals, clipped to [1, 5]):");
    for v in &projected {
        println!("  {}", describe(v));
    }

    let bisected = match &args.bisect {
        Some(parts) => {
            let a = parse_rational(&parts[0]).map_err(Fail::input)?;
            let b = parse_rational(&parts[1]).map_err(Fail::input)?;
            let k: u32 = parts[2].parse().map_err(|_| {
                Fail::input(format!("halving count must be a nonnegative integer, got {:?}", parts[2]))
            })?;
            let chain = bisect_chain(&a, &b, k).map_err(Fail::input)?;
            let widths: Vec<String> = chain.iter().map(|iv| iv.width().to_string()).collect();
            println!("bisection of ({a}, {b}): widths {}", widths.join(", "));
            Some((a, b, k, widths))
        }
        None => None,
    };

    if let Some(path) = &args.out {
        let rational_verdicts = |vs: &[AxiomVerdict<Rational>; 6]| {
            vs.iter()
                .map(|v| v.clone().map(|r| r.to_string()))
                .collect::<Vec<_>>()
        };
        let doc = json!({
            "interval": "(1, 5)",
            "probes": args.probes,
            "seed": args.seed,
            "ideal": rational_verdicts(&ideal),
            "projected": &projected[..],
            "bisect": bisected.as_ref().map(|(a, b, k, widths)| json!({
                "lo": a.to_string(),
                "hi": b.to_string(),
                "halvings": k,
                "widths": widths,
            })),
        });
        write_text(path, &format!("{}\n", to_pretty(&doc)?))?;
    }
    Ok(())
}

fn describe<T: Display>(v: &AxiomVerdict<T>) -> String {
    let status = if v.passed { "pass" } else { "FAIL" };
    format!(
        "{} {:<20} {status}  checked {:<6} {}",
        v.axiom.code(),
        v.axiom.title(),
        v.checked,
        witness_text(&v.witness)
    )
}

fn witness_text<T: Display>(w: &Witness<T>) -> String {
    match w {
        Witness::SelfLoop { value } => format!("self-loop at {value}"),
        Witness::BrokenTriple { a, b, c } => format!("broken triple {a} < {b} < {c}"),
        Witness::IncomparablePair { a, b } => format!("incomparable pair {a}, {b}"),
        Witness::MaxElement { value } => format!("maximum {value}"),
        Witness::MinElement { value } => format!("minimum {value}"),
        Witness::AdjacentGap { lower, upper } => format!("gap ({lower}, {upper})"),
        Witness::Vacuous => "vacuous".into(),
        Witness::Exhaustive { count } => format!("exhaustive over {count}"),
    }
}
