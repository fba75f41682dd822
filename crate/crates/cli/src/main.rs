use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hardness_cli::input::{self, CsvSpec, LabelColumn};
use hardness_cli::parallel::{available_threads, run_parallel};
use hardness_cli::{report, svg, CliError};
use hardness_core::{metrics, CalculatorConfig, ComplexityCalculator, MeasureId};

#[derive(Parser)]
#[command(
    name = "hardness",
    version,
    about = "Problem-complexity measures for binary classification data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute complexity measures for a CSV dataset.
    Analyze(AnalyzeArgs),
    /// Print the 22 measure ids in canonical order.
    ListMeasures,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// CSV file with one row per instance.
    path: PathBuf,
    /// Name of the label column (requires a header).
    #[arg(long, conflicts_with = "label_last")]
    label_col: Option<String>,
    /// Use the last column as the label (the default).
    #[arg(long)]
    label_last: bool,
    /// The file has no header row.
    #[arg(long)]
    no_header: bool,
    /// Field delimiter.
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    /// Comma-separated measure ids; all 22 by default.
    #[arg(long, value_delimiter = ',')]
    measures: Option<Vec<String>>,
    /// Comma-separated positive weights, one per selected measure in canonical order.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here; `-` means stdout (the default).
    #[arg(long)]
    json: Option<String>,
    /// Write the polar chart as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Worker threads for measure evaluation; defaults to the available cores.
    #[arg(long)]
    threads: Option<usize>,
    /// Suppress the text summary.
    #[arg(long)]
    quiet: bool,
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: path.clone(),
        source: e,
    })
}

fn analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    if !args.delimiter.is_ascii() {
        return Err(CliError::Invalid(format!(
            "delimiter '{}' must be a single ASCII character",
            args.delimiter
        )));
    }
    let spec = CsvSpec {
        path: args.path.clone(),
        label: args.label_col.map_or(LabelColumn::Last, LabelColumn::Name),
        delimiter: args.delimiter as u8,
        has_header: !args.no_header,
    };
    let data = input::load(&spec)?;

    let measures: Vec<MeasureId> = match &args.measures {
        Some(names) => names
            .iter()
            .map(|n| n.trim().parse::<MeasureId>())
            .collect::<Result<_, _>>()?,
        None => metrics().to_vec(),
    };
    let mut config = CalculatorConfig::default()
        .with_measures(&measures)
        .with_seed(args.seed);
    if let Some(w) = &args.weights {
        config = config.with_weights(w.clone());
    }
    let mut calc = ComplexityCalculator::new(config);
    if let Some(w) = &args.weights {
        // validate before spending time on the fit
        hardness_core::calculator::weighted_mean(&vec![0.0; calc.measures().len()], Some(w))?;
    }

    let threads = args.threads.unwrap_or_else(available_threads);
    calc.fit_with(&data, |plan| run_parallel(plan, threads))?;
    let summary = calc.report()?;

    let json = report::to_json_string(&summary, args.weights.as_deref())?;
    let to_stdout = matches!(args.json.as_deref(), None | Some("-"));
    match args.json.as_deref() {
        None | Some("-") => {
            let mut out = std::io::stdout().lock();
            out.write_all(json.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io {
                    path: "<stdout>".into(),
                    source: e,
                })?;
        }
        Some(path) => write_file(&PathBuf::from(path), &json)?,
    }
    if let Some(path) = &args.svg {
        write_file(path, &svg::render(&calc.plot_data()?))?;
    }
    if !args.quiet && !to_stdout {
        print!("{summary}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListMeasures => {
            for id in metrics() {
                println!("{id}");
            }
            ExitCode::SUCCESS
        }
        Command::Analyze(args) => match analyze(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code())
            }
        },
    }
}
