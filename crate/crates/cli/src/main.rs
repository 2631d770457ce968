use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use combpfaff::graphfile::{load_graph, LoadedGraph};
use combpfaff::report::VerificationReport;
use combpfaff::suite::{demo_paper_examples, run_suite, GraphSource, SuiteParams, Theorem};
use combpfaff::Error;

/// Exact checks of determinant and Pfaffian identities on weighted graphs.
#[derive(Parser)]
#[command(name = "combpfaff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one identity on a graph file, or on a seeded random instance
    /// when --graph is omitted.
    Verify {
        /// lindstrom, fomin, stembridge, stembridge-walks, det2pf, grove-det,
        /// grove-pf, flow-det or flow-pf
        theorem: String,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Comma-separated vertex names.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<String>>,
        /// Comma-separated vertex names.
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<String>>,
        #[arg(long)]
        k: Option<usize>,
        /// Walk truncation degree (edge count).
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        /// Rows of a random det2pf table.
        #[arg(long)]
        rows: Option<usize>,
        /// Columns of a random det2pf table.
        #[arg(long)]
        cols: Option<usize>,
        /// flow-det only: weight flows without the 2^theta factor. The
        /// check is then expected to fail.
        #[arg(long)]
        no_collision_factor: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Rerun the bundled worked examples.
    Demo {
        #[arg(value_enum)]
        which: DemoSet,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Load and validate a graph file.
    Validate {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoSet {
    PaperExamples,
}

fn emit(reports: &[VerificationReport], format: ReportFormat, many: bool) {
    match format {
        ReportFormat::Text => {
            for r in reports {
                print!("{}", r.to_text());
            }
        }
        ReportFormat::Json => {
            let out = if many { serde_json::to_string_pretty(reports) } else { serde_json::to_string_pretty(&reports[0]) };
            println!("{}", out.expect("reports serialize"));
        }
    }
}

fn exit_for(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify { theorem, graph, a, b, k, degree, seed, rows, cols, no_collision_factor, report } => {
            let theorem: Theorem = theorem.parse()?;
            let params = SuiteParams { a, b, k, degree, seed, rows, cols, plain: no_collision_factor };
            let loaded: Option<LoadedGraph> = graph.as_ref().map(load_graph).transpose()?;
            let source = match (&loaded, &graph) {
                (Some(g), Some(path)) => GraphSource::Loaded { graph: g, label: path.display().to_string() },
                _ => GraphSource::Random,
            };
            let r = run_suite(theorem, source, &params)?;
            let reports = [r];
            emit(&reports, report, false);
            Ok(exit_for(&reports))
        }
        Command::Demo { which: DemoSet::PaperExamples, report } => {
            let reports = demo_paper_examples().into_iter().collect::<Result<Vec<_>, _>>()?;
            emit(&reports, report, true);
            Ok(exit_for(&reports))
        }
        Command::Validate { graph } => {
            let g = load_graph(&graph)?;
            println!("{}: ok ({})", graph.display(), g.summary());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
