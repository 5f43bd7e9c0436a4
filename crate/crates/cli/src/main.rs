mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::RunReport;

const FORMATS: &str = "\
Group specs:       sym:n | cyclic:m1[,m2,...] | gl:q,n | table:FILE
Connection specs:  efp:k | gl-rank:k | classes:i,j,... | elements:{a,b,...} | elements:FILE | empty

File formats:
  Cayley table      <order>\\n then <order> lines of 0-based products (row a, column b = a*b)
  elements file     element labels or 0-based indices separated by commas or whitespace
  character table   JSON {group_order, class_sizes, class_labels, degrees, exact,
                    [irrep_labels], entries}; entries are rows of \"p/q\" strings (exact)
                    or [re, im] pairs (float), nested or flat row-major
  irreps            JSON {irreps: [{label, degree, matrices: [[[[re, im], ...], ...], ...]}]},
                    one matrix per group element in element order
  graph             vertices <m> edges <k>\\n then k lines `u v` (0-based); # comments
  action            action <order> <points>\\n then one image row per group element, or
                    generators <count> <points>\\n then one image row per generator
  function          JSON {values: [...]} per element or {class_values: [...]} per class,
                    each value \"p/q\" or [re, im]
  SDPA              sparse format; see the comment header of an exported file

Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 budget exhausted";

#[derive(Parser, Debug)]
#[command(name = "cayley-theta", version, about = "Lovász theta and independence numbers of Cayley graphs", after_help = FORMATS)]
struct Cli {
    /// Seed recorded in reports (core computations are deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write a JSON run report here.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Target {
    /// Group spec, e.g. sym:4 or cyclic:5.
    #[arg(long)]
    group: String,
    /// Connection spec, e.g. efp:1 or elements:{1,4}.
    #[arg(long)]
    connection: String,
    /// Character table file for the group (required for gl and table groups).
    #[arg(long, value_name = "FILE")]
    chartable: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lovász theta via the character linear program.
    Theta {
        #[command(flatten)]
        target: Target,
        /// Exact rational arithmetic (needs a rational table).
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        /// Floating-point arithmetic.
        #[arg(long)]
        float: bool,
        /// Write the LP in text form here.
        #[arg(long, value_name = "FILE")]
        lp_out: Option<PathBuf>,
    },
    /// Independence number by branch and bound.
    Alpha {
        #[arg(long, requires = "connection", conflicts_with = "graph")]
        group: Option<String>,
        #[arg(long, requires = "group")]
        connection: Option<String>,
        /// Graph file instead of a Cayley graph.
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Theta of Cay(S_n, permutations with fewer than k fixed points) for all k <= n <= nmax.
    EfpTable {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        float: bool,
        /// Cells not started within this many seconds are left blank.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Write formulation A or C as an SDPA sparse file.
    ExportSdpa {
        #[command(flatten)]
        target: Target,
        /// A (full matrix) or C (irrep blocks).
        #[arg(long)]
        formulation: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Irrep matrices (needed for C unless the group is abelian or S_3).
        #[arg(long, value_name = "FILE")]
        irreps: Option<PathBuf>,
    },
    /// Export a character table, or validate a table file.
    #[command(args_conflicts_with_subcommands = true)]
    Chartable {
        #[command(subcommand)]
        action: Option<ChartableAction>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Decide whether a function on a group is of positive type.
    Bochner {
        #[arg(long)]
        group: String,
        #[arg(long, value_name = "FILE")]
        function: PathBuf,
        #[arg(long, value_name = "FILE")]
        chartable: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        irreps: Option<PathBuf>,
    },
    /// Connection set of a vertex-transitive graph under a group action.
    Blowup {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        action: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// Also compute alpha of the Cayley graph and of the original graph.
        #[arg(long)]
        alpha: bool,
        #[arg(long)]
        budget: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum ChartableAction {
    /// Check a table file's orthogonality relations (and its fit to a group).
    Validate {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use cayley_theta::Error;
    match err.downcast_ref::<Error>() {
        Some(Error::Internal(_)) | Some(Error::NumericalFailure(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(std::env::args().skip(1).collect(), cli.seed);
    let outcome = commands::run(cli.command, &mut report);
    let code = match &outcome {
        Ok(code) => *code,
        Err(err) => {
            eprintln!("error: {err:#}");
            exit_code(err)
        }
    };
    if let (Some(path), true) = (&cli.json, code == 0 || code == 3) {
        if let Err(err) = report.write(path, start.elapsed().as_millis()) {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
