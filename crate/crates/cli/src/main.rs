use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crossint_cli::{
    cmd_certify, cmd_classify, cmd_lambda, cmd_partner, cmd_search, cmd_shift, cmd_walkcount, cmd_weight,
    parse_t_list, ClaimSelection, CliResult, Output,
};

/// Exact tools for cross t-intersecting families.
#[derive(Parser)]
#[command(name = "crossint", version)]
struct Cli {
    /// Lift the ground-size caps. Searches at n = 6 can take a very long time.
    #[arg(long, global = true)]
    unsafe_n: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact p-weight of a family.
    Weight {
        file: PathBuf,
        #[arg(long)]
        p: String,
    },
    /// Largest height that every member's walk reaches.
    Lambda { file: PathBuf },
    /// Walk class of each member relative to the line y = x + ell.
    Classify {
        file: PathBuf,
        #[arg(long)]
        ell: u32,
    },
    /// Apply s_ij, or shift to a fixpoint when no indices are given.
    Shift {
        file: PathBuf,
        #[arg(long, requires = "j")]
        i: Option<u32>,
        #[arg(long, requires = "i")]
        j: Option<u32>,
    },
    /// Largest family cross t-intersecting with the given one.
    Partner {
        file: PathBuf,
        #[arg(long)]
        t: u32,
    },
    /// Exhaustive maximum of the weight product over cross t-intersecting up-set pairs.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        p: String,
        /// Directory that receives A.fam and B.fam.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Evaluate bound claims and stream JSON-lines reports.
    Certify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        claim: Option<String>,
        #[arg(long)]
        all: bool,
        /// Comma-separated list of t values; defaults to each claim's grid.
        #[arg(long)]
        t: Option<String>,
        /// `endpoints` or `grid:k`.
        #[arg(long, default_value = "endpoints")]
        p_policy: String,
        /// Record wall-clock time per report instead of 0.
        #[arg(long)]
        timing: bool,
    },
    /// Walks from the origin to (x0, y0) avoiding y = x + c.
    Walkcount { x0: u64, y0: u64, c: u64 },
}

fn run(cli: Cli) -> CliResult<Output> {
    let un = cli.unsafe_n;
    match cli.command {
        Command::Weight { file, p } => cmd_weight(&file, &p, un),
        Command::Lambda { file } => cmd_lambda(&file, un),
        Command::Classify { file, ell } => cmd_classify(&file, ell, un),
        Command::Shift { file, i, j } => cmd_shift(&file, i.zip(j), un),
        Command::Partner { file, t } => cmd_partner(&file, t, un),
        Command::Search { n, t, p, witness_dir } => cmd_search(n, t, &p, witness_dir.as_deref(), un),
        Command::Certify { claim, all: _, t, p_policy, timing } => {
            let sel = match claim {
                Some(c) => ClaimSelection::One(c),
                None => ClaimSelection::All,
            };
            let ts = t.as_deref().map(parse_t_list).transpose()?;
            cmd_certify(&sel, ts.as_deref(), &p_policy, timing)
        }
        Command::Walkcount { x0, y0, c } => cmd_walkcount(x0, y0, c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
