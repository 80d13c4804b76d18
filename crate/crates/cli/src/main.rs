//! `treemaps` command-line interface.
//!
//! Exit codes: 0 success (all checks passed), 1 a verification mismatch,
//! 2 usage error, 3 resource guard exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use treemaps::verify::{
    verify_all, verify_forest_identity, verify_global_identities, verify_local_tree_identity,
    verify_map_identities, verify_symmetric_identity, verify_theorem_main,
};
use treemaps::{
    build_forest_gf, build_theorem_product, build_tree_gf, census_global_forests,
    census_global_trees, census_local_forests, census_local_trees, partitions_of,
    rhs_forest_count, rhs_tree_count, sample_local_census, sample_tree, BigCount, Census, Error,
    Limits, Options, Partition, SparsePoly, VerificationReport,
};

mod output;

#[derive(Parser, Debug)]
#[command(name = "treemaps", version, about = "Labeled trees and forests by indegree type")]
struct Cli {
    /// Lift every resource guard on brute-force and expansion work.
    #[arg(long, global = true)]
    guard_override: bool,

    /// Run exhaustive loops on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form counts for a single type.
    #[command(subcommand)]
    Count(CountCmd),
    /// Expanded generating polynomials as JSON.
    #[command(subcommand)]
    Expand(ExpandCmd),
    /// Exhaustive type tables.
    #[command(subcommand)]
    Census(CensusCmd),
    /// Run verification drivers and print their reports.
    Verify(VerifyArgs),
    /// Uniform random sampling.
    #[command(subcommand)]
    Sample(SampleCmd),
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    /// Trees on [n] with the given local indegree type.
    TreesLocal {
        #[arg(long)]
        n: u32,
        #[arg(long = "type")]
        type_: Partition,
    },
    /// Forests on [n] with roots {1..R} and the given local indegree type.
    ForestsLocal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        roots: u32,
        #[arg(long = "type")]
        type_: Partition,
    },
    /// Trees on [n] with a fixed root and the given global indegree type.
    TreesGlobal {
        #[arg(long)]
        n: u32,
        #[arg(long = "type")]
        type_: Partition,
    },
}

#[derive(Subcommand, Debug)]
enum ExpandCmd {
    /// Tree polynomial on n vertices
    TreeGf {
        #[arg(long)]
        n: u32,
    },
    /// Forest polynomial with roots 1..r
    ForestGf {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        roots: u32,
    },
    /// Product of the linear forms for j = k..n
    Product {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum CensusCmd {
    TreesLocal {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    ForestsLocal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        roots: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    TreesGlobal {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        root: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    ForestsGlobal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        roots: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Identity {
    All,
    Eq2,
    TheoremMain,
    Forests,
    Global,
    Maps,
    Symmetric,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    identity: Identity,
    #[arg(long)]
    n_max: u32,
}

#[derive(Subcommand, Debug)]
enum SampleCmd {
    /// Empirical frequency of a local type among uniform random trees.
    Trees {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long = "type")]
        type_: Partition,
    },
    /// One uniform random tree as JSON.
    Tree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
    },
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::GuardExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn print_census(census: &Census, edges: u32, format: Format) {
    let rows: Vec<(Partition, BigCount)> = partitions_of(edges)
        .into_iter()
        .filter_map(|l| census.get(&l).map(|c| (l, c.clone())))
        .collect();
    match format {
        Format::Json => println!("{}", output::census_json(&rows)),
        Format::Csv => print!("{}", output::census_csv(&rows)),
    }
}

fn print_poly(p: &SparsePoly) {
    println!("{}", serde_json::to_string(p).expect("polynomial serializes"));
}

fn run_verify(args: &VerifyArgs, options: &Options) -> Result<Vec<VerificationReport>, Error> {
    let n = args.n_max;
    Ok(match args.identity {
        Identity::All => verify_all(n, options)?,
        Identity::Eq2 => vec![verify_local_tree_identity(n, options)?],
        Identity::TheoremMain => vec![verify_theorem_main(n, options)?],
        Identity::Forests => vec![verify_forest_identity(n, options)?],
        Identity::Global => vec![verify_global_identities(n, options)?],
        Identity::Maps => vec![verify_map_identities(n, options)?],
        Identity::Symmetric => vec![verify_symmetric_identity(n, options)?],
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mut options = if cli.sequential { Options::sequential() } else { Options::default() };
    if cli.guard_override {
        options.limits = Limits::unlimited();
    }
    match cli.command {
        Command::Count(cmd) => {
            let count = match cmd {
                CountCmd::TreesLocal { n, type_ } | CountCmd::TreesGlobal { n, type_ } => {
                    rhs_tree_count(n, &type_)?
                }
                CountCmd::ForestsLocal { n, roots, type_ } => rhs_forest_count(n, roots, &type_)?,
            };
            println!("{count}");
        }
        Command::Expand(cmd) => {
            let p = match cmd {
                ExpandCmd::TreeGf { n } => build_tree_gf(n, &options.limits)?,
                ExpandCmd::ForestGf { n, roots } => build_forest_gf(n, roots, &options.limits)?,
                ExpandCmd::Product { n, k } => build_theorem_product(k, n, &options.limits)?,
            };
            print_poly(&p);
        }
        Command::Census(cmd) => match cmd {
            CensusCmd::TreesLocal { n, format } => {
                print_census(&census_local_trees(n, &options)?, n.saturating_sub(1), format)
            }
            CensusCmd::ForestsLocal { n, roots, format } => print_census(
                &census_local_forests(n, roots, &options)?,
                n - roots,
                format,
            ),
            CensusCmd::TreesGlobal { n, root, format } => print_census(
                &census_global_trees(n, root, &options)?,
                n.saturating_sub(1),
                format,
            ),
            CensusCmd::ForestsGlobal { n, roots, format } => print_census(
                &census_global_forests(n, roots, &options)?,
                n - roots,
                format,
            ),
        },
        Command::Verify(args) => {
            let reports = run_verify(&args, &options)?;
            let passed = reports.iter().all(|r| r.passed);
            let json = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            };
            println!("{}", json.expect("reports serialize"));
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Sample(SampleCmd::Trees { n, count, seed, type_ }) => {
            let probability = output::type_probability(n, &type_)?;
            let census = sample_local_census(n, count, seed, &options)?;
            let observed = census.get(&type_).cloned().unwrap_or_default();
            println!(
                "{}",
                output::sample_json(n, count, seed, &type_, &observed, probability)
            );
        }
        Command::Sample(SampleCmd::Tree { n, seed }) => {
            let tree = sample_tree(n, seed)?;
            println!("{}", serde_json::to_string(&tree).expect("tree serializes"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_for(&err)
        }
    }
}
