use std::process::ExitCode;

use burnside_core::{Error, Guards, Method};
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::{Format, Output, Status};

const CSV_HELP: &str = "\
CSV columns:
  marks      class,<one column per class>
  subgroups  class,order,type,conjugates,normalizer_order,generators
  units      method,rank,agrees
  kernel     group,classes,dim_L,rank,rank_method,exact
  verify     check,ok
  table      group,classes,rank,dim_L,methods_agree
  factorize  x,order,p1,k1,p2,k2,matches

Exit codes: 0 success, 2 parse error, 3 guard exceeded, 4 cross-check failure, 1 any other error.
Set BURNSIDE_LAB_THREADS to cap the threads used by `table`.";

#[derive(Parser, Debug)]
#[command(name = "burnside-lab", version, about = "Tables of marks and unit groups of Burnside rings", after_help = CSV_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Largest group order accepted
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_elements: u64,
    /// Largest number of subgroups enumerated
    #[arg(long, global = true, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_subgroups: u64,
    /// log2 of the node budget of the unit search
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..=62))]
    oracle_bits: u32,
    /// Leave out the unit search where it is optional
    #[arg(long, global = true)]
    skip_oracle: bool,
    /// Print units, form bases or subspace bases
    #[arg(long, global = true)]
    witnesses: bool,
    /// Seed for the randomized checks of `verify`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of marks
    Marks { group: String },
    /// Conjugacy classes of subgroups
    Subgroups { group: String },
    /// Rank of the unit group
    Units {
        group: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
        method: MethodArg,
    },
    /// The subspace L(G) and the dimension count
    Kernel { group: String },
    /// Every check that applies to one group
    Verify { group: String },
    /// Sweep a family of groups
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 32)]
        max_order: usize,
    },
    /// Factorize every transitive biset (H x G)/X
    Factorize { left: String, right: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Yoshida,
    Sections,
    Limit,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Oracle => vec![Method::Oracle],
            MethodArg::Yoshida => vec![Method::Yoshida],
            MethodArg::Sections => vec![Method::Sections],
            MethodArg::Limit => vec![Method::Limit],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cyclic,
    Dihedral,
    Semidihedral,
    Quaternion,
    Elementary,
}

pub struct Config {
    pub guards: Guards,
    pub skip_oracle: bool,
    pub witnesses: bool,
    pub seed: u64,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Unsupported(_) => 2,
        Error::Guard(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config {
        guards: Guards {
            max_elements: cli.max_elements as usize,
            max_subgroups: cli.max_subgroups as usize,
            oracle_bits: cli.oracle_bits,
        },
        skip_oracle: cli.skip_oracle,
        witnesses: cli.witnesses,
        seed: cli.seed,
    };
    let result: burnside_core::Result<Output> = match &cli.command {
        Command::Marks { group } => commands::marks(group, &cfg),
        Command::Subgroups { group } => commands::subgroups(group, &cfg),
        Command::Units { group, method } => commands::units(group, &method.methods(), &cfg),
        Command::Kernel { group } => commands::kernel(group, &cfg),
        Command::Verify { group } => commands::verify(group, &cfg),
        Command::Table { family, max_order } => commands::table(*family, *max_order, &cfg),
        Command::Factorize { left, right } => commands::factorize(left, right, &cfg),
    };
    match result {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            match out.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Mismatch => ExitCode::from(4),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
