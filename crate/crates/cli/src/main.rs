//! `burnside`: subgroup lattices, Möbius functions and the invariant
//! `m_{G,N}` of small permutation groups from the command line.
//!
//! Exit status: 0 when every check holds, 1 when a mathematical check
//! fails, 2 on usage or resource errors.

mod commands;
mod select;

use std::process::ExitCode;
use std::time::Instant;

use burnside_core::group::DEFAULT_CLOSURE_LIMIT;
use burnside_core::lattice::DEFAULT_LATTICE_LIMIT;
use burnside_core::report::GroupInfo;
use burnside_core::topology::DEFAULT_CHAIN_LIMIT;
use burnside_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use commands::{Assertion, Limits, Outcome};

#[derive(Parser, Debug)]
#[command(name = "burnside", version)]
#[command(
    about = "Subgroup lattices, Möbius functions and Burnside-ring invariants of permutation groups"
)]
#[command(after_help = "GROUPS:
    S5, A4, C6, D4, C3 x C3, gens=[(12345),(2354);5]

EXAMPLES:
    burnside mgn --group S5 --normal A5
    burnside verify-theorem13 --group S4 --normal A4 --format json
    burnside class-poset --group S5 --normal An --cyclic '(123)' --homology")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Report wall-clock time (omitted by default so output is reproducible)
    #[arg(long, global = true)]
    timing: bool,

    /// Maximum group order produced by closure
    #[arg(long, default_value_t = DEFAULT_CLOSURE_LIMIT, global = true)]
    closure_limit: usize,

    /// Maximum group order for subgroup enumeration
    #[arg(long, default_value_t = DEFAULT_LATTICE_LIMIT, global = true)]
    lattice_limit: usize,

    /// Maximum number of chains in one order complex
    #[arg(long, default_value_t = DEFAULT_CHAIN_LIMIT, global = true)]
    chain_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Group spec, e.g. S4, C3 x C3, gens=[(1234),(12);4]
    #[arg(long)]
    group: String,
}

#[derive(Args, Debug)]
struct NormalArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// Normal subgroup: 1, G, center, An, gens=[...] or a group spec
    #[arg(long)]
    normal: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all subgroups and inclusions
    Lattice(GroupArgs),
    /// Möbius function of the subgroup lattice
    Moebius(GroupArgs),
    /// m_{G,N} from the defining sum
    Mgn(NormalArgs),
    /// m_{G,N} from Euler characteristics of the class posets
    MgnEuler {
        #[command(flatten)]
        args: NormalArgs,
        #[arg(long)]
        homology: bool,
    },
    /// The quotient G/N for N maximal normal with m_{G,N} nonzero
    Beta(GroupArgs),
    /// Whether m_{G,N} = 0 for every nontrivial normal N
    Bgroup(GroupArgs),
    /// The class poset of a cyclic subgroup over a normal subgroup of prime index
    ClassPoset {
        #[command(flatten)]
        args: NormalArgs,
        /// Cyclic subgroup: 1, a cycle word such as (123), or gens=[...]
        #[arg(long)]
        cyclic: String,
        #[arg(long)]
        homology: bool,
    },
    /// Compare every route to m_{G,N} on normal subgroups of prime index
    #[command(name = "verify-theorem13")]
    VerifyTheorem13 {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        normal: Option<String>,
    },
    /// Connectivity of the class posets of S5 over A5 and m(S5, A5)
    #[command(name = "verify-s5")]
    VerifyS5 {
        #[arg(long)]
        homology: bool,
    },
    /// Run the regression suite over the built-in catalog
    Suite,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Lattice(_) => "lattice",
            Command::Moebius(_) => "moebius",
            Command::Mgn(_) => "mgn",
            Command::MgnEuler { .. } => "mgn-euler",
            Command::Beta(_) => "beta",
            Command::Bgroup(_) => "bgroup",
            Command::ClassPoset { .. } => "class-poset",
            Command::VerifyTheorem13 { .. } => "verify-theorem13",
            Command::VerifyS5 { .. } => "verify-s5",
            Command::Suite => "suite",
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    group: Option<&'a GroupInfo>,
    result: &'a serde_json::Value,
    assertions: &'a [Assertion],
    timing_ms: Option<u128>,
}

fn run(command: &Command, limits: Limits) -> burnside_core::Result<Outcome> {
    use commands::*;
    match command {
        Command::Lattice(g) => Ok(lattice(&load(&g.group, limits)?)),
        Command::Moebius(g) => Ok(moebius(&load(&g.group, limits)?)),
        Command::Mgn(args) => {
            let a = load(&args.group.group, limits)?;
            let n = select::normal(&a, &args.normal)?;
            mgn(&a, n)
        }
        Command::MgnEuler { args, homology } => {
            let a = load(&args.group.group, limits)?;
            let n = select::normal(&a, &args.normal)?;
            mgn_euler(&a, n, *homology, limits)
        }
        Command::Beta(g) => beta_command(&load(&g.group, limits)?),
        Command::Bgroup(g) => bgroup(&load(&g.group, limits)?),
        Command::ClassPoset {
            args,
            cyclic,
            homology,
        } => {
            let a = load(&args.group.group, limits)?;
            let n = select::normal(&a, &args.normal)?;
            let c = select::cyclic(&a, cyclic)?;
            class_poset_command(&a, n, c, *homology, limits)
        }
        Command::VerifyTheorem13 { group, normal } => {
            let a = load(&group.group, limits)?;
            let n = normal
                .as_deref()
                .map(|s| select::normal(&a, s))
                .transpose()?;
            verify_theorem13(&a, n)
        }
        Command::VerifyS5 { homology } => verify_s5(*homology, limits),
        Command::Suite => suite(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        closure: cli.closure_limit,
        lattice: cli.lattice_limit,
        chains: cli.chain_limit,
    };
    let start = Instant::now();
    let outcome = match run(&cli.command, limits) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::Consistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            };
        }
    };
    let timing = cli.timing.then(|| start.elapsed().as_millis());
    match cli.format {
        Format::Json => {
            let envelope = Envelope {
                command: cli.command.name(),
                group: outcome.group.as_ref(),
                result: &outcome.result,
                assertions: &outcome.assertions,
                timing_ms: timing,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&envelope).expect("envelope serializes")
            );
        }
        Format::Text => {
            for line in &outcome.text {
                println!("{line}");
            }
            for a in &outcome.assertions {
                let mark = if a.holds { "ok  " } else { "FAIL" };
                println!("{mark} {}: {}", a.name, a.detail);
            }
            if let Some(ms) = timing {
                println!("time: {ms} ms");
            }
        }
    }
    if outcome.assertions.iter().all(|a| a.holds) {
        ExitCode::SUCCESS
    } else {
        let failed: Vec<&Assertion> = outcome.assertions.iter().filter(|a| !a.holds).collect();
        eprintln!("{} check(s) failed", failed.len());
        for a in failed {
            eprintln!("  {}: {}", a.name, a.detail);
        }
        ExitCode::from(1)
    }
}
