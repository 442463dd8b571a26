use std::process::ExitCode;

use clap::{Parser, Subcommand};
use solvtrip::permcore::Caps;
use solvtrip_cli::commands::{self, TripleArgs};
use solvtrip_cli::report::{Format, Reporter};

#[derive(Parser)]
#[command(name = "solvtrip", version, about = "Triples of prime-power elements and solvability of finite groups")]
struct Cli {
    /// Largest group whose elements may be listed.
    #[arg(long, global = true, value_name = "N")]
    cap_elements: Option<u64>,
    /// Largest group whose subgroup lattice may be enumerated.
    #[arg(long, global = true, value_name = "N")]
    cap_lattice: Option<u64>,
    /// Worker threads for corpus-wide work (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, center, classes and solvability of a corpus group or group file.
    Analyze { group: String },
    /// Search for a (p,q,r)-triple, or all of them with --all.
    Triples {
        group: String,
        primes: Vec<u64>,
        #[arg(long)]
        all: bool,
        /// Lift a generating tuple of G/Z(G) with these element orders and
        /// report the products of same-order lifts.
        #[arg(long)]
        lifted: bool,
    },
    /// Character table.
    Table { group: String },
    /// List and validate the bundled corpus.
    Corpus,
    /// Run the verification suite, or one section of it.
    VerifyPaper {
        #[arg(long)]
        section: Option<String>,
    },
    /// Exploratory: compare both sides of the (2,p,q) conjecture.
    #[command(name = "conjecture-2pq")]
    Conjecture2pq { group: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let mut caps = Caps::default();
    if let Some(n) = cli.cap_elements {
        caps.elements = n;
    }
    if let Some(n) = cli.cap_lattice {
        caps.lattice_order = n;
    }
    let name = match &cli.command {
        Command::Analyze { .. } => "analyze",
        Command::Triples { .. } => "triples",
        Command::Table { .. } => "table",
        Command::Corpus => "corpus",
        Command::VerifyPaper { .. } => "verify-paper",
        Command::Conjecture2pq { .. } => "conjecture-2pq",
    };
    let mut rep = Reporter::stdout(cli.format, name);
    match &cli.command {
        Command::Analyze { group } => commands::analyze(&mut rep, group, &caps),
        Command::Triples { group, primes, all, lifted } => {
            let args = TripleArgs { primes: primes.clone(), all: *all, lifted: *lifted };
            commands::triples(&mut rep, group, &args, &caps)
        }
        Command::Table { group } => commands::table(&mut rep, group, &caps),
        Command::Corpus => commands::corpus(&mut rep, &caps),
        Command::VerifyPaper { section } => commands::verify(&mut rep, section.as_deref(), &caps),
        Command::Conjecture2pq { group } => commands::conjecture(&mut rep, group.as_deref(), &caps),
    }
    ExitCode::from(rep.finish())
}
