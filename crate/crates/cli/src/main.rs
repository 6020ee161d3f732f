//! Command-line front end: build/verify/export Cayley tables, evolve cellular
//! automata, rank and compose permutations, and compute exact latin-square
//! partitions. Exit codes: 0 success, 2 usage or guard violation, 3
//! mathematical rejection.

mod ppm;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{One, Signed};

use digitgroups::ca::{ca_evolve, CaConfig};
use digitgroups::error::Error;
use digitgroups::group::{
    analyze, build_table, is_abelian, verify_group, CayleyTable, GroupSpec, Verdict, NO_ENTRY,
};
use digitgroups::partition::partition_parts;
use digitgroups::perms::{compose, invert, rank, signature, unrank, PermWord};

#[derive(Parser)]
#[command(
    name = "digitgroups",
    version,
    about = "Finite groups, automata and partitions from digit-function laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Cayley table and print it as TSV, PPM or JSON
    Table(TableArgs),
    /// Verify group axioms and print a structure report
    Check(CheckArgs),
    /// Unrank, rank, invert, compose or sign permutations
    Perm {
        #[command(subcommand)]
        action: PermAction,
    },
    /// Evolve a cellular automaton and print the space-time diagram
    Ca(CaArgs),
    /// Partition an integer into exact parts through a latin-square table
    Partition(PartitionArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Group spec, e.g. cyclic:4, dsum:2,2, multmod:7, dihedral:3,
    /// dicyclic:2, metacyclic:q=8,a=1,c=2,r=5, sym:3, alt:4
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
    format: TableFormat,
    /// Substitute element labels (quaternion units, permutation words,
    /// residues) where the family defines them
    #[arg(long)]
    labels: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Ppm,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    group: String,
    /// Seed for sampled associativity checks on orders above 64
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum PermAction {
    /// Word of the m-th permutation of p symbols
    Unrank {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        m: u64,
    },
    /// Rank of a permutation word
    Rank {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        w: String,
    },
    /// Inverse permutation, from a word or a rank
    Invert {
        #[arg(short)]
        p: u32,
        #[arg(short, conflicts_with = "m")]
        w: Option<String>,
        #[arg(short)]
        m: Option<u64>,
    },
    /// Composition outer∘inner (inner applied first)
    Compose {
        #[arg(short)]
        p: u32,
        #[arg(long, conflicts_with = "outer_w")]
        outer_m: Option<u64>,
        #[arg(long)]
        outer_w: Option<String>,
        #[arg(long, conflicts_with = "inner_w")]
        inner_m: Option<u64>,
        #[arg(long)]
        inner_w: Option<String>,
    },
    /// Signature, +1 for even and -1 for odd
    Sign {
        #[arg(short)]
        p: u32,
        #[arg(short, conflicts_with = "m")]
        w: Option<String>,
        #[arg(short)]
        m: Option<u64>,
    },
}

#[derive(Args)]
struct CaArgs {
    /// Cell radix η ≥ 2
    #[arg(long)]
    eta: u64,
    /// Wider-index neighbors in the update window
    #[arg(short = 'l', long, default_value_t = 1)]
    left: u32,
    /// Lower-index neighbors in the update window (least-significant digit)
    #[arg(short = 'r', long, default_value_t = 1)]
    right: u32,
    /// Rule number; its base-η digits tabulate the local update
    #[arg(long)]
    rule: u64,
    #[arg(long)]
    width: usize,
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = CaInit::Single)]
    init: CaInit,
    /// Row of cell digits for --init file
    #[arg(long)]
    init_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CaFormat::Text)]
    format: CaFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaInit {
    /// All zeros with a single centered 1
    Single,
    /// Read the initial row from --init-file
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaFormat {
    Text,
    Ppm,
}

#[derive(Args)]
struct PartitionArgs {
    /// Expansion radix η ≥ 2
    #[arg(long)]
    eta: u64,
    /// Group spec for the latin-square table, e.g. cyclic:2
    #[arg(long)]
    table: String,
    /// Value to partition
    #[arg(long)]
    x: u64,
}

struct Exit {
    code: u8,
    message: String,
}

impl From<Error> for Exit {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::AxiomFailure { .. }
            | Error::NotLatinSquare
            | Error::NotPrime { .. }
            | Error::GcdConstraint { .. }
            | Error::NotAPermutation { .. } => 3,
            _ => 2,
        };
        Exit {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Exit {
    fn from(err: std::io::Error) -> Self {
        Exit {
            code: 2,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(exit) => {
            eprintln!("error: {}", exit.message);
            ExitCode::from(exit.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Exit> {
    match command {
        Command::Table(args) => cmd_table(args),
        Command::Check(args) => cmd_check(args),
        Command::Perm { action } => cmd_perm(action),
        Command::Ca(args) => cmd_ca(args),
        Command::Partition(args) => cmd_partition(args),
    }
}

fn emit(out: Option<PathBuf>, payload: &str) -> Result<(), Exit> {
    match out {
        Some(path) => fs::write(path, payload)?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn table_pixels(table: &CayleyTable) -> Vec<Vec<u8>> {
    let n = table.order();
    let max = n as u64 - 1;
    (0..n)
        .map(|m| {
            (0..n)
                .map(|k| {
                    let e = table.entry(m, k);
                    let value = if e == NO_ENTRY { 0 } else { e as u64 };
                    ppm::scale(value, max)
                })
                .collect()
        })
        .collect()
}

fn cmd_table(args: TableArgs) -> Result<u8, Exit> {
    let spec: GroupSpec = args.group.parse().map_err(Exit::from)?;
    let table = build_table(&spec)?;
    let payload = match args.format {
        TableFormat::Tsv => table.to_tsv(args.labels),
        TableFormat::Ppm => ppm::render_p3(table.order(), &table_pixels(&table)),
        TableFormat::Json => {
            let verdict = verify_group(&table, 0);
            let n = table.order();
            let matrix: Vec<Vec<i64>> = (0..n)
                .map(|m| {
                    (0..n)
                        .map(|k| {
                            let e = table.entry(m, k);
                            if e == NO_ENTRY {
                                -1
                            } else {
                                e as i64
                            }
                        })
                        .collect()
                })
                .collect();
            let value = serde_json::json!({
                "spec": spec.describe(),
                "order": n,
                "table": matrix,
                "verified": verdict.is_pass(),
                "abelian": verdict.is_pass() && is_abelian(&table),
            });
            let mut text = serde_json::to_string_pretty(&value).expect("serializable");
            text.push('\n');
            text
        }
    };
    emit(args.out, &payload)?;
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<u8, Exit> {
    let spec: GroupSpec = args.group.parse().map_err(Exit::from)?;
    let table = build_table(&spec)?;
    println!("spec: {}", spec.describe());
    println!("order: {}", table.order());
    match verify_group(&table, args.seed) {
        Verdict::Pass => {
            println!("verified: pass (seed {})", args.seed);
            println!("abelian: {}", is_abelian(&table));
            let report = analyze(&table)?;
            println!("identity: {}", table.label_of(report.identity as u32));
            let orders: Vec<String> = report.orders.iter().map(|o| o.to_string()).collect();
            println!("element orders: {}", orders.join(" "));
            let center: Vec<String> = report
                .center
                .iter()
                .map(|&c| table.label_of(c as u32))
                .collect();
            println!("center: {}", center.join(" "));
            Ok(0)
        }
        Verdict::Fail { axiom, witness } => {
            println!(
                "verified: fail: {} at {} (seed {})",
                axiom,
                table.witness_labels(&witness),
                args.seed
            );
            Ok(3)
        }
    }
}

fn parse_word(p: u32, text: &str) -> Result<PermWord, Exit> {
    let digits: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("cannot parse word `{text}`")))?
    } else {
        text.chars()
            .map(|c| c.to_digit(10))
            .collect::<Option<_>>()
            .ok_or_else(|| usage(format!("cannot parse word `{text}`")))?
    };
    if digits.len() != p as usize {
        return Err(usage(format!(
            "word `{text}` has {} symbols, expected {p}",
            digits.len()
        )));
    }
    PermWord::from_word(digits).map_err(Exit::from)
}

fn perm_from(p: u32, word: Option<String>, m: Option<u64>) -> Result<PermWord, Exit> {
    match (word, m) {
        (Some(w), None) => parse_word(p, &w),
        (None, Some(m)) => unrank(p, m).map_err(Exit::from),
        _ => Err(usage("provide exactly one of a word (-w) or a rank (-m)")),
    }
}

fn cmd_perm(action: PermAction) -> Result<u8, Exit> {
    match action {
        PermAction::Unrank { p, m } => {
            println!("{}", unrank(p, m).map_err(Exit::from)?.word_string());
        }
        PermAction::Rank { p, w } => {
            println!("{}", rank(&parse_word(p, &w)?));
        }
        PermAction::Invert { p, w, m } => {
            let perm = perm_from(p, w, m)?;
            println!("{}", invert(&perm).word_string());
        }
        PermAction::Compose {
            p,
            outer_m,
            outer_w,
            inner_m,
            inner_w,
        } => {
            let outer = perm_from(p, outer_w, outer_m)?;
            let inner = perm_from(p, inner_w, inner_m)?;
            println!(
                "{}",
                compose(&outer, &inner).map_err(Exit::from)?.word_string()
            );
        }
        PermAction::Sign { p, w, m } => {
            let perm = perm_from(p, w, m)?;
            let sign = if signature(&perm) > 0 { "+1" } else { "-1" };
            println!("{sign}");
        }
    }
    Ok(0)
}

fn format_row(eta: u64, row: &[u64]) -> String {
    if eta <= 10 {
        row.iter().map(|c| c.to_string()).collect()
    } else {
        let parts: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }
}

fn cmd_ca(args: CaArgs) -> Result<u8, Exit> {
    let cfg = CaConfig::new(args.eta, args.left, args.right, args.rule, args.width)?;
    if args.steps == 0 {
        return Err(usage("steps must be at least 1"));
    }
    let init = match args.init {
        CaInit::Single => {
            let mut row = vec![0u64; args.width];
            row[args.width / 2] = 1;
            row
        }
        CaInit::File => {
            let path = args
                .init_file
                .ok_or_else(|| usage("--init file requires --init-file"))?;
            let text = fs::read_to_string(path)?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| usage("initial-condition file is empty"))?;
            parse_cells(line)?
        }
    };
    let rows = ca_evolve(&cfg, &init, args.steps)?;
    let payload = match args.format {
        CaFormat::Text => {
            let mut out = String::new();
            for row in &rows {
                out.push_str(&format_row(args.eta, row));
                out.push('\n');
            }
            out
        }
        CaFormat::Ppm => {
            let max = args.eta - 1;
            let pixels: Vec<Vec<u8>> = rows
                .iter()
                .map(|row| row.iter().map(|&c| ppm::scale(c, max)).collect())
                .collect();
            ppm::render_p3(args.width, &pixels)
        }
    };
    emit(args.out, &payload)?;
    Ok(0)
}

fn parse_cells(line: &str) -> Result<Vec<u64>, Exit> {
    let trimmed = line.trim();
    if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
        trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("cannot parse cells `{trimmed}`")))
    } else {
        trimmed
            .chars()
            .map(|c| c.to_digit(10).map(u64::from))
            .collect::<Option<_>>()
            .ok_or_else(|| usage(format!("cannot parse cells `{trimmed}`")))
    }
}

fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else if value.is_negative() {
        format!("-{}/{}", value.numer().abs(), value.denom())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn cmd_partition(args: PartitionArgs) -> Result<u8, Exit> {
    let spec: GroupSpec = args.table.parse().map_err(Exit::from)?;
    let table = build_table(&spec)?;
    let parts = partition_parts(args.eta, &table, args.x)?;
    let total: BigRational = parts.iter().sum();
    if total != BigRational::from_integer(args.x.into()) {
        return Err(Exit {
            code: 3,
            message: format!("parts sum to {total}, not {}", args.x),
        });
    }
    let formatted: Vec<String> = parts.iter().map(format_rational).collect();
    println!("{} | sum={}", formatted.join(" "), format_rational(&total));
    Ok(0)
}
