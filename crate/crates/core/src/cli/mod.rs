//! The `optseq` command line.
//!
//! Output is line-oriented: a header `optseq-v1`, then one record per line of
//! space-separated `key=value` fields. Matrices print as `+`/`-` rows joined by
//! `/`. Exit status is 0 for a true verdict, 1 for false or nothing found, and
//! 2 for usage and parse errors.

mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arrays::{is_goba, is_gobs};
use crate::asds::{
    asds_from_cocycle, classify, cocycle_from_asds, difference_counts, oqs_asds_report, oqs_from_asds,
    symmetric_difference_check, Classification, SubsetPair,
};
use crate::cocycles::{cocycle_from_array, is_quasi_orthogonal, row_excess, Cocycle};
use crate::error::Error;
use crate::search::{
    brute_force_optimum_with, exact_sqrt, search_asds_with, search_oqs_with, Alphabet, Evidence, FoundObject,
    SearchConfig, MAX_OQS_M,
};
use crate::seqcore::{
    autocorrelation_spectrum, binary_autocorrelation, is_oqs, odd_autocorrelation_spectrum, BinarySeq, QuaternarySeq,
};
use crate::transforms::{array_to_quat, array_to_sequence, quat_to_array, sequence_to_array, GrayPair};

pub use format::{join, Record, HEADER};

/// Environment variable overriding every enumeration budget.
pub const BUDGET_ENV: &str = "OPTSEQ_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "optseq", version, about = "Optimal quaternary sequences and their equivalent objects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Periodic (or with --odd, negaperiodic) autocorrelation spectrum
    Autocorr {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        /// Negaperiodic autocorrelation of a binary sequence
        #[arg(long)]
        odd: bool,
    },
    #[command(subcommand)]
    Verify(Verify),
    #[command(subcommand)]
    Convert(Convert),
    #[command(subcommand)]
    Search(Search),
    /// OQS census for every odd m up to --max-m
    Catalog {
        #[arg(long, default_value_t = 9)]
        max_m: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    Oqs {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    Gobs {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    /// A binary (2,m)-array given as its two rows
    Goba {
        #[arg(allow_hyphen_values = true)]
        row0: String,
        #[arg(allow_hyphen_values = true)]
        row1: String,
    },
    Asds {
        #[command(flatten)]
        pair: PairArgs,
        /// Also require the multiset B − D to be symmetric
        #[arg(long)]
        symmetric: bool,
    },
    Cocycle {
        #[command(flatten)]
        cocycle: CocycleArgs,
    },
}

#[derive(Subcommand, Debug)]
enum Convert {
    OqsToGobs {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    GobsToOqs {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    OqsToAsds {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    AsdsToOqs {
        #[command(flatten)]
        pair: PairArgs,
    },
    OqsToCocycle {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    CocycleToAsds {
        #[command(flatten)]
        cocycle: CocycleArgs,
    },
}

#[derive(Subcommand, Debug)]
enum Search {
    Oqs {
        #[arg(short = 'm')]
        m: usize,
        /// One representative per equivalence class
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    Asds {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long)]
        symmetric: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Least possible max |R(w)| over all sequences of length n
    Optimum {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Quaternary)]
        alphabet: AlphabetArg,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    Binary,
    Quaternary,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(short = 'm')]
    m: usize,
    /// Comma-separated residues
    #[arg(long, value_parser = parse_list, default_value = "")]
    b: Residues,
    #[arg(long, value_parser = parse_list, default_value = "")]
    d: Residues,
}

#[derive(Args, Debug)]
struct CocycleArgs {
    #[arg(short = 'm')]
    m: usize,
    #[arg(long)]
    lambda: bool,
    /// Comma-separated indices i of the factors ∂_i, 2 ≤ i ≤ 2m−1
    #[arg(long, value_parser = parse_list, default_value = "")]
    deltas: Residues,
}

#[derive(Clone, Debug)]
struct Residues(Vec<usize>);

fn parse_list(s: &str) -> Result<Residues, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Residues)
}

/// Outcome of a command before it is turned into an exit status.
enum Failure {
    Usage(String),
    False(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotOqs | Error::NotAsds | Error::Precondition(_) | Error::BudgetExceeded { .. } => {
                Failure::False(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

/// Parses `argv` (program name first), runs it, writes records to `out` and
/// diagnostics to `err`. Returns the exit status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let budget = match std::env::var(BUDGET_ENV) {
        Ok(v) => match v.trim().parse::<u128>() {
            Ok(b) => Some(b),
            Err(_) => {
                let _ = writeln!(err, "error: {BUDGET_ENV} must be a nonnegative integer, got {v:?}");
                return 2;
            }
        },
        Err(_) => None,
    };
    let mut records = Vec::new();
    let outcome = dispatch(cli.command, budget, &mut records);
    let _ = writeln!(out, "{HEADER}");
    for r in &records {
        let _ = writeln!(out, "{r}");
    }
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::False(msg)) => {
            let _ = writeln!(out, "{}", Record::new("error").field("verdict", false).field("reason", &msg));
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}

fn config(jobs: Option<usize>, budget: Option<u128>) -> SearchConfig {
    SearchConfig { jobs, budget }
}

fn dispatch(command: Command, budget: Option<u128>, out: &mut Vec<Record>) -> Outcome {
    match command {
        Command::Autocorr { sequence, odd } => autocorr(&sequence, odd, out),
        Command::Verify(v) => verify(v, out),
        Command::Convert(c) => convert(c, out),
        Command::Search(s) => search(s, budget, out),
        Command::Catalog { max_m, jobs } => catalog(max_m, config(jobs, budget), out),
    }
}

fn is_binary_text(s: &str) -> bool {
    s.chars().all(|c| c == '+' || c == '-')
}

fn parse_binary(s: &str) -> Result<BinarySeq, Failure> {
    Ok(s.parse::<BinarySeq>()?)
}

fn parse_quaternary(s: &str) -> Result<QuaternarySeq, Failure> {
    Ok(s.parse::<QuaternarySeq>()?)
}

fn autocorr(text: &str, odd: bool, out: &mut Vec<Record>) -> Outcome {
    let record = Record::new("autocorr");
    let record = if odd {
        if !is_binary_text(text) {
            return Err(Failure::Usage("--odd takes a binary sequence".into()));
        }
        let phi = parse_binary(text)?;
        record.field("input", &phi).field("mode", "odd").field("spectrum", join(odd_autocorrelation_spectrum(&phi)))
    } else if is_binary_text(text) {
        let phi = parse_binary(text)?;
        record.field("input", &phi).field("mode", "periodic").field("spectrum", join(binary_autocorrelation(&phi)))
    } else {
        let f = parse_quaternary(text)?;
        record.field("input", &f).field("mode", "periodic").field("spectrum", join(autocorrelation_spectrum(&f)))
    };
    out.push(record);
    Ok(true)
}

fn pair_from(args: &PairArgs) -> Result<SubsetPair, Failure> {
    Ok(SubsetPair::new(args.m, &args.b.0, &args.d.0)?)
}

fn cocycle_from(args: &CocycleArgs) -> Result<Cocycle, Failure> {
    Ok(Cocycle::new(args.m, args.lambda, &args.deltas.0)?)
}

fn pair_record(kind: &str, pair: &SubsetPair) -> Record {
    Record::new(kind).field("m", pair.m()).field("b", join(pair.b())).field("d", join(pair.d()))
}

fn cocycle_record(kind: &str, psi: &Cocycle) -> Record {
    let matrix = psi.matrix();
    let qo = is_quasi_orthogonal(psi);
    Record::new(kind)
        .field("m", psi.m())
        .field("lambda", psi.lambda_flag() as u8)
        .field("deltas", join(psi.deltas()))
        .field("verdict", qo)
        .field("row_excess", row_excess(&matrix))
        .field("row_sums", join(matrix.row_sums()))
        .field("matrix", matrix.row_strings().join("/"))
}

fn verify(v: Verify, out: &mut Vec<Record>) -> Outcome {
    match v {
        Verify::Oqs { sequence } => {
            let f = parse_quaternary(&sequence)?;
            let verdict = is_oqs(&f)?;
            out.push(
                Record::new("oqs")
                    .field("input", &f)
                    .field("verdict", verdict)
                    .field("spectrum", join(autocorrelation_spectrum(&f))),
            );
            Ok(verdict)
        }
        Verify::Gobs { sequence } => {
            let phi = parse_binary(&sequence)?;
            let verdict = is_gobs(&phi)?;
            out.push(
                Record::new("gobs")
                    .field("input", &phi)
                    .field("verdict", verdict)
                    .field("spectrum", join(binary_autocorrelation(&phi)))
                    .field("odd_spectrum", join(odd_autocorrelation_spectrum(&phi))),
            );
            Ok(verdict)
        }
        Verify::Goba { row0, row1 } => {
            let pair = GrayPair::new(parse_binary(&row0)?, parse_binary(&row1)?)?;
            let verdict = is_goba(&pair.to_array(), &[true, false])?;
            out.push(
                Record::new("goba")
                    .field("input", format!("{}/{}", pair.row0(), pair.row1()))
                    .field("verdict", verdict),
            );
            Ok(verdict)
        }
        Verify::Asds { pair, symmetric } => {
            let pair = pair_from(&pair)?;
            let class = classify(&pair);
            let sym = symmetric_difference_check(&pair);
            let (class_name, params) = match class {
                Classification::Asds(p) => ("asds", Some(p)),
                Classification::Sds(p) => ("sds", Some(p)),
                Classification::NotAsds => ("none", None),
            };
            let verdict = params.is_some() && (!symmetric || sym);
            let mut rec = pair_record("asds", &pair).field("verdict", verdict).field("class", class_name);
            if let Some(p) = params {
                rec = rec.field("params", p);
            }
            out.push(rec.field("symmetric", sym).field("delta", join(difference_counts(&pair))));
            Ok(verdict)
        }
        Verify::Cocycle { cocycle } => {
            let psi = cocycle_from(&cocycle)?;
            let verdict = is_quasi_orthogonal(&psi);
            out.push(cocycle_record("cocycle", &psi));
            Ok(verdict)
        }
    }
}

fn convert(c: Convert, out: &mut Vec<Record>) -> Outcome {
    match c {
        Convert::OqsToGobs { sequence } => {
            let f = parse_quaternary(&sequence)?;
            let rows = quat_to_array(&f);
            let phi = array_to_sequence(&rows)?;
            out.push(
                Record::new("oqs-to-gobs")
                    .field("input", &f)
                    .field("output", &phi)
                    .field("array", format!("{}/{}", rows.row0(), rows.row1())),
            );
            Ok(true)
        }
        Convert::GobsToOqs { sequence } => {
            let phi = parse_binary(&sequence)?;
            let rows = sequence_to_array(&phi)?;
            let f = array_to_quat(&rows);
            out.push(
                Record::new("gobs-to-oqs")
                    .field("input", &phi)
                    .field("output", &f)
                    .field("array", format!("{}/{}", rows.row0(), rows.row1())),
            );
            Ok(true)
        }
        Convert::OqsToAsds { sequence } => {
            let f = parse_quaternary(&sequence)?;
            let report = oqs_asds_report(&f)?;
            let mut rec = pair_record("oqs-to-asds", &report.pair)
                .field("input", &f)
                .field("verdict", report.verdict())
                .field("complemented", report.complemented.as_str());
            if let Some(p) = report.params {
                rec = rec.field("params", p);
            }
            out.push(
                rec.field("symmetric_before", report.symmetric_before).field("symmetric_after", report.symmetric_after),
            );
            Ok(report.verdict())
        }
        Convert::AsdsToOqs { pair } => {
            let pair = pair_from(&pair)?;
            let f = oqs_from_asds(&pair)?;
            let verdict = is_oqs(&f)?;
            out.push(pair_record("asds-to-oqs", &pair).field("output", &f).field("verdict", verdict));
            Ok(verdict)
        }
        Convert::OqsToCocycle { sequence } => {
            let f = parse_quaternary(&sequence)?;
            let (rows, negated) = quat_to_array(&f).normalized();
            let psi = cocycle_from_array(&rows)?;
            let verdict = is_quasi_orthogonal(&psi);
            out.push(cocycle_record("oqs-to-cocycle", &psi).field("input", &f).field("negated", negated));
            Ok(verdict)
        }
        Convert::CocycleToAsds { cocycle } => {
            let psi = cocycle_from(&cocycle)?;
            let extracted = asds_from_cocycle(&psi)?;
            let back = cocycle_from_asds(&extracted.pair)?;
            debug_assert_eq!(back, psi);
            let mut rec = pair_record("cocycle-to-asds", &extracted.pair).field("verdict", extracted.bridge);
            if let Some(p) = classify(&extracted.pair).params() {
                rec = rec.field("params", p);
            }
            out.push(
                rec.field("symmetric", symmetric_difference_check(&extracted.pair))
                    .field("quasi_orthogonal", is_quasi_orthogonal(&psi)),
            );
            Ok(extracted.bridge)
        }
    }
}

fn search(s: Search, budget: Option<u128>, out: &mut Vec<Record>) -> Outcome {
    match s {
        Search::Oqs { m, canonical, jobs } => {
            let found = search_oqs_with(m, canonical, &config(jobs, budget))?;
            for r in &found {
                if let (FoundObject::Sequence(f), Evidence::Spectrum(spec)) = (&r.object, &r.evidence) {
                    out.push(
                        Record::new("oqs")
                            .field("m", m)
                            .field("sequence", f)
                            .field("canonical", r.canonical)
                            .field("spectrum", join(spec.iter())),
                    );
                }
            }
            out.push(Record::new("summary").field("m", m).field("count", found.len()));
            Ok(!found.is_empty())
        }
        Search::Asds { m, k1, k2, mu, symmetric, jobs } => {
            let found = search_asds_with(m, k1, k2, mu, symmetric, &config(jobs, budget))?;
            for r in &found {
                if let (FoundObject::Pair(p), Some(params)) = (&r.object, r.params) {
                    out.push(
                        pair_record("asds", p)
                            .field("params", params)
                            .field("symmetric", symmetric_difference_check(p)),
                    );
                }
            }
            out.push(Record::new("summary").field("m", m).field("count", found.len()));
            Ok(!found.is_empty())
        }
        Search::Optimum { n, alphabet, jobs } => {
            let alphabet = match alphabet {
                AlphabetArg::Binary => Alphabet::Binary,
                AlphabetArg::Quaternary => Alphabet::Quaternary,
            };
            let sq = brute_force_optimum_with(n, alphabet, &config(jobs, budget))?;
            let mut rec = Record::new("optimum")
                .field("n", n)
                .field("alphabet", format!("{alphabet:?}").to_lowercase())
                .field("max_sq", sq);
            if let Some(r) = exact_sqrt(sq) {
                rec = rec.field("max", r);
            }
            out.push(rec);
            Ok(true)
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n ≥ 2 has a prime factor");
    let mut r = n;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// Existence is known when m is a prime ≡ 1 (mod 4) or 2m − 1 is a prime power.
pub fn predicted_exists(m: usize) -> bool {
    (is_prime(m) && m % 4 == 1) || (m >= 1 && is_prime_power(2 * m - 1))
}

fn catalog(max_m: usize, config: SearchConfig, out: &mut Vec<Record>) -> Outcome {
    if max_m > MAX_OQS_M {
        return Err(Failure::Usage(format!("--max-m must be at most {MAX_OQS_M}")));
    }
    let mut all_found = true;
    for m in (1..=max_m).step_by(2) {
        let found = search_oqs_with(m, false, &config)?;
        let canonical = found.iter().filter(|r| r.canonical).count();
        let mut rec = Record::new("catalog").field("m", m).field("raw", found.len()).field("canonical", canonical);
        let witness = found.first().and_then(|r| match &r.object {
            FoundObject::Sequence(f) => Some(f.clone()),
            FoundObject::Pair(_) => None,
        });
        match &witness {
            Some(f) => {
                rec = rec.field("witness", f);
                if m > 1 {
                    let report = oqs_asds_report(f)?;
                    if let Some(p) = report.params {
                        rec = rec.field("asds", p);
                    }
                }
            }
            None => all_found = false,
        }
        let predicted = if m == 1 { "trivial".to_string() } else { predicted_exists(m).to_string() };
        out.push(rec.field("predicted", predicted));
    }
    Ok(all_found)
}
