//! The `small-overlap` command line.
//!
//! Exit codes: 0 success or equivalent, 1 not equivalent, 2 bad input or an
//! unmet precondition (including not C(4)), 3 undecided at the class cap.
//! Payload goes to stdout, diagnostics to stderr.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bench::{doublings, gst_rows};
use crate::error::Error;
use crate::kambites::{Kambites, OracleBackend, Verdict};
use crate::oracle::{RewriteOracle, DEFAULT_CAP};
use crate::overlap::PieceAnalysis;
use crate::presentation::Presentation;
use crate::report::AnalyzeReport;
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "small-overlap",
    version,
    about = "C(n) analysis, word problem and normal forms for monoid presentations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pieces, X/Y/Z decomposition, C(4) and the greatest n with C(n).
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also list every piece (quadratic; capped).
        #[arg(long)]
        pieces: bool,
    },
    /// Lexicographically least word equivalent to WORD.
    Nf {
        file: PathBuf,
        word: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Whether U and V represent the same element.
    Wp {
        file: PathBuf,
        u: String,
        v: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Every word equivalent to WORD, in lexicographic order.
    Class {
        file: PathBuf,
        word: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Timing benchmarks.
    Bench {
        #[command(subcommand)]
        subject: BenchSubject,
    },
}

#[derive(Debug, Subcommand)]
pub enum BenchSubject {
    /// Generalized suffix tree construction.
    Gst(GstArgs),
}

#[derive(Debug, Args)]
pub struct GstArgs {
    /// Total input sizes: `N`, `A,B,C` or a doubling range `LO..HI`.
    #[arg(long)]
    pub n: String,
    #[arg(long, default_value_t = 4)]
    pub sigma: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    execute(cli, &mut stdout.lock(), &mut stderr.lock())
}

pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Analyze { file, json, pieces } => analyze(&file, json, pieces, out),
        Command::Nf { file, word, cap } => nf(&file, &word, cap, out),
        Command::Wp { file, u, v, cap } => wp(&file, &u, &v, cap, out),
        Command::Class { file, word, cap } => class(&file, &word, cap, out),
        Command::Bench {
            subject: BenchSubject::Gst(args),
        } => bench_gst(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "small-overlap: {message}");
            code
        }
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Undecided { .. }) {
            EXIT_UNDECIDED
        } else {
            EXIT_INPUT
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn load(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    Presentation::parse(&text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn parse_word(p: &Presentation, text: &str) -> Result<Word, Failure> {
    p.word(text).map_err(|c| {
        Failure(
            EXIT_INPUT,
            format!("'{c}' in \"{text}\" is not in the alphabet"),
        )
    })
}

fn analyze(path: &Path, json: bool, pieces: bool, out: &mut dyn Write) -> CmdResult {
    let p = load(path)?;
    let report = AnalyzeReport::new(&p, pieces)?;
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(EXIT_OK)
}

fn kambites(p: &Presentation, cap: usize) -> Result<Kambites, Failure> {
    match Kambites::with_backend(p, OracleBackend::with_cap(p, cap)) {
        Err(Error::NotC4) => Err(Failure(
            EXIT_INPUT,
            "not-C(4): presentation does not satisfy C(4)".into(),
        )),
        other => Ok(other?),
    }
}

fn nf(path: &Path, word: &str, cap: usize, out: &mut dyn Write) -> CmdResult {
    let p = load(path)?;
    let k = kambites(&p, cap)?;
    let w = parse_word(&p, word)?;
    writeln!(out, "{}", p.render(&k.normal_form(&w)?))?;
    Ok(EXIT_OK)
}

fn wp(path: &Path, u: &str, v: &str, cap: usize, out: &mut dyn Write) -> CmdResult {
    let p = load(path)?;
    let (u, v) = (parse_word(&p, u)?, parse_word(&p, v)?);
    let is_c4 = PieceAnalysis::new(&p).is_ok_and(|a| a.is_c4());
    let verdict = if !is_c4 {
        Verdict::NotC4
    } else {
        let k = kambites(&p, cap)?;
        if k.equivalent(&u, &v)? {
            Verdict::Equivalent
        } else {
            Verdict::NotEquivalent
        }
    };
    writeln!(out, "{verdict}")?;
    Ok(match verdict {
        Verdict::Equivalent => EXIT_OK,
        Verdict::NotEquivalent => EXIT_NOT_EQUIVALENT,
        Verdict::NotC4 => EXIT_INPUT,
    })
}

fn class(path: &Path, word: &str, cap: usize, out: &mut dyn Write) -> CmdResult {
    let p = load(path)?;
    let c_index = PieceAnalysis::new(&p)?.c_index();
    if !c_index.satisfies(3) {
        return Err(Failure(
            EXIT_INPUT,
            format!("classes may be infinite: presentation is only C({c_index})"),
        ));
    }
    let w = parse_word(&p, word)?;
    let closure = RewriteOracle::with_cap(&p, cap).enumerate_class(&w);
    for m in &closure.members {
        writeln!(out, "{}", p.render(m))?;
    }
    if closure.truncated {
        writeln!(out, "# truncated at {} members", closure.members.len())?;
        return Ok(EXIT_UNDECIDED);
    }
    Ok(EXIT_OK)
}

/// `N`, `A,B,C` or `LO..HI` (doubling from `LO`).
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad size \"{s}\": {e}"))
    };
    let sizes = if let Some((lo, hi)) = spec.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo == 0 || hi < lo {
            return Err(format!("bad range \"{spec}\""));
        }
        doublings(lo, hi)
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(format!("sizes must be positive: \"{spec}\""));
    }
    Ok(sizes)
}

fn bench_gst(args: &GstArgs, out: &mut dyn Write) -> CmdResult {
    let sizes = parse_sizes(&args.n).map_err(|m| Failure(EXIT_INPUT, m))?;
    if args.sigma == 0 || args.reps == 0 {
        return Err(Failure(
            EXIT_INPUT,
            "--sigma and --reps must be positive".into(),
        ));
    }
    writeln!(out, "{:>10}  {:>12}  {:>6}", "n", "median_ms", "ratio")?;
    for row in gst_rows(&sizes, args.sigma, args.seed, args.reps) {
        let ratio = row
            .ratio
            .map_or_else(|| "-".to_string(), |r| format!("{r:.2}"));
        writeln!(
            out,
            "{:>10}  {:>12.3}  {:>6}",
            row.n,
            row.median.as_secs_f64() * 1e3,
            ratio
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_specs() {
        assert_eq!(
            parse_sizes("131072..1048576").unwrap(),
            vec![131072, 262144, 524288, 1048576]
        );
        assert_eq!(parse_sizes("10,20").unwrap(), vec![10, 20]);
        assert_eq!(parse_sizes("7").unwrap(), vec![7]);
        assert!(parse_sizes("0").is_err());
        assert!(parse_sizes("0..8").is_err());
        assert!(parse_sizes("x").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
