//! The `cubefree` command line.
//!
//! [`run`] parses an argument list, calls the library and returns the exit
//! status together with everything that should be printed. Exit status is 0 on
//! success, 1 when a verification or repetition check fails, 2 on usage errors.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::morphisms::{corollary_build, Morphism};
use crate::report::{
    csv_row, BruteResult, BuildReport, CheckReport, ExpandReport, Format, PrefixReport, Render,
    VerifyReport, WitnessReport, CSV_HEADER,
};
use crate::search::{run_search, SearchKind, SearchOptions};
use crate::thue_morse::tm_prefix;
use crate::verification::{brute_check_cubefree, keranen_check};
use crate::witnesses::{lemma1_witnesses, lemma2_witnesses, lemma3_witnesses};
use crate::words::{RepetitionKind, Word};

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "cubefree",
    version,
    about = "Build and verify uniform cubefree binary morphisms; search small uniform morphisms"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    Lemma1,
    Lemma2,
    Lemma3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchTarget {
    Overlapfree,
    Squarefree3,
    CubefreeCensus,
}

impl From<SearchTarget> for SearchKind {
    fn from(t: SearchTarget) -> Self {
        match t {
            SearchTarget::Overlapfree => SearchKind::Overlapfree,
            SearchTarget::Squarefree3 => SearchKind::Squarefree3,
            SearchTarget::CubefreeCensus => SearchKind::CubefreeCensus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Args)]
#[group(required = true, multiple = false)]
pub struct RepetitionFlag {
    #[arg(long)]
    pub cube: bool,
    #[arg(long)]
    pub square: bool,
    #[arg(long)]
    pub overlap: bool,
}

impl RepetitionFlag {
    pub fn kind(self) -> RepetitionKind {
        if self.cube {
            RepetitionKind::Cube
        } else if self.square {
            RepetitionKind::Square
        } else {
            RepetitionKind::Overlap
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print a k-uniform cubefree binary morphism.
    Build { k: usize },
    /// Check a morphism file with the bounded criterion, optionally also by brute force.
    Verify {
        file: PathBuf,
        /// Also check every cubefree word up to this length.
        #[arg(long, value_name = "L")]
        brute: Option<usize>,
    },
    /// Print the witness pairs of the given length.
    Witness { lemma: Lemma, k: usize },
    /// Print a prefix of the Thue–Morse word.
    Tm { n: usize },
    /// Look for a cube, square or overlap in a word.
    Check {
        #[command(flatten)]
        repetition: RepetitionFlag,
        word: String,
    },
    /// Exhaustive search over uniform morphisms of one width.
    Search {
        target: SearchTarget,
        width: usize,
        /// Stop at the first find.
        #[arg(long)]
        first: bool,
        /// Append a census row (width, examined, found, seconds) to this CSV file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Allow widths beyond the default budget.
        #[arg(long)]
        long: bool,
    },
    /// Apply a morphism file to a word, or print a prefix of its fixed point.
    Expand {
        file: PathBuf,
        #[arg(required_unless_present = "iterate", conflicts_with = "iterate")]
        word: Option<String>,
        #[arg(long, num_args = 2, value_names = ["SEED", "N"])]
        iterate: Option<Vec<usize>>,
    },
}

impl Cli {
    /// Canonical argument list (without the program name) that parses back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec!["--format".to_string(), self.format.name().to_string()];
        let s = |v: &dyn ToString| v.to_string();
        match &self.command {
            Command::Build { k } => args.extend(["build".into(), s(k)]),
            Command::Verify { file, brute } => {
                args.extend(["verify".into(), file.display().to_string()]);
                if let Some(l) = brute {
                    args.extend(["--brute".into(), s(l)]);
                }
            }
            Command::Witness { lemma, k } => {
                let name = lemma.to_possible_value().expect("not skipped");
                args.extend(["witness".into(), name.get_name().to_string(), s(k)]);
            }
            Command::Tm { n } => args.extend(["tm".into(), s(n)]),
            Command::Check { repetition, word } => {
                args.extend([
                    "check".into(),
                    format!("--{}", repetition.kind().name()),
                    word.clone(),
                ]);
            }
            Command::Search {
                target,
                width,
                first,
                csv,
                long,
            } => {
                let name = target.to_possible_value().expect("not skipped");
                args.extend(["search".into(), name.get_name().to_string(), s(width)]);
                if *first {
                    args.push("--first".into());
                }
                if let Some(path) = csv {
                    args.extend(["--csv".into(), path.display().to_string()]);
                }
                if *long {
                    args.push("--long".into());
                }
            }
            Command::Expand {
                file,
                word,
                iterate,
            } => {
                args.extend(["expand".into(), file.display().to_string()]);
                if let Some(w) = word {
                    args.push(w.clone());
                }
                if let Some(v) = iterate {
                    args.push("--iterate".into());
                    args.extend(v.iter().map(|x| x.to_string()));
                }
            }
        }
        args
    }
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn checked(passed: bool, stdout: String) -> Self {
        Outcome {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Failure while executing a parsed command; always reported with exit status 2.
#[derive(Debug)]
enum CommandError {
    Library(Error),
    Io(PathBuf, std::io::Error),
    Argument(String),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Library(e)
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Library(e) => write!(f, "{e}"),
            CommandError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CommandError::Argument(msg) => f.write_str(msg),
        }
    }
}

fn read_morphism(path: &PathBuf) -> Result<Morphism, CommandError> {
    let text = fs::read_to_string(path).map_err(|e| CommandError::Io(path.clone(), e))?;
    Ok(Morphism::from_file_json(&text)?)
}

fn append_csv(path: &PathBuf, row: &str) -> Result<(), CommandError> {
    let io = |e| CommandError::Io(path.clone(), e);
    let fresh = !path.exists() || fs::metadata(path).map_err(io)?.len() == 0;
    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io)?;
    if fresh {
        writeln!(file, "{CSV_HEADER}").map_err(io)?;
    }
    writeln!(file, "{row}").map_err(io)
}

fn execute(cli: &Cli) -> Result<Outcome, CommandError> {
    let format = cli.format;
    match &cli.command {
        Command::Build { k } => {
            let morphism = corollary_build(*k)?;
            let keranen = keranen_check(&morphism)?;
            let report = BuildReport {
                width: *k,
                morphism,
                keranen,
            };
            Ok(Outcome::ok(report.render(format)))
        }
        Command::Verify { file, brute } => {
            let h = read_morphism(file)?;
            let keranen = keranen_check(&h)?;
            let brute = match brute {
                Some(0) => return Err(CommandError::Argument("--brute must be at least 1".into())),
                Some(l) => Some(BruteResult {
                    max_len: *l,
                    verdict: brute_check_cubefree(&h, *l)?,
                }),
                None => None,
            };
            let report = VerifyReport::new(h.width(), keranen, brute);
            Ok(Outcome::checked(report.passed, report.render(format)))
        }
        Command::Witness { lemma, k } => {
            let (name, pairs) = match lemma {
                Lemma::Lemma1 => {
                    let (y, z) = lemma1_witnesses(*k)?;
                    ("lemma1", vec![y, z])
                }
                Lemma::Lemma2 => {
                    let (a, b) = lemma2_witnesses(*k)?;
                    ("lemma2", vec![a, b])
                }
                Lemma::Lemma3 => ("lemma3", vec![lemma3_witnesses(*k)?]),
            };
            let report = WitnessReport {
                lemma: name.to_string(),
                k: *k,
                pairs,
            };
            Ok(Outcome::ok(report.render(format)))
        }
        Command::Tm { n } => {
            let report = PrefixReport {
                n: *n,
                prefix: tm_prefix(*n),
            };
            Ok(Outcome::ok(report.render(format)))
        }
        Command::Check { repetition, word } => {
            let word: Word = word.parse()?;
            let kind = repetition.kind();
            let report = CheckReport {
                occurrence: word.find_repetition(kind),
                word,
                kind,
            };
            Ok(Outcome::checked(report.passed(), report.render(format)))
        }
        Command::Search {
            target,
            width,
            first,
            csv,
            long,
        } => {
            let options = SearchOptions {
                stop_at_first: *first,
                allow_over_budget: *long,
            };
            let report = run_search((*target).into(), *width, options)?;
            if let Some(path) = csv {
                append_csv(path, &csv_row(&report))?;
            }
            Ok(Outcome::ok(report.render(format)))
        }
        Command::Expand {
            file,
            word,
            iterate,
        } => {
            let h = read_morphism(file)?;
            let (input, output) = match (word, iterate) {
                (Some(text), _) => {
                    let w = Word::parse(text, h.source_alphabet())?;
                    (text.clone(), h.apply(&w)?)
                }
                (None, Some(v)) => {
                    let seed = u8::try_from(v[0]).map_err(|_| {
                        CommandError::Argument(format!("seed {} out of range", v[0]))
                    })?;
                    (
                        format!("iterate {seed} {}", v[1]),
                        h.iterate_prefix(seed, v[1])?,
                    )
                }
                (None, None) => unreachable!("clap requires a word or --iterate"),
            };
            let report = ExpandReport { input, output };
            Ok(Outcome::ok(report.render(format)))
        }
    }
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("cubefree"))
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::usage(text),
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}
