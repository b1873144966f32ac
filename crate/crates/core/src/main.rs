use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use flagweyl::verify::{sweep_with_checkpoint, DiagramFamily, SweepCheck, SweepConfig, VerificationReport};
use flagweyl::weyl::{dual_character_with, CharacterOptions};
use flagweyl::{
    key, schubert, Composition, Diagram, Error, PatternGrid, Permutation, DEFAULT_ENUMERATION_CAP,
};

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Dual characters of flagged Weyl modules, Schubert and key polynomials,
/// and bound-checking sweeps.
#[derive(Parser, Debug)]
#[command(name = "flagweyl", version)]
struct CliConfig {
    #[command(subcommand)]
    command: Command,

    /// Maximum number of diagrams C <= D to enumerate per diagram.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    /// Worker threads for `sweep`.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    /// Progress and summaries on standard error.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print chi_D and chi_D(1, ..., 1).
    Chi { diagram: String },
    /// Print rank(D).
    Rank { diagram: String },
    /// Print the number of diagrams C <= D.
    CountBelow { diagram: String },
    /// Print the Schubert polynomial of a permutation, e.g. `31542` or `3,1,5,4,2`.
    Schubert { permutation: String },
    /// Print the key polynomial of a composition, e.g. `3,2,0,1,1`.
    Key { composition: String },
    /// Print the Rothe diagram of a permutation.
    Rothe { permutation: String },
    /// Print the skyline diagram of a composition.
    Skyline { composition: String },
    /// Run a sweep and print (or write) its report.
    Sweep {
        check: CheckName,
        /// `all:N:B`, `rothe:N`, `skyline:P:L` or `@file`.
        family: String,
        /// Pattern files for `zero-one-characterization`.
        #[arg(long, num_args = 1..)]
        patterns: Vec<PathBuf>,
        /// Pattern file for the northwest biconditional of `upper-bound`.
        #[arg(long)]
        northwest_pattern: Option<PathBuf>,
        /// Pattern file for the general biconditional of `upper-bound`.
        #[arg(long)]
        general_pattern: Option<PathBuf>,
        /// Resume from and save progress to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Instances per checkpoint.
        #[arg(long, default_value_t = 256)]
        chunk: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckName {
    LowerBound,
    LowerBoundSupport,
    EqualityIffUnstable,
    ZeroOneImplication,
    ZeroOneCharacterization,
    UpperBound,
    SchubertIdentities,
    Macdonald,
    KeyIdentities,
}

/// Inline column lists, or `@path` naming a grid or JSON file.
fn read_diagram(arg: &str) -> Result<Diagram, Error> {
    let Some(path) = arg.strip_prefix('@') else {
        return Diagram::parse_inline(arg);
    };
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_string(), source })?;
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(&text)?)
    } else {
        Diagram::parse_grid(&text)
    }
}

fn build_check(
    name: CheckName,
    patterns: &[PathBuf],
    northwest: Option<&PathBuf>,
    general: Option<&PathBuf>,
) -> Result<SweepCheck, Error> {
    Ok(match name {
        CheckName::LowerBound => SweepCheck::LowerBound,
        CheckName::LowerBoundSupport => SweepCheck::LowerBoundSupport,
        CheckName::EqualityIffUnstable => SweepCheck::EqualityIffUnstable,
        CheckName::ZeroOneImplication => SweepCheck::ZeroOneImplication,
        CheckName::ZeroOneCharacterization => SweepCheck::ZeroOneCharacterization(
            patterns.iter().map(|p| PatternGrid::load(p)).collect::<Result<_, _>>()?,
        ),
        CheckName::UpperBound => SweepCheck::UpperBound {
            northwest: northwest.map(|p| PatternGrid::load(p)).transpose()?,
            general: general.map(|p| PatternGrid::load(p)).transpose()?,
        },
        CheckName::SchubertIdentities => SweepCheck::SchubertIdentities,
        CheckName::Macdonald => SweepCheck::Macdonald,
        CheckName::KeyIdentities => SweepCheck::KeyIdentities,
    })
}

fn diagram_output(d: &Diagram, json: bool) -> String {
    if json {
        d.to_json()
    } else {
        d.to_inline()
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn run(cli: &CliConfig) -> Result<Output, Error> {
    let opts = CharacterOptions { cap: cli.cap, parallel: false };
    match &cli.command {
        Command::Chi { diagram } => {
            let d = read_diagram(diagram)?;
            let chi = dual_character_with(&d, opts)?;
            let principal = chi.principal_specialization();
            Ok(Output::ok(if cli.json {
                json!({
                    "diagram": d,
                    "polynomial": chi.to_string(),
                    "terms": chi,
                    "principal": principal.to_string(),
                })
                .to_string()
            } else {
                format!("{chi}\nprincipal: {principal}")
            }))
        }
        Command::Rank { diagram } => Ok(Output::ok(read_diagram(diagram)?.rank().to_string())),
        Command::CountBelow { diagram } => Ok(Output::ok(read_diagram(diagram)?.count_below().to_string())),
        Command::Schubert { permutation } => {
            let w: Permutation = permutation.parse()?;
            let s = schubert(&w);
            Ok(Output::ok(if cli.json { serde_json::to_string(&s)? } else { s.to_string() }))
        }
        Command::Key { composition } => {
            let a: Composition = composition.parse()?;
            let k = key(&a);
            Ok(Output::ok(if cli.json { serde_json::to_string(&k)? } else { k.to_string() }))
        }
        Command::Rothe { permutation } => {
            let w: Permutation = permutation.parse()?;
            Ok(Output::ok(diagram_output(&w.rothe(), cli.json)))
        }
        Command::Skyline { composition } => {
            let a: Composition = composition.parse()?;
            Ok(Output::ok(diagram_output(&a.skyline(), cli.json)))
        }
        Command::Sweep { check, family, patterns, northwest_pattern, general_pattern, checkpoint, chunk } => {
            let family: DiagramFamily = family.parse()?;
            let check = build_check(*check, patterns, northwest_pattern.as_ref(), general_pattern.as_ref())?;
            let cfg = SweepConfig { cap: cli.cap, workers: cli.workers as usize, ..Default::default() };
            let report = match checkpoint {
                Some(path) => sweep_with_checkpoint(&check, &family, &cfg, path, *chunk)?,
                None => check.run(&family, &cfg)?,
            };
            if cli.verbose > 0 {
                eprintln!("{report}");
            }
            Ok(Output { text: sweep_text(&report, cli.json), code: sweep_code(&report) })
        }
    }
}

fn sweep_text(report: &VerificationReport, json: bool) -> String {
    if json {
        return report.to_json();
    }
    let mut s = report.to_string();
    for v in &report.violations {
        let kind = match v.severity {
            flagweyl::verify::Severity::Violation => "violation",
            flagweyl::verify::Severity::CandidateCounterexample => "candidate",
        };
        s.push_str(&format!(
            "\n{kind} {} [{}]: {}: lhs {} rhs {}",
            v.instance,
            v.diagram.to_inline(),
            v.property,
            v.lhs,
            v.rhs
        ));
        if let Some(w) = &v.witness {
            s.push_str(&format!(" ({w})"));
        }
    }
    s
}

fn sweep_code(report: &VerificationReport) -> u8 {
    if report.hard_violations().next().is_some() {
        EXIT_VIOLATIONS
    } else if report.truncated {
        EXIT_CAP
    } else {
        0
    }
}

fn main() -> ExitCode {
    let cli = CliConfig::parse();
    match run(&cli) {
        Ok(out) => {
            let mut text = out.text;
            text.push('\n');
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_USAGE,
            })
        }
    }
}
