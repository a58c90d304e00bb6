use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use weakutm_core::harness::{
    all_match, golden_trace_check, profile, record_trace, render_ascii, render_ppm,
    render_trace_text, verify, GoldenOutcome, HarnessError, Trace, Verdict, DEFAULT_CAP,
};
use weakutm_core::machines::{initial_configuration, machine_spec, MachineId};
use weakutm_core::rule110::{cells, cells_to_string, spacetime, Rule110Config, ETHER};
use weakutm_core::weak_tm::TmError;
use weakutm_core::Span;

const EXIT_MISMATCH: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_UNDEFINED: u8 = 3;
const EXIT_USAGE: u8 = 4;

/// Weakly universal Turing machines simulating Rule 110.
#[derive(Parser)]
#[command(name = "weakutm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
    Ppm,
}

#[derive(Subcommand)]
enum Command {
    /// Run a machine from its canonical start
    Run {
        machine: MachineId,
        #[arg(long)]
        steps: u64,
        /// Print every configuration, not just the last
        #[arg(long)]
        trace: bool,
        /// Cells shown either side of the head
        #[arg(long, default_value_t = 12)]
        radius: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare decoded checkpoints with the Rule 110 oracle
    Verify {
        machine: MachineId,
        #[arg(long)]
        timesteps: u32,
        /// Step budget per simulated timestep
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Machine steps spent per simulated timestep
    Profile {
        machine: MachineId,
        #[arg(long)]
        timesteps: u32,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evolve Rule 110 and draw a spacetime diagram
    Rule110 {
        #[arg(long)]
        steps: u64,
        /// Cell range, e.g. -15..12
        #[arg(long, allow_hyphen_values = true)]
        window: Span,
        #[arg(long, value_enum, default_value_t = Render::Ascii)]
        render: Render,
        /// Start from ether row c_PHASE
        #[arg(long, default_value_t = 0, conflicts_with = "center")]
        phase: usize,
        /// Start from a custom configuration: this word at --origin...
        #[arg(long, requires_all = ["left", "right"])]
        center: Option<String>,
        /// ...repeating LEFT to its left...
        #[arg(long, requires = "center")]
        left: Option<String>,
        /// ...and RIGHT to its right
        #[arg(long, requires = "center")]
        right: Option<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        origin: i64,
        /// Write to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print a machine definition as JSON
    Dump { machine: MachineId },
    /// Replay the reference example run of a machine
    Golden {
        machine: MachineId,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Exit(u8, String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        let code = match &e {
            HarnessError::Machine(t) => tm_exit_code(t),
            HarnessError::InvalidArgument(_) => EXIT_USAGE,
            HarnessError::Decode(_) | HarnessError::Fixture(_) => EXIT_MISMATCH,
        };
        Failure::Exit(code, e.to_string())
    }
}

fn tm_exit_code(e: &TmError) -> u8 {
    match e {
        TmError::CapExceeded { .. } => EXIT_CAP,
        TmError::UndefinedTransition { .. } => EXIT_UNDEFINED,
        _ => EXIT_USAGE,
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Exit(EXIT_USAGE, msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Exit(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match command {
        Command::Run {
            machine,
            steps,
            trace,
            radius,
            format,
        } => run(&mut out, machine, steps, trace, radius, format),
        Command::Verify {
            machine,
            timesteps,
            cap,
            format,
        } => {
            let reports = verify(machine, timesteps, cap)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
                Format::Text => {
                    for r in &reports {
                        let note = if r.extrapolated {
                            " (extrapolated window)"
                        } else {
                            ""
                        };
                        match r.verdict {
                            Verdict::Match => writeln!(
                                out,
                                "{machine} c_{} steps={} cells {} match{note}",
                                r.timestep, r.tm_steps, r.window
                            )?,
                            Verdict::Mismatch { first_index } => {
                                writeln!(
                                    out,
                                    "{machine} c_{} steps={} cells {} MISMATCH at {first_index}{note}",
                                    r.timestep, r.tm_steps, r.window
                                )?;
                                writeln!(out, "  decoded {}", cells_to_string(&r.decoded))?;
                                writeln!(out, "  oracle  {}", cells_to_string(&r.oracle))?;
                            }
                        }
                    }
                    let ok = reports
                        .iter()
                        .filter(|r| r.verdict == Verdict::Match)
                        .count();
                    writeln!(out, "{ok}/{} checkpoints match", reports.len())?;
                }
            }
            if all_match(&reports) {
                Ok(())
            } else {
                Err(Failure::Exit(EXIT_MISMATCH, String::new()))
            }
        }
        Command::Profile {
            machine,
            timesteps,
            cap,
            format,
        } => {
            let report = profile(machine, timesteps, cap)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                Format::Text => {
                    writeln!(out, "{:>4} {:>10} {:>12}", "k", "steps", "cumulative")?;
                    for (k, (c, total)) in report
                        .per_timestep
                        .iter()
                        .zip(&report.cumulative)
                        .enumerate()
                    {
                        writeln!(out, "{:>4} {c:>10} {total:>12}", k + 1)?;
                    }
                    let f = report.fit;
                    let sign = if f.intercept < 0.0 { '-' } else { '+' };
                    writeln!(
                        out,
                        "fit: steps = {:.3} k {sign} {:.3}, R^2 = {:.5}",
                        f.slope,
                        f.intercept.abs(),
                        f.r_squared
                    )?;
                }
            }
            Ok(())
        }
        Command::Rule110 {
            steps,
            window,
            render,
            phase,
            center,
            left,
            right,
            origin,
            output,
        } => {
            let start = match center {
                Some(center) => {
                    let word = |w: &str| {
                        cells(w).ok_or_else(|| usage(format!("{w:?} is not a word over 0 and 1")))
                    };
                    let (l, r) = (left.unwrap_or_default(), right.unwrap_or_default());
                    Rule110Config::new(word(&l)?, word(&center)?, word(&r)?, origin)
                        .map_err(|e| usage(e.to_string()))?
                }
                None => ETHER.config(phase).map_err(|e| usage(e.to_string()))?,
            };
            let rows = spacetime(&start, steps, window);
            let bytes = match render {
                Render::Ascii => {
                    let mut text = render_ascii(&rows, Some(window.first));
                    text.push('\n');
                    text.into_bytes()
                }
                Render::Ppm => render_ppm(&rows),
            };
            match output {
                Some(path) => fs::write(path, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(())
        }
        Command::Dump { machine } => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&machine_spec(machine).dump())?
            )?;
            Ok(())
        }
        Command::Golden { machine, format } => {
            let outcome = golden_trace_check(machine)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcome)?)?,
                Format::Text => match &outcome {
                    GoldenOutcome::Pass { configurations } => {
                        writeln!(out, "{machine}: all {configurations} configurations match")?
                    }
                    GoldenOutcome::Divergence(d) => writeln!(out, "{machine}: diverges at {d}")?,
                },
            }
            match outcome {
                GoldenOutcome::Pass { .. } => Ok(()),
                GoldenOutcome::Divergence(_) => Err(Failure::Exit(EXIT_MISMATCH, String::new())),
            }
        }
    }
}

fn run(
    out: &mut impl Write,
    machine: MachineId,
    steps: u64,
    trace: bool,
    radius: i64,
    format: Format,
) -> Result<(), Failure> {
    if radius < 0 {
        return Err(usage("--radius must not be negative"));
    }
    let spec = machine_spec(machine);
    let mut config = initial_configuration(&spec);
    let (mut recorded, outcome) = record_trace(&spec, &mut config, steps, radius);
    if !trace {
        let last = recorded.steps.pop().expect("the start is always recorded");
        recorded = Trace {
            machine,
            steps: vec![last],
        };
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&recorded)?)?,
        Format::Text => write!(out, "{}", render_trace_text(&recorded))?,
    }
    outcome.map_err(|e| Failure::Exit(tm_exit_code(&e), e.to_string()))
}
