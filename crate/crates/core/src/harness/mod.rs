//! Cross-validation of the machines against the Rule 110 oracle, plus the
//! report, trace and rendering formats used by the command-line tool.

mod golden;
mod profile;
mod render;
mod trace;
mod verify;

pub use golden::{
    check_trace, golden_fixture, golden_trace_check, Divergence, DivergenceField, GoldenOutcome,
};
pub use profile::{profile, LinearFit, ProfileReport};
pub use render::{render_ascii, render_ppm, render_trace_text};
pub use trace::{record_trace, GlyphWindow, Trace, TraceRecord};
pub use verify::{all_match, verify, CheckpointReport, CheckpointRunner, Verdict};

use crate::machines::MachineError;
use crate::weak_tm::TmError;

/// Default step budget for one simulated Rule 110 timestep.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Machine(#[from] TmError),
    #[error(transparent)]
    Decode(#[from] MachineError),
    #[error("malformed trace fixture: {0}")]
    Fixture(#[from] serde_json::Error),
    #[error("{0}")]
    InvalidArgument(String),
}
