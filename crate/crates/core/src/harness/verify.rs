use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::machines::{
    bold_window, checkpoint_predicate, decode_cells, initial_configuration, machine_spec,
    CheckpointDetector, MachineId, MachineSpec, Side,
};
use crate::rule110::{Cell, Rule110Config, ETHER};
use crate::span::Span;
use crate::weak_tm::{run_until, TmConfiguration, TmError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch { first_index: i64 },
}

/// The decoded tape compared with the oracle at one checkpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointReport {
    pub machine: MachineId,
    pub timestep: u32,
    /// Cumulative machine steps when the checkpoint fired.
    pub tm_steps: u64,
    pub window: Span,
    pub extrapolated: bool,
    pub decoded: Vec<Cell>,
    pub oracle: Vec<Cell>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Runs a machine from its canonical start one simulated timestep at a time.
pub struct CheckpointRunner {
    spec: MachineSpec,
    config: TmConfiguration,
    detector: CheckpointDetector,
    timestep: u32,
}

impl CheckpointRunner {
    pub fn new(id: MachineId) -> Self {
        let spec = machine_spec(id);
        let config = initial_configuration(&spec);
        let detector = checkpoint_predicate(&spec);
        CheckpointRunner {
            spec,
            config,
            detector,
            timestep: 0,
        }
    }

    pub fn spec(&self) -> &MachineSpec {
        &self.spec
    }

    pub fn config(&self) -> &TmConfiguration {
        &self.config
    }

    /// Timesteps completed so far.
    pub fn timestep(&self) -> u32 {
        self.timestep
    }

    /// Runs to the next checkpoint and returns the steps it took.
    pub fn advance(&mut self, cap: u64) -> Result<u64, TmError> {
        let detector = &mut self.detector;
        let (taken, _) = run_until(
            &self.spec.table,
            &mut self.config,
            |e| detector.observe(e),
            cap,
        )?;
        self.timestep += 1;
        Ok(taken)
    }
}

/// Runs `id` through `timesteps` checkpoints, comparing the decoded bold
/// window at checkpoint `j` with ether row `c_j`.
///
/// A mismatch is reported in the verdict; errors are reserved for runs that
/// cannot reach a checkpoint or produce undecodable tape.
pub fn verify(
    id: MachineId,
    timesteps: u32,
    cap: u64,
) -> Result<Vec<CheckpointReport>, HarnessError> {
    if timesteps == 0 || cap == 0 {
        return Err(HarnessError::InvalidArgument(
            "timesteps and cap must be positive".into(),
        ));
    }
    let mut runner = CheckpointRunner::new(id);
    let mut oracle = ETHER.config(0).expect("phase 0 exists");
    let mut reports = Vec::with_capacity(timesteps as usize);
    for _ in 0..timesteps {
        runner.advance(cap)?;
        oracle = oracle.step();
        reports.push(compare(&runner, &oracle)?);
    }
    Ok(reports)
}

fn compare(
    runner: &CheckpointRunner,
    oracle: &Rule110Config,
) -> Result<CheckpointReport, HarnessError> {
    let k = runner.timestep();
    let bold = bold_window(runner.spec.id, k)?;
    let decoded = decode_cells(&runner.spec, &runner.config.tape, bold.cells, Side::Left)?;
    let expected = oracle.window(bold.cells);
    let verdict = match decoded.iter().zip(&expected).position(|(a, b)| a != b) {
        None => Verdict::Match,
        Some(offset) => Verdict::Mismatch {
            first_index: bold.cells.first + offset as i64,
        },
    };
    Ok(CheckpointReport {
        machine: runner.spec.id,
        timestep: k,
        tm_steps: runner.config.steps_taken,
        window: bold.cells,
        extrapolated: bold.extrapolated,
        decoded,
        oracle: expected,
        verdict,
    })
}

pub fn all_match(reports: &[CheckpointReport]) -> bool {
    reports.iter().all(|r| r.verdict == Verdict::Match)
}
