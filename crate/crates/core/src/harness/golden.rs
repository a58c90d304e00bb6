use std::fmt;

use serde::{Deserialize, Serialize};

use super::{HarnessError, Trace, TraceRecord};
use crate::machines::{initial_configuration, machine_spec, MachineId, MachineSpec};
use crate::span::Span;
use crate::weak_tm::{run, TmConfiguration};

const U33_TRACE: &str = include_str!("../../fixtures/trace_u33.json");
const U24_TRACE: &str = include_str!("../../fixtures/trace_u24.json");
const U62_TRACE: &str = include_str!("../../fixtures/trace_u62.json");

/// The reference example run of a machine: every recorded configuration
/// with its cumulative step offset.
pub fn golden_fixture(id: MachineId) -> Result<Trace, HarnessError> {
    let text = match id {
        MachineId::U33 => U33_TRACE,
        MachineId::U24 => U24_TRACE,
        MachineId::U62 => U62_TRACE,
    };
    let trace: Trace = serde_json::from_str(text)?;
    if trace.machine != id {
        return Err(HarnessError::InvalidArgument(format!(
            "fixture for {id} names {}",
            trace.machine
        )));
    }
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DivergenceField {
    State,
    Head,
    Tape { index: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub step: u64,
    pub field: DivergenceField,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.field {
            DivergenceField::State => "state".to_string(),
            DivergenceField::Head => "head".to_string(),
            DivergenceField::Tape { index } => format!("tape[{index}]"),
        };
        write!(
            f,
            "step {}: {what} expected {} got {}",
            self.step, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum GoldenOutcome {
    Pass { configurations: usize },
    Divergence(Divergence),
}

/// Replays `trace` from the canonical start and compares state, head and the
/// recorded tape window at every recorded step.
pub fn check_trace(spec: &MachineSpec, trace: &Trace) -> Result<GoldenOutcome, HarnessError> {
    let mut config = initial_configuration(spec);
    for record in &trace.steps {
        if record.i < config.steps_taken {
            return Err(HarnessError::InvalidArgument(format!(
                "trace step {} is out of order",
                record.i
            )));
        }
        let pending = record.i - config.steps_taken;
        run(&spec.table, &mut config, pending)?;
        if let Some(d) = compare(spec, &config, record) {
            return Ok(GoldenOutcome::Divergence(d));
        }
    }
    Ok(GoldenOutcome::Pass {
        configurations: trace.steps.len(),
    })
}

fn compare(
    spec: &MachineSpec,
    config: &TmConfiguration,
    record: &TraceRecord,
) -> Option<Divergence> {
    let diverge = |field, expected: String, actual: String| Divergence {
        step: record.i,
        field,
        expected,
        actual,
    };
    if config.state.name() != record.state {
        return Some(diverge(
            DivergenceField::State,
            record.state.clone(),
            config.state.name(),
        ));
    }
    if config.head != record.head {
        return Some(diverge(
            DivergenceField::Head,
            record.head.to_string(),
            config.head.to_string(),
        ));
    }
    let n = record.window.glyphs.len() as i64;
    if n == 0 {
        return None;
    }
    let span = Span {
        first: record.window.from,
        last: record.window.from + n - 1,
    };
    span.indices()
        .zip(&record.window.glyphs)
        .find_map(|(index, expected)| {
            let actual = spec.alphabet.plain(config.tape.read(index));
            (actual != expected).then(|| {
                diverge(
                    DivergenceField::Tape { index },
                    expected.clone(),
                    actual.to_string(),
                )
            })
        })
}

pub fn golden_trace_check(id: MachineId) -> Result<GoldenOutcome, HarnessError> {
    check_trace(&machine_spec(id), &golden_fixture(id)?)
}
