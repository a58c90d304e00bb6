use serde::{Deserialize, Serialize};

use crate::machines::{MachineId, MachineSpec};
use crate::span::Span;
use crate::weak_tm::{step, TmConfiguration, TmError};

/// A run of a machine as a list of snapshots. Glyphs use the plain-text
/// forms (`0~` for an overlined zero).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub machine: MachineId,
    pub steps: Vec<TraceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    /// Cumulative step count.
    pub i: u64,
    pub state: String,
    pub head: i64,
    pub window: GlyphWindow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlyphWindow {
    pub from: i64,
    pub glyphs: Vec<String>,
}

impl TraceRecord {
    pub fn capture(spec: &MachineSpec, config: &TmConfiguration, window: Span) -> Self {
        TraceRecord {
            i: config.steps_taken,
            state: config.state.name(),
            head: config.head,
            window: GlyphWindow {
                from: window.first,
                glyphs: config
                    .tape
                    .window(window)
                    .iter()
                    .map(|&s| spec.alphabet.plain(s).to_string())
                    .collect(),
            },
        }
    }
}

/// Records the configuration before the run and after each of `steps`
/// steps, showing `radius` cells either side of the head.
///
/// On an undefined transition the records made so far are returned with the
/// error.
pub fn record_trace(
    spec: &MachineSpec,
    config: &mut TmConfiguration,
    steps: u64,
    radius: i64,
) -> (Trace, Result<(), TmError>) {
    let around = |c: &TmConfiguration| Span {
        first: c.head - radius,
        last: c.head + radius,
    };
    let mut records = vec![TraceRecord::capture(spec, config, around(config))];
    let mut outcome = Ok(());
    for _ in 0..steps {
        if let Err(e) = step(&spec.table, config) {
            outcome = Err(e);
            break;
        }
        records.push(TraceRecord::capture(spec, config, around(config)));
    }
    (
        Trace {
            machine: spec.id,
            steps: records,
        },
        outcome,
    )
}
