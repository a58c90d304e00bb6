//! Simulators for three small weakly universal Turing machines, U(3,3),
//! U(2,4) and U(6,2), which simulate the Rule 110 cellular automaton.
//!
//! - [`rule110`]: exact evolution of eventually periodic Rule 110 rows,
//!   including the periodic ether background.
//! - [`weak_tm`]: a Turing machine engine over tapes with a repeated blank
//!   word on each side.
//! - [`machines`]: the three machines, their tape encodings and checkpoint
//!   detection.
//! - [`harness`]: checks each machine's decoded tape against Rule 110 at
//!   every simulated timestep, replays the reference traces, and profiles
//!   step counts.

pub mod harness;
pub mod machines;
pub mod rule110;
pub mod span;
pub mod weak_tm;

pub use machines::{MachineId, MachineSpec, Side};
pub use rule110::{Cell, Rule110Config, ETHER};
pub use span::Span;
pub use weak_tm::{State, StepEvent, Symbol, TmConfiguration, TmError, TransitionRule, WeakTape};
