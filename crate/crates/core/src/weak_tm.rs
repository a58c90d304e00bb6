//! Deterministic single-tape Turing machines over weak tapes.
//!
//! A weak tape has a word repeated forever to the left of its content and
//! another word repeated forever to the right, instead of a single blank
//! symbol. [`WeakTape`] keeps only a finite buffer; everything outside it is
//! read from the background words, so reads are total.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::span::Span;

/// Index into a machine's alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol(pub u8);

/// Zero-based state index. Displayed one-based, `u1`, `u2`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct State(pub u8);

impl State {
    pub fn name(self) -> String {
        format!("u{}", self.0 + 1)
    }

    pub fn from_name(name: &str) -> Option<State> {
        let n: u8 = name.strip_prefix('u')?.parse().ok()?;
        n.checked_sub(1).map(State)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}", self.0 + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Move {
    pub fn delta(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Right => 1,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Left => "L",
            Move::Right => "R",
        })
    }
}

/// One table entry: in `read_state` reading `read_symbol`, write
/// `write_symbol`, move, and enter `next_state`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransitionRule {
    pub read_state: State,
    pub read_symbol: Symbol,
    pub write_symbol: Symbol,
    pub movement: Move,
    pub next_state: State,
}

impl TransitionRule {
    pub fn new(
        read_state: u8,
        read_symbol: u8,
        write_symbol: u8,
        movement: Move,
        next_state: u8,
    ) -> Self {
        TransitionRule {
            read_state: State(read_state),
            read_symbol: Symbol(read_symbol),
            write_symbol: Symbol(write_symbol),
            movement,
            next_state: State(next_state),
        }
    }

    pub fn fires_on(&self, state: State, symbol: Symbol) -> bool {
        self.read_state == state && self.read_symbol == symbol
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TmError {
    #[error("background words must be nonempty")]
    EmptyBlankWord,
    #[error("rule ({state}, symbol {symbol}) is outside a {states}-state, {symbols}-symbol table")]
    RuleOutOfBounds {
        state: State,
        symbol: u8,
        states: usize,
        symbols: usize,
    },
    #[error("duplicate rule for ({state}, symbol {symbol})")]
    DuplicateRule { state: State, symbol: u8 },
    #[error("no transition for ({state}, symbol {symbol}) at step {step}")]
    UndefinedTransition { state: State, symbol: u8, step: u64 },
    #[error("no matching step within {cap} steps")]
    CapExceeded { cap: u64 },
}

/// A (possibly partial) transition table indexed by state and symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionTable {
    states: usize,
    symbols: usize,
    entries: Vec<Option<TransitionRule>>,
}

impl TransitionTable {
    pub fn from_rules(
        states: usize,
        symbols: usize,
        rules: impl IntoIterator<Item = TransitionRule>,
    ) -> Result<Self, TmError> {
        let mut entries = vec![None; states * symbols];
        for rule in rules {
            for (state, symbol) in [
                (rule.read_state, rule.read_symbol),
                (rule.next_state, rule.write_symbol),
            ] {
                if state.0 as usize >= states || symbol.0 as usize >= symbols {
                    return Err(TmError::RuleOutOfBounds {
                        state,
                        symbol: symbol.0,
                        states,
                        symbols,
                    });
                }
            }
            let slot =
                &mut entries[rule.read_state.0 as usize * symbols + rule.read_symbol.0 as usize];
            if slot.is_some() {
                return Err(TmError::DuplicateRule {
                    state: rule.read_state,
                    symbol: rule.read_symbol.0,
                });
            }
            *slot = Some(rule);
        }
        Ok(TransitionTable {
            states,
            symbols,
            entries,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    pub fn get(&self, state: State, symbol: Symbol) -> Option<TransitionRule> {
        if state.0 as usize >= self.states || symbol.0 as usize >= self.symbols {
            return None;
        }
        self.entries[state.0 as usize * self.symbols + symbol.0 as usize]
    }

    /// Defined rules, state-major.
    pub fn rules(&self) -> impl Iterator<Item = TransitionRule> + '_ {
        self.entries.iter().flatten().copied()
    }

    pub fn undefined(&self) -> Vec<(State, Symbol)> {
        (0..self.states)
            .flat_map(|q| (0..self.symbols).map(move |s| (State(q as u8), Symbol(s as u8))))
            .filter(|&(q, s)| self.get(q, s).is_none())
            .collect()
    }
}

/// A finite region plus difference from the background of a [`WeakTape`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TapeDiff {
    pub span: Span,
    pub symbols: Vec<Symbol>,
}

/// An eventually periodic tape.
///
/// The background is fixed at construction: left of `left_anchor` the tape
/// cycles through `left_word` (the repetition touching the anchor ends at
/// `left_anchor - 1`); from `right_anchor` on it cycles through `right_word`.
/// Cells in between have no background value. The buffer always covers
/// `left_anchor..right_anchor` and grows by whole repetitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakTape {
    left_word: Vec<Symbol>,
    right_word: Vec<Symbol>,
    left_anchor: i64,
    right_anchor: i64,
    origin: i64,
    cells: VecDeque<Symbol>,
}

impl WeakTape {
    /// `center[0]` sits at cell `origin`.
    pub fn new(
        left_word: Vec<Symbol>,
        center: Vec<Symbol>,
        right_word: Vec<Symbol>,
        origin: i64,
    ) -> Result<Self, TmError> {
        if left_word.is_empty() || right_word.is_empty() {
            return Err(TmError::EmptyBlankWord);
        }
        let right_anchor = origin + center.len() as i64;
        Ok(WeakTape {
            left_word,
            right_word,
            left_anchor: origin,
            right_anchor,
            origin,
            cells: center.into(),
        })
    }

    pub fn left_word(&self) -> &[Symbol] {
        &self.left_word
    }

    pub fn right_word(&self) -> &[Symbol] {
        &self.right_word
    }

    fn end(&self) -> i64 {
        self.origin + self.cells.len() as i64
    }

    /// The background value of `index`, or `None` between the anchors.
    pub fn background(&self, index: i64) -> Option<Symbol> {
        if index < self.left_anchor {
            let k = (index - self.left_anchor).rem_euclid(self.left_word.len() as i64);
            Some(self.left_word[k as usize])
        } else if index >= self.right_anchor {
            let k = (index - self.right_anchor).rem_euclid(self.right_word.len() as i64);
            Some(self.right_word[k as usize])
        } else {
            None
        }
    }

    pub fn read(&self, index: i64) -> Symbol {
        if index >= self.origin && index < self.end() {
            self.cells[(index - self.origin) as usize]
        } else {
            self.background(index)
                .expect("buffer covers every cell without a background")
        }
    }

    pub fn window(&self, span: Span) -> Vec<Symbol> {
        span.indices().map(|i| self.read(i)).collect()
    }

    /// The currently buffered cells, if any.
    pub fn materialized(&self) -> Option<Span> {
        Span::new(self.origin, self.end() - 1).ok()
    }

    /// Extends the buffer by whole background repetitions until it covers
    /// `index`.
    pub fn materialize(&mut self, index: i64) {
        while index < self.origin {
            let lw = self.left_word.len() as i64;
            for i in (self.origin - lw..self.origin).rev() {
                let s = self
                    .background(i)
                    .expect("left of the buffer is background");
                self.cells.push_front(s);
            }
            self.origin -= lw;
        }
        while index >= self.end() {
            let rw = self.right_word.len() as i64;
            for i in self.end()..self.end() + rw {
                let s = self
                    .background(i)
                    .expect("right of the buffer is background");
                self.cells.push_back(s);
            }
        }
    }

    pub fn write(&mut self, index: i64, symbol: Symbol) {
        self.materialize(index);
        let k = (index - self.origin) as usize;
        self.cells[k] = symbol;
    }

    /// The smallest span outside which every cell equals its background
    /// value, or `None` when the whole tape is background.
    pub fn diff_from_background(&self) -> Option<TapeDiff> {
        let differs = |i: &i64| self.background(*i) != Some(self.read(*i));
        let mut idx = self.origin..self.end();
        let first = idx.find(differs)?;
        let last = (first..self.end()).rev().find(differs).unwrap_or(first);
        let span = Span { first, last };
        Some(TapeDiff {
            span,
            symbols: self.window(span),
        })
    }
}

/// A machine configuration: state, head position, tape and step counter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmConfiguration {
    pub state: State,
    pub head: i64,
    pub tape: WeakTape,
    pub steps_taken: u64,
}

impl TmConfiguration {
    pub fn new(state: State, head: i64, tape: WeakTape) -> Self {
        TmConfiguration {
            state,
            head,
            tape,
            steps_taken: 0,
        }
    }

    pub fn scanned(&self) -> Symbol {
        self.tape.read(self.head)
    }
}

/// What happened during one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepEvent {
    pub rule: TransitionRule,
    pub head_before: i64,
    pub head_after: i64,
    /// One-based index of this step in the run.
    pub step: u64,
}

/// Performs one computation step in place.
///
/// On an undefined entry the configuration is left untouched.
pub fn step(table: &TransitionTable, config: &mut TmConfiguration) -> Result<StepEvent, TmError> {
    let symbol = config.scanned();
    let rule = table
        .get(config.state, symbol)
        .ok_or(TmError::UndefinedTransition {
            state: config.state,
            symbol: symbol.0,
            step: config.steps_taken + 1,
        })?;
    let head_before = config.head;
    config.tape.write(head_before, rule.write_symbol);
    config.head += rule.movement.delta();
    config.state = rule.next_state;
    config.steps_taken += 1;
    Ok(StepEvent {
        rule,
        head_before,
        head_after: config.head,
        step: config.steps_taken,
    })
}

pub fn run(
    table: &TransitionTable,
    config: &mut TmConfiguration,
    steps: u64,
) -> Result<(), TmError> {
    run_observed(table, config, steps, |_, _| {})
}

/// Like [`run`], calling `observe` after every step.
pub fn run_observed(
    table: &TransitionTable,
    config: &mut TmConfiguration,
    steps: u64,
    mut observe: impl FnMut(&StepEvent, &TmConfiguration),
) -> Result<(), TmError> {
    for _ in 0..steps {
        let event = step(table, config)?;
        observe(&event, config);
    }
    Ok(())
}

/// Steps until `predicate` accepts a step's event, taking at most `cap`
/// steps. Returns the number of steps taken and the matching event.
pub fn run_until(
    table: &TransitionTable,
    config: &mut TmConfiguration,
    mut predicate: impl FnMut(&StepEvent) -> bool,
    cap: u64,
) -> Result<(u64, StepEvent), TmError> {
    for taken in 1..=cap {
        let event = step(table, config)?;
        if predicate(&event) {
            return Ok((taken, event));
        }
    }
    Err(TmError::CapExceeded { cap })
}
