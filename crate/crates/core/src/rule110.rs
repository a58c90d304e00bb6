//! Rule 110 evolution of eventually periodic configurations.
//!
//! A [`Rule110Config`] is a bi-infinite row described by a finite center and
//! two background words, one repeated forever to the left and one to the
//! right. Stepping such a row yields another row of the same shape, so the
//! evolution is exact with no truncation at the edges. This is the oracle the
//! Turing machines in [`crate::machines`] are checked against.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::span::Span;

/// A Rule 110 cell state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Zero,
    One,
}

impl Cell {
    pub fn from_bit(bit: u8) -> Option<Cell> {
        match bit {
            0 => Some(Cell::Zero),
            1 => Some(Cell::One),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Cell::Zero => 0,
            Cell::One => 1,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.bit())
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let bit = u8::deserialize(deserializer)?;
        Cell::from_bit(bit)
            .ok_or_else(|| serde::de::Error::custom(format!("cell value {bit} is not 0 or 1")))
    }
}

/// Parses a string of `0`/`1` characters. Anything else is rejected.
pub fn cells(bits: &str) -> Option<Vec<Cell>> {
    bits.bytes()
        .map(|b| match b {
            b'0' => Some(Cell::Zero),
            b'1' => Some(Cell::One),
            _ => None,
        })
        .collect()
}

pub fn cells_to_string(row: &[Cell]) -> String {
    row.iter()
        .map(|c| if *c == Cell::One { '1' } else { '0' })
        .collect()
}

/// The Rule 110 local update: the next state of a cell given its left
/// neighbour, itself and its right neighbour.
pub fn update_cell(left: Cell, center: Cell, right: Cell) -> Cell {
    const RULE: u8 = 110;
    let neighbourhood = (left.bit() << 2) | (center.bit() << 1) | right.bit();
    if (RULE >> neighbourhood) & 1 == 1 {
        Cell::One
    } else {
        Cell::Zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rule110Error {
    #[error("background words must be nonempty")]
    EmptyWord,
    #[error("ether phase {0} is out of range 0..7")]
    InvalidPhase(usize),
}

/// An eventually periodic Rule 110 row.
///
/// Cells left of `origin` cycle through `left_word`, with the repetition that
/// touches the center ending at `origin - 1`. Cells right of the center cycle
/// through `right_word`, with the touching repetition starting right after the
/// center's last cell.
///
/// Equality compares cell contents only (the whole bi-infinite row); the
/// timestep is bookkeeping and is ignored.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Rule110Config {
    left_word: Vec<Cell>,
    center: Vec<Cell>,
    right_word: Vec<Cell>,
    origin: i64,
    timestep: u64,
}

impl Rule110Config {
    pub fn new(
        left_word: Vec<Cell>,
        center: Vec<Cell>,
        right_word: Vec<Cell>,
        origin: i64,
    ) -> Result<Self, Rule110Error> {
        if left_word.is_empty() || right_word.is_empty() {
            return Err(Rule110Error::EmptyWord);
        }
        Ok(Rule110Config {
            left_word,
            center,
            right_word,
            origin,
            timestep: 0,
        })
    }

    /// A spatially periodic row with `word[0]` at cell 0.
    pub fn periodic(word: Vec<Cell>) -> Result<Self, Rule110Error> {
        Self::new(word.clone(), Vec::new(), word, 0)
    }

    pub fn with_timestep(mut self, timestep: u64) -> Self {
        self.timestep = timestep;
        self
    }

    pub fn timestep(&self) -> u64 {
        self.timestep
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn center(&self) -> &[Cell] {
        &self.center
    }

    pub fn left_word(&self) -> &[Cell] {
        &self.left_word
    }

    pub fn right_word(&self) -> &[Cell] {
        &self.right_word
    }

    /// One past the last center cell.
    fn end(&self) -> i64 {
        self.origin + self.center.len() as i64
    }

    pub fn cell(&self, index: i64) -> Cell {
        if index < self.origin {
            let k = (index - self.origin).rem_euclid(self.left_word.len() as i64);
            self.left_word[k as usize]
        } else if index < self.end() {
            self.center[(index - self.origin) as usize]
        } else {
            let k = (index - self.end()).rem_euclid(self.right_word.len() as i64);
            self.right_word[k as usize]
        }
    }

    pub fn window(&self, span: Span) -> Vec<Cell> {
        span.indices().map(|i| self.cell(i)).collect()
    }

    fn updated(&self, index: i64) -> Cell {
        update_cell(self.cell(index - 1), self.cell(index), self.cell(index + 1))
    }

    /// Advances the whole row by one timestep.
    pub fn step(&self) -> Rule110Config {
        let lw = self.left_word.len() as i64;
        let rw = self.right_word.len() as i64;
        // Boundary effects reach at most one cell per side, so one extra word
        // on each side is enough to hold every non-background cell.
        let origin = self.origin - lw;
        let end = self.end() + rw;
        let center = (origin..end).map(|i| self.updated(i)).collect();
        let left_word = (origin - lw..origin).map(|i| self.updated(i)).collect();
        let right_word = (end..end + rw).map(|i| self.updated(i)).collect();
        let mut next = Rule110Config {
            left_word,
            center,
            right_word,
            origin,
            timestep: self.timestep + 1,
        };
        next.normalize();
        next
    }

    pub fn evolve(&self, steps: u64) -> Rule110Config {
        let mut config = self.clone();
        for _ in 0..steps {
            config = config.step();
        }
        config
    }

    /// Trims center cells that agree with the adjacent background, rotating
    /// the background words so every cell keeps its value.
    pub fn normalize(&mut self) {
        let mut drop_front = 0;
        while drop_front < self.center.len() && self.center[drop_front] == self.left_word[0] {
            self.left_word.rotate_left(1);
            drop_front += 1;
        }
        self.center.drain(..drop_front);
        self.origin += drop_front as i64;
        while let Some(&last) = self.center.last() {
            if last != self.right_word[self.right_word.len() - 1] {
                break;
            }
            self.center.pop();
            self.right_word.rotate_right(1);
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl PartialEq for Rule110Config {
    fn eq(&self, other: &Self) -> bool {
        // Left of both origins each row repeats with a period dividing
        // `left_period`, so agreement over one such period beyond the
        // outermost center cells decides the infinite tails too.
        let left_period = lcm(self.left_word.len(), other.left_word.len()) as i64;
        let right_period = lcm(self.right_word.len(), other.right_word.len()) as i64;
        let first = self.origin.min(other.origin) - left_period;
        let end = self.end().max(other.end()) + right_period;
        (first..end).all(|i| self.cell(i) == other.cell(i))
    }
}

impl Eq for Rule110Config {}

/// Rows `0..=steps` of the evolution of `config`, each restricted to `window`.
pub fn spacetime(config: &Rule110Config, steps: u64, window: Span) -> Vec<Vec<Cell>> {
    let mut rows = Vec::with_capacity(steps as usize + 1);
    let mut current = config.clone();
    rows.push(current.window(window));
    for _ in 0..steps {
        current = current.step();
        rows.push(current.window(window));
    }
    rows
}

/// The periodic background ("ether") of Rule 110.
///
/// `rows[k]` holds cells `0..14` of phase `c_k`; phase `c_0` has a `1` at
/// cell 0 followed by `0011011111000`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EtherConstant {
    pub word: [u8; 14],
    pub spatial_period: usize,
    pub temporal_period: usize,
    pub rows: [[u8; 14]; 7],
}

pub const ETHER: EtherConstant = EtherConstant {
    word: [1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0],
    spatial_period: 14,
    temporal_period: 7,
    rows: [
        [1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0],
        [1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1],
        [1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1],
        [0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0],
        [0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0],
        [1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0],
        [1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1],
    ],
};

impl EtherConstant {
    pub fn phase_word(&self, phase: usize) -> Result<Vec<Cell>, Rule110Error> {
        let row = self
            .rows
            .get(phase)
            .ok_or(Rule110Error::InvalidPhase(phase))?;
        Ok(row
            .iter()
            .map(|&b| Cell::from_bit(b).expect("ether rows are binary"))
            .collect())
    }

    /// The full ether row `c_phase` as a configuration, with timestep `phase`.
    pub fn config(&self, phase: usize) -> Result<Rule110Config, Rule110Error> {
        Ok(Rule110Config::periodic(self.phase_word(phase)?)?.with_timestep(phase as u64))
    }
}

/// Ether row `c_phase` restricted to `span`.
pub fn ether_row(phase: usize, span: Span) -> Result<Vec<Cell>, Rule110Error> {
    let word = ETHER.phase_word(phase)?;
    let period = word.len() as i64;
    Ok(span
        .indices()
        .map(|i| word[i.rem_euclid(period) as usize])
        .collect())
}
