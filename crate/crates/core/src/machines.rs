//! The three weakly universal machines U(3,3), U(2,4) and U(6,2) as data.
//!
//! Each machine simulates Rule 110 by sweeping its tape right to left and
//! then left to right. Scanning leftwards, the update of a cell mostly
//! depends only on the cell to its right, so the machines carry one cell
//! value in their state. For `011` versus `111` they assume a `1` to the
//! left and come back to fix the cell if they were wrong. Turn words inside
//! the blank words end each sweep. Every sweep deletes the turn word that
//! stopped it, so the simulated region grows by one blank word per side
//! each round.
//!
//! Tape cell `i` holds Rule 110 cell `i` for U(3,3) and U(2,4). U(6,2) uses
//! two tape cells per Rule 110 cell: cell `j` is tape `2j-1, 2j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::rule110::Cell;
use crate::span::Span;
use crate::weak_tm::{
    Move, State, StepEvent, Symbol, TmConfiguration, TransitionRule, TransitionTable, WeakTape,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MachineId {
    U33,
    U24,
    U62,
}

impl MachineId {
    pub const ALL: [MachineId; 3] = [MachineId::U33, MachineId::U24, MachineId::U62];

    pub fn as_str(self) -> &'static str {
        match self {
            MachineId::U33 => "u33",
            MachineId::U24 => "u24",
            MachineId::U62 => "u62",
        }
    }

    /// (states, symbols)
    pub fn size(self) -> (usize, usize) {
        match self {
            MachineId::U33 => (3, 3),
            MachineId::U24 => (2, 4),
            MachineId::U62 => (6, 2),
        }
    }
}

impl fmt::Display for MachineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MachineId {
    type Err = MachineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_lowercase();
        match key.as_str() {
            "u33" => Ok(MachineId::U33),
            "u24" => Ok(MachineId::U24),
            "u62" => Ok(MachineId::U62),
            _ => Err(MachineError::UnknownMachine(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MachineError {
    #[error("unknown machine `{0}` (expected u33, u24 or u62)")]
    UnknownMachine(String),
    #[error("unknown glyph `{0}`")]
    UnknownGlyph(String),
    #[error("tape span {span} is not aligned to {width}-symbol cell groups")]
    UnalignedSpan { span: Span, width: usize },
    #[error("`{glyphs}` at tape index {index} has no {side:?}-side decoding")]
    Undecodable {
        index: i64,
        side: Side,
        glyphs: String,
    },
    #[error("checkpoint ordinals start at 1")]
    InvalidCheckpoint,
}

/// A tape symbol's printed forms: plain text uses a `~` suffix for an
/// overline, unicode uses U+0305 COMBINING OVERLINE.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Glyph {
    pub plain: &'static str,
    pub unicode: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    glyphs: Vec<Glyph>,
}

impl Alphabet {
    fn new(glyphs: &[Glyph]) -> Self {
        Alphabet {
            glyphs: glyphs.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.glyphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glyphs.is_empty()
    }

    pub fn glyphs(&self) -> &[Glyph] {
        &self.glyphs
    }

    pub fn plain(&self, symbol: Symbol) -> &'static str {
        self.glyphs[symbol.0 as usize].plain
    }

    pub fn unicode(&self, symbol: Symbol) -> &'static str {
        self.glyphs[symbol.0 as usize].unicode
    }

    pub fn lookup(&self, glyph: &str) -> Result<Symbol, MachineError> {
        self.glyphs
            .iter()
            .position(|g| g.plain == glyph || g.unicode == glyph)
            .map(|i| Symbol(i as u8))
            .ok_or_else(|| MachineError::UnknownGlyph(glyph.to_string()))
    }

    /// Parses a word such as `"000~1"`; `~` or U+0305 after a glyph marks an
    /// overline.
    pub fn parse_word(&self, word: &str) -> Result<Vec<Symbol>, MachineError> {
        let mut out = Vec::new();
        let mut chars = word.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let mut glyph = c.to_string();
            if let Some(&mark) = chars.peek() {
                if mark == '~' || mark == '\u{305}' {
                    glyph.push('~');
                    chars.next();
                }
            }
            out.push(self.lookup(&glyph)?);
        }
        Ok(out)
    }

    pub fn plain_word(&self, word: &[Symbol]) -> String {
        word.iter().map(|&s| self.plain(s)).collect()
    }

    pub fn unicode_word(&self, word: &[Symbol]) -> String {
        word.iter().map(|&s| self.unicode(s)).collect()
    }
}

/// A positional decoding exception: wherever `pattern` occurs on the tape
/// aligned to cell groups, its groups decode to `cells` instead of through
/// the symbol map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextRule {
    pub pattern: Vec<Symbol>,
    pub cells: Vec<Cell>,
}

/// How tape symbols encode Rule 110 cells on either side of the head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingMap {
    /// Tape symbols per Rule 110 cell.
    pub cell_width: usize,
    pub left: Vec<(Vec<Symbol>, Cell)>,
    pub right: Vec<(Vec<Symbol>, Cell)>,
    /// Left-side exception (the machine's left turn word).
    pub left_context: Option<ContextRule>,
}

impl EncodingMap {
    fn lookup(&self, side: Side, group: &[Symbol]) -> Option<Cell> {
        let map = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        map.iter().find(|(g, _)| g == group).map(|(_, c)| *c)
    }

    /// Tape indices holding Rule 110 cells `cells`.
    pub fn tape_span(&self, cells: Span) -> Span {
        let w = self.cell_width as i64;
        Span {
            first: cells.first * w - (w - 1),
            last: cells.last * w,
        }
    }

    fn is_aligned(&self, span: Span) -> bool {
        let w = self.cell_width as i64;
        (span.first + w - 1).rem_euclid(w) == 0 && span.len().is_multiple_of(self.cell_width)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineSpec {
    pub id: MachineId,
    pub alphabet: Alphabet,
    pub table: TransitionTable,
    pub left_blank: Vec<Symbol>,
    pub right_blank: Vec<Symbol>,
    pub left_turn_word: Vec<Symbol>,
    pub right_turn_word: Vec<Symbol>,
    /// Fires when the right sweep reaches a right turn word. It counts as a
    /// timestep boundary only if the previous step moved right.
    pub turn_rule: TransitionRule,
    pub encoding: EncodingMap,
    /// Initial content ending at the head (tape index 0): Rule 110 cells
    /// -3..0 of the ether row `c_0`.
    pub initial_center: Vec<Symbol>,
}

const fn g(plain: &'static str, unicode: &'static str) -> Glyph {
    Glyph { plain, unicode }
}

const BINARY: [Glyph; 2] = [g("0", "0"), g("1", "1")];
const U33_GLYPHS: [Glyph; 3] = [g("0", "0"), g("1", "1"), g("b", "b")];
const U24_GLYPHS: [Glyph; 4] = [
    g("0", "0"),
    g("1", "1"),
    g("0~", "0\u{305}"),
    g("1~", "1\u{305}"),
];

fn rule(state: u8, read: u8, write: u8, movement: Move, next: u8) -> TransitionRule {
    // tables are written with one-based state numbers
    TransitionRule::new(state - 1, read, write, movement, next - 1)
}

/// Everything that defines one machine: table, blank words, turn words and
/// encoding.
pub fn machine_spec(id: MachineId) -> MachineSpec {
    use Move::{Left as L, Right as R};
    let (alphabet, rules, words, encoding) = match id {
        MachineId::U33 => {
            // symbols: 0, 1, b
            let rules = vec![
                rule(1, 0, 1, L, 1),
                rule(1, 1, 2, L, 2),
                rule(1, 2, 2, L, 3),
                rule(2, 0, 0, R, 1),
                rule(2, 1, 1, L, 2),
                rule(3, 0, 2, L, 1),
                rule(3, 1, 0, R, 3),
                rule(3, 2, 1, R, 3),
            ];
            let a = Alphabet::new(&U33_GLYPHS);
            let encoding = EncodingMap {
                cell_width: 1,
                left: vec![
                    (p(&a, "0"), Cell::Zero),
                    (p(&a, "1"), Cell::One),
                    (p(&a, "b"), Cell::One),
                ],
                right: vec![
                    (p(&a, "1"), Cell::Zero),
                    (p(&a, "0"), Cell::One),
                    (p(&a, "b"), Cell::One),
                ],
                left_context: Some(ContextRule {
                    pattern: p(&a, "1b0"),
                    cells: vec![Cell::Zero, Cell::One, Cell::Zero],
                }),
            };
            (a, rules, ["001b", "0b110b", "1b0", "0", "0001"], encoding)
        }
        MachineId::U24 => {
            // symbols: 0, 1, 0~, 1~
            let rules = vec![
                rule(1, 0, 2, L, 1),
                rule(1, 1, 3, L, 2),
                rule(1, 2, 3, L, 1),
                rule(1, 3, 3, L, 1),
                rule(2, 0, 3, R, 1),
                rule(2, 1, 2, L, 2),
                rule(2, 2, 0, R, 2),
                rule(2, 3, 1, R, 2),
            ];
            let a = Alphabet::new(&U24_GLYPHS);
            let encoding = EncodingMap {
                cell_width: 1,
                left: vec![
                    (p(&a, "0"), Cell::Zero),
                    (p(&a, "0~"), Cell::Zero),
                    (p(&a, "1"), Cell::One),
                    (p(&a, "1~"), Cell::One),
                ],
                right: vec![
                    (p(&a, "0~"), Cell::Zero),
                    (p(&a, "1~"), Cell::One),
                    (p(&a, "0"), Cell::One),
                ],
                left_context: None,
            };
            (
                a,
                rules,
                ["000~1", "01~0~0~01~", "0~1", "0", "0001"],
                encoding,
            )
        }
        MachineId::U62 => {
            let rules = vec![
                rule(1, 0, 0, L, 1),
                rule(1, 1, 1, L, 2),
                rule(2, 0, 0, L, 6),
                rule(2, 1, 0, L, 3),
                rule(3, 0, 0, R, 2),
                rule(3, 1, 1, L, 3),
                rule(4, 0, 1, R, 5),
                rule(4, 1, 0, R, 6),
                rule(5, 0, 1, L, 4),
                rule(5, 1, 1, R, 4),
                rule(6, 0, 1, L, 1),
                rule(6, 1, 0, R, 4),
            ];
            let a = Alphabet::new(&BINARY);
            let encoding = EncodingMap {
                cell_width: 2,
                left: vec![(p(&a, "00"), Cell::Zero), (p(&a, "11"), Cell::One)],
                right: vec![
                    (p(&a, "00"), Cell::Zero),
                    (p(&a, "01"), Cell::One),
                    (p(&a, "10"), Cell::One),
                ],
                left_context: Some(ContextRule {
                    pattern: p(&a, "010100"),
                    cells: vec![Cell::Zero, Cell::One, Cell::Zero],
                }),
            };
            (
                a,
                rules,
                ["00000101", "100100001001", "010100", "10", "00000011"],
                encoding,
            )
        }
    };
    let (states, symbols) = id.size();
    let table = TransitionTable::from_rules(states, symbols, rules)
        .expect("built-in tables are well formed");
    let turn_rule = match id {
        MachineId::U33 => table.get(State(2), Symbol(0)),
        MachineId::U24 => table.get(State(1), Symbol(0)),
        MachineId::U62 => table.get(State(5), Symbol(0)),
    }
    .expect("turn rule is defined");
    let [left_blank, right_blank, left_turn, right_turn, center] = words.map(|w| p(&alphabet, w));
    MachineSpec {
        id,
        alphabet,
        table,
        left_blank,
        right_blank,
        left_turn_word: left_turn,
        right_turn_word: right_turn,
        turn_rule,
        encoding,
        initial_center: center,
    }
}

fn p(alphabet: &Alphabet, word: &str) -> Vec<Symbol> {
    alphabet
        .parse_word(word)
        .expect("built-in words use the machine's alphabet")
}

/// The canonical start: ether row `c_0` encoded with the head on Rule 110
/// cell 0 (the last symbol of the initial center), in state `u1`.
pub fn initial_configuration(spec: &MachineSpec) -> TmConfiguration {
    let origin = 1 - spec.initial_center.len() as i64;
    let tape = WeakTape::new(
        spec.left_blank.clone(),
        spec.initial_center.clone(),
        spec.right_blank.clone(),
        origin,
    )
    .expect("blank words are nonempty");
    TmConfiguration::new(State(0), 0, tape)
}

/// Decodes the tape symbols in `span` (tape indices) to Rule 110 cells
/// using the given side's encoding.
///
/// The left-side context exception looks past the span's edges, so a turn
/// word straddling the boundary still decodes correctly.
pub fn decode_window(
    spec: &MachineSpec,
    tape: &WeakTape,
    span: Span,
    side: Side,
) -> Result<Vec<Cell>, MachineError> {
    let enc = &spec.encoding;
    let width = enc.cell_width as i64;
    if !enc.is_aligned(span) {
        return Err(MachineError::UnalignedSpan {
            span,
            width: enc.cell_width,
        });
    }
    let context = match side {
        Side::Left => enc.left_context.as_ref(),
        Side::Right => None,
    };
    let mut out = Vec::with_capacity(span.len() / enc.cell_width);
    let mut at = span.first;
    while at <= span.last {
        let group = tape.window(Span {
            first: at,
            last: at + width - 1,
        });
        let in_context = context.and_then(|rule| {
            (0..rule.cells.len()).find_map(|j| {
                let start = at - j as i64 * width;
                let seen = tape.window(Span {
                    first: start,
                    last: start + rule.pattern.len() as i64 - 1,
                });
                (seen == rule.pattern).then_some(rule.cells[j])
            })
        });
        let cell = match in_context {
            Some(c) => c,
            None => enc
                .lookup(side, &group)
                .ok_or_else(|| MachineError::Undecodable {
                    index: at,
                    side,
                    glyphs: spec.alphabet.plain_word(&group),
                })?,
        };
        out.push(cell);
        at += width;
    }
    Ok(out)
}

/// [`decode_window`] addressed by Rule 110 cell indices.
pub fn decode_cells(
    spec: &MachineSpec,
    tape: &WeakTape,
    cells: Span,
    side: Side,
) -> Result<Vec<Cell>, MachineError> {
    decode_window(spec, tape, spec.encoding.tape_span(cells), side)
}

/// Detects the steps that complete a simulated Rule 110 timestep: the
/// machine's turn rule firing right after a move to the right, i.e. at the
/// end of a right sweep.
///
/// The same rule can fire during a left sweep (U(3,3) does so at step 4),
/// which is why the previous move is tracked. Feed it every step of a run,
/// in order.
#[derive(Debug, Clone)]
pub struct CheckpointDetector {
    turn_state: State,
    turn_symbol: Symbol,
    last_move: Option<Move>,
}

impl CheckpointDetector {
    pub fn observe(&mut self, event: &StepEvent) -> bool {
        let hit = event.rule.fires_on(self.turn_state, self.turn_symbol)
            && self.last_move == Some(Move::Right);
        self.last_move = Some(event.rule.movement);
        hit
    }
}

pub fn checkpoint_predicate(spec: &MachineSpec) -> CheckpointDetector {
    CheckpointDetector {
        turn_state: spec.turn_rule.read_state,
        turn_symbol: spec.turn_rule.read_symbol,
        last_move: None,
    }
}

/// The Rule 110 cells compared at checkpoint `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoldWindow {
    pub cells: Span,
    /// True past the checkpoints covered by the reference traces.
    pub extrapolated: bool,
}

/// After `k` timesteps the left edge has advanced `k` left blank words (4
/// cells each). The right edge sits just before the `k`-th right turn symbol.
/// The right blank encodes `110011` with turn points after its 4th and 6th
/// cells, so the edge advances by 4, then 2.
pub fn bold_window(id: MachineId, k: u32) -> Result<BoldWindow, MachineError> {
    if k == 0 {
        return Err(MachineError::InvalidCheckpoint);
    }
    let k64 = k as i64;
    let first = -3 - 4 * k64;
    let last = 3 * k64 - 3 + if k.is_multiple_of(2) { 1 } else { 0 };
    let shown = match id {
        MachineId::U33 => 3,
        MachineId::U24 => 2,
        MachineId::U62 => 1,
    };
    Ok(BoldWindow {
        cells: Span { first, last },
        extrapolated: k > shown,
    })
}

/// JSON dump of a machine definition.
///
/// Glyphs are plain-text forms: `0`, `1`, `b`, and `0~`/`1~` for the
/// overlined symbols of U(2,4); `alphabet` lists the unicode rendering of
/// each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineDump {
    pub machine: MachineId,
    pub states: Vec<String>,
    pub alphabet: Vec<GlyphDump>,
    pub rules: Vec<RuleDump>,
    pub undefined: Vec<UndefinedDump>,
    pub left_blank: Vec<String>,
    pub right_blank: Vec<String>,
    pub left_turn_word: Vec<String>,
    pub right_turn_word: Vec<String>,
    pub turn_rule: RuleDump,
    pub cell_width: usize,
    pub left_decode: Vec<DecodeDump>,
    pub right_decode: Vec<DecodeDump>,
    pub left_context: Option<DecodeContextDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlyphDump {
    pub glyph: String,
    pub unicode: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleDump {
    pub state: String,
    pub read: String,
    pub write: String,
    #[serde(rename = "move")]
    pub movement: Move,
    pub next: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndefinedDump {
    pub state: String,
    pub read: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeDump {
    pub symbols: Vec<String>,
    pub cell: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeContextDump {
    pub pattern: Vec<String>,
    pub cells: Vec<Cell>,
}

impl MachineSpec {
    fn glyphs(&self, word: &[Symbol]) -> Vec<String> {
        word.iter()
            .map(|&s| self.alphabet.plain(s).to_string())
            .collect()
    }

    fn rule_dump(&self, r: &TransitionRule) -> RuleDump {
        RuleDump {
            state: r.read_state.name(),
            read: self.alphabet.plain(r.read_symbol).to_string(),
            write: self.alphabet.plain(r.write_symbol).to_string(),
            movement: r.movement,
            next: r.next_state.name(),
        }
    }

    pub fn dump(&self) -> MachineDump {
        let decode = |map: &[(Vec<Symbol>, Cell)]| {
            map.iter()
                .map(|(g, c)| DecodeDump {
                    symbols: self.glyphs(g),
                    cell: *c,
                })
                .collect()
        };
        MachineDump {
            machine: self.id,
            states: (0..self.table.states())
                .map(|q| State(q as u8).name())
                .collect(),
            alphabet: self
                .alphabet
                .glyphs()
                .iter()
                .map(|g| GlyphDump {
                    glyph: g.plain.to_string(),
                    unicode: g.unicode.to_string(),
                })
                .collect(),
            rules: self.table.rules().map(|r| self.rule_dump(&r)).collect(),
            undefined: self
                .table
                .undefined()
                .into_iter()
                .map(|(q, s)| UndefinedDump {
                    state: q.name(),
                    read: self.alphabet.plain(s).to_string(),
                })
                .collect(),
            left_blank: self.glyphs(&self.left_blank),
            right_blank: self.glyphs(&self.right_blank),
            left_turn_word: self.glyphs(&self.left_turn_word),
            right_turn_word: self.glyphs(&self.right_turn_word),
            turn_rule: self.rule_dump(&self.turn_rule),
            cell_width: self.encoding.cell_width,
            left_decode: decode(&self.encoding.left),
            right_decode: decode(&self.encoding.right),
            left_context: self
                .encoding
                .left_context
                .as_ref()
                .map(|c| DecodeContextDump {
                    pattern: self.glyphs(&c.pattern),
                    cells: c.cells.clone(),
                }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule110::cells;

    #[test]
    fn parse_ids() {
        assert_eq!("u33".parse::<MachineId>().unwrap(), MachineId::U33);
        assert_eq!("U(6,2)".parse::<MachineId>().unwrap(), MachineId::U62);
        assert!(matches!(
            "u44".parse::<MachineId>(),
            Err(MachineError::UnknownMachine(_))
        ));
    }

    #[test]
    fn overline_parsing() {
        let spec = machine_spec(MachineId::U24);
        let plain = spec.alphabet.parse_word("000~1").unwrap();
        let uni = spec.alphabet.parse_word("000\u{305}1").unwrap();
        assert_eq!(plain, uni);
        assert_eq!(plain, vec![Symbol(0), Symbol(0), Symbol(2), Symbol(1)]);
        assert_eq!(spec.alphabet.unicode_word(&plain), "000\u{305}1");
        assert!(matches!(
            spec.alphabet.parse_word("0b"),
            Err(MachineError::UnknownGlyph(_))
        ));
    }

    #[test]
    fn unaligned_u62_span() {
        let spec = machine_spec(MachineId::U62);
        let cfg = initial_configuration(&spec);
        let err =
            decode_window(&spec, &cfg.tape, Span { first: -6, last: 0 }, Side::Left).unwrap_err();
        assert!(matches!(err, MachineError::UnalignedSpan { width: 2, .. }));
        let err = decode_window(
            &spec,
            &cfg.tape,
            Span {
                first: -6,
                last: -5,
            },
            Side::Left,
        )
        .unwrap_err();
        assert!(matches!(err, MachineError::UnalignedSpan { .. }));
    }

    #[test]
    fn undecodable_symbol() {
        let spec = machine_spec(MachineId::U24);
        let cfg = initial_configuration(&spec);
        // plain 1 has no right-side meaning
        let tape = WeakTape::new(
            spec.left_blank.clone(),
            p(&spec.alphabet, "1"),
            spec.right_blank.clone(),
            3,
        )
        .unwrap();
        let err = decode_window(&spec, &tape, Span::single(3), Side::Right).unwrap_err();
        assert_eq!(
            err,
            MachineError::Undecodable {
                index: 3,
                side: Side::Right,
                glyphs: "1".into()
            }
        );
        assert!(decode_window(&spec, &cfg.tape, Span::single(0), Side::Left).is_ok());
    }

    #[test]
    fn context_straddling_window_edge() {
        // "1" whose "b0" lies outside the window still decodes as 0
        let spec = machine_spec(MachineId::U33);
        let cfg = initial_configuration(&spec);
        assert_eq!(
            decode_window(&spec, &cfg.tape, Span::single(-5), Side::Left).unwrap(),
            cells("0").unwrap()
        );
        // u62: second pair of a turn word
        let spec = machine_spec(MachineId::U62);
        let cfg = initial_configuration(&spec);
        let got = decode_cells(&spec, &cfg.tape, Span::single(-4), Side::Left).unwrap();
        assert_eq!(got, cells("1").unwrap());
    }

    #[test]
    fn bold_window_zero_rejected() {
        assert_eq!(
            bold_window(MachineId::U33, 0),
            Err(MachineError::InvalidCheckpoint)
        );
    }

    #[test]
    fn tape_span_of_cells() {
        let enc = machine_spec(MachineId::U62).encoding;
        assert_eq!(
            enc.tape_span(Span { first: -3, last: 0 }),
            Span { first: -7, last: 0 }
        );
        let enc = machine_spec(MachineId::U33).encoding;
        assert_eq!(
            enc.tape_span(Span { first: -7, last: 0 }),
            Span { first: -7, last: 0 }
        );
    }
}
