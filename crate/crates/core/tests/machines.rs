use weakutm_core::machines::{
    bold_window, checkpoint_predicate, decode_cells, decode_window, initial_configuration,
    machine_spec, MachineDump, MachineId, Side,
};
use weakutm_core::rule110::{cells, ether_row};
use weakutm_core::weak_tm::{step, Move, State, Symbol, TransitionRule};
use weakutm_core::Span;

fn span(a: i64, b: i64) -> Span {
    Span::new(a, b).unwrap()
}

/// Cumulative step counts of the first `n` checkpoints.
fn checkpoints(id: MachineId, n: usize) -> Vec<u64> {
    let spec = machine_spec(id);
    let mut cfg = initial_configuration(&spec);
    let mut detector = checkpoint_predicate(&spec);
    let mut hits = Vec::new();
    while hits.len() < n {
        let ev = step(&spec.table, &mut cfg).unwrap();
        if detector.observe(&ev) {
            hits.push(ev.step);
        }
    }
    hits
}

#[test]
fn table_sizes() {
    for (id, rules, states, symbols) in [
        (MachineId::U33, 8, 3, 3),
        (MachineId::U24, 8, 2, 4),
        (MachineId::U62, 12, 6, 2),
    ] {
        let spec = machine_spec(id);
        assert_eq!(spec.table.rules().count(), rules, "{id}");
        assert_eq!(
            (spec.table.states(), spec.table.symbols()),
            (states, symbols)
        );
        assert_eq!(spec.alphabet.len(), symbols);
    }
    assert_eq!(
        machine_spec(MachineId::U33).table.undefined(),
        vec![(State(1), Symbol(2))]
    );
    assert!(machine_spec(MachineId::U24).table.undefined().is_empty());
    assert!(machine_spec(MachineId::U62).table.undefined().is_empty());
}

#[test]
fn sample_rules() {
    let u33 = machine_spec(MachineId::U33);
    assert_eq!(
        u33.table.get(State(0), Symbol(0)),
        Some(TransitionRule::new(0, 0, 1, Move::Left, 0))
    );
    let u24 = machine_spec(MachineId::U24);
    let one = u24.alphabet.lookup("1").unwrap();
    let one_bar = u24.alphabet.lookup("1~").unwrap();
    let r = u24.table.get(State(0), one).unwrap();
    assert_eq!(
        (r.write_symbol, r.movement, r.next_state),
        (one_bar, Move::Left, State(1))
    );
    let u62 = machine_spec(MachineId::U62);
    assert_eq!(
        u62.table.get(State(1), Symbol(1)),
        Some(TransitionRule::new(1, 1, 0, Move::Left, 2))
    );
}

#[test]
fn blank_and_turn_words() {
    let words = |id| {
        let s = machine_spec(id);
        let w = |v: &[Symbol]| s.alphabet.plain_word(v);
        [
            w(&s.left_blank),
            w(&s.right_blank),
            w(&s.left_turn_word),
            w(&s.right_turn_word),
        ]
    };
    assert_eq!(words(MachineId::U33), ["001b", "0b110b", "1b0", "0"]);
    assert_eq!(words(MachineId::U24), ["000~1", "01~0~0~01~", "0~1", "0"]);
    assert_eq!(
        words(MachineId::U62),
        ["00000101", "100100001001", "010100", "10"]
    );
}

#[test]
fn blank_words_decode_to_backgrounds() {
    for id in MachineId::ALL {
        let spec = machine_spec(id);
        let tape = initial_configuration(&spec).tape;
        // the repetition just left of the center, and the one just right of it
        assert_eq!(
            decode_cells(&spec, &tape, span(-7, -4), Side::Left).unwrap(),
            cells("0001").unwrap(),
            "{id}"
        );
        assert_eq!(
            decode_cells(&spec, &tape, span(1, 6), Side::Right).unwrap(),
            cells("110011").unwrap(),
            "{id}"
        );
        assert_eq!(
            decode_cells(&spec, &tape, span(7, 12), Side::Right).unwrap(),
            cells("110011").unwrap(),
            "{id}"
        );
    }
}

#[test]
fn decode_window_examples() {
    let spec = machine_spec(MachineId::U33);
    let tape = initial_configuration(&spec).tape;
    assert_eq!(
        spec.alphabet.plain_word(&tape.window(span(-7, -3))),
        "001b0"
    );
    assert_eq!(
        decode_window(&spec, &tape, span(-7, -4), Side::Left).unwrap(),
        cells("0001").unwrap()
    );
    assert_eq!(spec.alphabet.plain_word(&tape.window(span(1, 6))), "0b110b");
    assert_eq!(
        decode_window(&spec, &tape, span(1, 6), Side::Right).unwrap(),
        cells("110011").unwrap()
    );

    let spec = machine_spec(MachineId::U62);
    let tape = initial_configuration(&spec).tape;
    assert_eq!(
        spec.alphabet.plain_word(&tape.window(span(1, 12))),
        "100100001001"
    );
    assert_eq!(
        decode_window(&spec, &tape, span(1, 12), Side::Right).unwrap(),
        cells("110011").unwrap()
    );
}

#[test]
fn initial_configurations() {
    for (id, center) in [
        (MachineId::U33, "0001"),
        (MachineId::U24, "0001"),
        (MachineId::U62, "00000011"),
    ] {
        let spec = machine_spec(id);
        let cfg = initial_configuration(&spec);
        assert_eq!((cfg.state, cfg.head, cfg.steps_taken), (State(0), 0, 0));
        let m = cfg.tape.materialized().unwrap();
        assert_eq!(m.last, 0);
        assert_eq!(spec.alphabet.plain_word(&cfg.tape.window(m)), center);
        let decoded = decode_cells(&spec, &cfg.tape, span(-3, 0), Side::Left).unwrap();
        assert_eq!(decoded, ether_row(0, span(-3, 0)).unwrap(), "{id}");
    }
}

#[test]
fn checkpoint_counts() {
    assert_eq!(checkpoints(MachineId::U33, 3), [14, 44, 92]);
    assert_eq!(checkpoints(MachineId::U24, 2), [14, 44]);
    assert_eq!(checkpoints(MachineId::U62, 1), [29]);
}

#[test]
fn checkpoints_strictly_increase() {
    for id in MachineId::ALL {
        let hits = checkpoints(id, 12);
        assert!(hits.windows(2).all(|w| w[0] < w[1]), "{id}: {hits:?}");
    }
}

#[test]
fn bold_windows() {
    let expect = [
        (MachineId::U33, 1, (-7, 0), false),
        (MachineId::U33, 2, (-11, 4), false),
        (MachineId::U33, 3, (-15, 6), false),
        (MachineId::U33, 4, (-19, 10), true),
        (MachineId::U24, 1, (-7, 0), false),
        (MachineId::U24, 2, (-11, 4), false),
        (MachineId::U24, 3, (-15, 6), true),
        (MachineId::U62, 1, (-7, 0), false),
        (MachineId::U62, 2, (-11, 4), true),
    ];
    for (id, k, (a, b), extrapolated) in expect {
        let w = bold_window(id, k).unwrap();
        assert_eq!(
            (w.cells, w.extrapolated),
            (span(a, b), extrapolated),
            "({id}, {k})"
        );
    }
    for k in 1..30 {
        let (w, next) = (
            bold_window(MachineId::U33, k).unwrap(),
            bold_window(MachineId::U33, k + 1).unwrap(),
        );
        assert_eq!(w.cells.first - next.cells.first, 4);
        assert!(next.cells.last > w.cells.last);
    }
}

#[test]
fn decoding_is_total_at_checkpoints() {
    for id in MachineId::ALL {
        let spec = machine_spec(id);
        let mut cfg = initial_configuration(&spec);
        let mut detector = checkpoint_predicate(&spec);
        let mut k = 0;
        while k < 12 {
            let ev = step(&spec.table, &mut cfg).unwrap();
            if detector.observe(&ev) {
                k += 1;
                let w = bold_window(id, k).unwrap();
                decode_cells(&spec, &cfg.tape, w.cells, Side::Left).unwrap();
            }
        }
    }
}

#[test]
fn dump_round_trips() {
    for id in MachineId::ALL {
        let dump = machine_spec(id).dump();
        let text = serde_json::to_string_pretty(&dump).unwrap();
        let back: MachineDump = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dump);
    }
    let dump = machine_spec(MachineId::U33).dump();
    let json = serde_json::to_value(&dump).unwrap();
    assert_eq!(
        json["rules"][0],
        serde_json::json!({"state": "u1", "read": "0", "write": "1", "move": "L", "next": "u1"})
    );
    assert_eq!(
        json["undefined"],
        serde_json::json!([{"state": "u2", "read": "b"}])
    );
    assert_eq!(json["left_blank"], serde_json::json!(["0", "0", "1", "b"]));
    let u24 = serde_json::to_value(machine_spec(MachineId::U24).dump()).unwrap();
    assert_eq!(
        u24["alphabet"][2],
        serde_json::json!({"glyph": "0~", "unicode": "0\u{305}"})
    );
}

#[test]
fn every_symbol_decodes_somewhere() {
    for id in MachineId::ALL {
        let spec = machine_spec(id);
        let enc = &spec.encoding;
        for s in 0..spec.alphabet.len() as u8 {
            let used = enc
                .left
                .iter()
                .chain(&enc.right)
                .any(|(g, _)| g.contains(&Symbol(s)));
            assert!(used, "{id}: symbol {s}");
        }
    }
}
