use std::process::{Command, Output};

use serde_json::Value;

fn weakutm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakutm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn verify_all_match_exits_zero() {
    let o = weakutm(&["verify", "u33", "--timesteps", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("c_3 steps=92 cells -15..6 match"), "{text}");
    assert!(text.ends_with("3/3 checkpoints match\n"));
}

#[test]
fn verify_json() {
    let o = weakutm(&["verify", "u24", "--timesteps", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["tm_steps"], 44);
    assert_eq!(reports[1]["verdict"], "match");
    assert_eq!(reports[1]["machine"], "u24");
}

#[test]
fn cap_exceeded_exits_two() {
    let o = weakutm(&["verify", "u62", "--timesteps", "1", "--cap", "28"]);
    assert_eq!(o.status.code(), Some(2));
    let o = weakutm(&["verify", "u62", "--timesteps", "1", "--cap", "29"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_four() {
    for args in [
        &["verify", "u44", "--timesteps", "1"][..],
        &["verify", "u33"],
        &["verify", "u33", "--timesteps", "0"],
        &["profile", "u33", "--timesteps", "1"],
        &["rule110", "--steps", "2", "--window", "5..1"],
        &[
            "rule110", "--steps", "2", "--window", "0..3", "--phase", "7",
        ],
        &["bogus"],
    ] {
        assert_eq!(weakutm(args).status.code(), Some(4), "{args:?}");
    }
    assert_eq!(weakutm(&["--help"]).status.code(), Some(0));
}

#[test]
fn run_text_and_trace() {
    let o = weakutm(&["run", "u33", "--steps", "1", "--radius", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).split_whitespace().collect::<Vec<_>>(),
        ["1", "u2", "-1", "00[0]b0"]
    );

    let o = weakutm(&["run", "u24", "--steps", "6", "--trace", "--format", "json"]);
    let v = json(&o);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 7);
    assert_eq!(steps[6]["state"], "u1");
    assert_eq!(steps[6]["head"], -4);
    assert_eq!(steps[6]["window"]["from"], -16);
}

#[test]
fn profile_counts() {
    let o = weakutm(&["profile", "u33", "--timesteps", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["per_timestep"], serde_json::json!([14, 30]));
    let text = stdout(&weakutm(&["profile", "u24", "--timesteps", "3"]));
    assert!(text.contains("R^2"), "{text}");
}

#[test]
fn rule110_ascii_and_ppm() {
    let o = weakutm(&["rule110", "--steps", "6", "--window", "-15..12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "leftmost cell: -15");
    assert_eq!(lines[1], ".#..##.#####...#..##.#####..");
    assert_eq!(lines.len(), 8);

    let o = weakutm(&[
        "rule110", "--steps", "1", "--window", "0..4", "--render", "ppm",
    ]);
    assert!(o.stdout.starts_with(b"P6\n5 2\n255\n"));
    assert_eq!(o.stdout.len(), b"P6\n5 2\n255\n".len() + 5 * 2 * 3);

    let o = weakutm(&[
        "rule110", "--steps", "1", "--window", "-2..2", "--center", "1", "--left", "0", "--right",
        "0",
    ]);
    assert_eq!(stdout(&o), "leftmost cell: -2\n..#..\n.##..\n");
}

#[test]
fn dump_and_golden() {
    let o = weakutm(&["dump", "u62"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rules"].as_array().unwrap().len(), 12);
    assert_eq!(v["states"].as_array().unwrap().len(), 6);

    for (m, n) in [("u33", 26), ("u24", 12), ("u62", 22)] {
        let o = weakutm(&["golden", m, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{m}");
        assert_eq!(
            json(&o),
            serde_json::json!({"outcome": "pass", "configurations": n})
        );
    }
}
