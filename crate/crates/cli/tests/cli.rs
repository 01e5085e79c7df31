use std::process::{Command, Output};

use homfly_core::{LaurentPoly, TwoVarLaurent};

fn homfly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homfly"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_text() {
    let o = homfly(&["eval", "B3: 1 2 1 2", "--spec", "alexander"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "s^-2 - 1 + s^2");
}

#[test]
fn eval_json_round_trips() {
    let o = homfly(&["eval", "B2: 1 1 1", "--spec", "homfly", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let p: TwoVarLaurent = serde_json::from_str(&text).unwrap();
    assert_eq!(p, TwoVarLaurent::parse("l^2*m^2 - 2*l^2 - l^4").unwrap());
    assert_eq!(serde_json::to_string_pretty(&p).unwrap(), text.trim());

    let o = homfly(&[
        "eval",
        "B3: 1 -2 1 -2",
        "--spec",
        "jones",
        "--format",
        "json",
    ]);
    let text = stdout(&o);
    let v: LaurentPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text.trim());
}

#[test]
fn simple_braid_unlink_value() {
    let o = homfly(&["eval", "B9: 1 2 3 5 6 8", "--spec", "homfly"]);
    let got = TwoVarLaurent::parse(stdout(&o).trim()).unwrap();
    let delta = TwoVarLaurent::parse("-l^-1*m^-1 - l*m^-1").unwrap();
    assert_eq!(got, &delta * &delta);
}

#[test]
fn simple_and_classify() {
    let o = homfly(&["simple", "B13: 1 2 3 5 6 8 10"]);
    assert_eq!(stdout(&o).trim(), "simple, A=(4,3,2,2)");
    let o = homfly(&["classify", "--range", "9"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn genfun_and_expand() {
    let o = homfly(&["genfun", "--spec", "degenerate", "--template", "B2: 1"]);
    assert_eq!(
        stdout(&o).trim(),
        "[(1/2*s^-1 + 1/2*s) + (-s^2)*t1] / [(1 + (-2*s)*t1 + (s^2)*t1^2)]"
    );
    let o = homfly(&[
        "expand",
        "--spec",
        "degenerate",
        "--template",
        "x1^-5 x2^6 @3",
    ]);
    let first: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split(':').next().unwrap().to_string())
        .collect();
    assert_eq!(first, ["[0, 0]", "[0, 1]", "[1, 0]", "[1, 1]"]);
    assert!(stdout(&o).starts_with("[0, 0]: (-30*s)"));
}

#[test]
fn exit_codes() {
    assert_eq!(homfly(&["eval", "B2: 7"]).status.code(), Some(1));
    assert_eq!(
        homfly(&["eval", "B2: 1", "--spec", "nonsense"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(homfly(&["frobnicate"]).status.code(), Some(1));
    let o = homfly(&[
        "eval",
        "B4: 1 2 3 1 2 3 1 2 3",
        "--oracle",
        "off",
        "--budget",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bundled_manifests() {
    for name in ["reference-tables", "ekt-coefficients", "skein-axiom"] {
        let o = homfly(&["verify", name, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(report["passed"], true);
    }
}

#[test]
fn manifest_failures_and_errors() {
    let dir = std::env::temp_dir().join(format!("homfly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"version":"v1","entries":[{"id":"x","word":"B2: 1","spec":"jones","expect_text":"2"}]}"#).unwrap();
    assert_eq!(
        homfly(&["verify", bad.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let unknown = dir.join("unknown.json");
    std::fs::write(
        &unknown,
        r#"{"version":"v1","entries":[{"id":"x","check":"no-such-check"}]}"#,
    )
    .unwrap();
    assert_eq!(
        homfly(&["verify", unknown.to_str().unwrap()]).status.code(),
        Some(1)
    );
    std::fs::remove_dir_all(dir).unwrap();
}
