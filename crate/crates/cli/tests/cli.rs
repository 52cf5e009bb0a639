use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lorentz-eig"));
    c.env_remove("LORENTZ_EIG_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn lorentz-eig")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn assert_golden(args: &[&str], name: &str) {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let expected = std::fs::read_to_string(golden(name)).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{name}");
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr));
    });
    (out.status.code().unwrap(), v)
}

#[test]
fn golden_spectra() {
    assert_golden(&["spectrum", "0,0;0,1"], "spectrum_e22.txt");
    assert_golden(&["spectrum", "0,0;1,0", "--json"], "spectrum_e21.json");
    assert_golden(&["spectrum", "0,1;1,0", "--json"], "spectrum_swap.json");
    assert_golden(&["spectrum", "0,0;0,0", "--table"], "spectrum_zero.txt");
    assert_golden(
        &["spectrum", r#"{"a":0,"b":0.5,"c":2,"d":0}"#, "--json"],
        "spectrum_g5.json",
    );
}

#[test]
fn golden_verify_and_preserver() {
    assert_golden(
        &["verify", "0,1;1,1", "--json"],
        "verify_swap_plus_e22.json",
    );
    assert_golden(
        &["preserver", "make", "--kind", "P", "--beta", "0.75"],
        "make_p_075.json",
    );
    assert_golden(
        &[
            "preserver",
            "make",
            "--kind",
            "Q",
            "--beta",
            "0",
            "--space",
            "S2",
        ],
        "make_q_0_s2.json",
    );
    let map = format!("@{}", golden("make_p_075.json").display());
    assert_golden(
        &["preserver", "classify", &map, "--json"],
        "classify_p_075.json",
    );
}

#[test]
fn matrix_from_file_and_stdin() {
    let path = golden("spectrum_e21.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let input = serde_json::from_str::<serde_json::Value>(&text).unwrap()["input"].to_string();

    let dir = std::env::temp_dir().join(format!("lorentz-eig-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("m.json");
    std::fs::write(&file, &input).unwrap();
    let from_file = run(&["spectrum", &format!("@{}", file.display()), "--json"]);
    assert_eq!(String::from_utf8(from_file.stdout).unwrap(), text);

    let mut child = bin()
        .args(["spectrum", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), text);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["spectrum", "1,2,3"],
        vec!["spectrum", "1,nan;0,0"],
        vec!["spectrum", r#"{"a":1,"b":2,"c":3}"#],
        vec!["spectrum"],
        vec!["verify"],
        vec!["verify", "0,0;0,0", "--grid", "100"],
        vec!["preserver", "make", "--kind", "R", "--beta", "1"],
        vec![
            "preserver",
            "make",
            "--kind",
            "P",
            "--beta",
            "1",
            "--space",
            "M3",
        ],
        vec![
            "preserver",
            "make",
            "--kind",
            "P",
            "--beta",
            "0.5",
            "--space",
            "S2",
        ],
        vec!["preserver", "classify", "{not json"],
        vec![
            "preserver",
            "check",
            r#"{"basis":"E11,E22,E12","coeffs":[[1,0,0],[0,1,0],[0,0,1]]}"#,
        ],
        vec!["spectrum", "0,0;0,0", "--json", "--table"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn tolerance_env_and_flag() {
    let (_, v) = json(&["spectrum", "0,0;0,1", "--json"]);
    assert_eq!(v["tolerance"]["eq_tol"], 1e-9);

    let out = bin()
        .args(["spectrum", "0,0;0,1", "--json"])
        .env("LORENTZ_EIG_TOL", "1e-11")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tolerance"]["eq_tol"], 1e-11);

    let out = bin()
        .args(["spectrum", "0,0;0,1", "--json", "--tol", "1e-10"])
        .env("LORENTZ_EIG_TOL", "1e-11")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tolerance"]["eq_tol"], 1e-10);

    let out = bin()
        .args(["spectrum", "0,0;0,1"])
        .env("LORENTZ_EIG_TOL", "loose")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_random_batch() {
    let (code, v) = json(&["verify", "--random", "500", "--seed", "11", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 11);
    assert_eq!(v["count"], 500);
    assert_eq!(v["all_agree"], true);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn negative_zero_is_printed_as_zero() {
    let (_, v) = json(&["spectrum", "-0,0;0,-0", "--json"]);
    let text = v.to_string();
    assert!(!text.contains("-0.0"), "{text}");
    let out = run(&["spectrum", "-0,0;0,-0"]);
    assert!(!String::from_utf8(out.stdout).unwrap().contains("-0 "));
}

#[test]
fn preserver_round_trips() {
    for kind in ["P", "Q"] {
        for beta in ["0", "0.5", "-2", "10"] {
            let made = run(&["preserver", "make", "--kind", kind, "--beta", beta]);
            let map = String::from_utf8(made.stdout).unwrap();
            let (code, v) = json(&["preserver", "classify", &map, "--json"]);
            assert_eq!(code, 0, "{kind} {beta}");
            assert_eq!(v["kind"], kind);
            assert!((v["beta"].as_f64().unwrap() - beta.parse::<f64>().unwrap()).abs() < 1e-9);

            let (code, v) = json(&[
                "preserver",
                "check",
                &map,
                "--trials",
                "200",
                "--seed",
                "4",
                "--json",
            ]);
            assert_eq!(code, 0);
            assert_eq!(v["verdict"], "consistent");
        }
    }
}

#[test]
fn transpose_is_rejected_and_falsified() {
    let transpose =
        r#"{"basis":"E11,E12,E21,E22","coeffs":[[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]}"#;
    let out = run(&["preserver", "classify", transpose]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("not a preserver"));

    let (code, v) = json(&["preserver", "check", transpose, "--seed", "1", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "falsified");
    let witness = v["witness"].to_string();
    let image = v["image"].to_string();
    let (_, ws) = json(&["spectrum", &witness, "--json"]);
    let (_, is) = json(&["spectrum", &image, "--json"]);
    assert_ne!(
        ws["spectrum"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["value"].clone())
            .collect::<Vec<_>>(),
        is["spectrum"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["value"].clone())
            .collect::<Vec<_>>()
    );
}

#[test]
fn s2_maps() {
    let made = run(&[
        "preserver",
        "make",
        "--kind",
        "Q",
        "--beta",
        "0",
        "--space",
        "S2",
    ]);
    let map = String::from_utf8(made.stdout).unwrap();
    let (code, v) = json(&["preserver", "classify", &map, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "Q");
    let (code, _) = json(&["preserver", "check", &map, "--trials", "300", "--json"]);
    assert_eq!(code, 0);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["preserver", "--help"]).status.code(), Some(0));
}
