use std::fs;
use std::process::Command;

fn gloa() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gloa"))
}

#[test]
fn list_presets_names_everything() {
    let out = gloa().arg("list-presets").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in gloa_cli::presets::names() {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn run_preset_with_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = gloa()
        .args(["run", "goldstein_price", "--repeats", "2", "--seed", "5", "-o", "gloa.max_iterations=30", "--output-dir"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    let seeds: Vec<&str> = summary.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(seeds, vec!["5", "6"]);
}

#[test]
fn output_dir_falls_back_to_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = gloa()
        .args(["run", "easom", "--repeats", "1", "-q"])
        .env(gloa_cli::OUTPUT_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("summary.csv").exists());
}

#[test]
fn bad_config_exits_nonzero_naming_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    fs::write(&path, "[objective]\nkind = \"benchmark\"\nname = \"sphere\"\ndimension = 3\n[gloa]\nr1 = 7.0\n").unwrap();
    let out = gloa().arg("run").arg(&path).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("gloa.r1"));

    let out = gloa().args(["run", "no-such-preset"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn fit_scaling_recovers_exponent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let mut text = String::from("n,seconds,energy\n");
    for n in [5.0f64, 7.0, 9.0, 11.0, 13.0] {
        text.push_str(&format!("{n},{},0\n", 0.01 * n.powf(2.5)));
    }
    fs::write(&path, text).unwrap();
    let out = gloa().arg("fit-scaling").arg(&path).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let b: f64 = stdout.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((b - 2.5).abs() < 1e-9, "{stdout}");

    fs::write(&path, "n,seconds\n1,0\n2,1\n3,2\n").unwrap();
    assert!(!gloa().arg("fit-scaling").arg(&path).output().unwrap().status.success());
    let out = gloa().arg("fit-scaling").arg(&path).args(["--y", "secs"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stderr).contains("secs"));
}
