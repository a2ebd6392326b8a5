use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ratgen::cli::format::{GfFile, ProblemFile};
use ratgen::samples;
use ratgen::solver2d::assemble_gf;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn ratgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratgen")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn solve2d_golden() {
    let e1 = fixture("example1.json");
    let o = ratgen(&["solve2d", e1.to_str().unwrap(), "--vars", "z,w"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/(z*w - w - 1)");

    let e2 = fixture("example2.json");
    let o = ratgen(&["solve2d", e2.to_str().unwrap(), "--vars", "z,w"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(z - 1)/(z^2*w - z*w - w - z + 1)");
}

#[test]
fn verify_prints_table() {
    let e1 = fixture("example1.json");
    let o = ratgen(&["solve2d", e1.to_str().unwrap(), "--verify", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verified on [0,8]²"), "{text}");
    // Bottom row of the Pascal table: all ones.
    let last = text.lines().last().unwrap();
    assert_eq!(last.split_whitespace().collect::<Vec<_>>(), vec!["1"; 9]);
}

#[test]
fn json_output_round_trips() {
    let e2 = fixture("example2.json");
    let o = ratgen(&["solve2d", e2.to_str().unwrap(), "--format", "json", "--verify", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = GfFile::parse(&stdout(&o)).unwrap();
    let expected = assemble_gf(&samples::bloom_singles()).unwrap();
    assert_eq!(doc.to_ratfunc().unwrap(), expected);
    assert!(String::from_utf8_lossy(&o.stderr).contains("verified"));
}

#[test]
fn latex_and_unreduced() {
    let e1 = fixture("example1.json");
    let o = ratgen(&["solve2d", e1.to_str().unwrap(), "--vars", "z,w", "--format", "latex"]);
    assert_eq!(stdout(&o).trim(), r"\frac{1}{zw - w - 1}");

    let e2 = fixture("example2.json");
    let o = ratgen(&["solve2d", e2.to_str().unwrap(), "--no-reduce", "--format", "json", "--verify", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let unreduced = GfFile::parse(&stdout(&o)).unwrap().to_ratfunc().unwrap();
    let reduced = assemble_gf(&samples::bloom_singles()).unwrap();
    assert!(unreduced.equivalent(&reduced));
}

#[test]
fn solve1d() {
    let cases = [
        (["-1,-1,1", "0,1"], "z/(z^2 - z - 1)"),
        (["-1,1", "1"], "z/(z - 1)"),
        (["-1,-1,1", "0,0"], "0"),
    ];
    for ([c, i], expected) in cases {
        let o = ratgen(&["solve1d", "--coeffs", c, "--init", i]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected);
    }
    let o = ratgen(&["solve1d", "--coeffs", "1,0", "--init", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_random_is_reproducible_and_valid() {
    let a = ratgen(&["gen-random", "--seed", "1"]);
    let b = ratgen(&["gen-random", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    for seed in 0..5 {
        let o = ratgen(&["gen-random", "--seed", &seed.to_string()]);
        let text = stdout(&o);
        ProblemFile::parse(&text).unwrap().to_problem().unwrap().resolve().unwrap();
        let path = tmp(&format!("random_{seed}.json"));
        std::fs::write(&path, text).unwrap();
        let o = ratgen(&["solve2d", path.to_str().unwrap(), "--verify", "10"]);
        assert_eq!(o.status.code(), Some(0), "seed {seed}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(ratgen(&["gen-random", "--seed", "1", "--max-m", "9"]).status.code(), Some(2));
}

#[test]
fn failure_exit_codes() {
    for (name, code) in [("zero_corner.json", 2), ("missing_line.json", 2), ("inconsistent.json", 3)] {
        let o = ratgen(&["solve2d", fixture(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(code), "{name}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(ratgen(&["solve2d", "/nonexistent/problem.json"]).status.code(), Some(1));
}

#[test]
fn corrupted_claim_is_rejected() {
    let f = assemble_gf(&samples::bloom_singles()).unwrap();
    let e2 = fixture("example2.json");
    let good = tmp("good_claim.json");
    std::fs::write(&good, GfFile::from_ratfunc(&f, ["z1", "z2"]).to_json()).unwrap();
    let o = ratgen(&["solve2d", e2.to_str().unwrap(), "--verify", "6", "--claim", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let mut doc = GfFile::from_ratfunc(&f, ["z1", "z2"]);
    doc.denominator.last_mut().unwrap().coefficient = "3".into();
    let bad = tmp("bad_claim.json");
    std::fs::write(&bad, doc.to_json()).unwrap();
    let o = ratgen(&["solve2d", e2.to_str().unwrap(), "--verify", "6", "--claim", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}
