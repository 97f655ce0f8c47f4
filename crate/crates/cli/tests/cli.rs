use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TOY: &str = "4 5 D
37584 4383 29997 -54 11688
308 36 250 0 96
-40316 -4707 -33907 -153 -12552
5626 657 4778 27 1752
";

fn kbnf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kbnf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, content).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn smith_golden_output() {
    let dir = TempDir::new().unwrap();
    let toy = write(&dir, "toy.txt", TOY);
    for v in ["kb1", "kb2", "kb3"] {
        let o = kbnf(&["smith", s(&toy), "--variant", v]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "((1 * 1) (1 * 3) (1 * 9))\n");
    }
    let o = kbnf(&["smith", s(&toy), "--stats"]);
    let text = stdout(&o);
    assert!(
        text.starts_with("((1 * 1) (1 * 3) (1 * 9))\npasses: 2\ntimes: "),
        "{text}"
    );
    assert!(text.trim_end().ends_with(" seconds"), "{text}");
}

#[test]
fn smith_writes_verifiable_factors() {
    let dir = TempDir::new().unwrap();
    let toy = write(&dir, "toy.txt", TOY);
    let (u, v, sm) = (
        dir.path().join("u"),
        dir.path().join("v"),
        dir.path().join("s"),
    );
    let o = kbnf(&[
        "smith",
        s(&toy),
        "--transforms",
        "--u-out",
        s(&u),
        "--v-out",
        s(&v),
        "--s-out",
        s(&sm),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        fs::read_to_string(&sm).unwrap(),
        "4 5 M\n1 1 1\n2 2 3\n3 3 9\n0 0 0\n"
    );

    let o = kbnf(&["verify", s(&toy), "--s", s(&sm), "--u", s(&u), "--v", s(&v)]);
    assert!(o.status.success(), "{}", stdout(&o));

    // Bump one entry of u.
    let mut m = kbnf::io::read_matrix_file(&u).unwrap();
    let bumped = m.get(0, 0) + 1;
    m.set(0, 0, bumped);
    kbnf::io::write_matrix_file(&m, &u).unwrap();
    let o = kbnf(&["verify", s(&toy), "--s", s(&sm), "--u", s(&u), "--v", s(&v)]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn transform_outputs_need_transforms() {
    let dir = TempDir::new().unwrap();
    let toy = write(&dir, "toy.txt", TOY);
    let o = kbnf(&["smith", s(&toy), "--u-out", "x"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hnf_output() {
    let dir = TempDir::new().unwrap();
    let toy = write(&dir, "toy.txt", TOY);
    let o = kbnf(&["hnf", s(&toy)]);
    let text = stdout(&o);
    assert!(o.status.success());
    assert!(text.starts_with("rank: 3\n"), "{text}");
    let o = kbnf(&["hnf", s(&toy), "--style", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("rank: 3\n"));
    assert_eq!(
        kbnf(&["hnf", s(&toy), "--style", "3"]).status.code(),
        Some(1)
    );
}

#[test]
fn homology_output() {
    let dir = TempDir::new().unwrap();
    let dp = write(&dir, "dp.txt", "1 3 D\n0 0 0\n");
    let d = write(&dir, "d.txt", "3 2 D\n2 0\n0 4\n0 0\n");
    let gens = dir.path().join("gens.txt");
    let o = kbnf(&["homology", s(&dp), s(&d), "--generators", s(&gens)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        stdout(&o),
        "Z/2 + Z/4 + Z\ntorsion: ((1 * 2) (1 * 4))\nfree rank: 1\n"
    );
    let lines: Vec<String> = fs::read_to_string(&gens)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 3);
    assert!(
        lines[0].starts_with("2 ") && lines[1].starts_with("4 ") && lines[2].starts_with("0 "),
        "{lines:?}"
    );

    let bad = write(&dir, "bad.txt", "3 1 D\n1\n0\n0\n");
    let one = write(&dir, "one.txt", "1 3 D\n1 0 0\n");
    assert_eq!(kbnf(&["homology", s(&one), s(&bad)]).status.code(), Some(1));
}

#[test]
fn gen_writes_files_and_manifest() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("corpus");
    let o = kbnf(&[
        "gen",
        "--config",
        "2,4,5,3,9,10,10",
        "--seed",
        "1",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let manifest = fs::read_to_string(out.join("manifest.txt")).unwrap();
    assert!(
        manifest.starts_with("config 2,4,5,3,9,10,10\nseed 1\n"),
        "{manifest}"
    );
    assert_eq!(
        manifest
            .lines()
            .filter(|l| l.contains("planted=(("))
            .count(),
        2
    );
    // The matrix files round-trip through smith to the planted form.
    for line in manifest.lines().skip(2) {
        let (name, rest) = line.split_once(' ').unwrap();
        let planted = rest.split_once("planted=").unwrap().1;
        let o = kbnf(&["smith", s(&out.join(name))]);
        assert_eq!(stdout(&o).trim_end(), planted);
    }
    let again = dir.path().join("again");
    kbnf(&[
        "gen",
        "--config",
        "2,4,5,3,9,10,10",
        "--seed",
        "1",
        "--out",
        s(&again),
    ]);
    for name in ["instance-000.txt", "instance-001.txt", "manifest.txt"] {
        assert_eq!(
            fs::read(out.join(name)).unwrap(),
            fs::read(again.join(name)).unwrap()
        );
    }
}

#[test]
fn bench_reports_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.jsonl");
    let args = [
        "bench",
        "--config",
        "2,6,8,4,9,20,5",
        "--seed",
        "2",
        "--no-timing",
    ];
    let o = kbnf(&[&args[..], &["--report", s(&report)]].concat());
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("KB3: 2/2 finished"), "{text}");
    assert!(!text.contains(" ms"), "{text}");
    assert_eq!(text, stdout(&kbnf(&args)));
    assert_eq!(fs::read_to_string(&report).unwrap().lines().count(), 6);

    let o = kbnf(&[
        "bench",
        "--config",
        "1,12,16,10,20,100,10",
        "--seed",
        "1",
        "--variants",
        "kb1",
        "--budget",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("budget exhausted"));
}

#[test]
fn budget_exhaustion_exit_code() {
    let dir = TempDir::new().unwrap();
    let toy = write(&dir, "toy.txt", TOY);
    let o = kbnf(&["smith", s(&toy), "--variant", "kb1", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget exhausted"));
}

#[test]
fn malformed_input_fails_every_subcommand() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "2 2 D\n1 x\n3 4\n");
    let good = write(&dir, "good.txt", TOY);
    let out = dir.path().join("o");
    let cases: Vec<Vec<&str>> = vec![
        vec!["smith", s(&bad)],
        vec!["smith", "/nonexistent/matrix"],
        vec!["hnf", s(&bad)],
        vec!["homology", s(&bad), s(&good)],
        vec![
            "verify",
            s(&bad),
            "--s",
            s(&good),
            "--u",
            s(&good),
            "--v",
            s(&good),
        ],
        vec!["gen", "--config", "1,2,3", "--seed", "1", "--out", s(&out)],
        vec!["gen", "--config", "1,4,5,3,9,10,10", "--out", s(&out)],
        vec!["bench", "--config", "1,4,5,9,9,10,10", "--seed", "1"],
        vec!["smith"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = kbnf(&args);
        assert_eq!(
            o.status.code(),
            Some(1),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!o.stderr.is_empty());
    }
}
