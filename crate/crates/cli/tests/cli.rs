use std::fs;
use std::process::{Command, Output};

use biroot::analysis::{stats, CsvGrid};
use biroot::biroot::BirootSpec;
use biroot::exact::integer;
use biroot::TriangleDag;

fn biroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biroot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = biroot(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    biroot(args).status.code().unwrap()
}

#[test]
fn row_twelve_latex() {
    let out = stdout(&[
        "build", "--n", "3", "--m", "12", "--c", "1", "--source", "binomial", "--format", "latex",
    ]);
    assert_eq!(
        out,
        "\\frac{1 + 220 x + 924 x^{2} + 220 x^{3} + x^{4}}{12 + 495 x + 792 x^{2} + 66 x^{3}}\n"
    );
}

#[test]
fn dag_level_split() {
    let out = stdout(&[
        "dag",
        "--basin",
        "5,2,7,1,8",
        "--weights",
        "1,4,3",
        "--level",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "135,1260,2078,1932,475,8\n594,1805,2161,1231,97\n");
}

#[test]
fn dag_diagonal_and_dot() {
    let out = stdout(&[
        "dag",
        "--basin",
        "1",
        "--weights",
        "1,1",
        "--diagonal",
        "10",
    ]);
    assert_eq!(out, "1 9 28 35 15 1\nsum 89\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.dot");
    stdout(&[
        "dag",
        "--basin",
        "3,1,6,7",
        "--weights",
        "1,1,1",
        "--dot",
        path.to_str().unwrap(),
        "--depth",
        "3",
    ]);
    let mut dag = TriangleDag::from_i64(&[3, 1, 6, 7], &[1, 1, 1]).unwrap();
    assert_eq!(fs::read_to_string(&path).unwrap(), dag.to_dot(3));
}

#[test]
fn comparators() {
    assert_eq!(
        stdout(&["pade", "--n", "2", "--p", "3", "--q", "2"]),
        "(1 + 15 x + 15 x^2 + x^3) / (6 + 20 x + 6 x^2)\n"
    );
    assert_eq!(
        stdout(&["newton", "--n", "3", "--iters", "1"]),
        "(16 + 51 x + 12 x^2 + 2 x^3) / (36 + 36 x + 9 x^2)\n"
    );
    assert_eq!(
        stdout(&["newton", "--n", "2", "--iters", "1", "--format", "csv"]),
        "1,6,1\n4,4\n"
    );
}

#[test]
fn checks() {
    assert_eq!(
        stdout(&["check", "--suite", "fixedpoint"]),
        "PASS fixedpoint (200 cases)\n"
    );
    let all = stdout(&["check", "--suite", "all"]);
    assert_eq!(all.lines().filter(|l| l.starts_with("PASS")).count(), 6);
    assert_eq!(code(&["check", "--suite", "nope"]), 2);
}

#[test]
fn eval_point_and_recursion() {
    let out = stdout(&[
        "eval",
        "--n",
        "3",
        "--m",
        "12",
        "--x",
        "8",
        "--precision",
        "64",
    ]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("value 2.00824175824175824"), "{first}");
    assert!(first.ends_with("error 8.2417582417582418e-3"), "{first}");

    let out = stdout(&[
        "eval",
        "--n",
        "2",
        "--m",
        "2",
        "--x",
        "2",
        "--recursive",
        "3",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("r_1 value 1.5000000000"));
    assert!(lines[1].starts_with("r_2 value 1.4166666666"));
    assert!(lines[2].starts_with("r_3 value 1.4142156862745098039"));
    assert!(lines[3].starts_with("root 1.41421356237309504880"));
}

#[test]
fn stats_match_library() {
    let out = stdout(&[
        "stats",
        "--n",
        "3",
        "--m",
        "13",
        "--c",
        "3",
        "--x-range",
        "1:100:50",
    ]);
    let spec = BirootSpec::binomial(3, 13, integer(3)).unwrap();
    let s = stats(&spec, &integer(1), &integer(100), 50, 256).unwrap();
    let expect = format!(
        "interval [1, 100]\nmean {}\nstd {}\nmax {}\ncount 50\npoles 0\n",
        s.mean.to_sci_string(17),
        s.std.to_sci_string(17),
        s.max.to_sci_string(17)
    );
    assert_eq!(out, expect);
}

#[test]
fn sweep_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| {
        let csv = dir.path().join(format!("{tag}.csv"));
        let ppm = dir.path().join(format!("{tag}.ppm"));
        stdout(&[
            "sweep",
            "--n",
            "3",
            "--m-range",
            "4:12",
            "--x-range",
            "0:100:100",
            "--out",
            csv.to_str().unwrap(),
            "--ppm",
            ppm.to_str().unwrap(),
        ]);
        (fs::read(csv).unwrap(), fs::read(ppm).unwrap())
    };
    let (csv, ppm) = run("a");
    assert_eq!(run("b"), (csv.clone(), ppm.clone()));
    let header = b"P5\n100 9\n255\n";
    assert_eq!(&ppm[..header.len()], header);
    assert_eq!(ppm.len(), header.len() + 900);
    let grid = CsvGrid::parse(std::str::from_utf8(&csv).unwrap(), 256).unwrap();
    assert_eq!(grid.m_axis, (4..=12).collect::<Vec<_>>());
    assert_eq!(grid.x_axis.len(), 100);
}

#[test]
fn dag_source_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("dag.csv");
    stdout(&[
        "sweep",
        "--n",
        "2",
        "--source",
        "dag",
        "--basin",
        "5,2,7,1,8",
        "--weights",
        "1,4,3",
        "--m-range",
        "1:3",
        "--x-range",
        "0.25:4.5:10",
        "--out",
        csv.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), 0);
    for sub in [
        "build", "eval", "sweep", "stats", "dag", "pade", "newton", "check",
    ] {
        assert_eq!(code(&[sub, "--help"]), 0, "{sub} --help");
    }
    // usage errors
    assert_eq!(code(&["build", "--n", "2", "--m", "4", "--bogus"]), 2);
    assert_eq!(
        code(&["build", "--n", "2", "--m", "4", "--format", "xml"]),
        2
    );
    assert_eq!(code(&["build", "--n", "2", "--m", "4", "--basin", "1"]), 2);
    assert_eq!(
        code(&["build", "--n", "2", "--m", "4", "--source", "dag"]),
        2
    );
    assert_eq!(
        code(&[
            "eval",
            "--n",
            "2",
            "--m",
            "4",
            "--x",
            "2",
            "--precision",
            "32"
        ]),
        2
    );
    assert_eq!(code(&["eval", "--n", "2", "--m", "4", "--x", "two"]), 2);
    assert_eq!(code(&["pade", "--n", "2", "--p", "1", "--q", "3"]), 2);
    assert_eq!(code(&["dag", "--basin", "1", "--weights", "1,1"]), 2);
    assert_eq!(
        code(&[
            "sweep",
            "--n",
            "2",
            "--m-range",
            "9:3",
            "--x-range",
            "0:1:3",
            "--out",
            "x"
        ]),
        2
    );
    // domain errors
    assert_eq!(code(&["eval", "--n", "2", "--m", "4", "--x", "-2"]), 1);
    assert_eq!(code(&["build", "--n", "1", "--m", "4"]), 1);
    assert_eq!(code(&["build", "--n", "2", "--m", "4", "--c", "-1"]), 1);
    assert_eq!(
        code(&["stats", "--n", "2", "--m", "3", "--x-range", "-1:1:5"]),
        1
    );
    let pole = [
        "eval",
        "--n",
        "2",
        "--m",
        "1",
        "--source",
        "dag",
        "--basin",
        "1,-2,1",
        "--weights",
        "1,1",
        "--x",
        "1",
    ];
    assert_eq!(code(&pole), 1);
}

#[test]
fn unwritable_output_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing/grid.csv");
    let run = biroot(&[
        "sweep",
        "--n",
        "2",
        "--m-range",
        "2:3",
        "--x-range",
        "0:1:3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("missing"));
}
