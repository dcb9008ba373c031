use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use graphlim::corpus;
use graphlim::density::{anchored_density, density_exact, AnchorAssignment};
use graphlim::graph::LabeledMultigraph;
use graphlim::graphon::{bipartite, StepGraphon};
use graphlim::random::{convergence_experiment, sample_wrandom};
use graphlim::rational::{format_rational, ratio};
use graphlim::reduce::{build_coupling, twin_reduce, weak_iso, CouplingMatrix};

fn graphlim(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphlim"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Self {
            dir: TempDir::new().unwrap(),
        };
        ws.write("k3.g", "3 3\n0 1\n1 2\n0 2\n");
        ws.write("bipartite.g", "2 1\n0 1\n");
        ws.write(
            "half.json",
            &StepGraphon::constant(ratio(1, 2)).unwrap().to_json(),
        );
        ws.write("blowup2.g", &bipartite().blowup(2).to_json());
        ws.write("blowup3.g", &bipartite().blowup(3).to_json());
        ws.write("twins.json", &corpus::with_twins().to_json());
        ws.write("asym.json", &corpus::asymmetric3().to_json());
        ws
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, text: &str) {
        fs::write(self.path(name), text).unwrap();
    }

    fn read(&self, name: &str) -> String {
        fs::read_to_string(self.path(name)).unwrap()
    }

    fn run(&self, args: &[&str]) -> Output {
        graphlim(args, self.dir.path())
    }
}

#[test]
fn density_of_triangle_in_bipartite_graphon() {
    let ws = Workspace::new();
    let out = ws.run(&["density", "--graph", "k3.g", "--graphon", "bipartite.g"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
    let out = ws.run(&["density", "--graph", "k3.g", "--graphon", "half.json"]);
    assert_eq!(stdout(&out), "1/8\n");
}

#[test]
fn weak_iso_of_blowups() {
    let ws = Workspace::new();
    let out = ws.run(&["weak-iso", "blowup2.g", "blowup3.g"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("Isomorphic\n"), "{text}");
    assert_eq!(
        text,
        weak_iso(&bipartite().blowup(2), &bipartite().blowup(3)).to_string()
    );
}

#[test]
fn weak_iso_negative_verdict_exits_zero() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "weak-iso",
        "bipartite.g",
        "half.json",
        "--distinguisher-max-nodes",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("NotIsomorphic\n"), "{text}");
    assert!(
        text.contains("distinguishing graph: 0 vs 1/8\n3 3\n"),
        "{text}"
    );
}

#[test]
fn spectrum_of_bipartite() {
    let ws = Workspace::new();
    let out = ws.run(&["spectrum", "bipartite.g"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0.500000000000\n-0.500000000000\n");
}

#[test]
fn file_outputs_match_library_calls() {
    let ws = Workspace::new();
    let twins = corpus::with_twins();

    assert!(ws
        .run(&["twin-reduce", "twins.json", "-o", "reduced.json"])
        .status
        .success());
    assert_eq!(ws.read("reduced.json"), twin_reduce(&twins).to_json());

    assert!(ws
        .run(&["blowup", "asym.json", "--k", "3", "-o", "big.json"])
        .status
        .success());
    assert_eq!(
        ws.read("big.json"),
        corpus::asymmetric3().blowup(3).to_json()
    );

    assert!(ws
        .run(&["couple", "bipartite.g", "blowup3.g", "-o", "c.json"])
        .status
        .success());
    let expected = build_coupling(&bipartite(), &bipartite().blowup(3)).unwrap();
    assert_eq!(ws.read("c.json"), expected.to_json());
    assert_eq!(
        CouplingMatrix::from_json(&ws.read("c.json")).unwrap(),
        expected
    );

    assert!(ws
        .run(&[
            "sample",
            "asym.json",
            "--n",
            "25",
            "--seed",
            "9",
            "-o",
            "g.txt"
        ])
        .status
        .success());
    let sampled = sample_wrandom(&corpus::asymmetric3(), 25, 9).unwrap();
    assert_eq!(ws.read("g.txt"), sampled.to_string());
    assert_eq!(
        ws.read("g.txt").parse::<LabeledMultigraph>().unwrap(),
        sampled
    );
}

#[test]
fn quotient_by_partition_file() {
    let ws = Workspace::new();
    ws.write("part.txt", "0 0\n1\n");
    let out = ws.run(&["quotient", "twins.json", "--partition", "part.txt"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), twin_reduce(&corpus::with_twins()).to_json());
    ws.write("bad.txt", "0 1\n");
    assert_eq!(
        ws.run(&["quotient", "twins.json", "--partition", "bad.txt"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn convergence_csv() {
    let ws = Workspace::new();
    let args = [
        "converge",
        "bipartite.g",
        "--graph",
        "k3.g",
        "--sizes",
        "10,20",
        "--reps",
        "3",
        "--seed",
        "4",
    ];
    let out = ws.run(&args);
    assert!(out.status.success());
    let k3 = LabeledMultigraph::complete(3);
    let report = convergence_experiment(&bipartite(), &k3, &[10, 20], 3, 4).unwrap();
    assert_eq!(stdout(&out), report.to_csv());
    assert!(stdout(&out).starts_with("motif,n,rep_count,median_err,max_err\n"));
}

#[test]
fn anchored_density_of_labeled_path() {
    let ws = Workspace::new();
    ws.write("p3.g", "3 2\n0 1\n1 2\nlabel 0 1\nlabel 2 2\n");
    let out = ws.run(&[
        "anchored-density",
        "--graph",
        "p3.g",
        "--graphon",
        "asym.json",
        "--anchors",
        "1=0,2=2",
    ]);
    assert!(out.status.success());
    let f: LabeledMultigraph = ws.read("p3.g").parse().unwrap();
    let pins = AnchorAssignment::new().with(1, 0).with(2, 2);
    let want = anchored_density(&f, &corpus::asymmetric3(), &pins).unwrap();
    assert_eq!(stdout(&out), format!("{}\n", format_rational(&want)));
}

#[test]
fn monte_carlo_estimate_format() {
    let ws = Workspace::new();
    let out = ws.run(&[
        "density",
        "--graph",
        "k3.g",
        "--graphon",
        "half.json",
        "--mc",
        "1000",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with("0.125000000000 ± ") && text.ends_with(" (1000)\n"),
        "{text}"
    );
}

#[test]
fn exit_codes() {
    let ws = Workspace::new();
    // usage errors
    for args in [
        vec!["frobnicate"],
        vec!["blowup", "asym.json", "--k", "0"],
        vec!["density", "--graph", "k3.g"],
        vec!["spectrum", "asym.json", "--unknown"],
        vec![
            "anchored-density",
            "--graph",
            "k3.g",
            "--graphon",
            "asym.json",
            "--anchors",
            "1=x",
        ],
    ] {
        let out = ws.run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty() && !out.stderr.is_empty());
    }
    // domain errors
    ws.write("loop.g", "2 1\n0 0\n");
    ws.write("signed.json", &corpus::signed().to_json());
    for args in [
        vec!["spectrum", "missing.json"],
        vec!["density", "--graph", "loop.g", "--graphon", "asym.json"],
        vec!["couple", "bipartite.g", "half.json"],
        vec!["sample", "signed.json", "--n", "5"],
        vec![
            "anchored-density",
            "--graph",
            "k3.g",
            "--graphon",
            "asym.json",
            "--anchors",
            "1=9",
        ],
    ] {
        let out = ws.run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error: "),
            "{args:?}"
        );
    }
}

#[test]
fn density_matches_library_on_corpus() {
    let ws = Workspace::new();
    for (name, h) in corpus::graphons() {
        let file = format!("{name}.json");
        ws.write(&file, &h.to_json());
        let out = ws.run(&["density", "--graph", "k3.g", "--graphon", &file]);
        let want = density_exact(&LabeledMultigraph::complete(3), &h).unwrap();
        assert_eq!(
            stdout(&out),
            format!("{}\n", format_rational(&want)),
            "{name}"
        );
    }
}
