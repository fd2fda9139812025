use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dfa_core::{minimise, parse_dfa, serialize_dfa, Mode};
use dfa_oracle::gen::{random_dfa, Shape};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

const EVEN_AS: &str = "\
alphabet: a b
states: even odd
start: even
accept: even
trans: even a odd
trans: odd a even
trans: even b even
trans: odd b odd
";

// Accepts exactly `a`, so it differs from EVEN_AS on infinitely many words.
const JUST_A: &str = "\
alphabet: a b
states: p q
start: p
accept: q
trans: p a q
";

fn dfamin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dfamin")).args(args).output().expect("run dfamin")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

struct Scratch(TempDir);

impl Scratch {
    fn new() -> Scratch {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.path(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn out(&self, name: &str) -> String {
        self.path(name).to_str().unwrap().to_string()
    }
}

fn read(p: impl AsRef<Path>) -> String {
    fs::read_to_string(p).unwrap()
}

fn hyper_k3(dir: &Scratch) -> (String, String) {
    let coloring = dir.file("k3.col", "1 1\n2 2\n3 3\n");
    let (inst, colored) = (dir.out("inst.dfa"), dir.out("colored.dfa"));
    let o = dfamin(&["gen", "hyper", "--named", "k3", "--coloring", &coloring, "-o", &inst, "--colored-out", &colored]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    (inst, colored)
}

#[test]
fn minimise_reports_counts_and_writes_the_automaton() {
    let dir = Scratch::new();
    let input = dir.file("even.dfa", EVEN_AS);
    let out = dir.out("min.dfa");
    let o = dfamin(&["minimise", &input, "-o", &out]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "2 2\n");
    assert_eq!(parse_dfa(&read(&out)).unwrap().num_states(), 2);

    let o = dfamin(&["minimise", &input, "-o", &out, "--format", "dot"]);
    assert_eq!(code(&o), 0);
    assert!(read(&out).starts_with("digraph"));
}

#[test]
fn minimise_matches_the_library_on_random_automata() {
    let dir = Scratch::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..10 {
        let d = random_dfa(&mut rng, Shape::new(6, 2));
        let input = dir.file(&format!("r{i}.dfa"), &serialize_dfa(&d));
        let out = dir.out("m.dfa");
        for (mode, flag) in [(Mode::Partial, "partial"), (Mode::Total, "total")] {
            let o = dfamin(&["minimise", &input, "-o", &out, "--mode", flag]);
            assert_eq!(code(&o), 0);
            let want = minimise(&d, mode).num_states();
            assert_eq!(stdout(&o), format!("{} {want}\n", d.num_states()));
        }
    }
}

#[test]
fn hyper_instance_is_total_minimal() {
    let dir = Scratch::new();
    let (inst, _) = hyper_k3(&dir);
    let o = dfamin(&["minimise", &inst, "--mode", "total", "-o", &dir.out("m.dfa")]);
    assert_eq!(stdout(&o), "17 17\n");
}

#[test]
fn kmin_and_sizes_agree() {
    let dir = Scratch::new();
    let (inst, _) = hyper_k3(&dir);
    let o = dfamin(&["sizes", &inst]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,size"));
    let sizes: Vec<(usize, usize)> = lines
        .map(|l| {
            let (k, s) = l.split_once(',').unwrap();
            (k.parse().unwrap(), s.parse().unwrap())
        })
        .collect();
    assert_eq!(sizes[0], (0, 17));
    assert!(sizes.windows(2).all(|w| w[0].1 >= w[1].1));

    for &(k, size) in sizes.iter().step_by(5) {
        let out = dir.out("k.dfa");
        let o = dfamin(&["kmin", &inst, "-k", &k.to_string(), "-o", &out]);
        assert_eq!(code(&o), 0);
        let text = stdout(&o);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], format!("17 {size}"));
        let bound: usize = lines[2].strip_prefix("similarity_bound ").unwrap().parse().unwrap();
        assert!(bound <= k, "k = {k}, bound {bound}");
        if k == 0 {
            assert_eq!(lines[1], "errors 0");
        }
    }
}

#[test]
fn compare_counts_errors() {
    let dir = Scratch::new();
    let (inst, colored) = hyper_k3(&dir);
    let o = dfamin(&["compare", &inst, &inst]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["errors"], "0");
    assert_eq!(json["similarity_bound"], 0);

    let o = dfamin(&["compare", &inst, &colored]);
    assert_eq!(code(&o), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["errors"], "3");
    assert_eq!(json["finite"], true);
}

#[test]
fn compare_flags_an_infinite_difference() {
    let dir = Scratch::new();
    let (a, b) = (dir.file("a.dfa", EVEN_AS), dir.file("b.dfa", JUST_A));
    let o = dfamin(&["compare", &a, &b]);
    assert_eq!(code(&o), 3);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json["errors"].is_null());

    // Words up to length 2: "", "b", "bb" are only in the first; "a" only in the second.
    let o = dfamin(&["compare", &a, &b, "--max-len", "2"]);
    assert_eq!(code(&o), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["errors"], "5");
}

#[test]
fn hypermin_is_deterministic() {
    let dir = Scratch::new();
    let (inst, _) = hyper_k3(&dir);
    let (x, y) = (dir.out("x.dfa"), dir.out("y.dfa"));
    let ox = dfamin(&["hypermin", &inst, "-o", &x]);
    let oy = dfamin(&["hypermin", &inst, "-o", &y]);
    assert_eq!(code(&ox), 0);
    assert_eq!(stdout(&ox), stdout(&oy));
    assert_eq!(read(&x), read(&y));
}

#[test]
fn gen_and_verify_the_kmin_family() {
    let dir = Scratch::new();
    let coloring = dir.file("k3.col", "1 1\n2 2\n3 3\n");
    let (inst, colored, report) = (dir.out("inst.dfa"), dir.out("colored.dfa"), dir.out("report.json"));
    let o = dfamin(&[
        "gen",
        "kmin",
        "--named",
        "k3",
        "--s",
        "4",
        "--k",
        "17",
        "--coloring",
        &coloring,
        "-o",
        &inst,
        "--colored-out",
        &colored,
        "--report",
        &report,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&read(&report)).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["errors"], "504");

    let o = dfamin(&["verify", "kmin", "--named", "k3", "--s", "4", "--k", "17", "--colored", &colored]);
    assert_eq!(code(&o), 0);

    // Flipping one accepting flag breaks the construction.
    let mut d = parse_dfa(&read(&colored)).unwrap();
    let q = d.state_id("smiley_0").unwrap();
    d.set_accepting(q, !d.is_accepting(q));
    let tampered = dir.file("tampered.dfa", &serialize_dfa(&d));
    let o = dfamin(&["verify", "kmin", "--named", "k3", "--s", "4", "--k", "17", "--colored", &tampered]);
    assert_eq!(code(&o), 1);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["pass"], false);
}

#[test]
fn gen_rejects_bad_input() {
    let dir = Scratch::new();
    let out = dir.out("inst.dfa");
    let o = dfamin(&["gen", "kmin", "--named", "k3", "--s", "3", "--k", "17", "-o", &out]);
    assert_eq!(code(&o), 4);
    let o = dfamin(&["gen", "kmin", "--named", "k3", "-o", &out]);
    assert_eq!(code(&o), 4);

    let improper = dir.file("bad.col", "1 1\n2 1\n3 2\n");
    let o =
        dfamin(&["gen", "hyper", "--named", "k3", "--coloring", &improper, "-o", &out, "--colored-out", &dir.out("c")]);
    assert_eq!(code(&o), 4);

    let graph = dir.file("g.txt", "1 2\n2 3 4\n");
    let o = dfamin(&["gen", "hyper", "--graph", &graph, "-o", &out]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn parse_and_io_errors_have_their_own_codes() {
    let dir = Scratch::new();
    let bad = dir.file("bad.dfa", "alphabet: a\nstates: p\nstart: q\n");
    assert_eq!(code(&dfamin(&["minimise", &bad, "-o", &dir.out("o")])), 2);
    let missing = dir.out("missing.dfa");
    assert_eq!(code(&dfamin(&["minimise", &missing, "-o", &dir.out("o")])), 1);
}

#[test]
fn sweep_writes_a_file_per_size() {
    let dir = Scratch::new();
    let (inst, _) = hyper_k3(&dir);
    let snapshots = dir.path("sweep");
    let o = dfamin(&["sweep", &inst, "--dir", snapshots.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<Vec<usize>> =
        text.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows[0][..2], [0, 17]);
    let changes = 1 + rows.windows(2).filter(|w| w[0][1] != w[1][1]).count();
    assert_eq!(fs::read_dir(&snapshots).unwrap().count(), changes);
    for row in rows.iter().filter(|r| snapshots.join(format!("k{}.dfa", r[0])).exists()) {
        let d = parse_dfa(&read(snapshots.join(format!("k{}.dfa", row[0])))).unwrap();
        assert_eq!(d.num_states(), row[1]);
    }
}

#[test]
fn forest_prints_text_and_dot() {
    let dir = Scratch::new();
    let input = dir.file("even.dfa", EVEN_AS);
    let text = dfamin(&["forest", &input]);
    assert_eq!(code(&text), 0);
    assert!(!stdout(&text).is_empty());
    let dot = dfamin(&["forest", &input, "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph"));
}
