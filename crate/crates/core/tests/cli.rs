use std::io::Cursor;
use std::process::Command;

use proptest::prelude::*;

use tamari_atlas::cli::run;
use tamari_atlas::enumerate::enum_maps_oracle;

fn call(args: &[&str], input: &str) -> (u8, String, String) {
    let mut stdin = Cursor::new(input.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("tamari-atlas").chain(args.iter().copied());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn map_lines(n: usize) -> Vec<String> {
    let (code, out, _) = call(&["enumerate", "--family", "maps", "--size", &n.to_string()], "");
    assert_eq!(code, 0);
    out.lines().map(str::to_string).collect()
}

#[test]
fn binary_converts_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("maps.txt");
    std::fs::write(&input, "# single edge\nn=1 sigma=(1) alpha=(1) root=1\n").unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_tamari-atlas"))
        .args(["convert", "--from", "map", "--to", "interval", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "udud;uudd\n");
}

#[test]
fn binary_reports_bad_flags() {
    let output = Command::new(env!("CARGO_BIN_EXE_tamari-atlas")).args(["gf", "--family", "trees"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(output.stdout.is_empty());
}

#[test]
fn verify_small() {
    let (code, out, _) = call(&["verify", "--max-size", "4"], "");
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn stats_and_gf() {
    let (code, out, _) = call(&["stats", "--family", "interval"], "uuddud;uuuddd\n");
    assert_eq!((code, out.as_str()), (0, "c00=1 c01=1 c11=1 rcont=2\n"));
    let (code, out, _) = call(&["stats", "--family", "map"], "n=2 sigma=(1 2) alpha=(1 2) root=1\n");
    assert_eq!((code, out.as_str()), (0, "black=1 white=1 face=2 outdeg=1\n"));
    let (code, out, _) = call(&["gf", "--family", "intervals", "--max-size", "2"], "");
    assert_eq!((code, out.as_str()), (0, "1 0 1 0 0 1\n2 1 1 1 0 1\n"));
}

#[test]
fn enumerate_with_stats() {
    let (code, out, _) = call(&["enumerate", "--family", "trees", "--size", "1", "--with-stats"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("(0:())\t"));
}

#[test]
fn render_dot() {
    let (code, out, _) = call(&["render", "--format", "dot", "--family", "tree"], "(1:(0:()))\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    let (code, out, _) = call(&["render", "--family", "map"], "n=2 sigma=(1 2) alpha=(1 2) root=1\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("graph") && out.trim_end().ends_with('}'));
}

#[test]
fn trace_writes_frames() {
    let dir = tempfile::tempdir().unwrap();
    let frames = dir.path().join("frames");
    let (code, out, _) = call(
        &["trace", "--family", "map", "--trace-dir", frames.to_str().unwrap()],
        "n=2 sigma=(1 2) alpha=(1 2) root=1\n",
    );
    assert_eq!(code, 0);
    assert!(out.ends_with("result (1:(0:()))\n"), "{out}");
    let steps = out.lines().count() - 1;
    assert!(out.lines().next().unwrap().starts_with("0 "));
    let written = std::fs::read_dir(&frames).unwrap().count();
    assert_eq!(written, steps);
    assert!(frames.join("frame-000.dot").exists());
}

#[test]
fn parse_errors_exit_one() {
    for (args, input) in [
        (&["convert", "--from", "tree", "--to", "map"][..], "(1:())\n"),
        (&["convert", "--from", "map", "--to", "tree"][..], "n=2 sigma=(1 2)\n"),
        (&["convert", "--from", "interval", "--to", "map"][..], "udx;ud\n"),
        (&["enumerate", "--family", "maps"][..], ""),
    ] {
        let (code, out, err) = call(args, input);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn map_interval_map_is_byte_identical() {
    for n in 0..=4 {
        let lines = map_lines(n);
        assert_eq!(lines.len(), enum_maps_oracle(n).len());
        let input = lines.join("\n") + "\n";
        let (_, intervals, _) = call(&["convert", "--from", "map", "--to", "interval"], &input);
        let (code, back, _) = call(&["convert", "--from", "interval", "--to", "map"], &intervals);
        assert_eq!(code, 0);
        assert_eq!(back, input, "n={n}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = call(&["enumerate", "--family", "intervals", "--size", "5", "--with-stats"], "");
    let b = call(&["enumerate", "--family", "intervals", "--size", "5", "--with-stats"], "");
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tree_map_tree_through_cli(n in 0usize..=5, pick in any::<prop::sample::Index>()) {
        let (_, trees, _) = call(&["enumerate", "--family", "trees", "--size", &n.to_string()], "");
        let trees: Vec<&str> = trees.lines().collect();
        let t = trees[pick.index(trees.len())];
        let (_, m, _) = call(&["convert", "--from", "tree", "--to", "map"], &format!("{t}\n"));
        let (code, back, _) = call(&["convert", "--from", "map", "--to", "tree"], &m);
        prop_assert_eq!(code, 0);
        prop_assert_eq!(back, format!("{t}\n"));
    }
}
