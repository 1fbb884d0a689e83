//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::io::Cursor;
use std::process::ExitCode;
use std::time::Instant;

use tamari_atlas::cli;
use tamari_atlas::verify::{self, CheckResult};

struct Criterion {
    number: usize,
    name: &'static str,
    run: fn() -> Vec<CheckResult>,
}

fn counting() -> Vec<CheckResult> {
    vec![verify::counting(7)]
}

fn roundtrips() -> Vec<CheckResult> {
    vec![
        verify::tree_map_tree(5),
        verify::map_tree_map(5),
        verify::interval_tree_interval(6),
        verify::tree_interval_tree(5),
    ]
}

fn statistics() -> Vec<CheckResult> {
    vec![verify::map_statistics(5), verify::edgeless_exception()]
}

fn generating_functions() -> Vec<CheckResult> {
    vec![verify::series_identity(7), verify::symmetry(7)]
}

fn oracle() -> Vec<CheckResult> {
    vec![verify::oracle_equivalence(5)]
}

fn structure() -> Vec<CheckResult> {
    vec![
        verify::node_labels(7),
        verify::certificate_location(6),
        verify::certificate_nesting(6),
        verify::exploration_traces(4),
        verify::rising_contacts(6),
        verify::upper_subtree_sizes(6),
    ]
}

fn multiset() -> Vec<CheckResult> {
    vec![verify::face_multiset(5)]
}

fn specialization() -> Vec<CheckResult> {
    vec![verify::plane_tree_specialization(6)]
}

const DOUBLE_EDGE: &str = "n=2 sigma=(1 2) alpha=(1 2) root=1";
const TREE: &str = "(1:(0:()))";
const INTERVAL: &str = "uuddud;uuuddd";

fn cli_triple() -> Vec<CheckResult> {
    let cases = [
        ("map", DOUBLE_EDGE, "tree", TREE),
        ("map", DOUBLE_EDGE, "interval", INTERVAL),
        ("tree", TREE, "map", DOUBLE_EDGE),
        ("tree", TREE, "interval", INTERVAL),
        ("interval", INTERVAL, "map", DOUBLE_EDGE),
        ("interval", INTERVAL, "tree", TREE),
    ];
    cases
        .iter()
        .map(|&(from, input, to, expected)| {
            let mut stdin = Cursor::new(format!("{input}\n").into_bytes());
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let args = ["tamari-atlas", "convert", "--from", from, "--to", to];
            let code = cli::run(args, &mut stdin, &mut out, &mut err);
            let out = String::from_utf8_lossy(&out).into_owned();
            let passed = code == 0 && out == format!("{expected}\n");
            CheckResult {
                id: format!("convert-{from}-{to}"),
                passed,
                detail: if passed {
                    expected.to_string()
                } else {
                    format!("exit {code}, stdout {out:?}, stderr {:?}", String::from_utf8_lossy(&err))
                },
            }
        })
        .collect()
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, name: "counting", run: counting },
        Criterion { number: 2, name: "roundtrips", run: roundtrips },
        Criterion { number: 3, name: "map-interval-statistics", run: statistics },
        Criterion { number: 4, name: "series-identity-and-symmetry", run: generating_functions },
        Criterion { number: 5, name: "oracle-equivalence", run: oracle },
        Criterion { number: 6, name: "structural-properties", run: structure },
        Criterion { number: 7, name: "face-multiset", run: multiset },
        Criterion { number: 8, name: "plane-tree-specialization", run: specialization },
        Criterion { number: 9, name: "cli-worked-triple", run: cli_triple },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let results = (c.run)();
        let passed = results.iter().all(|r| r.passed);
        let status = if passed { "PASS" } else { "FAIL" };
        println!("{status} criterion {} {} ({:.2?})", c.number, c.name, start.elapsed());
        for r in &results {
            println!("    {r}");
        }
        if !passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
