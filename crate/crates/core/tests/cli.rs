//! End-to-end runs of the command-line front end. Golden files live in
//! `tests/golden`; set `UPDATE_GOLDEN=1` to rewrite them.

mod common;

use common::{check_golden, corpus_golden, parameter_golden, run, run_with_stdin};

use serde_json::Value;

use hyparr::{braid_arrangement, parse_arrangement, serialize_arrangement};

#[test]
fn golden_lattice() {
    check_golden("lattice", &corpus_golden(&["lattice"]));
}

#[test]
fn golden_charpoly() {
    check_golden("charpoly", &corpus_golden(&["charpoly"]));
}

#[test]
fn golden_betti() {
    check_golden("betti", &corpus_golden(&["betti"]));
}

#[test]
fn golden_fibertype() {
    check_golden("fibertype", &corpus_golden(&["fibertype"]));
}

#[test]
fn golden_suspension() {
    check_golden("suspension", &corpus_golden(&["suspension"]));
    check_golden("suspension_full_poset", &corpus_golden(&["suspension", "--full-poset"]));
}

#[test]
fn golden_lgroups() {
    check_golden("lgroups", &corpus_golden(&["lgroups"]));
}

#[test]
fn golden_parametric_commands() {
    check_golden("braid", &parameter_golden("braid", &["1", "2", "3"]));
    check_golden("surgery-pb", &parameter_golden("surgery-pb", &["1", "2", "5"]));
    check_golden("spf-pb", &parameter_golden("spf-pb", &["1", "2", "5"]));
}

#[test]
fn text_outputs() {
    let o = run(&["surgery-pb", "2"]);
    assert_eq!(o.code, 0);
    for row in ["L_i = Z\t", "L_i = Z^3\t", "L_i = Z_2\t", "L_i = Z_2^3\t"] {
        assert!(o.stdout.contains(row), "{}", o.stdout);
    }

    let o = run(&["fibertype", "corpus/braid3.arr"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("ranks 1 2 3"), "{}", o.stdout);

    let o = run(&["fibertype", "corpus/generic4.arr"]);
    assert_eq!(o.code, 3);
    assert!(o.stdout.contains("not fiber-type"), "{}", o.stdout);

    let o = run(&["charpoly", "corpus/braid3.arr"]);
    assert!(o.stdout.contains("t^4 - 6t^3 + 11t^2 - 6t"), "{}", o.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).code, 1);
    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["surgery-pb"]).code, 1);
    assert_eq!(run(&["surgery-pb", "x"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
    assert_eq!(run(&["surgery-pb", "0"]).code, 2);
    assert_eq!(run(&["betti", "corpus/does_not_exist.arr"]).code, 2);

    let o = run_with_stdin(&["betti", "-"], "arrangement 2\n0 0 ; 1\n");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    assert!(o.stdout.is_empty());

    assert_eq!(run(&["lgroups", "corpus/generic4.arr"]).code, 3);
    let forced = run(&["lgroups", "--force-N", "4", "corpus/generic4.arr"]);
    assert_eq!(forced.code, 0, "{}", forced.stderr);
    assert!(forced.stdout.contains("Z^4"));
}

#[test]
fn quiet_suppresses_output() {
    let o = run(&["--quiet", "suspension", "--full-poset", "corpus/braid2.arr"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.is_empty());
    assert_eq!(run(&["-q", "fibertype", "corpus/generic4.arr"]).code, 3);
}

#[test]
fn warnings_go_to_stderr() {
    let o = run(&["suspension", "--full-poset", "corpus/braid2.arr"]);
    assert_eq!(o.code, 0);
    assert!(o.stderr.contains("warning: divergence"), "{}", o.stderr);
    assert!(!o.stdout.contains("warning"));
}

#[test]
fn serialize_parse_round_trip_on_corpus() {
    let mut inputs: Vec<_> = common::corpus().into_iter().map(|(_, a)| a).collect();
    inputs.extend((1..=5).map(|n| braid_arrangement(n).unwrap()));
    assert!(inputs.len() >= 10);
    for a in inputs {
        let text = serialize_arrangement(&a);
        assert_eq!(parse_arrangement(&text).unwrap(), a, "{text}");
        assert_eq!(serialize_arrangement(&parse_arrangement(&text).unwrap()), text);
    }
}

#[test]
fn braid_pipes_into_fibertype() {
    for n in 1..=5usize {
        let emitted = run(&["braid", &n.to_string()]);
        assert_eq!(emitted.code, 0);
        let o = run_with_stdin(&["--json", "fibertype", "-"], &emitted.stdout);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["input"], "-");
        let ranks: Vec<u64> = v["result"]["tower"]["fiber_ranks"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert_eq!(ranks, (1..=n as u64).collect::<Vec<_>>());
    }
}
