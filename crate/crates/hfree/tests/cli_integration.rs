//! End-to-end runs of the command-line interface: file round-trips, exit
//! codes, and output determinism.

use std::fs;
use std::path::Path;

use hfree::cli::run;
use hfree::io;

fn cli(args: &[&str]) -> i32 {
    run(std::iter::once("hfree").chain(args.iter().copied()))
}

fn read(path: &Path) -> String {
    fs::read_to_string(path).unwrap()
}

#[test]
fn gen_augment_pipeline_produces_the_26_vertex_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = dir.path().join("p6.el");
    let out = dir.path().join("p6_plus.el");
    let wedges = dir.path().join("p6_plus.wedges");

    assert_eq!(cli(&["gen", "--family", "path", "--n", "6", "--output", p6.to_str().unwrap()]), 0);
    assert_eq!(
        cli(&[
            "augment",
            "--pattern",
            p6.to_str().unwrap(),
            "--output",
            out.to_str().unwrap(),
            "--wedges",
            wedges.to_str().unwrap(),
        ]),
        0
    );
    let (g, _) = io::read_graph(&out).unwrap();
    assert_eq!(g.n(), 26);
    assert_eq!(read(&wedges).lines().count(), 10);
}

#[test]
fn gadget_emission_and_verification() {
    let dir = tempfile::tempdir().unwrap();
    let gr = dir.path().join("grotzsch.el");
    assert_eq!(cli(&["gadget", "--kind", "grotzsch", "--output", gr.to_str().unwrap()]), 0);
    let (g, _) = io::read_graph(&gr).unwrap();
    assert_eq!((g.n(), g.m()), (11, 20));

    let x = dir.path().join("x.el");
    let xt = dir.path().join("x.t");
    assert_eq!(
        cli(&["gadget", "--kind", "x", "--output", x.to_str().unwrap(), "--terminals", xt.to_str().unwrap()]),
        0
    );
    assert_eq!(
        cli(&[
            "verify",
            "--check",
            "pair-rigidity",
            "--gadget",
            x.to_str().unwrap(),
            "--terminals",
            xt.to_str().unwrap(),
        ]),
        0
    );
    assert_eq!(cli(&["verify", "--check", "grotzsch-critical"]), 0);
}

#[test]
fn colored_augment_builds_and_verifies_hstar() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = dir.path().join("c6.cel");
    // cyclically colored C6
    fs::write(&c6, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\ncolors\n0 0\n1 1\n2 2\n3 0\n4 1\n5 2\n").unwrap();
    let out = dir.path().join("c6_star.el");
    let terms = dir.path().join("c6_star.t");
    assert_eq!(
        cli(&[
            "colored-augment",
            "--pattern",
            c6.to_str().unwrap(),
            "--output",
            out.to_str().unwrap(),
            "--terminals",
            terms.to_str().unwrap(),
            "--verify",
        ]),
        0
    );
    let (g, _) = io::read_graph(&out).unwrap();
    assert_eq!(g.n(), 75);
    assert!(read(&terms).contains("x1"));

    assert_eq!(
        cli(&["verify", "--check", "hstar-soundness", "--pattern", c6.to_str().unwrap(), "--gadget", out.to_str().unwrap()]),
        0
    );
}

#[test]
fn detect_round_trips_with_stats() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.cel");
    let pattern = dir.path().join("c6.el");
    let stats = dir.path().join("stats.json");
    assert_eq!(
        cli(&["gen", "--family", "odd-cycle-blowup", "--cycle", "9", "--block", "3", "--output", host.to_str().unwrap()]),
        0
    );
    assert_eq!(cli(&["gen", "--family", "cycle", "--n", "6", "--output", pattern.to_str().unwrap()]), 0);
    assert_eq!(
        cli(&[
            "detect",
            "--pattern",
            pattern.to_str().unwrap(),
            "--host",
            host.to_str().unwrap(),
            "--seed",
            "11",
            "--audit-promise",
            "--stats-json",
            stats.to_str().unwrap(),
        ]),
        0
    );
    let parsed: serde_json::Value = serde_json::from_str(&read(&stats)).unwrap();
    assert_eq!(parsed["command"], "detect");
    assert_eq!(parsed["seed"], 11);
    assert_eq!(parsed["n"], 27);
    assert_eq!(parsed["triangle_partition_ok"], true);
    assert!(parsed["instance_count"].as_u64().is_some());
    assert!(parsed["max_instance_size"].as_u64().is_some());
    assert!(parsed["wall_ms"].as_u64().is_some());
}

#[test]
fn audit_flag_turns_promise_violations_into_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.el");
    let pattern = dir.path().join("p5.el");
    assert_eq!(cli(&["gen", "--family", "path", "--n", "9", "--output", host.to_str().unwrap()]), 0);
    assert_eq!(cli(&["gen", "--family", "path", "--n", "5", "--output", pattern.to_str().unwrap()]), 0);
    assert_eq!(
        cli(&[
            "detect",
            "--pattern",
            pattern.to_str().unwrap(),
            "--host",
            host.to_str().unwrap(),
            "--seed",
            "0",
            "--audit-promise",
        ]),
        1
    );
}

#[test]
fn io_failures_exit_2() {
    assert_eq!(cli(&["augment", "--pattern", "/nonexistent/p.el", "--output", "/tmp/x.el"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "2 1\n0 0\n").unwrap();
    assert_eq!(cli(&["augment", "--pattern", bad.to_str().unwrap(), "--output", "/tmp/x.el"]), 2);
    // unknown flags are rejected by the parser
    assert_eq!(cli(&["gadget", "--kind", "eq", "--output", "/tmp/x.el", "--bogus"]), 2);
}

#[test]
fn degenerate_color_search_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = dir.path().join("p5.el");
    let p5p = dir.path().join("p5_plus.el");
    let col = dir.path().join("p5_plus.cel");
    assert_eq!(cli(&["gen", "--family", "path", "--n", "5", "--output", p5.to_str().unwrap()]), 0);
    assert_eq!(cli(&["augment", "--pattern", p5.to_str().unwrap(), "--output", p5p.to_str().unwrap()]), 0);
    assert_eq!(
        cli(&["degenerate-color", "--pattern", p5p.to_str().unwrap(), "--output", col.to_str().unwrap()]),
        0
    );
    // checking the coloring we just found passes
    assert_eq!(
        cli(&["degenerate-color", "--pattern", p5p.to_str().unwrap(), "--coloring", col.to_str().unwrap()]),
        0
    );
}

#[test]
fn colorcode_and_sieve_write_instances() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.el");
    let out = dir.path().join("instances");
    let stats = dir.path().join("cc.json");
    assert_eq!(
        cli(&["gen", "--family", "random-gnp", "--n", "60", "--p", "0.04", "--seed", "5", "--output", host.to_str().unwrap()]),
        0
    );
    assert_eq!(
        cli(&[
            "colorcode",
            "--host",
            host.to_str().unwrap(),
            "--out-dir",
            out.to_str().unwrap(),
            "--stats-json",
            stats.to_str().unwrap(),
            "--seed",
            "5",
        ]),
        0
    );
    let parsed: serde_json::Value = serde_json::from_str(&read(&stats)).unwrap();
    let count = parsed["instance_count"].as_u64().unwrap();
    assert!(count > 0);
    assert!(out.join("instance_00000.cel").exists());
    assert!(out.join("instance_00000.map").exists());

    let tri = dir.path().join("k222.cel");
    assert_eq!(
        cli(&["gen", "--family", "complete-tripartite", "--part", "2", "--output", tri.to_str().unwrap()]),
        0
    );
    let sieved = dir.path().join("sieved");
    assert_eq!(
        cli(&["sieve", "--instance", tri.to_str().unwrap(), "--seed", "3", "--reps", "2", "--out-dir", sieved.to_str().unwrap()]),
        0
    );
    assert!(sieved.join("instance_00000.cel").exists());
}

#[test]
fn identical_argv_and_seed_give_identical_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.el");
    let b = dir.path().join("b.el");
    for out in [&a, &b] {
        assert_eq!(
            cli(&["gen", "--family", "random-gnp", "--n", "40", "--p", "0.3", "--seed", "77", "--output", out.to_str().unwrap()]),
            0
        );
    }
    assert_eq!(read(&a), read(&b));
}

#[test]
fn export_to_dot() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.cel");
    let dot = dir.path().join("g.dot");
    assert_eq!(
        cli(&["gen", "--family", "complete-tripartite", "--part", "1", "--output", g.to_str().unwrap()]),
        0
    );
    assert_eq!(
        cli(&["export", "--input", g.to_str().unwrap(), "--format", "dot", "--output", dot.to_str().unwrap()]),
        0
    );
    let body = read(&dot);
    assert!(body.starts_with("graph g {"));
    assert!(body.contains("fillcolor="));
}

#[test]
fn verify_all_corpus_passes() {
    assert_eq!(cli(&["verify", "--all"]), 0);
}
