use std::path::Path;
use std::process::{Command, Output};

use affine_nilhecke::affine_perm::elements_up_to_length;

fn run_in(cache: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_affine-pieri"));
    cmd.args(args).env_remove("AFFINE_NILHECKE_CACHE");
    match cache {
        Some(dir) => cmd.arg("--cache-dir").arg(dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_in(None, args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn struct_const_spot_value() {
    let out = run(&["struct-const", "-n", "2", "s1 s0", "s0", "s0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[{\"coeff\":2,\"exps\":[0]}]\n");
    let out = run(&["struct-const", "-n", "2", "s1 s0", "s1 s0", "s1 s0"]);
    assert_eq!(stdout(&out), "4*y1^2\n");
}

#[test]
fn methods_agree_byte_for_byte() {
    let n = 2;
    let elems = elements_up_to_length(n, 3);
    let windows: Vec<String> = elems.iter().map(|w| w.to_string()).collect();
    for w in &windows {
        for u in &windows[..5] {
            for v in &windows[..5] {
                let base = ["struct-const", "-n", "2", w, u, v, "--json"];
                let delta = run(&[&base[..], &["--method", "delta"]].concat());
                let subset = run(&[&base[..], &["--method", "subset"]].concat());
                assert_eq!(delta.status.code(), Some(0));
                assert_eq!(delta.stdout, subset.stdout, "w={w} u={u} v={v}");
            }
        }
    }
}

#[test]
fn pieri_check_passes() {
    let out = run(&["pieri-check", "--n", "2", "--max-len", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "PASS n=2 max_len=6: 42 checks, 0 mismatches\n"
    );
    let out = run(&["pieri-check", "-n", "3", "--max-len", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("{\"n\":3,\"max_len\":3,\"checked\":42,\"pass\":true"));
}

#[test]
fn strips_json() {
    let out = run(&["strips", "-n", "2", "s1 s0", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "[{\"inside\":[-1,4],\"outside\":[1,2],\"covers\":[{\"i\":0,\"j\":3,\"a\":1},{\"i\":0,\"j\":1,\"a\":0}]}]\n"
    );
    let out = run(&["strips", "-n", "2", "[-1,4]", "1"]);
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn symmetric_function_commands() {
    let out = run(&["strong-schur", "-n", "2", "s1 s0", "id"]);
    assert_eq!(stdout(&out), "m(2) + 2*m(1,1)\n");
    let out = run(&["kschur", "-n", "3", "(2,1)"]);
    assert_eq!(stdout(&out), "m(3) + 2*m(2,1) + 3*m(1,1,1)\n");
    let out = run(&["weak-schur", "-n", "2", "s1 s0"]);
    assert_eq!(stdout(&out), "m(1,1)\n");
    let out = run(&["kschur", "-n", "2", "(1,1)", "--json"]);
    assert_eq!(
        stdout(&out),
        "{\"degree\":2,\"terms\":[{\"partition\":[2],\"coeff\":1},{\"partition\":[1,1],\"coeff\":2}]}\n"
    );
}

#[test]
fn verification_commands_succeed() {
    let out = run(&["cauchy-check", "-n", "3", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("PASS"))
            .count(),
        4
    );
    let out = run(&["strong-expand", "-n", "3", "s1 s2 s0", "s0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn cap_and_coproduct() {
    let out = run(&["cap", "-n", "2", "s0", "s1 s0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let one = run(&["cap", "-n", "2", "[0,3]", "[-1,4]"]);
    assert_eq!(stdout(&one), text);
    let out = run(&["coproduct", "-n", "2", "s1 s0", "--eval0"]);
    assert_eq!(stdout(&out).lines().count(), 5);
    assert!(stdout(&out).contains("2 A[0,3] (x) A[0,3]"));
}

#[test]
fn warm_cache_matches_cold() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["coproduct", "-n", "3", "s1 s2 s0 s1", "--json"][..],
        &["pieri-check", "-n", "3", "--max-len", "4", "--json"][..],
        &["cap", "-n", "3", "s1 s0", "s2 s1 s0 s2", "--json"][..],
    ] {
        let cold = run_in(Some(dir.path()), args);
        let warm = run_in(Some(dir.path()), args);
        let uncached = run(args);
        assert_eq!(cold.status.code(), Some(0));
        assert_eq!(cold.stdout, warm.stdout);
        assert_eq!(cold.stdout, uncached.stdout);
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["covers", "-n", "2", "[1,3]"][..],
        &["covers", "-n", "2", "s1 s1"][..],
        &["kschur", "-n", "2", "(2)"][..],
        &["kschur", "-n", "3", "(1,2)"][..],
        &["covers", "-n", "1", "id"][..],
        &["frobnicate"][..],
        &["strips", "-n", "2", "s0"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["covers", "-n", "2", "[1,3]"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("sum of w(i) - i is 1"), "{err}");
}
