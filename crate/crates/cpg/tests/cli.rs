//! End-to-end transcripts for the command-line interface.
//!
//! Every assertion here compares full output bytes and the exit code, so
//! these tests double as the frozen reference for report formats. The
//! in-process `run` entry point is used throughout; the one environment
//! variable test spawns the real binary to keep process state isolated.

use std::fs;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cpg").chain(args.iter().copied());
    let code = cpg::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}

fn write(dir: &TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, content).expect("fixture write");
    path.to_str().expect("UTF-8 path").to_string()
}

fn trio(dir: &TempDir) -> String {
    write(dir, "trio.cpg", "cpg 1\n3\n2 3 5\n")
}

fn unit_table(dir: &TempDir) -> String {
    write(dir, "unit.tug", "tug 1\n2\n0 0\n1 1\n2 1\n3 1\n")
}

#[test]
fn imputation_prints_the_identity_marginal_vector() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, err) = run(&["imputation", &game]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "2 4 24\n", ""));
}

#[test]
fn core_check_reports_the_first_blocker() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, err) = run(&["core-check", &game, "--inline", "28 1 1"]);
    assert_eq!(
        (code, out.as_str(), err.as_str()),
        (1, "Blocked witness {2} excess 2\n", "")
    );
}

#[test]
fn verify_confirms_convexity() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, err) = run(&["verify", &game, "--properties", "convex"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "convex Pass\n", ""));
}

#[test]
fn reports_are_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    for args in [
        vec!["imputation", game.as_str()],
        vec!["core-check", game.as_str(), "--inline", "28 1 1"],
        vec!["verify", game.as_str(), "--properties", "convex"],
        vec!["shapley", game.as_str(), "--format", "json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second, "args {args:?} must reproduce bytes");
    }
}

#[test]
fn value_handles_members_and_the_empty_coalition() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    assert_eq!(run(&["value", &game, "--coalition", "1,2"]).1, "6\n");
    assert_eq!(run(&["value", &game, "--coalition", "2,3"]).1, "15\n");
    assert_eq!(run(&["value", &game, "--coalition", ""]).1, "0\n");
    assert_eq!(run(&["value", &game, "--coalition", "1,2,3"]).1, "30\n");
}

#[test]
fn imputation_accepts_a_permutation() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, _) = run(&["imputation", &game, "--permutation", "3,2,1"]);
    assert_eq!((code, out.as_str()), (0, "15 10 5\n"));
}

#[test]
fn core_check_accepts_members_from_a_file() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let imp = write(&dir, "even.imp", "10 10 10\n");
    let (code, out, _) = run(&["core-check", &game, "--imputation", &imp]);
    assert_eq!((code, out.as_str()), (0, "InCore\n"));
}

#[test]
fn excess_is_signed_and_exact() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, _) = run(&[
        "excess", &game, "--inline", "10 10 10", "--coalition", "2,3",
    ]);
    assert_eq!((code, out.as_str()), (0, "-5\n"));
    let (code, out, _) = run(&["excess", &game, "--inline", "28 1 1", "--coalition", "2"]);
    assert_eq!((code, out.as_str()), (0, "2\n"));
}

#[test]
fn shapley_banzhaf_and_weber_print_exact_vectors() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    assert_eq!(run(&["shapley", &game]).1, "7 10 13\n");
    assert_eq!(run(&["banzhaf", &game]).1, "25/4 37/4 49/4\n");
    let (code, out, _) = run(&["weber", &game, "--mix", "1,2,3@1/2;3,2,1@1/2"]);
    assert_eq!((code, out.as_str()), (0, "17/2 7 29/2\n"));
}

#[test]
fn verify_runs_every_property_on_a_product_game() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, _) = run(&[
        "verify",
        &game,
        "--properties",
        "monotone,superadditive,convex,dummies",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "monotone Pass\nsuperadditive Pass\nconvex Pass\ndummies Pass\n"
    );
}

#[test]
fn verify_reports_table_violations_with_witnesses() {
    let dir = TempDir::new().unwrap();
    let table = unit_table(&dir);
    let (code, out, _) = run(&[
        "verify",
        &table,
        "--properties",
        "monotone,superadditive,convex,dummies",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "monotone Pass\n\
         superadditive Violated witness {1} {2}\n\
         convex Violated witness {1} {2}\n\
         dummies Pass\n"
    );
}

#[test]
fn verify_flags_dummy_players() {
    let dir = TempDir::new().unwrap();
    let table = write(&dir, "null.tug", "tug 1\n2\n0 0\n1 3\n2 0\n3 3\n");
    let (code, out, _) = run(&["verify", &table, "--properties", "dummies"]);
    assert_eq!((code, out.as_str()), (1, "dummies Violated witness {2}\n"));
}

#[test]
fn json_reports_have_stable_shapes() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, _) = run(&["imputation", &game, "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"command\":\"imputation\",\"game\":{\"n\":3,\"weights\":[\"2\",\"3\",\"5\"]},\
         \"permutation\":[1,2,3],\"payoffs\":[\"2\",\"4\",\"24\"]}\n"
    );

    let (code, out, _) = run(&[
        "core-check", &game, "--inline", "28 1 1", "--format", "json",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "{\"command\":\"core-check\",\"game\":{\"n\":3,\"weights\":[\"2\",\"3\",\"5\"]},\
         \"imputation\":[\"28\",\"1\",\"1\"],\"outcome\":\"Blocked\",\"witness\":[2],\
         \"excess\":\"2\"}\n"
    );

    let table = unit_table(&dir);
    let (code, out, _) = run(&["verify", &table, "--properties", "convex", "--format", "json"]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "{\"command\":\"verify\",\"table\":{\"n\":2,\"values\":[\"0\",\"1\",\"1\",\"1\"]},\
         \"properties\":[{\"property\":\"convex\",\"outcome\":\"Violated\",\
         \"witness\":{\"a\":[1],\"b\":[2]}}]}\n"
    );

    let (code, out, _) = run(&["value", &game, "--coalition", "", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"command\":\"value\",\"game\":{\"n\":3,\"weights\":[\"2\",\"3\",\"5\"]},\
         \"coalition\":[],\"value\":\"0\"}\n"
    );
}

#[test]
fn parse_errors_exit_2_with_diagnostics_on_stderr() {
    let dir = TempDir::new().unwrap();
    let bad_weight = write(&dir, "bad.cpg", "cpg 1\n2\n1 1\n");
    let (code, out, err) = run(&["shapley", &bad_weight]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("line 3"), "stderr was: {err}");
    assert!(err.starts_with("error:"), "stderr was: {err}");

    let bad_magic = write(&dir, "bad_magic.cpg", "pgn 1\n2\n2 2\n");
    assert_eq!(run(&["shapley", &bad_magic]).0, 2);

    let game = trio(&dir);
    let (code, _, err) = run(&["core-check", &game, "--inline", "1 1 1"]);
    assert_eq!(code, 2);
    assert!(err.contains("sum to 3"), "stderr was: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);

    let missing = dir.path().join("absent.cpg");
    assert_eq!(run(&["shapley", missing.to_str().unwrap()]).0, 2);

    assert_eq!(run(&["value", &game, "--coalition", "1,x"]).0, 2);
    assert_eq!(run(&["value", &game, "--coalition", "1,4"]).0, 2);
    assert_eq!(run(&["imputation", &game, "--permutation", "1,2"]).0, 2);
    assert_eq!(run(&["verify", &game, "--properties", "convexx"]).0, 2);
    assert_eq!(run(&["weber", &game, "--mix", "1,2,3@1/2"]).0, 2);
    assert_eq!(run(&["core-check", &game]).0, 2);
    let (code, _, _) = run(&[
        "core-check", &game, "--inline", "2 4 24", "--imputation", "also.imp",
    ]);
    assert_eq!(code, 2);
    assert_eq!(run(&["frobnicate", &game]).0, 2);
    assert_eq!(run(&[]).0, 2);
}

#[test]
fn limit_overruns_exit_3() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let (code, out, err) = run(&["verify", &game, "--properties", "convex", "--limit", "2"]);
    assert_eq!((code, out.as_str()), (3, ""));
    assert!(err.contains("3 players"), "stderr was: {err}");
}

#[test]
fn help_exits_0_on_stdout() {
    let (code, out, err) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("core-check"));
    assert!(err.is_empty());
}

#[test]
fn cpg_limit_env_var_caps_every_command() {
    let dir = TempDir::new().unwrap();
    let game = trio(&dir);
    let bin = env!("CARGO_BIN_EXE_cpg");

    let capped = std::process::Command::new(bin)
        .args(["shapley", &game])
        .env("CPG_LIMIT", "2")
        .output()
        .expect("spawn cpg");
    assert_eq!(capped.status.code(), Some(3));
    assert!(capped.stdout.is_empty());

    let garbage = std::process::Command::new(bin)
        .args(["shapley", &game])
        .env("CPG_LIMIT", "many")
        .output()
        .expect("spawn cpg");
    assert_eq!(garbage.status.code(), Some(2));

    let roomy = std::process::Command::new(bin)
        .args(["shapley", &game])
        .env("CPG_LIMIT", "12")
        .output()
        .expect("spawn cpg");
    assert_eq!(roomy.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&roomy.stdout), "7 10 13\n");
}
