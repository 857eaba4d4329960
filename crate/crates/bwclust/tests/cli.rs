//! End-to-end checks of the command-line surface: printed values, exit
//! codes, JSON round-trips and byte-level determinism.

use std::process::{Command, Output};

fn bwclust(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwclust"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn bwt_prints_transform() {
    let out = bwclust(&["bwt", "aab", "--order", "ab"]);
    assert_eq!(stdout(&out), "baa\n");
    assert_eq!(code(&out), 0);
}

#[test]
fn ar_bound_and_longword() {
    let out = bwclust(&["ar", "bound", "--directive", ":abc"]);
    assert_eq!(stdout(&out), "26\n");
    assert_eq!(code(&out), 0);

    let out = bwclust(&["ar", "longword", "--directive", ":abc"]);
    assert_eq!(stdout(&out), "abacabaabacabacabaabacaba\n");
}

#[test]
fn cluster_exit_codes() {
    let out = bwclust(&["cluster", "baab", "--order", "ab"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("no clustering certificate"));

    let out = bwclust(&["cluster", "bacab"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("perfect"));

    let out = bwclust(&["cluster", "bacab", "--order", "abc", "--perfect"]);
    assert_eq!(code(&out), 0);

    let out = bwclust(&["cluster", "abaca", "--order", "acb", "--perfect"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn criterion_verdicts() {
    let out = bwclust(&["criterion", "abaa", "--order", "ab", "--pi", "ba"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: true"));

    let out = bwclust(&["criterion", "baab", "--order", "ab", "--pi", "ba"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn membership_and_desubstitution() {
    assert_eq!(code(&bwclust(&["ar", "member", "abaca", "--directive", ":abc"])), 0);
    assert_eq!(code(&bwclust(&["ar", "member", "bb", "--directive", ":abc"])), 1);
    assert_eq!(code(&bwclust(&["desub", "abac"])), 0);
    assert_eq!(code(&bwclust(&["desub", "abc"])), 1);
    assert_eq!(code(&bwclust(&["desub", "bacab"])), 1);
}

#[test]
fn episturmian_commands() {
    let out = bwclust(&["epi", "check", "--directive", "abc:ab"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("finitely many"));

    let out = bwclust(&["epi", "bound", "--directive", "abc:ab"]);
    assert_eq!(stdout(&out), "24\n");

    let out = bwclust(&["epi", "check", "--directive", "ab:ac"]);
    assert!(stdout(&out).contains("infinitely many"));

    // no finite bound in the infinite case
    let out = bwclust(&["epi", "bound", "--directive", "ab:ac"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn multi_commands() {
    let out = bwclust(&["multi", "bound", "--directive", ":abcd", "--letters", "4"]);
    assert_eq!(stdout(&out), "general: 60\nrefined: 58\n");

    let out = bwclust(&["multi", "check", "--directive", ":abcd", "--letters", "4"]);
    assert!(stdout(&out).contains("finitely many"));
}

#[test]
fn complexity_profile() {
    let out = bwclust(&["complexity", "--directive", "abc:ab", "--max", "6"]);
    let text = stdout(&out);
    for line in ["p(1) = 3", "p(4) = 9", "p(5) = 10", "p(6) = 11"] {
        assert!(text.contains(line), "{text}");
    }
}

#[test]
fn verify_suite_runs() {
    let out = bwclust(&["verify", "--suite", "car", "--max", "6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("pass"));

    let out = bwclust(&["verify", "--suite", "list-clist", "--max", "3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&bwclust(&["bwt", "a1b", "--order", "ab"])), 2);
    assert_eq!(code(&bwclust(&["bwt", "aab", "--order", "aa"])), 2);
    assert_eq!(code(&bwclust(&["ar", "bound", "--directive", "abc"])), 2);
    assert_eq!(code(&bwclust(&["ar", "bound", "--directive", "ab:"])), 2);
    assert_eq!(code(&bwclust(&["criterion", "ab", "--order", "ab", "--pi", "abc"])), 2);
    assert_eq!(code(&bwclust(&["no-such-command"])), 2);
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["cluster", "bacab", "--order", "abc"],
        vec!["criterion", "abaa", "--order", "ab", "--pi", "ba"],
        vec!["ar", "landmarks", "--directive", "abacba:abc"],
        vec!["ar", "gen", "--directive", ":abc", "--stage", "4"],
        vec!["epi", "check", "--directive", "ab:ac"],
        vec!["multi", "bound", "--directive", ":abcd", "--letters", "4"],
        vec!["desub", "abac"],
    ] {
        let mut full = vec!["--format", "json"];
        full.extend(&args);
        let out = bwclust(&full);
        let text = stdout(&out);
        let value: serde_json::Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
        // re-serializing the parsed value reproduces the same value
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, again, "{args:?}");
    }
}

#[test]
fn json_values_match_library() {
    let out = bwclust(&["--format", "json", "ar", "gen", "--directive", ":abc", "--stage", "4"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let state = bwclust::ar::evolve(&bwclust::ar::Directive::three("", "abc").unwrap(), 4).unwrap();
    assert_eq!(value, serde_json::to_value(&state).unwrap());

    let out = bwclust(&["--format", "json", "bwt", "bacab", "--order", "abc"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value, serde_json::json!({ "transform": "cbbaa" }));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["ar", "census", "--directive", ":abc", "--max", "8"],
        vec!["--format", "json", "cluster", "abaca"],
        vec!["ar", "landmarks", "--directive", ":abc"],
    ] {
        let a = bwclust(&args);
        let b = bwclust(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), code(&b));
    }
}

#[test]
fn palindromic_construction_command() {
    let out = bwclust(&["ar", "palindromic", "ac"]);
    assert_eq!(stdout(&out), "bacab\n");

    let out = bwclust(&["ar", "palindromic", "ac", "--wrap", "a"]);
    assert_eq!(stdout(&out), "abaacaab\n");

    assert_eq!(code(&bwclust(&["ar", "palindromic", "aa"])), 2);
}

#[test]
fn sturmian_and_binary_commands() {
    let out = bwclust(&["epi", "sturmian", "--directive", ":ab", "--stage", "2"]);
    assert!(stdout(&out).contains("a: aba"));

    assert_eq!(code(&bwclust(&["epi", "binary", "abaa"])), 0);
    assert_eq!(code(&bwclust(&["epi", "binary", "baab"])), 1);
}
