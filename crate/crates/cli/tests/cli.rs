//! Runs the `idinf` binary end to end.

use std::process::{Command, Output};

use idinf::sample::random_element;
use idinf_cli::parse_element;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn idinf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idinf"))
        .args(args)
        .env_remove("IDINF_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = idinf(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["eval", "<+x+1|{0}> * <+x+1|{0}>"]), "{\"result\":\"<+x+2|{-1,0}>\"}\n");
    assert_eq!(stdout(&["eval", "<+x+1|{0}>^-1"]), "{\"result\":\"<+x-1|{1}>\"}\n");
    assert_eq!(stdout(&["leq", "<+x+1|{0,3}>", "<+x+1|{0}>"]), "{\"leq\":true}\n");
    assert_eq!(stdout(&["leq", "<+x+1|{0}>", "<+x+1|{0,3}>"]), "{\"leq\":false}\n");
    assert_eq!(
        stdout(&["upset", "<+x+0|{0,1}>"]),
        "{\"count\":4,\"upset\":[\"<+x+0|{}>\",\"<+x+0|{0}>\",\"<+x+0|{0,1}>\",\"<+x+0|{1}>\"]}\n"
    );
    assert_eq!(stdout(&["sigma-max", "<-x+4|{2,7}>"]), "{\"result\":\"<-x+4|{}>\"}\n");
    assert_eq!(stdout(&["sigma-eq", "<+x+2|{0}>", "<+x+2|{9}>"]), "{\"sigma_eq\":true}\n");
    assert_eq!(
        stdout(&["green", "<+x+0|{0}>", "<+x+5|{0}>"]),
        "{\"L\":false,\"R\":true,\"H\":false,\"D\":true}\n"
    );
}

#[test]
fn solver_output_shape() {
    let text = stdout(&["solve-right", "<+x+0|{}>", "<+x+0|{0}>"]);
    assert_eq!(text, "{\"count\":1,\"solutions\":[\"<+x+0|{0}>\"],\"unit_member\":null}\n");
    let text = stdout(&["solve-left", "<+x+1|{0}>", "<+x+1|{0}>"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["unit_member"], "<+x+0|{}>");
}

#[test]
fn semidirect_and_pair_commands_round_trip() {
    let text = stdout(&["to-semidirect", "<-x+3|{0,1}>"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let (g, s) = (v["gamma"].as_str().unwrap(), v["ran_excl"].as_str().unwrap());
    assert_eq!(stdout(&["from-semidirect", g, s]), "{\"result\":\"<-x+3|{0,1}>\"}\n");

    let text = stdout(&["mc-embed", "<+x+2|{0}>"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["t"], "+x+2");
    let f = v["idem_excl"].as_str().unwrap().to_string();
    let prod = stdout(&["mc-mul", &f, "+x+2", "{}", "+x+0"]);
    assert_eq!(prod, text);
}

#[test]
fn exit_codes() {
    let bad = idinf(&["eval", "<+x+1|{0}> *"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("line 1, column 13"), "{err}");

    assert_eq!(idinf(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(idinf(&["--help"]).status.code(), Some(0));
    assert_eq!(idinf(&["eval"]).status.code(), Some(2));

    let overflow = idinf(&["eval", "<+x+9223372036854775807|{}> * <+x+1|{}>"]);
    assert_eq!(overflow.status.code(), Some(4));

    let huge: Vec<String> = (0..24).map(|i| i.to_string()).collect();
    let lit = format!("<+x+0|{{{}}}>", huge.join(","));
    assert_eq!(idinf(&["upset", &lit]).status.code(), Some(5));
}

#[test]
fn help_documents_the_grammar() {
    let text = stdout(&["--help"]);
    assert!(text.contains("^-1 is the inverse and binds tighter than *"));
    assert!(text.contains("applies E first"));
}

#[test]
fn oracle_check_small_run() {
    let text = stdout(&["oracle-check", "--samples", "200", "--window", "10", "--threads", "3"]);
    let lines: Vec<serde_json::Value> =
        text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|v| v["pass"] == true), "{text}");
}

#[test]
fn seed_comes_from_environment() {
    let args = ["oracle-check", "--samples", "50", "--window", "8"];
    let from_env = Command::new(env!("CARGO_BIN_EXE_idinf"))
        .args(args)
        .env("IDINF_SEED", "9")
        .output()
        .unwrap();
    let explicit = stdout(&[&args[..], &["--seed", "9"]].concat());
    assert_eq!(String::from_utf8(from_env.stdout).unwrap(), explicit);
    assert!(explicit.contains("\"seed\":9"));
}

#[test]
fn circle_demo_rows() {
    let text = stdout(&["circle-demo", "--max-n", "20", "--every", "10"]);
    let lines: Vec<serde_json::Value> =
        text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["n"], 10);
    assert_eq!(lines[2]["all_within_bound"], true);
    assert_eq!(lines[2]["injective"], true);
}

#[test]
fn pretty_flag() {
    let text = stdout(&["--pretty", "eval", "<+x+0|{}>"]);
    assert_eq!(text, "{\n  \"result\": \"<+x+0|{}>\"\n}\n");
}

proptest! {
    #[test]
    fn print_parse_print(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_element(&mut rng, 1 << 40, 6);
        let text = p.to_string();
        let back = parse_element(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }
}
