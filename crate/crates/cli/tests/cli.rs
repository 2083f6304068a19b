use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use cliffpair_core::cohomology::{h2_cyclic, H2Result};
use cliffpair_core::corpus;

fn workspace() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffpair")).args(args).current_dir(workspace()).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cliffpair-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn chartab_s3() {
    let v = json(&["chartab", "corpus/s3.json"]);
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 2]));
    let text = String::from_utf8(run(&["chartab", "s3", "--format", "text"]).stdout).unwrap();
    assert!(text.contains("chi2: 2 | 0 | -1"), "{text}");
}

#[test]
fn center_of_q8_pair() {
    let v = json(&["pair", "center", "--kappa", "q8_to_c2.json", "--theta", "faithful", "--field", "Q"]);
    assert_eq!(v["field"], "Q(zeta4)");
    assert_eq!(v["r"], 1);
    assert_eq!(v["action"]["1"], 3);
}

#[test]
fn h2_v4_round_trips() {
    let v = json(&["h2", "corpus/v4.json", "--mod", "2"]);
    assert_eq!(v["invariant_factors"], serde_json::json!([2, 2, 2]));
    let parsed: H2Result = serde_json::from_value(v).unwrap();
    assert_eq!(parsed, h2_cyclic(&corpus::group("v4").unwrap(), 2).unwrap());
    let m = json(&["multiplier", "a4"]);
    assert_eq!(m["invariant_factors"], serde_json::json!([2]));
}

#[test]
fn exit_codes() {
    // malformed input
    assert_eq!(run(&["chartab", "no_such_group"]).status.code(), Some(2));
    assert_eq!(run(&["h2", "c2", "--mod", "two"]).status.code(), Some(2));
    assert_eq!(run(&["pair", "center", "--kappa", "q8_to_c2", "--theta", "faithful", "--field", "Q(cbrt2)"]).status.code(), Some(2));
    let dir = scratch("bad");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"cayley": [[0, 1], [1, 1]]}"#).unwrap();
    assert_eq!(run(&["chartab", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, r#"{"degree": 3, "generators": ["(1 4)"]}"#).unwrap();
    assert_eq!(run(&["chartab", bad.to_str().unwrap()]).status.code(), Some(2));
    // domain error: induction needs a semi-invariant pair
    let id = dir.join("id_c3.json");
    std::fs::write(&id, r#"{"src": "c3", "dst": "c3", "images": [0, 1, 2]}"#).unwrap();
    let out = run(&["pair", "induce", "--kappa", "a4_to_c3", "--theta", "1", "--into", id.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not semi-invariant"));
    // unknown suite
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn pair_reports_feed_back_in() {
    let dir = scratch("pairs");
    let conj = dir.join("conj.json");
    let out = run(&["pair", "conj", "--kappa", "q8_to_c2", "--theta", "faithful"]);
    assert!(out.status.success());
    std::fs::write(&conj, &out.stdout).unwrap();
    let conj = conj.to_str().unwrap();

    let again = json(&["pair", "conj", "--pair", conj]);
    let orig = json(&["pair", "conj", "--pair", conj]);
    assert_eq!(again, orig);

    let prod = json(&["pair", "product", "--kappa", "q8_to_c2", "--theta", "faithful", "--pair2", conj]);
    assert_eq!((prod["order"].as_u64(), prod["kernel_order"].as_u64()), (Some(32), Some(16)));
    assert_eq!(prod["center"]["field"], "Q(zeta4)");

    let check = json(&["pair", "check", "--pair", conj]);
    assert_eq!(check["semi_invariant"], true);
    assert_eq!(check["kernel_order"], 4);
}

#[test]
fn identity_induce_restrict_corestrict() {
    let dir = scratch("constructions");
    let ip = dir.join("ip.json");
    let out = run(&["pair", "identity", "--group", "c2", "--ext", "Q(zeta3)", "--beta", "1,2", "--n", "3"]);
    assert!(out.status.success());
    std::fs::write(&ip, &out.stdout).unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["center"]["field"], "Q(zeta3)");

    let one = dir.join("one_c2.json");
    std::fs::write(&one, r#"{"src": {"cayley": [[0]]}, "dst": "c2", "images": [0]}"#).unwrap();
    let (ip, one) = (ip.to_str().unwrap(), one.to_str().unwrap());
    let res = json(&["pair", "restrict", "--pair", ip, "--eps", one]);
    assert_eq!(res["order"], 3);
    assert_eq!(res["restriction"]["h_orbit_sizes"], serde_json::json!([1]));

    let res_file = dir.join("res.json");
    std::fs::write(&res_file, serde_json::to_vec(&res).unwrap()).unwrap();
    let res_file = res_file.to_str().unwrap();
    let ind = json(&["pair", "induce", "--pair", res_file, "--into", one]);
    assert_eq!(ind["order"], 18);
    assert_eq!(ind["center"]["r"], 2);

    let cor = json(&["pair", "corestrict", "--pair", res_file, "--into", one, "--ext", "Q(zeta3)", "--beta", "1,2"]);
    assert_eq!(cor["order"], 18);
    assert_eq!(cor["components_in_orbit"], serde_json::json!([true, true]));

    let fc = json(&["pair", "fieldcheck", "--kappa", "q8_to_c2", "--theta", "faithful", "--ext", "Q"]);
    assert_eq!(fc["passes"], true);
}

#[test]
fn corpus_directory_override() {
    let dir = scratch("corpus");
    std::fs::write(dir.join("mine.json"), r#"{"degree": 3, "generators": ["(1 2 3)", "(1 2)"]}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cliffpair"))
        .args(["chartab", "mine"])
        .env("CLIFFPAIR_CORPUS", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 2]));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["chartab", "a4"],
        vec!["idempotents", "q8", "--field", "Q"],
        vec!["pair", "product", "--kappa", "q8_to_c2", "--theta", "faithful", "--kappa2", "q8_to_c2", "--theta2", "faithful"],
        vec!["multiplier", "q8", "--format", "text"],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
