use serde_json::Value;
use superhc::cli::{run_from, Outcome};
use superhc::{build_root_system, Family, SuperRootSystem};

fn run(args: &str) -> Outcome {
    run_from(std::iter::once("superhc").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn roots_of_osp_1_2() {
    let v = json("roots --family B --m 0 --n 1");
    let text = v.to_string();
    let sys = SuperRootSystem::from_json(&v).unwrap();
    assert_eq!(sys.even().count(), 2);
    assert_eq!(sys.odd().count(), 2);
    assert!(sys.contains(&superhc::Weight::from_ints(&[2])));
    assert!(sys.contains(&superhc::Weight::from_ints(&[-1])));
    assert!(!text.is_empty());
}

#[test]
fn roots_round_trip() {
    for (args, family) in [
        ("roots --family A --m 2 --n 1", Family::A { m: 2, n: 1 }),
        ("roots --family D --m 3 --n 2", Family::D { m: 3, n: 2 }),
        ("roots --family F4", Family::F4),
        ("roots --family D21a --alpha -1/3", Family::D21 { alpha: superhc::rational::q(-1, 3) }),
    ] {
        let parsed = SuperRootSystem::from_json(&json(args)).unwrap();
        assert_eq!(parsed, build_root_system(&family).unwrap(), "{args}");
    }
}

#[test]
fn components_of_sl2_cubed() {
    let v = json("components --family D21a --alpha 1/2 --form sl2x3");
    assert_eq!(v["components_p1"], 4);
    let out = run("components --family D21a --alpha 1/2 --form sl2x3 --format text");
    assert_eq!(out.stdout.trim(), "4");
}

#[test]
fn character_of_osp_1_2() {
    let v = json("character --family B --m 0 --n 1 --lambda 5 --depth 3");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert!(terms.iter().all(|t| t["mult"] == 1));
    let brute = json("character --family B --m 0 --n 1 --lambda 5 --depth 3 --method brute");
    assert_eq!(v, brute);
}

#[test]
fn irreducible_reports_a_singular_vector() {
    let v = json("irreducible --family B --m 0 --n 1 --lambda 1");
    assert_eq!(v["criterion"], false);
    assert!(!v["singular_vectors"].as_array().unwrap().is_empty());
    let v = json("irreducible --family B --m 0 --n 1 --lambda -1");
    assert_eq!(v["criterion"], true);
    assert!(v["singular_vectors"].as_array().unwrap().is_empty());
}

#[test]
fn admissible_and_table() {
    let v = json("admissible --family B --m 2 --n 1");
    assert_eq!(v["admissible"], true);
    assert_eq!(v["components_p1"], 3);
    let all = json("admissible --family B --m 0 --n 1 --all");
    assert!(all["count"].as_u64().unwrap() >= 1);
    let t = json("table --family C --n 2");
    assert_eq!(t[0]["report"]["components_p1"], 2);
}

#[test]
fn linkage_and_typical() {
    let v = json("linkage --family B --m 0 --n 1 --lambda 1 --mu -2");
    assert_eq!(v["linked"], true);
    let v = json("typical --family A --m 1 --n 0 --lambda 0,0,0");
    assert!(v["typical"].is_boolean());
}

#[test]
fn exit_codes() {
    assert_eq!(run("roots --family A --m 1 --n 1").code, 2);
    assert_eq!(run("frobnicate").code, 2);
    assert_eq!(run("roots --family Q").code, 2);
    assert_eq!(run("character --family B --m 0 --n 1 --lambda x").code, 2);
    assert_eq!(run("--help").code, 0);
    assert_eq!(run("verify --format text").code, 0);
}

#[test]
fn deterministic_output() {
    for args in [
        "roots --family G3",
        "admissible --family F4 --form su2-so25",
        "character --family A --m 2 --n 1 --p 2 --q 1 --r 1 --s 1 --lambda 0,0,-1,1,1 --depth 3",
        "table",
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.code, 0, "{args}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args}");
    }
}
