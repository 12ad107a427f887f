use std::io::Write;
use std::process::Command;

use lasso_matroid::cli::{parse_cord_file, run};
use lasso_matroid::lasso::LassoReport;
use lasso_matroid::matroid::MatroidVerdict;
use lasso_matroid::tree::{parse_newick, CordSet, Quartet};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["lasso-matroid"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("lasso-matroid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(contents.as_bytes())
        .unwrap();
    path
}

const QUARTET: &str = "((a,b),(c,d));";

#[test]
fn verdict_on_a_basis() {
    let path = temp_file(
        "five.cords",
        "# a basis of ab|cd\na b\n\nc d  # central pair\na c\na d\nb c\n",
    );
    let (code, out, _) = call(&[
        "verdict",
        "--newick",
        QUARTET,
        "--cords",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "basis: true"), "{out}");
    let (code, out, _) = call(&["verdict", "--newick", QUARTET, "--cord-list", "ab,cd"]);
    assert_eq!(code, 1);
    assert!(out.contains("lasso: false"));
}

#[test]
fn star_has_twelve_bases() {
    let (code, out, _) = call(&["bases", "--newick", "(a,b,c,d);", "--count"]);
    assert_eq!((code, out.trim()), (0, "12"));
}

#[test]
fn reconstruct_roundtrip() {
    let (code, out, _) = call(&["reconstruct", "--oracle-from", QUARTET]);
    assert_eq!(code, 0);
    let back = parse_newick(out.trim()).unwrap().0;
    assert_eq!(
        back.canonical_newick(),
        parse_newick(QUARTET).unwrap().0.canonical_newick()
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        call(&["rank", "--newick", "((a,b),(c,d);", "--cord-list", "ab"]).0,
        2
    );
    assert_eq!(
        call(&["rank", "--newick", QUARTET, "--cord-list", "ax"]).0,
        2
    );
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["rank", "--newick", QUARTET]).0, 2);
    assert_eq!(call(&["bases", "--newick", "(a,b,c,d,e,f,g,h);"]).0, 3);
    assert_eq!(
        call(&["bases", "--newick", "(a,b,c,d,e);", "--max-leaves", "4"]).0,
        3
    );
    assert_eq!(
        call(&["lasso", "--newick", "(a,b,c,d,e,f,g);", "--cord-list", "ab"]).0,
        1
    );
    let everything: Vec<String> = CordSet::complete(&["a", "b", "c", "d", "e", "f", "g"])
        .iter()
        .map(|c| c.to_string())
        .collect();
    let list = everything.join(",");
    assert_eq!(
        call(&[
            "lasso",
            "--newick",
            "(a,b,c,d,e,f,g);",
            "--cord-list",
            &list
        ])
        .0,
        3
    );
    assert_eq!(
        call(&["binary-check", "--newick", "((a,b),(c,d),(e,f));"]).0,
        1
    );
    assert_eq!(call(&["binary-check", "--newick", "(a,b,c,d);"]).0, 0);
    assert_eq!(
        call(&["pointed-covers", "--newick", "(a,b,c,d);", "--leaf", "a"]).0,
        2
    );
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate-trees"));
}

#[test]
fn flag_beats_environment() {
    let bin = env!("CARGO_BIN_EXE_lasso-matroid");
    let status = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(["enumerate-trees", "--n", "5", "--count"]);
        cmd.env_remove("LASSO_MATROID_MAX_LEAVES");
        if let Some(v) = env {
            cmd.env("LASSO_MATROID_MAX_LEAVES", v);
        }
        if let Some(v) = flag {
            cmd.args(["--max-leaves", v]);
        }
        let out = cmd.output().unwrap();
        (
            out.status.code().unwrap(),
            String::from_utf8(out.stdout).unwrap(),
        )
    };
    assert_eq!(status(None, None), (0, "26\n".to_string()));
    assert_eq!(status(Some("4"), None).0, 3);
    assert_eq!(status(Some("4"), Some("5")), (0, "26\n".to_string()));
}

#[test]
fn json_records_follow_the_schema() {
    let q = ["--newick", QUARTET];
    let with = |cmd: &str, extra: &[&str]| -> Vec<Value> {
        let mut args = vec![cmd, "--json"];
        args.extend_from_slice(&q);
        args.extend_from_slice(extra);
        let (code, out, err) = call(&args);
        assert!(code == 0 || code == 1, "{cmd}: {err}");
        out.lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect()
    };
    let set = ["--cord-list", "ab,ac,bd"];

    let rank = with("rank", &set);
    assert_eq!(rank[0]["rank"], 3);
    assert_eq!(rank[0]["full_rank"], 5);

    let v: MatroidVerdict = serde_json::from_value(with("verdict", &set)[0].clone()).unwrap();
    assert_eq!(
        (v.rank, v.independent, v.lasso, v.basis),
        (3, true, false, false)
    );

    let closure: CordSet =
        serde_json::from_value(with("closure", &set)[0]["closure"].clone()).unwrap();
    assert!(closure.len() >= 3);

    let bases = with("bases", &[]);
    assert_eq!(bases.len(), 4);
    for b in &bases {
        let set: CordSet = serde_json::from_value(b["basis"].clone()).unwrap();
        assert_eq!(set.len(), 5);
    }
    assert_eq!(with("bases", &["--count"])[0]["count"], 4);

    for c in with("circuits", &[]) {
        let _: CordSet = serde_json::from_value(c["circuit"].clone()).unwrap();
    }
    let coloops: CordSet =
        serde_json::from_value(with("coloops", &[])[0]["coloops"].clone()).unwrap();
    assert_eq!(coloops.to_string(), "{ab,cd}");

    let star = &with("star", &set)[0];
    assert_eq!(star["rank"], 3);
    assert!(star["components"].is_array());

    assert_eq!(with("contract-bases", &["--split", "a,b"]).len(), 4);
    assert_eq!(with("pointed-covers", &["--leaf", "d"]).len(), 2);

    let report: LassoReport = serde_json::from_value(with("lasso", &set)[0].clone()).unwrap();
    assert!(!report.edge_weight);

    let quartets: Vec<Quartet> = with("quartets", &[])
        .into_iter()
        .map(|v| serde_json::from_value(v).unwrap())
        .collect();
    assert_eq!(quartets.len(), 1);

    assert_eq!(with("reconstruct", &[])[0]["newick"], "((c,d),a,b);");

    let check = &with("binary-check", &[])[0];
    assert_eq!(check["binary"], true);
    assert!(check["witness"].is_null());

    let (_, out, _) = call(&["enumerate-trees", "--leaves", "a,b,c,d", "--json"]);
    let trees: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(trees.len(), 4);
    assert!(trees.iter().all(|t| t["newick"].is_string()));
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["bases", "--newick", "((a,b),c,(d,(e,f)));"],
        &["circuits", "--newick", "((a,b),(c,d),e);"],
        &["enumerate-trees", "--n", "5"],
        &["quartets", "--newick", "(((a,b),c),d,(e,f));", "--json"],
    ];
    for args in cases {
        let first = call(args).1;
        assert_eq!(call(args).1, first);
        let mut parallel = args.to_vec();
        parallel.push("--parallel");
        assert_eq!(call(&parallel).1, first, "{args:?}");
    }
    let listed = call(&["enumerate-trees", "--n", "5"]).1;
    let mut sorted: Vec<&str> = listed.lines().collect();
    sorted.sort();
    assert_eq!(sorted, listed.lines().collect::<Vec<_>>());
}

#[test]
fn cord_file_format() {
    let set = parse_cord_file("# header\n\nx1 x2\n  x3\tx1 # trailing\n").unwrap();
    assert_eq!(set.to_string(), "{x1-x2,x1-x3}");
    assert!(parse_cord_file("a b c\n").is_err());
    assert!(parse_cord_file("a a\n").is_err());
}
