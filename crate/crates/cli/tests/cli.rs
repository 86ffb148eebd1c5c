use std::process::{Command, Output};

use serde_json::Value;

fn mjohnson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mjohnson")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("JSON line")).collect()
}

#[test]
fn classify_examples() {
    let out = mjohnson(&["classify", "-n", "7", "-k", "2", "-I", "1"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["cayley"]["outcome"], "YES");
    assert_eq!(v["cayley"]["case"], 1);

    let v = &json_lines(&mjohnson(&["classify", "-n", "12", "-k", "4", "-I", "1,3"]))[0];
    assert_eq!(v["aut"]["structure"], "GO⁻₁₀(2)");
    assert_eq!(v["cayley"]["outcome"], "NO");
    assert_eq!(v["cayley"]["trusted_fact"], true);
    assert_eq!(v["two_regular"]["outcome"], "NO");

    let v = &json_lines(&mjohnson(&["classify", "-n", "6", "-k", "3", "-I", "3"]))[0];
    assert_eq!(v["cayley"]["case"], 5);
    assert_eq!(v["cayley"]["disconnected"], true);
    assert!(v["two_regular"]["cases"].as_array().unwrap().contains(&Value::from(4)));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(mjohnson(&["classify", "-n", "6", "-k", "3", "-I", "4"]).status.code(), Some(2));
    assert_eq!(mjohnson(&["classify", "-n", "5", "-k", "3", "-I", "1"]).status.code(), Some(2));
    assert_eq!(mjohnson(&["classify", "-n", "5"]).status.code(), Some(2));
    assert_eq!(mjohnson(&["census", "--n-max", "15"]).status.code(), Some(2));
    assert_eq!(mjohnson(&["group", "build", "ahl"]).status.code(), Some(2));
    assert_eq!(mjohnson(&["group", "build", "ahl", "--q", "9"]).status.code(), Some(2));
}

#[test]
fn census_rows_match_single_classifications() {
    let out = mjohnson(&["census", "--n-max", "6", "--seed", "7"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    let (rows, summary) = lines.split_at(lines.len() - 1);
    assert_eq!(summary[0]["summary"]["instances"], rows.len());
    for row in rows {
        let i: Vec<String> = row["I"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let single = mjohnson(&[
            "classify",
            "-n",
            &row["n"].to_string(),
            "-k",
            &row["k"].to_string(),
            "-I",
            &i.join(","),
        ]);
        assert_eq!(&json_lines(&single)[0], row);
    }
}

#[test]
fn census_small_cases() {
    let lines = json_lines(&mjohnson(&["census", "--n-max", "5"]));
    assert_eq!(lines.len(), 7);
    let cayley: Vec<(u64, Vec<u64>)> = lines[..6]
        .iter()
        .filter(|r| r["cayley"]["outcome"] == "YES" && r["cayley"]["disconnected"] == false)
        .map(|r| (r["n"].as_u64().unwrap(), r["I"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()))
        .collect();
    assert_eq!(cayley, vec![(4, vec![1]), (4, vec![1, 2]), (5, vec![1, 2])]);
    assert_eq!(lines[6]["summary"]["cayley"], 3);

    let empty = json_lines(&mjohnson(&["census", "--n-max", "3"]));
    assert_eq!(empty.len(), 1);
    assert_eq!(empty[0]["summary"]["instances"], 0);

    let ten = json_lines(&mjohnson(&["census", "--n-max", "10"]));
    let clause3 = ten
        .iter()
        .filter(|r| r["n"] == 10 && r["two_regular"]["cases"].as_array().is_some_and(|c| c.contains(&Value::from(3))))
        .count();
    assert_eq!(clause3, 4);

    let table = mjohnson(&["census", "--n-max", "5", "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.contains("YES*"));
}

#[test]
fn graph_and_group_export() {
    let out = mjohnson(&["graph", "export", "-n", "5", "-k", "2", "-I", "2", "--format", "edges"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 15);

    let v = &json_lines(&mjohnson(&["group", "build", "ahl", "--q", "7", "--k", "2"]))[0];
    assert_eq!(v["order"], "21");
    assert_eq!(v["degree"], 21);

    let v = &json_lines(&mjohnson(&["group", "build", "exceptional", "--p", "11", "--variant", "2"]))[0];
    assert_eq!(v["order"], (121 * 120).to_string());

    let v = &json_lines(&mjohnson(&["group", "build", "dickson", "--q", "3", "--d", "2"]))[0];
    assert_eq!(v["order"], "72");

    let dir = std::env::temp_dir().join(format!("mjohnson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    let out = mjohnson(&["group", "build", "psl28-complement", "--delta", "2", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["permutations"].as_array().unwrap().len(), 504);
    assert_eq!(v["orbit_sizes"], serde_json::json!([252]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn fast_verify_suite_passes() {
    let out = mjohnson(&["verify", "--suite", "fast"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["refuted"], 0);
    assert!(lines[..lines.len() - 1].iter().all(|r| r["outcome"] == "confirmed" && r["elapsed_ms"].is_u64()));
}
