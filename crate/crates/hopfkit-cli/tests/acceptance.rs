//! CLI acceptance: byte-identical reports across repeated runs with the
//! same inputs and seeds, and the documented exit-code contract.

use std::process::{Command, Output};

fn hopfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn criterion(n: usize, name: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {n} [{name}]: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_9_reports_are_byte_identical() {
    let dir = std::env::temp_dir().join("hopfkit-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, arg: &str| {
        let path = dir.join(name);
        let out = hopfkit(&["catalog", arg, "-o", path.to_str().unwrap()]);
        assert!(out.status.success(), "catalog {arg} failed");
        path
    };
    let h4 = write("h4.json", "sweedler4");
    let u = write("u.json", "group:cyclic:2");
    let pi = write("pi.json", "sweedler-projection");
    let a = write("a.json", "action:graded-dual-numbers:group:cyclic:2");
    let sign = write("sign.json", "action:sign-dual-numbers:cyclic:2");

    let mut failures = Vec::new();
    let runs: Vec<(&str, Vec<String>)> = vec![
        (
            "morita json",
            vec![
                "morita".into(),
                "--algebra".into(),
                a.display().to_string(),
                "--hopf".into(),
                h4.display().to_string(),
                "--subgroup".into(),
                u.display().to_string(),
                "--pi".into(),
                pi.display().to_string(),
                "--seed".into(),
                "42".into(),
                "--format".into(),
                "json".into(),
            ],
        ),
        (
            "prop32 text",
            vec![
                "prop32".into(),
                "--group".into(),
                "infinite-dihedral".into(),
                "--subgroup".into(),
                "e,s".into(),
                "--coeff".into(),
                sign.display().to_string(),
                "--samples".into(),
                "60".into(),
                "--seed".into(),
                "42".into(),
            ],
        ),
        (
            "verify-hopf json",
            vec![
                "verify-hopf".into(),
                h4.display().to_string(),
                "--format".into(),
                "json".into(),
            ],
        ),
    ];
    for (name, args) in &runs {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = hopfkit(&argv);
        let second = hopfkit(&argv);
        if !first.status.success() {
            failures.push(format!("{name}: exit {:?}", first.status.code()));
        }
        if first.stdout != second.stdout {
            failures.push(format!("{name}: outputs differ between runs"));
        }
    }
    criterion(9, "deterministic reports", failures.is_empty(), &format!("{failures:?}"));
}

#[test]
fn exit_codes_match_the_contract() {
    // 0: all checks pass
    let ok = hopfkit(&["verify-hopf", "sweedler4"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8_lossy(&ok.stdout);
    assert!(text.contains("unimodular: false"), "report shows non-unimodularity");

    // 1: verification failure with a printed witness
    let dir = std::env::temp_dir().join("hopfkit-exitcodes");
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("c2.json");
    let out = hopfkit(&["catalog", "functions:cyclic:2", "-o", good.to_str().unwrap()]);
    assert!(out.status.success());
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    // corrupt the comultiplication: keep only the Δ(χ_e) rows for index 1
    let comult = value["comult"].as_array().unwrap().clone();
    let corrupted: Vec<serde_json::Value> = comult
        .into_iter()
        .filter(|row| row[0].as_u64() != Some(1))
        .chain([serde_json::json!([1, 1, 0, "1"])])
        .collect();
    value["comult"] = serde_json::Value::Array(corrupted);
    value.as_object_mut().unwrap().remove("counit");
    value.as_object_mut().unwrap().remove("antipode");
    let bad = dir.join("corrupted.json");
    std::fs::write(&bad, serde_json::to_string(&value).unwrap()).unwrap();
    let fail = hopfkit(&["verify-hopf", bad.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8_lossy(&fail.stdout);
    assert!(text.contains("witness"), "failure report carries a witness:\n{text}");

    // 2: missing file / unknown name is a usage error
    let missing = hopfkit(&["verify-hopf", "/nonexistent/input.json"]);
    assert_eq!(missing.status.code(), Some(2));

    // 1 with a stage tag: mismatched π against the declared subgroup
    let h4 = dir.join("h4.json");
    let u3 = dir.join("u3.json");
    let pi = dir.join("pi.json");
    let a = dir.join("a.json");
    for (path, name) in [
        (&h4, "sweedler4"),
        (&u3, "group:cyclic:3"),
        (&pi, "sweedler-projection"),
        (&a, "action:graded-dual-numbers:group:cyclic:2"),
    ] {
        let out = hopfkit(&["catalog", name, "-o", path.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let mismatched = hopfkit(&[
        "morita",
        "--algebra",
        a.to_str().unwrap(),
        "--hopf",
        h4.to_str().unwrap(),
        "--subgroup",
        u3.to_str().unwrap(), // wrong subgroup on purpose
        "--pi",
        pi.to_str().unwrap(),
    ]);
    assert_eq!(mismatched.status.code(), Some(1));
    let text = String::from_utf8_lossy(&mismatched.stdout);
    assert!(
        text.contains("input-consistency"),
        "mismatch is tagged with its stage:\n{text}"
    );
}

#[test]
fn dual_command_emits_file_and_iso() {
    let dir = std::env::temp_dir().join("hopfkit-dual");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("cs3.json");
    let out = hopfkit(&["catalog", "functions:symmetric:3", "-o", src.to_str().unwrap()]);
    assert!(out.status.success());
    let dst = dir.join("dual.json");
    let run = hopfkit(&["dual", src.to_str().unwrap(), "-o", dst.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0));
    let dual_text = std::fs::read_to_string(&dst).unwrap();
    let cg_out = hopfkit(&["catalog", "group:symmetric:3"]);
    let cg_text = String::from_utf8_lossy(&cg_out.stdout);
    // the dual of C(S3) is the group algebra: same grouplike comultiplication shape
    let dual_json: serde_json::Value = serde_json::from_str(&dual_text).unwrap();
    assert_eq!(dual_json["basis"].as_array().unwrap().len(), 6);
    assert!(cg_text.contains("\"basis\""));
    assert!(dir.join("dual.ddiso.json").exists(), "double-dual iso emitted");
}
