use std::process::Command;

fn permact(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_permact")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn orbit_json() {
    let (code, out, _) = permact(&["orbit", "573148926"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 16);
    assert_eq!(v["peak"], 2);
    assert_eq!(v["rep"], "5 7 1 3 4 8 9 2 6");
}

#[test]
fn sort_and_trees() {
    assert_eq!(permact(&["sort", "573148926", "--method", "slides"]).1, "5 1 3 4 7 8 2 6 9\n");
    assert_eq!(permact(&["dyck", "3214765"]).1, "uuuddduduuuddd\n");
    let (_, out, _) = permact(&["tree", "586317492", "--kind", "increasing"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["label"], 0);
}

#[test]
fn verify_writes_file_and_summary() {
    let dir = std::env::temp_dir().join(format!("permact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orb.csv");
    let (code, out, err) = permact(&["verify", "orb", "--max-n", "5", "--jobs", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(err.starts_with("orb: pass"), "{err}");
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("suite,kind,instance,passed,checked,failures,witnesses\n"));
    let (_, out, err) = permact(&["verify", "guo-zeng", "--max-n", "6"]);
    assert!(err.contains("consistent up to n = 6"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "consistent");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn tables_and_apq() {
    let (_, out, _) = permact(&["table", "eulerian", "--n", "4"]);
    assert_eq!(out.lines().nth(4).unwrap(), "4,1+11t+11t^2+t^3,1,8");
    let (_, out, _) = permact(&["apq", "--n", "4", "--out", "latex"]);
    assert_eq!(out, "(1+t)^3 + (p+q)(p+q+2)t(1+t)\n");
    let (_, out, _) = permact(&["class", "rsortable", "--n", "4", "--r", "2", "--poly", "gamma"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["gamma"], serde_json::json!([1, 7]));
}

#[test]
fn posets_from_files() {
    let (code, out, _) = permact(&["poset", &data("v_poset.json"), "--check"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["canonical"], true);
    let (_, out, _) = permact(&["poset", &data("v_poset.json"), "--orbits"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    let (code, _, err) = permact(&["poset", &data("not_sign_graded.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("sign"), "{err}");
}

#[test]
fn errors_exit_two() {
    assert_eq!(permact(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(permact(&["dyck", "231"]).0, 2);
    assert_eq!(permact(&["stats", "1 1"]).0, 2);
    let (code, _, err) = permact(&["verify", "orb", "--max-n", "40"]);
    assert_eq!(code, 2);
    assert!(err.contains("40"), "{err}");
}
