use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const K3: &str = r#"{"ground":["a","b","c"],"backend":{"type":"graphic","vertices":3,"edges":[[0,1,"a"],[1,2,"b"],[0,2,"c"]]}}"#;
const U24: &str = r#"{"ground":["1","2","3","4"],"backend":{"type":"uniform","rank":2}}"#;
const SUM: &str = r#"{"ground":["a","b","c","d"],"backend":{"type":"bases","bases":[["a","c"],["a","d"],["b","c"],["b","d"]]}}"#;
const SINGLE: &str = r#"{"ground":["x"],"backend":{"type":"uniform","rank":1}}"#;
const U13: &str = r#"{"ground":["1","2","3"],"backend":{"type":"uniform","rank":1}}"#;

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Dir {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fanforge")).args(args).env_remove("FANFORGE_LIMIT").output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn rank_and_lambda() {
    let d = Dir::new();
    let k3 = d.file("k3.json", K3);
    let o = run(&["rank", p(&k3), "--set", "a,b,c"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2"));
    let o = run(&["lambda", p(&k3), "--set", ""]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "0"));
    let o = run(&["--format", "json", "rank", p(&k3), "--set", "a"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], 1);
}

#[test]
fn components_of_a_direct_sum() {
    let d = Dir::new();
    let f = d.file("sum.json", SUM);
    let o = run(&["--format", "json", "components", p(&f)]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"], serde_json::json!([["a", "b"], ["c", "d"]]));
}

#[test]
fn widths_and_assertions() {
    let d = Dir::new();
    for (name, body, bd, bw) in [("k3", K3, "1", "2"), ("u24", U24, "2", "3"), ("one", SINGLE, "0", "1")] {
        let f = d.file(&format!("{name}.json"), body);
        let o = run(&["branch-depth", p(&f)]);
        assert_eq!((code(&o), stdout(&o).as_str()), (0, bd), "{name} depth");
        let o = run(&["branch-width", p(&f)]);
        assert_eq!((code(&o), stdout(&o).as_str()), (0, bw), "{name} width");
        assert_eq!(code(&run(&["branch-width", p(&f), "--assert", bw])), 0);
    }
    let k3 = d.path("k3.json");
    assert_eq!(code(&run(&["branch-width", p(&k3), "--assert", "3"])), 1);
    assert_eq!(code(&run(&["branch-depth", p(&k3), "--assert", "2"])), 1);
}

#[test]
fn witness_files() {
    let d = Dir::new();
    let f = d.file("u24.json", U24);
    let json = d.path("w.json");
    let dot = d.path("w.dot");
    assert_eq!(code(&run(&["branch-depth", p(&f), "--witness", p(&json)])), 0);
    assert_eq!(code(&run(&["branch-width", p(&f), "--witness", p(&dot)])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert!(v.is_object());
    assert!(fs::read_to_string(dot).unwrap().contains("graph"));
}

#[test]
fn fan_minor_search_and_replay() {
    let d = Dir::new();
    let f4 = fanforge::io::matroid_to_json(&fanforge::Matroid::fan(4).unwrap()).unwrap();
    let f4 = d.file("f4.json", &f4);
    let bundle = d.path("bundle.json");
    let o = run(&["fan-minor", p(&f4), "--n", "3", "--out", p(&bundle)]);
    assert_eq!(code(&o), 0);
    let o = run(&["verify", "--bundle", p(&bundle)]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "valid"));

    // tamper with the path: swapping two entries breaks the induced path
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&bundle).unwrap()).unwrap();
    let path = find_array(&mut v, "path").expect("bundle has a path");
    path.swap(0, 2);
    let bad = d.file("bad.json", &v.to_string());
    assert_eq!(code(&run(&["verify", "--bundle", p(&bad)])), 1);

    let u13 = d.file("u13.json", U13);
    let o = run(&["fan-minor", p(&u13), "--n", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "none"));
}

fn find_array<'a>(v: &'a mut serde_json::Value, key: &str) -> Option<&'a mut Vec<serde_json::Value>> {
    match v {
        serde_json::Value::Object(map) => {
            if map.get(key).is_some_and(|x| x.is_array()) {
                return map.get_mut(key).and_then(|x| x.as_array_mut());
            }
            map.values_mut().find_map(|x| find_array(x, key))
        }
        serde_json::Value::Array(xs) => xs.iter_mut().find_map(|x| find_array(x, key)),
        _ => None,
    }
}

#[test]
fn error_exit_codes() {
    let d = Dir::new();
    let bad = d.file("bad.json", "{\"ground\":");
    assert_eq!(code(&run(&["rank", p(&bad), "--set", "a"])), 2);
    let k3 = d.file("k3.json", K3);
    assert_eq!(code(&run(&["rank", p(&k3), "--set", "zz"])), 3);
    assert_eq!(code(&run(&["--limit", "2", "branch-width", p(&k3)])), 4);
    assert_eq!(code(&run(&["--limit", "0", "branch-width", p(&k3)])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "bounds"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("pass"));
    let a = run(&["--seed", "7", "--format", "json", "verify", "--suite", "twisted", "--cases", "1000"]);
    let b = run(&["--seed", "7", "--format", "json", "verify", "--suite", "twisted", "--cases", "1000"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let o = run(&["verify", "--suite", "twisted", "--cases", "50", "--mutant", "family"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).ends_with("FAIL"));
}

#[test]
fn convert_round_trip() {
    let d = Dir::new();
    let k3 = d.file("k3.json", K3);
    let o = run(&["--format", "json", "convert", p(&k3)]);
    assert_eq!(code(&o), 0);
    let again = d.file("again.json", &stdout(&o));
    let o = run(&["convert", p(&again)]);
    assert_eq!(stdout(&o), "elements 3\nrank 2\nlabels a,b,c");
    let o = run(&["--format", "dot", "convert", p(&k3)]);
    assert!(stdout(&o).contains("graph"));
}
