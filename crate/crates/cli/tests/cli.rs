use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn above(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_above"))
        .args(args)
        .env_remove("ABOVE_WORK_BUDGET")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}); stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

const K4: &str = "c complete graph on four vertices\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn params_on_k4_and_c5() {
    let f = Files::new();
    let out = above(&["params", &f.write("k4.col", K4)]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["h_index"], 3);
    assert_eq!(v["degeneracy"], 3);
    assert_eq!(v["clique_number"], 4);
    assert_eq!(v["tool"], "above");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);

    let v = json_of(&above(&["params", &f.write("c5.txt", C5)]));
    assert_eq!(v["degeneracy"], 2);
    assert_eq!(v["treewidth"], 2);
    assert_eq!(v["planar"], true);
}

#[test]
fn malformed_input_exits_2() {
    let f = Files::new();
    let out = above(&["params", &f.write("bad.col", "p edge 3 1\ne 1 9\n")]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&above(&["params", "/nonexistent/graph.col"])), 2);
}

#[test]
fn solve_above_modes() {
    let f = Files::new();
    let k4 = f.write("k4.col", K4);
    let c5 = f.write("c5.txt", C5);

    let v = json_of(&above(&["solve", "vc", &k4, "-k", "3", "--above", "h-index"]));
    assert_eq!(v["feasible"], true);
    assert_eq!(v["parameter"]["ell"], 0);
    assert_eq!(v["parameter"]["h"], 3);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 3);

    let v = json_of(&above(&["solve", "fvs", &c5, "-k", "1", "--above", "degeneracy"]));
    assert_eq!(v["feasible"], true);
    assert_eq!(v["parameter"]["ell"], -1);
    assert_eq!(v["parameter"]["d"], 2);

    let out = above(&["solve", "fvs", &c5, "-k", "1", "--above", "treewidth-planar"]);
    assert_eq!(code(&out), 2);

    let v = json_of(&above(&["solve", "vc", &k4, "-k", "0", "--above", "treewidth-planar"]));
    assert_eq!(v["feasible"], false);
    assert_eq!(v["width"], 3);
    assert_eq!(v["r"], 0);
    assert_eq!(v["rejected"], false);

    let v = json_of(&above(&["solve", "vc", &c5, "-k", "2"]));
    assert_eq!(v["feasible"], false);
    assert!(v["nodes"].is_number() && v["time_ms"].is_number());
}

#[test]
fn planar_mode_rejects_nonplanar_input() {
    let f = Files::new();
    let k5: String = {
        let mut s = "p edge 5 10\n".to_string();
        for u in 1..=5 {
            for v in u + 1..=5 {
                s += &format!("e {u} {v}\n");
            }
        }
        s
    };
    let out = above(&["solve", "vc", &f.write("k5.col", &k5), "-k", "4", "--above", "treewidth-planar"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not planar"));
}

#[test]
fn reduce_writes_graph_and_sidecar() {
    let f = Files::new();
    let phi = f.write("phi.cnf", "c one clause\np cnf 3 1\n1 2 3 0\n");
    let out_path = f.path("out.col");
    let out = above(&["reduce", "sat-cvd", &phi, "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let dimacs = std::fs::read_to_string(&out_path).unwrap();
    assert!(dimacs.starts_with("p edge 39 "));
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(f.path("out.col.json")).unwrap()).unwrap();
    assert_eq!(side["k"], 23);
    assert_eq!(side["num_vertices"], 39);
    assert_eq!(side["gadget_map"].as_array().unwrap().len(), 39);

    let c5 = f.write("c5.txt", C5);
    let v = json_of(&above(&["reduce", "fvs-below-vc", &c5, "-k", "1"]));
    assert_eq!(v["k_prime"], 3);
    assert_eq!(v["lambda"], 2);
    assert_eq!(v["num_vertices"], 12);
    assert_eq!(v["certificates"]["universal"].as_array().unwrap().len(), 2);

    assert_eq!(code(&above(&["reduce", "no-such-reduction", &c5])), 2);
    assert_eq!(code(&above(&["reduce", "clique-complement", &c5])), 2);
}

#[test]
fn oracle_outputs_value_and_witness() {
    let f = Files::new();
    let c5 = f.write("c5.txt", C5);
    let v = json_of(&above(&["oracle", "vc", &c5]));
    assert_eq!(v["value"], 3);
    assert_eq!(v["witness"], serde_json::json!([0, 1, 3]));
    assert_eq!(json_of(&above(&["oracle", "cvd", &c5]))["value"], 2);
    assert_eq!(json_of(&above(&["oracle", "is", &c5]))["value"], 2);
    assert_eq!(json_of(&above(&["oracle", "fvs", &c5]))["value"], 1);
    let k4 = f.write("k4.col", K4);
    assert_eq!(json_of(&above(&["oracle", "dist-kr", &k4, "-r", "3"]))["value"], 2);
}

#[test]
fn oracle_capacity_exits_3() {
    let f = Files::new();
    let big = f.write("big.txt", "41 0\n");
    assert_eq!(code(&above(&["oracle", "vc", &big])), 3);
    let k4 = f.write("k4.col", K4);
    let out = Command::new(env!("CARGO_BIN_EXE_above"))
        .args(["oracle", "dist-kr", &k4])
        .env("ABOVE_WORK_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_reports_pass() {
    let out = above(&["verify", "thm9", "--seed", "42", "--count", "20"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["reports"][0]["passed"], 20);
    assert_eq!(code(&above(&["verify", "bogus"])), 2);
}
