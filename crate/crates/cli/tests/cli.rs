use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    format!("@{}", p.display())
}

fn edv(args: &[&str]) -> Output {
    edv_env(args, &[])
}

fn edv_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_edv"));
    cmd.args(args).env_remove("EDV_CAP").env_remove("EDV_WORKERS").env_remove("EDV_FORMAT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = edv(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn compare_star_and_path() {
    assert_eq!(ok(&["compare", "S(5)", "P(5)"]), "StrictlyLess (witness k=2)\n");
    assert_eq!(ok(&["compare", "P(5)", "S(5)"]), "StrictlyGreater (witness k=2)\n");
}

#[test]
fn wiener_of_a_single_cluster_caterpillar() {
    assert_eq!(ok(&["index", "wiener", "CP(7,4)^2"]), "40\n");
    assert!(ok(&["index", "abc2", "P(4)"]).trim().parse::<f64>().unwrap() > 0.0);
}

#[test]
fn table4_csv_matches_golden() {
    let golden = include_str!("golden/table4.csv");
    assert_eq!(ok(&["table4", "--format", "csv"]), golden);
}

#[test]
fn reference_pair_from_fixtures() {
    let (t1, t2) = (fixture("t1.edges"), fixture("t2.edges"));
    assert_eq!(ok(&["edv", &t1]), "(4,3,2,1,0)\n");
    assert_eq!(ok(&["edv", &t2]), "(4,3,2,1,0)\n");
    let out = ok(&["compare", &t1, &t2]);
    assert!(out.starts_with("Equivalent\n"), "{out}");
    assert!(out.contains("not isomorphic"), "{out}");
}

#[test]
fn edge_list_errors_exit_2() {
    let o = edv(&["edv", &fixture("cycle.edges")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3") && err.contains("cycle"), "{err}");
    assert_eq!(edv(&["edv", "@/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(edv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(edv(&["verify", "Thm-99.9"]).status.code(), Some(2));
    assert_eq!(edv(&["index", "nope", "P(4)"]).status.code(), Some(2));
    assert_eq!(edv(&["edv", "CP(7,4"]).status.code(), Some(2));
    assert_eq!(edv(&["compare", "P(4)", "P(5)"]).status.code(), Some(2));
    assert_eq!(edv(&["enumerate", "all:30"]).status.code(), Some(2));
}

#[test]
fn verification_failure_exits_1() {
    let o = edv(&["verify", "Tab-1", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("vwiener:-1"));
}

#[test]
fn verify_json_report() {
    let out = ok(&["verify", "Thm-6.2", "--n-max", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["claim_id"], "Thm-6.2");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["checked"], v["passed"]);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn json_is_stable_across_worker_counts() {
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v["runtime_seconds"] = serde_json::Value::Null;
        v
    };
    let a = strip(ok(&["verify", "Thm-4.1", "--n-max", "9", "--format", "json", "--workers", "1"]));
    let b = strip(ok(&["verify", "Thm-4.1", "--n-max", "9", "--format", "json", "--workers", "4"]));
    assert_eq!(a, b);
    assert_eq!(
        ok(&["enumerate", "all:9", "--workers", "1", "--format", "json"]),
        ok(&["enumerate", "all:9", "--workers", "3", "--format", "json"])
    );
}

#[test]
fn construct_round_trips_through_an_edge_list() {
    let edges = ok(&["construct", "DSP(9; 2,3; 4)"]);
    let dir = std::env::temp_dir().join(format!("edv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dsp.edges");
    std::fs::write(&path, &edges).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(ok(&["edv", &arg]), ok(&["edv", "DSP(9; 2,3; 4)"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn canonical_codes_are_accepted_as_trees() {
    let out = ok(&["enumerate", "all:6"]);
    assert_eq!(out.lines().count(), 6);
    for line in out.lines() {
        let (code, vector) = line.split_once(' ').unwrap();
        assert_eq!(ok(&["edv", code]).trim(), vector);
    }
}

#[test]
fn enumerate_classes() {
    assert_eq!(ok(&["enumerate", "all:10"]).lines().count(), 106);
    let cats = ok(&["enumerate", "cat:7:4", "--format", "csv"]);
    assert!(cats.starts_with("code,vector\n"));
    assert!(cats.lines().count() > 1);
}

#[test]
fn equiv_pairs_include_the_reference_pair() {
    let out = ok(&["equiv-pairs", "11"]);
    let t1 = ok(&["edv", &fixture("t1.edges")]);
    assert!(out.lines().any(|l| l.starts_with(t1.trim())));
    assert_eq!(ok(&["equiv-pairs", "4"]), "");
}

#[test]
fn mu_table() {
    let out = ok(&["mu", &fixture("p4.edges"), "--format", "csv"]);
    assert_eq!(out, "edge,u,v,n_u,n_v,mu\n0,0,1,1,3,1\n1,1,2,2,2,2\n2,2,3,3,1,1\n");
}

#[test]
fn config_precedence() {
    let dir = std::env::temp_dir().join(format!("edv-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("edv.conf");
    std::fs::write(&cfg, "format = csv\ncap = 5\n").unwrap();
    let cfg = cfg.display().to_string();

    // file only
    let o = edv(&["--config", &cfg, "edv", "P(4)"]);
    assert_eq!(stdout(&o), "k,r_k\n1,2\n2,1\n");
    assert_eq!(edv(&["--config", &cfg, "enumerate", "all:6"]).status.code(), Some(2));
    // env beats file
    let o = edv_env(&["--config", &cfg, "edv", "P(4)"], &[("EDV_FORMAT", "text"), ("EDV_CAP", "8")]);
    assert_eq!(stdout(&o), "(2,1)\n");
    assert_eq!(edv_env(&["--config", &cfg, "enumerate", "all:6"], &[("EDV_CAP", "8")]).status.code(), Some(0));
    // flag beats env
    let o = edv_env(&["edv", "P(4)", "--format", "json"], &[("EDV_FORMAT", "csv")]);
    assert!(stdout(&o).trim_start().starts_with('{'));
    // invalid settings are usage errors
    assert_eq!(edv(&["--cap", "2", "edv", "P(4)"]).status.code(), Some(2));
    assert_eq!(edv_env(&["edv", "P(4)"], &[("EDV_WORKERS", "0")]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_list_names_every_claim() {
    let out = ok(&["verify", "--list"]);
    for id in ["Thm-4.1", "Table-4", "Cor-6.1", "Rem-3.1", "Enum-count"] {
        assert!(out.lines().any(|l| l == id), "{id}");
    }
}
