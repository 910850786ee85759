use std::fs;
use std::process::{Command, Output};

fn genabc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genabc"))
        .args(args)
        .output()
        .expect("failed to launch genabc")
}

fn ok_stdout(args: &[&str]) -> String {
    let o = genabc(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn arithmetic_subcommands() {
    assert_eq!(ok_stdout(&["rad", "16", "17", "18"]), "2\n17\n6\n");
    assert_eq!(ok_stdout(&["rad-set", "2", "6436341", "6436343"]), "15042\n");
    assert_eq!(ok_stdout(&["factor", "1", "6436341"]), "1\n3^10 * 109\n");
    assert_eq!(ok_stdout(&["quality", "9", "1", "8"]), "1.226294386\n");
    assert_eq!(ok_stdout(&["quality", "3", "1", "2"]), "0.6131471928\n");
}

#[test]
fn bad_input_exits_one() {
    let cases: [&[&str]; 6] = [
        &["quality", "10", "1", "8"],
        &["rad", "0"],
        &["rad", "banana"],
        &["no-such-command"],
        &["hunt-abc", "--k", "2", "--b-max", "50", "--mode", "all"],
        &["audit", "--k", "3", "--n", "3", "--z", "7", "--xs", "3,4,5"],
    ];
    for args in cases {
        let o = genabc(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(genabc(&["--help"]).status.code(), Some(0));
}

#[test]
fn hunt_abc_table_and_top() {
    let out = ok_stdout(&["hunt-abc", "--k", "2", "--b-max", "100"]);
    let first: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(first, ["1 80 81", "1 8 9", "32 49 81", "1 63 64", "1 48 49", "5 27 32"]);
    assert!(out.starts_with("1 80 81\tq=1.292030030\trad=30\n"));
    let top = ok_stdout(&["hunt-abc", "--k", "2", "--b-max", "100", "--top", "2"]);
    assert_eq!(top.lines().count(), 2);
    assert!(ok_stdout(&["hunt-abc", "--k", "2", "--b-max", "100", "--epsilon", "1"]).is_empty());
}

#[test]
fn machine_formats() {
    let jsonl = ok_stdout(&["hunt-powersum", "--k", "3", "--n", "3", "--z-max", "10", "--format", "jsonl"]);
    let rows: Vec<serde_json::Value> = jsonl.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["kind"], "power_sum");
    assert_eq!(rows[0]["schema_version"], 1);
    assert_eq!(rows[0]["xs"], serde_json::json!([3, 4, 5]));
    assert_eq!(rows[0]["z"], 6);

    let csv = ok_stdout(&["hunt-powersum", "--k", "3", "--n", "3", "--z-max", "6", "--format", "csv"]);
    assert_eq!(csv, "k,n,z,xs,setwise_coprime,pairwise_coprime\n3,3,6,\"3;4;5\",true,false\n");

    let abc = ok_stdout(&["hunt-abc", "--k", "2", "--b-max", "10", "--format", "jsonl"]);
    let row: serde_json::Value = serde_json::from_str(abc.trim()).unwrap();
    assert_eq!(row["kind"], "abc_tuple");
    assert_eq!(row["b"], 9);
    assert_eq!(row["quality"], "1.226294386");

    let o = genabc(&["rad", "12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = genabc(&["--output", path.to_str().unwrap(), "--format", "csv", "hunt-abc", "--k", "2", "--b-max", "10"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("k,epsilon,b,parts,radical,quality,"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# cubes\nk = 3\nn = 3\nz_max = 20\nmode: setwise\nworkers = 2\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let out = ok_stdout(&["--config", cfg, "hunt-powersum"]);
    assert_eq!(out, "3 4 5 6\n1 6 8 9\n3 10 18 19\n7 14 17 20\n");
    // Explicit flags win over the file.
    let out = ok_stdout(&["--config", cfg, "hunt-powersum", "--z-max", "9"]);
    assert_eq!(out, "3 4 5 6\n1 6 8 9\n");

    let bad = dir.path().join("bad.conf");
    fs::write(&bad, "colour = blue\n").unwrap();
    assert_eq!(genabc(&["--config", bad.to_str().unwrap(), "rad", "4"]).status.code(), Some(1));
}

#[test]
fn verify_gflt_reports_per_exponent() {
    let o = genabc(&["verify-gflt", "--k", "2", "--n-to", "8", "--z-max", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "k=2 g(k)=6 z_max=60 mode=all\nn=6 solutions=0\nn=7 solutions=0\nn=8 solutions=0\n0 solutions\n"
    );
    // Below g(k) solutions are listed but are not counterexamples.
    let o = genabc(&["verify-gflt", "--k", "3", "--n-from", "3", "--n-to", "3", "--z-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "k=3 g(k)=8 z_max=6 mode=all\nn=3 solutions=1\n  3 4 5 6\n1 solutions\n");
}

#[test]
fn audit_output() {
    let out = ok_stdout(&["audit", "--k", "3", "--n", "3", "--z", "6", "--xs", "3,4,5"]);
    assert_eq!(
        out,
        "k=3\nn=3\nxs=3,4,5\nz=6\nb_val=216\nrad_val=30\nrad_sq=900\nprod_sq=129600\nz_pow_bound=1679616\n\
         premise_holds=true\nlink2_holds=true\nlink3_holds=true\nimplied_n_bound=8\n"
    );
}

#[test]
fn workers_do_not_change_output() {
    let args = ["hunt-abc", "--k", "2", "--b-max", "2000", "--format", "csv"];
    let serial = ok_stdout(&[&args[..], &["--workers", "1"]].concat());
    for w in ["3", "4"] {
        assert_eq!(ok_stdout(&[&args[..], &["--workers", w]].concat()), serial);
    }
}

#[test]
fn checkpoint_halt_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let cp = cp.to_str().unwrap();
    let args = ["hunt-abc", "--k", "2", "--b-max", "1500", "--checkpoint", cp, "--chunk", "100"];
    let expected = ok_stdout(&["hunt-abc", "--k", "2", "--b-max", "1500"]);

    let halted = genabc(&[&args[..], &["--halt-after", "500"]].concat());
    assert!(halted.status.success());
    assert!(halted.stdout.is_empty());
    let saved: serde_json::Value = serde_json::from_str(&fs::read_to_string(cp).unwrap()).unwrap();
    assert_eq!(saved["format_version"], 1);
    assert!(saved["cursor"].as_u64().unwrap() >= 500);

    assert_eq!(ok_stdout(&args), expected);

    // A checkpoint from different parameters is refused.
    let o = genabc(&["hunt-abc", "--k", "2", "--b-max", "1600", "--checkpoint", cp]);
    assert_eq!(o.status.code(), Some(1));
}
