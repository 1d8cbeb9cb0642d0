use std::process::{Command, Output};

fn hookpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookpair"))
        .args(args)
        .env_remove("HOOKPAIR_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_each_identity() {
    for theorem in ["1", "2", "3"] {
        let o = hookpair(&["verify", "--k", "4", "--n", "6", "--alpha", "6,5,3,1", "--theorem", theorem]);
        assert_eq!(o.status.code(), Some(0), "theorem {theorem}");
        assert!(stdout(&o).starts_with("pass"));
    }
}

#[test]
fn verify_pads_alpha_with_zeros() {
    let o = hookpair(&["verify", "--k", "5", "--n", "6", "--alpha", "5,4,2,1", "--theorem", "proj", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["alpha"], serde_json::json!([5, 4, 2, 1, 0]));
    assert_eq!(report["lambda"], serde_json::json!([4, 2]));
    assert_eq!(report["theorem"], "pass");
    assert_eq!(report["perI"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "--k", "2", "--n", "2", "--alpha", "1,2", "--theorem", "1"],
        &["verify", "--k", "2", "--n", "2", "--alpha", "3", "--theorem", "1"],
        &["verify", "--k", "2", "--n", "2", "--theorem", "7"],
        &["verify", "--k", "2", "--n", "2", "--alpha", "2,1", "--theorem", "proj"],
        &["sweep", "--max-k", "3", "--max-n", "0"],
        &["sweep", "--max-k", "3", "--max-n", "3", "--jobs", "0"],
        &["show", "--k", "2", "--n", "2", "--region", "Q"],
        &["show", "--k", "2", "--n", "3", "--alpha", "2,1", "--region", "V", "--pq"],
        &["map", "--k", "2", "--n", "2"],
        &["dyck", "--k", "2", "--n", "2", "--i", "3"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(hookpair(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_writes_deterministic_report() {
    let dir = std::env::temp_dir().join(format!("hookpair-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    let run = |out: &std::path::Path, jobs: &str| {
        let o = hookpair(&[
            "sweep", "--max-k", "3", "--max-n", "3", "--projective", "--jobs", jobs, "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o)
    };
    let text = run(&a, "1");
    run(&b, "3");
    assert!(text.contains("theorem 1: 62 cases"));
    assert!(text.contains("theorem proj: 14 cases"));
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    assert_eq!(ja.last(), Some(&b'\n'));
    let report: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert!(report["firstCounterexample"].is_null());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn jobs_default_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hookpair"))
        .args(["sweep", "--max-k", "2", "--max-n", "2"])
        .env("HOOKPAIR_JOBS", "0")
        .output()
        .unwrap();
    // zero workers is rejected, which shows the variable was read
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_hookpair"))
        .args(["sweep", "--max-k", "2", "--max-n", "2"])
        .env("HOOKPAIR_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn show_draws_staircase_with_diagonal_and_dots() {
    let o = hookpair(&["show", "--k", "4", "--n", "6", "--alpha", "6,5,3,1", "--region", "D"]);
    assert_eq!(stdout(&o), "□ □ □ □ □ □\n□ □ □ □ □\n□ □ □\n□\n");
    let o = hookpair(&[
        "show", "--k", "5", "--n", "6", "--alpha", "5,4,2,1", "--region", "D", "--pq", "--dots", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "□┃□ □ □ ■\n□ □┃□ ■\n□ ■\n■\n");
}

#[test]
fn show_shifted_region_marks_one_cell_per_row() {
    let o = hookpair(&[
        "show", "--k", "12", "--n", "13", "--alpha", "12,11,11,9,8,8,6,4,3,3,1", "--region", "T",
        "--shift", "5", "--dots", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|l| l.matches('■').count() == 1));
    // rows 9..12 are shifted to end in a common column
    let widths: Vec<usize> = text.lines().map(|l| l.trim_end().chars().count()).collect();
    assert!(widths[..4].iter().all(|&w| w == widths[0]));
    assert!(widths[4] < widths[0]);
}

#[test]
fn dyck_prints_golden_word_and_pairing() {
    let o = hookpair(&["dyck", "--k", "9", "--n", "11", "--alpha", "11,11,9,8,8,6,3,1", "--i", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("sigma_3: x1 x2 x3 z9 z8 x4 x5 z7 x6 z6 z5 z4 x7 x8 z3 x9 z2 z1\n"));
    assert!(text.ends_with("P_3: [4, 8, 9, 5, 7, 6, 1, 3, 2]\n"));
}

#[test]
fn map_dumps_bijections() {
    let o = hookpair(&["map", "--phi", "--k", "2", "--n", "2", "--alpha", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let entries: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(entries.len(), 4);
    assert!(entries.iter().all(|e| e["target"] == "Tstar"));

    let o = hookpair(&["map", "--psi", "--k", "2", "--n", "2", "--alpha", "2,1"]);
    let entries: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    // SQ has k*n + |α| = 7 cells, split between R (4) and D (3)
    assert_eq!(entries.len(), 7);
    assert_eq!(entries.iter().filter(|e| e["target"] == "D").count(), 3);
}
