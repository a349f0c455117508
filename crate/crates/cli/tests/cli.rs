use std::process::{Command, Output};

fn schmidt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schmidt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = schmidt(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    schmidt(args).status.code().unwrap()
}

#[test]
fn map_examples() {
    assert_eq!(stdout(&["map", "2r+1g"]), "3+2\n");
    assert_eq!(stdout(&["map", "3g"]), "3\n");
    assert_eq!(stdout(&["map", "1r+1g+1g"]), "2+2+1\n");
    assert_eq!(stdout(&["map", "0"]), "0\n");
}

#[test]
fn map_rejects_bad_input() {
    assert_eq!(code(&["map", "3"]), 2);
    assert_eq!(code(&["map", "2x"]), 2);
    assert_eq!(code(&["map", ""]), 2);
}

#[test]
fn unmap_examples() {
    assert_eq!(stdout(&["unmap", "1+1+1+1+1"]), "1g+1g+1g\n");
    assert_eq!(stdout(&["unmap", "3+1"]), "2g+1r\n");
    assert_eq!(stdout(&["unmap", "3+3"]), "3r\n");
    assert_eq!(code(&["unmap", "1+2"]), 2);
    assert_eq!(code(&["unmap", "3+0"]), 2);
}

#[test]
fn table_examples() {
    assert_eq!(stdout(&["table", "--n", "1"]), "1r <-> 1+1\n1g <-> 1\n");
    assert_eq!(stdout(&["table", "--n", "0"]), "");
    assert_eq!(stdout(&["table", "--n", "4"]).lines().count(), 20);
}

#[test]
fn verify_examples() {
    let text = stdout(&["verify", "--max-n", "3"]);
    let row3 = text
        .lines()
        .find(|l| l.trim_start().starts_with("3 "))
        .unwrap();
    assert_eq!(
        row3.split_whitespace().collect::<Vec<_>>(),
        ["3", "10", "10", "10", "20", "ok"]
    );
    assert!(text.ends_with("PASS\n"));

    let csv = stdout(&["verify", "--max-n", "1", "--format", "csv"]);
    assert_eq!(csv, "n,s,t,series,pass\n1,2,2,2,true\n");

    let json = stdout(&["verify", "--max-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["records"][1]["t_count"], "5");
    assert_eq!(v["pass"], true);

    assert_eq!(code(&["verify", "--max-n", "0"]), 2);
    assert_eq!(code(&["verify", "--max-n", "2", "--format", "xml"]), 2);
}

#[test]
fn refined_examples() {
    let csv = stdout(&[
        "refined", "--max-n", "3", "--max-r", "2", "--max-l", "1", "--max-p", "2", "--max-q", "1",
        "--format", "csv",
    ]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(
        rows[0],
        "n,r,l,p,q,t_refined,s_literal,transported,literal_match"
    );
    assert!(rows.contains(&"2,1,1,1,1,1,3,1,false"));
    // only 2r+1g has one part of each color with red ≤ 2, green ≤ 1
    assert!(rows.iter().any(|r| r.starts_with("3,1,1,2,1,1,")));
    // two red parts cannot weigh 1; literal side: (1,1,0,0) and (1,0,0,0)
    assert!(rows.contains(&"1,2,1,1,1,0,2,0,false"));

    let json = stdout(&[
        "refined", "--max-n", "2", "--max-r", "1", "--max-l", "1", "--max-p", "1", "--max-q", "1",
        "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["records"][1]["s_literal"], 3);
    assert_eq!(v["records"][1]["transported_match"], true);

    assert_eq!(code(&["refined", "--max-r", "0"]), 2);
}

#[test]
fn render_examples() {
    let text = stdout(&["render", "3r"]);
    assert!(text.contains("alpha_bar  = (3)\n"));
    assert!(text.contains("beta_bar   = (0)\n"));
    assert!(text.contains("2-modular diagram:\n2 2 2 1\n"));
    assert!(text.contains("mu         = (4,3)\n"));
    assert!(text.contains("gamma      = 3+3\n"));
    assert!(stdout(&["render", "1r"]).contains("gamma      = 1+1\n"));
    assert_eq!(code(&["render", "1q"]), 2);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["verify", "--max-n", "10", "--format", "json"][..],
        &["refined", "--max-n", "5", "--format", "csv"][..],
        &["table", "--n", "6"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
