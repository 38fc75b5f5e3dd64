use std::process::{Command, Output};

fn hstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hstar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compute_prints_hstar_then_x() {
    for (alpha, h) in [
        ("2,2,1", "1,2,2"),
        ("1,1,1,1", "1,1,1,1"),
        ("8,2,2,2,2,2,1", "1,2,4,3,3,4,2"),
    ] {
        let o = hstar(&["compute", "--alpha", alpha]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).lines().next(), Some(h));
    }
    let o = hstar(&["compute", "--alpha", "2,2,1"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("x = (1,1)"));
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(code(&hstar(&["compute", "--alpha", "2,0,1"])), 2);
    assert_eq!(code(&hstar(&["compute", "--alpha", "4,2"])), 2);
    assert_eq!(code(&hstar(&["check", "--vector", "1,x"])), 2);
    assert_eq!(code(&hstar(&["check", "--vector", "2,1"])), 2);
    assert_eq!(code(&hstar(&["check"])), 2);
    assert_eq!(code(&hstar(&["table", "nope"])), 2);
    assert_eq!(code(&hstar(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&hstar(&["inequalities", "--dim", "1"])), 2);
    assert_eq!(code(&hstar(&["frobnicate"])), 2);
    assert_eq!(code(&hstar(&["table", "int", "--bogus"])), 2);
}

#[test]
fn check_exit_codes() {
    let o = hstar(&["check", "--vector", "1,2,2,1,2,2,1,0"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("superA(0,0) (1) @ d=7"), "{out}");
    assert!(out.contains("slack -1"));

    let o = hstar(&["check", "--vector", "1,1,2,1,1,2,1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("variant3(0,0,0)"));

    assert_eq!(code(&hstar(&["check", "--vector", "1,1,1,1"])), 0);
}

#[test]
fn check_json_report() {
    let o = hstar(&["--format", "json", "check", "--vector", "1,2,3,2,2,2"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let bad: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| !e["holds"].as_bool().unwrap())
        .map(|e| e["form"].as_str().unwrap())
        .collect();
    assert!(bad.contains(&"b_0 <= b_2"), "{bad:?}");
}

#[test]
fn decompose_output() {
    let o = hstar(&["decompose", "--vector", "1,2,2,1,2,2,1,0"]);
    assert_eq!(
        stdout(&o),
        "d = 7, s = 6, l = 2\na = 1,3,4,3,3,4,3,1\nb = 0,0,0,0,0,0\n"
    );
}

#[test]
fn table_row_counts() {
    for (name, rows) in [
        ("noint", 8),
        ("int", 4),
        ("hoot", 15),
        ("cmon", 7),
        ("hoot2", 9),
        ("seven", 9),
    ] {
        let o = hstar(&["table", name]);
        assert_eq!(code(&o), 0, "{name}");
        assert_eq!(stdout(&o).lines().count(), rows + 1, "{name}");
    }
    let seven = stdout(&hstar(&["table", "seven"]));
    assert_eq!(seven.matches("CONJECTURE").count(), 2);
}

#[test]
fn tables_are_byte_stable() {
    for name in ["noint", "int", "reflexive"] {
        for format in ["text", "json", "tsv"] {
            let a = hstar(&["--format", format, "table", name]);
            let b = hstar(&["--format", format, "table", name]);
            assert_eq!(a.stdout, b.stdout, "{name} {format}");
        }
    }
}

#[test]
fn inequalities_listing() {
    let four = stdout(&hstar(&["inequalities", "--dim", "4", "--interior"]));
    assert!(!four.contains("superA"));
    assert!(four.contains("refinement"));

    let seven = stdout(&hstar(&["inequalities", "--dim", "7", "--interior"]));
    for row in [
        "2h*_5 + h*_6 <= h*_2 + 2h*_3",
        "h*_1 + h*_2 <= h*_3 + h*_4",
        "h*_1 + h*_2 <= h*_4 + h*_5",
        "2h*_1 + 3h*_2 + h*_3 <= h*_4 + 3h*_5 + 2h*_6",
    ] {
        assert!(seven.contains(row), "{row}");
    }

    let twelve = stdout(&hstar(&["inequalities", "--dim", "12"]));
    let rows: Vec<&str> = twelve.lines().filter(|l| l.starts_with("superA(1,2)")).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows.iter().filter(|l| l.ends_with("new at d = 12")).count(), 2);
}

#[test]
fn q_vertices_listing() {
    assert_eq!(
        stdout(&hstar(&["q-vertices", "--r", "1", "--rp", "1"])),
        "(1,1,1)\n(1,2,0)\n(2,1,0)\n"
    );
    assert_eq!(stdout(&hstar(&["q-vertices", "--r", "0", "--rp", "2"])), "(1,1/3,0)\n");
}

#[test]
fn box_listing() {
    let o = hstar(&["box", "--alpha", "2,2,1"]);
    let out = stdout(&o);
    assert!(out.starts_with("order 5, invariant factors (5)\nh* = 1,2,2\n"));
    assert_eq!(out.lines().count(), 7);
    let o = hstar(&["--format", "json", "box", "--cyclic", "5", "--weights", "1,2,3,4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 5);
    assert_eq!(code(&hstar(&["box", "--cyclic", "5"])), 2);
}

#[test]
fn verify_emits_json_lines() {
    let o = hstar(&[
        "verify",
        "--suite",
        "oracles",
        "--alpha-sum-max",
        "10",
        "--oracle-d-max",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.is_object());
    }
    assert!(out.lines().last().unwrap().contains("\"failed\":0"));
}
