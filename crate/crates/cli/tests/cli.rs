use std::process::{Command, Output};

fn rankforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankforge"))
        .args(args)
        .env_remove("RANKFORGE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn series_prints_exponent_coefficient_lines() {
    let o = rankforge(&["series", "J2^4 / (J1^2 * J4)", "--order", "8"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "0: 1\n1: 2\n2: 1\n3: 2\n4: 3\n5: 2\n6: 4\n7: 4\n"
    );

    let o = rankforge(&["series", "g(1,1,2)", "--order", "5"]);
    assert_eq!(stdout(&o), "0: 1\n1: 2\n2: 3\n3: 4\n4: 6\n");

    let o = rankforge(&["series", "J1 * (1/J1)", "--order", "5"]);
    assert_eq!(stdout(&o), "0: 1\n1: 0\n2: 0\n3: 0\n4: 0\n");
}

#[test]
fn series_output_reparses_to_the_same_coefficients() {
    let o = rankforge(&["series", "g(z8,1,2) - 1/3*J1/J2 + q^(-2)", "--order", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut rebuilt = Vec::new();
    for line in text.lines() {
        let (exp, coeff) = line.split_once(": ").unwrap();
        rebuilt.push(format!("({coeff})*q^({exp})"));
    }
    let o2 = rankforge(&["series", &rebuilt.join(" + "), "--order", "10"]);
    assert!(
        o2.status.success(),
        "{}",
        String::from_utf8_lossy(&o2.stderr)
    );
    assert_eq!(stdout(&o2), text);
}

#[test]
fn series_errors_carry_location_or_path() {
    let o = rankforge(&["series", "J2 + foo(3)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("line 1, column 6") && err.contains("foo"),
        "{err}"
    );

    let o = rankforge(&["series", "1/(q - q)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("while evaluating"), "{err}");
}

#[test]
fn tables_as_csv() {
    let o = rankforge(&["table", "odd-rank", "--nmax", "20"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("kind,m_or_class,n,value\n"));
    assert!(text.contains("odd-rank,0,1,1\n"));

    let o = rankforge(&["table", "p", "--nmax", "10"]);
    assert!(stdout(&o).contains("p,,9,30\n"));

    let marked = stdout(&rankforge(&["table", "marked", "--k", "2", "--nmax", "10"]));
    let moments = stdout(&rankforge(&[
        "table", "moments", "--k", "2", "--nmax", "10",
    ]));
    for n in 1..=10 {
        let d = marked
            .lines()
            .find(|l| l.starts_with(&format!("marked,2,{n},")))
            .unwrap()
            .rsplit(',')
            .next()
            .unwrap()
            .to_string();
        assert!(moments.contains(&format!("eta0,2,{n},{d}\n")), "n = {n}");
    }

    let o = rankforge(&[
        "table",
        "marked",
        "--k",
        "2",
        "--nmax",
        "30",
        "--cap-marked",
        "25",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_json_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = rankforge(&[
        "verify",
        "--filter",
        "thm-mod2",
        "--order",
        "60",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let raw = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&raw).unwrap();
    let arr = json.as_array().unwrap();
    assert_eq!(arr.len(), 14);
    assert_eq!(arr[0].as_object().unwrap().len(), 5);
    // Key order is part of the schema.
    let pos: Vec<usize> = [
        "\"id\"",
        "\"status\"",
        "\"window\"",
        "\"firstDiscrepancy\"",
        "\"wallMs\"",
    ]
    .iter()
    .map(|k| raw.find(k).unwrap())
    .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
    assert!(arr.iter().all(|r| r["status"] == "verified"));

    let o = rankforge(&["verify", "--filter", "no-such-prefix"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rankforge(&["verify", "--filter", "thm-mod2", "--nmax", "0"]);
    assert_eq!(o.status.code(), Some(2));
    // An order below a deep entry's minimum makes it fail.
    let o = rankforge(&["verify", "--filter", "N48-2n1", "--order", "100"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        stdout(&rankforge(&[
            "verify",
            "--filter",
            "g-sum-minus",
            "--order",
            "60",
            "--threads",
            threads,
        ]))
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert!(one.contains("\"reported\""));
}

#[test]
fn verify_text_and_csv_formats() {
    let text = stdout(&rankforge(&[
        "verify", "--filter", "prod", "--order", "40", "--format", "text",
    ]));
    assert!(text.starts_with("# filter: prod\n# order: 40\n"));
    assert_eq!(
        text.lines().filter(|l| l.starts_with("verified")).count(),
        4
    );

    let csv = stdout(&rankforge(&[
        "verify", "--filter", "prod", "--order", "40", "--format", "csv",
    ]));
    assert!(csv.starts_with("id,status,lo,hi,exp,lhs,rhs,wallMs\n"));
    assert!(csv.contains("prod/j-q-q2,verified,0,40,,,,0\n"));
}

#[test]
fn threads_env_fallback() {
    let o = Command::new(env!("CARGO_BIN_EXE_rankforge"))
        .args([
            "verify", "--filter", "prod", "--order", "20", "--format", "text",
        ])
        .env("RANKFORGE_THREADS", "2")
        .output()
        .unwrap();
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("# threads: 2"));
}
