use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phonon-damping")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_sweep_is_byte_identical() {
    let conf = data("golden.conf");
    let expected = std::fs::read_to_string(data("golden_sweep.csv")).unwrap();
    for jobs in ["1", "4"] {
        let o = run(&["sweep", "--config", conf.to_str().unwrap(), "--jobs", jobs]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), expected, "jobs = {jobs}");
    }
}

#[test]
fn one_row_per_grid_point_and_method() {
    let o = run(&[
        "sweep",
        "--potential",
        "flat-cutoff:v0=0.1,lambda=10",
        "--beta-nu",
        "20,50,100",
        "--k",
        "0.1,0.05",
        "--methods",
        "quadrature",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1 + 6);
    // βν outer, k inner, both ascending.
    let keys: Vec<(f64, f64)> = lines[1..]
        .iter()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[2].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(keys, sorted);
    for l in &lines[1..] {
        let f: Vec<&str> = l.split(',').collect();
        let (b, lv, t): (f64, f64, f64) = (f[5].parse().unwrap(), f[7].parse().unwrap(), f[9].parse().unwrap());
        assert!(b > 0.0 && lv > 0.0);
        assert_eq!(t, b + lv);
    }
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let common = [
        "sweep",
        "--potential",
        "flat-cutoff:v0=0.1,lambda=10",
        "--beta-nu",
        "100",
        "--k",
        "0.05,0.1",
        "--methods",
        "quadrature,asymptotic",
    ];
    let csv = stdout(&run(&common));
    let mut args = common.to_vec();
    args.extend(["--format", "json"]);
    let json: Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
    let rows = json.as_array().unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let mut n = 0;
    for (line, obj) in lines.zip(rows) {
        for (key, cell) in header.iter().zip(line.split(',')) {
            let v = &obj[*key];
            match v {
                Value::Null => assert_eq!(cell, "", "{key}"),
                Value::String(s) => assert_eq!(cell, s, "{key}"),
                Value::Number(x) => assert_eq!(cell.parse::<f64>().unwrap(), x.as_f64().unwrap(), "{key}"),
                other => panic!("unexpected {other}"),
            }
        }
        n += 1;
    }
    assert_eq!(n, rows.len());
    assert_eq!(n, 4);
}

#[test]
fn empty_momentum_list_is_a_usage_error() {
    let o = run(&["sweep", "--potential", "gaussian:v=0.1", "--beta-nu", "1", "--k", ""]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_config_key_is_a_usage_error() {
    let dir = std::env::temp_dir().join(format!("pd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("bad.conf");
    std::fs::write(&conf, "potential = gaussian:v=0.1\ntemperature = 3\n").unwrap();
    let o = run(&["sweep", "--config", conf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("temperature"));
}

#[test]
fn gaussian_fails_validation_unless_skipped() {
    let args = ["sweep", "--potential", "gaussian:v=0.1", "--beta-nu", "1", "--k", "0.5"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("convex-at-origin"));
    let mut skip = args.to_vec();
    skip.push("--skip-validation");
    let o = run(&skip);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);

    let o = run(&["validate", "--potential", "gaussian:v=0.1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["validate", "--potential", "flat-cutoff:v0=0.1,lambda=10"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn failed_points_are_marked_and_exit_3() {
    let table = data("short.tab");
    let spec = format!("table:{}", table.display());
    let o = run(&["sweep", "--potential", &spec, "--beta-nu", "1", "--k", "0.3", "--skip-validation"]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[7], "error");
    assert_eq!(row[9], "error");
    assert_eq!(row[5], "0");
    assert!(String::from_utf8_lossy(&o.stderr).contains("table too short"));
}

#[test]
fn rate_takes_a_single_point() {
    let o = run(&["rate", "--potential", "flat-cutoff:v0=0.1,lambda=10", "--beta-nu", "100", "--k", "0.05,0.1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["rate", "--potential", "flat-cutoff:v0=0.1,lambda=10", "--beta-nu", "100", "--k", "0.05"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",quadrature,"));
}

#[test]
fn specfun_and_oracle_tables() {
    let o = run(&["specfun", "--theta", "0.5,2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("theta,I,G2,G3,G4"));
    assert_eq!(out.lines().count(), 3);

    let args = [
        "oracle",
        "--potential",
        "flat-cutoff:v0=0.1,lambda=10",
        "--beta-nu",
        "10",
        "--k",
        "0.3",
        "--mc-samples",
        "200000",
        "--mc-seed",
        "7",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let mut one = args.to_vec();
    one.extend(["--jobs", "1"]);
    assert_eq!(stdout(&a), stdout(&run(&one)));
    for line in stdout(&a).lines().skip(1) {
        let z: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(z.abs() < 4.0, "{line}");
    }
}
