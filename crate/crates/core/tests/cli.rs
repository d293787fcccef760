use std::fs;
use std::path::Path;

use fermislocc::cli::run_with;
use fermislocc::statefile::parse_state_file;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let argv = std::iter::once("fermislocc")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn invariants_of_the_two_fermion_maximum() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "max.state", "uu 1 0\ndd 1 0\n0D 1 0\nD0 1 0\n");
    let r = run(&["invariants", "--state", &f]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.lines().next(), Some("I0 0.0625 0.0 4 0.25"));
}

#[test]
fn malformed_state_files_exit_2_with_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("empty.state", "", "state file"),
        ("length.state", "uu 1 0\nuud 1 0\n", "line 2"),
        ("alphabet.state", "uu 1 0\nux 1 0\n", "line 2"),
        ("count.state", "uu 1 0\nu0 1 0\n", "line 2"),
        ("float.state", "# c\nuu one 0\n", "line 2"),
    ];
    for (name, text, needle) in cases {
        let r = run(&["invariants", "--state", &write(dir.path(), name, text)]);
        assert_eq!(r.code, 2, "{name}");
        assert!(r.err.contains(needle), "{name}: {}", r.err);
        assert_eq!(r.err.lines().count(), 1, "{name}: {}", r.err);
    }
    let missing = dir.path().join("nope.state");
    assert_eq!(run(&["invariants", "--state", missing.to_str().unwrap()]).code, 2);
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(run(&["invariants", "--bogus"]).code, 2);
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "two.state", "uu 1 0\ndd 1 0\n");
    let r = run(&["invariants", "--state", &f, "--set", "full3"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.err.lines().count(), 1);
    assert_eq!(run(&["maxent", "--kind", "cyclic", "--p", "2"]).code, 1);
    assert_eq!(run(&["maxent", "--kind", "nonsense"]).code, 1);
    assert_eq!(run(&["sweep", "--points", "0"]).code, 1);
}

#[test]
fn sweep_output_is_byte_identical() {
    let args = ["sweep", "--b-min", "1.6e-5", "--b-max", "1.8e-5", "--points", "21"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let lines: Vec<&str> = a.out.lines().collect();
    assert_eq!(lines[0], "B,measure_i12,measure_tau,entropy,gap,ground_energy");
    assert_eq!(lines.len(), 22);
    assert!(!a.out.contains('\r'));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(run(&with_out).code, 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), a.out);
}

#[test]
fn sweep_peak_row_is_near_the_transition() {
    let r = run(&["sweep", "--b-min", "1.70e-5", "--b-max", "1.72e-5", "--points", "201"]);
    assert_eq!(r.code, 0);
    let best = r
        .out
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (f[0], f[1])
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    assert!(
        (best.0 - 1.7099e-5).abs() < 2e-8 && (best.1 - 0.498).abs() < 0.005,
        "{best:?}"
    );
}

#[test]
fn maxent_round_trips_through_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i2.state");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["maxent", "--kind", "I2_only", "--out", p]).code, 0);
    let state = parse_state_file(&fs::read_to_string(&path).unwrap(), false).unwrap();
    assert!((state.norm() - 1.0).abs() < 1e-12);
    let r = run(&["invariants", "--state", p, "--set", "full3"]);
    assert_eq!(r.code, 0);
    let i2 = r.out.lines().find(|l| l.starts_with("I2 ")).unwrap();
    let fields: Vec<&str> = i2.split(' ').collect();
    assert!((fields[1].parse::<f64>().unwrap() - 0.0625).abs() < 1e-12);
    assert_eq!(fields[3], "4");
    assert!((fields[4].parse::<f64>().unwrap() - 0.25).abs() < 1e-12);

    let cyclic = run(&["maxent", "--kind", "cyclic", "--p", "1", "--r", "1"]);
    assert_eq!(cyclic.code, 0);
    assert!(parse_state_file(&cyclic.out, false).is_ok());
}

#[test]
fn auto_set_follows_the_sector() {
    let dir = tempfile::tempdir().unwrap();
    let names = |text: &str| -> Vec<String> {
        let r = run(&["invariants", "--state", &write(dir.path(), "s.state", text)]);
        assert_eq!(r.code, 0, "{}", r.err);
        r.out.lines().map(|l| l.split(' ').next().unwrap().to_owned()).collect()
    };
    assert_eq!(names("0D 1 0\nD0 1 0\n").len(), 2);
    assert_eq!(names("uu0 1 0\n0ud 1 0\n").len(), 2);
    let full = names("uuu 1 0\nddd 1 0\n");
    assert!(full.len() >= 7 && full.iter().any(|n| n == "I1"));
}

#[test]
fn check_and_omega_subcommands() {
    let r = run(&["check", "--suite", "maxent"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.lines().all(|l| !l.starts_with("FAIL")));
    let r = run(&["check", "--suite", "slocc", "--samples", "10", "--seed", "3"]);
    assert_eq!(r.code, 0, "{}", r.out);
    let r = run(&["omega"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("I1 8 4 -1.0 0.0"), "{}", r.out);
    assert_eq!(r.out.lines().count(), 12);
}
