use std::path::Path;
use std::process::{Command, Output};

use qpwb::io::{read_spectrum, read_table, read_trajectory};
use qpwb::value::parse_real;
use qpwb_core::xprec::golden;

fn qpwb(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpwb")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
        .trim()
}

fn siegel(dir: &Path, z0: &str, n: &str, out: &str) {
    let o = qpwb(dir, &["simulate", "--map", "siegel", "--rho", "golden", "--z0", z0, "--n", n, "--out", out]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for args in [
        &["simulate", "--map", "siegel", "--z0", "0.2", "--n", "0", "--out", "a.csv"][..],
        &["simulate", "--map", "siegel", "--z0", "0.2", "--out", "a.csv"],
        &["simulate", "--map", "siegel", "--z0", "0.2x", "--n", "5", "--out", "a.csv"],
        &["rotation", "--bogus"],
        &["length"],
    ] {
        let o = qpwb(d, args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    siegel(d, "0.2", "100", "s.csv");
    let o = qpwb(d, &["fourier", "--input", "s.csv", "--k-max", "0", "--out", "x.toml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn escaped_orbit_reports_index() {
    let dir = tempfile::tempdir().unwrap();
    let o = qpwb(dir.path(), &["simulate", "--map", "siegel", "--z0", "3", "--n", "100", "--out", "a.csv"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("escaped at iterate"));
}

#[test]
fn henon_orbit_file() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let args = [
        "simulate", "--map", "henon", "--theta", "0.664", "--phi", "2.032", "--x0", "-0.5+0.126i", "--y0",
        "-0.387-0.163i", "--n", "2000", "--out", "h.csv",
    ];
    let o = qpwb(d, &args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let t = read_trajectory(&d.join("h.csv")).unwrap();
    assert_eq!((t.len(), t.dim()), (2000, 2));
    assert!(t.points().all(|p| p.iter().all(|z| z.abs().to_f64() < 2.0)));
    assert_eq!(t.meta().generator.as_ref().map(|g| g.id()), Some("henon"));
    assert_eq!(t.meta().initial[1].im, parse_real("-0.163").unwrap());
}

#[test]
fn siegel_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    siegel(d, "0.2", "1e5", "s.csv");

    let o = qpwb(d, &["rotation", "--input", "s.csv", "--expected", "golden", "--profile-out", "p.csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    // printed digits parse back to the exact golden mean at 36 digits
    let rate = parse_real(field(&text, "rate ")).unwrap();
    assert!((rate - golden()).abs().to_f64() <= 1e-35);
    assert!(field(&text, "error").parse::<f64>().unwrap() <= 1e-25);
    let (cols, rows) = read_table(&d.join("p.csv")).unwrap();
    assert_eq!(cols, ["n", "rate", "err"]);
    assert_eq!(rows.last().unwrap()[0], "99999");
    let head = std::fs::read_to_string(d.join("p.csv")).unwrap();
    let mut lines = head.lines();
    assert_eq!(lines.next(), Some("# figure: rotation rate convergence"));
    let hash = lines.next().unwrap().strip_prefix("# config-sha256: ").unwrap();
    assert_eq!(hash.len(), 64);

    let o = qpwb(d, &["fourier", "--input", "s.csv", "--k-max", "200", "--out", "spec.toml", "--negative", "1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(field(&stdout(&o), "|b_-1|").parse::<f64>().unwrap() < 1e-25);
    let spec = read_spectrum(&d.join("spec.toml")).unwrap();
    assert!((spec.rho - golden()).abs().to_f64() <= 1e-30);

    let o = qpwb(d, &["conjugacy", "--spectrum", "spec.toml", "--replay", "s.csv", "--out", "coef.csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let r0: f64 = field(&text, "R0").parse().unwrap();
    assert!(r0 > 0.5 && r0 < 0.6, "{r0}");
    assert!(field(&text, "replay max error").parse::<f64>().unwrap() < 1e-20);

    let o = qpwb(d, &["length", "--spectrum", "spec.toml", "--r", "0.5..0.9", "--steps", "5", "--out", "len.csv"]);
    assert!(o.status.success());
    let (_, rows) = read_table(&d.join("len.csv")).unwrap();
    let l: Vec<f64> = rows.iter().map(|r| parse_real(&r[1]).unwrap().to_f64()).collect();
    assert!(l.windows(2).all(|w| w[0] <= w[1]));

    let o = qpwb(d, &["curve", "--spectrum", "spec.toml", "--samples", "64", "--out", "c.csv"]);
    assert!(o.status.success());
    assert_eq!(read_table(&d.join("c.csv")).unwrap().1.len(), 64);

    let o = qpwb(d, &["length", "--spectrum", "spec.toml", "--r", "0.5..1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn identical_runs_write_identical_files() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for dir in &dirs {
        let d = dir.path();
        siegel(d, "0.3", "3000", "a.csv");
        let o = qpwb(d, &["fourier", "--input", "a.csv", "--k-max", "40", "--out", "spec.toml"]);
        assert!(o.status.success());
    }
    for file in ["a.csv", "a.toml", "spec.toml"] {
        let [a, b] = [0, 1].map(|i| std::fs::read(dirs[i].path().join(file)).unwrap());
        assert!(a == b, "{file} differs between runs");
    }
}

#[test]
fn config_file_supplies_flags() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("run.toml"), "[simulate]\nmap = \"siegel\"\nz0 = \"0.1\"\nn = 50\nout = \"cfg.csv\"\n").unwrap();
    let o = qpwb(d, &["simulate", "--config", "run.toml", "--n", "70"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_trajectory(&d.join("cfg.csv")).unwrap().len(), 70);

    std::fs::write(d.join("bad.toml"), "[simulate]\nzzz = 1\n").unwrap();
    let o = qpwb(d, &["simulate", "--config", "bad.toml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convergence_table() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = qpwb(d, &["convergence", "--n", "100,200", "--weight", "bump2,uniform", "--out", "wb.csv"]);
    assert!(o.status.success());
    let (cols, rows) = read_table(&d.join("wb.csv")).unwrap();
    assert_eq!(cols, ["weight", "n", "abs"]);
    let v: Vec<f64> = rows.iter().map(|r| parse_real(&r[2]).unwrap().to_f64()).collect();
    assert!(v[1] < v[0] * 1e-6, "{v:?}");
    assert!(v[3] > 1e-4, "{v:?}");
}

#[test]
fn projection_without_hole_has_no_lift() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let args = [
        "simulate", "--map", "henon", "--theta", "0.664", "--phi", "2.032", "--x0", "-0.5+0.126i", "--y0",
        "-0.387-0.163i", "--n", "20000", "--out", "h.csv",
    ];
    assert!(qpwb(d, &args).status.success());
    // (Re x, Re y) about the fixed point fills a band with no hole
    let o = qpwb(d, &["rotation", "--input", "h.csv", "--u", "re0", "--v", "re1", "--reference", "-0.445,-0.445"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("projection admits no lift (branch half-width 0.49"), "{err}");
    let o = qpwb(d, &["rotation", "--input", "h.csv", "--reference", "-0.4,0"]);
    assert!(o.status.success());
}
