use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qdm_rf_cli::tables::{read_table, Schema};

const BASELINE: &str = "n = 100\ng_sqrt_n_ev = 0.1\nt_ev = 0.1\ne_xd_ev = 1\nhw_l_ev = 1\ndelta_ev = 0.008\n";

fn qdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdm-rf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn ok(args: &[&str]) -> String {
    let out = qdm(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.conf", "t_ev = -0.1\ne_xd_ev = 1\nhw_l_ev = 1\ng_sqrt_n_ev = 0.1\n");
    let out = qdm(&["spectrum", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("t_ev"), "{err}");
    assert!(err.contains("violates constraint"), "{err}");

    let missing = dir.path().join("nope.conf");
    let out = qdm(&["spectrum", "--config", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let empty = write(dir.path(), "empty.csv", "");
    let out = qdm(&["plot", "--input", empty.to_str().unwrap(), "--kind", "line"]);
    assert_eq!(out.status.code(), Some(1));

    assert_eq!(qdm(&["spectrum"]).status.code(), Some(1));
    assert_eq!(qdm(&["--help"]).status.code(), Some(0));
}

#[test]
fn unknown_key_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "x.conf", &format!("{BASELINE}colour = red\n"));
    let out = qdm(&["peaks", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 7"), "{err}");
    assert!(err.contains("colour"), "{err}");
}

#[test]
fn transitions_at_resonance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "p.conf", BASELINE);
    let text = ok(&["transitions", "--config", cfg.to_str().unwrap(), "--delta", "0"]);
    let table = read_table(text.as_bytes()).unwrap();
    assert_eq!(table.schema, Schema::Transitions);
    assert_eq!(table.rows.len(), 9);
    let lum = table.column("luminosity");
    assert_eq!(lum.iter().filter(|&&l| l > 1e-20).count(), 6);
    assert!((lum.iter().sum::<f64>() - 1.0).abs() < 1e-12);
}

#[test]
fn seven_peaks_at_5k() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "p.conf", BASELINE);
    let text = ok(&["spectrum", "--config", cfg.to_str().unwrap(), "--temp", "5"]);
    let table = read_table(text.as_bytes()).unwrap();
    assert_eq!(table.rows.len(), 7001);
    let y = table.column("intensity");
    let top = y.iter().cloned().fold(0.0, f64::max);
    let maxima = (1..y.len() - 1)
        .filter(|&k| y[k] > y[k - 1] && y[k] >= y[k + 1] && y[k] >= 1e-9 * top)
        .count();
    assert_eq!(maxima, 7);

    let peaks = ok(&["peaks", "--config", cfg.to_str().unwrap()]);
    assert_eq!(peaks.lines().count(), 1 + 5);
}

#[test]
fn default_map_shape() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "p.conf", BASELINE);
    let out = dir.path().join("map.csv");
    ok(&["map", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delta_ev,delta_prime_ev,intensity"));
    assert_eq!(lines.count(), 241 * 7001);
}

#[test]
fn csv_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "p.conf", BASELINE);
    let text = ok(&["spectrum", "--config", cfg.to_str().unwrap(), "--temp", "20"]);
    let table = read_table(text.as_bytes()).unwrap();
    let mut rebuilt = String::from("delta_prime_ev,intensity\n");
    for row in &table.rows {
        rebuilt.push_str(&format!("{},{}\n", row[0], row[1]));
    }
    assert_eq!(rebuilt, text);
}

#[test]
fn plots_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "p.conf",
        &format!("{BASELINE}npoints = 401\nsweep_steps = 11\n"),
    );
    let cfg = cfg.to_str().unwrap();
    for (cmd, kind) in [("spectrum", "line"), ("curves", "line"), ("map", "heatmap")] {
        let csv = dir.path().join(format!("{cmd}.csv"));
        ok(&[cmd, "--config", cfg, "--out", csv.to_str().unwrap()]);
        let a = ok(&["plot", "--input", csv.to_str().unwrap(), "--kind", kind]);
        let b = ok(&["plot", "--input", csv.to_str().unwrap(), "--kind", kind]);
        assert!(a.starts_with("<svg") || a.starts_with("<?xml"), "{cmd}");
        assert_eq!(a, b, "{cmd}");
    }
    let csv = dir.path().join("spectrum.csv");
    let out = qdm(&["plot", "--input", csv.to_str().unwrap(), "--kind", "heatmap"]);
    assert_eq!(out.status.code(), Some(1));
}
