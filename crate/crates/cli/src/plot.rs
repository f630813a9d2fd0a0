//! Minimal SVG renderer for the CSV tables: line charts and heatmaps.
//!
//! Output is a standalone SVG 1.1 document with fixed geometry and fixed
//! number formatting, so identical input always produces identical bytes.

use std::fmt::Write as _;

use crate::error::CliError;
use crate::tables::{Schema, Table};

const WIDTH: f64 = 860.0;
const HEIGHT: f64 = 520.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

const MAX_HEAT_COLS: usize = 630;
const MAX_HEAT_ROWS: usize = 430;
/// Heatmap colors span this many decades below the map maximum.
const HEAT_DECADES: f64 = 3.0;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

const VIRIDIS: [(f64, f64, f64); 5] = [
    (68.0, 1.0, 84.0),
    (59.0, 82.0, 139.0),
    (33.0, 145.0, 140.0),
    (94.0, 201.0, 98.0),
    (253.0, 231.0, 37.0),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotKind {
    Line,
    Heatmap,
}

struct Series {
    label: String,
    points: Vec<(f64, f64)>,
}

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn plot_w() -> f64 {
        WIDTH - LEFT - RIGHT
    }

    fn plot_h() -> f64 {
        HEIGHT - TOP - BOTTOM
    }

    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x.0) / (self.x.1 - self.x.0) * Self::plot_w()
    }

    fn py(&self, y: f64) -> f64 {
        TOP + Self::plot_h() - (y - self.y.0) / (self.y.1 - self.y.0) * Self::plot_h()
    }
}

pub fn render(table: &Table, kind: PlotKind) -> Result<String, CliError> {
    match kind {
        PlotKind::Line => render_line(table),
        PlotKind::Heatmap => render_heatmap(table),
    }
}

fn line_series(table: &Table) -> Result<(Vec<Series>, &'static str, &'static str), CliError> {
    let grouped = |key_cols: &[usize], x: usize, y: usize, label: &dyn Fn(&[f64]) -> String| {
        let mut out: Vec<(Vec<f64>, Series)> = Vec::new();
        for row in &table.rows {
            let key: Vec<f64> = key_cols.iter().map(|&c| row[c]).collect();
            match out.iter_mut().find(|(k, _)| *k == key) {
                Some((_, s)) => s.points.push((row[x], row[y])),
                None => {
                    let s = Series {
                        label: label(&key),
                        points: vec![(row[x], row[y])],
                    };
                    out.push((key, s));
                }
            }
        }
        out.into_iter().map(|(_, s)| s).collect::<Vec<_>>()
    };

    match table.schema {
        Schema::Spectrum => Ok((
            grouped(&[], 0, 1, &|_| "S(Δ′)".to_string()),
            "Δ′ (eV)",
            "intensity (arb. units)",
        )),
        Schema::TempSeries => Ok((
            grouped(&[0], 1, 2, &|k| format!("T = {} K", k[0])),
            "Δ′ (eV)",
            "intensity (arb. units)",
        )),
        Schema::Branches => Ok((
            grouped(&[1, 2], 0, 3, &|k| format!("E{}{}", k[0], k[1])),
            "Δ (eV)",
            "transition energy Δ′ (eV)",
        )),
        Schema::Curves => {
            let series = (1..=3)
                .map(|c| Series {
                    label: format!("E{c}"),
                    points: table.rows.iter().map(|r| (r[0], r[c])).collect(),
                })
                .collect();
            Ok((series, "Δ (eV)", "dressed energy (eV)"))
        }
        other => Err(CliError::Schema(format!(
            "{other:?} table cannot be drawn as a line plot"
        ))),
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi > lo {
        (lo, hi)
    } else {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
        (lo - pad, hi + pad)
    }
}

fn nice_step(span: f64, target: usize) -> f64 {
    let raw = span / target as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm < 1.5 {
        1.0
    } else if norm < 3.0 {
        2.0
    } else if norm < 7.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn ticks(lo: f64, hi: f64) -> (Vec<f64>, usize) {
    let step = nice_step(hi - lo, 6);
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    ((first..=last).map(|k| k as f64 * step).collect(), decimals)
}

fn tick_label(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    if s.starts_with('-') && s.trim_start_matches(['-', '0', '.']).is_empty() {
        s[1..].to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn open_document(svg: &mut String) {
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">
<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
}

fn draw_axes(svg: &mut String, frame: &Frame, x_label: &str, y_label: &str) {
    let (x0, x1) = (LEFT, LEFT + Frame::plot_w());
    let (y0, y1) = (TOP + Frame::plot_h(), TOP);
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        Frame::plot_w(),
        Frame::plot_h()
    );
    let (xt, xd) = ticks(frame.x.0, frame.x.1);
    for t in xt {
        let x = frame.px(t);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            y0 + 5.0,
            y0 + 19.0,
            tick_label(t, xd)
        );
    }
    let (yt, yd) = ticks(frame.y.0, frame.y.1);
    for t in yt {
        let y = frame.py(t);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            x0 - 5.0,
            x0 - 8.0,
            y + 4.0,
            tick_label(t, yd)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 15.0,
        escape(x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        escape(y_label)
    );
}

fn render_line(table: &Table) -> Result<String, CliError> {
    let (series, x_label, y_label) = line_series(table)?;
    let x = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let mut y = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| p.1)));
    if matches!(table.schema, Schema::Spectrum | Schema::TempSeries) {
        y.0 = y.0.min(0.0);
    }
    let frame = Frame { x, y };

    let mut svg = String::new();
    open_document(&mut svg);
    draw_axes(&mut svg, &frame, x_label, y_label);
    for (k, s) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let mut pts = String::new();
        for &(px, py) in s.points.iter().filter(|p| p.0.is_finite() && p.1.is_finite()) {
            let _ = write!(pts, "{:.2},{:.2} ", frame.px(px), frame.py(py));
        }
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{}"/>"#,
            pts.trim_end()
        );
        let ly = TOP + 15.0 + 18.0 * k as f64;
        let lx = LEFT + Frame::plot_w() + 12.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(&s.label)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn viridis(t: f64) -> String {
    let t = t.clamp(0.0, 1.0) * (VIRIDIS.len() - 1) as f64;
    let k = (t.floor() as usize).min(VIRIDIS.len() - 2);
    let f = t - k as f64;
    let (a, b) = (VIRIDIS[k], VIRIDIS[k + 1]);
    let mix = |p: f64, q: f64| (p + (q - p) * f).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

/// Color scale position of `v` relative to `max` on a log axis; 0 at or below
/// the bottom decade.
fn heat_level(v: f64, max: f64) -> f64 {
    if v <= 0.0 || max <= 0.0 {
        return 0.0;
    }
    ((v / max).log10() / HEAT_DECADES + 1.0).clamp(0.0, 1.0)
}

fn render_heatmap(table: &Table) -> Result<String, CliError> {
    if table.schema != Schema::Map {
        return Err(CliError::Schema(format!(
            "{:?} table cannot be drawn as a heatmap",
            table.schema
        )));
    }
    // Δ-major: consecutive rows share delta_ev
    let mut deltas: Vec<f64> = Vec::new();
    for row in &table.rows {
        if deltas.last() != Some(&row[0]) {
            deltas.push(row[0]);
        }
    }
    let ncols = table.rows.len() / deltas.len();
    if ncols * deltas.len() != table.rows.len() || ncols < 1 {
        return Err(CliError::Schema("map rows do not form a rectangular grid".into()));
    }
    let dps: Vec<f64> = table.rows[..ncols].iter().map(|r| r[1]).collect();
    let values: Vec<&[Vec<f64>]> = table.rows.chunks(ncols).collect();

    let out_cols = ncols.min(MAX_HEAT_COLS);
    let out_rows = deltas.len().min(MAX_HEAT_ROWS);
    let max = table.rows.iter().map(|r| r[2]).fold(0.0, f64::max);

    let frame = Frame {
        x: bounds(dps.iter().copied()),
        y: bounds(deltas.iter().copied()),
    };
    let cell_w = Frame::plot_w() / out_cols as f64;
    let cell_h = Frame::plot_h() / out_rows as f64;

    let mut svg = String::new();
    open_document(&mut svg);
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
        Frame::plot_w(),
        Frame::plot_h(),
        viridis(0.0)
    );
    for r in 0..out_rows {
        let r0 = r * deltas.len() / out_rows;
        let r1 = ((r + 1) * deltas.len() / out_rows).max(r0 + 1);
        // Δ increases upward
        let y = TOP + Frame::plot_h() - (r + 1) as f64 * cell_h;
        for c in 0..out_cols {
            let c0 = c * ncols / out_cols;
            let c1 = ((c + 1) * ncols / out_cols).max(c0 + 1);
            let peak = values[r0..r1]
                .iter()
                .flat_map(|row| row[c0..c1].iter().map(|v| v[2]))
                .fold(0.0, f64::max);
            let level = heat_level(peak, max);
            if level <= 0.0 {
                continue;
            }
            let _ = writeln!(
                svg,
                r#"<rect x="{:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                LEFT + c as f64 * cell_w,
                cell_w + 0.05,
                cell_h + 0.05,
                viridis(level)
            );
        }
    }
    draw_axes(&mut svg, &frame, "Δ′ (eV)", "Δ (eV)");

    // color bar
    let bx = LEFT + Frame::plot_w() + 20.0;
    let steps = 30;
    let bh = Frame::plot_h() / steps as f64;
    for k in 0..steps {
        let t = (k as f64 + 0.5) / steps as f64;
        let _ = writeln!(
            svg,
            r#"<rect x="{bx:.2}" y="{:.2}" width="18" height="{:.2}" fill="{}"/>"#,
            TOP + Frame::plot_h() - (k + 1) as f64 * bh,
            bh + 0.05,
            viridis(t)
        );
    }
    for d in 0..=HEAT_DECADES as i32 {
        let y = TOP + Frame::plot_h() * (d as f64 / HEAT_DECADES);
        let label = if d == 0 { "1".to_string() } else { format!("1e-{d}") };
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}">{label}</text>"#,
            bx + 24.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">I / max</text>"#,
        bx + 30.0,
        TOP + Frame::plot_h() + 20.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
