//! CSV schemas written by the subcommands and read back by `plot`.
//!
//! Floats are written with Rust's shortest round-trip formatting, so reading a
//! file back reproduces the in-memory values bit for bit.

use std::io::{Read, Write};

use qdm_rf::sweep::{BranchRow, CurveRow};
use qdm_rf::{IntensityMap, PeakCount, SpectrumGrid, Transition};

use crate::error::CliError;

pub const SPECTRUM_HEADER: &[&str] = &["delta_prime_ev", "intensity"];
pub const TRANSITIONS_HEADER: &[&str] = &[
    "i",
    "j",
    "kind",
    "delta_prime_ev",
    "luminosity",
    "hwhm_ev",
    "intensity",
];
pub const BRANCHES_HEADER: &[&str] = &["delta_ev", "i", "j", "delta_prime_ev"];
pub const MAP_HEADER: &[&str] = &["delta_ev", "delta_prime_ev", "intensity"];
pub const CURVES_HEADER: &[&str] = &["delta_ev", "e1_ev", "e2_ev", "e3_ev"];
pub const TEMPSERIES_HEADER: &[&str] = &["temp_k", "delta_prime_ev", "intensity"];
pub const PEAKS_HEADER: &[&str] = &["peak", "delta_prime_ev"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    Spectrum,
    Transitions,
    Branches,
    Map,
    Curves,
    TempSeries,
    Peaks,
}

impl Schema {
    pub fn header(self) -> &'static [&'static str] {
        match self {
            Schema::Spectrum => SPECTRUM_HEADER,
            Schema::Transitions => TRANSITIONS_HEADER,
            Schema::Branches => BRANCHES_HEADER,
            Schema::Map => MAP_HEADER,
            Schema::Curves => CURVES_HEADER,
            Schema::TempSeries => TEMPSERIES_HEADER,
            Schema::Peaks => PEAKS_HEADER,
        }
    }

    pub fn from_header(fields: &[&str]) -> Option<Schema> {
        [
            Schema::Spectrum,
            Schema::Transitions,
            Schema::Branches,
            Schema::Map,
            Schema::Curves,
            Schema::TempSeries,
            Schema::Peaks,
        ]
        .into_iter()
        .find(|s| s.header() == fields)
    }
}

pub fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

fn writer<W: Write>(out: W, header: &[&str]) -> Result<csv::Writer<W>, CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(header)?;
    Ok(w)
}

pub fn write_spectrum<W: Write>(out: W, s: &SpectrumGrid) -> Result<(), CliError> {
    let mut w = writer(out, SPECTRUM_HEADER)?;
    for &(x, y) in &s.samples {
        w.write_record([fmt_f64(x), fmt_f64(y)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_transitions<W: Write>(
    out: W,
    ts: &[Transition],
    gamma: f64,
    gamma_rad: f64,
) -> Result<(), CliError> {
    let mut w = writer(out, TRANSITIONS_HEADER)?;
    for t in ts {
        let f = t.hwhm(gamma, gamma_rad);
        w.write_record([
            t.i.to_string(),
            t.j.to_string(),
            t.kind.as_str().to_string(),
            fmt_f64(t.a),
            fmt_f64(t.lum),
            fmt_f64(f),
            fmt_f64(t.lum / f),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_branches<W: Write>(out: W, rows: &[BranchRow]) -> Result<(), CliError> {
    let mut w = writer(out, BRANCHES_HEADER)?;
    for row in rows {
        for t in &row.transitions {
            w.write_record([
                fmt_f64(row.delta),
                t.i.to_string(),
                t.j.to_string(),
                fmt_f64(t.a),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_curves<W: Write>(out: W, rows: &[CurveRow]) -> Result<(), CliError> {
    let mut w = writer(out, CURVES_HEADER)?;
    for row in rows {
        let [e1, e2, e3] = row.energies;
        w.write_record([fmt_f64(row.delta), fmt_f64(e1), fmt_f64(e2), fmt_f64(e3)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_map<W: Write>(out: W, map: &IntensityMap) -> Result<(), CliError> {
    let mut w = writer(out, MAP_HEADER)?;
    for (delta, row) in map.delta_axis.iter().zip(&map.values) {
        let d = fmt_f64(*delta);
        for (dp, y) in map.dp_axis.iter().zip(row) {
            w.write_record([d.as_str(), &fmt_f64(*dp), &fmt_f64(*y)])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_tempseries<W: Write>(out: W, series: &[SpectrumGrid]) -> Result<(), CliError> {
    let mut w = writer(out, TEMPSERIES_HEADER)?;
    for s in series {
        let t = fmt_f64(s.meta.temp_k.unwrap_or(f64::NAN));
        for &(x, y) in &s.samples {
            w.write_record([t.as_str(), &fmt_f64(x), &fmt_f64(y)])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_peaks<W: Write>(out: W, peaks: &PeakCount) -> Result<(), CliError> {
    let mut w = writer(out, PEAKS_HEADER)?;
    for (k, c) in peaks.centers.iter().enumerate() {
        w.write_record([(k + 1).to_string(), fmt_f64(*c)])?;
    }
    w.flush()?;
    Ok(())
}

/// A parsed CSV file matching one of the known schemas.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub schema: Schema,
    /// Rows with every column parsed as a float; non-numeric columns
    /// (the transition `kind`) become NaN.
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Vec<f64> {
        let idx = self
            .schema
            .header()
            .iter()
            .position(|h| *h == name)
            .expect("column belongs to schema");
        self.rows.iter().map(|r| r[idx]).collect()
    }
}

pub fn read_table<R: Read>(input: R) -> Result<Table, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(input);
    let mut records = rdr.records();
    let header = match records.next() {
        Some(h) => h?,
        None => return Err(CliError::Schema("input is empty".into())),
    };
    let fields: Vec<&str> = header.iter().collect();
    let schema = Schema::from_header(&fields)
        .ok_or_else(|| CliError::Schema(format!("unrecognized header '{}'", fields.join(","))))?;

    let mut rows = Vec::new();
    for (k, rec) in records.enumerate() {
        let rec = rec?;
        if rec.len() != fields.len() {
            return Err(CliError::Schema(format!(
                "row {} has {} fields, expected {}",
                k + 2,
                rec.len(),
                fields.len()
            )));
        }
        let mut row = Vec::with_capacity(rec.len());
        for (col, v) in rec.iter().enumerate() {
            match v.parse::<f64>() {
                Ok(x) => row.push(x),
                Err(_) if schema == Schema::Transitions && fields[col] == "kind" => row.push(f64::NAN),
                Err(_) => {
                    return Err(CliError::Schema(format!(
                        "row {}: '{}' is not a number",
                        k + 2,
                        v
                    )))
                }
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Schema("input has a header but no rows".into()));
    }
    Ok(Table { schema, rows })
}
