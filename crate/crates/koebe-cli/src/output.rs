//! Serialization helpers: JSON/CSV writers with deterministic layout.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use koebe::boundary::BoundaryCurve;
use koebe::families::{Family, FamilySpec};
use koebe::{RadiusReport, RealPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Internal(String),
}

impl CliError {
    pub fn usage_from(e: koebe::Error) -> CliError {
        match e {
            koebe::Error::InvalidParameter(m) => CliError::Usage(m),
            other => CliError::Internal(other.to_string()),
        }
    }

    pub fn internal_from(e: koebe::Error) -> CliError {
        CliError::Internal(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub fn writer_for(path: &Option<PathBuf>) -> Result<Box<dyn Write + Send>, CliError> {
    match path {
        Some(p) => Ok(Box::new(BufWriter::new(File::create(p)?))),
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

pub fn write_json_line<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(w, "{line}")?;
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CoeffRecord {
    k: usize,
    mid: String,
    radius: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

/// Exact rational form, where the family definition provides one.
fn exact_note(spec: &FamilySpec, k: usize) -> Option<String> {
    let n = spec.degree as usize;
    match spec.family {
        Family::Alexander if k >= 1 => Some(format!("1/{k}")),
        Family::Fejer if k >= 1 => Some(format!("{}/{}", n - (k - 1), n)),
        _ => None,
    }
}

pub fn write_coeffs(
    w: &mut dyn Write,
    spec: &FamilySpec,
    poly: &RealPolynomial,
    format: Format,
) -> Result<(), CliError> {
    let first = usize::from(!matches!(spec.family, Family::EgervarySzasz));
    let records: Vec<CoeffRecord> = (first..=poly.degree())
        .map(|k| {
            let c = poly.coeff(k);
            CoeffRecord {
                k,
                mid: c.to_decimal(17),
                radius: c.radius_decimal(),
                note: exact_note(spec, k),
            }
        })
        .collect();
    match format {
        Format::Json => {
            let line = serde_json::to_string(&records).map_err(|e| CliError::Internal(e.to_string()))?;
            writeln!(w, "{line}")?;
        }
        Format::Csv => {
            writeln!(w, "k,mid,radius,note")?;
            for r in &records {
                writeln!(w, "{},{},{},{}", r.k, r.mid, r.radius, r.note.as_deref().unwrap_or(""))?;
            }
        }
        Format::Svg => {
            return Err(CliError::Usage("coeffs does not support --format svg".into()));
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_radius_table(
    w: &mut dyn Write,
    rows: &[RadiusReport],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for row in rows {
                write_json_line(w, row)?;
            }
        }
        Format::Csv => {
            writeln!(
                w,
                "n,upper_pn,suffridge_at_minus1,suffridge_boundary_min,psi_n,lower_rs,pn_boundary_min,certified"
            )?;
            for r in rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    r.upper_pn.to_decimal(17),
                    r.suffridge_at_minus1.to_decimal(17),
                    r.suffridge_boundary_min.to_decimal(17),
                    r.psi_n.to_decimal(17),
                    r.lower_rs.to_decimal(17),
                    r.pn_boundary_min.to_decimal(17),
                    r.certified
                )?;
            }
        }
        Format::Svg => {
            return Err(CliError::Usage("radius-table does not support --format svg".into()));
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_curve(w: &mut dyn Write, curve: &BoundaryCurve, format: Format) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            writeln!(w, "t,re,im,abs")?;
            for s in &curve.samples {
                writeln!(
                    w,
                    "{},{},{},{}",
                    s.t.to_decimal(17),
                    s.re.to_decimal(17),
                    s.im.to_decimal(17),
                    s.abs.to_decimal(17)
                )?;
            }
        }
        Format::Json => {
            write_json_line(w, curve)?;
        }
        Format::Svg => unreachable!("handled by the svg module"),
    }
    w.flush()?;
    Ok(())
}
