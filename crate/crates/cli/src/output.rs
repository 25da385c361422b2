//! Machine-readable records. JSON output is one record per line; CSV output
//! is one header per command followed by one row per (index, value).

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use spectral_zeta::Rational;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Usage(format!(
                "unknown format `{other}` (expected json or csv)"
            ))),
        }
    }
}

/// Lossless rational: decimal numerator and positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalRepr {
    fn from(r: &Rational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl std::fmt::Display for RationalRepr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRepr {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexRepr {
    fn from(z: Complex64) -> Self {
        ComplexRepr { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub k: usize,
    pub method: String,
    pub coeffs: Vec<RationalRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub space: String,
    pub k: usize,
    pub s: ComplexRepr,
    /// `ok`, `at_pole` or `error`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<ComplexRepr>,
    /// Absent when no finite bound was certified.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms_used: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    /// Exact value when the point was routed through the rational special values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<RationalRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pole: Option<RationalRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<RationalRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidueRecord {
    pub space: String,
    pub k: usize,
    pub n: usize,
    pub location: RationalRepr,
    pub residue: RationalRepr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecialRecord {
    pub space: String,
    pub k: usize,
    pub n: usize,
    /// The evaluation point `-n`.
    pub s: i64,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<RationalRepr>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputRecord {
    Coeff(CoeffRecord),
    Eval(EvalRecord),
    Residue(ResidueRecord),
    Special(SpecialRecord),
    VerifyItem(VerifyRecord),
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// Shortest round-trip form, switching to exponent notation at the extremes.
fn float(v: f64) -> String {
    format!("{v:?}")
}

fn opt_float(v: Option<f64>) -> String {
    v.map(float).unwrap_or_default()
}

impl OutputRecord {
    fn csv_header(&self) -> &'static [&'static str] {
        match self {
            OutputRecord::Coeff(_) => &["k", "method", "j", "value", "methods_agree"],
            OutputRecord::Eval(_) => &[
                "index",
                "space",
                "k",
                "s_re",
                "s_im",
                "status",
                "value_re",
                "value_im",
                "error_bound",
                "terms_used",
                "flags",
                "exact",
                "pole",
                "residue",
                "message",
            ],
            OutputRecord::Residue(_) => &["space", "k", "n", "location", "residue"],
            OutputRecord::Special(_) => &["space", "k", "n", "s", "status", "value"],
            OutputRecord::VerifyItem(_) => &["check", "k", "space", "passed", "detail"],
        }
    }

    fn csv_rows(&self, index: usize) -> Vec<Vec<String>> {
        match self {
            OutputRecord::Coeff(r) => r
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, b)| {
                    vec![
                        r.k.to_string(),
                        r.method.clone(),
                        j.to_string(),
                        b.to_string(),
                        opt(&r.methods_agree),
                    ]
                })
                .collect(),
            OutputRecord::Eval(r) => vec![vec![
                index.to_string(),
                r.space.clone(),
                r.k.to_string(),
                float(r.s.re),
                float(r.s.im),
                r.status.clone(),
                opt_float(r.value.map(|v| v.re)),
                opt_float(r.value.map(|v| v.im)),
                opt_float(r.error_bound),
                opt(&r.terms_used),
                r.flags.join(";"),
                opt(&r.exact),
                opt(&r.pole),
                opt(&r.residue),
                opt(&r.message),
            ]],
            OutputRecord::Residue(r) => vec![vec![
                r.space.clone(),
                r.k.to_string(),
                r.n.to_string(),
                r.location.to_string(),
                r.residue.to_string(),
            ]],
            OutputRecord::Special(r) => vec![vec![
                r.space.clone(),
                r.k.to_string(),
                r.n.to_string(),
                r.s.to_string(),
                r.status.clone(),
                opt(&r.value),
            ]],
            OutputRecord::VerifyItem(r) => vec![vec![
                r.check.clone(),
                opt(&r.k),
                opt(&r.space),
                r.passed.to_string(),
                opt(&r.detail),
            ]],
        }
    }
}

/// Writes a homogeneous batch of records.
pub fn write_records(
    out: &mut dyn Write,
    format: Format,
    records: &[OutputRecord],
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for record in records {
                let line =
                    serde_json::to_string(record).map_err(|e| CliError::Internal(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            let Some(first) = records.first() else {
                return Ok(());
            };
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(first.csv_header()).map_err(csv_err)?;
            for (i, record) in records.iter().enumerate() {
                for row in record.csv_rows(i) {
                    writer.write_record(&row).map_err(csv_err)?;
                }
            }
            writer.flush()?;
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Internal(e.to_string())
}
