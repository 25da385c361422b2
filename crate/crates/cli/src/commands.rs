use std::io::{BufRead, Write};

use num_complex::Complex64;
use rayon::prelude::*;
use spectral_zeta::exact::{coefficients, methods_agree};
use spectral_zeta::numeric::zeta_continuation;
use spectral_zeta::special_values::{pole_catalog, special_value};
use spectral_zeta::{Dim, EvalOptions, Method, Space, SpaceSpec, ZetaError};

use crate::args::{Cli, Command, NumericFlags, Target};
use crate::output::{
    write_records, CoeffRecord, ComplexRepr, EvalRecord, Format, OutputRecord, RationalRepr,
    ResidueRecord, SpecialRecord,
};
use crate::{exit, parse_complex, verify, CliError, Config};

const DEFAULT_N_MAX: usize = 10;
const DEFAULT_K_MAX: usize = 12;
const UNSUPPORTED_STATUS: &str = "unsupported: no closed form in source";

fn required<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required flag --{flag}")))
}

fn dim(k: usize) -> Result<Dim, CliError> {
    Dim::new(k).map_err(|e| CliError::Usage(e.to_string()))
}

fn target_spec(target: &Target, config: &Config) -> Result<SpaceSpec, CliError> {
    let space = match target.space.as_deref().or(config.raw("space")) {
        Some(text) => text
            .parse::<Space>()
            .map_err(|e| CliError::Usage(e.to_string()))?,
        None => Space::Sphere,
    };
    let k = required(config.pick(target.k, "k")?, "k")?;
    SpaceSpec::new(space, k).map_err(|e| CliError::Usage(e.to_string()))
}

fn eval_options(flags: &NumericFlags, config: &Config) -> Result<EvalOptions, CliError> {
    let mut opts = EvalOptions::default();
    if let Some(tol) = config.pick(flags.tol, "tol")? {
        opts.tol = tol;
    }
    if let Some(max_l) = config.pick(flags.max_l, "max-l")? {
        opts.max_l = max_l;
    }
    if let Some(pole_eps) = config.pick(flags.pole_eps, "pole-eps")? {
        opts.pole_eps = pole_eps;
    }
    if let Some(em_order) = config.pick(flags.em_order, "em-order")? {
        opts.em_order = em_order;
    }
    opts.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(opts)
}

pub(crate) fn dispatch(
    cli: Cli,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let format = match cli.format {
        Some(text) => text.parse()?,
        None => config.get::<Format>("format")?.unwrap_or_default(),
    };
    match cli.command {
        Command::Coeffs { k, method } => {
            let k = required(config.pick(k, "k")?, "k")?;
            let method = method.or_else(|| config.raw("method").map(str::to_string));
            coeffs(
                dim(k)?,
                method.as_deref().unwrap_or("all"),
                format,
                stdout,
                stderr,
            )
        }
        Command::Eval { target, s, numeric } => {
            let spec = target_spec(&target, &config)?;
            let s = s.or_else(|| config.raw("s").map(str::to_string));
            let s = parse_complex(&required(s, "s")?)?;
            let opts = eval_options(&numeric, &config)?;
            let (record, code) = eval_point(spec, s, &opts);
            write_records(stdout, format, &[OutputRecord::Eval(record)])?;
            Ok(code)
        }
        Command::Residues { target, n_max } => {
            let spec = target_spec(&target, &config)?;
            let n_max = config.pick(n_max, "n-max")?.unwrap_or(DEFAULT_N_MAX);
            residues(spec, n_max, format, stdout)
        }
        Command::Special { target, n_max } => {
            let spec = target_spec(&target, &config)?;
            let n_max = config.pick(n_max, "n-max")?.unwrap_or(DEFAULT_N_MAX);
            special(spec, n_max, format, stdout)
        }
        Command::Verify { k_max, numeric } => {
            let k_max = config.pick(k_max, "k-max")?.unwrap_or(DEFAULT_K_MAX);
            if k_max < 2 {
                return Err(CliError::Usage(format!(
                    "--k-max must be at least 2, got {k_max}"
                )));
            }
            let opts = eval_options(&numeric, &config)?;
            let records = verify::run(k_max, &opts);
            let failed: Vec<String> = records
                .iter()
                .filter(|r| !r.passed)
                .map(verify::describe)
                .collect();
            let records: Vec<OutputRecord> =
                records.into_iter().map(OutputRecord::VerifyItem).collect();
            write_records(stdout, format, &records)?;
            if failed.is_empty() {
                Ok(exit::SUCCESS)
            } else {
                for name in &failed {
                    writeln!(stderr, "verify: failed {name}")?;
                }
                Ok(exit::FAILURE)
            }
        }
        Command::Table {
            target,
            input,
            numeric,
        } => {
            let spec = target_spec(&target, &config)?;
            let opts = eval_options(&numeric, &config)?;
            let input = input.or_else(|| config.raw("input").map(Into::into));
            let text = match input {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
                None => {
                    let mut buf = String::new();
                    stdin.read_to_string(&mut buf)?;
                    buf
                }
            };
            table(spec, &text, &opts, format, stdout)
        }
    }
}

fn coeffs(
    dim: Dim,
    method: &str,
    format: Format,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let (table, agree) = if method == "all" {
        (
            coefficients(dim, Method::Expansion),
            Some(methods_agree(dim)),
        )
    } else {
        let m: Method = method
            .parse()
            .map_err(|e: ZetaError| CliError::Usage(e.to_string()))?;
        (coefficients(dim, m), None)
    };
    let record = CoeffRecord {
        k: dim.get(),
        method: method.to_string(),
        coeffs: table.coeffs().iter().map(RationalRepr::from).collect(),
        methods_agree: agree,
    };
    write_records(stdout, format, &[OutputRecord::Coeff(record)])?;
    if agree == Some(false) {
        writeln!(stderr, "coefficient methods disagree for k = {}", dim.get())?;
        return Ok(exit::COEFF_MISMATCH);
    }
    Ok(exit::SUCCESS)
}

/// Evaluates one point; the exit code is 3 at a pole and 1 on any other failure.
pub(crate) fn eval_point(spec: SpaceSpec, s: Complex64, opts: &EvalOptions) -> (EvalRecord, i32) {
    let mut record = EvalRecord {
        space: spec.space.as_str().to_string(),
        k: spec.k(),
        s: s.into(),
        status: "ok".into(),
        value: None,
        error_bound: None,
        terms_used: None,
        flags: Vec::new(),
        exact: None,
        pole: None,
        residue: None,
        message: None,
    };
    match zeta_continuation(spec, s, opts) {
        Ok(r) if r.value.re.is_finite() && r.value.im.is_finite() => {
            if r.flags.exact_routed && s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
                record.exact = special_value(spec, (-s.re) as usize)
                    .ok()
                    .as_ref()
                    .map(RationalRepr::from);
            }
            record.value = Some(ComplexRepr::from(r.value));
            record.error_bound = r.error_bound.is_finite().then_some(r.error_bound);
            record.terms_used = Some(r.terms_used);
            record.flags = r.flags.names().into_iter().map(str::to_string).collect();
            (record, exit::SUCCESS)
        }
        Ok(_) => {
            record.status = "error".into();
            record.message = Some("evaluation produced a non-finite value".into());
            (record, exit::FAILURE)
        }
        Err(ZetaError::AtPole { location, residue }) => {
            record.status = "at_pole".into();
            record.pole = Some(RationalRepr::from(&*location));
            record.residue = Some(RationalRepr::from(&*residue));
            (record, exit::AT_POLE)
        }
        Err(e) => {
            record.status = "error".into();
            record.message = Some(e.to_string());
            (record, exit::FAILURE)
        }
    }
}

fn residues(
    spec: SpaceSpec,
    n_max: usize,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let records: Vec<OutputRecord> = pole_catalog(spec, n_max)
        .into_iter()
        .map(|entry| {
            OutputRecord::Residue(ResidueRecord {
                space: spec.space.as_str().to_string(),
                k: spec.k(),
                n: entry.point.n,
                location: RationalRepr::from(&entry.point.location),
                residue: RationalRepr::from(&entry.residue),
            })
        })
        .collect();
    write_records(stdout, format, &records)?;
    Ok(exit::SUCCESS)
}

fn special(
    spec: SpaceSpec,
    n_max: usize,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut records = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (status, value) = match special_value(spec, n) {
            Ok(v) => ("ok".to_string(), Some(RationalRepr::from(&v))),
            Err(ZetaError::Unsupported(_)) => (UNSUPPORTED_STATUS.to_string(), None),
            Err(e) => return Err(CliError::Internal(e.to_string())),
        };
        records.push(OutputRecord::Special(SpecialRecord {
            space: spec.space.as_str().to_string(),
            k: spec.k(),
            n,
            s: -(n as i64),
            status,
            value,
        }));
    }
    write_records(stdout, format, &records)?;
    Ok(exit::SUCCESS)
}

/// Parses one point per line; blank lines and `#` comments are skipped.
pub(crate) fn parse_points(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, line)| {
            parse_complex(line).map_err(|e| CliError::Usage(format!("input line {}: {e}", i + 1)))
        })
        .collect()
}

fn table(
    spec: SpaceSpec,
    text: &str,
    opts: &EvalOptions,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let points = parse_points(text)?;
    let results: Vec<(EvalRecord, i32)> = points
        .par_iter()
        .map(|&s| eval_point(spec, s, opts))
        .collect();
    let code = if results.iter().any(|(_, c)| *c == exit::FAILURE) {
        exit::FAILURE
    } else if results.iter().any(|(_, c)| *c == exit::AT_POLE) {
        exit::AT_POLE
    } else {
        exit::SUCCESS
    };
    let records: Vec<OutputRecord> = results
        .into_iter()
        .map(|(r, _)| OutputRecord::Eval(r))
        .collect();
    write_records(stdout, format, &records)?;
    Ok(code)
}
