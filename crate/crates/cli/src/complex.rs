//! Command-line complex numbers: `a+bi`, `a-bi`, `bi`, `i`, or a plain real,
//! with optional whitespace anywhere.

use num_complex::Complex64;

use crate::CliError;

fn parse_part(text: &str, whole: &str) -> Result<f64, CliError> {
    let value = match text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("cannot parse complex number `{whole}`")))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::Usage(format!(
            "complex number `{whole}` is not finite"
        )))
    }
}

/// Parses `re±imi` notation into a [`Complex64`].
pub fn parse_complex(input: &str) -> Result<Complex64, CliError> {
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(CliError::Usage("empty complex number".into()));
    }
    let Some(body) = text.strip_suffix('i') else {
        if text
            .chars()
            .any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E')
        {
            return Err(CliError::Usage(format!(
                "cannot parse complex number `{input}`"
            )));
        }
        return Ok(Complex64::new(parse_part(&text, input)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => {
            let (re, im) = body.split_at(i);
            if re.is_empty() {
                return Err(CliError::Usage(format!(
                    "cannot parse complex number `{input}`"
                )));
            }
            Ok(Complex64::new(
                parse_part(re, input)?,
                parse_part(im, input)?,
            ))
        }
        None => Ok(Complex64::new(0.0, parse_part(body, input)?)),
    }
}
