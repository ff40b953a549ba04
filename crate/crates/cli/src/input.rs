//! Input parsing: the --phi data specification, the φ CSV file format, and
//! evaluation grids.
//!
//! φ specifications:
//!   builtin:mode:<k>        e^{i·2kπα/β}, k ≠ 0
//!   builtin:cosine:<k>      cos(2kπα/β), k ≥ 1
//!   builtin:constant:<c>    the constant c
//!   csv:<path>              sampled data from a CSV file
//!
//! φ CSV format: header `alpha,re` or `alpha,re,im`, then one row per node.
//! Nodes must be uniform and ascending from 0 to β with an odd count ≥ 9
//! (composite Simpson); the im column defaults to 0.

use std::path::Path;

use dorder::solvers::DataFunction;
use dorder::Complex64;

use crate::CliError;

pub fn parse_phi(spec: &str) -> Result<DataFunction, CliError> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        parse_builtin(rest)
    } else if let Some(path) = spec.strip_prefix("csv:") {
        parse_phi_csv(Path::new(path))
    } else {
        Err(CliError::Usage(format!(
            "unrecognized phi specification '{spec}' (expected builtin:... or csv:<path>)"
        )))
    }
}

fn parse_builtin(rest: &str) -> Result<DataFunction, CliError> {
    let usage = || {
        CliError::Usage(format!(
            "bad builtin phi 'builtin:{rest}' (expected mode:<k>, cosine:<k>, or constant:<c>)"
        ))
    };
    let (kind, argument) = rest.split_once(':').ok_or_else(usage)?;
    match kind {
        "mode" => {
            let k: i32 = argument.parse().map_err(|_| usage())?;
            DataFunction::mode(k).map_err(|e| CliError::Usage(e.to_string()))
        }
        "cosine" => {
            let k: u32 = argument.parse().map_err(|_| usage())?;
            DataFunction::cosine(k).map_err(|e| CliError::Usage(e.to_string()))
        }
        "constant" => {
            let c: f64 = argument.parse().map_err(|_| usage())?;
            Ok(DataFunction::constant(c))
        }
        _ => Err(usage()),
    }
}

fn parse_phi_csv(path: &Path) -> Result<DataFunction, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read phi CSV {}: {e}", path.display())))?;
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Usage(format!("phi CSV {} is empty", path.display())))?;
    let with_imag = match header {
        "alpha,re" => false,
        "alpha,re,im" => true,
        other => {
            return Err(CliError::Usage(format!(
                "phi CSV header must be 'alpha,re' or 'alpha,re,im', got '{other}'"
            )))
        }
    };
    let mut alphas = Vec::new();
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let expected = if with_imag { 3 } else { 2 };
        if fields.len() != expected {
            return Err(CliError::Usage(format!(
                "phi CSV row {} has {} fields, expected {expected}",
                i + 2,
                fields.len()
            )));
        }
        let parse = |s: &str| -> Result<f64, CliError> {
            s.parse()
                .map_err(|_| CliError::Usage(format!("phi CSV row {}: bad number '{s}'", i + 2)))
        };
        alphas.push(parse(fields[0])?);
        let re = parse(fields[1])?;
        let im = if with_imag { parse(fields[2])? } else { 0.0 };
        values.push(Complex64::new(re, im));
    }
    Ok(DataFunction::sampled(alphas, values))
}

/// `start:stop:count` with count ≥ 2, or a single abscissa `x`.
pub fn parse_eval_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let usage = || {
        CliError::Usage(format!(
            "bad eval grid '{spec}' (expected start:stop:count with positive start, count ≥ 2)"
        ))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let x: f64 = single.parse().map_err(|_| usage())?;
            if x > 0.0 {
                Ok(vec![x])
            } else {
                Err(usage())
            }
        }
        [start, stop, count] => {
            let start: f64 = start.parse().map_err(|_| usage())?;
            let stop: f64 = stop.parse().map_err(|_| usage())?;
            let count: usize = count.parse().map_err(|_| usage())?;
            if !(start > 0.0 && stop >= start && count >= 2) {
                return Err(usage());
            }
            let step = (stop - start) / (count - 1) as f64;
            Ok((0..count).map(|i| start + step * i as f64).collect())
        }
        _ => Err(usage()),
    }
}
