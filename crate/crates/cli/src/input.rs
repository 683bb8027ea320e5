use std::path::Path;

use cubesize::{LatticePolytope, LatticeVector};
use num_bigint::BigInt;

use crate::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

fn usize_token(tok: &str, line: usize, what: &str) -> Result<usize, CliError> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} must be a nonnegative integer, got {tok:?}"),
        )
    })
}

/// Header line `d n`, then `n` rows of `d` integers. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"d n\""))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be \"d n\""));
    }
    let d = usize_token(toks[0], hline, "dimension")?;
    let n = usize_token(toks[1], hline, "point count")?;
    if d == 0 {
        return Err(parse_err(hline, "dimension must be at least 1"));
    }
    if n == 0 {
        return Err(parse_err(hline, "need at least one point"));
    }

    let mut points = Vec::with_capacity(n);
    let mut last = hline;
    for (lno, row) in lines {
        if points.len() == n {
            return Err(parse_err(lno, format!("expected {n} rows, found more")));
        }
        let coords = row
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| parse_err(lno, format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != d {
            return Err(parse_err(
                lno,
                format!("expected {d} coordinates, found {}", coords.len()),
            ));
        }
        points.push(LatticeVector::new(coords).expect("d is at least 1"));
        last = lno;
    }
    if points.len() < n {
        return Err(parse_err(
            last + 1,
            format!("expected {n} rows, found {}", points.len()),
        ));
    }
    Ok(LatticePolytope::new(points).expect("nonempty with equal dimensions"))
}

pub fn read_polytope(path: &Path) -> Result<LatticePolytope, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_polytope(&text)
}
