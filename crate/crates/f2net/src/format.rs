//! Plain-text formats for matrices and point sets.
//!
//! A matrix is written as its dimension on one line followed by one line per
//! row, leftmost character = column 1:
//!
//! ```text
//! 3
//! 111
//! 010
//! 001
//! ```
//!
//! Several matrices may follow each other in one stream; blank lines between
//! them are ignored.

use std::fmt::Write as _;

use f2net_core::{F2Matrix, NetPoints};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("unknown built-in matrix `{0}` (expected @I:m, @J:m or @P:m)")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Core(#[from] f2net_core::Error),
}

fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Renders one matrix, newline-terminated.
pub fn write_matrix(a: &F2Matrix) -> String {
    let m = a.dim();
    let mut out = String::with_capacity((m + 1) * (m + 1) + 4);
    writeln!(out, "{m}").unwrap();
    for i in 0..m {
        out.extend((0..m).map(|j| if a.get(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Renders matrices separated by blank lines.
pub fn write_matrices<'a>(ms: impl IntoIterator<Item = &'a F2Matrix>) -> String {
    ms.into_iter()
        .map(write_matrix)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses a stream of zero or more matrices.
pub fn parse_matrices(text: &str) -> Result<Vec<F2Matrix>, FormatError> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .peekable();
    let mut out = Vec::new();
    loop {
        while lines.peek().is_some_and(|(_, l)| l.is_empty()) {
            lines.next();
        }
        let Some((no, header)) = lines.next() else {
            return Ok(out);
        };
        if header.ends_with('\r') {
            return Err(parse_error(no, "CR line endings are not accepted"));
        }
        if header.is_empty() || !header.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(
                no,
                format!("expected a dimension, found `{header}`"),
            ));
        }
        let m: usize = header
            .parse()
            .map_err(|_| parse_error(no, format!("dimension `{header}` out of range")))?;
        if !(1..=f2net_core::matrix::MAX_DIM).contains(&m) {
            return Err(parse_error(no, format!("dimension {m} outside 1..=64")));
        }
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            let (no, row) = lines.next().ok_or_else(|| {
                FormatError::Truncated(format!("row {} of a {m}x{m} matrix", i + 1))
            })?;
            if row.len() != m {
                return Err(parse_error(
                    no,
                    format!("expected {m} characters, found {}", row.len()),
                ));
            }
            let mut word = 0u64;
            for (j, b) in row.bytes().enumerate() {
                match b {
                    b'0' => {}
                    b'1' => word |= 1 << j,
                    _ => {
                        return Err(parse_error(
                            no,
                            format!("invalid character at column {}", j + 1),
                        ))
                    }
                }
            }
            rows.push(word);
        }
        out.push(F2Matrix::from_rows(&rows)?);
    }
}

/// Parses exactly one matrix.
pub fn parse_matrix(text: &str) -> Result<F2Matrix, FormatError> {
    let mut ms = parse_matrices(text)?;
    match ms.len() {
        1 => Ok(ms.pop().unwrap()),
        0 => Err(FormatError::Truncated("no matrix found".into())),
        n => Err(parse_error(0, format!("expected one matrix, found {n}"))),
    }
}

/// Resolves `@I:m`, `@J:m` and `@P:m`. Returns `Ok(None)` for anything not
/// starting with `@`.
pub fn builtin(arg: &str) -> Result<Option<F2Matrix>, FormatError> {
    let Some(rest) = arg.strip_prefix('@') else {
        return Ok(None);
    };
    let unknown = || FormatError::UnknownBuiltin(arg.to_string());
    let (name, m) = rest.split_once(':').ok_or_else(unknown)?;
    let m: usize = m.parse().map_err(|_| unknown())?;
    let a = match name {
        "I" => F2Matrix::identity(m)?,
        "J" => F2Matrix::anti_diagonal(m)?,
        "P" => F2Matrix::pascal(m)?,
        _ => return Err(unknown()),
    };
    Ok(Some(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointFormat {
    /// `k/2^m` with the denominator written out, e.g. `3/4`.
    Frac,
    /// Exact terminating decimal, e.g. `0.75`.
    Dec,
    /// `m` binary digits, most significant first, e.g. `11`.
    Bin,
}

fn write_coord(out: &mut String, k: u64, m: usize, format: PointFormat) {
    match format {
        PointFormat::Frac => write!(out, "{k}/{}", 1u64 << m).unwrap(),
        PointFormat::Bin => out.extend(
            (0..m)
                .rev()
                .map(|b| if (k >> b) & 1 == 1 { '1' } else { '0' }),
        ),
        PointFormat::Dec => {
            if k == 0 {
                out.push('0');
                return;
            }
            // k / 2^m = k 5^m / 10^m
            let digits = format!("{:0>width$}", k as u128 * 5u128.pow(m as u32), width = m);
            let (int, frac) = digits.split_at(digits.len() - m);
            out.push_str(if int.is_empty() { "0" } else { int });
            let frac = frac.trim_end_matches('0');
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        }
    }
}

/// One point per line, coordinates separated by single spaces.
pub fn write_points(pts: &NetPoints, format: PointFormat) -> String {
    let mut out = String::new();
    for p in pts.iter() {
        for (j, &k) in p.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write_coord(&mut out, k, pts.m(), format);
        }
        out.push('\n');
    }
    out
}

/// A parsed coordinate `num / den` with `den` a power of 2 or of 10.
struct Exact {
    num: u128,
    den: u128,
}

impl Exact {
    fn at_precision(&self, m: usize) -> Option<u64> {
        let scaled = self.num.checked_mul(1u128 << m)?;
        (scaled % self.den == 0)
            .then(|| scaled / self.den)
            .filter(|&k| k >> m == 0)
            .map(|k| k as u64)
    }
}

fn parse_coord(token: &str, format: PointFormat) -> Option<Exact> {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    match format {
        PointFormat::Frac => {
            let (n, d) = token.split_once('/')?;
            if !digits(n) || !digits(d) {
                return None;
            }
            let den: u128 = d.parse().ok()?;
            den.is_power_of_two().then_some(())?;
            Some(Exact {
                num: n.parse().ok()?,
                den,
            })
        }
        PointFormat::Dec => {
            let (int, frac) = token.split_once('.').unwrap_or((token, ""));
            if !digits(int) || !(frac.is_empty() || digits(frac)) || frac.len() > 30 {
                return None;
            }
            let den = 10u128.pow(frac.len() as u32);
            let int: u128 = int.parse().ok()?;
            let frac: u128 = if frac.is_empty() {
                0
            } else {
                frac.parse().ok()?
            };
            Some(Exact {
                num: int.checked_mul(den)?.checked_add(frac)?,
                den,
            })
        }
        PointFormat::Bin => {
            if !token.bytes().all(|b| b == b'0' || b == b'1') || token.len() > 64 {
                return None;
            }
            Some(Exact {
                num: u128::from_str_radix(token, 2).ok().unwrap_or(0),
                den: 1u128 << token.len(),
            })
        }
    }
}

/// Parses a point set written by [`write_points`]. The precision `m` is
/// inferred from the number of points, which must be a power of two.
pub fn parse_points(text: &str, format: PointFormat) -> Result<NetPoints, FormatError> {
    let mut rows: Vec<(usize, Vec<Exact>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let coords = line
            .split(' ')
            .map(|tok| {
                parse_coord(tok, format)
                    .ok_or_else(|| parse_error(i + 1, format!("invalid coordinate `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some((_, first)) = rows.first() {
            if first.len() != coords.len() {
                return Err(parse_error(
                    i + 1,
                    format!(
                        "expected {} coordinates, found {}",
                        first.len(),
                        coords.len()
                    ),
                ));
            }
        }
        rows.push((i + 1, coords));
    }
    let count = rows.len();
    if !count.is_power_of_two() {
        return Err(FormatError::Truncated(format!(
            "{count} points; a net has a power-of-two number of points"
        )));
    }
    let m = count.trailing_zeros() as usize;
    let s = rows[0].1.len();
    let mut numerators = Vec::with_capacity(count * s);
    for (line, coords) in &rows {
        for c in coords {
            let k = c.at_precision(m).ok_or_else(|| {
                parse_error(
                    *line,
                    format!("coordinate is not a multiple of 1/2^{m} in [0,1)"),
                )
            })?;
            numerators.push(k);
        }
    }
    Ok(NetPoints::from_numerators(m, s, numerators)?)
}
