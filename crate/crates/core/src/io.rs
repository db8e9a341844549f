//! Plain-text instance and result files.
//!
//! Instance file: first line `n m`, then `n` lines `x y` for P and `m` lines
//! `x y` for Q, both in Pareto order. Result file: one `x y` line per point.
//! Decimal integers, single spaces, LF line endings.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::pareto::{validate_pareto_set, ParetoSet, Point};

fn parse_int(tok: &str, line: usize) -> Result<i64> {
    tok.parse::<i64>().map_err(|e| Error::Parse {
        line,
        msg: format!("bad integer `{tok}`: {e}"),
    })
}

fn parse_pair(text: &str, line: usize) -> Result<Point> {
    let mut it = text.split_whitespace();
    let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got `{text}`"),
        });
    };
    Ok(Point::new(parse_int(x, line)?, parse_int(y, line)?))
}

fn into_set(points: Vec<Point>, block: &str) -> Result<ParetoSet> {
    if !validate_pareto_set(&points) {
        return Err(Error::Invariant(format!(
            "{block} block is not a Pareto set"
        )));
    }
    ParetoSet::new(points).map_err(|e| match e {
        Error::EmptyInput => Error::Invariant(format!("{block} block is empty")),
        other => other,
    })
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_instance(text: &str) -> Result<(ParetoSet, ParetoSet)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let sizes = parse_pair(header, hline)?;
    if sizes.x < 0 || sizes.y < 0 {
        return Err(Error::Parse {
            line: hline,
            msg: "negative block size".into(),
        });
    }
    let (n, m) = (sizes.x as usize, sizes.y as usize);
    let mut read_block = |count: usize| -> Result<Vec<Point>> {
        let mut pts = Vec::with_capacity(count.min(1 << 20));
        for _ in 0..count {
            let (ln, l) = lines.next().ok_or(Error::Parse {
                line: hline,
                msg: format!("header announces {n} + {m} points, file ends early"),
            })?;
            pts.push(parse_pair(l, ln)?);
        }
        Ok(pts)
    };
    let p = read_block(n)?;
    let q = read_block(m)?;
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing content after the Q block".into(),
        });
    }
    Ok((into_set(p, "P")?, into_set(q, "Q")?))
}

pub fn format_instance(p: &ParetoSet, q: &ParetoSet) -> String {
    let mut out = String::with_capacity(16 * (p.len() + q.len() + 1));
    let _ = writeln!(out, "{} {}", p.len(), q.len());
    out.push_str(&format_points(p.points()));
    out.push_str(&format_points(q.points()));
    out
}

pub fn format_points(points: &[Point]) -> String {
    let mut out = String::with_capacity(16 * points.len());
    for pt in points {
        let _ = writeln!(out, "{} {}", pt.x, pt.y);
    }
    out
}

pub fn parse_points(text: &str) -> Result<ParetoSet> {
    let pts = content_lines(text)
        .map(|(ln, l)| parse_pair(l, ln))
        .collect::<Result<Vec<_>>>()?;
    into_set(pts, "result")
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<(ParetoSet, ParetoSet)> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn write_instance(path: impl AsRef<Path>, p: &ParetoSet, q: &ParetoSet) -> Result<()> {
    fs::write(path, format_instance(p, q))?;
    Ok(())
}

pub fn write_result(path: impl AsRef<Path>, points: &[Point]) -> Result<()> {
    fs::write(path, format_points(points))?;
    Ok(())
}

pub fn read_result(path: impl AsRef<Path>) -> Result<ParetoSet> {
    parse_points(&fs::read_to_string(path)?)
}
