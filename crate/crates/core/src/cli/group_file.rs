//! Plain-text group files.
//!
//! ```text
//! % comment lines start with a percent sign
//! degree 3
//! (1,2,3)
//! (1,2)
//! ```
//!
//! The first meaningful line is the header `degree <N>`; every later nonempty
//! line is one generator in cycle notation.

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{parse_cycles, Perm};

pub fn parse_group_file(text: &str) -> Result<Group> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('%') {
            continue;
        }
        let Some(n) = degree else {
            degree = Some(parse_header(line, line_no)?);
            continue;
        };
        let perm = parse_cycles(line, n).map_err(|e| match e {
            Error::MalformedCycle { column, reason } => Error::ParseError { line: line_no, column, reason },
            Error::RepeatedPoint { point } => {
                Error::ParseError { line: line_no, column: 1, reason: format!("point {point} appears more than once") }
            }
            other => other,
        })?;
        gens.push(perm);
    }
    let degree = degree.ok_or_else(|| Error::ParseError { line: 1, column: 1, reason: "missing `degree <N>` header".into() })?;
    Group::new(degree, gens)
}

fn parse_header(line: &str, line_no: usize) -> Result<usize> {
    let err = |column: usize, reason: &str| Error::ParseError { line: line_no, column, reason: reason.to_string() };
    let rest = line.strip_prefix("degree ").ok_or_else(|| err(1, "expected `degree <N>`"))?;
    let n: usize = rest.parse().map_err(|_| err(8, "degree must be a positive integer"))?;
    if n == 0 || n > crate::perm::MAX_DEGREE {
        return Err(err(8, "degree out of range"));
    }
    Ok(n)
}

pub fn read_group_file(path: &Path) -> Result<Group> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_group_file(&text)
}

/// Header plus one generator per line; the trivial group is written as `()`.
pub fn format_group_file(group: &Group) -> String {
    let mut out = format!("degree {}\n", group.degree());
    let gens = group.generators();
    if gens.is_empty() {
        out.push_str("()\n");
    }
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn write_group_file(path: &Path, group: &Group) -> Result<()> {
    super::cache::write_atomic(path, format_group_file(group).as_bytes())
}

/// Parses generators given directly, one cycle string each.
pub fn group_from_cycles(degree: usize, cycles: &[&str]) -> Result<Group> {
    let gens = cycles.iter().map(|c| parse_cycles(c, degree)).collect::<Result<Vec<Perm>>>()?;
    Group::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_s3() {
        let g = parse_group_file("degree 3\n(1,2,3)\n(1,2)\n").unwrap();
        assert_eq!(g.order(), 6);
        let g = parse_group_file("% trivial\ndegree 1\n()\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_group_file("degree 3\n(1,4)\n"),
            Err(Error::PointOutOfRange { point: 4, degree: 3 })
        ));
        assert!(matches!(parse_group_file("degree 3\n"), Err(Error::EmptyGeneratorList)));
        assert!(matches!(parse_group_file("degree 3\n(1,2\n"), Err(Error::ParseError { line: 2, .. })));
        assert!(matches!(parse_group_file("deg 3\n"), Err(Error::ParseError { line: 1, column: 1, .. })));
        assert!(matches!(parse_group_file("% x\n\n"), Err(Error::ParseError { .. })));
        assert!(matches!(parse_group_file("degree 4\n(1,2,1)\n"), Err(Error::ParseError { line: 2, .. })));
    }

    #[test]
    fn round_trip() {
        let g = parse_group_file("degree 5\n(1,2,3,4,5)\n(1,2)\n").unwrap();
        let back = parse_group_file(&format_group_file(&g)).unwrap();
        assert_eq!(back.order(), 120);
        assert_eq!(back.generators(), g.generators());
        let t = parse_group_file(&format_group_file(&Group::trivial(2))).unwrap();
        assert_eq!((t.degree(), t.order()), (2, 1));
    }
}
