//! Divide file parser.
//!
//! Line-oriented UTF-8 format:
//!
//! ```text
//! # comment
//! boundary N
//! open (x,y) (x,y) ...
//! closed (x,y) (x,y) ...
//! ```
//!
//! Whitespace inside point parentheses is allowed; coordinates are integers.

use super::strand::{Strand, StrandKind, StrandSet};
use crate::error::{Error, Result};
use crate::exact::IPoint;

pub fn parse_divide_file(text: &str) -> Result<StrandSet> {
    let mut boundary: Option<i64> = None;
    let mut strands: Vec<Strand> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (word, rest) = split_word(line);
        match word {
            "boundary" => {
                if boundary.is_some() {
                    return Err(syntax(line_no, "duplicate boundary line"));
                }
                let n: i64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line_no, "boundary expects one integer"))?;
                if n <= 0 {
                    return Err(syntax(line_no, "boundary half-width must be positive"));
                }
                boundary = Some(n);
            }
            "open" | "closed" => {
                if boundary.is_none() {
                    return Err(syntax(line_no, "strand appears before the boundary line"));
                }
                let kind = if word == "open" {
                    StrandKind::Open
                } else {
                    StrandKind::Closed
                };
                let points = parse_points(line_no, rest)?;
                if points.is_empty() {
                    return Err(syntax(line_no, "strand has no points"));
                }
                strands.push(Strand {
                    kind,
                    points,
                    line: line_no,
                });
            }
            other => {
                return Err(syntax(line_no, &format!("unknown directive {other:?}")));
            }
        }
    }

    let boundary = boundary.ok_or_else(|| syntax(0, "missing boundary line"))?;
    StrandSet::new(boundary, strands)
}

fn split_word(line: &str) -> (&str, &str) {
    match line.find(char::is_whitespace) {
        Some(pos) => (&line[..pos], &line[pos..]),
        None => (line, ""),
    }
}

fn parse_points(line_no: usize, mut rest: &str) -> Result<Vec<IPoint>> {
    let mut points = Vec::new();
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(points);
        }
        if !rest.starts_with('(') {
            return Err(syntax(line_no, "expected '(' starting a point"));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| syntax(line_no, "unterminated point"))?;
        let body = &rest[1..close];
        let mut nums = body.split(',');
        let x = parse_coord(line_no, nums.next())?;
        let y = parse_coord(line_no, nums.next())?;
        if nums.next().is_some() {
            return Err(syntax(line_no, "point has more than two coordinates"));
        }
        points.push(IPoint::new(x, y));
        rest = &rest[close + 1..];
    }
}

fn parse_coord(line_no: usize, part: Option<&str>) -> Result<i64> {
    let part = part.ok_or_else(|| syntax(line_no, "point needs two coordinates"))?;
    part.trim()
        .parse()
        .map_err(|_| syntax(line_no, &format!("bad integer coordinate {:?}", part.trim())))
}

fn syntax(line: usize, msg: &str) -> Error {
    Error::Syntax {
        line,
        msg: msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_chord() {
        let s = parse_divide_file("boundary 4\nopen (-4,0) (0,0) (4,0)\n").unwrap();
        assert_eq!(s.boundary_half_width, 4);
        assert_eq!(s.strands.len(), 1);
        assert_eq!(s.strands[0].points.len(), 3);
    }

    #[test]
    fn parses_x_shape() {
        let s =
            parse_divide_file("boundary 2\nopen (-2,-2) (2,2)\nopen (-2,2) (2,-2)\n").unwrap();
        assert_eq!(s.strands.len(), 2);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let s = parse_divide_file("# header\nboundary 3\n\nopen (-3,1) (0,2) (3,1) # tail\n")
            .unwrap();
        assert_eq!(s.strands.len(), 1);
    }

    #[test]
    fn malformed_point_reports_line() {
        let err = parse_divide_file("boundary 4\nopen (1,)\n").unwrap_err();
        match err {
            Error::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn endpoint_must_be_on_boundary() {
        let err = parse_divide_file("boundary 4\nopen (-3,0) (4,0)\n").unwrap_err();
        assert!(matches!(err, Error::EndpointOffBoundary { .. }));
    }

    #[test]
    fn closed_strand_must_avoid_boundary() {
        let err = parse_divide_file("boundary 2\nclosed (0,2) (1,0) (-1,0)\n").unwrap_err();
        assert!(matches!(err, Error::ClosedStrandTouchesBoundary { .. }));
    }

    #[test]
    fn zero_length_segment_rejected() {
        let err = parse_divide_file("boundary 4\nopen (-4,0) (0,1) (0,1) (4,0)\n").unwrap_err();
        assert!(matches!(err, Error::ZeroLengthSegment { .. }));
    }
}
