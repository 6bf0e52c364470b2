//! Strand sets and their validation.

use crate::error::{Error, Result};
use crate::exact::IPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrandKind {
    Open,
    Closed,
}

/// One immersed interval or circle, as an integer polyline. Closed strands
/// do not repeat the first point; the closing segment is implicit.
#[derive(Debug, Clone)]
pub struct Strand {
    pub kind: StrandKind,
    pub points: Vec<IPoint>,
    /// Input line the strand came from, for error reporting.
    pub line: usize,
}

impl Strand {
    /// Number of segments, including the implicit closing one.
    pub fn segment_count(&self) -> usize {
        match self.kind {
            StrandKind::Open => self.points.len() - 1,
            StrandKind::Closed => self.points.len(),
        }
    }

    pub fn segment(&self, i: usize) -> (IPoint, IPoint) {
        let n = self.points.len();
        (self.points[i], self.points[(i + 1) % n])
    }
}

/// A validated divide input: the boundary half-width and the strands.
#[derive(Debug, Clone)]
pub struct StrandSet {
    /// The disk is the square [-n, n]^2.
    pub boundary_half_width: i64,
    pub strands: Vec<Strand>,
}

impl StrandSet {
    pub fn new(boundary_half_width: i64, strands: Vec<Strand>) -> Result<Self> {
        let s = StrandSet {
            boundary_half_width,
            strands,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn on_boundary(&self, p: IPoint) -> bool {
        let n = self.boundary_half_width;
        (p.x.abs() == n && p.y.abs() <= n) || (p.y.abs() == n && p.x.abs() <= n)
    }

    fn inside_closed_square(&self, p: IPoint) -> bool {
        let n = self.boundary_half_width;
        p.x.abs() <= n && p.y.abs() <= n
    }

    fn validate(&self) -> Result<()> {
        let n = self.boundary_half_width;
        for strand in &self.strands {
            let line = strand.line;
            let pts = &strand.points;
            for p in pts {
                if !self.inside_closed_square(*p) {
                    return Err(Error::PointOutsideSquare {
                        line,
                        point: p.to_string(),
                        n,
                    });
                }
            }
            match strand.kind {
                StrandKind::Open => {
                    if pts.len() < 2 {
                        return Err(Error::Syntax {
                            line,
                            msg: "open strand needs at least two points".into(),
                        });
                    }
                    for (i, p) in pts.iter().enumerate() {
                        let endpoint = i == 0 || i == pts.len() - 1;
                        if endpoint && !self.on_boundary(*p) {
                            return Err(Error::EndpointOffBoundary {
                                line,
                                point: p.to_string(),
                            });
                        }
                        if !endpoint && self.on_boundary(*p) {
                            return Err(Error::InteriorPointOnBoundary {
                                line,
                                point: p.to_string(),
                            });
                        }
                    }
                }
                StrandKind::Closed => {
                    if pts.len() < 3 {
                        return Err(Error::Syntax {
                            line,
                            msg: "closed strand needs at least three points".into(),
                        });
                    }
                    for p in pts {
                        if self.on_boundary(*p) {
                            return Err(Error::ClosedStrandTouchesBoundary {
                                line,
                                point: p.to_string(),
                            });
                        }
                    }
                    let mut sorted: Vec<IPoint> = pts.clone();
                    sorted.sort();
                    for w in sorted.windows(2) {
                        if w[0] == w[1] {
                            return Err(Error::RepeatedPoint {
                                line,
                                point: w[0].to_string(),
                            });
                        }
                    }
                }
            }
            for i in 0..strand.segment_count() {
                let (a, b) = strand.segment(i);
                if a == b {
                    return Err(Error::ZeroLengthSegment {
                        line,
                        point: a.to_string(),
                    });
                }
                // A segment with both endpoints on the same boundary side
                // would lie on the boundary.
                if self.on_boundary(a)
                    && self.on_boundary(b)
                    && ((a.x == b.x && a.x.abs() == n) || (a.y == b.y && a.y.abs() == n))
                {
                    return Err(Error::SegmentOnBoundary { line });
                }
            }
        }
        Ok(())
    }

    /// Uniformly scale all coordinates and the boundary by a positive factor.
    pub fn scaled(&self, factor: i64) -> StrandSet {
        assert!(factor > 0);
        StrandSet {
            boundary_half_width: self.boundary_half_width * factor,
            strands: self
                .strands
                .iter()
                .map(|s| Strand {
                    kind: s.kind,
                    points: s
                        .points
                        .iter()
                        .map(|p| IPoint::new(p.x * factor, p.y * factor))
                        .collect(),
                    line: s.line,
                })
                .collect(),
        }
    }
}
