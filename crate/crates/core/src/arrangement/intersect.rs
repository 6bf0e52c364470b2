//! Exact crossing computation.
//!
//! All segment pairs (across strands and within one strand) are intersected
//! with rational arithmetic. Anything that is not a transverse crossing of
//! two segment interiors is rejected: collinear overlaps are tangencies,
//! intersections at polyline vertices are corner crossings, and coincident
//! crossing positions are triple points.

use super::strand::StrandSet;
use crate::error::{Error, Result};
use crate::exact::{intersect_segments, Rat, RatPoint, SegIntersection};
use std::collections::BTreeMap;

/// One branch of a crossing: which strand and segment it lies on, and the
/// exact parameter along that segment.
#[derive(Debug, Clone)]
pub struct Branch {
    pub strand: usize,
    pub segment: usize,
    pub t: Rat,
}

#[derive(Debug, Clone)]
pub struct Crossing {
    pub position: RatPoint,
    pub branches: [Branch; 2],
}

#[derive(Debug, Clone, Default)]
pub struct CrossingSet {
    pub crossings: Vec<Crossing>,
}

pub fn intersect_strands(set: &StrandSet) -> Result<CrossingSet> {
    let mut by_pos: BTreeMap<RatPoint, Crossing> = BTreeMap::new();

    let strands = &set.strands;
    for si in 0..strands.len() {
        for sj in si..strands.len() {
            let a = &strands[si];
            let b = &strands[sj];
            for i in 0..a.segment_count() {
                let j_start = if si == sj { i } else { 0 };
                for j in j_start..b.segment_count() {
                    if si == sj {
                        if i == j {
                            continue;
                        }
                        // Adjacent segments of one strand share a vertex.
                        let n = a.segment_count();
                        let adjacent = j == i + 1 || (i == 0 && j == n - 1 && a.points.len() > 2);
                        let (a0, a1) = a.segment(i);
                        let (b0, b1) = b.segment(j);
                        match intersect_segments(a0, a1, b0, b1) {
                            SegIntersection::None => continue,
                            SegIntersection::Overlap => {
                                return Err(Error::Tangency {
                                    s0: si,
                                    s1: sj,
                                    at: a0.to_string(),
                                });
                            }
                            SegIntersection::AtEndpoint { at } => {
                                if adjacent && at == shared_vertex(a, i, j) {
                                    continue; // the legitimate shared corner
                                }
                                return Err(Error::CornerCrossing { at: at.to_string() });
                            }
                            SegIntersection::Proper { at, t, u } => {
                                record(&mut by_pos, at, si, i, t, sj, j, u)?;
                            }
                        }
                    } else {
                        let (a0, a1) = a.segment(i);
                        let (b0, b1) = b.segment(j);
                        match intersect_segments(a0, a1, b0, b1) {
                            SegIntersection::None => continue,
                            SegIntersection::Overlap => {
                                return Err(Error::Tangency {
                                    s0: si,
                                    s1: sj,
                                    at: a0.to_string(),
                                });
                            }
                            SegIntersection::AtEndpoint { at } => {
                                return Err(Error::CornerCrossing { at: at.to_string() });
                            }
                            SegIntersection::Proper { at, t, u } => {
                                record(&mut by_pos, at, si, i, t, sj, j, u)?;
                            }
                        }
                    }
                }
            }
        }
    }

    // Crossings at strand endpoints or on the square boundary cannot occur:
    // endpoints only touch other segments at polyline vertices (rejected
    // above) and segment interiors stay off the boundary by validation.
    Ok(CrossingSet {
        crossings: by_pos.into_values().collect(),
    })
}

fn shared_vertex(strand: &super::strand::Strand, i: usize, j: usize) -> RatPoint {
    let n = strand.segment_count();
    let v = if j == i + 1 {
        strand.segment(i).1
    } else {
        debug_assert!(i == 0 && j == n - 1);
        strand.segment(j).1
    };
    v.to_rat()
}

#[allow(clippy::too_many_arguments)]
fn record(
    by_pos: &mut BTreeMap<RatPoint, Crossing>,
    at: RatPoint,
    si: usize,
    i: usize,
    t: Rat,
    sj: usize,
    j: usize,
    u: Rat,
) -> Result<()> {
    if by_pos.contains_key(&at) {
        return Err(Error::TriplePoint { at: at.to_string() });
    }
    by_pos.insert(
        at.clone(),
        Crossing {
            position: at,
            branches: [
                Branch {
                    strand: si,
                    segment: i,
                    t,
                },
                Branch {
                    strand: sj,
                    segment: j,
                    t: u,
                },
            ],
        },
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::parse_divide_file;

    #[test]
    fn x_shape_has_one_crossing_at_origin() {
        let s = parse_divide_file("boundary 2\nopen (-2,-2) (2,2)\nopen (-2,2) (2,-2)\n").unwrap();
        let c = intersect_strands(&s).unwrap();
        assert_eq!(c.crossings.len(), 1);
        assert_eq!(c.crossings[0].position, RatPoint::from_ints(0, 0));
    }

    #[test]
    fn single_chord_has_no_crossing() {
        let s = parse_divide_file("boundary 4\nopen (-4,0) (0,0) (4,0)\n").unwrap();
        let c = intersect_strands(&s).unwrap();
        assert!(c.crossings.is_empty());
    }

    #[test]
    fn identical_strands_are_tangent() {
        let s = parse_divide_file("boundary 4\nopen (-4,0) (4,0)\nopen (-4,0) (4,0)\n").unwrap();
        assert!(matches!(
            intersect_strands(&s),
            Err(Error::Tangency { .. })
        ));
    }

    #[test]
    fn triple_point_detected() {
        let s = parse_divide_file(
            "boundary 4\nopen (-4,0) (4,0)\nopen (-4,-4) (4,4)\nopen (-4,4) (4,-4)\n",
        )
        .unwrap();
        assert!(matches!(
            intersect_strands(&s),
            Err(Error::TriplePoint { .. })
        ));
    }

    #[test]
    fn corner_crossing_detected() {
        // second strand has a vertex on the first strand's interior
        let s = parse_divide_file("boundary 4\nopen (-4,0) (4,0)\nopen (-4,4) (0,0) (4,4)\n")
            .unwrap();
        assert!(matches!(
            intersect_strands(&s),
            Err(Error::CornerCrossing { .. })
        ));
    }

    #[test]
    fn crossings_are_order_independent() {
        let a = parse_divide_file("boundary 4\nopen (-4,-4) (4,4)\nopen (-4,4) (4,-4)\n").unwrap();
        let b = parse_divide_file("boundary 4\nopen (-4,4) (4,-4)\nopen (-4,-4) (4,4)\n").unwrap();
        let ca = intersect_strands(&a).unwrap();
        let cb = intersect_strands(&b).unwrap();
        let pa: Vec<_> = ca.crossings.iter().map(|c| c.position.clone()).collect();
        let pb: Vec<_> = cb.crossings.iter().map(|c| c.position.clone()).collect();
        assert_eq!(pa, pb);
    }
}
