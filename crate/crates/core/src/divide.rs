//! Divide structure on top of the planar map: regions, strand census,
//! link component and cusp counts.

use crate::arrangement::{FaceId, HalfEdgeId, PlanarMap, VertexKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub face: FaceId,
    pub internal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrandCensus {
    pub interval_count: usize,
    pub circle_count: usize,
}

/// A validated divide: the map plus derived counts.
#[derive(Debug, Clone)]
pub struct Divide {
    pub map: PlanarMap,
    pub regions: Vec<Region>,
    pub strands: StrandCensus,
    pub connected: bool,
}

impl Divide {
    pub fn new(map: PlanarMap) -> Divide {
        let regions = regions(&map);
        let strands = strand_census(&map);
        let connected = map.divide_connected();
        debug_assert_eq!(strands.interval_count, map.endpoint_count() / 2);
        Divide {
            map,
            regions,
            strands,
            connected,
        }
    }

    pub fn internal_region_count(&self) -> usize {
        self.regions.iter().filter(|r| r.internal).count()
    }

    pub fn double_point_count(&self) -> usize {
        self.map.double_points().count()
    }

    /// Components of the link of the divide: an interval strand lifts to one
    /// closed component (the two tangent lifts close up through u = 0 at the
    /// endpoints), a circle strand to two.
    pub fn link_component_count(&self) -> usize {
        self.strands.interval_count + 2 * self.strands.circle_count
    }

    /// Cusps of the block manifold: one per link component, plus one curve
    /// over every internal region.
    pub fn cusp_count(&self) -> Result<usize> {
        if !self.connected {
            return Err(Error::Disconnected);
        }
        if self.double_point_count() == 0 {
            return Err(Error::NoDoublePoint);
        }
        Ok(self.link_component_count() + self.internal_region_count())
    }
}

/// Every face except the square's outside, flagged internal iff its boundary
/// walks contain no boundary arc.
pub fn regions(map: &PlanarMap) -> Vec<Region> {
    (0..map.faces.len())
        .filter(|&f| !map.faces[f].is_outside)
        .map(|f| Region {
            face: FaceId(f),
            internal: map.faces[f].internal,
        })
        .collect()
}

/// Recover immersed interval and circle counts by walking straight through
/// every degree-4 vertex (and through anchors).
pub fn strand_census(map: &PlanarMap) -> StrandCensus {
    let mut visited = vec![false; map.half_edges.len()];
    let mut interval_count = 0;
    let mut circle_count = 0;

    let divide_half_edges: Vec<HalfEdgeId> = (0..map.half_edges.len())
        .map(HalfEdgeId)
        .filter(|&h| !map.half_edge(h).is_boundary)
        .collect();

    // Walks starting at endpoints consume interval components.
    for &h in &divide_half_edges {
        if visited[h.0] {
            continue;
        }
        let origin = map.origin(h);
        if map.vertex(origin).kind != VertexKind::Endpoint {
            continue;
        }
        interval_count += 1;
        let mut cur = h;
        loop {
            visited[cur.0] = true;
            visited[map.twin(cur).0] = true;
            match map.straight_through(cur) {
                Some(next) => cur = next,
                None => break,
            }
        }
    }
    debug_assert_eq!(interval_count, map.endpoint_count() / 2);

    // Remaining divide edges belong to circles.
    for &h in &divide_half_edges {
        if visited[h.0] {
            continue;
        }
        circle_count += 1;
        let mut cur = h;
        loop {
            visited[cur.0] = true;
            visited[map.twin(cur).0] = true;
            match map.straight_through(cur) {
                Some(next) if next != h => cur = next,
                _ => break,
            }
        }
    }

    StrandCensus {
        interval_count,
        circle_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_planar_map, intersect_strands, parse_divide_file};

    fn divide(text: &str) -> Divide {
        let s = parse_divide_file(text).unwrap();
        let c = intersect_strands(&s).unwrap();
        Divide::new(build_planar_map(&s, &c).unwrap())
    }

    #[test]
    fn x_shape_counts() {
        let d = divide("boundary 2\nopen (-2,-2) (2,2)\nopen (-2,2) (2,-2)\n");
        assert_eq!(d.regions.len(), 4);
        assert_eq!(d.internal_region_count(), 0);
        assert_eq!(
            d.strands,
            StrandCensus {
                interval_count: 2,
                circle_count: 0
            }
        );
        assert_eq!(d.link_component_count(), 2);
        assert_eq!(d.cusp_count().unwrap(), 2);
        assert!(d.connected);
    }

    #[test]
    fn lone_circle_counts() {
        let d = divide("boundary 4\nclosed (-2,0) (0,2) (2,0) (0,-2)\n");
        assert_eq!(
            d.strands,
            StrandCensus {
                interval_count: 0,
                circle_count: 1
            }
        );
        assert_eq!(d.link_component_count(), 2);
        assert!(d.cusp_count().is_err()); // no double point
    }

    #[test]
    fn census_invariant_under_rotation_and_reflection() {
        let base = "boundary 6\nopen (-6,0) (-3,-3) (2,2) (0,4) (-2,2) (3,-3) (6,0)\n";
        let s = parse_divide_file(base).unwrap();
        let d = {
            let c = intersect_strands(&s).unwrap();
            Divide::new(build_planar_map(&s, &c).unwrap())
        };
        for transform in 0..3 {
            let mut s2 = s.clone();
            for strand in &mut s2.strands {
                for p in &mut strand.points {
                    *p = match transform {
                        0 => crate::exact::IPoint::new(-p.y, p.x), // rotate 90
                        1 => crate::exact::IPoint::new(-p.x, p.y), // reflect x
                        _ => crate::exact::IPoint::new(p.y, p.x),  // reflect diagonal
                    };
                }
            }
            let c2 = intersect_strands(&s2).unwrap();
            let d2 = Divide::new(build_planar_map(&s2, &c2).unwrap());
            assert_eq!(d.strands, d2.strands);
            assert_eq!(d.internal_region_count(), d2.internal_region_count());
        }
    }
}
