//! Classification of double points into the eleven local models.
//!
//! The type of a double point is determined by which of its four quadrants
//! are external and how many of its four edges run to endpoints of the
//! divide. Types 1, 2, 3, 4-2 and 5-3 admit the polyhedral blocks of the
//! volume formula; 6-3 is the Hopf case; everything else witnesses a
//! non-prime divide.

use crate::arrangement::{HalfEdgeId, VertexId, VertexKind};
use crate::divide::Divide;
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum VertexType {
    T1,
    T2,
    T3,
    T4_1,
    T4_2,
    T5_1,
    T5_2,
    T5_3,
    T6_1,
    T6_2,
    T6_3,
    Unlisted,
}

impl VertexType {
    /// The five types with block decompositions.
    pub fn has_block(self) -> bool {
        matches!(
            self,
            VertexType::T1 | VertexType::T2 | VertexType::T3 | VertexType::T4_2 | VertexType::T5_3
        )
    }

    /// Types that can occur at a vertex of a prime divide.
    pub fn prime_admissible(self) -> bool {
        self.has_block() || self == VertexType::T6_3
    }

    pub fn label(self) -> &'static str {
        match self {
            VertexType::T1 => "1",
            VertexType::T2 => "2",
            VertexType::T3 => "3",
            VertexType::T4_1 => "4-1",
            VertexType::T4_2 => "4-2",
            VertexType::T5_1 => "5-1",
            VertexType::T5_2 => "5-2",
            VertexType::T5_3 => "5-3",
            VertexType::T6_1 => "6-1",
            VertexType::T6_2 => "6-2",
            VertexType::T6_3 => "6-3",
            VertexType::Unlisted => "unlisted",
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Local configuration of a double point: external flags of the four
/// quadrants in counterclockwise rotation order, and which of the four
/// edges run to endpoints. Slot `k` is the quadrant between rotation edges
/// `k` and `k+1`; edge slot `k` is rotation edge `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrantProfile {
    pub vertex: VertexId,
    pub external: [bool; 4],
    pub endpoint_edge: [bool; 4],
}

impl QuadrantProfile {
    pub fn external_count(&self) -> usize {
        self.external.iter().filter(|&&e| e).count()
    }

    pub fn endpoint_edge_count(&self) -> usize {
        self.endpoint_edge.iter().filter(|&&e| e).count()
    }

    fn rotated(&self, r: usize) -> QuadrantProfile {
        let mut p = self.clone();
        for i in 0..4 {
            p.external[i] = self.external[(i + r) % 4];
            p.endpoint_edge[i] = self.endpoint_edge[(i + r) % 4];
        }
        p
    }
}

/// Walk a divide edge from one of its half-edges to the far end and report
/// whether that end is an endpoint of the divide.
fn leads_to_endpoint(d: &Divide, h: HalfEdgeId) -> bool {
    d.map.vertex(d.map.target(h)).kind == VertexKind::Endpoint
}

/// The profile of a degree-4 divide vertex, in `hatted` mode treating every
/// quadrant as kept (the widehat polyhedron, where no region is removed).
pub fn quadrant_profile_with(d: &Divide, v: VertexId, hatted: bool) -> QuadrantProfile {
    let vert = d.map.vertex(v);
    debug_assert_eq!(vert.kind, VertexKind::DoublePoint);
    debug_assert_eq!(vert.rotation.len(), 4);
    let mut external = [false; 4];
    let mut endpoint_edge = [false; 4];
    for k in 0..4 {
        let h = vert.rotation[k];
        // quadrant k lies between rotation edges k and k+1, which is the
        // face to the left of h
        let face = d.map.face_of(h);
        external[k] = !hatted && !d.map.faces[face.0].internal;
        endpoint_edge[k] = leads_to_endpoint(d, h);
    }
    let profile = QuadrantProfile {
        vertex: v,
        external,
        endpoint_edge,
    };
    // Flanking law: the two quadrants along an edge to the boundary are
    // external (they both touch the boundary near the endpoint).
    if !hatted {
        for k in 0..4 {
            if profile.endpoint_edge[k] {
                assert!(
                    profile.external[k] && profile.external[(k + 3) % 4],
                    "endpoint edge flanked by an internal quadrant at vertex {v:?}"
                );
            }
        }
    }
    profile
}

pub fn quadrant_profile(d: &Divide, v: VertexId) -> QuadrantProfile {
    quadrant_profile_with(d, v, false)
}

/// Pure classification of a profile into the eleven local models.
pub fn classify_vertex(p: &QuadrantProfile) -> VertexType {
    let ext = p.external_count();
    let eps = p.endpoint_edge_count();
    match (ext, eps) {
        (0, 0) => VertexType::T1,
        (1, 0) => VertexType::T2,
        (2, 0) if opposite(&p.external) => VertexType::T3,
        (2, 0) => VertexType::T4_1,
        (2, 1) if !opposite(&p.external) => VertexType::T4_2,
        (3, 0) => VertexType::T5_1,
        (3, 1) => VertexType::T5_2,
        (3, 2) => VertexType::T5_3,
        (4, 0) => VertexType::T6_1,
        (4, 2) => VertexType::T6_2,
        (4, 4) => VertexType::T6_3,
        _ => VertexType::Unlisted,
    }
}

fn opposite(external: &[bool; 4]) -> bool {
    external[0] == external[2] && external[1] == external[3]
}

/// Counts of double points per local model.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TypeCensus {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
    pub n5: usize,
    pub others: BTreeMap<VertexType, usize>,
}

impl TypeCensus {
    pub fn from_counts(n1: usize, n2: usize, n3: usize, n4: usize, n5: usize) -> TypeCensus {
        TypeCensus {
            n1,
            n2,
            n3,
            n4,
            n5,
            others: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, t: VertexType) {
        match t {
            VertexType::T1 => self.n1 += 1,
            VertexType::T2 => self.n2 += 1,
            VertexType::T3 => self.n3 += 1,
            VertexType::T4_2 => self.n4 += 1,
            VertexType::T5_3 => self.n5 += 1,
            other => *self.others.entry(other).or_insert(0) += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.n1 + self.n2 + self.n3 + self.n4 + self.n5 + self.others.values().sum::<usize>()
    }

    pub fn main_counts(&self) -> (usize, usize, usize, usize, usize) {
        (self.n1, self.n2, self.n3, self.n4, self.n5)
    }

    pub fn has_t6_3(&self) -> bool {
        self.others.get(&VertexType::T6_3).copied().unwrap_or(0) > 0
    }

    /// Non-prime subtypes or unlisted profiles present in the census.
    pub fn inadmissible_types(&self) -> Vec<VertexType> {
        self.others
            .keys()
            .copied()
            .filter(|t| !t.prime_admissible())
            .collect()
    }
}

/// Per-vertex classification of a divide.
pub fn vertex_types(d: &Divide) -> Vec<(VertexId, VertexType)> {
    vertex_types_with(d, false)
}

pub fn vertex_types_with(d: &Divide, hatted: bool) -> Vec<(VertexId, VertexType)> {
    d.map
        .double_points()
        .map(|v| (v, classify_vertex(&quadrant_profile_with(d, v, hatted))))
        .collect()
}

pub fn census(d: &Divide) -> Result<TypeCensus> {
    census_with(d, false)
}

pub fn census_with(d: &Divide, hatted: bool) -> Result<TypeCensus> {
    let mut census = TypeCensus::default();
    for (_, t) in vertex_types_with(d, hatted) {
        census.add(t);
    }
    // A connected divide with a Type 6-3 vertex is the X-shape.
    if !hatted && census.has_t6_3() && d.connected && census.total() != 1 {
        return Err(Error::BadHopfStructure {
            double_points: census.total(),
        });
    }
    Ok(census)
}

/// True iff the census contains a Type 6-3 vertex, in which case the link is
/// the Hopf link and the volume pipeline reports no bound.
pub fn hopf_case(c: &TypeCensus) -> bool {
    c.has_t6_3()
}

#[derive(Debug, Clone)]
pub struct PrimeAdmissibility {
    pub ok: bool,
    /// Divide edges joining two double points with both sides external.
    pub offending_edges: Vec<HalfEdgeId>,
}

/// Edge-based prime admissibility: every edge whose two ends are both double
/// points must touch at least one internal region.
pub fn prime_admissible(d: &Divide) -> Result<PrimeAdmissibility> {
    if !d.connected {
        return Err(Error::Disconnected);
    }
    let mut offending = Vec::new();
    for h in d.map.edges() {
        if d.map.half_edge(h).is_boundary {
            continue;
        }
        let a = d.map.origin(h);
        let b = d.map.target(h);
        if d.map.vertex(a).kind != VertexKind::DoublePoint
            || d.map.vertex(b).kind != VertexKind::DoublePoint
        {
            continue;
        }
        let left = d.map.face_of(h);
        let right = d.map.face_of(d.map.twin(h));
        if !d.map.faces[left.0].internal && !d.map.faces[right.0].internal {
            offending.push(h);
        }
    }
    Ok(PrimeAdmissibility {
        ok: offending.is_empty(),
        offending_edges: offending,
    })
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
    fn x_shape_is_t6_3() {
        let d = divide("boundary 2\nopen (-2,-2) (2,2)\nopen (-2,2) (2,-2)\n");
        let v = d.map.double_points().next().unwrap();
        let p = quadrant_profile(&d, v);
        assert_eq!(p.external_count(), 4);
        assert_eq!(p.endpoint_edge_count(), 4);
        assert_eq!(classify_vertex(&p), VertexType::T6_3);
        let c = census(&d).unwrap();
        assert!(hopf_case(&c));
        assert_eq!(c.main_counts(), (0, 0, 0, 0, 0));
        assert!(prime_admissible(&d).unwrap().ok); // vacuous
    }

    #[test]
    fn classification_table() {
        let mk = |external: [bool; 4], endpoint_edge: [bool; 4]| {
            classify_vertex(&QuadrantProfile {
                vertex: VertexId(0),
                external,
                endpoint_edge,
            })
        };
        let t = true;
        let f = false;
        assert_eq!(mk([f; 4], [f; 4]), VertexType::T1);
        assert_eq!(mk([t, f, f, f], [f; 4]), VertexType::T2);
        assert_eq!(mk([t, f, t, f], [f; 4]), VertexType::T3);
        assert_eq!(mk([t, t, f, f], [f; 4]), VertexType::T4_1);
        assert_eq!(mk([t, t, f, f], [f, t, f, f]), VertexType::T4_2);
        assert_eq!(mk([t, t, t, f], [f; 4]), VertexType::T5_1);
        assert_eq!(mk([t, t, t, f], [f, t, f, f]), VertexType::T5_2);
        assert_eq!(mk([t, t, t, f], [f, t, t, f]), VertexType::T5_3);
        assert_eq!(mk([t; 4], [f; 4]), VertexType::T6_1);
        assert_eq!(mk([t; 4], [t, f, t, f]), VertexType::T6_2);
        assert_eq!(mk([t; 4], [t; 4]), VertexType::T6_3);
        assert_eq!(mk([t; 4], [t, t, t, f]), VertexType::Unlisted);
        assert_eq!(mk([t; 4], [t, f, f, f]), VertexType::Unlisted);
    }

    #[test]
    fn classification_is_rotation_invariant() {
        // brute force over all profiles and all four rotations
        for mask_e in 0u8..16 {
            for mask_p in 0u8..16 {
                let external = [0, 1, 2, 3].map(|i| mask_e & (1 << i) != 0);
                let endpoint_edge = [0, 1, 2, 3].map(|i| mask_p & (1 << i) != 0);
                let p = QuadrantProfile {
                    vertex: VertexId(0),
                    external,
                    endpoint_edge,
                };
                let t0 = classify_vertex(&p);
                for r in 1..4 {
                    assert_eq!(classify_vertex(&p.rotated(r)), t0);
                }
            }
        }
    }
}
