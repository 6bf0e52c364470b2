//! Half-edge map of the arrangement.
//!
//! Vertices are the double points, the strand endpoints, the four square
//! corners, and one anchor per crossing-free closed strand (a circle needs a
//! base point for permutation-based face walks; anchors never count as
//! endpoints or double points). Edges are divide arcs between consecutive
//! special points plus the boundary arcs of the square. Rotation order at
//! each vertex comes from exact integer direction vectors.
//!
//! Faces are orbits of the face permutation, merged across components:
//! a component not attached to the square boundary contributes its outer
//! (negative-area) walk as a hole of the face geometrically containing it.

use super::intersect::CrossingSet;
use super::strand::{StrandKind, StrandSet};
use crate::error::Result;
use crate::exact::{signed_area2, IVec, Rat, RatPoint};
use num_traits::Signed;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdgeId(pub usize);
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitId(pub usize);
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    DoublePoint,
    Endpoint,
    Corner,
    /// Base point on a crossing-free closed strand.
    Anchor,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub kind: VertexKind,
    pub position: RatPoint,
    /// Outgoing half-edges in counterclockwise rotation order.
    pub rotation: Vec<HalfEdgeId>,
}

#[derive(Debug, Clone)]
pub struct HalfEdge {
    pub origin: VertexId,
    pub twin: HalfEdgeId,
    /// Exact outgoing direction at the origin.
    pub out_dir: IVec,
    /// Full geometric path from origin to target.
    pub path: Vec<RatPoint>,
    /// True for arcs of the square boundary.
    pub is_boundary: bool,
    /// Strand index for divide arcs.
    pub strand: Option<usize>,
    pub orbit: OrbitId,
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub half_edges: Vec<HalfEdgeId>,
    pub area2: Rat,
    pub face: FaceId,
}

#[derive(Debug, Clone)]
pub struct Face {
    /// The walk bounding this face from outside its holes (positive area,
    /// except for the outside face which is bounded by the square's outer
    /// walk).
    pub outer: OrbitId,
    /// Outer walks of components nested inside this face.
    pub holes: Vec<OrbitId>,
    pub is_outside: bool,
    /// Touches no boundary arc (and is not the outside face).
    pub internal: bool,
}

#[derive(Debug, Clone)]
pub struct PlanarMap {
    pub boundary_half_width: i64,
    pub vertices: Vec<Vertex>,
    pub half_edges: Vec<HalfEdge>,
    pub orbits: Vec<Orbit>,
    pub faces: Vec<Face>,
    pub outside_face: FaceId,
}

impl PlanarMap {
    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn half_edge(&self, h: HalfEdgeId) -> &HalfEdge {
        &self.half_edges[h.0]
    }

    pub fn twin(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.half_edges[h.0].twin
    }

    pub fn origin(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[h.0].origin
    }

    pub fn target(&self, h: HalfEdgeId) -> VertexId {
        self.origin(self.twin(h))
    }

    /// Face to the left of `h`.
    pub fn face_of(&self, h: HalfEdgeId) -> FaceId {
        self.orbits[self.half_edges[h.0].orbit.0].face
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    /// One representative half-edge per undirected edge.
    pub fn edges(&self) -> impl Iterator<Item = HalfEdgeId> + '_ {
        (0..self.half_edges.len())
            .map(HalfEdgeId)
            .filter(|h| h.0 < self.twin(*h).0)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn double_points(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_ids()
            .filter(|v| self.vertices[v.0].kind == VertexKind::DoublePoint)
    }

    pub fn endpoint_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Endpoint)
            .count()
    }

    /// Next half-edge of the face walk (face kept on the left).
    pub fn face_next(&self, h: HalfEdgeId) -> HalfEdgeId {
        let t = self.twin(h);
        let v = self.origin(t);
        let rot = &self.vertices[v.0].rotation;
        let idx = rot.iter().position(|&x| x == t).unwrap();
        rot[(idx + rot.len() - 1) % rot.len()]
    }

    /// Continue straight through a degree-4 vertex (opposite half-edge in
    /// rotation order) or through an anchor. Returns `None` at endpoints
    /// and corners.
    pub fn straight_through(&self, h: HalfEdgeId) -> Option<HalfEdgeId> {
        let t = self.twin(h);
        let v = self.origin(t);
        let vert = &self.vertices[v.0];
        match vert.kind {
            VertexKind::DoublePoint => {
                let idx = vert.rotation.iter().position(|&x| x == t).unwrap();
                Some(vert.rotation[(idx + 2) % 4])
            }
            VertexKind::Anchor => {
                let idx = vert.rotation.iter().position(|&x| x == t).unwrap();
                Some(vert.rotation[(idx + 1) % 2])
            }
            _ => None,
        }
    }

    /// Sphere Euler count: V - E + F - H, where H is the total number of
    /// holes. Components detached from the square each open one hole, which
    /// this count closes back up; the result is 2 for every valid map.
    pub fn euler_sphere_count(&self) -> i64 {
        let v = self.vertices.len() as i64;
        let e = self.edge_count() as i64;
        let f = self.faces.len() as i64;
        let h: i64 = self.faces.iter().map(|f| f.holes.len() as i64).sum();
        v - e + f - h
    }

    /// Whether the divide itself (ignoring boundary arcs) is connected.
    pub fn divide_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        let mut seen = vec![false; self.vertices.len()];
        for h in self.edges() {
            if !self.half_edges[h.0].is_boundary {
                let a = self.origin(h);
                let b = self.target(h);
                uf.union(a.0, b.0);
                seen[a.0] = true;
                seen[b.0] = true;
            }
        }
        let mut root = None;
        for i in 0..self.vertices.len() {
            if seen[i] {
                let r = uf.find(i);
                match root {
                    None => root = Some(r),
                    Some(r0) if r0 != r => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

struct Builder {
    vertices: Vec<Vertex>,
    by_pos: BTreeMap<RatPoint, VertexId>,
    half_edges: Vec<HalfEdge>,
}

impl Builder {
    fn vertex_at(&mut self, pos: RatPoint, kind: VertexKind) -> VertexId {
        if let Some(&v) = self.by_pos.get(&pos) {
            // An endpoint may land exactly on a square corner; the endpoint
            // role wins and the vertex keeps degree 3.
            if kind == VertexKind::Endpoint {
                self.vertices[v.0].kind = VertexKind::Endpoint;
            }
            return v;
        }
        let id = VertexId(self.vertices.len());
        self.vertices.push(Vertex {
            kind,
            position: pos.clone(),
            rotation: Vec::new(),
        });
        self.by_pos.insert(pos, id);
        id
    }

    #[allow(clippy::too_many_arguments)]
    fn add_edge(
        &mut self,
        a: VertexId,
        b: VertexId,
        path: Vec<RatPoint>,
        dir_a: IVec,
        dir_b: IVec,
        is_boundary: bool,
        strand: Option<usize>,
    ) {
        debug_assert!(path.len() >= 2);
        debug_assert_eq!(path[0], self.vertices[a.0].position);
        debug_assert_eq!(path[path.len() - 1], self.vertices[b.0].position);
        let h = HalfEdgeId(self.half_edges.len());
        let t = HalfEdgeId(self.half_edges.len() + 1);
        let mut rev = path.clone();
        rev.reverse();
        self.half_edges.push(HalfEdge {
            origin: a,
            twin: t,
            out_dir: dir_a,
            path,
            is_boundary,
            strand,
            orbit: OrbitId(usize::MAX),
        });
        self.half_edges.push(HalfEdge {
            origin: b,
            twin: h,
            out_dir: dir_b,
            path: rev,
            is_boundary,
            strand,
            orbit: OrbitId(usize::MAX),
        });
    }
}

/// A special point along a strand: a crossing or an open-strand endpoint.
struct Station {
    segment: usize,
    t: Rat,
    vertex: VertexId,
}

pub fn build_planar_map(set: &StrandSet, crossings: &CrossingSet) -> Result<PlanarMap> {
    let n = set.boundary_half_width;
    let mut b = Builder {
        vertices: Vec::new(),
        by_pos: BTreeMap::new(),
        half_edges: Vec::new(),
    };

    let mut crossing_vertices = Vec::with_capacity(crossings.crossings.len());
    for c in &crossings.crossings {
        crossing_vertices.push(b.vertex_at(c.position.clone(), VertexKind::DoublePoint));
    }

    // Stations per strand, ordered along the strand.
    let mut stations: Vec<Vec<Station>> = set.strands.iter().map(|_| Vec::new()).collect();
    for (ci, c) in crossings.crossings.iter().enumerate() {
        for br in &c.branches {
            stations[br.strand].push(Station {
                segment: br.segment,
                t: br.t.clone(),
                vertex: crossing_vertices[ci],
            });
        }
    }
    for (si, strand) in set.strands.iter().enumerate() {
        if strand.kind == StrandKind::Open {
            let first = strand.points[0];
            let last = *strand.points.last().unwrap();
            stations[si].push(Station {
                segment: 0,
                t: Rat::from_integer(0.into()),
                vertex: b.vertex_at(first.to_rat(), VertexKind::Endpoint),
            });
            stations[si].push(Station {
                segment: strand.segment_count() - 1,
                t: Rat::from_integer(1.into()),
                vertex: b.vertex_at(last.to_rat(), VertexKind::Endpoint),
            });
        }
        stations[si].sort_by(|a, b| a.segment.cmp(&b.segment).then_with(|| a.t.cmp(&b.t)));
    }

    // Divide arcs between consecutive stations.
    for (si, strand) in set.strands.iter().enumerate() {
        let st = &stations[si];
        let np = strand.points.len();
        let seg_dir = |i: usize| strand.points[i].dir_to(strand.points[(i + 1) % np]);

        if st.is_empty() {
            debug_assert_eq!(strand.kind, StrandKind::Closed);
            let anchor = b.vertex_at(strand.points[0].to_rat(), VertexKind::Anchor);
            let mut path: Vec<RatPoint> = strand.points.iter().map(|p| p.to_rat()).collect();
            path.push(strand.points[0].to_rat());
            let dir_fwd = seg_dir(0);
            let dir_bwd = strand.points[0].dir_to(strand.points[np - 1]);
            b.add_edge(anchor, anchor, path, dir_fwd, dir_bwd, false, Some(si));
            continue;
        }

        let pair_count = match strand.kind {
            StrandKind::Open => st.len() - 1,
            StrandKind::Closed => st.len(),
        };
        for k in 0..pair_count {
            let a = &st[k];
            let c = &st[(k + 1) % st.len()];
            let wrap = k + 1 == st.len();
            // Number of polyline vertices strictly after station a and up to
            // the start vertex of station c's segment.
            let steps = if wrap {
                np - a.segment + c.segment
            } else {
                c.segment - a.segment
            };
            let mut path = vec![point_on_segment(strand, a.segment, &a.t)];
            for i in 1..=steps {
                path.push(strand.points[(a.segment + i) % np].to_rat());
            }
            path.push(point_on_segment(strand, c.segment, &c.t));
            path.dedup();
            let dir_a = seg_dir(a.segment);
            let dir_c = seg_dir(c.segment).neg();
            b.add_edge(a.vertex, c.vertex, path, dir_a, dir_c, false, Some(si));
        }
    }

    // Square corners and boundary arcs.
    for p in [
        RatPoint::from_ints(n, -n),
        RatPoint::from_ints(n, n),
        RatPoint::from_ints(-n, n),
        RatPoint::from_ints(-n, -n),
    ] {
        b.vertex_at(p, VertexKind::Corner);
    }
    let mut boundary_specials: Vec<(Rat, VertexId)> = Vec::new();
    for (idx, v) in b.vertices.iter().enumerate() {
        if matches!(v.kind, VertexKind::Endpoint | VertexKind::Corner) {
            boundary_specials.push((perimeter_param(n, &v.position), VertexId(idx)));
        }
    }
    boundary_specials.sort_by(|a, b| a.0.cmp(&b.0));
    let m = boundary_specials.len();
    for k in 0..m {
        let va = boundary_specials[k].1;
        let vb = boundary_specials[(k + 1) % m].1;
        let pa = b.vertices[va.0].position.clone();
        let pb = b.vertices[vb.0].position.clone();
        let dir = boundary_ccw_dir(n, &pa);
        let dir_back = boundary_ccw_dir_into(n, &pb);
        b.add_edge(va, vb, vec![pa, pb], dir, dir_back, true, None);
    }

    // Rotation orders from exact directions.
    let mut out_at: Vec<Vec<HalfEdgeId>> = vec![Vec::new(); b.vertices.len()];
    for (i, h) in b.half_edges.iter().enumerate() {
        out_at[h.origin.0].push(HalfEdgeId(i));
    }
    for (vi, mut list) in out_at.into_iter().enumerate() {
        list.sort_by(|&x, &y| {
            b.half_edges[x.0]
                .out_dir
                .ccw_cmp(b.half_edges[y.0].out_dir)
                .then_with(|| x.0.cmp(&y.0))
        });
        debug_assert!(
            list.windows(2)
                .all(|w| b.half_edges[w[0].0].out_dir != b.half_edges[w[1].0].out_dir),
            "coincident directions at vertex {vi}"
        );
        b.vertices[vi].rotation = list;
    }

    finish(b, n)
}

fn point_on_segment(strand: &super::strand::Strand, segment: usize, t: &Rat) -> RatPoint {
    use crate::exact::rat;
    let np = strand.points.len();
    let a = strand.points[segment];
    let c = strand.points[(segment + 1) % np];
    RatPoint::new(rat(a.x) + t * rat(c.x - a.x), rat(a.y) + t * rat(c.y - a.y))
}

/// Position of a boundary point along the ccw perimeter starting at (n, -n).
fn perimeter_param(n: i64, p: &RatPoint) -> Rat {
    use crate::exact::rat;
    if p.x == rat(n) && p.y < rat(n) {
        &p.y + rat(n)
    } else if p.y == rat(n) && p.x > rat(-n) {
        rat(2 * n) + (rat(n) - &p.x)
    } else if p.x == rat(-n) && p.y > rat(-n) {
        rat(4 * n) + (rat(n) - &p.y)
    } else {
        rat(6 * n) + (&p.x + rat(n))
    }
}

/// Counterclockwise perimeter direction leaving a boundary point.
fn boundary_ccw_dir(n: i64, p: &RatPoint) -> IVec {
    use crate::exact::rat;
    if p.x == rat(n) && p.y < rat(n) {
        IVec::new(0, 1)
    } else if p.y == rat(n) && p.x > rat(-n) {
        IVec::new(-1, 0)
    } else if p.x == rat(-n) && p.y > rat(-n) {
        IVec::new(0, -1)
    } else {
        IVec::new(1, 0)
    }
}

/// Direction of the reversed boundary arc at its origin `p` (clockwise
/// perimeter direction, accounting for corners where the incoming side
/// differs from the outgoing one).
fn boundary_ccw_dir_into(n: i64, p: &RatPoint) -> IVec {
    use crate::exact::rat;
    // Clockwise direction at p: the side p closes, walked backward.
    if p.x == rat(n) && p.y > rat(-n) {
        IVec::new(0, -1)
    } else if p.y == rat(n) && p.x < rat(n) {
        IVec::new(1, 0)
    } else if p.x == rat(-n) && p.y < rat(n) {
        IVec::new(0, 1)
    } else {
        IVec::new(-1, 0)
    }
}

fn finish(b: Builder, n: i64) -> Result<PlanarMap> {
    let Builder {
        vertices,
        half_edges,
        ..
    } = b;
    let mut map = PlanarMap {
        boundary_half_width: n,
        vertices,
        half_edges,
        orbits: Vec::new(),
        faces: Vec::new(),
        outside_face: FaceId(0),
    };

    // Face orbits.
    let mut orbit_of = vec![usize::MAX; map.half_edges.len()];
    let mut orbits: Vec<Orbit> = Vec::new();
    for start in 0..map.half_edges.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut walk = Vec::new();
        let mut h = HalfEdgeId(start);
        loop {
            debug_assert_eq!(orbit_of[h.0], usize::MAX);
            orbit_of[h.0] = id;
            walk.push(h);
            h = map.face_next(h);
            if h.0 == start {
                break;
            }
        }
        let mut polygon: Vec<RatPoint> = Vec::new();
        for &he in &walk {
            let path = &map.half_edges[he.0].path;
            polygon.extend_from_slice(&path[..path.len() - 1]);
        }
        let area2 = signed_area2(&polygon);
        orbits.push(Orbit {
            half_edges: walk,
            area2,
            face: FaceId(usize::MAX),
        });
    }
    for (i, &o) in orbit_of.iter().enumerate() {
        map.half_edges[i].orbit = OrbitId(o);
    }

    // Components of the underlying graph.
    let mut uf = UnionFind::new(map.vertices.len());
    for h in &map.half_edges {
        let t_origin = map.half_edges[h.twin.0].origin;
        uf.union(h.origin.0, t_origin.0);
    }
    let orbit_component: Vec<usize> = orbits
        .iter()
        .map(|o| uf.find(map.half_edges[o.half_edges[0].0].origin.0))
        .collect();
    let square_component = {
        let h = map
            .half_edges
            .iter()
            .position(|h| h.is_boundary)
            .expect("square boundary always present");
        uf.find(map.half_edges[h].origin.0)
    };

    // The outer (negative-area) walk of each component.
    let mut outer_of_component: BTreeMap<usize, usize> = BTreeMap::new();
    for (oi, o) in orbits.iter().enumerate() {
        if o.area2.is_negative() {
            let comp = orbit_component[oi];
            debug_assert!(
                !outer_of_component.contains_key(&comp),
                "one outer walk per component"
            );
            outer_of_component.insert(comp, oi);
        }
    }

    // Hole containers: the orbit directly above each detached component.
    let mut container_orbit: BTreeMap<usize, usize> = BTreeMap::new();
    for (&comp, &neg) in &outer_of_component {
        if comp == square_component {
            continue;
        }
        let p = topmost_vertex_of_component(&map, &mut uf, comp);
        let above = orbit_above(&map, &mut uf, comp, &p);
        container_orbit.insert(neg, above);
    }

    // Faces: one per positive orbit, plus the outside face.
    let mut face_of_orbit = vec![usize::MAX; orbits.len()];
    let mut faces: Vec<Face> = Vec::new();
    let outside_orbit = outer_of_component[&square_component];
    for (oi, o) in orbits.iter().enumerate() {
        if !o.area2.is_negative() {
            let f = faces.len();
            faces.push(Face {
                outer: OrbitId(oi),
                holes: Vec::new(),
                is_outside: false,
                internal: false,
            });
            face_of_orbit[oi] = f;
        }
    }
    let outside_face = FaceId(faces.len());
    faces.push(Face {
        outer: OrbitId(outside_orbit),
        holes: Vec::new(),
        is_outside: true,
        internal: false,
    });
    face_of_orbit[outside_orbit] = outside_face.0;

    // Resolve hole containers through chains of negative orbits.
    fn resolve(
        oi: usize,
        container: &BTreeMap<usize, usize>,
        face_of_orbit: &mut [usize],
        depth: usize,
    ) -> usize {
        assert!(depth < 10_000, "hole containment cycle");
        if face_of_orbit[oi] != usize::MAX {
            return face_of_orbit[oi];
        }
        let above = container[&oi];
        let f = resolve(above, container, face_of_orbit, depth + 1);
        face_of_orbit[oi] = f;
        f
    }
    let negative_orbits: Vec<usize> = container_orbit.keys().copied().collect();
    for oi in negative_orbits {
        let f = resolve(oi, &container_orbit, &mut face_of_orbit, 0);
        faces[f].holes.push(OrbitId(oi));
    }

    for (oi, &f) in face_of_orbit.iter().enumerate() {
        debug_assert_ne!(f, usize::MAX, "orbit {oi} without face");
        orbits[oi].face = FaceId(f);
    }

    for face in faces.iter_mut() {
        if face.is_outside {
            continue;
        }
        let mut walks = vec![face.outer];
        walks.extend_from_slice(&face.holes);
        let touches_boundary = walks.iter().any(|&o| {
            orbits[o.0]
                .half_edges
                .iter()
                .any(|&h| map.half_edges[h.0].is_boundary)
        });
        face.internal = !touches_boundary;
    }

    map.orbits = orbits;
    map.faces = faces;
    map.outside_face = outside_face;
    Ok(map)
}

fn topmost_vertex_of_component(map: &PlanarMap, uf: &mut UnionFind, comp: usize) -> RatPoint {
    let mut best: Option<RatPoint> = None;
    for (vi, v) in map.vertices.iter().enumerate() {
        if uf.find(vi) == comp {
            let better = match &best {
                None => true,
                Some(b) => (&v.position.y, &v.position.x) > (&b.y, &b.x),
            };
            if better {
                best = Some(v.position.clone());
            }
        }
    }
    best.expect("component has vertices")
}

/// Orbit of the face directly above point `p`, ignoring edges of component
/// `comp`. Shoots a vertical ray upward from `p`, symbolically perturbed to
/// x + epsilon; returns the orbit on the underside of the lowest crossing.
fn orbit_above(map: &PlanarMap, uf: &mut UnionFind, comp: usize, p: &RatPoint) -> usize {
    let mut best: Option<(Rat, Rat, usize)> = None; // (y, slope, orbit)
    for (hi, h) in map.half_edges.iter().enumerate() {
        if uf.find(h.origin.0) == comp {
            continue;
        }
        for w in h.path.windows(2) {
            let (a, c) = (&w[0], &w[1]);
            // leftward crossings of the symbolic line x = p.x + eps
            if !(c.x <= p.x && p.x < a.x) {
                continue;
            }
            let t = (&p.x - &a.x) / (&c.x - &a.x);
            let y = &a.y + &t * (&c.y - &a.y);
            if y <= p.y {
                continue;
            }
            let slope = (&c.y - &a.y) / (&c.x - &a.x);
            let better = match &best {
                None => true,
                Some((by, bs, _)) => (&y, &slope) < (&by, &bs),
            };
            if better {
                best = Some((y, slope, map.half_edges[hi].orbit.0));
            }
        }
    }
    best.expect("square boundary lies above every interior point")
        .2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{intersect_strands, parse_divide_file};

    fn build(text: &str) -> PlanarMap {
        let s = parse_divide_file(text).unwrap();
        let c = intersect_strands(&s).unwrap();
        build_planar_map(&s, &c).unwrap()
    }

    #[test]
    fn single_chord_map() {
        let m = build("boundary 4\nopen (-4,0) (0,0) (4,0)\n");
        assert_eq!(m.endpoint_count(), 2);
        assert_eq!(
            m.vertices
                .iter()
                .filter(|v| v.kind == VertexKind::Corner)
                .count(),
            4
        );
        // two faces inside the square plus the outside
        assert_eq!(m.faces.len(), 3);
        assert!(m.faces.iter().all(|f| !f.internal));
        assert_eq!(m.euler_sphere_count(), 2);
    }

    #[test]
    fn x_shape_map() {
        let m = build("boundary 2\nopen (-2,-2) (2,2)\nopen (-2,2) (2,-2)\n");
        assert_eq!(m.double_points().count(), 1);
        assert_eq!(m.endpoint_count(), 4);
        // endpoints sit exactly on the corners here
        assert_eq!(
            m.vertices
                .iter()
                .filter(|v| v.kind == VertexKind::Corner)
                .count(),
            0
        );
        assert_eq!(m.faces.len(), 5); // 4 quadrants + outside
        assert!(m.faces.iter().all(|f| !f.internal));
        assert_eq!(m.euler_sphere_count(), 2);
        let dp = m.double_points().next().unwrap();
        assert_eq!(m.vertex(dp).rotation.len(), 4);
    }

    #[test]
    fn lone_circle_map() {
        let m = build("boundary 4\nclosed (-2,0) (0,2) (2,0) (0,-2)\n");
        assert_eq!(m.double_points().count(), 0);
        assert_eq!(
            m.vertices
                .iter()
                .filter(|v| v.kind == VertexKind::Anchor)
                .count(),
            1
        );
        // inside circle, annulus, outside
        assert_eq!(m.faces.len(), 3);
        assert_eq!(m.faces.iter().filter(|f| f.internal).count(), 1);
        let annulus = m
            .faces
            .iter()
            .find(|f| !f.is_outside && !f.internal)
            .unwrap();
        assert_eq!(annulus.holes.len(), 1);
        assert_eq!(m.euler_sphere_count(), 2);
    }

    #[test]
    fn euler_is_scaling_invariant() {
        let s = parse_divide_file("boundary 2\nopen (-2,-2) (2,2)\nopen (-2,2) (2,-2)\n").unwrap();
        let s3 = s.scaled(3);
        let c3 = intersect_strands(&s3).unwrap();
        let m3 = build_planar_map(&s3, &c3).unwrap();
        assert_eq!(m3.euler_sphere_count(), 2);
        assert_eq!(m3.faces.len(), 5);
    }
}
