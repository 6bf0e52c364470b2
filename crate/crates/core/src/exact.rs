//! Exact rational plane geometry primitives.
//!
//! Everything the arrangement code touches is computed over `BigRational`,
//! so degeneracy decisions (tangency, triple point, corner crossing) are
//! decided exactly, never by epsilon.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact point in the plane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        RatPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RatPoint::new(rat(x), rat(y))
    }

    pub fn is_lattice(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Integer direction vector. All polyline vertices are lattice points, so
/// segment directions and rotation orders are decided in integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IVec {
    pub x: i64,
    pub y: i64,
}

impl IVec {
    pub fn new(x: i64, y: i64) -> Self {
        IVec { x, y }
    }

    pub fn cross(self, other: IVec) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn neg(self) -> IVec {
        IVec::new(-self.x, -self.y)
    }

    /// Half-plane index for counterclockwise angular order, with angle 0 at
    /// the positive x-axis. 0 covers [0, pi), 1 covers [pi, 2pi).
    fn half(self) -> u8 {
        if self.y > 0 || (self.y == 0 && self.x > 0) {
            0
        } else {
            1
        }
    }

    /// Strict counterclockwise angular comparison (no trigonometry).
    pub fn ccw_cmp(self, other: IVec) -> std::cmp::Ordering {
        self.half()
            .cmp(&other.half())
            .then_with(|| 0.cmp(&self.cross(other)))
    }
}

/// Lattice point used for polyline vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IPoint {
    pub x: i64,
    pub y: i64,
}

impl IPoint {
    pub fn new(x: i64, y: i64) -> Self {
        IPoint { x, y }
    }

    pub fn to_rat(self) -> RatPoint {
        RatPoint::from_ints(self.x, self.y)
    }

    pub fn dir_to(self, other: IPoint) -> IVec {
        IVec::new(other.x - self.x, other.y - self.y)
    }
}

impl fmt::Display for IPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Result of intersecting two closed lattice segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegIntersection {
    /// No common point.
    None,
    /// A single transverse interior-interior crossing at the given point,
    /// with exact parameters along each segment (both strictly in (0,1)).
    Proper { at: RatPoint, t: Rat, u: Rat },
    /// A single common point involving at least one segment endpoint.
    AtEndpoint { at: RatPoint },
    /// The segments are collinear and share more than one point.
    Overlap,
}

/// Exact intersection of segments `a0a1` and `b0b1`.
pub fn intersect_segments(a0: IPoint, a1: IPoint, b0: IPoint, b1: IPoint) -> SegIntersection {
    let d = a0.dir_to(a1);
    let e = b0.dir_to(b1);
    let denom = d.cross(e);
    let w = a0.dir_to(b0);
    if denom == 0 {
        if w.cross(d) != 0 {
            return SegIntersection::None; // parallel, distinct lines
        }
        // Collinear: compare 1-d shadows along the dominant axis of d.
        let key = |p: IPoint| -> i64 {
            if d.x != 0 {
                p.x * d.x.signum()
            } else {
                p.y * d.y.signum()
            }
        };
        let (a_lo, a_hi) = minmax(key(a0), key(a1));
        let (b_lo, b_hi) = minmax(key(b0), key(b1));
        let lo = a_lo.max(b_lo);
        let hi = a_hi.min(b_hi);
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => SegIntersection::None,
            std::cmp::Ordering::Equal => {
                // Single shared point, necessarily an endpoint of both.
                let at = if key(a0) == lo { a0 } else { a1 };
                SegIntersection::AtEndpoint { at: at.to_rat() }
            }
            std::cmp::Ordering::Less => SegIntersection::Overlap,
        };
    }
    // t = (b0 - a0) x e / (d x e), u = (b0 - a0) x d / (d x e)
    let t_num = w.cross(e);
    let u_num = w.cross(d);
    // Signed range check: t in [0,1] iff t_num/denom in [0,1].
    let in01 = |num: i64, den: i64| -> bool {
        if den > 0 {
            (0..=den).contains(&num)
        } else {
            (den..=0).contains(&num)
        }
    };
    if !in01(t_num, denom) || !in01(u_num, denom) {
        return SegIntersection::None;
    }
    let t = Rat::new(BigInt::from(t_num), BigInt::from(denom));
    let u = Rat::new(BigInt::from(u_num), BigInt::from(denom));
    let at = RatPoint::new(
        rat(a0.x) + &t * rat(d.x),
        rat(a0.y) + &t * rat(d.y),
    );
    let interior = |v: &Rat| v.is_positive() && *v < rat(1);
    if interior(&t) && interior(&u) {
        SegIntersection::Proper { at, t, u }
    } else {
        SegIntersection::AtEndpoint { at }
    }
}

fn minmax(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Shoelace-style signed area (doubled) of a closed rational polygon walk.
pub fn signed_area2(points: &[RatPoint]) -> Rat {
    let mut acc = Rat::zero();
    let n = points.len();
    for i in 0..n {
        let p = &points[i];
        let q = &points[(i + 1) % n];
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    acc
}

/// Winding number of a closed rational polygon around `p`, which must not
/// lie on the polygon. Exact crossing-number computation with the usual
/// half-open vertex rule.
pub fn winding_number(polygon: &[RatPoint], p: &RatPoint) -> i64 {
    let mut winding = 0i64;
    let n = polygon.len();
    for i in 0..n {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % n];
        // orientation of (a,b,p)
        let orient = (&b.x - &a.x) * (&p.y - &a.y) - (&b.y - &a.y) * (&p.x - &a.x);
        if a.y <= p.y {
            if b.y > p.y && orient.is_positive() {
                winding += 1;
            }
        } else if b.y <= p.y && orient.is_negative() {
            winding -= 1;
        }
    }
    winding
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(x: i64, y: i64) -> IPoint {
        IPoint::new(x, y)
    }

    #[test]
    fn proper_crossing_of_diagonals() {
        let r = intersect_segments(ip(-2, -2), ip(2, 2), ip(-2, 2), ip(2, -2));
        match r {
            SegIntersection::Proper { at, t, u } => {
                assert_eq!(at, RatPoint::from_ints(0, 0));
                assert_eq!(t, Rat::new(BigInt::from(1), BigInt::from(2)));
                assert_eq!(u, Rat::new(BigInt::from(1), BigInt::from(2)));
            }
            other => panic!("expected proper crossing, got {other:?}"),
        }
    }

    #[test]
    fn parallel_and_collinear_cases() {
        assert_eq!(
            intersect_segments(ip(0, 0), ip(4, 0), ip(0, 1), ip(4, 1)),
            SegIntersection::None
        );
        assert_eq!(
            intersect_segments(ip(0, 0), ip(4, 0), ip(2, 0), ip(6, 0)),
            SegIntersection::Overlap
        );
        assert_eq!(
            intersect_segments(ip(0, 0), ip(4, 0), ip(4, 0), ip(6, 3)),
            SegIntersection::AtEndpoint {
                at: RatPoint::from_ints(4, 0)
            }
        );
    }

    #[test]
    fn endpoint_touch_on_interior() {
        // b0 lies in the interior of a
        let r = intersect_segments(ip(0, 0), ip(4, 4), ip(2, 2), ip(5, 0));
        assert_eq!(
            r,
            SegIntersection::AtEndpoint {
                at: RatPoint::from_ints(2, 2)
            }
        );
    }

    #[test]
    fn ccw_order_of_directions() {
        let mut dirs = vec![
            IVec::new(-1, -1),
            IVec::new(1, 1),
            IVec::new(-1, 1),
            IVec::new(1, -1),
        ];
        dirs.sort_by(|a, b| a.ccw_cmp(*b));
        assert_eq!(
            dirs,
            vec![
                IVec::new(1, 1),
                IVec::new(-1, 1),
                IVec::new(-1, -1),
                IVec::new(1, -1),
            ]
        );
    }

    #[test]
    fn winding_of_square() {
        let sq = vec![
            RatPoint::from_ints(-1, -1),
            RatPoint::from_ints(1, -1),
            RatPoint::from_ints(1, 1),
            RatPoint::from_ints(-1, 1),
        ];
        assert_eq!(winding_number(&sq, &RatPoint::from_ints(0, 0)), 1);
        assert_eq!(winding_number(&sq, &RatPoint::from_ints(3, 0)), 0);
        assert!(signed_area2(&sq) > Rat::zero());
    }
}
