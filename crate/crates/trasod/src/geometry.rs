//! Planar geometric primitives: distance, point-in-polygon, path length,
//! and the segment tests backing region validation and overlap checks.

use crate::model::{Region, TrajectoryPoint};

/// Points within this distance of a region edge count as inside.
pub const EDGE_TOLERANCE: f64 = 1e-9;

/// Euclidean distance between two points.
pub fn dist(p: &TrajectoryPoint, q: &TrajectoryPoint) -> f64 {
    dist_sq(p, q).sqrt()
}

/// Squared distance; spares the square root in hot comparison loops.
pub fn dist_sq(p: &TrajectoryPoint, q: &TrajectoryPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// Sum of segment lengths along a point sequence. Zero for fewer than two points.
pub fn path_length(points: &[TrajectoryPoint]) -> f64 {
    points.windows(2).map(|w| dist(&w[0], &w[1])).sum()
}

/// Boundary-inclusive point-in-polygon test.
pub fn point_in_region(p: &TrajectoryPoint, region: &Region) -> bool {
    if !region.bbox().contains(p.x, p.y, EDGE_TOLERANCE) {
        return false;
    }
    point_in_ring(p.x, p.y, region.ring())
}

/// Even-odd ray casting over an unclosed ring, with points on the boundary
/// (within `EDGE_TOLERANCE`) counted as inside.
pub(crate) fn point_in_ring(x: f64, y: f64, ring: &[(f64, f64)]) -> bool {
    let n = ring.len();
    let tol_sq = EDGE_TOLERANCE * EDGE_TOLERANCE;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        if point_segment_dist_sq(x, y, a, b) <= tol_sq {
            return true;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let (xi, yi) = ring[i];
        let (xj, yj) = ring[(i + 1) % n];
        // Half-open vertical range so a crossing through a vertex counts once.
        if (yi > y) != (yj > y) {
            let x_cross = xi + (y - yi) * (xj - xi) / (yj - yi);
            if x < x_cross {
                inside = !inside;
            }
        }
    }
    inside
}

/// Squared distance from a point to a segment.
pub(crate) fn point_segment_dist_sq(x: f64, y: f64, a: (f64, f64), b: (f64, f64)) -> f64 {
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let len_sq = abx * abx + aby * aby;
    let t = if len_sq == 0.0 {
        0.0
    } else {
        (((x - a.0) * abx + (y - a.1) * aby) / len_sq).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.0 + t * abx, a.1 + t * aby);
    let (dx, dy) = (x - cx, y - cy);
    dx * dx + dy * dy
}

fn orientation(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Whether two closed segments share at least one point. Touching endpoints count.
pub(crate) fn segments_intersect(
    p1: (f64, f64),
    p2: (f64, f64),
    q1: (f64, f64),
    q2: (f64, f64),
) -> bool {
    let d1 = orientation(q1, q2, p1);
    let d2 = orientation(q1, q2, p2);
    let d3 = orientation(p1, p2, q1);
    let d4 = orientation(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Whether an unclosed ring is free of self-intersections. Edges sharing an
/// endpoint are adjacent and skipped.
pub(crate) fn ring_is_simple(ring: &[(f64, f64)]) -> bool {
    let n = ring.len();
    for i in 0..n {
        let a1 = ring[i];
        let a2 = ring[(i + 1) % n];
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let b1 = ring[j];
            let b2 = ring[(j + 1) % n];
            if segments_intersect(a1, a2, b1, b2) {
                return false;
            }
        }
    }
    true
}

/// Whether two regions touch or overlap: any vertex containment in either
/// direction, or any pair of boundary edges crossing.
pub fn regions_intersect(a: &Region, b: &Region) -> bool {
    if !a.bbox().overlaps(&b.bbox(), EDGE_TOLERANCE) {
        return false;
    }
    let inside = |ring: &[(f64, f64)], other: &Region| {
        ring.iter().any(|&(x, y)| point_in_ring(x, y, other.ring()))
    };
    if inside(a.ring(), b) || inside(b.ring(), a) {
        return true;
    }
    let (ra, rb) = (a.ring(), b.ring());
    let (na, nb) = (ra.len(), rb.len());
    for i in 0..na {
        for j in 0..nb {
            if segments_intersect(ra[i], ra[(i + 1) % na], rb[j], rb[(j + 1) % nb]) {
                return true;
            }
        }
    }
    false
}

/// Axis-aligned bounding box, used to short-circuit containment tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bbox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Bbox {
    pub(crate) fn of_ring(ring: &[(f64, f64)]) -> Self {
        let mut b = Bbox {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        };
        for &(x, y) in ring {
            b.min_x = b.min_x.min(x);
            b.min_y = b.min_y.min(y);
            b.max_x = b.max_x.max(x);
            b.max_y = b.max_y.max(y);
        }
        b
    }

    pub fn contains(&self, x: f64, y: f64, slack: f64) -> bool {
        x >= self.min_x - slack
            && x <= self.max_x + slack
            && y >= self.min_y - slack
            && y <= self.max_y + slack
    }

    pub(crate) fn overlaps(&self, other: &Bbox, slack: f64) -> bool {
        self.min_x <= other.max_x + slack
            && other.min_x <= self.max_x + slack
            && self.min_y <= other.max_y + slack
            && other.min_y <= self.max_y + slack
    }
}
