//! Planar convex hull and the hull-vertex pair with the largest cross
//! product about the origin.

use crate::scalar::Scalar;

/// A planar point tagged with the index of the unit vector it came from and
/// the sign applied to that vector.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HullPoint<T> {
    pub x: T,
    pub y: T,
    pub source: usize,
    pub negated: bool,
}

fn turn<T: Scalar>(o: &HullPoint<T>, a: &HullPoint<T>, b: &HullPoint<T>) -> T {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

pub(crate) fn cross<T: Scalar>(a: &HullPoint<T>, b: &HullPoint<T>) -> T {
    a.x * b.y - a.y * b.x
}

/// Monotone-chain convex hull, counterclockwise, first vertex not repeated.
/// Collinear boundary points are dropped.
pub(crate) fn convex_hull<T: Scalar>(mut points: Vec<HullPoint<T>>) -> Vec<HullPoint<T>> {
    points.sort_unstable_by(|a, b| {
        (a.x, a.y)
            .partial_cmp(&(b.x, b.y))
            .expect("hull points are finite")
    });
    points.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    let n = points.len();
    if n <= 2 {
        return points;
    }
    let mut hull: Vec<HullPoint<T>> = Vec::with_capacity(2 * n);
    // lower chain
    for &p in &points {
        while hull.len() >= 2
            && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= T::zero()
        {
            hull.pop();
        }
        hull.push(p);
    }
    // upper chain
    let lower_len = hull.len() + 1;
    for &p in points.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= T::zero()
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// The `top` best vertex pairs by `cross(v_i, v_j)`, best first.
///
/// For a fixed first vertex the objective is a linear functional of the
/// second, so its maximizer over the (convex) hull advances monotonically as
/// the first vertex advances: one rotation of two indices visits the best
/// partner of every vertex. The point set is centrally symmetric here, so the
/// signed maximum equals the maximum absolute value.
pub(crate) fn max_cross_pairs<T: Scalar>(
    hull: &[HullPoint<T>],
    top: usize,
) -> Vec<(usize, usize, T)> {
    let h = hull.len();
    if h < 2 || top == 0 {
        return Vec::new();
    }
    let mut per_start: Vec<(usize, usize, T)> = Vec::with_capacity(h);
    let consider = |i: usize, j: usize, per_start: &mut Vec<(usize, usize, T)>| {
        let c = cross(&hull[i], &hull[j]);
        match per_start.last_mut() {
            Some(entry) if entry.0 == i => {
                if c > entry.2 {
                    *entry = (i, j, c);
                }
            }
            _ => per_start.push((i, j, c)),
        }
    };
    // argmax of cross(v_0, .) by full scan, then rotate both indices
    let mut j = 0;
    for cand in 1..h {
        if cross(&hull[0], &hull[cand]) > cross(&hull[0], &hull[j]) {
            j = cand;
        }
    }
    let mut advances = 0usize;
    for i in 0..h {
        consider(i, j, &mut per_start);
        while advances <= 4 * h {
            let next = (j + 1) % h;
            if cross(&hull[i], &hull[next]) > cross(&hull[i], &hull[j]) {
                j = next;
                advances += 1;
                consider(i, j, &mut per_start);
            } else {
                break;
            }
        }
    }
    per_start.sort_by(|a, b| {
        b.2.partial_cmp(&a.2)
            .expect("cross products are finite")
            .then(a.0.cmp(&b.0))
            .then(a.1.cmp(&b.1))
    });
    per_start.truncate(top);
    per_start
}


#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> HullPoint<f64> {
        HullPoint {
            x,
            y,
            source: 0,
            negated: false,
        }
    }

    #[test]
    fn hull_of_square_with_interior_points() {
        let pts = vec![
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
            pt(0.5, 0.5),
            pt(0.25, 0.75),
            pt(0.5, 0.0), // collinear on an edge
        ];
        let hull = convex_hull(pts);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn hull_handles_degenerate_inputs() {
        assert_eq!(convex_hull::<f64>(vec![]).len(), 0);
        assert_eq!(convex_hull(vec![pt(1.0, 2.0)]).len(), 1);
        // all collinear
        let hull = convex_hull(vec![pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0), pt(3.0, 3.0)]);
        assert_eq!(hull.len(), 2);
    }

    #[test]
    fn max_cross_on_symmetric_square() {
        // vertices of [-1,1]^2: best pair has cross product 2
        let pts = vec![
            pt(1.0, 1.0),
            pt(1.0, -1.0),
            pt(-1.0, 1.0),
            pt(-1.0, -1.0),
        ];
        let hull = convex_hull(pts);
        let (_, _, c) = max_cross_pairs(&hull, 1)[0];
        assert_eq!(c, 2.0);
    }

    #[test]
    fn max_cross_matches_exhaustive_scan_on_random_cloud() {
        let mut rng = crate::rng::SplitMix64::new(99);
        for _ in 0..50 {
            let mut pts = Vec::new();
            for s in 0..60 {
                let x = rng.next_unit() * 4.0 - 2.0;
                let y = rng.next_unit() * 4.0 - 2.0;
                pts.push(HullPoint {
                    x,
                    y,
                    source: s,
                    negated: false,
                });
                pts.push(HullPoint {
                    x: -x,
                    y: -y,
                    source: s,
                    negated: true,
                });
            }
            let hull = convex_hull(pts);
            let (_, _, fast) = max_cross_pairs(&hull, 1)[0];
            let mut brute = f64::NEG_INFINITY;
            for a in &hull {
                for b in &hull {
                    brute = brute.max(cross(a, b));
                }
            }
            assert!(
                (fast - brute).abs() <= 1e-12 * brute.abs().max(1.0),
                "fast {fast} vs brute {brute}"
            );
        }
    }
}
