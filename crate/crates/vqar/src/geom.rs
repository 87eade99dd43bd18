//! Small vector and polygon helpers shared across the crate.
//!
//! Points are plain `Vec<f64>` so the pipeline stays dimension-generic;
//! the polygon routines are 2-d only.

/// A point in R^d.
pub type Point = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], c: f64) -> Point {
    a.iter().map(|x| c * x).collect()
}

pub fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

pub fn is_finite(a: &[f64]) -> bool {
    a.iter().all(|x| x.is_finite())
}

/// Rotate a 2-d point counterclockwise by `angle` radians.
pub fn rotate2(p: &[f64], angle: f64) -> Point {
    let (s, c) = angle.sin_cos();
    vec![c * p[0] - s * p[1], s * p[0] + c * p[1]]
}

/// Signed area of a closed polygon (vertices in order, not repeated).
pub fn polygon_signed_area(poly: &[Point]) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        let p = &poly[i];
        let q = &poly[(i + 1) % n];
        acc += p[0] * q[1] - q[0] * p[1];
    }
    0.5 * acc
}

pub fn polygon_area(poly: &[Point]) -> f64 {
    polygon_signed_area(poly).abs()
}

/// Area of the convex hull of a 2-d point set (Andrew's monotone chain).
pub fn convex_hull_area(points: &[Point]) -> f64 {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| (p[0], p[1])).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    let n = pts.len();
    if n < 3 {
        return 0.0;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * n);
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    let hull_pts: Vec<Point> = hull.iter().map(|&(x, y)| vec![x, y]).collect();
    polygon_area(&hull_pts)
}

fn point_segment_dist(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let (apx, apy) = (p.0 - a.0, p.1 - a.1);
    let len_sq = abx * abx + aby * aby;
    let t = if len_sq > 0.0 {
        ((apx * abx + apy * aby) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (dx, dy) = (apx - t * abx, apy - t * aby);
    (dx * dx + dy * dy).sqrt()
}

/// Even-odd point-in-polygon test. Points within `boundary_tol` of an
/// edge count as inside.
pub fn point_in_polygon(poly: &[Point], p: &[f64], boundary_tol: f64) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let (px, py) = (p[0], p[1]);
    for i in 0..n {
        let a = (poly[i][0], poly[i][1]);
        let b = (poly[(i + 1) % n][0], poly[(i + 1) % n][1]);
        if point_segment_dist((px, py), a, b) <= boundary_tol {
            return true;
        }
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (xi, yi) = (poly[i][0], poly[i][1]);
        let (xj, yj) = (poly[j][0], poly[j][1]);
        if (yi > py) != (yj > py) {
            let x_cross = xi + (py - yi) / (yj - yi) * (xj - xi);
            if px < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_area() {
        let sq = vec![vec![0., 0.], vec![1., 0.], vec![1., 1.], vec![0., 1.]];
        assert!((polygon_area(&sq) - 1.0).abs() < 1e-15);
        assert!((convex_hull_area(&sq) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn point_in_square() {
        let sq = vec![vec![0., 0.], vec![1., 0.], vec![1., 1.], vec![0., 1.]];
        assert!(point_in_polygon(&sq, &[0.5, 0.5], 1e-12));
        assert!(!point_in_polygon(&sq, &[1.5, 0.5], 1e-12));
        // boundary point counts as inside
        assert!(point_in_polygon(&sq, &[1.0, 0.5], 1e-12));
    }

    #[test]
    fn hull_of_nonconvex_exceeds_polygon() {
        // a "dented" square
        let poly = vec![
            vec![0., 0.],
            vec![2., 0.],
            vec![2., 2.],
            vec![1., 0.5],
            vec![0., 2.],
        ];
        assert!(convex_hull_area(&poly) > polygon_area(&poly) + 0.5);
    }
}
