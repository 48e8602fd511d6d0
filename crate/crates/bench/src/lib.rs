//! Inputs shared by the benchmarks.

use subdivide_core::rational::int;
use subdivide_core::{Grid, Polygon, Rational, Topology};

/// Closed polygon with `m` integer vertices on a lumpy circle.
pub fn lumpy_polygon(m: usize) -> Polygon<Rational> {
    let points = (0..m)
        .map(|i| {
            let t = i as f64 / m as f64 * std::f64::consts::TAU;
            let r = 100.0 + 20.0 * (3.0 * t).sin();
            vec![
                int((r * t.cos()).round() as i64),
                int((r * t.sin()).round() as i64),
            ]
        })
        .collect();
    Polygon::new(points, Topology::Closed)
}

/// Closed `side × side` grid shaped like a torus.
pub fn torus_grid(side: usize) -> Grid<Rational> {
    let mut points = Vec::with_capacity(side * side);
    for r in 0..side {
        for c in 0..side {
            let (u, v) = (
                r as f64 / side as f64 * std::f64::consts::TAU,
                c as f64 / side as f64 * std::f64::consts::TAU,
            );
            let ring = 40.0 + 15.0 * v.cos();
            points.push(vec![
                int((ring * u.cos()).round() as i64),
                int((ring * u.sin()).round() as i64),
                int((15.0 * v.sin()).round() as i64),
            ]);
        }
    }
    Grid {
        rows: side,
        cols: side,
        points,
        row_topology: Topology::Closed,
        col_topology: Topology::Closed,
    }
}
