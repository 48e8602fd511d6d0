//! Applying masks to data: curves, tensor-product surfaces and delta data.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::AlphaPoly;
use crate::rational::{int, to_f64, Rational};
use crate::schemes::{combined_mask, MaskPair, SchemeSpec};

/// Scalar type a mask can act on. Weights and values share the type.
pub trait Coord: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// `self += w * x`
    fn add_mul(&mut self, w: &Self, x: &Self);
}

impl Coord for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_mul(&mut self, w: &Self, x: &Self) {
        if !w.is_zero() && !x.is_zero() {
            *self += w * x;
        }
    }
}

impl Coord for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
    fn add_mul(&mut self, w: &Self, x: &Self) {
        *self += w * x;
    }
}

impl Coord for AlphaPoly {
    fn zero() -> Self {
        AlphaPoly::zero()
    }
    fn from_rational(r: &Rational) -> Self {
        AlphaPoly::constant(r.clone())
    }
    fn add_mul(&mut self, w: &Self, x: &Self) {
        *self += &(w * x);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Closed,
    Open,
}

/// Ordered control points of equal dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<T> {
    pub points: Vec<Vec<T>>,
    pub topology: Topology,
}

/// Row-major `rows × cols` control net.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    pub rows: usize,
    pub cols: usize,
    pub points: Vec<Vec<T>>,
    /// Topology along a row (the column index wraps when closed).
    pub row_topology: Topology,
    /// Topology along a column (the row index wraps when closed).
    pub col_topology: Topology,
}

impl<T: Coord> Polygon<T> {
    pub fn new(points: Vec<Vec<T>>, topology: Topology) -> Self {
        Polygon { points, topology }
    }

    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Polygon<U> {
        Polygon {
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(&f).collect())
                .collect(),
            topology: self.topology,
        }
    }
}

impl<T: Coord> Grid<T> {
    pub fn point(&self, r: usize, c: usize) -> &[T] {
        &self.points[r * self.cols + c]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Grid<U> {
        Grid {
            rows: self.rows,
            cols: self.cols,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(&f).collect())
                .collect(),
            row_topology: self.row_topology,
            col_topology: self.col_topology,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericMode {
    Exact,
    Double,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefineOptions {
    pub levels: u32,
    pub mode: NumericMode,
}

impl Default for RefineOptions {
    fn default() -> Self {
        RefineOptions {
            levels: 1,
            mode: NumericMode::Exact,
        }
    }
}

fn convert_mask<T: Coord>(mask: &MaskPair<Rational>) -> MaskPair<T> {
    mask.map(T::from_rational)
}

/// Numeric rules of `spec` in the coordinate type `T`.
pub fn numeric_mask<T: Coord>(spec: &SchemeSpec) -> Result<MaskPair<T>> {
    let alpha = spec.numeric_alpha()?;
    Ok(convert_mask(&combined_mask(spec.n)?.at(alpha)))
}

fn apply_rule<T: Coord>(taps: &[T], first: i64, get: impl Fn(i64) -> T) -> T {
    let mut acc = T::zero();
    for (t, w) in taps.iter().enumerate() {
        acc.add_mul(w, &get(first + t as i64));
    }
    acc
}

/// One level on periodic data.
pub fn refine_closed_seq<T: Coord>(data: &[T], mask: &MaskPair<T>) -> Vec<T> {
    let m = data.len() as i64;
    let n = mask.n as i64;
    let get = |j: i64| data[j.rem_euclid(m) as usize].clone();
    let mut out = Vec::with_capacity(2 * data.len());
    for i in 0..m {
        out.push(apply_rule(&mask.vertex, i - n, get));
        out.push(apply_rule(&mask.edge, i - n, get));
    }
    out
}

/// One level on an open sequence, `m` points to `2m - 1`.
///
/// Missing neighbours are phantom points reflected through the end point,
/// `P_{-j} = 2 P_0 - P_j`, and likewise at the far end.
pub fn refine_open_seq<T: Coord>(data: &[T], mask: &MaskPair<T>) -> Vec<T> {
    let m = data.len() as i64;
    let n = mask.n as i64;
    let two = T::from_rational(&int(2));
    let minus_one = T::from_rational(&int(-1));
    let get = |j: i64| -> T {
        let (anchor, mirror) = if j < 0 {
            (0, -j)
        } else if j >= m {
            (m - 1, 2 * (m - 1) - j)
        } else {
            return data[j as usize].clone();
        };
        let mut v = T::zero();
        v.add_mul(&two, &data[anchor as usize]);
        v.add_mul(&minus_one, &data[mirror as usize]);
        v
    };
    let mut out = Vec::with_capacity(2 * data.len() - 1);
    for i in 0..m {
        out.push(apply_rule(&mask.vertex, i - n, get));
        if i + 1 < m {
            out.push(apply_rule(&mask.edge, i - n, get));
        }
    }
    out
}

/// One level on data that vanishes outside `start..start+len`.
/// Returns the refined data and its first index.
pub fn refine_compact<T: Coord>(data: &[T], start: i64, mask: &MaskPair<T>) -> (Vec<T>, i64) {
    let span = 2 * mask.n as i64 + 1;
    let end = start + data.len() as i64 - 1;
    let (lo, hi) = (2 * start - span, 2 * end + span);
    let get = |j: i64| {
        if j < start || j > end {
            T::zero()
        } else {
            data[(j - start) as usize].clone()
        }
    };
    let out = (lo..=hi).map(|i| refine_at(i, mask, get)).collect();
    (out, lo)
}

/// One level on a window of infinite data, keeping only outputs whose
/// stencil lies entirely inside the window.
pub fn refine_window<T: Coord>(data: &[T], start: i64, mask: &MaskPair<T>) -> (Vec<T>, i64) {
    let span = 2 * mask.n as i64 + 1;
    let end = start + data.len() as i64 - 1;
    let (lo, hi) = (2 * start + span, 2 * end - span);
    let get = |j: i64| data[(j - start) as usize].clone();
    let out = if lo <= hi {
        (lo..=hi).map(|i| refine_at(i, mask, get)).collect()
    } else {
        Vec::new()
    };
    (out, lo)
}

/// `P^{k+1}_i` from level-k data given by `get`.
fn refine_at<T: Coord>(i: i64, mask: &MaskPair<T>, get: impl Fn(i64) -> T) -> T {
    let n = mask.n as i64;
    let half = i.div_euclid(2);
    if i.rem_euclid(2) == 0 {
        apply_rule(&mask.vertex, half - n, get)
    } else {
        apply_rule(&mask.edge, half - n, get)
    }
}

fn min_points(spec: &SchemeSpec) -> usize {
    spec.points() as usize
}

fn refine_seq<T: Coord>(data: &[T], topology: Topology, mask: &MaskPair<T>) -> Vec<T> {
    match topology {
        Topology::Closed => refine_closed_seq(data, mask),
        Topology::Open => refine_open_seq(data, mask),
    }
}

/// Coordinates as separate sequences.
fn columns<T: Clone>(points: &[Vec<T>]) -> Vec<Vec<T>> {
    let dim = points.first().map_or(0, Vec::len);
    (0..dim)
        .map(|d| points.iter().map(|p| p[d].clone()).collect())
        .collect()
}

fn from_columns<T: Clone>(cols: &[Vec<T>]) -> Vec<Vec<T>> {
    let count = cols.first().map_or(0, Vec::len);
    (0..count)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

fn refine_points<T: Coord>(
    points: &[Vec<T>],
    topology: Topology,
    mask: &MaskPair<T>,
) -> Vec<Vec<T>> {
    let refined: Vec<Vec<T>> = columns(points)
        .iter()
        .map(|c| refine_seq(c, topology, mask))
        .collect();
    from_columns(&refined)
}

/// Refines a polygon `levels` times with the scheme's numeric rules.
pub fn refine_curve<T: Coord>(
    p: &Polygon<T>,
    spec: &SchemeSpec,
    levels: u32,
) -> Result<Polygon<T>> {
    let mask = numeric_mask::<T>(spec)?;
    refine_curve_with(p, &mask, levels)
}

/// Same as [`refine_curve`] with explicit rules.
pub fn refine_curve_with<T: Coord>(
    p: &Polygon<T>,
    mask: &MaskPair<T>,
    levels: u32,
) -> Result<Polygon<T>> {
    let needed = 2 * mask.n as usize + 2;
    if p.points.len() < needed {
        return Err(Error::TooFewPoints {
            needed,
            got: p.points.len(),
        });
    }
    let mut points = p.points.clone();
    for _ in 0..levels {
        points = refine_points(&points, p.topology, mask);
    }
    Ok(Polygon {
        points,
        topology: p.topology,
    })
}

/// Exact or double-precision result of [`refine_curve_opts`].
#[derive(Debug, Clone, PartialEq)]
pub enum RefinedPolygon {
    Exact(Polygon<Rational>),
    Double(Polygon<f64>),
}

pub fn refine_curve_opts(
    p: &Polygon<Rational>,
    spec: &SchemeSpec,
    opts: RefineOptions,
) -> Result<RefinedPolygon> {
    Ok(match opts.mode {
        NumericMode::Exact => RefinedPolygon::Exact(refine_curve(p, spec, opts.levels)?),
        NumericMode::Double => {
            RefinedPolygon::Double(refine_curve(&p.map(to_f64), spec, opts.levels)?)
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum RefinedGrid {
    Exact(Grid<Rational>),
    Double(Grid<f64>),
}

pub fn refine_surface_opts(
    g: &Grid<Rational>,
    spec: &SchemeSpec,
    opts: RefineOptions,
) -> Result<RefinedGrid> {
    Ok(match opts.mode {
        NumericMode::Exact => RefinedGrid::Exact(refine_surface(g, spec, opts.levels)?),
        NumericMode::Double => {
            RefinedGrid::Double(refine_surface(&g.map(to_f64), spec, opts.levels)?)
        }
    })
}

fn check_grid<T>(g: &Grid<T>, needed: usize) -> Result<()> {
    for len in [g.cols, g.rows] {
        if len < needed {
            return Err(Error::TooFewPoints { needed, got: len });
        }
    }
    Ok(())
}

/// Refines every row (along the column index).
pub fn refine_rows<T: Coord>(g: &Grid<T>, mask: &MaskPair<T>) -> Grid<T> {
    let mut points = Vec::new();
    let mut cols = 0;
    for r in 0..g.rows {
        let row = &g.points[r * g.cols..(r + 1) * g.cols];
        let refined = refine_points(row, g.row_topology, mask);
        cols = refined.len();
        points.extend(refined);
    }
    Grid {
        rows: g.rows,
        cols,
        points,
        row_topology: g.row_topology,
        col_topology: g.col_topology,
    }
}

/// Refines every column (along the row index).
pub fn refine_cols<T: Coord>(g: &Grid<T>, mask: &MaskPair<T>) -> Grid<T> {
    let refined_cols: Vec<Vec<Vec<T>>> = (0..g.cols)
        .map(|c| {
            let column: Vec<Vec<T>> = (0..g.rows).map(|r| g.point(r, c).to_vec()).collect();
            refine_points(&column, g.col_topology, mask)
        })
        .collect();
    let rows = refined_cols.first().map_or(0, Vec::len);
    let mut points = Vec::with_capacity(rows * g.cols);
    for r in 0..rows {
        for col in &refined_cols {
            points.push(col[r].clone());
        }
    }
    Grid {
        rows,
        cols: g.cols,
        points,
        row_topology: g.row_topology,
        col_topology: g.col_topology,
    }
}

/// Tensor-product refinement: rows first, then columns, per level.
pub fn refine_surface<T: Coord>(g: &Grid<T>, spec: &SchemeSpec, levels: u32) -> Result<Grid<T>> {
    let mask = numeric_mask::<T>(spec)?;
    check_grid(g, min_points(spec))?;
    let mut current = g.clone();
    for _ in 0..levels {
        current = refine_cols(&refine_rows(&current, &mask), &mask);
    }
    Ok(current)
}

/// Samples `φ(i / 2^levels)` of the basic limit function, obtained by
/// refining the delta sequence; every index in the computed window is
/// present (zeros included).
pub fn basic_limit_samples(
    n: u32,
    alpha: &Rational,
    levels: u32,
) -> Result<BTreeMap<i64, Rational>> {
    let mask = combined_mask(n)?.at(alpha);
    let mut data = vec![Rational::from_integer(1.into())];
    let mut start = 0i64;
    for _ in 0..levels {
        let (next, s) = refine_compact(&data, start, &mask);
        data = next;
        start = s;
    }
    Ok(data
        .into_iter()
        .enumerate()
        .map(|(k, v)| (start + k as i64, v))
        .collect())
}

/// Smallest and largest index holding a nonzero sample.
pub fn nonzero_range(samples: &BTreeMap<i64, Rational>) -> Option<(i64, i64)> {
    let mut nz = samples
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, _)| *k);
    let first = nz.next()?;
    Some((first, nz.next_back().unwrap_or(first)))
}
