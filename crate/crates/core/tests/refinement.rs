use num_traits::{One, Zero};
use proptest::prelude::*;

use subdivide_core::rational::{int, pow2, ratio, to_f64};
use subdivide_core::refine::{
    basic_limit_samples, nonzero_range, numeric_mask, refine_closed_seq, refine_cols, refine_curve,
    refine_rows, refine_surface, refine_window,
};
use subdivide_core::schemes::{bspline_mask, dd_mask};
use subdivide_core::{Grid, Polygon, Rational, SchemeSpec, Topology};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn alpha() -> impl Strategy<Value = Rational> {
    (-30i64..=10, 1i64..=10).prop_map(|(p, q)| ratio(p, q))
}

fn polygon(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(small_rational(), 2), len)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn affine_maps_commute_with_refinement(
        n in 1u32..=3,
        a in alpha(),
        pts in polygon(8..=10),
        m in prop::collection::vec(small_rational(), 6),
        open in any::<bool>(),
    ) {
        let topology = if open { Topology::Open } else { Topology::Closed };
        let spec = SchemeSpec::with_alpha(n, a).unwrap();
        let map = |p: &[Rational]| vec![&m[0] * &p[0] + &m[1] * &p[1] + &m[4], &m[2] * &p[0] + &m[3] * &p[1] + &m[5]];
        let lhs = refine_curve(&Polygon::new(pts.iter().map(|p| map(p)).collect(), topology), &spec, 2).unwrap();
        let rhs = refine_curve(&Polygon::new(pts, topology), &spec, 2).unwrap();
        let mapped: Vec<Vec<Rational>> = rhs.points.iter().map(|p| map(p)).collect();
        prop_assert_eq!(lhs.points, mapped);
    }

    #[test]
    fn refinement_is_linear(n in 1u32..=3, a in alpha(), p in polygon(8..=8), q in polygon(8..=8)) {
        let spec = SchemeSpec::with_alpha(n, a).unwrap();
        let sum: Vec<Vec<Rational>> = p.iter().zip(&q).map(|(x, y)| vec![&x[0] + &y[0], &x[1] + &y[1]]).collect();
        let rp = refine_curve(&Polygon::new(p, Topology::Closed), &spec, 1).unwrap();
        let rq = refine_curve(&Polygon::new(q, Topology::Closed), &spec, 1).unwrap();
        let rs = refine_curve(&Polygon::new(sum, Topology::Closed), &spec, 1).unwrap();
        for ((x, y), s) in rp.points.iter().zip(&rq.points).zip(&rs.points) {
            prop_assert_eq!(&(&x[0] + &y[0]), &s[0]);
            prop_assert_eq!(&(&x[1] + &y[1]), &s[1]);
        }
    }

    #[test]
    fn combined_rule_blends_parent_outputs(n in 1u32..=4, a in alpha(), data in prop::collection::vec(small_rational(), 12)) {
        let spec = SchemeSpec::with_alpha(n, a.clone()).unwrap();
        let got = refine_closed_seq(&data, &numeric_mask::<Rational>(&spec).unwrap());
        let r = refine_closed_seq(&data, &dd_mask(n).unwrap());
        let q = refine_closed_seq(&data, &bspline_mask(n).unwrap());
        let expected: Vec<Rational> = r.iter().zip(&q).map(|(r, q)| (Rational::one() + &a) * r - &a * q).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn surface_directions_commute(n in 1u32..=2, a in alpha(), pts in prop::collection::vec(prop::collection::vec(small_rational(), 3), 64)) {
        let spec = SchemeSpec::with_alpha(n, a).unwrap();
        let mask = numeric_mask::<Rational>(&spec).unwrap();
        let g = Grid { rows: 8, cols: 8, points: pts, row_topology: Topology::Closed, col_topology: Topology::Closed };
        prop_assert_eq!(refine_cols(&refine_rows(&g, &mask), &mask), refine_rows(&refine_cols(&g, &mask), &mask));
    }

    #[test]
    fn delta_mass_doubles(n in 1u32..=3, a in alpha(), k in 0u32..=4) {
        let samples = basic_limit_samples(n, &a, k).unwrap();
        let total: Rational = samples.values().sum();
        prop_assert_eq!(total, pow2(k));
    }
}

#[test]
fn interpolatory_parent_reproduces_polynomials() {
    for n in 1..=3u32 {
        let degree = 2 * n as i64 + 1;
        let poly = |x: &Rational| {
            (0..=degree)
                .rev()
                .fold(Rational::zero(), |acc, c| acc * x + int(c * c - 3))
        };
        let span = 2 * n as i64 + 1;
        let start = -span - 4;
        let data: Vec<Rational> = (start..=span + 4).map(|i| poly(&int(i))).collect();
        let mask = numeric_mask::<Rational>(&SchemeSpec::with_alpha(n, int(0)).unwrap()).unwrap();
        let (out, first) = refine_window(&data, start, &mask);
        assert!(!out.is_empty());
        for (k, v) in out.iter().enumerate() {
            assert_eq!(
                *v,
                poly(&ratio(first + k as i64, 2)),
                "n={n} index {}",
                first + k as i64
            );
        }
    }
}

#[test]
fn delta_support_grows_as_predicted() {
    for n in 1..=3u32 {
        let half = 2 * n as i64 + 1;
        for k in 1..=4u32 {
            let s = basic_limit_samples(n, &ratio(1, 5), k).unwrap();
            let e = ((1 << k) - 1) * half;
            assert_eq!(nonzero_range(&s), Some((-e, e)), "n={n} k={k}");
        }
    }
}

#[test]
fn interpolatory_delta_keeps_its_value() {
    let s = basic_limit_samples(1, &int(0), 3).unwrap();
    assert_eq!(s[&0], int(1));
    for i in [-16, -8, 8, 16] {
        assert_eq!(s.get(&i).cloned().unwrap_or_default(), int(0));
    }
}

#[test]
fn double_mode_tracks_exact_mode() {
    let pts: Vec<Vec<Rational>> = (0..9)
        .map(|i| vec![ratio(i * i % 7, 7), ratio((3 * i) % 5, 5)])
        .collect();
    let spec = SchemeSpec::with_alpha(2, ratio(-3, 4)).unwrap();
    let exact = refine_curve(&Polygon::new(pts.clone(), Topology::Closed), &spec, 6).unwrap();
    let float = refine_curve(&Polygon::new(pts, Topology::Closed).map(to_f64), &spec, 6).unwrap();
    for (e, f) in exact.points.iter().zip(&float.points) {
        for (x, y) in e.iter().zip(f) {
            assert!((to_f64(x) - y).abs() < 1e-9);
        }
    }
}

#[test]
fn surfaces_keep_constants_and_double() {
    let c = vec![ratio(1, 2), int(-3), int(7)];
    let g = Grid {
        rows: 8,
        cols: 6,
        points: vec![c.clone(); 48],
        row_topology: Topology::Closed,
        col_topology: Topology::Open,
    };
    let spec = SchemeSpec::with_alpha(1, ratio(-1, 3)).unwrap();
    let out = refine_surface(&g, &spec, 2).unwrap();
    assert_eq!((out.rows, out.cols), (29, 24));
    assert!(out.points.iter().all(|p| p == &c));
}
