//! Exact analysis of the combined family: smoothness, polynomial
//! generation and reproduction, Gibbs behaviour near a jump, bell-shaped
//! masks and support.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::inequality::{less_than_set, positive_set, solve_abs_sum_lt};
use crate::interval::{Bound, IntervalSet};
use crate::laurent::{LaurentSymbol, UnitPoint};
use crate::poly::AlphaPoly;
use crate::rational::{int, pow2, ratio, Rational};
use crate::refine::refine_window;
use crate::roots::default_width;
use crate::schemes::{bspline_symbol, combined_mask, scheme_symbol, SchemeSpec};

/// `a(1) = 2` and `a(-1) = 0` for every α.
pub fn check_sum_rule(spec: &SchemeSpec) -> Result<bool> {
    Ok(scheme_symbol(spec)?.satisfies_sum_rule())
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::BadIndex(format!("n must be at least 1, got {n}")));
    }
    Ok(())
}

fn symbolic_symbol(n: u32) -> Result<LaurentSymbol> {
    scheme_symbol(&SchemeSpec::symbolic(n)?)
}

/// `c(z) = 2^j a(z) / (1+z)^(j+1)`, or `None` when the factor is missing.
pub fn difference_symbol(a: &LaurentSymbol, j: u32) -> Option<LaurentSymbol> {
    a.divide_linear(j as usize + 1)
        .ok()
        .map(|q| q.scale_rational(&pow2(j)))
}

/// `c(z) c(z^2) ... c(z^(2^(L-1)))`.
pub fn iterated_symbol(c: &LaurentSymbol, levels: u32) -> LaurentSymbol {
    (0..levels).fold(LaurentSymbol::one(), |acc, i| acc.mul(&c.upsample(1 << i)))
}

/// Coefficients of `c` grouped by exponent modulo `2^L`.
pub fn residue_classes(c: &LaurentSymbol, levels: u32) -> Vec<Vec<AlphaPoly>> {
    let modulus = 1i64 << levels;
    let mut classes = vec![Vec::new(); modulus as usize];
    for (e, coeff) in c.terms() {
        classes[e.rem_euclid(modulus) as usize].push(coeff.clone());
    }
    classes
}

/// `max_l Σ_m |c^L_{2^L m + l}|` for a numeric symbol.
fn numeric_norm(c: &LaurentSymbol, levels: u32, alpha: &Rational) -> Rational {
    residue_classes(&iterated_symbol(c, levels), levels)
        .iter()
        .map(|class| class.iter().map(|p| p.eval(alpha).abs()).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// The norm whose value below 1 certifies `C^j` at the given α, or `None`
/// when `a(z)` lacks the factor `(1+z)^(j+1)` there.
pub fn contractivity_norm(
    n: u32,
    levels: u32,
    j: u32,
    alpha: &Rational,
) -> Result<Option<Rational>> {
    check_n(n)?;
    let a = scheme_symbol(&SchemeSpec::with_alpha(n, alpha.clone())?)?.specialize(alpha);
    Ok(difference_symbol(&a, j).map(|c| numeric_norm(&c, levels, alpha)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContinuityRow {
    /// Smoothness order `j` of `C^j`.
    pub order: u32,
    /// α for which the symbolic test certifies `C^j`.
    pub set: IntervalSet,
    /// Whether the B-spline parent (α = -1) is `C^j`.
    pub at_minus_one: bool,
}

impl ContinuityRow {
    pub fn label(&self) -> String {
        format!("C{}", self.order)
    }

    /// Certified only at α = -1.
    pub fn minus_one_only(&self) -> bool {
        self.set.is_empty() && self.at_minus_one
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContinuityReport {
    pub n: u32,
    pub levels: u32,
    pub rows: Vec<ContinuityRow>,
    /// Largest order certified for the B-spline parent.
    pub alpha_minus_one_order: Option<u32>,
}

impl ContinuityReport {
    pub fn row(&self, order: u32) -> Option<&ContinuityRow> {
        self.rows.iter().find(|r| r.order == order)
    }
}

/// Continuity ranges from contractivity of the `L`-fold difference schemes.
///
/// Orders `0..=2n+1` are solved symbolically in α. The B-spline parent is
/// tested separately up to `4n+1`; orders past `2n+1` that it passes are
/// listed with an empty symbolic set.
pub fn continuity_intervals(n: u32, levels: u32) -> Result<ContinuityReport> {
    continuity_intervals_with_width(n, levels, &default_width())
}

pub fn continuity_intervals_with_width(
    n: u32,
    levels: u32,
    width: &Rational,
) -> Result<ContinuityReport> {
    check_n(n)?;
    if levels == 0 {
        return Err(Error::BadIndex("L must be at least 1".into()));
    }
    let a = symbolic_symbol(n)?;
    let spline = bspline_symbol(n)?;
    let minus_one = -Rational::one();
    let passes_at_minus_one = |j: u32| {
        difference_symbol(&spline, j)
            .map(|c| numeric_norm(&c, levels, &minus_one) < Rational::one())
            .unwrap_or(false)
    };
    let alpha_minus_one_order = (0..=4 * n + 1)
        .take_while(|&j| passes_at_minus_one(j))
        .last();

    let symbolic_top = 2 * n + 1;
    let top = alpha_minus_one_order.map_or(symbolic_top, |o| o.max(symbolic_top));
    let mut rows = Vec::new();
    for j in 0..=top {
        let set = if j <= symbolic_top {
            let c = difference_symbol(&a, j).ok_or(Error::NonDivisible {
                order: j as usize + 1,
            })?;
            let classes = residue_classes(&iterated_symbol(&c, levels), levels);
            let sets: Vec<IntervalSet> = classes
                .iter()
                .map(|class| solve_abs_sum_lt(class, &Rational::one()))
                .collect();
            IntervalSet::intersect_all(&sets).refined(width)
        } else {
            IntervalSet::empty()
        };
        rows.push(ContinuityRow {
            order: j,
            set,
            at_minus_one: alpha_minus_one_order.is_some_and(|o| j <= o),
        });
    }
    Ok(ContinuityReport {
        n,
        levels,
        rows,
        alpha_minus_one_order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeKind {
    Generation,
    Reproduction,
}

impl fmt::Display for DegreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeKind::Generation => "generation",
            DegreeKind::Reproduction => "reproduction",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeReport {
    pub kind: DegreeKind,
    pub degree_all_alpha: i64,
    pub degree_special: i64,
    pub special_alpha: Rational,
}

/// Largest `d` with `a^(i)(-1) = 0` for all `i ≤ d`; -1 if `a(-1) ≠ 0`.
pub fn generation_degree_of(a: &LaurentSymbol) -> i64 {
    let mut d = a.clone();
    let mut degree = -1;
    while !d.is_zero() && d.eval_z(UnitPoint::MinusOne).is_zero() {
        degree += 1;
        d = d.derivative();
    }
    degree
}

/// Largest `d ≤ bound` such that for all `i ≤ d`
/// `a^(i)(1) = 2 Π_{p<i} (τ - p)` and `a^(i)(-1) = 0`, with `τ = a'(1)/2`.
pub fn reproduction_degree_of(a: &LaurentSymbol, bound: u32) -> i64 {
    let tau = a
        .derivative()
        .eval_z(UnitPoint::PlusOne)
        .scale(&ratio(1, 2));
    let mut d = a.clone();
    let mut target = AlphaPoly::constant(int(2));
    let mut degree = -1;
    for i in 0..=bound {
        let ok = d.eval_z(UnitPoint::PlusOne) == target && d.eval_z(UnitPoint::MinusOne).is_zero();
        if !ok {
            break;
        }
        degree = i as i64;
        target = &target * &(&tau - &AlphaPoly::constant(int(i as i64)));
        d = d.derivative();
    }
    degree
}

/// Polynomial generation for every α and for the B-spline parent.
pub fn generation_degree(n: u32) -> Result<DegreeReport> {
    check_n(n)?;
    Ok(DegreeReport {
        kind: DegreeKind::Generation,
        degree_all_alpha: generation_degree_of(&symbolic_symbol(n)?),
        degree_special: generation_degree_of(&bspline_symbol(n)?),
        special_alpha: -Rational::one(),
    })
}

/// Polynomial reproduction for every α and for the interpolatory parent.
pub fn reproduction_degree(n: u32) -> Result<DegreeReport> {
    check_n(n)?;
    let a = symbolic_symbol(n)?;
    let bound = 4 * n + 3;
    Ok(DegreeReport {
        kind: DegreeKind::Reproduction,
        degree_all_alpha: reproduction_degree_of(&a, bound),
        degree_special: reproduction_degree_of(&a.specialize(&Rational::zero()), bound),
        special_alpha: Rational::zero(),
    })
}

/// Step height of the jump data used by [`gibbs_intervals`].
pub const GIBBS_STEP: i64 = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct GibbsReport {
    pub n: u32,
    pub k: u32,
    pub interval: IntervalSet,
    /// Refined values next to the jump, as polynomials in α.
    pub tracked_minus: AlphaPoly,
    pub tracked_plus: AlphaPoly,
}

impl GibbsReport {
    /// Whether the set lies in α < 0.
    pub fn negative_only(&self) -> bool {
        !self
            .interval
            .hull()
            .is_some_and(|(_, hi)| *hi > Bound::rational(Rational::zero()))
    }
}

/// α for which `k+1` levels of refinement of the jump
/// `+10 (i ≤ -1), -10 (i ≥ 0)` stay strictly inside `(-10, 10)` at the
/// descendants of the two points adjacent to the jump.
pub fn gibbs_intervals(n: u32, k: u32) -> Result<GibbsReport> {
    gibbs_intervals_with_width(n, k, &default_width())
}

pub fn gibbs_intervals_with_width(n: u32, k: u32, width: &Rational) -> Result<GibbsReport> {
    check_n(n)?;
    let mask = combined_mask(n)?;
    let levels = k + 1;
    let span = 2 * n as i64 + 1;
    let half = 2 * span + 2;
    let high = AlphaPoly::constant(int(GIBBS_STEP));
    let low = AlphaPoly::constant(int(-GIBBS_STEP));
    let mut start = -half;
    let mut data: Vec<AlphaPoly> = (-half..half)
        .map(|i| if i < 0 { high.clone() } else { low.clone() })
        .collect();
    for _ in 0..levels {
        let (next, s) = refine_window(&data, start, &mask);
        data = next;
        start = s;
    }
    let at = |i: i64| -> Result<AlphaPoly> {
        usize::try_from(i - start)
            .ok()
            .and_then(|k| data.get(k).cloned())
            .ok_or_else(|| Error::BadIndex(format!("index {i} outside the refined window")))
    };
    let tracked_minus = at(-(1i64 << levels))?;
    let tracked_plus = at(0)?;
    let below_top = less_than_set(&tracked_minus, &high);
    let above_bottom = less_than_set(&low, &tracked_plus);
    Ok(GibbsReport {
        n,
        k,
        interval: below_top.intersect(&above_bottom).refined(width),
        tracked_minus,
        tracked_plus,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BellReport {
    pub n: u32,
    /// Every mask coefficient positive.
    pub positivity: IntervalSet,
    /// Coefficients increasing up to the centre.
    pub monotone_rise: IntervalSet,
    pub bell: IntervalSet,
}

/// α for which the mask is bell shaped.
pub fn bell_intervals(n: u32) -> Result<BellReport> {
    check_n(n)?;
    let coeffs = symbolic_symbol(n)?.dense();
    let positive: Vec<IntervalSet> = coeffs.iter().map(positive_set).collect();
    let rising: Vec<IntervalSet> = coeffs
        .windows(2)
        .take(2 * n as usize + 1)
        .map(|w| less_than_set(&w[0], &w[1]))
        .collect();
    let positivity = IntervalSet::intersect_all(&positive);
    let monotone_rise = IntervalSet::intersect_all(&rising);
    let bell = positivity.intersect(&monotone_rise);
    Ok(BellReport {
        n,
        positivity,
        monotone_rise,
        bell,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Support {
    pub n: u32,
    /// `supp φ = [-half_width, half_width]`.
    pub half_width: i64,
}

impl Support {
    /// Nonzero indices after `k` levels of refining a delta lie in `±` this.
    pub fn level_extent(&self, k: u32) -> i64 {
        ((1i64 << k) - 1) * self.half_width
    }
}

pub fn support(n: u32) -> Result<Support> {
    check_n(n)?;
    Ok(Support {
        n,
        half_width: 2 * n as i64 + 1,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeReport {
    pub n: u32,
    /// α range where monotonicity and convexity are preserved.
    pub interval: IntervalSet,
    pub sum_rule: bool,
    /// `a(z)` is divisible by `(1+z)^2` for every α.
    pub square_factor: bool,
    pub bell: BellReport,
}

impl ShapeReport {
    pub fn verdict(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        format!(
            "bell-shaped mask for alpha in {}; sum rule: {}; (1+z)^2 factor: {}; monotonicity and convexity preserved for alpha in {}",
            self.bell.bell,
            yes_no(self.sum_rule),
            yes_no(self.square_factor),
            self.interval
        )
    }
}

pub fn shape_report(n: u32) -> Result<ShapeReport> {
    let bell = bell_intervals(n)?;
    let a = symbolic_symbol(n)?;
    let sum_rule = a.satisfies_sum_rule();
    let square_factor = a.divide_linear(2).is_ok();
    let interval = if sum_rule && square_factor {
        bell.bell.clone()
    } else {
        IntervalSet::empty()
    };
    Ok(ShapeReport {
        n,
        interval,
        sum_rule,
        square_factor,
        bell,
    })
}

/// Mask coefficients `a_j` at a given α, keyed by exponent.
pub fn mask_at(n: u32, alpha: &Rational) -> Result<BTreeMap<i64, Rational>> {
    Ok(symbolic_symbol(n)?.alpha_eval(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn reports_are_thread_safe() {
        assert_send_sync::<ContinuityReport>();
        assert_send_sync::<DegreeReport>();
        assert_send_sync::<GibbsReport>();
        assert_send_sync::<BellReport>();
        assert_send_sync::<ShapeReport>();
    }

    #[test]
    fn sum_rule() {
        for n in 1..=3 {
            assert!(check_sum_rule(&SchemeSpec::symbolic(n).unwrap()).unwrap());
        }
        let half = LaurentSymbol::from_rationals(0, [int(1), int(1)]);
        assert!(half.satisfies_sum_rule());
        let bad = LaurentSymbol::from_rationals(0, [ratio(1, 2), ratio(1, 2)]);
        assert!(!bad.satisfies_sum_rule());
    }

    #[test]
    fn continuity_n1_l1() {
        let r = continuity_intervals(1, 1).unwrap();
        assert_eq!(r.rows[0].set, IntervalSet::rational(int(-4), ratio(4, 3)));
        assert_eq!(r.rows[1].set, IntervalSet::rational(ratio(-8, 3), int(0)));
        assert_eq!(r.rows[2].set, IntervalSet::rational(ratio(-8, 3), int(0)));
        assert_eq!(
            r.rows[3].set,
            IntervalSet::rational(ratio(-4, 3), ratio(-2, 3))
        );
        assert_eq!(r.alpha_minus_one_order, Some(4));
        assert!(r.rows[4].minus_one_only());
        assert_eq!(r.rows.len(), 5);
    }

    #[test]
    fn norm_at_sample_points() {
        let inside = contractivity_norm(1, 1, 0, &int(1)).unwrap().unwrap();
        assert!(inside < Rational::one());
        let outside = contractivity_norm(1, 1, 0, &int(2)).unwrap().unwrap();
        assert!(outside >= Rational::one());
    }

    #[test]
    fn degrees_n1() {
        let g = generation_degree(1).unwrap();
        assert_eq!((g.degree_all_alpha, g.degree_special), (3, 5));
        let r = reproduction_degree(1).unwrap();
        assert_eq!((r.degree_all_alpha, r.degree_special), (1, 3));
        assert_eq!(
            generation_degree_of(&LaurentSymbol::from_rationals(0, [int(1)])),
            -1
        );
    }

    #[test]
    fn gibbs_k0_is_negative_half_line() {
        for n in 1..=3 {
            let g = gibbs_intervals(n, 0).unwrap();
            assert_eq!(
                g.interval,
                IntervalSet::single(Bound::NegInf, Bound::rational(Rational::zero()))
            );
            assert!(g.negative_only());
        }
    }

    #[test]
    fn bell_n1() {
        let b = bell_intervals(1).unwrap();
        assert_eq!(
            b.positivity,
            IntervalSet::rational(ratio(-8, 3), ratio(-2, 3))
        );
        assert_eq!(
            b.monotone_rise,
            IntervalSet::rational(ratio(-14, 9), ratio(2, 3))
        );
        assert_eq!(b.bell, IntervalSet::rational(ratio(-14, 9), ratio(-2, 3)));
        let s = shape_report(1).unwrap();
        assert!(s.sum_rule && s.square_factor);
        assert_eq!(s.interval, b.bell);
    }

    #[test]
    fn support_extent() {
        let s = support(1).unwrap();
        assert_eq!(s.half_width, 3);
        assert_eq!(s.level_extent(2), 9);
        assert!(support(0).is_err());
    }
}
