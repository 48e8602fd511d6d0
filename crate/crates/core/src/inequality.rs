//! Exact solution sets of strict polynomial inequalities in α.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::interval::{Bound, Interval, IntervalSet};
use crate::poly::AlphaPoly;
use crate::rational::{int, Rational};
use crate::roots::{isolate_real_roots, RootEnclosure};

/// Working width for isolation; endpoints are refined further on demand.
fn working_width() -> Rational {
    crate::rational::ratio(1, 1 << 20)
}

/// Distinct real roots of all nonzero polynomials, ascending.
fn merged_roots(polys: &[&AlphaPoly]) -> Vec<RootEnclosure> {
    let width = working_width();
    let mut roots: Vec<RootEnclosure> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .flat_map(|p| isolate_real_roots(p, &width).expect("nonzero polynomial"))
        .collect();
    roots.sort();
    roots.dedup();
    roots
}

/// A rational strictly inside the open cell `(lo, hi)`.
fn sample_between(lo: &Bound, hi: &Bound) -> Rational {
    match (lo, hi) {
        (Bound::NegInf, Bound::PosInf) => Rational::zero(),
        (Bound::NegInf, Bound::Finite(r)) => r.lo.floor() - Rational::one(),
        (Bound::Finite(r), Bound::PosInf) => r.hi.ceil() + Rational::one(),
        (Bound::Finite(a), Bound::Finite(b)) => {
            let (mut a, mut b) = (a.clone(), b.clone());
            while a.hi >= b.lo {
                a.bisect();
                b.bisect();
            }
            (&a.hi + &b.lo) / int(2)
        }
        _ => unreachable!("cells are ordered"),
    }
}

fn cells(roots: &[RootEnclosure]) -> Vec<(Bound, Bound)> {
    let mut edges = vec![Bound::NegInf];
    edges.extend(roots.iter().cloned().map(Bound::Finite));
    edges.push(Bound::PosInf);
    edges
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

/// `{α : p(α) > 0}`.
pub fn positive_set(p: &AlphaPoly) -> IntervalSet {
    if p.is_constant() {
        return if p.constant_term().is_positive() {
            IntervalSet::full()
        } else {
            IntervalSet::empty()
        };
    }
    let roots = merged_roots(&[p]);
    let intervals = cells(&roots)
        .into_iter()
        .filter(|(lo, hi)| p.sign_at(&sample_between(lo, hi)) == Ordering::Greater)
        .map(|(lo, hi)| Interval { lo, hi })
        .collect();
    IntervalSet::from_sorted(intervals)
}

/// `{α : p(α) < q(α)}`.
pub fn less_than_set(p: &AlphaPoly, q: &AlphaPoly) -> IntervalSet {
    positive_set(&(q - p))
}

/// `{α : Σ |p_i(α)| < bound}` as an exact open set.
///
/// Between consecutive roots of the `p_i` every sign is fixed, so the sum is
/// one polynomial there and the strict inequality is solved cell by cell.
/// Cells are glued back across a root whenever the root itself satisfies
/// the inequality.
pub fn solve_abs_sum_lt(polys: &[AlphaPoly], bound: &Rational) -> IntervalSet {
    let live: Vec<&AlphaPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    let bound_poly = AlphaPoly::constant(bound.clone());
    if live.is_empty() {
        return positive_set(&bound_poly);
    }
    let roots = merged_roots(&live);
    let signed_slack = |signs: &[Ordering]| -> AlphaPoly {
        let mut slack = bound_poly.clone();
        for (p, s) in live.iter().zip(signs) {
            match s {
                Ordering::Greater => slack -= p,
                Ordering::Less => slack += p,
                Ordering::Equal => {}
            }
        }
        slack
    };

    let mut pieces: Vec<Interval> = Vec::new();
    for (k, (lo, hi)) in cells(&roots).into_iter().enumerate() {
        let sample = sample_between(&lo, &hi);
        let signs: Vec<Ordering> = live.iter().map(|p| p.sign_at(&sample)).collect();
        let cell = IntervalSet::single(lo.clone(), hi);
        let solved = positive_set(&signed_slack(&signs)).intersect(&cell);
        let mut fresh = solved.intervals().iter().cloned();
        if k > 0 {
            let root = &roots[k - 1];
            let signs: Vec<Ordering> = live.iter().map(|p| root.sign_of(p)).collect();
            let root_inside = root.sign_of(&signed_slack(&signs)) == Ordering::Greater;
            if root_inside {
                // The set is open, so both neighbouring cells reach the root.
                let last = pieces.last_mut().filter(|l| l.hi == lo);
                let mut rest = fresh.clone();
                let first = rest.next().filter(|f| f.lo == lo);
                if let (Some(last), Some(first)) = (last, first) {
                    last.hi = first.hi;
                    fresh = rest;
                }
            }
        }
        pieces.extend(fresh);
    }
    IntervalSet::from_sorted(pieces)
}
