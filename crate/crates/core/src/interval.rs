//! Finite unions of open intervals with exact algebraic endpoints.

use std::cmp::Ordering;
use std::fmt;

use crate::rational::Rational;
use crate::roots::RootEnclosure;

/// An interval endpoint: a real algebraic number or ±∞.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
#[allow(clippy::large_enum_variant)]
pub enum Bound {
    NegInf,
    Finite(RootEnclosure),
    PosInf,
}

impl Bound {
    pub fn rational(r: Rational) -> Bound {
        Bound::Finite(RootEnclosure::exact(crate::poly::AlphaPoly::zero(), r))
    }

    pub fn as_real(&self) -> Option<&RootEnclosure> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// Exact rational value, when the endpoint is rational.
    pub fn exact(&self) -> Option<&Rational> {
        self.as_real().and_then(RootEnclosure::exact_value)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Bound::NegInf => f64::NEG_INFINITY,
            Bound::PosInf => f64::INFINITY,
            Bound::Finite(r) => r.to_f64(),
        }
    }

    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            Bound::NegInf => Ordering::Less,
            Bound::PosInf => Ordering::Greater,
            Bound::Finite(r) => r.cmp_rational(x),
        }
    }

    pub fn decimal(&self, digits: usize) -> String {
        match self {
            Bound::NegInf => "-inf".to_string(),
            Bound::PosInf => "+inf".to_string(),
            Bound::Finite(r) => r.decimal(digits),
        }
    }
}

/// Open interval `(lo, hi)` with `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Option<Interval> {
        (lo < hi).then_some(Interval { lo, hi })
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.cmp_rational(x) == Ordering::Less && self.hi.cmp_rational(x) == Ordering::Greater
    }

    fn covers(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Sorted, pairwise-disjoint open intervals.
///
/// Two neighbours may share an endpoint only when that point is excluded
/// from the set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full() -> Self {
        IntervalSet {
            intervals: vec![Interval {
                lo: Bound::NegInf,
                hi: Bound::PosInf,
            }],
        }
    }

    pub fn single(lo: Bound, hi: Bound) -> Self {
        IntervalSet {
            intervals: Interval::new(lo, hi).into_iter().collect(),
        }
    }

    pub fn rational(lo: Rational, hi: Rational) -> Self {
        Self::single(Bound::rational(lo), Bound::rational(hi))
    }

    /// Builds a set from intervals already sorted and disjoint.
    pub(crate) fn from_sorted(intervals: Vec<Interval>) -> Self {
        debug_assert!(intervals.windows(2).all(|w| w[0].hi <= w[1].lo));
        IntervalSet { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.intervals
            .iter()
            .all(|i| other.intervals.iter().any(|o| o.covers(i)))
    }

    /// Lowest endpoint and highest endpoint, if nonempty.
    pub fn hull(&self) -> Option<(&Bound, &Bound)> {
        Some((&self.intervals.first()?.lo, &self.intervals.last()?.hi))
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let a = &self.intervals[i];
            let b = &other.intervals[j];
            let lo = (&a.lo).max(&b.lo);
            let hi = (&a.hi).min(&b.hi);
            if lo < hi {
                out.push(Interval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
            if a.hi <= b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn intersect_all<'a>(sets: impl IntoIterator<Item = &'a IntervalSet>) -> IntervalSet {
        sets.into_iter()
            .fold(IntervalSet::full(), |acc, s| acc.intersect(s))
    }

    /// Every finite endpoint refined to the given width.
    pub fn refined(&self, width: &Rational) -> IntervalSet {
        let fix = |b: &Bound| match b {
            Bound::Finite(r) => Bound::Finite(r.refined(width)),
            other => other.clone(),
        };
        IntervalSet {
            intervals: self
                .intervals
                .iter()
                .map(|i| Interval {
                    lo: fix(&i.lo),
                    hi: fix(&i.hi),
                })
                .collect(),
        }
    }
}

impl fmt::Display for IntervalSet {
    /// `(-1.555555556, -0.6666666667)`, unions joined with ` U `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|i| format!("({}, {})", i.lo.decimal(10), i.hi.decimal(10)))
            .collect();
        write!(f, "{}", parts.join(" U "))
    }
}
