//! Real-root isolation by Sturm sequences, refinement by bisection.
//!
//! A [`RootEnclosure`] doubles as an exact real algebraic number: it names
//! the unique root of a square-free polynomial inside an interval, and it can
//! be compared exactly with rationals and with other enclosures.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::AlphaPoly;
use crate::rational::{format_significant, ratio, simplest_between, to_f64, Rational};

/// The unique real root of `poly` in `[lo, hi]`.
///
/// `poly` is monic and square-free. When `lo == hi` the root is rational and
/// known exactly; otherwise `poly(lo)` and `poly(hi)` are nonzero with
/// opposite signs and the root lies strictly inside.
#[derive(Debug, Clone)]
pub struct RootEnclosure {
    pub poly: AlphaPoly,
    pub lo: Rational,
    pub hi: Rational,
    pub width_bound: Rational,
}

/// Default enclosure width for reported irrational endpoints.
pub fn default_width() -> Rational {
    ratio(1, 1_000_000_000_000)
}

pub fn sturm_chain(p: &AlphaPoly) -> Vec<AlphaPoly> {
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let rem = -chain.last().unwrap().rem(&next);
        chain.push(next);
        next = rem;
    }
    chain
}

fn sign_variations(chain: &[AlphaPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for p in chain {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots(chain: &[AlphaPoly], lo: &Rational, hi: &Rational) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}

/// Every real root of `p` has absolute value below this bound.
pub fn cauchy_bound(p: &AlphaPoly) -> Rational {
    let lead = p
        .leading()
        .expect("zero polynomial has no root bound")
        .abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl RootEnclosure {
    pub fn exact(poly: AlphaPoly, value: Rational) -> Self {
        RootEnclosure {
            poly,
            lo: value.clone(),
            hi: value,
            width_bound: Rational::zero(),
        }
    }

    /// Root of `poly` inside `[lo, hi]`, normalizing the polynomial.
    /// The caller guarantees exactly one root there and a sign change.
    pub fn from_parts(poly: &AlphaPoly, lo: Rational, hi: Rational, width_bound: Rational) -> Self {
        RootEnclosure {
            poly: poly.square_free(),
            lo,
            hi,
            width_bound,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    /// Halves the enclosure once (no-op when exact).
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = self.midpoint();
        let s = self.poly.sign_at(&mid);
        if s == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
        } else if s == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Shrinks until `hi - lo <= width`, recording the new bound.
    pub fn refine_to(&mut self, width: &Rational) {
        while !self.is_exact() && &self.width() > width {
            self.bisect();
        }
        if width < &self.width_bound {
            self.width_bound = width.clone();
        }
    }

    pub fn refined(&self, width: &Rational) -> Self {
        let mut r = self.clone();
        r.refine_to(width);
        r
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(v) = self.exact_value() {
            return v.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(r);
        if s == Ordering::Equal {
            Ordering::Equal
        } else if s == self.poly.sign_at(&self.lo) {
            // no sign change on [lo, r], so the root is right of r
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison of two algebraic reals.
    pub fn cmp_real(&self, other: &RootEnclosure) -> Ordering {
        match (self.exact_value(), other.exact_value()) {
            (Some(a), Some(b)) => return a.cmp(b),
            (_, Some(b)) => return self.cmp_rational(b),
            (Some(a), _) => return other.cmp_rational(a).reverse(),
            _ => {}
        }
        let common = self.poly.gcd(&other.poly);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if common.degree() >= 1 {
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                if count_roots(&sturm_chain(&common), &lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
            a.bisect();
            b.bisect();
            if a.is_exact() || b.is_exact() {
                return a.cmp_real(&b);
            }
        }
    }

    /// Sign of `q` at this real.
    pub fn sign_of(&self, q: &AlphaPoly) -> Ordering {
        if let Some(v) = self.exact_value() {
            return q.sign_at(v);
        }
        if q.is_zero() {
            return Ordering::Equal;
        }
        let common = q.gcd(&self.poly);
        if common.degree() >= 1 && count_roots(&sturm_chain(&common), &self.lo, &self.hi) > 0 {
            return Ordering::Equal;
        }
        let chain = sturm_chain(&q.square_free());
        let mut x = self.clone();
        loop {
            if x.is_exact() {
                return q.sign_at(&x.lo);
            }
            if count_roots(&chain, &x.lo, &x.hi) == 0 {
                return q.sign_at(&x.hi);
            }
            x.bisect();
        }
    }

    /// `digits` significant decimal digits of the enclosed real.
    pub fn decimal(&self, digits: usize) -> String {
        if let Some(v) = self.exact_value() {
            return format_significant(v, digits);
        }
        let mut x = self.clone();
        loop {
            let lo = format_significant(&x.lo, digits);
            if lo == format_significant(&x.hi, digits) {
                return lo;
            }
            x.bisect();
            if x.is_exact() {
                return format_significant(&x.lo, digits);
            }
        }
    }
}

impl PartialEq for RootEnclosure {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_real(other) == Ordering::Equal
    }
}

impl Eq for RootEnclosure {}

impl PartialOrd for RootEnclosure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootEnclosure {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_real(other)
    }
}

/// Rational roots of a square-free quadratic or linear polynomial, if the
/// discriminant is a perfect square. `None` means "irrational or not handled".
fn low_degree_rational_roots(sf: &AlphaPoly) -> Option<Vec<Rational>> {
    let c = sf.primitive_integer();
    match c.len() {
        2 => Some(vec![Rational::new(-c[0].clone(), c[1].clone())]),
        3 => {
            let disc = &c[1] * &c[1] - BigInt::from(4) * &c[0] * &c[2];
            let root = integer_sqrt_exact(&disc)?;
            let den = BigInt::from(2) * &c[2];
            let mut v = vec![
                Rational::new(-&c[1] - &root, den.clone()),
                Rational::new(-&c[1] + &root, den),
            ];
            v.sort();
            v.dedup();
            Some(v)
        }
        _ => None,
    }
}

/// One enclosure per distinct real root of `p`, sorted ascending, each of
/// width at most `width`. Rational roots come back exact (`lo == hi`).
pub fn isolate_real_roots(p: &AlphaPoly, width: &Rational) -> Result<Vec<RootEnclosure>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free();
    if sf.degree() < 1 {
        return Ok(Vec::new());
    }
    if let Some(roots) = low_degree_rational_roots(&sf) {
        return Ok(roots
            .into_iter()
            .map(|r| RootEnclosure::exact(sf.clone(), r))
            .collect());
    }
    let chain = sturm_chain(&sf);
    let bound = cauchy_bound(&sf);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match count_roots(&chain, &lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
                pending.push((lo, mid.clone()));
                pending.push((mid, hi));
            }
        }
    }
    isolated.sort_by(|a, b| a.0.cmp(&b.0));

    let quadratic = sf.degree() == 2;
    // Two rationals with denominators <= Q differ by at least 1/Q^2.
    let lead = sf.primitive_integer().pop().unwrap();
    let separation = Rational::new(BigInt::one(), &lead * &lead);

    let mut out = Vec::with_capacity(isolated.len());
    for (mut lo, mut hi) in isolated {
        if sf.sign_at(&hi) == Ordering::Equal {
            out.push(RootEnclosure::exact(sf.clone(), hi));
            continue;
        }
        // `lo` may be the neighbouring root; move it off without losing ours.
        let mut exact = None;
        while sf.sign_at(&lo) == Ordering::Equal {
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            if sf.sign_at(&mid) == Ordering::Equal {
                exact = Some(mid);
                break;
            }
            if count_roots(&chain, &lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if let Some(v) = exact {
            out.push(RootEnclosure::exact(sf.clone(), v));
            continue;
        }
        let mut enc = RootEnclosure::from_parts(&sf, lo, hi, width.clone());
        enc.refine_to(width);
        if !enc.is_exact() && !quadratic {
            let mut probe = enc.clone();
            while probe.width() >= separation && !probe.is_exact() {
                probe.bisect();
            }
            let candidate = simplest_between(&probe.lo, &probe.hi);
            if probe.is_exact() || sf.sign_at(&candidate) == Ordering::Equal {
                let v = if probe.is_exact() {
                    probe.lo
                } else {
                    candidate
                };
                enc = RootEnclosure::exact(sf.clone(), v);
            }
        }
        out.push(enc);
    }
    Ok(out)
}
