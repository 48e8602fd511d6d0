//! Mask families: Deslauriers–Dubuc interpolatory, degree-(4n+1) B-spline,
//! and their α-blend `(1+α)·R − α·Q`.
//!
//! Tap `t` of either rule reads source point `i + t − n`; the vertex rule
//! has `2n+1` taps and the edge rule `2n+2`. Interleaving them gives the
//! symbol `a(z) = Σ_{j=0}^{4n+2} a_j z^j` with `a_{2t+1}` the vertex taps and
//! `a_{2t}` the edge taps.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentSymbol;
use crate::poly::AlphaPoly;
use crate::rational::{int, pow2, Rational};

/// Tension parameter: kept symbolic, or fixed to a rational value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alpha {
    Symbolic,
    Value(Rational),
}

/// One member of the `(2n+2)`-point family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSpec {
    pub n: u32,
    pub alpha: Alpha,
}

impl SchemeSpec {
    pub fn symbolic(n: u32) -> Result<Self> {
        check_index(n)?;
        Ok(SchemeSpec {
            n,
            alpha: Alpha::Symbolic,
        })
    }

    pub fn with_alpha(n: u32, alpha: Rational) -> Result<Self> {
        check_index(n)?;
        Ok(SchemeSpec {
            n,
            alpha: Alpha::Value(alpha),
        })
    }

    /// Number of points the edge rule reads.
    pub fn points(&self) -> u32 {
        2 * self.n + 2
    }

    pub fn numeric_alpha(&self) -> Result<&Rational> {
        match &self.alpha {
            Alpha::Value(a) => Ok(a),
            Alpha::Symbolic => Err(Error::NonNumericAlpha),
        }
    }
}

pub(crate) fn check_index(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::BadIndex(format!(
            "family index n must be >= 1, got {n}"
        )));
    }
    Ok(())
}

/// Vertex and edge rules of a primal binary scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskPair<T> {
    pub n: u32,
    /// `2n+1` taps, source offsets `-n..=n`.
    pub vertex: Vec<T>,
    /// `2n+2` taps, source offsets `-n..=n+1`.
    pub edge: Vec<T>,
}

impl<T> MaskPair<T> {
    /// Source offset of tap `t` relative to the refined index `i`.
    pub fn offset(&self, tap: usize) -> i64 {
        tap as i64 - self.n as i64
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> MaskPair<U> {
        MaskPair {
            n: self.n,
            vertex: self.vertex.iter().map(&f).collect(),
            edge: self.edge.iter().map(&f).collect(),
        }
    }
}

impl MaskPair<Rational> {
    pub fn to_symbolic(&self) -> MaskPair<AlphaPoly> {
        self.map(|t| AlphaPoly::constant(t.clone()))
    }

    pub fn symbol(&self) -> LaurentSymbol {
        self.to_symbolic().symbol()
    }
}

impl MaskPair<AlphaPoly> {
    /// Taps with α fixed.
    pub fn at(&self, alpha: &Rational) -> MaskPair<Rational> {
        self.map(|t| t.eval(alpha))
    }

    pub fn symbol(&self) -> LaurentSymbol {
        let mut coeffs = vec![AlphaPoly::zero(); 4 * self.n as usize + 3];
        for (t, c) in self.vertex.iter().enumerate() {
            coeffs[2 * t + 1] = c.clone();
        }
        for (t, c) in self.edge.iter().enumerate() {
            coeffs[2 * t] = c.clone();
        }
        LaurentSymbol::from_coeffs(0, coeffs)
    }
}

/// Row `m` of Pascal's triangle.
pub fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// `(2n+2)`-point interpolatory rules.
pub fn dd_mask(n: u32) -> Result<MaskPair<Rational>> {
    check_index(n)?;
    let nn = n as usize;
    let row = binomial_row(2 * nn + 1);
    let scale = pow2(4 * n + 1);
    let lead = Rational::from_integer(BigInt::from(n + 1) * &row[nn]);
    let edge = (-(n as i64) - 1..=n as i64)
        .map(|j| {
            let sign = if j.rem_euclid(2) == 0 {
                int(1)
            } else {
                int(-1)
            };
            let c = Rational::from_integer(row[(n as i64 + j + 1) as usize].clone());
            sign * &lead * c / int(2 * j + 1) / &scale
        })
        .collect();
    let mut vertex = vec![Rational::zero(); 2 * nn + 1];
    vertex[nn] = Rational::one();
    Ok(MaskPair { n, vertex, edge })
}

/// Degree-`(4n+1)` B-spline rules.
pub fn bspline_mask(n: u32) -> Result<MaskPair<Rational>> {
    check_index(n)?;
    let nn = n as usize;
    let row = binomial_row(4 * nn + 2);
    let scale = pow2(4 * n + 1);
    let tap = |k: usize| Rational::from_integer(row[k].clone()) / &scale;
    Ok(MaskPair {
        n,
        vertex: (0..=2 * nn).map(|j| tap(2 * j + 1)).collect(),
        edge: (0..=2 * nn + 1).map(|j| tap(2 * j)).collect(),
    })
}

/// `(1+α)·dd − α·bspline`, tap by tap.
pub fn combined_mask(n: u32) -> Result<MaskPair<AlphaPoly>> {
    let dd = dd_mask(n)?;
    let bs = bspline_mask(n)?;
    let blend = |r: &Rational, q: &Rational| AlphaPoly::linear(r.clone(), r - q);
    Ok(MaskPair {
        n,
        vertex: dd
            .vertex
            .iter()
            .zip(&bs.vertex)
            .map(|(r, q)| blend(r, q))
            .collect(),
        edge: dd
            .edge
            .iter()
            .zip(&bs.edge)
            .map(|(r, q)| blend(r, q))
            .collect(),
    })
}

/// Rules of `spec`: symbolic in α, or with α substituted.
pub fn scheme_mask(spec: &SchemeSpec) -> Result<MaskPair<AlphaPoly>> {
    let mask = combined_mask(spec.n)?;
    Ok(match &spec.alpha {
        Alpha::Symbolic => mask,
        Alpha::Value(a) => mask.at(a).to_symbolic(),
    })
}

/// `a_{2n+2}(z)` of degree `4n+2`.
pub fn scheme_symbol(spec: &SchemeSpec) -> Result<LaurentSymbol> {
    Ok(scheme_mask(spec)?.symbol())
}

/// `A(z)` with `a(z) = (1+z)^{2n+2} A(z) / 2^{2n+1}`.
pub fn factor_symbol(spec: &SchemeSpec) -> Result<LaurentSymbol> {
    let a = scheme_symbol(spec)?;
    let k = 2 * spec.n as usize + 2;
    Ok(a.divide_linear(k)?.scale_rational(&pow2(2 * spec.n + 1)))
}

/// `(1+z)^{4n+2} / 2^{4n+1}`.
pub fn bspline_symbol(n: u32) -> Result<LaurentSymbol> {
    check_index(n)?;
    Ok(LaurentSymbol::one_plus_z_pow(4 * n as usize + 2).scale_rational(&pow2(4 * n + 1).recip()))
}
