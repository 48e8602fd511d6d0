//! Laurent polynomials in `z` whose coefficients are polynomials in α.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::AlphaPoly;
use crate::rational::{int, Rational};

/// The two evaluation points the symbol calculus needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitPoint {
    PlusOne,
    MinusOne,
}

/// `a(z) = Σ a_e z^e` with finitely many nonzero `a_e ∈ Q[α]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentSymbol {
    terms: BTreeMap<i64, AlphaPoly>,
}

impl LaurentSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, AlphaPoly::one())
    }

    pub fn monomial(exponent: i64, coeff: AlphaPoly) -> Self {
        let mut s = Self::zero();
        s.add_term(exponent, &coeff);
        s
    }

    /// Coefficients listed from `start` upward.
    pub fn from_coeffs(start: i64, coeffs: impl IntoIterator<Item = AlphaPoly>) -> Self {
        let mut s = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            s.add_term(start + k as i64, &c);
        }
        s
    }

    pub fn from_rationals(start: i64, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::from_coeffs(start, coeffs.into_iter().map(AlphaPoly::constant))
    }

    /// `(1+z)^k`
    pub fn one_plus_z_pow(k: usize) -> Self {
        let base = Self::from_rationals(0, [int(1), int(1)]);
        (0..k).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    fn add_term(&mut self, exponent: i64, coeff: &AlphaPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &AlphaPoly)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exponent: i64) -> AlphaPoly {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Dense coefficient list from the lowest to the highest exponent.
    pub fn dense(&self) -> Vec<AlphaPoly> {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    /// Convolution of the coefficient sequences.
    pub fn mul(&self, other: &LaurentSymbol) -> LaurentSymbol {
        let mut out = LaurentSymbol::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, s: &AlphaPoly) -> LaurentSymbol {
        let mut out = LaurentSymbol::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &(c * s));
        }
        out
    }

    pub fn scale_rational(&self, s: &Rational) -> LaurentSymbol {
        self.scale(&AlphaPoly::constant(s.clone()))
    }

    /// Substitutes `z → z^r`.
    pub fn upsample(&self, r: u32) -> LaurentSymbol {
        assert!(r >= 1, "upsampling factor must be positive");
        LaurentSymbol {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * r as i64, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient by `(1+z)^k`.
    ///
    /// Fails with [`Error::NonDivisible`] when the factor is not present.
    pub fn divide_linear(&self, k: usize) -> Result<LaurentSymbol> {
        let mut current = self.clone();
        for step in 0..k {
            current = current
                .divide_once()
                .ok_or(Error::NonDivisible { order: step + 1 })?;
        }
        Ok(current)
    }

    fn divide_once(&self) -> Option<LaurentSymbol> {
        let (lo, hi) = match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(LaurentSymbol::zero()),
        };
        if lo == hi {
            return None;
        }
        // Synthetic division from the top: q_{e-1} = a_e - q_e.
        let mut quot = vec![AlphaPoly::zero(); (hi - lo) as usize];
        let mut carry = AlphaPoly::zero();
        for e in (lo + 1..=hi).rev() {
            let q = &self.coeff(e) - &carry;
            quot[(e - 1 - lo) as usize] = q.clone();
            carry = q;
        }
        if self.coeff(lo) != carry {
            return None;
        }
        Some(LaurentSymbol::from_coeffs(lo, quot))
    }

    pub fn derivative(&self) -> LaurentSymbol {
        let mut out = LaurentSymbol::zero();
        for (e, c) in &self.terms {
            out.add_term(e - 1, &c.scale(&int(*e)));
        }
        out
    }

    pub fn nth_derivative(&self, order: usize) -> LaurentSymbol {
        (0..order).fold(self.clone(), |acc, _| acc.derivative())
    }

    pub fn eval_z(&self, point: UnitPoint) -> AlphaPoly {
        let mut acc = AlphaPoly::zero();
        for (e, c) in &self.terms {
            match point {
                UnitPoint::MinusOne if e.rem_euclid(2) == 1 => acc -= c,
                _ => acc += c,
            }
        }
        acc
    }

    /// Every coefficient evaluated at `α = alpha`; zero coefficients dropped.
    pub fn alpha_eval(&self, alpha: &Rational) -> BTreeMap<i64, Rational> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, c.eval(alpha)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// The symbol with α fixed, as a symbol with constant coefficients.
    pub fn specialize(&self, alpha: &Rational) -> LaurentSymbol {
        LaurentSymbol {
            terms: self
                .alpha_eval(alpha)
                .into_iter()
                .map(|(e, v)| (e, AlphaPoly::constant(v)))
                .collect(),
        }
    }

    /// True when every coefficient is independent of α.
    pub fn is_numeric(&self) -> bool {
        self.terms.values().all(AlphaPoly::is_constant)
    }

    /// `a(1) = 2` and `a(-1) = 0` as identities in α.
    pub fn satisfies_sum_rule(&self) -> bool {
        self.eval_z(UnitPoint::PlusOne) == AlphaPoly::constant(int(2))
            && self.eval_z(UnitPoint::MinusOne).is_zero()
    }
}

impl fmt::Display for LaurentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let coeff = if c.is_constant() {
                    c.to_string()
                } else {
                    format!("({c})")
                };
                match *e {
                    0 => coeff,
                    1 => format!("{coeff}*z"),
                    _ => format!("{coeff}*z^{e}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Shorthand used throughout the tests: `z^lo` onward with integer data.
#[cfg(test)]
pub(crate) fn sym_ints(start: i64, coeffs: &[i64]) -> LaurentSymbol {
    LaurentSymbol::from_rationals(start, coeffs.iter().map(|&c| int(c)))
}
