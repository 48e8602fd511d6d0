//! Dense univariate polynomials in the tension parameter α.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{int, to_literal, Rational};

/// Polynomial in α with rational coefficients; `coeffs[i]` multiplies `α^i`.
///
/// Trailing zeros are always trimmed, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<Rational>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial α.
    pub fn alpha() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b·α`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial at −1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Constant term (zero for the zero polynomial).
    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.eval(x).cmp(&Rational::zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (AlphaPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd - 1];
            if top.is_zero() {
                continue;
            }
            let q = top / lead;
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &q * d;
            }
            quot[shift] = q;
        }
        (AlphaPoly::new(quot), AlphaPoly::new(rem))
    }

    pub fn rem(&self, divisor: &AlphaPoly) -> AlphaPoly {
        self.div_rem(divisor).1
    }

    /// Scaled to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> AlphaPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => AlphaPoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic polynomial with the same roots, each of multiplicity one.
    pub fn square_free(&self) -> AlphaPoly {
        if self.degree() <= 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Integer polynomial proportional to `self` with coprime coefficients
    /// and a positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }
}

impl From<Rational> for AlphaPoly {
    fn from(c: Rational) -> Self {
        AlphaPoly::constant(c)
    }
}

impl<'a> Add<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        AlphaPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AlphaPoly::new(coeffs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr<AlphaPoly> for AlphaPoly {
            type Output = AlphaPoly;
            fn $m(self, rhs: AlphaPoly) -> AlphaPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a AlphaPoly> for AlphaPoly {
            type Output = AlphaPoly;
            fn $m(self, rhs: &AlphaPoly) -> AlphaPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl AddAssign<&AlphaPoly> for AlphaPoly {
    fn add_assign(&mut self, rhs: &AlphaPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&AlphaPoly> for AlphaPoly {
    fn sub_assign(&mut self, rhs: &AlphaPoly) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for AlphaPoly {
    /// Ascending powers, e.g. `1 + 3/8*alpha`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let lit = to_literal(&mag);
            match i {
                0 => write!(f, "{lit}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{lit}*")?;
                    }
                    write!(f, "alpha")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(c: &[i64]) -> AlphaPoly {
        AlphaPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), 1);
        assert_eq!(p(&[0, 0]).degree(), -1);
        assert!(p(&[0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, AlphaPoly::zero());
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn division_and_gcd() {
        let f = p(&[-1, 0, 1]);
        let (q, r) = f.div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let g = (&f * &p(&[2, 1])).gcd(&(&f * &p(&[3, 1])));
        assert_eq!(g, f);
        let doubled = &(&f * &f) * &p(&[5, 1]);
        assert_eq!(doubled.square_free(), (&f * &p(&[5, 1])).monic());
    }

    #[test]
    fn primitive_integer_form() {
        let f = AlphaPoly::new(vec![ratio(-1, 2), ratio(3, 4)]);
        assert_eq!(
            f.primitive_integer(),
            vec![BigInt::from(-2), BigInt::from(3)]
        );
        let g = AlphaPoly::new(vec![int(2), int(-4)]);
        assert_eq!(
            g.primitive_integer(),
            vec![BigInt::from(-1), BigInt::from(2)]
        );
    }

    #[test]
    fn display() {
        let f = AlphaPoly::new(vec![int(1), ratio(3, 8)]);
        assert_eq!(f.to_string(), "1 + 3/8*alpha");
        let g = AlphaPoly::new(vec![ratio(-1, 16), ratio(-3, 32), int(1)]);
        assert_eq!(g.to_string(), "-1/16 - 3/32*alpha + alpha^2");
    }
}
