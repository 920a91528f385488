//! Monomials q·c^k in the graded polynomial ring Q[c], deg c = −2.
//!
//! Every homogeneous element of Q[c] is a single monomial, so monomials are
//! the entries of every matrix in the engine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// A monomial q·c^k. Internal degree −2k.
///
/// The zero monomial is canonical: coefficient 0 forces cpower 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    coeff: Rational,
    cpower: u32,
}

impl Monomial {
    pub fn new(coeff: Rational, cpower: u32) -> Self {
        if coeff.is_zero() {
            Monomial { coeff, cpower: 0 }
        } else {
            Monomial { coeff, cpower }
        }
    }

    pub fn zero() -> Self {
        Monomial { coeff: Rational::zero(), cpower: 0 }
    }

    pub fn one() -> Self {
        Monomial { coeff: Rational::one(), cpower: 0 }
    }

    /// c^k with coefficient 1.
    pub fn c_power(k: u32) -> Self {
        Monomial::new(Rational::one(), k)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn cpower(&self) -> u32 {
        self.cpower
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Internal degree: −2k.
    pub fn degree(&self) -> i64 {
        -2 * i64::from(self.cpower)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Monomial::new(q * &self.coeff, self.cpower)
    }

    /// Multiply by c^k.
    pub fn shift_cpower(&self, k: u32) -> Self {
        Monomial::new(self.coeff.clone(), self.cpower + k)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::new(&self.coeff * &rhs.coeff, self.cpower + rhs.cpower)
    }
}

impl Add for &Monomial {
    type Output = Monomial;

    /// Sum of two monomials of the same degree. Homogeneity makes all sums
    /// in the engine fall in one graded piece; mixed powers are a bug.
    fn add(self, rhs: &Monomial) -> Monomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.cpower, rhs.cpower, "adding monomials of different degree");
        Monomial::new(&self.coeff + &rhs.coeff, self.cpower)
    }
}

impl Sub for &Monomial {
    type Output = Monomial;
    fn sub(self, rhs: &Monomial) -> Monomial {
        self + &(-rhs)
    }
}

impl Neg for &Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial::new(-&self.coeff, self.cpower)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        match self.cpower {
            0 => write!(f, "{}", self.coeff),
            k => {
                if self.coeff.is_one() {
                    // fall through to bare c^k
                } else if (-&self.coeff).is_one() {
                    write!(f, "-")?;
                } else {
                    write!(f, "{}*", self.coeff)?;
                }
                if k == 1 {
                    write!(f, "c")
                } else {
                    write!(f, "c^{k}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_canonical() {
        assert_eq!(Monomial::new(Rational::zero(), 5), Monomial::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Monomial::zero().to_string(), "0");
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(Monomial::c_power(1).to_string(), "c");
        assert_eq!(Monomial::c_power(3).to_string(), "c^3");
        assert_eq!(Monomial::new(Rational::new(-1, 1), 2).to_string(), "-c^2");
        assert_eq!(Monomial::new(Rational::new(3, 2), 2).to_string(), "3/2*c^2");
        assert_eq!(Monomial::new(Rational::new(-5, 1), 0).to_string(), "-5");
    }

    #[test]
    fn cancellation_collapses_to_zero() {
        let m = Monomial::new(Rational::new(2, 3), 4);
        let s = &m - &m;
        assert!(s.is_zero());
        assert_eq!(s.cpower(), 0);
    }
}
