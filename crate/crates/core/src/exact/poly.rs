use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Univariate polynomial in the level `r`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PolyR {
    coeffs: Vec<Rational>,
}

impl PolyR {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * r^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The level variable itself.
    pub fn r() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * r + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `r^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Nonzero `(degree, coefficient)` pairs, lowest degree first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl From<Rational> for PolyR {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &PolyR {
    type Output = PolyR;
    fn add(self, rhs: &PolyR) -> PolyR {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyR::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PolyR {
    type Output = PolyR;
    fn sub(self, rhs: &PolyR) -> PolyR {
        self + &(-rhs)
    }
}

impl Neg for &PolyR {
    type Output = PolyR;
    fn neg(self) -> PolyR {
        PolyR {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyR {
    type Output = PolyR;
    fn mul(self, rhs: &PolyR) -> PolyR {
        if self.is_zero() || rhs.is_zero() {
            return PolyR::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyR::from_coeffs(out)
    }
}

impl fmt::Display for PolyR {
    /// `c`, `c*r`, `c*r^k` summands joined by `" + "`, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*r"),
                _ => format!("{c}*r^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    #[test]
    fn arithmetic() {
        let p = PolyR::from_coeffs(vec![rat(1), rat(2)]);
        let q = PolyR::from_coeffs(vec![rat(-1), rat(0), rat(3)]);
        assert_eq!(&p + &q, PolyR::from_coeffs(vec![rat(0), rat(2), rat(3)]));
        assert_eq!(
            &p * &q,
            PolyR::from_coeffs(vec![rat(-1), rat(-2), rat(3), rat(6)])
        );
        assert!((&p - &p).is_zero());
        assert_eq!(q.eval(&rat(2)), rat(11));
        assert_eq!(PolyR::zero().degree(), None);
        assert_eq!(q.degree(), Some(2));
    }

    #[test]
    fn display() {
        assert_eq!(PolyR::monomial(frac(1, 2), 1).to_string(), "1/2*r");
        let p = PolyR::from_coeffs(vec![rat(1), rat(0), frac(-3, 4)]);
        assert_eq!(p.to_string(), "1 + -3/4*r^2");
        assert_eq!(PolyR::zero().to_string(), "0");
    }
}
