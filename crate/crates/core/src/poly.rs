//! Univariate polynomials in `t` with exact rational coefficients.
//!
//! Hilbert polynomials and Euler characteristics of twists are stored here.
//! Printing follows the `at+b` convention with explicit signs and no spaces.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    // ascending powers of t, no trailing zeros
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigRational>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// `slope * t + intercept` with integer coefficients.
    pub fn linear(slope: i64, intercept: i64) -> Self {
        Self::from_coeffs(vec![rat(intercept), rat(slope)])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        // Horner
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&rat(t))
    }

    /// Substitutes `t + shift` for `t`.
    pub fn shift(&self, shift: i64) -> Self {
        let arg = Poly::t() + Poly::constant(rat(shift));
        let mut out = Poly::zero();
        for c in self.coeffs.iter().rev() {
            out = &out * &arg + Poly::constant(c.clone());
        }
        out
    }

    /// Returns `(slope, intercept)` when the polynomial has degree at most one
    /// and integer coefficients.
    pub fn as_integer_linear(&self) -> Option<(BigInt, BigInt)> {
        if self.coeffs.len() > 2 {
            return None;
        }
        let b = self.coeff(0);
        let a = self.coeff(1);
        if a.is_integer() && b.is_integer() {
            Some((a.to_integer(), b.to_integer()))
        } else {
            None
        }
    }

    /// Like [`Poly::as_integer_linear`] but narrowed to machine integers.
    pub fn as_linear_i64(&self) -> Option<(i64, i64)> {
        let (a, b) = self.as_integer_linear()?;
        Some((a.to_i64()?, b.to_i64()?))
    }
}

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            let body = if mag.is_integer() {
                mag.to_integer().to_string()
            } else {
                format!("({}/{})", mag.numer(), mag.denom())
            };
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&body)?;
                    }
                    f.write_str("t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the printed form: signed terms `c`, `ct`, `ct^k`, with `c` an
    /// integer or a parenthesised fraction `(p/q)`. Spaces are ignored.
    fn from_str(s: &str) -> Result<Poly> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::parse(1, 1, "empty polynomial"));
        }
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut acc = Poly::zero();
        while pos < bytes.len() {
            let start = pos;
            let mut negative = false;
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    negative = true;
                    pos += 1;
                }
                _ if pos != 0 => return Err(Error::parse(1, pos + 1, "expected '+' or '-'")),
                _ => {}
            }
            let mut coeff: Option<BigRational> = None;
            if pos < bytes.len() && bytes[pos] == b'(' {
                let close = text[pos..]
                    .find(')')
                    .map(|i| i + pos)
                    .ok_or_else(|| Error::parse(1, pos + 1, "unclosed '('"))?;
                let inner = &text[pos + 1..close];
                let (n, d) = inner
                    .split_once('/')
                    .ok_or_else(|| Error::parse(1, pos + 2, "expected fraction p/q"))?;
                let n: BigInt = n.parse().map_err(|_| Error::parse(1, pos + 2, "bad numerator"))?;
                let d: BigInt = d.parse().map_err(|_| Error::parse(1, pos + 2, "bad denominator"))?;
                if d.is_zero() {
                    return Err(Error::parse(1, pos + 2, "zero denominator"));
                }
                coeff = Some(BigRational::new(n, d));
                pos = close + 1;
            } else {
                let digits_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos > digits_start {
                    let n: BigInt = text[digits_start..pos].parse().expect("ascii digits");
                    coeff = Some(BigRational::from_integer(n));
                }
            }
            let mut power = 0usize;
            if pos < bytes.len() && bytes[pos] == b't' {
                pos += 1;
                power = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let digits_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    power = text[digits_start..pos]
                        .parse()
                        .map_err(|_| Error::parse(1, digits_start + 1, "bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(Error::parse(1, start + 1, "expected a term"));
            }
            let mut c = coeff.unwrap_or_else(BigRational::one);
            if negative {
                c = -c;
            }
            let mut term = vec![BigRational::zero(); power + 1];
            term[power] = c;
            acc = acc + Poly::from_coeffs(term);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_explicit_signs() {
        assert_eq!(Poly::linear(3, 6).to_string(), "3t+6");
        assert_eq!(Poly::linear(1, 11).to_string(), "t+11");
        assert_eq!(Poly::linear(-1, -1).to_string(), "-t-1");
        assert_eq!(Poly::linear(5, 0).to_string(), "5t");
        assert_eq!(Poly::linear(7, -4).to_string(), "7t-4");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn prints_fractions() {
        let p = Poly::from_coeffs(vec![
            rat(1),
            BigRational::new(11.into(), 6.into()),
            rat(1),
            BigRational::new(1.into(), 6.into()),
        ]);
        assert_eq!(p.to_string(), "(1/6)t^3+t^2+(11/6)t+1");
        assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
    }

    #[test]
    fn parses_printed_forms() {
        for s in ["3t+12", "t+19", "-t-1", "5t", "0", "4t+2", "2t^2-t+3"] {
            let p: Poly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("3t++".parse::<Poly>().is_err());
        assert!("x".parse::<Poly>().is_err());
    }

    #[test]
    fn shift_and_eval() {
        let p = Poly::t() * Poly::t();
        let q = p.shift(2);
        assert_eq!(q, Poly::from_i64s(&[4, 4, 1]));
        assert_eq!(q.eval_int(1), rat(9));
    }
}
