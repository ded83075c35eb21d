//! Exact arithmetic in the Chow ring `Z[h]/(h^{n+1})` of `P^n` and the Chern
//! class calculus built on it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sheaf::{AtomKind, FreeComplex, SheafAtom, SheafSum};

/// A class `c_0 + c_1 h + ... + c_n h^n` on `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    dim: usize,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub const DEFAULT_DIM: usize = 3;

    /// Pads with zeros up to `dim + 1` coefficients.
    pub fn new(dim: usize, mut coeffs: Vec<BigInt>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if coeffs.len() > dim + 1 {
            return Err(Error::TooManyCoefficients { dim, got: coeffs.len() });
        }
        coeffs.resize(dim + 1, BigInt::zero());
        Ok(ChowClass { dim, coeffs })
    }

    pub fn from_i64s(dim: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(dim, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(dim: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); dim + 1];
        coeffs[0] = BigInt::one();
        ChowClass { dim, coeffs }
    }

    /// `1 + a h`.
    pub fn linear(dim: usize, a: i64) -> Self {
        let mut c = Self::one(dim);
        c.coeffs[1] = BigInt::from(a);
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Index of the highest nonzero coefficient, `None` for the zero class.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs[0].is_one()
    }

    fn require_unit_constant(&self) -> Result<()> {
        if self.has_unit_constant() {
            Ok(())
        } else {
            Err(Error::NonUnitConstant(self.coeffs[0].to_string()))
        }
    }

    fn check_same_dim(&self, other: &ChowClass) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Truncated convolution.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i + 1) {
                out[i + j] += a * b;
            }
        }
        Ok(ChowClass { dim: n, coeffs: out })
    }

    /// The unique `u` with `self * u = 1`; requires constant term 1.
    pub fn inv(&self) -> Result<ChowClass> {
        self.require_unit_constant()?;
        let n = self.dim;
        let mut u = vec![BigInt::zero(); n + 1];
        u[0] = BigInt::one();
        for k in 1..=n {
            let mut s = BigInt::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &u[k - i];
            }
            u[k] = -s;
        }
        Ok(ChowClass { dim: n, coeffs: u })
    }

    /// `self / other`, i.e. `self * inv(other)`.
    pub fn div(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_same_dim(other)?;
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Result<ChowClass> {
        let mut acc = ChowClass::one(self.dim);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Chern class of the twist `E(t)` for `E` of the given rank:
    /// `c_k(E(t)) = sum_i C(rank - i, k - i) c_i t^(k-i)`.
    ///
    /// The binomial is the polynomial one, so negative upper arguments are
    /// allowed and the formula stays valid for virtual classes whose Chern
    /// classes extend past their rank.
    pub fn twist(&self, rank: i64, t: i64) -> Result<ChowClass> {
        self.require_unit_constant()?;
        let n = self.dim;
        let t = BigInt::from(t);
        let mut out = vec![BigInt::zero(); n + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut s = BigInt::zero();
            for i in 0..=k {
                let ci = &self.coeffs[i];
                if ci.is_zero() {
                    continue;
                }
                let j = (k - i) as u32;
                s += binomial(&BigInt::from(rank - i as i64), j) * ci * t.pow(j);
            }
            *slot = s;
        }
        Ok(ChowClass { dim: n, coeffs: out })
    }
}

/// Polynomial binomial coefficient `m (m-1) ... (m-j+1) / j!` for any integer `m`.
pub fn binomial(m: &BigInt, j: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for l in 0..j {
        num *= m - BigInt::from(l);
        den *= BigInt::from(l + 1);
    }
    num / den
}

impl fmt::Display for ChowClass {
    /// `c0 + c1 h + c2 h^2 + ...`, zero terms omitted except the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs[0])?;
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str("h")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Total Chern class of a single atom on `P^dim`.
///
/// `T(a)` comes from the twisted Euler sequence `0 -> O(a) -> (n+1)O(a+1) -> T(a) -> 0`;
/// `Om(a)` is the dual of `T(-a)`, so `c_k(Om(a)) = (-1)^k c_k(T(-a))`.
pub fn chern_of_atom(atom: &SheafAtom, dim: usize) -> Result<ChowClass> {
    atom.check_dim(dim)?;
    match atom.kind {
        AtomKind::LineBundle => Ok(ChowClass::linear(dim, atom.twist)),
        AtomKind::Tangent => {
            let num = ChowClass::linear(dim, atom.twist + 1).pow(dim as u32 + 1)?;
            num.div(&ChowClass::linear(dim, atom.twist))
        }
        AtomKind::Cotangent => {
            let t = chern_of_atom(&SheafAtom::tangent(-atom.twist), dim)?;
            let coeffs = t
                .coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c })
                .collect();
            ChowClass::new(dim, coeffs)
        }
    }
}

/// Whitney product over a direct sum.
pub fn chern_of_sum(sum: &SheafSum, dim: usize) -> Result<ChowClass> {
    let mut acc = ChowClass::one(dim);
    for (atom, m) in sum.iter() {
        let c = chern_of_atom(&atom, dim)?;
        for _ in 0..m {
            acc = acc.mul(&c)?;
        }
    }
    Ok(acc)
}

/// Chern class of the presented sheaf: even positions multiply, odd positions divide.
pub fn chern_from_complex(c: &FreeComplex) -> Result<ChowClass> {
    let dim = c.dim();
    let mut num = ChowClass::one(dim);
    let mut den = ChowClass::one(dim);
    for (sign, term) in c.signed_terms() {
        let ct = chern_of_sum(term, dim)?;
        if sign > 0 {
            num = num.mul(&ct)?;
        } else {
            den = den.mul(&ct)?;
        }
    }
    num.div(&den)
}

/// Rank of the presented sheaf; a negative alternating sum is rejected.
pub fn rank_of_complex(c: &FreeComplex) -> Result<i64> {
    let dim = c.dim();
    let r: i64 = c.signed_terms().map(|(sign, s)| sign * s.rank(dim)).sum();
    if r < 0 {
        return Err(Error::MalformedComplex(format!("alternating rank sum is {r}")));
    }
    Ok(r)
}

/// Euler characteristic on `P^3` by Riemann-Roch: the degree-3 part of
/// `ch(E) td(P^3)` with `td = 1 + 2h + (11/6)h^2 + h^3`.
pub fn hrr_chi(rank: i64, c: &ChowClass) -> Result<BigInt> {
    if c.dim() != 3 {
        return Err(Error::Unsupported(format!(
            "Riemann-Roch is implemented on P^3 only, got P^{}",
            c.dim()
        )));
    }
    c.require_unit_constant()?;
    let q = |v: &BigInt| BigRational::from_integer(v.clone());
    let r = BigRational::from_integer(BigInt::from(rank));
    let (c1, c2, c3) = (q(c.coeff(1)), q(c.coeff(2)), q(c.coeff(3)));
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let six = BigRational::from_integer(6.into());

    let ch1 = c1.clone();
    let ch2 = (&c1 * &c1 - &two * &c2) / &two;
    let ch3 = (&c1 * &c1 * &c1 - &three * &c1 * &c2 + &three * &c3) / &six;
    let td2 = BigRational::new(11.into(), 6.into());

    let chi = ch3 + &two * ch2 + td2 * ch1 + r;
    if !chi.is_integer() {
        return Err(Error::NonIntegralChi(chi.to_string()));
    }
    Ok(chi.to_integer())
}

/// All `a` with `|a| <= bound` such that `c / (1 + a h)` vanishes in degrees
/// `>= rank`, ascending in `a`, paired with that quotient.
pub fn factor_line(c: &ChowClass, rank: i64, bound: i64) -> Result<Vec<(i64, ChowClass)>> {
    c.require_unit_constant()?;
    if rank < 2 {
        return Err(Error::Unsupported(format!("factor_line needs rank >= 2, got {rank}")));
    }
    let mut out = Vec::new();
    for a in -bound..=bound {
        let q = c.div(&ChowClass::linear(c.dim(), a))?;
        let fits = q.coeffs.iter().skip(rank as usize).all(Zero::is_zero);
        if fits {
            out.push((a, q));
        }
    }
    Ok(out)
}
