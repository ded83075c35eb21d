//! Cohomology of atoms on projective space, Euler characteristic polynomials
//! of complexes, and `h^0` of a presented sheaf when the shape of its
//! resolution determines it.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chow::binomial;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::sheaf::{AtomKind, FreeComplex, SheafAtom};

/// `h^i(P^n, O(a))`.
pub fn h_line(n: usize, i: usize, a: i64) -> BigUint {
    let nn = n as i64;
    let value = if i == 0 && a >= 0 {
        binomial(&BigInt::from(a + nn), n as u32)
    } else if i == n && a < -nn {
        binomial(&BigInt::from(-a - 1), n as u32)
    } else {
        BigInt::zero()
    };
    value.to_biguint().expect("binomial of a nonnegative argument")
}

/// Window of twists held in the precomputed tangent table.
pub const BOTT_WINDOW: i64 = 12;

/// Cohomology of `T(a)` on `P^3`, precomputed for `|a| <= BOTT_WINDOW`.
#[derive(Debug, Clone)]
pub struct BottTable {
    tangent: Vec<[BigUint; 4]>,
}

impl BottTable {
    pub fn new() -> Self {
        let tangent = (-BOTT_WINDOW..=BOTT_WINDOW).map(tangent_cohomology).collect();
        BottTable { tangent }
    }

    /// `h^i(T(a))`, falling back to the Euler-sequence computation outside the window.
    pub fn tangent(&self, i: usize, a: i64) -> BigUint {
        if (-BOTT_WINDOW..=BOTT_WINDOW).contains(&a) {
            self.tangent[(a + BOTT_WINDOW) as usize][i].clone()
        } else {
            tangent_cohomology(a)[i].clone()
        }
    }

    /// `h^i(Om(a)) = h^{3-i}(T(-a-4))` by Serre duality, `Om(a)` being dual to `T(-a)`.
    pub fn cotangent(&self, i: usize, a: i64) -> BigUint {
        self.tangent(3 - i, -a - 4)
    }
}

impl Default for BottTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Rank of `H^0(O(m-1))^4 -> H^0(O(m))`, multiplication by the coordinates.
fn coordinate_map_rank(m: i64) -> BigInt {
    if m >= 1 {
        BigInt::from(h_line(3, 0, m))
    } else {
        BigInt::zero()
    }
}

/// Long exact sequence of `0 -> O(a) -> 4O(a+1) -> T(a) -> 0` on `P^3`.
///
/// Line bundles have no `H^1`, `H^2`, so the sequence splits into
/// `0 -> H^0(O(a)) -> H^0(4O(a+1)) -> H^0(T(a)) -> 0`, `H^1(T(a)) = 0`, and
/// `0 -> H^2(T(a)) -> H^3(O(a)) -> H^3(4O(a+1)) -> H^3(T(a)) -> 0`.
/// The middle map of the last piece is dual to the coordinate map
/// `H^0(4O(-a-5)) -> H^0(O(-a-4))`.
fn tangent_cohomology(a: i64) -> [BigUint; 4] {
    let h = |i: usize, t: i64| BigInt::from(h_line(3, i, t));
    let h0 = BigInt::from(4) * h(0, a + 1) - h(0, a);
    let rank = coordinate_map_rank(-a - 4);
    let h2 = h(3, a) - &rank;
    let h3 = BigInt::from(4) * h(3, a + 1) - &rank;
    let nat = |v: BigInt| v.to_biguint().expect("cohomology dimension is nonnegative");
    [nat(h0), BigUint::zero(), nat(h2), nat(h3)]
}

fn bott() -> &'static BottTable {
    static TABLE: OnceLock<BottTable> = OnceLock::new();
    TABLE.get_or_init(BottTable::new)
}

/// `h^i` of an atom on `P^dim`.
pub fn h_atom(dim: usize, i: usize, atom: &SheafAtom) -> Result<BigUint> {
    atom.check_dim(dim)?;
    if i > dim {
        return Err(Error::Unsupported(format!(
            "cohomological index {i} exceeds dimension {dim}"
        )));
    }
    Ok(match atom.kind {
        AtomKind::LineBundle => h_line(dim, i, atom.twist),
        AtomKind::Tangent => bott().tangent(i, atom.twist),
        AtomKind::Cotangent => bott().cotangent(i, atom.twist),
    })
}

/// `chi(O(a)(t)) = C(t + a + n, n)` as a polynomial in `t`.
pub fn chi_line_poly(dim: usize, a: i64) -> Poly {
    let mut p = Poly::constant(BigRational::one());
    for k in 1..=dim as i64 {
        p = p * (Poly::t() + Poly::constant(BigRational::from_integer((a + k).into())));
    }
    let fact: BigInt = (1..=dim as u64).map(BigInt::from).product();
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// Euler characteristic of `atom(t)` as a polynomial in `t`.
pub fn chi_atom_poly(dim: usize, atom: &SheafAtom) -> Result<Poly> {
    atom.check_dim(dim)?;
    let n1 = BigRational::from_integer(BigInt::from(dim as u64 + 1));
    Ok(match atom.kind {
        AtomKind::LineBundle => chi_line_poly(dim, atom.twist),
        // 0 -> O(a) -> 4O(a+1) -> T(a) -> 0
        AtomKind::Tangent => chi_line_poly(dim, atom.twist + 1).scale(&n1) - chi_line_poly(dim, atom.twist),
        // 0 -> Om(a) -> 4O(a-1) -> O(a) -> 0
        AtomKind::Cotangent => chi_line_poly(dim, atom.twist - 1).scale(&n1) - chi_line_poly(dim, atom.twist),
    })
}

/// Alternating sum of the term characteristics: `chi` of the presented sheaf twisted by `t`.
pub fn chi_complex_poly(c: &FreeComplex) -> Result<Poly> {
    let dim = c.dim();
    let mut acc = Poly::zero();
    for (sign, term) in c.signed_terms() {
        for (atom, m) in term.iter() {
            let p = chi_atom_poly(dim, &atom)?.scale(&BigRational::from_integer(BigInt::from(sign * m as i64)));
            acc = acc + p;
        }
    }
    Ok(acc)
}

/// Result of [`h0_from_resolution`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H0Outcome {
    Value(BigUint),
    /// Some atom of the twisted resolution has higher cohomology, so the
    /// shape alone does not determine `h^0`.
    Indeterminate {
        position: usize,
        atom: SheafAtom,
    },
}

impl H0Outcome {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            H0Outcome::Value(v) => Some(v),
            H0Outcome::Indeterminate { .. } => None,
        }
    }
}

/// First atom of `c(t)` that blocks reading `h^0` off the shape: an atom at
/// position `q` with `h^p != 0` for some `1 <= p <= q`.
pub fn first_higher_cohomology(c: &FreeComplex, t: i64) -> Result<Option<(usize, SheafAtom)>> {
    let dim = c.dim();
    for (pos, term) in c.terms().iter().enumerate() {
        for (atom, _) in term.iter() {
            let a = atom.twisted(t);
            for i in 1..=pos.min(dim) {
                if !h_atom(dim, i, &a)?.is_zero() {
                    return Ok(Some((pos, a)));
                }
            }
        }
    }
    Ok(None)
}

/// `h^0` of the presented sheaf twisted by `t`.
///
/// Split the resolution into short exact sequences `0 -> K_q -> F_q -> K_{q-1} -> 0`.
/// Global sections stay exact when every `H^1(K_q)` vanishes, which follows
/// from `H^p(F_q(t)) = 0` for `1 <= p <= q`; then `h^0 = sum (-1)^q h^0(F_q(t))`.
/// If one of those groups is nonzero the answer depends on the
/// differentials and is reported as indeterminate.
pub fn h0_from_resolution(c: &FreeComplex, t: i64) -> Result<H0Outcome> {
    if let Some((position, atom)) = first_higher_cohomology(c, t)? {
        return Ok(H0Outcome::Indeterminate { position, atom });
    }
    let dim = c.dim();
    let mut total = BigInt::zero();
    for (sign, term) in c.signed_terms() {
        for (atom, m) in term.iter() {
            let h0 = BigInt::from(h_atom(dim, 0, &atom.twisted(t))?);
            total += BigInt::from(sign * m as i64) * h0;
        }
    }
    let value = total.to_biguint().ok_or_else(|| {
        Error::MalformedComplex(format!(
            "section count came out negative ({total}); the complex cannot be exact"
        ))
    })?;
    Ok(H0Outcome::Value(value))
}
