//! Numeric invariants of curves in `P^3`: Hilbert polynomials, complete
//! intersections, the rank-2 genus relation, liaison, multiple lines.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cohomology::chi_line_poly;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Degree, arithmetic genus and, when `omega_Y = O_Y(e)`, the twist `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveClass {
    degree: i64,
    genus: i64,
    omega_twist: Option<i64>,
}

impl CurveClass {
    pub fn new(degree: i64, genus: i64, omega_twist: Option<i64>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidCurve(format!("degree must be positive, got {degree}")));
        }
        if let Some(e) = omega_twist {
            if 2 * genus - 2 != degree * e {
                return Err(Error::InvalidCurve(format!(
                    "omega = O({e}) needs 2p_a - 2 = d e, but 2*{genus} - 2 != {degree}*{e}"
                )));
            }
        }
        Ok(CurveClass {
            degree,
            genus,
            omega_twist,
        })
    }

    pub fn plain(degree: i64, genus: i64) -> Result<Self> {
        Self::new(degree, genus, None)
    }

    pub fn line() -> Self {
        CurveClass {
            degree: 1,
            genus: 0,
            omega_twist: Some(-2),
        }
    }

    pub fn conic() -> Self {
        CurveClass {
            degree: 2,
            genus: 0,
            omega_twist: Some(-1),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn omega_twist(&self) -> Option<i64> {
        self.omega_twist
    }

    pub fn without_omega(self) -> Self {
        CurveClass {
            omega_twist: None,
            ..self
        }
    }

    /// `d t + 1 - p_a`.
    pub fn hilbert_poly(&self) -> Poly {
        Poly::linear(self.degree, 1 - self.genus)
    }

    /// `chi(omega_Y(m))` as a polynomial in `t` with `m = t + shift`. Uses
    /// `omega_Y = O_Y(e)` when known, Serre duality on `Y` otherwise.
    fn dualizing_chi(&self, shift: i64) -> Poly {
        match self.omega_twist {
            Some(e) => self.hilbert_poly().shift(shift + e),
            None => Poly::linear(self.degree, self.degree * shift - 1 + self.genus),
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} pa={}", self.degree, self.genus)?;
        if let Some(e) = self.omega_twist {
            write!(f, " e={e}")?;
        }
        Ok(())
    }
}

pub fn hilbert_poly(y: &CurveClass) -> Poly {
    y.hilbert_poly()
}

/// Complete intersection of surfaces of degrees `d1`, `d2`, with
/// `omega = O(d1 + d2 - 4)` by adjunction.
pub fn ci_curve(d1: i64, d2: i64) -> Result<CurveClass> {
    if d1 < 1 || d2 < 1 {
        return Err(Error::InvalidCurve(format!(
            "surface degrees must be positive, got ({d1},{d2})"
        )));
    }
    let d = d1 * d2;
    let e = d1 + d2 - 4;
    let twice = d * e;
    assert!(twice % 2 == 0, "d1 d2 (d1 + d2 - 4) is always even");
    CurveClass::new(d, 1 + twice / 2, Some(e))
}

/// Genus of the zero scheme of a section of a rank-2 bundle: `1 + c2 (c1 - 4) / 2`.
pub fn serre_rank2_genus(c1: i64, c2: i64) -> BigRational {
    BigRational::new(BigInt::from(2 + c2 * (c1 - 4)), BigInt::from(2))
}

/// `c_3` of the bundle `E` in `0 -> (r-1)O -> E -> I_Y(c1) -> 0`.
pub fn c3_from_curve(c1: i64, y: &CurveClass) -> Result<i64> {
    if c1 != 3 {
        return Err(Error::Unsupported(format!(
            "c3_from_curve is implemented for c1 = 3, got {c1}"
        )));
    }
    Ok(2 * y.genus - 2 + y.degree * (4 - c1))
}

/// `p_a` of a disjoint union is `sum p_a(C_i) - (k - 1)`. The union keeps an
/// omega twist only when all components share one.
pub fn disjoint_union(parts: &[CurveClass]) -> Result<CurveClass> {
    if parts.is_empty() {
        return Err(Error::InvalidCurve("a union needs at least one component".into()));
    }
    let degree = parts.iter().map(|c| c.degree).sum();
    let genus = parts.iter().map(|c| c.genus).sum::<i64>() - (parts.len() as i64 - 1);
    let first = parts[0].omega_twist;
    let shared = if parts.iter().all(|c| c.omega_twist == first) {
        first
    } else {
        None
    };
    CurveClass::new(degree, genus, shared)
}

/// The residue of a curve in a complete intersection, with its Hilbert polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiaisonResidue {
    pub linked: CurveClass,
    pub residue: CurveClass,
    pub chi: Poly,
}

impl fmt::Display for LiaisonResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} pa={} chi={}",
            self.residue.degree, self.residue.genus, self.chi
        )
    }
}

/// `chi(O_Z(t))` for a complete intersection of type `(d1, d2)`, from its Koszul resolution.
pub fn ci_chi(d1: i64, d2: i64) -> Poly {
    chi_line_poly(3, 0) - chi_line_poly(3, -d1) - chi_line_poly(3, -d2) + chi_line_poly(3, -d1 - d2)
}

pub fn liaison_residue(d1: i64, d2: i64, y: &CurveClass) -> Result<LiaisonResidue> {
    liaison_residue_of_union(d1, d2, std::slice::from_ref(y))
}

/// Residue of the disjoint union of `parts` in a `(d1, d2)` complete
/// intersection `Z`, computed twice and cross-checked:
///
/// * genus formula: `d' = d1 d2 - d`, `p_a' = p_a + (d1 + d2 - 4)(d' - d)/2`;
/// * Euler characteristics of `0 -> omega_Y (x) omega_Z^-1 -> O_Z -> O_Y' -> 0`,
///   summing the dualizing term over the components.
pub fn liaison_residue_of_union(d1: i64, d2: i64, parts: &[CurveClass]) -> Result<LiaisonResidue> {
    let z = ci_curve(d1, d2)?;
    let y = disjoint_union(parts)?;
    if y.degree >= z.degree {
        return Err(Error::NothingResidual {
            degree: y.degree,
            bound: z.degree,
            d1,
            d2,
        });
    }
    let s = d1 + d2 - 4;

    let residue_degree = z.degree - y.degree;
    let twice = s * (residue_degree - y.degree);
    let residue_genus = y.genus + twice / 2;
    let by_genus = Poly::linear(residue_degree, 1 - residue_genus);

    let mut by_chi = ci_chi(d1, d2);
    for c in parts {
        by_chi = by_chi - c.dualizing_chi(-s);
    }

    if by_chi != by_genus || twice % 2 != 0 {
        return Err(Error::LiaisonInconsistent {
            genus_route: by_genus.to_string(),
            chi_route: by_chi.to_string(),
        });
    }
    Ok(LiaisonResidue {
        linked: y,
        residue: CurveClass::plain(residue_degree, residue_genus)?,
        chi: by_chi,
    })
}

/// A multiple structure on a line, filtered with quotients `O_L(s_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipleLineStructure {
    twists: Vec<i64>,
}

impl MultipleLineStructure {
    pub fn new(twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::InvalidCurve("a multiple line needs at least one piece".into()));
        }
        Ok(MultipleLineStructure { twists })
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn multiplicity(&self) -> usize {
        self.twists.len()
    }
}

/// `chi = sum (t + s_i + 1)`.
pub fn multiple_line_chi(m: &MultipleLineStructure) -> Poly {
    let k = m.twists.len() as i64;
    Poly::linear(k, m.twists.iter().map(|s| s + 1).sum())
}

/// Twist `s` of the kernel `O_L(s)` in `0 -> O_L(s) -> O_X -> O_W -> 0`,
/// read off from the Hilbert polynomials of `X` and `W`.
pub fn kernel_line_twist(total: &Poly, quotient: &Poly) -> Option<i64> {
    let (a, b) = (total - quotient).as_linear_i64()?;
    (a == 1).then_some(b - 1)
}

/// Whether a locally Cohen-Macaulay curve of degree `d` and genus `p_a` exists.
pub fn cm_exists(d: i64, p_a: i64) -> bool {
    if d < 1 {
        return false;
    }
    2 * p_a == (d - 1) * (d - 2) || (d > 1 && 2 * p_a <= (d - 2) * (d - 3))
}

/// `h^0(O_Y(k))` for a smooth rational curve embedded with degree `embedding_degree`.
pub fn section_count_rational(embedding_degree: u64, k: i64) -> u64 {
    let v = k * embedding_degree as i64 + 1;
    v.max(0) as u64
}
