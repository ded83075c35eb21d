//! Formal sheaf presentations: atoms `O(a)`, `T(a)`, `Om(a)`, their direct
//! sums, and exact complexes presenting a sheaf.
//!
//! Complexes carry shapes only, no differentials. Position 0 is the term
//! mapping onto the presented sheaf; position `k` is the leftmost term of
//! `0 -> F_k -> ... -> F_0 -> E -> 0`.

use std::collections::BTreeMap;
use std::fmt;

use crate::betti::BettiTable;
use crate::error::{Error, Result};

/// The ambient dimension on which tangent and cotangent atoms are supported.
pub const TANGENT_DIM: usize = 3;

/// Sort order is tangent, cotangent, line bundle; sums print in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    Tangent,
    Cotangent,
    LineBundle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SheafAtom {
    pub kind: AtomKind,
    pub twist: i64,
}

impl SheafAtom {
    pub const fn line(twist: i64) -> Self {
        SheafAtom {
            kind: AtomKind::LineBundle,
            twist,
        }
    }

    pub const fn tangent(twist: i64) -> Self {
        SheafAtom {
            kind: AtomKind::Tangent,
            twist,
        }
    }

    pub const fn cotangent(twist: i64) -> Self {
        SheafAtom {
            kind: AtomKind::Cotangent,
            twist,
        }
    }

    pub fn rank(&self, dim: usize) -> i64 {
        match self.kind {
            AtomKind::LineBundle => 1,
            AtomKind::Tangent | AtomKind::Cotangent => dim as i64,
        }
    }

    pub fn twisted(&self, t: i64) -> Self {
        SheafAtom {
            kind: self.kind,
            twist: self.twist + t,
        }
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.kind != AtomKind::LineBundle && dim != TANGENT_DIM {
            return Err(Error::UnsupportedAtom {
                atom: self.to_string(),
                dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SheafAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.twist) {
            (AtomKind::LineBundle, 0) => f.write_str("O"),
            (AtomKind::LineBundle, a) => write!(f, "O({a})"),
            (AtomKind::Tangent, a) => write!(f, "T({a})"),
            (AtomKind::Cotangent, a) => write!(f, "Om({a})"),
        }
    }
}

/// A direct sum of atoms with positive multiplicities, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SheafSum {
    terms: BTreeMap<SheafAtom, u64>,
}

impl SheafSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of(atom: SheafAtom, multiplicity: u64) -> Self {
        let mut s = Self::new();
        s.add(atom, multiplicity);
        s
    }

    /// Adds `multiplicity` copies of `atom`. A zero multiplicity is a no-op.
    pub fn add(&mut self, atom: SheafAtom, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(atom).or_insert(0) += multiplicity;
        }
    }

    pub fn with(mut self, atom: SheafAtom, multiplicity: u64) -> Self {
        self.add(atom, multiplicity);
        self
    }

    pub fn direct_sum(&self, other: &SheafSum) -> SheafSum {
        let mut out = self.clone();
        for (atom, m) in other.iter() {
            out.add(atom, m);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (SheafAtom, u64)> + '_ {
        self.terms.iter().map(|(a, m)| (*a, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, atom: &SheafAtom) -> u64 {
        self.terms.get(atom).copied().unwrap_or(0)
    }

    pub fn rank(&self, dim: usize) -> i64 {
        self.iter().map(|(a, m)| a.rank(dim) * m as i64).sum()
    }

    pub fn twisted(&self, t: i64) -> SheafSum {
        SheafSum {
            terms: self.terms.iter().map(|(a, m)| (a.twisted(t), *m)).collect(),
        }
    }

    pub fn has_tangent_atoms(&self) -> bool {
        self.terms.keys().any(|a| a.kind != AtomKind::LineBundle)
    }
}

impl FromIterator<(SheafAtom, u64)> for SheafSum {
    fn from_iter<I: IntoIterator<Item = (SheafAtom, u64)>>(iter: I) -> Self {
        let mut s = SheafSum::new();
        for (a, m) in iter {
            s.add(a, m);
        }
        s
    }
}

impl fmt::Display for SheafSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (atom, m)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

/// An exact complex `0 -> F_k -> ... -> F_0 -> presented -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeComplex {
    dim: usize,
    terms: Vec<SheafSum>,
    presented: String,
    exact: bool,
}

impl FreeComplex {
    /// `terms[i]` is the term at homological position `i`.
    pub fn new(dim: usize, terms: Vec<SheafSum>, presented: impl Into<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if terms.is_empty() {
            return Err(Error::MalformedComplex("a complex needs at least one term".into()));
        }
        for (i, term) in terms.iter().enumerate() {
            if term.is_empty() {
                return Err(Error::MalformedComplex(format!("term at position {i} is empty")));
            }
            for (atom, _) in term.iter() {
                atom.check_dim(dim)?;
            }
        }
        let presented = presented.into();
        if presented.trim().is_empty() {
            return Err(Error::MalformedComplex("presented sheaf needs a name".into()));
        }
        Ok(FreeComplex {
            dim,
            terms,
            presented,
            exact: true,
        })
    }

    /// Builds from the written order, leftmost term first.
    pub fn from_written(dim: usize, mut written: Vec<SheafSum>, presented: impl Into<String>) -> Result<Self> {
        written.reverse();
        Self::new(dim, written, presented)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[SheafSum] {
        &self.terms
    }

    pub fn term(&self, position: usize) -> Option<&SheafSum> {
        self.terms.get(position)
    }

    pub fn presented(&self) -> &str {
        &self.presented
    }

    /// Always true: exactness of supplied complexes is taken on trust.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_presented(mut self, name: impl Into<String>) -> Self {
        self.presented = name.into();
        self
    }

    /// Terms paired with their sign `(-1)^position`.
    pub fn signed_terms(&self) -> impl Iterator<Item = (i64, &SheafSum)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, s)| (if i % 2 == 0 { 1 } else { -1 }, s))
    }

    pub fn has_tangent_atoms(&self) -> bool {
        self.terms.iter().any(SheafSum::has_tangent_atoms)
    }

    /// Replaces each `T(a)` at position `i` by `(n+1)O(a+1)` at `i` and `O(a)`
    /// at `i+1` (twisted Euler sequence), and each `Om(a)` by `(n+1)O(a-1)` at
    /// `i` and `O(a)` at `i+1`. The result has the same rank, Chern class and
    /// Euler characteristic and contains only line bundles.
    pub fn euler_normal_form(&self) -> FreeComplex {
        let n1 = self.dim as u64 + 1;
        let mut out: Vec<SheafSum> = vec![SheafSum::new(); self.terms.len() + 1];
        for (i, term) in self.terms.iter().enumerate() {
            for (atom, m) in term.iter() {
                match atom.kind {
                    AtomKind::LineBundle => out[i].add(atom, m),
                    AtomKind::Tangent => {
                        out[i].add(SheafAtom::line(atom.twist + 1), n1 * m);
                        out[i + 1].add(SheafAtom::line(atom.twist), m);
                    }
                    AtomKind::Cotangent => {
                        out[i].add(SheafAtom::line(atom.twist - 1), n1 * m);
                        out[i + 1].add(SheafAtom::line(atom.twist), m);
                    }
                }
            }
        }
        while out.last().is_some_and(SheafSum::is_empty) {
            out.pop();
        }
        FreeComplex {
            dim: self.dim,
            terms: out,
            presented: self.presented.clone(),
            exact: self.exact,
        }
    }
}

/// Name of the `t`-twist of a presented sheaf.
fn twisted_name(name: &str, t: i64) -> String {
    if t == 0 {
        name.to_string()
    } else {
        format!("{name}({t})")
    }
}

/// Twists every atom by `t`; the result presents the `t`-twist.
pub fn twist_complex(c: &FreeComplex, t: i64) -> FreeComplex {
    FreeComplex {
        dim: c.dim,
        terms: c.terms.iter().map(|s| s.twisted(t)).collect(),
        presented: twisted_name(&c.presented, t),
        exact: c.exact,
    }
}

/// Resolution of the rank-`r` bundle `E` in `0 -> (r-1)O -> E -> I_Y(3) -> 0`
/// obtained from the minimal resolution of `I_Y`: twist by 3 and adjoin
/// `(r-1)O` to position 0.
pub fn mapping_cone_bundle(b: &BettiTable, r: i64) -> Result<FreeComplex> {
    if r < 2 {
        return Err(Error::MalformedComplex(format!(
            "bundle rank must be at least 2, got {r}"
        )));
    }
    let top = b.max_gen_degree();
    if top > 3 {
        return Err(Error::GeneratorTooHigh { degree: top });
    }
    let ideal = twist_complex(&b.ideal_complex(), 3);
    let mut terms = ideal.terms;
    terms[0].add(SheafAtom::line(0), (r - 1) as u64);
    FreeComplex::new(ideal.dim, terms, "E")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(a: i64) -> SheafAtom {
        SheafAtom::line(a)
    }

    #[test]
    fn canonical_order_puts_tangent_first() {
        let s = SheafSum::new().with(o(-1), 1).with(SheafAtom::tangent(-2), 1);
        assert_eq!(s.to_string(), "T(-2) + O(-1)");
        let s = SheafSum::new().with(o(1), 1).with(o(0), 3);
        assert_eq!(s.to_string(), "3O + O(1)");
    }

    #[test]
    fn twist_elliptic_quintic_resolution() {
        let c = FreeComplex::from_written(
            3,
            vec![SheafSum::of(o(-5), 1), SheafSum::of(o(-4), 5), SheafSum::of(o(-3), 5)],
            "I_Y",
        )
        .unwrap();
        let t = twist_complex(&c, 3);
        let expected = FreeComplex::from_written(
            3,
            vec![SheafSum::of(o(-2), 1), SheafSum::of(o(-1), 5), SheafSum::of(o(0), 5)],
            "I_Y(3)",
        )
        .unwrap();
        assert_eq!(t, expected);
        assert_eq!(twist_complex(&c, 0), c);
    }

    #[test]
    fn twist_componentwise() {
        let c = FreeComplex::from_written(
            3,
            vec![SheafSum::of(o(-3), 1), SheafSum::new().with(o(-1), 2).with(o(-2), 1)],
            "E",
        )
        .unwrap();
        let t = twist_complex(&c, -1);
        assert_eq!(t.term(1), Some(&SheafSum::of(o(-4), 1)));
        assert_eq!(t.term(0), Some(&SheafSum::new().with(o(-2), 2).with(o(-3), 1)));
    }

    #[test]
    fn euler_normal_form_expands_tangent() {
        // entry (9): T(-2) + O(-1) -> 7O
        let c = FreeComplex::from_written(
            3,
            vec![
                SheafSum::new().with(SheafAtom::tangent(-2), 1).with(o(-1), 1),
                SheafSum::of(o(0), 7),
            ],
            "E",
        )
        .unwrap();
        let nf = c.euler_normal_form();
        assert_eq!(
            nf.terms(),
            &[SheafSum::of(o(0), 7), SheafSum::of(o(-1), 5), SheafSum::of(o(-2), 1)]
        );
    }

    #[test]
    fn rejects_tangent_outside_p3() {
        let err = FreeComplex::new(4, vec![SheafSum::of(SheafAtom::tangent(0), 1)], "E").unwrap_err();
        assert!(matches!(err, Error::UnsupportedAtom { dim: 4, .. }));
    }

    #[test]
    fn rejects_empty_terms() {
        assert!(FreeComplex::new(3, vec![], "E").is_err());
        assert!(FreeComplex::new(3, vec![SheafSum::new()], "E").is_err());
    }
}
