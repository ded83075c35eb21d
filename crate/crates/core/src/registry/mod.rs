//! The classified bundles and the excluded cases, as data.
//!
//! A registry holds nine [`ClassificationEntry`] records (the rank-3
//! bundles, each with its resolution and Chern data) and a list of
//! [`ExclusionCase`] records (configurations ruled out, each with the rule
//! that rules it out). [`verify_all`] replays every record through the
//! engines; see [`format`] for the file syntax.

pub mod format;
mod verify;

use std::fmt;
use std::path::Path;

use crate::betti::BettiTable;
use crate::chow::ChowClass;
use crate::curve::{CurveClass, MultipleLineStructure};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::sheaf::FreeComplex;

pub use verify::{list_exclusions, verify_all, verify_entry};

/// Registry shipped with the crate.
pub const BUILTIN: &str = include_str!("../../data/registry.txt");

/// Curve whose dependency-locus construction produces an entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCurve {
    pub curve: CurveClass,
    pub betti: BettiTable,
    /// The table resolves the saturated ideal, so generators in degree
    /// `<= m` generate `I_Y(m)` (complete intersections, ACM curves).
    pub ci: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationEntry {
    pub id: u32,
    pub complex: FreeComplex,
    pub chern: ChowClass,
    /// Expected `c(E(-1))`.
    pub chern_tw: ChowClass,
    pub curve: Option<EntryCurve>,
    /// Expected `h^0(E(t))` values as `(t, h^0)`.
    pub h0: Vec<(i64, u64)>,
    /// Expected line factors `(a, q)` with `c(E) = (1 + a h) q`.
    pub factors: Vec<(i64, ChowClass)>,
}

/// How an exclusion is argued.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// A minimal generator of the ideal sits above the twist.
    GeneratorDegree,
    /// A quotient line bundle on a rational component has no sections.
    NoSections,
    /// The residual curve has a degree and genus no locally Cohen-Macaulay curve has.
    CmNonexistence,
    /// The residual curve's Hilbert polynomial matches no admissible multiple line.
    LiaisonResidue,
    /// A geometric fact taken as given rather than computed.
    QuadricContainmentAxiom,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::GeneratorDegree,
        Rule::NoSections,
        Rule::CmNonexistence,
        Rule::LiaisonResidue,
        Rule::QuadricContainmentAxiom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::GeneratorDegree => "generator-degree",
            Rule::NoSections => "no-sections",
            Rule::CmNonexistence => "cm-nonexistence",
            Rule::LiaisonResidue => "liaison-residue",
            Rule::QuadricContainmentAxiom => "quadric-containment-axiom",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where the Euler characteristic of a curve comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiSource {
    /// Residue of `curve` in a complete intersection of type `(d1, d2)`.
    Residue { d1: i64, d2: i64, curve: CurveClass },
    /// Union of pieces meeting in a scheme of length `meet`.
    Pieces {
        lines: Vec<MultipleLineStructure>,
        curves: Vec<CurveClass>,
        meet: u64,
    },
}

/// Quotient in a filtration `0 -> O_L(s) -> O_Y -> O_Q -> 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    Lines(MultipleLineStructure),
    Curve(CurveClass),
}

/// Solving a filtration `0 -> O_L(s) -> O_Y -> O_Q -> 0` for `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSolve {
    pub source: ChiSource,
    pub expect_chi: Option<Poly>,
    pub quotient: Quotient,
    pub kernel_twist: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExclusionData {
    /// `I_Y(twist)` fails generation by generator degree.
    Generation {
        betti: BettiTable,
        twist: i64,
        ci: bool,
        curve: Option<CurveClass>,
        h0: Vec<(i64, u64)>,
    },
    /// `O_P1(embedding_degree * k)` has no sections, optionally after solving a filtration.
    Sections {
        solve: Option<KernelSolve>,
        embedding_degree: u64,
        k: i64,
    },
    /// Residue of a disjoint union in a complete intersection.
    Residue {
        d1: i64,
        d2: i64,
        components: Vec<CurveClass>,
        /// Hilbert polynomial quoted for the residue, compared against the computation.
        quoted_chi: Poly,
        /// Admissible multiple-line structures the residue is compared with.
        compare: Vec<MultipleLineStructure>,
    },
    /// A curve class known to lie on a quadric.
    Quadric { curve: CurveClass },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionCase {
    pub label: String,
    pub rule: Rule,
    /// One-line description of the configuration.
    pub context: String,
    pub data: ExclusionData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    pub entries: Vec<ClassificationEntry>,
    pub exclusions: Vec<ExclusionCase>,
}

impl Registry {
    pub fn builtin() -> Registry {
        format::parse(BUILTIN).expect("built-in registry parses")
    }

    pub fn load(path: &Path) -> Result<Registry> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Registry(format!("cannot read {}: {e}", path.display())))?;
        format::parse(&text)
    }

    pub fn entry(&self, id: u32) -> Option<&ClassificationEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn exclusion(&self, label: &str) -> Option<&ExclusionCase> {
        self.exclusions.iter().find(|x| x.label == label)
    }
}

impl fmt::Display for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::print(self))
    }
}
