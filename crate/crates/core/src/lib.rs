//! Exact symbolic calculus for vector bundles on projective space.
//!
//! The crate covers the numeric side of classifying globally generated
//! bundles on P³: Chern classes in the truncated Chow ring, Euler
//! characteristics and guarded section counts read off free resolutions,
//! Betti-table invariants, liaison arithmetic for space curves, and a
//! registry that replays a classification and its exclusions.
//!
//! All arithmetic is exact: integers are arbitrary precision and the only
//! rationals are reduced fractions.

pub mod betti;
pub mod chow;
pub mod cohomology;
pub mod curve;
pub mod error;
pub mod grammar;
pub mod poly;
pub mod registry;
pub mod report;
pub mod sheaf;

pub use betti::{BettiTable, GgKind, GgVerdict};
pub use chow::{
    binomial, chern_from_complex, chern_of_atom, chern_of_sum, factor_line, hrr_chi, rank_of_complex, ChowClass,
};
pub use cohomology::{
    chi_atom_poly, chi_complex_poly, chi_line_poly, h0_from_resolution, h_atom, h_line, BottTable, H0Outcome,
};
pub use curve::{
    c3_from_curve, ci_chi, ci_curve, cm_exists, disjoint_union, hilbert_poly, kernel_line_twist, liaison_residue,
    liaison_residue_of_union, multiple_line_chi, section_count_rational, serre_rank2_genus, CurveClass, LiaisonResidue,
    MultipleLineStructure,
};
pub use error::{Error, Result};
pub use grammar::{parse_chow_class, parse_complex, parse_complex_at};
pub use poly::Poly;
pub use registry::{list_exclusions, verify_all, verify_entry, ClassificationEntry, ExclusionCase, Registry, Rule};
pub use report::{Check, Report, Status};
pub use sheaf::{mapping_cone_bundle, twist_complex, AtomKind, FreeComplex, SheafAtom, SheafSum, TANGENT_DIM};
