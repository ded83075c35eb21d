//! Graded Betti tables of curve ideals in `P^3`.
//!
//! Entries `(i, j, beta)` record `beta` copies of `O(-j)` at homological
//! position `i` of a minimal resolution of the ideal sheaf `I_Y`, position 0
//! being the generators. Minimality is assumed, not checked; a non-minimal
//! table can only overstate the regularity.
//!
//! File format: one `i j beta` record per line, `#` starts a comment. A
//! leading `# subject: <name>` comment names the table. Printing emits the
//! subject line followed by records sorted by `(i, j)`, so canonical files
//! round-trip byte for byte.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cohomology::chi_line_poly;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::sheaf::{FreeComplex, SheafAtom, SheafSum};

const SUBJECT_TAG: &str = "# subject:";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
    subject: String,
}

impl BettiTable {
    pub fn new(subject: impl Into<String>, entries: impl IntoIterator<Item = (usize, i64, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, j, beta) in entries {
            if beta == 0 {
                continue;
            }
            if i > 3 {
                return Err(Error::InvalidBetti(format!("homological index {i} exceeds 3")));
            }
            if map.insert((i, j), beta).is_some() {
                return Err(Error::InvalidBetti(format!("duplicate entry ({i}, {j})")));
            }
        }
        let table = BettiTable {
            entries: map,
            subject: subject.into(),
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        if !self.entries.keys().any(|(i, _)| *i == 0) {
            return Err(Error::InvalidBetti("no generators (position 0 is empty)".into()));
        }
        let alt: i64 = self
            .entries
            .iter()
            .map(|((i, _), b)| if i % 2 == 0 { *b as i64 } else { -(*b as i64) })
            .sum();
        if alt != 1 {
            return Err(Error::InvalidBetti(format!(
                "alternating rank sum is {alt}, an ideal sheaf needs 1"
            )));
        }
        Ok(())
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn with_subject(mut self, subject: impl Into<String>) -> Self {
        self.subject = subject.into();
        self
    }

    /// `(i, j, beta)` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|((i, j), b)| (*i, *j, *b))
    }

    pub fn beta(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// The resolution `... -> F_1 -> F_0 -> I_Y -> 0` with `F_i = sum beta_{i,j} O(-j)`.
    pub fn ideal_complex(&self) -> FreeComplex {
        let mut terms = vec![SheafSum::new(); self.length() + 1];
        for (i, j, b) in self.entries() {
            terms[i].add(SheafAtom::line(-j), b);
        }
        FreeComplex::new(3, terms, "I_Y").expect("validated table gives a well-formed complex")
    }

    /// `chi(O_Y(t)) = chi(O(t)) - sum (-1)^i beta_{i,j} chi(O(t-j))`.
    pub fn hilbert_poly(&self) -> Poly {
        let mut p = chi_line_poly(3, 0);
        for (i, j, b) in self.entries() {
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            let w = BigRational::from_integer(BigInt::from(sign * b as i64));
            p = p - chi_line_poly(3, -j).scale(&w);
        }
        p
    }

    /// Castelnuovo-Mumford regularity `max (j - i)`.
    pub fn regularity(&self) -> i64 {
        self.entries()
            .map(|(i, j, _)| j - i as i64)
            .max()
            .expect("table is nonempty")
    }

    pub fn max_gen_degree(&self) -> i64 {
        self.entries()
            .filter(|(i, _, _)| *i == 0)
            .map(|(_, j, _)| j)
            .max()
            .expect("table has generators")
    }

    /// Three-valued verdict on global generation of `I_Y(m)`.
    ///
    /// A generator above `m` rules it out; `m >= reg` certifies it. With
    /// `generators_generate` set, the caller asserts the table resolves the
    /// saturated ideal (complete intersections, ACM curves), so the sheaf is
    /// generated in the generator degrees and `m >= max_gen_degree` suffices.
    pub fn gg_twist_check(&self, m: i64, generators_generate: bool) -> GgVerdict {
        let top = self.max_gen_degree();
        let reg = self.regularity();
        if top > m {
            GgVerdict::new(GgKind::NotGg, format!("generator-degree {top} > twist {m}"))
        } else if m >= reg {
            GgVerdict::new(GgKind::GgCertified, format!("twist {m} >= regularity {reg}"))
        } else if generators_generate {
            GgVerdict::new(
                GgKind::GgCertified,
                format!("ci-hint and twist {m} >= generator-degree {top}"),
            )
        } else {
            GgVerdict::new(
                GgKind::Unknown,
                format!("generator-degree {top} <= twist {m} < regularity {reg}"),
            )
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut subject = String::new();
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = raw.trim();
            if let Some(rest) = trimmed.strip_prefix(SUBJECT_TAG) {
                if entries.is_empty() && subject.is_empty() {
                    subject = rest.trim().to_string();
                }
                continue;
            }
            let body = trimmed.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            entries.push(parse_record(body, line_no, raw)?);
        }
        Self::new(subject, entries)
    }
}

fn parse_record(body: &str, line_no: usize, raw: &str) -> Result<(usize, i64, u64)> {
    let col = raw.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::parse(
            line_no,
            col,
            format!("expected `i j beta`, found {} fields", fields.len()),
        ));
    }
    let i: usize = fields[0]
        .parse()
        .map_err(|_| Error::parse(line_no, col, format!("bad homological index `{}`", fields[0])))?;
    let j: i64 = fields[1]
        .parse()
        .map_err(|_| Error::parse(line_no, col, format!("bad degree `{}`", fields[1])))?;
    let beta: u64 = fields[2]
        .parse()
        .map_err(|_| Error::parse(line_no, col, format!("bad multiplicity `{}`", fields[2])))?;
    if beta == 0 {
        return Err(Error::parse(line_no, col, "multiplicity must be positive"));
    }
    Ok((i, j, beta))
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.subject.is_empty() {
            writeln!(f, "{SUBJECT_TAG} {}", self.subject)?;
        }
        for (i, j, b) in self.entries() {
            writeln!(f, "{i} {j} {b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GgKind {
    GgCertified,
    NotGg,
    Unknown,
}

impl fmt::Display for GgKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GgKind::GgCertified => "gg-certified",
            GgKind::NotGg => "not-gg",
            GgKind::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GgVerdict {
    pub kind: GgKind,
    pub reason: String,
}

impl GgVerdict {
    fn new(kind: GgKind, reason: String) -> Self {
        GgVerdict { kind, reason }
    }
}

impl fmt::Display for GgVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.kind, self.reason)
    }
}
