//! Registry file syntax.
//!
//! A registry is a sequence of records separated by blank lines. Lines
//! starting with `#` are comments. Each record opens with `entry <id>` or
//! `exclusion <label>`; every other line is `<key> <value>`.
//!
//! Entry keys:
//!
//! ```text
//! complex   <complex>          resolution of E, in the complex grammar
//! chern     <class>            expected c(E)
//! chern_tw  <class>            expected c(E(-1))
//! curve     d pa [e]           curve behind the construction (optional)
//! ci                           its table resolves the saturated ideal
//! betti ... end                its Betti table, one `i j beta` per line
//! h0        t n                expected h^0(E(t)) = n (repeatable)
//! factor    a <class>          expected factor c(E) = (1 + a h) <class> (repeatable)
//! ```
//!
//! Exclusion keys: `rule <name>` and `context <text>`, then per rule
//!
//! ```text
//! generator-degree           betti ... end, twist m, [ci], [curve d pa [e]], [h0 t n]*
//! no-sections                sections deg k, optionally a filtration to solve:
//!                              linked d1 d2 + curve d pa [e]     (residue of the curve)
//!                              | piece-lines s.. / piece-curve d pa [e] / meet n
//!                              [expect-chi <poly>]
//!                              quotient-lines s.. | quotient-curve d pa [e]
//!                              kernel-twist s
//! cm-nonexistence,           linked d1 d2, component d pa [e] (repeatable),
//! liaison-residue              quoted-chi <poly>, [compare-lines s..]*
//! quadric-containment-axiom  curve d pa [e]
//! ```
//!
//! [`print`] writes records in this key order with single spaces, so a
//! canonical file (no comments) round-trips byte for byte.

use std::fmt::Write as _;

use crate::betti::BettiTable;
use crate::chow::ChowClass;
use crate::curve::{CurveClass, MultipleLineStructure};
use crate::error::{Error, Result};
use crate::grammar::{parse_chow_class, parse_complex_at};
use crate::poly::Poly;
use crate::sheaf::FreeComplex;

use super::{
    ChiSource, ClassificationEntry, EntryCurve, ExclusionCase, ExclusionData, KernelSolve, Quotient, Registry, Rule,
};

const ENTRY_KEYS: &[&str] = &["complex", "chern", "chern_tw", "curve", "ci", "betti", "h0", "factor"];

fn keys_for(rule: Rule) -> &'static [&'static str] {
    match rule {
        Rule::GeneratorDegree => &["betti", "twist", "ci", "curve", "h0"],
        Rule::NoSections => &[
            "sections",
            "linked",
            "curve",
            "piece-lines",
            "piece-curve",
            "meet",
            "expect-chi",
            "quotient-lines",
            "quotient-curve",
            "kernel-twist",
        ],
        Rule::CmNonexistence | Rule::LiaisonResidue => &["linked", "component", "quoted-chi", "compare-lines"],
        Rule::QuadricContainmentAxiom => &["curve"],
    }
}

const REPEATABLE: &[&str] = &[
    "h0",
    "factor",
    "component",
    "piece-lines",
    "piece-curve",
    "compare-lines",
];

enum Head {
    Entry(u32),
    Exclusion(String),
}

/// Raw fields of one record before validation.
struct Record {
    head: Head,
    line: usize,
    seen: Vec<(String, usize)>,
    complex: Option<FreeComplex>,
    chern: Option<ChowClass>,
    chern_tw: Option<ChowClass>,
    curve: Option<CurveClass>,
    ci: bool,
    betti: Option<BettiTable>,
    h0: Vec<(i64, u64)>,
    factors: Vec<(i64, ChowClass)>,
    rule: Option<Rule>,
    context: Option<String>,
    twist: Option<i64>,
    sections: Option<(u64, i64)>,
    linked: Option<(i64, i64)>,
    components: Vec<CurveClass>,
    piece_lines: Vec<MultipleLineStructure>,
    piece_curves: Vec<CurveClass>,
    meet: Option<u64>,
    expect_chi: Option<Poly>,
    quotient: Option<Quotient>,
    kernel_twist: Option<i64>,
    quoted_chi: Option<Poly>,
    compare: Vec<MultipleLineStructure>,
}

impl Record {
    fn new(head: Head, line: usize) -> Self {
        Record {
            head,
            line,
            seen: Vec::new(),
            complex: None,
            chern: None,
            chern_tw: None,
            curve: None,
            ci: false,
            betti: None,
            h0: Vec::new(),
            factors: Vec::new(),
            rule: None,
            context: None,
            twist: None,
            sections: None,
            linked: None,
            components: Vec::new(),
            piece_lines: Vec::new(),
            piece_curves: Vec::new(),
            meet: None,
            expect_chi: None,
            quotient: None,
            kernel_twist: None,
            quoted_chi: None,
            compare: Vec::new(),
        }
    }

    fn has(&self, key: &str) -> bool {
        self.seen.iter().any(|(k, _)| k == key)
    }

    fn missing(&self, key: &str) -> Error {
        Error::parse(self.line, 1, format!("record is missing `{key}`"))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for (key, line) in &self.seen {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::parse(
                    *line,
                    1,
                    format!("key `{key}` does not apply to this record"),
                ));
            }
        }
        Ok(())
    }

    fn into_entry(self, id: u32) -> Result<ClassificationEntry> {
        self.check_keys(ENTRY_KEYS)?;
        let curve = match (self.curve, self.betti) {
            (Some(curve), Some(betti)) => Some(EntryCurve {
                curve,
                betti,
                ci: self.ci,
            }),
            (None, None) if !self.ci => None,
            _ => return Err(Error::parse(self.line, 1, "`curve`, `betti` and `ci` go together")),
        };
        Ok(ClassificationEntry {
            id,
            complex: self
                .complex
                .ok_or_else(|| Error::parse(self.line, 1, "record is missing `complex`"))?,
            chern: self
                .chern
                .ok_or_else(|| Error::parse(self.line, 1, "record is missing `chern`"))?,
            chern_tw: self
                .chern_tw
                .ok_or_else(|| Error::parse(self.line, 1, "record is missing `chern_tw`"))?,
            curve,
            h0: self.h0,
            factors: self.factors,
        })
    }

    fn into_exclusion(self, label: String) -> Result<ExclusionCase> {
        let rule = self.rule.ok_or_else(|| self.missing("rule"))?;
        let context = self.context.clone().ok_or_else(|| self.missing("context"))?;
        let mut allowed = vec!["rule", "context"];
        allowed.extend_from_slice(keys_for(rule));
        self.check_keys(&allowed)?;
        let data = match rule {
            Rule::GeneratorDegree => ExclusionData::Generation {
                twist: self.twist.ok_or_else(|| self.missing("twist"))?,
                betti: self
                    .betti
                    .ok_or_else(|| Error::parse(self.line, 1, "record is missing `betti`"))?,
                ci: self.ci,
                curve: self.curve,
                h0: self.h0,
            },
            Rule::NoSections => {
                let (embedding_degree, k) = self.sections.ok_or_else(|| self.missing("sections"))?;
                let solve = if self.has("kernel-twist") {
                    let source = match self.linked {
                        Some((d1, d2)) => {
                            if self.has("piece-lines") || self.has("piece-curve") || self.has("meet") {
                                return Err(Error::parse(self.line, 1, "use either `linked` or pieces, not both"));
                            }
                            ChiSource::Residue {
                                d1,
                                d2,
                                curve: self.curve.ok_or_else(|| self.missing("curve"))?,
                            }
                        }
                        None => {
                            if self.piece_lines.is_empty() && self.piece_curves.is_empty() {
                                return Err(self.missing("linked"));
                            }
                            ChiSource::Pieces {
                                lines: self.piece_lines.clone(),
                                curves: self.piece_curves.clone(),
                                meet: self.meet.unwrap_or(0),
                            }
                        }
                    };
                    Some(KernelSolve {
                        source,
                        expect_chi: self.expect_chi.clone(),
                        quotient: self.quotient.clone().ok_or_else(|| self.missing("quotient-lines"))?,
                        kernel_twist: self.kernel_twist.expect("checked above"),
                    })
                } else {
                    if let Some((key, line)) = self
                        .seen
                        .iter()
                        .find(|(k, _)| k != "rule" && k != "context" && k != "sections")
                    {
                        return Err(Error::parse(*line, 1, format!("key `{key}` needs `kernel-twist`")));
                    }
                    None
                };
                ExclusionData::Sections {
                    solve,
                    embedding_degree,
                    k,
                }
            }
            Rule::CmNonexistence | Rule::LiaisonResidue => {
                let (d1, d2) = self.linked.ok_or_else(|| self.missing("linked"))?;
                if self.components.is_empty() {
                    return Err(self.missing("component"));
                }
                ExclusionData::Residue {
                    d1,
                    d2,
                    quoted_chi: self.quoted_chi.clone().ok_or_else(|| self.missing("quoted-chi"))?,
                    components: self.components,
                    compare: self.compare,
                }
            }
            Rule::QuadricContainmentAxiom => ExclusionData::Quadric {
                curve: self.curve.ok_or_else(|| self.missing("curve"))?,
            },
        };
        Ok(ExclusionCase {
            label,
            rule,
            context,
            data,
        })
    }

    fn finish(self) -> Result<Record2> {
        match &self.head {
            Head::Entry(id) => {
                let id = *id;
                self.into_entry(id).map(Record2::Entry)
            }
            Head::Exclusion(label) => {
                let label = label.clone();
                self.into_exclusion(label).map(Record2::Exclusion)
            }
        }
    }
}

enum Record2 {
    Entry(ClassificationEntry),
    Exclusion(ExclusionCase),
}

/// 1-based column of the first character after `key` and its separator.
fn value_column(raw: &str, key: &str) -> usize {
    let indent = raw.len() - raw.trim_start().len();
    let after_key = &raw[indent + key.len()..];
    let gap = after_key.len() - after_key.trim_start().len();
    raw[..indent + key.len() + gap].chars().count() + 1
}

fn ints<T: std::str::FromStr>(
    value: &str,
    want: std::ops::RangeInclusive<usize>,
    line: usize,
    col: usize,
) -> Result<Vec<T>> {
    let parts: Vec<&str> = value.split_whitespace().collect();
    if !want.contains(&parts.len()) {
        let expect = if want.start() == want.end() {
            format!("{}", want.start())
        } else {
            format!("{} to {}", want.start(), want.end())
        };
        return Err(Error::parse(
            line,
            col,
            format!("expected {expect} integers, found {}", parts.len()),
        ));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<T>()
                .map_err(|_| Error::parse(line, col, format!("bad integer `{p}`")))
        })
        .collect()
}

fn curve_value(value: &str, line: usize, col: usize) -> Result<CurveClass> {
    let v: Vec<i64> = ints(value, 2..=3, line, col)?;
    CurveClass::new(v[0], v[1], v.get(2).copied()).map_err(|e| Error::parse(line, col, e.to_string()))
}

fn lines_value(value: &str, line: usize, col: usize) -> Result<MultipleLineStructure> {
    let v: Vec<i64> = ints(value, 1..=usize::MAX, line, col)?;
    MultipleLineStructure::new(v).map_err(|e| Error::parse(line, col, e.to_string()))
}

fn poly_value(value: &str, line: usize, col: usize) -> Result<Poly> {
    value.parse::<Poly>().map_err(|e| relocate(e, line, col))
}

fn class_value(value: &str, line: usize, col: usize) -> Result<ChowClass> {
    parse_chow_class(value, 3).map_err(|e| relocate(e, line, col))
}

/// Moves a single-line parse error to its place in the file.
fn relocate(e: Error, line: usize, col: usize) -> Error {
    match e {
        Error::Parse { column, message, .. } => Error::parse(line, col + column - 1, message),
        other => Error::parse(line, col, other.to_string()),
    }
}

fn set<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<()> {
    if slot.is_some() {
        return Err(Error::parse(line, 1, format!("duplicate `{key}`")));
    }
    *slot = Some(value);
    Ok(())
}

pub fn parse(text: &str) -> Result<Registry> {
    let mut records: Vec<Record2> = Vec::new();
    let mut current: Option<Record> = None;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    while let Some((line, raw)) = lines.next() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = match trimmed.split_once(char::is_whitespace) {
            Some((k, v)) => (k, v.trim()),
            None => (trimmed, ""),
        };
        let col = value_column(raw, key);

        match key {
            "entry" => {
                if let Some(r) = current.take() {
                    records.push(r.finish()?);
                }
                let id: Vec<u32> = ints(value, 1..=1, line, col)?;
                current = Some(Record::new(Head::Entry(id[0]), line));
                continue;
            }
            "exclusion" => {
                if let Some(r) = current.take() {
                    records.push(r.finish()?);
                }
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(Error::parse(line, col, "exclusion label must be a single word"));
                }
                current = Some(Record::new(Head::Exclusion(value.to_string()), line));
                continue;
            }
            _ => {}
        }

        let rec = current
            .as_mut()
            .ok_or_else(|| Error::parse(line, 1, "expected `entry` or `exclusion`"))?;
        if rec.has(key) && !REPEATABLE.contains(&key) {
            return Err(Error::parse(line, 1, format!("duplicate `{key}`")));
        }
        rec.seen.push((key.to_string(), line));

        match key {
            "complex" => rec.complex = Some(parse_complex_at(value, 3, line, col - 1)?),
            "chern" => rec.chern = Some(class_value(value, line, col)?),
            "chern_tw" => rec.chern_tw = Some(class_value(value, line, col)?),
            "curve" => rec.curve = Some(curve_value(value, line, col)?),
            "ci" => {
                if !value.is_empty() {
                    return Err(Error::parse(line, col, "`ci` takes no value"));
                }
                rec.ci = true;
            }
            "betti" => {
                if !value.is_empty() {
                    return Err(Error::parse(
                        line,
                        col,
                        "`betti` takes no value; records follow on their own lines",
                    ));
                }
                let mut body = String::new();
                let start = line;
                let mut closed = false;
                for (_, raw) in lines.by_ref() {
                    if raw.trim() == "end" {
                        closed = true;
                        break;
                    }
                    body.push_str(raw);
                    body.push('\n');
                }
                if !closed {
                    return Err(Error::parse(start, 1, "`betti` block is not closed by `end`"));
                }
                let subject = match &rec.head {
                    Head::Entry(id) => format!("entry {id}"),
                    Head::Exclusion(label) => label.clone(),
                };
                let table = BettiTable::parse(&body).map_err(|e| match e {
                    Error::Parse {
                        line: l,
                        column,
                        message,
                    } => Error::parse(start + l, column, message),
                    other => Error::parse(start, 1, other.to_string()),
                })?;
                rec.betti = Some(table.with_subject(subject));
            }
            "h0" => {
                let v: Vec<i64> = ints(value, 2..=2, line, col)?;
                let n = u64::try_from(v[1]).map_err(|_| Error::parse(line, col, "h0 must be nonnegative"))?;
                rec.h0.push((v[0], n));
            }
            "factor" => {
                let (a, class) = value
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| Error::parse(line, col, "expected `factor a <class>`"))?;
                let a: i64 = a
                    .parse()
                    .map_err(|_| Error::parse(line, col, format!("bad integer `{a}`")))?;
                let class_col = value_column(raw, key) + value.len() - class.trim_start().len();
                rec.factors.push((a, class_value(class.trim(), line, class_col)?));
            }
            "rule" => {
                let rule =
                    Rule::from_name(value).ok_or_else(|| Error::parse(line, col, format!("unknown rule `{value}`")))?;
                set(&mut rec.rule, rule, key, line)?;
            }
            "context" => set(&mut rec.context, value.to_string(), key, line)?,
            "twist" => rec.twist = Some(ints(value, 1..=1, line, col)?[0]),
            "sections" => {
                let v: Vec<i64> = ints(value, 2..=2, line, col)?;
                let deg = u64::try_from(v[0])
                    .ok()
                    .filter(|d| *d >= 1)
                    .ok_or_else(|| Error::parse(line, col, "embedding degree must be positive"))?;
                rec.sections = Some((deg, v[1]));
            }
            "linked" => {
                let v: Vec<i64> = ints(value, 2..=2, line, col)?;
                if v[0] < 1 || v[1] < 1 {
                    return Err(Error::parse(line, col, "surface degrees must be positive"));
                }
                rec.linked = Some((v[0], v[1]));
            }
            "component" => rec.components.push(curve_value(value, line, col)?),
            "piece-lines" => rec.piece_lines.push(lines_value(value, line, col)?),
            "piece-curve" => rec.piece_curves.push(curve_value(value, line, col)?),
            "meet" => rec.meet = Some(ints(value, 1..=1, line, col)?[0]),
            "expect-chi" => rec.expect_chi = Some(poly_value(value, line, col)?),
            "quotient-lines" | "quotient-curve" => {
                let q = if key == "quotient-lines" {
                    Quotient::Lines(lines_value(value, line, col)?)
                } else {
                    Quotient::Curve(curve_value(value, line, col)?)
                };
                set(&mut rec.quotient, q, "quotient", line)?;
            }
            "kernel-twist" => rec.kernel_twist = Some(ints(value, 1..=1, line, col)?[0]),
            "quoted-chi" => rec.quoted_chi = Some(poly_value(value, line, col)?),
            "compare-lines" => rec.compare.push(lines_value(value, line, col)?),
            other => return Err(Error::parse(line, 1, format!("unknown key `{other}`"))),
        }
    }
    if let Some(r) = current.take() {
        records.push(r.finish()?);
    }

    let mut registry = Registry {
        entries: Vec::new(),
        exclusions: Vec::new(),
    };
    for r in records {
        match r {
            Record2::Entry(e) => {
                if registry.entry(e.id).is_some() {
                    return Err(Error::Registry(format!("entry {} appears twice", e.id)));
                }
                registry.entries.push(e);
            }
            Record2::Exclusion(x) => {
                if registry.exclusion(&x.label).is_some() {
                    return Err(Error::Registry(format!("exclusion `{}` appears twice", x.label)));
                }
                registry.exclusions.push(x);
            }
        }
    }
    Ok(registry)
}

fn curve_text(c: &CurveClass) -> String {
    match c.omega_twist() {
        Some(e) => format!("{} {} {e}", c.degree(), c.genus()),
        None => format!("{} {}", c.degree(), c.genus()),
    }
}

fn lines_text(m: &MultipleLineStructure) -> String {
    m.twists().iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn betti_block(out: &mut String, b: &BettiTable) {
    out.push_str("betti\n");
    for (i, j, beta) in b.entries() {
        let _ = writeln!(out, "{i} {j} {beta}");
    }
    out.push_str("end\n");
}

pub fn print(registry: &Registry) -> String {
    let mut blocks = Vec::new();
    for e in &registry.entries {
        let mut out = String::new();
        let _ = writeln!(out, "entry {}", e.id);
        let _ = writeln!(out, "complex {}", e.complex);
        let _ = writeln!(out, "chern {}", e.chern);
        let _ = writeln!(out, "chern_tw {}", e.chern_tw);
        if let Some(c) = &e.curve {
            let _ = writeln!(out, "curve {}", curve_text(&c.curve));
            if c.ci {
                out.push_str("ci\n");
            }
            betti_block(&mut out, &c.betti);
        }
        for (t, n) in &e.h0 {
            let _ = writeln!(out, "h0 {t} {n}");
        }
        for (a, q) in &e.factors {
            let _ = writeln!(out, "factor {a} {q}");
        }
        blocks.push(out);
    }
    for x in &registry.exclusions {
        let mut out = String::new();
        let _ = writeln!(out, "exclusion {}", x.label);
        let _ = writeln!(out, "rule {}", x.rule);
        let _ = writeln!(out, "context {}", x.context);
        match &x.data {
            ExclusionData::Generation {
                betti,
                twist,
                ci,
                curve,
                h0,
            } => {
                betti_block(&mut out, betti);
                let _ = writeln!(out, "twist {twist}");
                if *ci {
                    out.push_str("ci\n");
                }
                if let Some(c) = curve {
                    let _ = writeln!(out, "curve {}", curve_text(c));
                }
                for (t, n) in h0 {
                    let _ = writeln!(out, "h0 {t} {n}");
                }
            }
            ExclusionData::Sections {
                solve,
                embedding_degree,
                k,
            } => {
                if let Some(s) = solve {
                    match &s.source {
                        ChiSource::Residue { d1, d2, curve } => {
                            let _ = writeln!(out, "linked {d1} {d2}");
                            let _ = writeln!(out, "curve {}", curve_text(curve));
                        }
                        ChiSource::Pieces { lines, curves, meet } => {
                            for l in lines {
                                let _ = writeln!(out, "piece-lines {}", lines_text(l));
                            }
                            for c in curves {
                                let _ = writeln!(out, "piece-curve {}", curve_text(c));
                            }
                            let _ = writeln!(out, "meet {meet}");
                        }
                    }
                    if let Some(p) = &s.expect_chi {
                        let _ = writeln!(out, "expect-chi {p}");
                    }
                    match &s.quotient {
                        Quotient::Lines(l) => {
                            let _ = writeln!(out, "quotient-lines {}", lines_text(l));
                        }
                        Quotient::Curve(c) => {
                            let _ = writeln!(out, "quotient-curve {}", curve_text(c));
                        }
                    }
                    let _ = writeln!(out, "kernel-twist {}", s.kernel_twist);
                }
                let _ = writeln!(out, "sections {embedding_degree} {k}");
            }
            ExclusionData::Residue {
                d1,
                d2,
                components,
                quoted_chi,
                compare,
            } => {
                let _ = writeln!(out, "linked {d1} {d2}");
                for c in components {
                    let _ = writeln!(out, "component {}", curve_text(c));
                }
                let _ = writeln!(out, "quoted-chi {quoted_chi}");
                for m in compare {
                    let _ = writeln!(out, "compare-lines {}", lines_text(m));
                }
            }
            ExclusionData::Quadric { curve } => {
                let _ = writeln!(out, "curve {}", curve_text(curve));
            }
        }
        blocks.push(out);
    }
    blocks.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
entry 1
complex 0 -> O(-3) -> 4O -> E -> 0
chern 1 + 3h + 9h^2 + 27h^3
chern_tw 1 + 6h^2 + 20h^3
curve 9 10 2
ci
betti
0 3 2
1 6 1
end
factor 3 1 + 9h^2

exclusion line-component
rule no-sections
context a line component
sections 1 -1
";

    #[test]
    fn small_registry_round_trips() {
        let r = parse(SMALL).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.exclusions.len(), 1);
        let e = &r.entries[0];
        assert_eq!(e.factors, vec![(3, ChowClass::from_i64s(3, &[1, 0, 9]).unwrap())]);
        assert_eq!(e.curve.as_ref().unwrap().betti.subject(), "entry 1");
        assert_eq!(print(&r), SMALL);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# header\n\n{}", SMALL.replace("ci\n", "ci\n# the saturated ideal\n"));
        assert_eq!(parse(&text).unwrap(), parse(SMALL).unwrap());
    }

    fn err_line(text: &str) -> (usize, String) {
        match parse(text) {
            Err(Error::Parse { line, message, .. }) => (line, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn reports_error_lines() {
        let broken = SMALL.replace("chern 1 + 3h", "chern 1 + 3q");
        assert_eq!(err_line(&broken).0, 3);
        let broken = SMALL.replace("0 -> O(-3) -> 4O", "0 -> O(-3) -> 4X");
        assert_eq!(err_line(&broken).0, 2);
        let broken = SMALL.replace("1 6 1\nend\n", "1 6 1\n");
        assert!(err_line(&broken).1.contains("not closed") || err_line(&broken).1.contains("expected"));
        let broken = SMALL.replace("sections 1 -1", "sections 1 -1\ntwist 3");
        assert_eq!(
            err_line(&broken),
            (17, "key `twist` does not apply to this record".into())
        );
        let broken = SMALL.replace("chern_tw", "chern");
        assert_eq!(err_line(&broken).1, "duplicate `chern`");
    }

    #[test]
    fn complex_error_column_is_file_relative() {
        let broken = SMALL.replace("4O -> E", "4Q -> E");
        match parse(&broken) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, "complex 0 -> O(-3) -> 4".len() + 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_duplicate_ids() {
        let twice = format!("{SMALL}\n{}", SMALL.split("\nexclusion").next().unwrap());
        assert!(matches!(parse(&twice), Err(Error::Registry(_))));
    }
}
