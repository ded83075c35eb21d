use std::error::Error as StdError;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sheafcalc_core::registry::ExclusionData;
use sheafcalc_core::{
    chern_from_complex, chi_complex_poly, disjoint_union, factor_line, h0_from_resolution, liaison_residue,
    liaison_residue_of_union, list_exclusions, mapping_cone_bundle, parse_chow_class, parse_complex, rank_of_complex,
    verify_all, verify_entry, BettiTable, ChowClass, CurveClass, GgKind, H0Outcome, LiaisonResidue, Registry, Report,
};

use crate::{Command, Format};

/// Largest ambient dimension accepted for line-bundle inputs.
const MAX_DIM: usize = 6;
/// Environment variable naming a registry file.
const REGISTRY_ENV: &str = "SHEAFCALC_REGISTRY";

pub type Result<T> = std::result::Result<T, Box<dyn StdError>>;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Output { text, code: 0 }
    }

    fn with_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }
}

pub fn run(command: Command) -> Result<Output> {
    match command {
        Command::Chern { complex, twist, dim } => {
            let c = parse_complex(&complex, check_dim(dim)?)?;
            let rank = rank_of_complex(&c)?;
            let class = chern_from_complex(&c)?.twist(rank, twist)?;
            Ok(Output::ok(format!("rank {rank}; {class}")))
        }
        Command::Chi { complex, at, dim } => {
            let c = parse_complex(&complex, check_dim(dim)?)?;
            let p = chi_complex_poly(&c)?;
            Ok(Output::ok(match at {
                Some(t) => p.eval_int(t).to_string(),
                None => p.to_string(),
            }))
        }
        Command::H0 { complex, at, dim } => {
            let c = parse_complex(&complex, check_dim(dim)?)?;
            Ok(match h0_from_resolution(&c, at)? {
                H0Outcome::Value(v) => Output::ok(v.to_string()),
                H0Outcome::Indeterminate { position, atom } => Output::ok(format!(
                    "indeterminate: {atom} at position {position} has cohomology that the shape cannot resolve"
                ))
                .with_code(3),
            })
        }
        Command::Betti2hilb { file } => Ok(Output::ok(read_betti(&file)?.hilbert_poly().to_string())),
        Command::Reg { file } => Ok(Output::ok(read_betti(&file)?.regularity().to_string())),
        Command::Ggcheck { file, twist, ci } => {
            let verdict = read_betti(&file)?.gg_twist_check(twist, ci);
            let code = if verdict.kind == GgKind::Unknown { 3 } else { 0 };
            Ok(Output::ok(verdict.to_string()).with_code(code))
        }
        Command::Cone { file, rank } => {
            let cone = mapping_cone_bundle(&read_betti(&file)?, rank)?;
            Ok(Output::ok(cone.to_string()))
        }
        Command::Liaison {
            ci,
            curve,
            omega,
            strict,
            registry,
        } => liaison(&ci, &curve, &omega, strict, registry),
        Command::Factor {
            coeffs,
            rank,
            bound,
            dim,
        } => {
            let class = parse_chow_class(&coeffs, check_dim(dim)?)?;
            let factors = factor_line(&class, rank, bound)?;
            if factors.is_empty() {
                return Ok(Output::ok(format!("no line factors with |a| <= {bound}")));
            }
            let mut text = String::new();
            for (a, q) in factors {
                let _ = writeln!(text, "({})({q})", ChowClass::linear(class.dim(), a));
            }
            Ok(Output::ok(text))
        }
        Command::Verify {
            entry,
            strict,
            format,
            registry,
        } => {
            let reg = load_registry(registry)?;
            let report = match entry {
                Some(id) => {
                    if reg.entry(id).is_none() {
                        return Err(format!("no entry {id} in the registry").into());
                    }
                    verify_entry(&reg, id)
                }
                None => verify_all(&reg),
            };
            Ok(render(&report, strict, format))
        }
        Command::Exclusions {
            strict,
            format,
            registry,
        } => {
            let reg = load_registry(registry)?;
            Ok(render(&list_exclusions(&reg), strict, format))
        }
    }
}

fn render(report: &Report, strict: bool, format: Format) -> Output {
    let text = match format {
        Format::Text => report.render_text(strict),
        Format::Structured => report.render_structured(strict),
    };
    Output::ok(text).with_code(if report.passed(strict) { 0 } else { 1 })
}

fn check_dim(dim: usize) -> Result<usize> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(dim)
    } else {
        Err(format!("--dim must be between 1 and {MAX_DIM}").into())
    }
}

fn read_betti(path: &Path) -> Result<BettiTable> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(BettiTable::parse(&text)?)
}

fn load_registry(path: Option<PathBuf>) -> Result<Registry> {
    let path = path.or_else(|| std::env::var_os(REGISTRY_ENV).map(PathBuf::from));
    Ok(match path {
        Some(p) => Registry::load(&p)?,
        None => Registry::builtin(),
    })
}

fn pair(text: &str, what: &str) -> Result<(i64, i64)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("{what}: bad integer `{}`", s.trim()))
    };
    match text.split_once(',') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => Err(format!("{what}: expected two comma-separated integers, got `{text}`").into()),
    }
}

fn liaison(ci: &str, curves: &[String], omega: &[i64], strict: bool, registry: Option<PathBuf>) -> Result<Output> {
    let (d1, d2) = pair(ci, "--ci")?;
    if !omega.is_empty() && omega.len() != 1 && omega.len() != curves.len() {
        return Err("give one --omega, or one per --curve".into());
    }
    let parts = curves
        .iter()
        .enumerate()
        .map(|(i, text)| {
            let (d, pa) = pair(text, "--curve")?;
            let e = if omega.len() == 1 { omega.first() } else { omega.get(i) };
            Ok(CurveClass::new(d, pa, e.copied())?)
        })
        .collect::<Result<Vec<_>>>()?;
    let res: LiaisonResidue = if parts.len() == 1 {
        liaison_residue(d1, d2, &parts[0])?
    } else {
        liaison_residue_of_union(d1, d2, &parts)?
    };
    let mut text = format!("residue: {res}\n");

    // Registry cases that quote a residue for the same problem.
    let linked = res.linked;
    let reg = load_registry(registry)?;
    let mut diverged = false;
    for x in &reg.exclusions {
        if let ExclusionData::Residue {
            d1: r1,
            d2: r2,
            components,
            quoted_chi,
            ..
        } = &x.data
        {
            let Ok(union) = disjoint_union(components) else {
                continue;
            };
            let same_problem =
                (*r1, *r2) == (d1, d2) && union.degree() == linked.degree() && union.genus() == linked.genus();
            if same_problem && quoted_chi != &res.chi {
                diverged = true;
                let _ = writeln!(
                    text,
                    "note: registry case `{}` quotes chi={quoted_chi}; computed chi={} (both routes agree)",
                    x.label, res.chi
                );
            }
        }
    }
    Ok(Output::ok(text).with_code(if strict && diverged { 1 } else { 0 }))
}
