//! Replaying registry records through the engines.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::betti::GgKind;
use crate::chow::{chern_from_complex, chern_of_atom, factor_line, hrr_chi, rank_of_complex, ChowClass};
use crate::cohomology::{chi_complex_poly, h0_from_resolution, h_line, H0Outcome};
use crate::curve::{
    c3_from_curve, cm_exists, kernel_line_twist, liaison_residue, liaison_residue_of_union, multiple_line_chi,
    section_count_rational,
};
use crate::error::Result;
use crate::poly::Poly;
use crate::report::{Report, Status};
use crate::sheaf::{mapping_cone_bundle, SheafAtom};

use super::{ChiSource, ClassificationEntry, ExclusionCase, ExclusionData, KernelSolve, Quotient, Registry, Rule};

/// Twist range of the Riemann-Roch cross-check.
const HRR_RANGE: std::ops::RangeInclusive<i64> = -4..=4;
/// Search bound for line factors.
const FACTOR_BOUND: i64 = 10;
/// Expected rank of every classified bundle.
const RANK: i64 = 3;

/// First coefficient where two classes differ, named for a report.
fn class_diff(expected: &ChowClass, computed: &ChowClass) -> Option<String> {
    let n = expected.coeffs().len().max(computed.coeffs().len());
    let zero = BigInt::from(0);
    (0..n).find_map(|k| {
        let e = expected.coeffs().get(k).unwrap_or(&zero);
        let c = computed.coeffs().get(k).unwrap_or(&zero);
        (e != c).then(|| {
            let name = match k {
                0 => "constant term".to_string(),
                1 => "coefficient of h".to_string(),
                _ => format!("coefficient of h^{k}"),
            };
            format!("{name}: expected {e}, computed {c} (expected {expected}, computed {computed})")
        })
    })
}

fn compare_class(report: &mut Report, subject: &str, name: &str, expected: &ChowClass, computed: &ChowClass) {
    match class_diff(expected, computed) {
        None => report.check(subject, name, true, computed.to_string()),
        Some(d) => report.check(subject, name, false, d),
    }
}

/// Runs `f`, turning an engine error into a failed check.
fn guarded(report: &mut Report, subject: &str, name: &str, f: impl FnOnce(&mut Report) -> Result<()>) {
    if let Err(e) = f(report) {
        report.check(subject, name, false, format!("error: {e}"));
    }
}

fn replay_entry(report: &mut Report, e: &ClassificationEntry) {
    let subject = format!("entry {}", e.id);
    let s = subject.as_str();

    guarded(report, s, "rank", |r| {
        let rank = rank_of_complex(&e.complex)?;
        r.check(s, "rank", rank == RANK, format!("rank {rank}"));
        Ok(())
    });

    let chern = match chern_from_complex(&e.complex) {
        Ok(c) => c,
        Err(err) => {
            report.check(s, "chern", false, format!("error: {err}"));
            return;
        }
    };
    compare_class(report, s, "chern", &e.chern, &chern);

    guarded(report, s, "chern_tw", |r| {
        compare_class(r, s, "chern_tw", &e.chern_tw, &chern.twist(RANK, -1)?);
        Ok(())
    });

    let c3 = chern.coeff(3).clone();
    report.check(s, "c3-positive", c3 > BigInt::from(0), format!("c3 = {c3}"));

    guarded(report, s, "riemann-roch", |r| {
        let chi = chi_complex_poly(&e.complex)?;
        let mut bad = Vec::new();
        for t in HRR_RANGE {
            let hrr = hrr_chi(RANK, &chern.twist(RANK, t)?)?;
            let direct = chi.eval_int(t);
            if BigRational::from_integer(hrr.clone()) != direct {
                bad.push(format!("t={t}: hrr {hrr}, complex {direct}"));
            }
        }
        let detail = if bad.is_empty() {
            format!(
                "chi(E(t)) = {chi} for t in [{}, {}]",
                HRR_RANGE.start(),
                HRR_RANGE.end()
            )
        } else {
            bad.join("; ")
        };
        r.check(s, "riemann-roch", bad.is_empty(), detail);
        Ok(())
    });

    if let Some(ec) = &e.curve {
        let (curve, betti) = (&ec.curve, &ec.betti);
        let from_table = betti.hilbert_poly();
        report.check(
            s,
            "curve-hilbert",
            from_table == curve.hilbert_poly(),
            format!("table gives {from_table}, curve {curve} gives {}", curve.hilbert_poly()),
        );
        guarded(report, s, "mapping-cone", |r| {
            let cone = mapping_cone_bundle(betti, RANK)?;
            let same = cone.euler_normal_form().terms() == e.complex.euler_normal_form().terms();
            r.check(s, "mapping-cone", same, format!("cone {cone}"));
            Ok(())
        });
        guarded(report, s, "c3-from-curve", |r| {
            let v = c3_from_curve(3, curve)?;
            r.check(
                s,
                "c3-from-curve",
                BigInt::from(v) == c3,
                format!("curve gives {v}, complex gives {c3}"),
            );
            Ok(())
        });
        let verdict = betti.gg_twist_check(3, ec.ci);
        report.check(
            s,
            "curve-gg",
            verdict.kind == GgKind::GgCertified,
            format!("I_Y(3): {verdict}"),
        );
        let (reg, top) = (betti.regularity(), betti.max_gen_degree());
        report.check(
            s,
            "curve-table",
            reg >= top,
            format!("regularity {reg}, generator degree {top}"),
        );
    }

    for (t, n) in &e.h0 {
        guarded(report, s, "h0", |r| {
            let got = h0_from_resolution(&e.complex, *t)?;
            let ok = got == H0Outcome::Value((*n).into());
            r.check(
                s,
                "h0",
                ok,
                format!("h^0(E({t})): expected {n}, computed {}", outcome_text(&got)),
            );
            Ok(())
        });
    }

    if !e.factors.is_empty() {
        guarded(report, s, "factors", |r| {
            let found = factor_line(&chern, RANK, FACTOR_BOUND)?;
            let ok = found == e.factors;
            let shown: Vec<String> = found
                .iter()
                .map(|(a, q)| format!("({})({q})", ChowClass::linear(3, *a)))
                .collect();
            let detail = if ok {
                shown.join(", ")
            } else {
                let want: Vec<String> = e
                    .factors
                    .iter()
                    .map(|(a, q)| format!("({})({q})", ChowClass::linear(3, *a)))
                    .collect();
                format!("expected [{}], found [{}]", want.join(", "), shown.join(", "))
            };
            r.check(s, "factors", ok, detail);
            Ok(())
        });
    }
}

fn outcome_text(o: &H0Outcome) -> String {
    match o {
        H0Outcome::Value(v) => v.to_string(),
        H0Outcome::Indeterminate { position, atom } => format!("indeterminate ({atom} at position {position})"),
    }
}

fn solve_chi(solve: &KernelSolve) -> Result<Poly> {
    Ok(match &solve.source {
        ChiSource::Residue { d1, d2, curve } => liaison_residue(*d1, *d2, curve)?.chi,
        ChiSource::Pieces { lines, curves, meet } => {
            let mut p = Poly::zero();
            for l in lines {
                p = p + multiple_line_chi(l);
            }
            for c in curves {
                p = p + c.hilbert_poly();
            }
            p - Poly::linear(0, *meet as i64)
        }
    })
}

/// `(d, p_a)` of a curve with Hilbert polynomial `chi`.
fn class_of(chi: &Poly) -> Option<(i64, i64)> {
    chi.as_linear_i64().map(|(d, c)| (d, 1 - c))
}

fn replay_exclusion(report: &mut Report, x: &ExclusionCase) {
    let subject = format!("exclusion {}", x.label);
    let s = subject.as_str();
    match &x.data {
        ExclusionData::Generation {
            betti,
            twist,
            ci,
            curve,
            h0,
        } => {
            let verdict = betti.gg_twist_check(*twist, *ci);
            report.check(
                s,
                x.rule.name(),
                verdict.kind == GgKind::NotGg,
                format!("I_Y({twist}): {verdict}"),
            );
            if let Some(c) = curve {
                let p = betti.hilbert_poly();
                report.check(
                    s,
                    "curve-hilbert",
                    p == c.hilbert_poly(),
                    format!("table gives {p}, curve {c}"),
                );
            }
            let ideal = betti.ideal_complex();
            for (t, n) in h0 {
                guarded(report, s, "h0", |r| {
                    let got = h0_from_resolution(&ideal, *t)?;
                    let ok = got == H0Outcome::Value((*n).into());
                    r.check(
                        s,
                        "h0",
                        ok,
                        format!("h^0(I_Y({t})): expected {n}, computed {}", outcome_text(&got)),
                    );
                    Ok(())
                });
            }
        }
        ExclusionData::Sections {
            solve,
            embedding_degree,
            k,
        } => {
            if let Some(solve) = solve {
                guarded(report, s, "kernel-twist", |r| {
                    let total = solve_chi(solve)?;
                    if let Some(expect) = &solve.expect_chi {
                        r.check(
                            s,
                            "chi",
                            &total == expect,
                            format!("expected {expect}, computed {total}"),
                        );
                    }
                    let quotient = match &solve.quotient {
                        Quotient::Lines(m) => multiple_line_chi(m),
                        Quotient::Curve(c) => c.hilbert_poly(),
                    };
                    let got = kernel_line_twist(&total, &quotient);
                    let shown = got.map_or("none".to_string(), |v| v.to_string());
                    r.check(
                        s,
                        "kernel-twist",
                        got == Some(solve.kernel_twist),
                        format!(
                            "O_L(s) with chi {total} over quotient chi {quotient}: expected s = {}, solved s = {shown}",
                            solve.kernel_twist
                        ),
                    );
                    Ok(())
                });
            }
            let n = section_count_rational(*embedding_degree, *k);
            report.check(
                s,
                x.rule.name(),
                n == 0,
                format!(
                    "h^0(O_P1({})) = {n} on a rational curve of degree {embedding_degree}",
                    *k * *embedding_degree as i64
                ),
            );
        }
        ExclusionData::Residue {
            d1,
            d2,
            components,
            quoted_chi,
            compare,
        } => {
            let res = match liaison_residue_of_union(*d1, *d2, components) {
                Ok(r) => r,
                Err(e) => {
                    report.check(s, "residue", false, format!("error: {e}"));
                    return;
                }
            };
            report.check(s, "residue", true, format!("both routes give {res}"));
            let (d, pa) = (res.residue.degree(), res.residue.genus());
            let quoted = class_of(quoted_chi);
            let quoted_text = match quoted {
                Some((qd, qpa)) => format!("{quoted_chi} (d={qd} pa={qpa})"),
                None => quoted_chi.to_string(),
            };
            let admissible: Vec<Poly> = compare.iter().map(multiple_line_chi).collect();
            let admissible_text = admissible.iter().map(Poly::to_string).collect::<Vec<_>>().join(", ");
            match x.rule {
                Rule::CmNonexistence => {
                    let exists = cm_exists(d, pa);
                    let quoted_exists = quoted.map(|(qd, qpa)| cm_exists(qd, qpa));
                    report.check(
                        s,
                        x.rule.name(),
                        !exists && quoted_exists != Some(true),
                        format!(
                            "no locally CM curve with d={d} pa={pa}; quoted class {}",
                            if quoted_exists == Some(false) {
                                "is excluded too"
                            } else {
                                "is not excluded"
                            }
                        ),
                    );
                }
                _ => {
                    let quoted_hits = admissible.iter().any(|p| p == quoted_chi);
                    report.check(
                        s,
                        x.rule.name(),
                        !quoted_hits && quoted.is_some_and(|(qd, qpa)| cm_exists(qd, qpa)),
                        format!(
                            "quoted {quoted_text} matches none of the admissible multiple lines [{admissible_text}]"
                        ),
                    );
                }
            }
            if quoted_chi != &res.chi {
                let mut detail = format!(
                    "computed chi {} (d={d} pa={pa}) differs from quoted {quoted_text}",
                    res.chi
                );
                if let Some(p) = admissible.iter().find(|p| **p == res.chi) {
                    detail.push_str(&format!(
                        "; the computed value equals the admissible multiple-line chi {p}, so the comparison does not exclude it"
                    ));
                }
                report.push(s, "quoted-residue", Status::Divergence, detail);
            }
        }
        ExclusionData::Quadric { curve } => {
            let chi2 = curve.hilbert_poly().eval_int(2);
            let quadrics = BigRational::from_integer(BigInt::from(h_line(3, 0, 2)));
            let bound = &quadrics - &chi2;
            // h^1(O_Y(2)) = 0 once 2d > 2 p_a - 2, so chi(O_Y(2)) = h^0(O_Y(2))
            let vanishing = 2 * curve.degree() > 2 * curve.genus() - 2;
            report.check(
                s,
                x.rule.name(),
                vanishing && bound >= BigRational::from_integer(1.into()),
                format!("axiom (taken as given): {curve} lies on a quadric; numerically h^0(I_Y(2)) >= {quadrics} - {chi2} = {bound}"),
            );
        }
    }
}

/// Checks for one classified bundle. An unknown id yields a failed check.
pub fn verify_entry(registry: &Registry, id: u32) -> Report {
    let mut report = Report::new();
    match registry.entry(id) {
        Some(e) => replay_entry(&mut report, e),
        None => report.check(&format!("entry {id}"), "present", false, "no such entry"),
    }
    report
}

/// Replays every exclusion case.
pub fn list_exclusions(registry: &Registry) -> Report {
    let mut report = Report::new();
    for x in &registry.exclusions {
        report.push(
            &format!("exclusion {}", x.label),
            "rule",
            Status::Pass,
            format!("{}: {}", x.rule, x.context),
        );
        replay_exclusion(&mut report, x);
    }
    report
}

fn registry_checks(report: &mut Report, registry: &Registry) {
    let s = "registry";
    let mut ids: Vec<u32> = registry.entries.iter().map(|e| e.id).collect();
    ids.sort_unstable();
    report.check(s, "entries", ids == (1..=9).collect::<Vec<_>>(), format!("ids {ids:?}"));

    let mut distinct = true;
    for (i, a) in registry.entries.iter().enumerate() {
        for b in &registry.entries[i + 1..] {
            if a.complex.terms() == b.complex.terms() {
                distinct = false;
            }
        }
    }
    report.check(s, "distinct-complexes", distinct, "each resolution appears once");

    let axioms = registry
        .exclusions
        .iter()
        .filter(|x| x.rule == Rule::QuadricContainmentAxiom)
        .count();
    report.check(
        s,
        "axioms",
        axioms == 1,
        format!("{axioms} exclusion(s) rest on a quoted fact"),
    );
}

fn identity_checks(report: &mut Report) {
    let s = "identity";
    guarded(report, s, "tangent-twist-inverse", |r| {
        let c = chern_of_atom(&SheafAtom::tangent(-2), 3)?;
        let inv = c.inv()?;
        let want = ChowClass::from_i64s(3, &[1, 2, 2])?;
        compare_class(r, s, "tangent-twist-inverse", &want, &inv);
        Ok(())
    });
}

/// Every entry in id order, every exclusion in file order, then the
/// standalone identities and registry-level invariants.
pub fn verify_all(registry: &Registry) -> Report {
    let mut report = Report::new();
    let mut entries: Vec<&ClassificationEntry> = registry.entries.iter().collect();
    entries.sort_by_key(|e| e.id);
    for e in entries {
        replay_entry(&mut report, e);
    }
    for x in &registry.exclusions {
        replay_exclusion(&mut report, x);
    }
    identity_checks(&mut report);
    registry_checks(&mut report, registry);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_diff_names_the_coefficient() {
        let a = ChowClass::from_i64s(3, &[1, 3, 9, 27]).unwrap();
        let b = ChowClass::from_i64s(3, &[1, 3, 8, 27]).unwrap();
        assert!(class_diff(&a, &a).is_none());
        let d = class_diff(&a, &b).unwrap();
        assert!(d.starts_with("coefficient of h^2: expected 9, computed 8"), "{d}");
    }

    #[test]
    fn class_of_reads_degree_and_genus() {
        assert_eq!(class_of(&Poly::linear(3, 12)), Some((3, -11)));
        assert_eq!(class_of(&Poly::linear(1, 19)), Some((1, -18)));
    }
}
