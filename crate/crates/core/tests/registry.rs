use sheafcalc_core::registry::{format, BUILTIN};
use sheafcalc_core::{list_exclusions, verify_all, verify_entry, Error, Registry, Rule, Status};

#[test]
fn builtin_registry_round_trips_byte_for_byte() {
    let reg = Registry::builtin();
    assert_eq!(format::print(&reg), BUILTIN);
    assert_eq!(format::parse(&format::print(&reg)).unwrap(), reg);
}

#[test]
fn builtin_registry_passes_with_two_annotations() {
    let report = verify_all(&Registry::builtin());
    assert!(report.passed(false), "{}", report.render_text(false));
    assert!(!report.passed(true));
    assert_eq!(report.tally("entry ", false), (9, 9));
    assert_eq!(report.tally("exclusion ", false), (13, 13));
    let notes: Vec<_> = report.divergences().map(|c| c.subject.as_str()).collect();
    assert_eq!(
        notes,
        ["exclusion three-conics-residue", "exclusion four-conics-residue"]
    );
}

#[test]
fn every_rule_is_used() {
    let reg = Registry::builtin();
    for rule in [
        Rule::GeneratorDegree,
        Rule::NoSections,
        Rule::CmNonexistence,
        Rule::LiaisonResidue,
        Rule::QuadricContainmentAxiom,
    ] {
        assert!(reg.exclusions.iter().any(|x| x.rule == rule), "{rule} unused");
    }
    assert_eq!(
        reg.exclusions
            .iter()
            .filter(|x| x.rule == Rule::QuadricContainmentAxiom)
            .count(),
        1
    );
}

#[test]
fn corrupted_coefficient_names_entry_and_coefficient() {
    let text = BUILTIN.replacen("chern 1 + 3h + 6h^2 + 12h^3", "chern 1 + 3h + 6h^2 + 13h^3", 1);
    let reg = format::parse(&text).unwrap();
    let report = verify_all(&reg);
    assert!(!report.passed(false));
    let failed: Vec<_> = report.failures(false).collect();
    assert_eq!(failed.len(), 1, "{}", report.render_text(false));
    assert_eq!(failed[0].subject, "entry 2");
    assert_eq!(failed[0].name, "chern");
    assert!(failed[0].detail.contains("h^3"), "{}", failed[0].detail);
    assert!(
        failed[0].detail.contains("13") && failed[0].detail.contains("12"),
        "{}",
        failed[0].detail
    );
}

#[test]
fn corrupted_section_count_fails_only_that_entry() {
    let text = BUILTIN.replacen("h0 -1 1", "h0 -1 2", 1);
    let report = verify_all(&format::parse(&text).unwrap());
    let subjects: Vec<_> = report.failures(false).map(|c| c.subject.clone()).collect();
    assert_eq!(subjects, ["entry 8"]);
}

#[test]
fn verification_is_deterministic() {
    let a = verify_all(&Registry::builtin());
    let b = verify_all(&Registry::builtin());
    assert_eq!(a.render_text(false), b.render_text(false));
    assert_eq!(a.render_structured(true), b.render_structured(true));
}

#[test]
fn unknown_entry_fails() {
    let report = verify_entry(&Registry::builtin(), 10);
    assert!(!report.passed(false));
}

#[test]
fn single_entry_report_is_self_contained() {
    let report = verify_entry(&Registry::builtin(), 8);
    assert!(report.passed(true));
    assert!(report.checks().iter().all(|c| c.subject == "entry 8"));
    assert!(report
        .checks()
        .iter()
        .any(|c| c.name == "h0" && c.status == Status::Pass));
}

#[test]
fn exclusion_listing_states_each_rule() {
    let report = list_exclusions(&Registry::builtin());
    let rules: Vec<_> = report
        .checks()
        .iter()
        .filter(|c| c.name == "rule")
        .map(|c| c.subject.clone())
        .collect();
    assert_eq!(rules.len(), 13);
    assert_eq!(rules[0], "exclusion double-line");
}

#[test]
fn duplicate_entry_is_a_registry_error() {
    let entry_one = BUILTIN.split("\n\n").next().unwrap();
    let text = format!("{entry_one}\n\n{BUILTIN}");
    assert!(matches!(format::parse(&text), Err(Error::Registry { .. })));
}

#[test]
fn missing_file_is_an_error() {
    assert!(Registry::load(std::path::Path::new("/nonexistent/registry.txt")).is_err());
}
