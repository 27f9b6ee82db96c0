use std::path::Path;

use kclean::corpus::{cm_codim2_fixtures, load_manifest, run_case, Payload, Provenance};
use kclean::simplicial::dual_ideal;

#[test]
fn manifest_cases_pass() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/manifest.toml");
    let cases = load_manifest(&path).unwrap();
    assert!(cases.len() >= 8);
    for case in &cases {
        let report = run_case(case, 1_000_000).unwrap();
        assert!(report.passed(), "{}: {:?}", case.label, report.checks);
        assert!(!report.checks.is_empty(), "{} checks nothing", case.label);
    }
}

#[test]
fn fixtures_are_external_and_polarize_trivially() {
    for case in cm_codim2_fixtures() {
        assert_eq!(case.provenance, Provenance::External);
        let Payload::Ideal(ideal) = &case.payload else {
            panic!("{} is not an ideal", case.label)
        };
        if ideal.is_squarefree() {
            let (p, _) = kclean::polarize::polarize(ideal).unwrap();
            assert_eq!(p.gens().len(), ideal.gens().len());
            let dual = dual_ideal(ideal).unwrap();
            assert_eq!(
                dual.gens().len(),
                kclean::primes::minimal_primes(ideal).unwrap().len()
            );
        }
    }
}
