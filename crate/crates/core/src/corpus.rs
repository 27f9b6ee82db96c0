//! Curated fixtures and the manifest-driven corpus runner.
//!
//! A manifest is a TOML file of `[[case]]` tables:
//!
//! ```toml
//! [[case]]
//! label = "star"
//! file = "star.ideal"          # or a `.complex` file
//! clean = [0]                  # ideals: k-clean levels; complexes: k-decomposable levels
//! not_clean = []
//! decomposable = [0]           # ideals: ideal k-decomposability levels
//! not_decomposable = []
//! pd = 3
//! reg = 1
//! tags = ["squarefree"]
//! source = "derived"           # "external", "derived" or "construction"
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::clean::{
    check_filtration, clean_filtration, invariants_from_certificate, verify_certificate,
    CleanEngine,
};
use crate::decomp::{verify_decomposition, IdealDecomposer};
use crate::error::{Error, Result};
use crate::homology::{pd_reg, MAX_BETTI_VARIABLES};
use crate::ideal::MonomialIdeal;
use crate::parse::{parse_complex, parse_ideal};
use crate::polarize::polarize;
use crate::search::Budget;
use crate::simplicial::{verify_shedding_certificate, ComplexSearch, SimplicialComplex};

/// Where a fixture's expected values come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Established outside this crate (the literature, standard facts).
    External,
    /// Computed by an independent brute-force oracle.
    Derived,
    /// True by construction.
    Construction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default)]
    pub clean: Vec<i64>,
    #[serde(default)]
    pub not_clean: Vec<i64>,
    #[serde(default)]
    pub decomposable: Vec<i64>,
    #[serde(default)]
    pub not_decomposable: Vec<i64>,
    pub pd: Option<usize>,
    pub reg: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusCase {
    pub label: String,
    pub payload: Payload,
    pub expected: Expectations,
    pub tags: Vec<String>,
    pub provenance: Provenance,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    label: String,
    file: PathBuf,
    #[serde(flatten)]
    expected: Expectations,
    #[serde(default)]
    tags: Vec<String>,
    source: Provenance,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default)]
    case: Vec<ManifestEntry>,
}

/// Reads a manifest and every file it names (paths relative to the manifest).
pub fn load_manifest(path: &Path) -> Result<Vec<CorpusCase>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
    let manifest: Manifest =
        toml::from_str(&text).map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    manifest
        .case
        .into_iter()
        .map(|entry| {
            let file = dir.join(&entry.file);
            let body = fs::read_to_string(&file)
                .map_err(|e| Error::Manifest(format!("{}: {e}", file.display())))?;
            let payload = match file.extension().and_then(|e| e.to_str()) {
                Some("ideal") => Payload::Ideal(parse_ideal(&body)?),
                Some("complex") => Payload::Complex(parse_complex(&body)?),
                _ => {
                    return Err(Error::Manifest(format!(
                        "{}: expected a .ideal or .complex file",
                        file.display()
                    )))
                }
            };
            Ok(CorpusCase {
                label: entry.label,
                payload,
                expected: entry.expected,
                tags: entry.tags,
                provenance: entry.source,
            })
        })
        .collect()
}

fn ideal_case(label: &str, text: &str, note: &str) -> CorpusCase {
    CorpusCase {
        label: label.to_string(),
        payload: Payload::Ideal(parse_ideal(text).expect("fixture parses")),
        expected: Expectations {
            clean: vec![0],
            ..Expectations::default()
        },
        tags: vec!["cm-codim-2".to_string(), note.to_string()],
        provenance: Provenance::External,
    }
}

/// Cohen-Macaulay ideals of height two whose properties are standard facts.
pub fn cm_codim2_fixtures() -> Vec<CorpusCase> {
    vec![
        // three isolated points: a 0-dimensional complex is Cohen-Macaulay
        ideal_case(
            "three points",
            "vars x1 x2 x3\nx1*x2\nx1*x3\nx2*x3\n",
            "squarefree",
        ),
        ideal_case(
            "three points plus a cone point",
            "vars x1 x2 x3 x4\nx1*x2\nx1*x3\nx2*x3\n",
            "squarefree",
        ),
        // edge ideal of the path on four vertices (a whiskered edge)
        ideal_case(
            "path of length three",
            "vars x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\n",
            "squarefree",
        ),
        // generic linkage of two lines
        ideal_case(
            "two disjoint edges",
            "vars x1 x2 x3 x4\nx1*x2\nx3*x4\n",
            "complete-intersection",
        ),
        // ideals primary to the maximal ideal of a two-variable ring are Artinian
        ideal_case(
            "square of the maximal ideal",
            "vars x1 x2\nx1^2\nx1*x2\nx2^2\n",
            "artinian",
        ),
        ideal_case(
            "staircase",
            "vars x1 x2\nx1^3\nx1^2*x2\nx1*x2^3\nx2^4\n",
            "artinian",
        ),
        ideal_case(
            "pure powers",
            "vars x1 x2 x3\nx1^2\nx2^3\n",
            "complete-intersection",
        ),
        ideal_case(
            "staircase with a free variable",
            "vars x1 x2 x3\nx1^2\nx1*x2\nx2^2\n",
            "artinian",
        ),
    ]
}

/// Outcome of one named check inside a case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub label: String,
    pub checks: Vec<Check>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: String, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

/// Runs every expectation of a case; certificates found along the way are verified and
/// flattened into filtrations as well.
pub fn run_case(case: &CorpusCase, budget: u64) -> Result<CaseReport> {
    let mut report = CaseReport {
        label: case.label.clone(),
        checks: Vec::new(),
    };
    match &case.payload {
        Payload::Ideal(ideal) => run_ideal(ideal, &case.expected, budget, &mut report)?,
        Payload::Complex(complex) => run_complex(complex, &case.expected, budget, &mut report)?,
    }
    Ok(report)
}

fn level(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| Error::Manifest(format!("k = {k} is negative")))
}

fn run_ideal(
    ideal: &MonomialIdeal,
    expected: &Expectations,
    budget: u64,
    report: &mut CaseReport,
) -> Result<()> {
    let mut engine = CleanEngine::new(Budget::new(budget));
    let mut certified = None;
    for (k, want) in expected
        .clean
        .iter()
        .map(|&k| (k, true))
        .chain(expected.not_clean.iter().map(|&k| (k, false)))
    {
        let k = level(k)?;
        let found = engine.is_k_clean(ideal, k)?;
        let name = format!("{}-clean", k);
        match (&found, want) {
            (Some(tree), true) => {
                let verdict = verify_certificate(ideal, tree, k)
                    .and_then(|_| clean_filtration(ideal, tree))
                    .and_then(|f| check_filtration(&f));
                report.push(
                    name,
                    verdict.is_ok(),
                    verdict.err().map(|e| e.to_string()).unwrap_or_default(),
                );
                certified.get_or_insert(tree.clone());
            }
            (None, false) => report.push(format!("not {name}"), true, ""),
            (Some(_), false) => {
                report.push(format!("not {name}"), false, "a certificate was found")
            }
            (None, true) => report.push(name, false, "no certificate found"),
        }
    }
    let mut decomposer = IdealDecomposer::new(Budget::new(budget));
    for (k, want) in expected
        .decomposable
        .iter()
        .map(|&k| (k, true))
        .chain(expected.not_decomposable.iter().map(|&k| (k, false)))
    {
        let k = level(k)?;
        let found = decomposer.decide(ideal, k)?;
        let name = format!("{k}-decomposable ideal");
        match (&found, want) {
            (Some(tree), true) => {
                let verdict = verify_decomposition(ideal, tree, k);
                report.push(
                    name,
                    verdict.is_ok(),
                    verdict.err().map(|e| e.to_string()).unwrap_or_default(),
                );
            }
            (None, false) => report.push(format!("not {name}"), true, ""),
            (Some(_), false) => {
                report.push(format!("not {name}"), false, "a certificate was found")
            }
            (None, true) => report.push(name, false, "no certificate found"),
        }
    }
    if expected.pd.is_some() || expected.reg.is_some() {
        let from_tree = certified
            .as_ref()
            .map(|t| invariants_from_certificate(ideal, t))
            .transpose()?;
        let polarized_vars = if ideal.is_squarefree() {
            ideal.n()
        } else {
            polarize(ideal)?.0.n()
        };
        let oracle = if polarized_vars <= MAX_BETTI_VARIABLES {
            Some(pd_reg(ideal)?)
        } else {
            None
        };
        for (route, inv) in [("certificate", from_tree), ("homology", oracle)] {
            let Some(inv) = inv else { continue };
            if let Some(pd) = expected.pd {
                report.push(
                    format!("pd via {route}"),
                    inv.pd == pd,
                    format!("got {}", inv.pd),
                );
            }
            if let Some(reg) = expected.reg {
                report.push(
                    format!("reg via {route}"),
                    inv.reg == reg,
                    format!("got {}", inv.reg),
                );
            }
        }
    }
    Ok(())
}

fn run_complex(
    complex: &SimplicialComplex,
    expected: &Expectations,
    budget: u64,
    report: &mut CaseReport,
) -> Result<()> {
    let mut search = ComplexSearch::new(Budget::new(budget));
    let wants = expected
        .clean
        .iter()
        .chain(&expected.decomposable)
        .map(|&k| (k, true))
        .chain(
            expected
                .not_clean
                .iter()
                .chain(&expected.not_decomposable)
                .map(|&k| (k, false)),
        );
    for (k, want) in wants {
        let found = search.decide(complex, k)?;
        let name = format!("{k}-decomposable");
        match (&found, want) {
            (Some(tree), true) => {
                let verdict = verify_shedding_certificate(complex, tree, k);
                report.push(
                    name,
                    verdict.is_ok(),
                    verdict.err().map(|e| e.to_string()).unwrap_or_default(),
                );
            }
            (None, false) => report.push(format!("not {name}"), true, ""),
            (Some(_), false) => {
                report.push(format!("not {name}"), false, "a certificate was found")
            }
            (None, true) => report.push(name, false, "no certificate found"),
        }
    }
    if expected.pd.is_some() || expected.reg.is_some() {
        let inv = pd_reg(&complex.stanley_reisner())?;
        if let Some(pd) = expected.pd {
            report.push(
                "pd via homology".into(),
                inv.pd == pd,
                format!("got {}", inv.pd),
            );
        }
        if let Some(reg) = expected.reg {
            report.push(
                "reg via homology".into(),
                inv.reg == reg,
                format!("got {}", inv.reg),
            );
        }
    }
    Ok(())
}
