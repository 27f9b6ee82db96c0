use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kclean::certificate::Certificate;
use kclean::classes::{ordinary_power, symbolic_power};
use kclean::clean::{clean_filtration, invariants_from_certificate, CleanEngine, IdealTree};
use kclean::corpus::{load_manifest, run_case};
use kclean::decomp::{DecompositionTree, IdealDecomposer};
use kclean::homology::pd_reg;
use kclean::parse::{parse_complex, parse_ideal, write_complex, write_ideal};
use kclean::polarize::polarize;
use kclean::search::{Budget, DEFAULT_BUDGET};
use kclean::simplicial::{dual_ideal, ComplexSearch, FaceDisplay, SheddingTree, SimplicialComplex};
use kclean::{Error, MonomialIdeal};

#[derive(Parser)]
#[command(
    name = "kclean",
    version,
    about = "k-clean monomial ideals and k-decomposable complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SearchFlags {
    /// Largest shedding or cleaner support is k+1.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Write the certificate as JSON to this path.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Node expansions allowed before giving up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an ideal is k-clean.
    Clean {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        /// Search for a certificate with the fewest cleaners.
        #[arg(long)]
        min_length: bool,
    },
    /// Decide whether a complex is k-decomposable.
    DecomposeComplex {
        file: PathBuf,
        /// Largest shedding face has k+1 vertices; -1 is allowed
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
        /// Write the certificate as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Node expansions allowed before giving up
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Decide whether an ideal is k-decomposable.
    DecomposeIdeal {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Alexander dual of an ideal or a complex.
    Dual { file: PathBuf },
    /// Squarefree polarization of an ideal.
    Polarize { file: PathBuf },
    /// Radical of an ideal.
    Radical { file: PathBuf },
    /// Symbolic power of the Stanley-Reisner ideal of a matroid.
    SymbolicPower {
        file: PathBuf,
        /// Exponent of the power
        #[arg(short)]
        m: u32,
        /// Accept complexes that are not matroids.
        #[arg(long)]
        allow_non_matroid: bool,
    },
    /// Ordinary power of an ideal.
    Power {
        file: PathBuf,
        /// Exponent of the power
        #[arg(short)]
        m: u32,
    },
    /// Projective dimension, regularity and depth of S/I.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Clean prime filtration read off a k-clean certificate.
    Filtration {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Check a JSON certificate.
    Verify { file: PathBuf },
    /// Run every case of a corpus manifest.
    CorpusRun {
        manifest: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted { .. } | Error::HomologyBudget(_) => {
                Failure::Budget(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn at(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    parse_ideal(&read(path)?).map_err(at(path))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    parse_complex(&read(path)?).map_err(at(path))
}

enum Input {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

fn load_any(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if header.starts_with("vertices") {
        Ok(Input::Complex(parse_complex(&text).map_err(at(path))?))
    } else {
        Ok(Input::Ideal(parse_ideal(&text).map_err(at(path))?))
    }
}

fn write_json(path: &Option<PathBuf>, cert: Certificate) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, cert.to_json())
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn print_ideal_tree(ideal: &MonomialIdeal, tree: &IdealTree, label: &str, depth: usize) {
    let pad = "  ".repeat(depth);
    match tree {
        IdealTree::Leaf(p) => println!("{pad}{label}prime {}", p.to_ideal(ideal.ctx())),
        IdealTree::Node {
            cleaner,
            colon,
            sum,
        } => {
            println!("{pad}{label}cleaner {}", ideal.display_monomial(cleaner));
            print_ideal_tree(
                &ideal.colon(cleaner).expect("same ring"),
                colon,
                "colon: ",
                depth + 1,
            );
            print_ideal_tree(
                &ideal.add_monomial(cleaner).expect("same ring"),
                sum,
                "sum: ",
                depth + 1,
            );
        }
    }
}

fn print_decomposition(ideal: &MonomialIdeal, tree: &DecompositionTree, label: &str, depth: usize) {
    let pad = "  ".repeat(depth);
    match tree {
        DecompositionTree::Generator(g) => {
            println!("{pad}{label}generator {}", ideal.display_monomial(g))
        }
        DecompositionTree::Node {
            shedding,
            upper,
            lower,
        } => {
            println!(
                "{pad}{label}shedding monomial {}",
                ideal.display_monomial(shedding)
            );
            print_decomposition(ideal, upper, "upper: ", depth + 1);
            print_decomposition(ideal, lower, "lower: ", depth + 1);
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Clean {
            file,
            search,
            min_length,
        } => {
            let ideal = load_ideal(&file)?;
            let mut engine = CleanEngine::new(Budget::new(search.budget));
            let tree = if min_length {
                engine.minimal_certificate(&ideal, search.k)
            } else {
                engine.is_k_clean(&ideal, search.k)
            }
            .map_err(at(&file))?;
            let Some(tree) = tree else {
                println!("{ideal} is not {}-clean", search.k);
                return Ok(false);
            };
            println!("{ideal} is {}-clean", search.k);
            if min_length {
                println!("cleanness length {}", tree.length());
            }
            print_ideal_tree(&ideal, &tree, "", 0);
            write_json(
                &search.json,
                Certificate::Clean {
                    ideal,
                    k: search.k,
                    tree,
                },
            )?;
            Ok(true)
        }
        Command::DecomposeComplex {
            file,
            k,
            json,
            budget,
        } => {
            let complex = load_complex(&file)?;
            let mut search = ComplexSearch::new(Budget::new(budget));
            let Some(tree) = search.decide(&complex, k).map_err(at(&file))? else {
                println!("{complex} is not {k}-decomposable");
                return Ok(false);
            };
            println!("{complex} is {k}-decomposable");
            let faces: Vec<String> = tree
                .shedding_sequence()
                .into_iter()
                .map(|f| FaceDisplay(f).to_string())
                .collect();
            println!(
                "shedding sequence: {}",
                if faces.is_empty() {
                    "(none)".to_string()
                } else {
                    faces.join(" ")
                }
            );
            if let SheddingTree::Void = tree {
                println!("void complex");
            }
            write_json(&json, Certificate::Complex { complex, k, tree })?;
            Ok(true)
        }
        Command::DecomposeIdeal { file, search } => {
            let ideal = load_ideal(&file)?;
            let mut decomposer = IdealDecomposer::new(Budget::new(search.budget));
            let Some(tree) = decomposer.decide(&ideal, search.k).map_err(at(&file))? else {
                println!("{ideal} is not {}-decomposable", search.k);
                return Ok(false);
            };
            println!("{ideal} is {}-decomposable", search.k);
            print_decomposition(&ideal, &tree, "", 0);
            write_json(
                &search.json,
                Certificate::Decomposition {
                    ideal,
                    k: search.k,
                    tree,
                },
            )?;
            Ok(true)
        }
        Command::Dual { file } => {
            match load_any(&file)? {
                Input::Ideal(i) => print!("{}", write_ideal(&dual_ideal(&i).map_err(at(&file))?)),
                Input::Complex(c) => print!("{}", write_complex(&c.alexander_dual())),
            }
            Ok(true)
        }
        Command::Polarize { file } => {
            let (p, _) = polarize(&load_ideal(&file)?).map_err(at(&file))?;
            print!("{}", write_ideal(&p));
            Ok(true)
        }
        Command::Radical { file } => {
            print!("{}", write_ideal(&load_ideal(&file)?.radical()));
            Ok(true)
        }
        Command::SymbolicPower {
            file,
            m,
            allow_non_matroid,
        } => {
            let complex = load_complex(&file)?;
            print!(
                "{}",
                write_ideal(&symbolic_power(&complex, m, allow_non_matroid).map_err(at(&file))?)
            );
            Ok(true)
        }
        Command::Power { file, m } => {
            print!(
                "{}",
                write_ideal(&ordinary_power(&load_ideal(&file)?, m).map_err(at(&file))?)
            );
            Ok(true)
        }
        Command::Invariants { file, search } => {
            let ideal = load_ideal(&file)?;
            let mut engine = CleanEngine::new(Budget::new(search.budget));
            let mut reported = false;
            if ideal.is_proper_nonzero() {
                let tree = match ideal.is_prime() {
                    Some(p) => Some(IdealTree::Leaf(p)),
                    None => engine.is_k_clean(&ideal, search.k).map_err(at(&file))?,
                };
                if let Some(tree) = tree {
                    let inv = invariants_from_certificate(&ideal, &tree).map_err(at(&file))?;
                    println!(
                        "certificate: pd {} reg {} depth {}",
                        inv.pd, inv.reg, inv.depth
                    );
                    reported = true;
                }
            }
            match pd_reg(&ideal) {
                Ok(inv) => println!(
                    "homology: pd {} reg {} depth {}",
                    inv.pd, inv.reg, inv.depth
                ),
                Err(e) if reported => println!("homology: unavailable ({e})"),
                Err(e) => return Err(at(&file)(e)),
            }
            Ok(true)
        }
        Command::Filtration { file, search } => {
            let ideal = load_ideal(&file)?;
            let mut engine = CleanEngine::new(Budget::new(search.budget));
            let Some(tree) = engine.is_k_clean(&ideal, search.k).map_err(at(&file))? else {
                println!("{ideal} is not {}-clean", search.k);
                return Ok(false);
            };
            let filtration = clean_filtration(&ideal, &tree).map_err(at(&file))?;
            println!("H0 = {ideal}");
            for (i, step) in filtration.steps.iter().enumerate() {
                let shift: Vec<String> = step.shift.iter().map(u32::to_string).collect();
                println!(
                    "H{} = H{} + ({})  quotient S/{} shifted by ({})",
                    i + 1,
                    i,
                    ideal.display_monomial(&step.monomial),
                    step.prime.to_ideal(ideal.ctx()),
                    shift.join(",")
                );
            }
            write_json(
                &search.json,
                Certificate::Clean {
                    ideal,
                    k: search.k,
                    tree,
                },
            )?;
            Ok(true)
        }
        Command::Verify { file } => {
            let cert = Certificate::from_json(&read(&file)?).map_err(at(&file))?;
            match cert.verify() {
                Ok(()) => {
                    println!("valid");
                    Ok(true)
                }
                Err(e @ Error::InvalidCertificate { .. }) => {
                    println!("{e}");
                    Ok(false)
                }
                Err(e) => Err(at(&file)(e)),
            }
        }
        Command::CorpusRun { manifest, budget } => {
            let cases = load_manifest(&manifest)?;
            let mut all = true;
            for case in &cases {
                let report = run_case(case, budget)?;
                if report.passed() {
                    println!("PASS {} ({} checks)", case.label, report.checks.len());
                } else {
                    all = false;
                    println!("FAIL {}", case.label);
                    for c in report.checks.iter().filter(|c| !c.passed) {
                        println!("    {}: {}", c.name, c.detail);
                    }
                }
            }
            Ok(all)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
