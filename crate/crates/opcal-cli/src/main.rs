//! `opcal` — exact operad-calculus computations from the command line.
//!
//! Exit codes: 0 when the queried property holds (or the computation
//! succeeded), 1 when a queried property does not hold, 2 on input or
//! usage errors.

mod formats;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use formats::{element_to_file, parse_element, parse_inputs, parse_operator, Flavor, Inputs};
use opcal_core::brackets::{derived_bracket, fn_bracket};
use opcal_core::cohomology::ComplexHandle;
use opcal_core::operad::Element;
use opcal_core::operators::{
    averaging_deformations, classify, nijenhuis_deformation, nijenhuis_tower, rb_deformations,
    OperatorKind,
};
use opcal_core::ops::{cup_bracket, gv_bracket, is_multiplication, Multiplication, Representation};
use opcal_core::rational::{format_rat, parse_rat, Rat};
use opcal_core::selftest;
use opcal_core::tree::enumerate_trees;

#[derive(Parser)]
#[command(
    name = "opcal",
    about = "Exact-arithmetic calculus of nonsymmetric operads with multiplication",
    long_about = "Classifies linear operators (Nijenhuis, Rota-Baxter, averaging, \
multiplication-preserving) against an algebra given by structure constants, evaluates the \
Gerstenhaber-Voronov, cup, Frölicher-Nijenhuis and derived brackets, builds induced \
multiplications and towers, and computes cohomology over the rationals.\n\n\
Operator matrices act on coordinate columns in the input file's basis order. All arithmetic \
is exact; rationals are written p/q (or just p)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassifyKind {
    Nijenhuis,
    RotaBaxter,
    Averaging,
    Preserving,
}

impl ClassifyKind {
    fn to_core(self) -> OperatorKind {
        match self {
            ClassifyKind::Nijenhuis => OperatorKind::Nijenhuis,
            ClassifyKind::RotaBaxter => OperatorKind::RotaBaxter,
            ClassifyKind::Averaging => OperatorKind::Averaging,
            ClassifyKind::Preserving => OperatorKind::Preserving,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BracketKind {
    Gv,
    Cup,
    Fn,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeformKind {
    Nijenhuis,
    RotaBaxter,
    Averaging,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComplexArg {
    Hochschild,
    TrivialRep,
    Representation,
    Preserving,
    Nijenhuis,
    RotaBaxter,
    Averaging,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the input structure is a multiplication (associative /
    /// dendriform / Hom-associative for the respective flavor).
    CheckMultiplication {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "associative")]
        flavor: Flavor,
        #[arg(long)]
        json: bool,
    },
    /// Classify an operator against the defining identity of a kind.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, value_enum)]
        kind: ClassifyKind,
        /// Weight λ as p/q; required for rota-baxter.
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum, default_value = "associative")]
        flavor: Flavor,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a bracket of two elements.
    Bracket {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: BracketKind,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, value_enum, default_value = "associative")]
        flavor: Flavor,
        /// Write the result element to this file.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build the structures induced by an operator: π_N, (π_R, π^l, π^r),
    /// or (π_r^⊣, π_r^⊢).
    Deform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, value_enum)]
        kind: DeformKind,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum, default_value = "associative")]
        flavor: Flavor,
        /// Write the emitted elements as a JSON object to this file.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// The Nijenhuis hierarchy (N^k, π_{N^k}) for k = 0..=kmax, with the
    /// tower theorem asserted.
    Tower {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "associative")]
        flavor: Flavor,
        #[arg(long)]
        json: bool,
    },
    /// Cohomology dimensions of an induced cochain complex.
    Cohomology {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        complex: ComplexArg,
        #[arg(long)]
        operator: Option<PathBuf>,
        #[arg(long)]
        weight: Option<String>,
        /// Left/right arity-2 elements for --complex representation.
        #[arg(long)]
        rep_left: Option<PathBuf>,
        #[arg(long)]
        rep_right: Option<PathBuf>,
        #[arg(long)]
        degree_max: Option<usize>,
        #[arg(long, value_enum, default_value = "associative")]
        flavor: Flavor,
        #[arg(long)]
        json: bool,
    },
    /// List the planar binary trees of Y_n in canonical order.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run every invariant suite with a fixed seed. The OPERAD_SEED
    /// environment variable overrides --seed.
    Selftest {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn parse_weight(weight: &Option<String>) -> Result<Option<Rat>> {
    weight
        .as_ref()
        .map(|s| parse_rat(s).map_err(|e| anyhow!("{e}")))
        .transpose()
}

fn multiplication(inputs: &Inputs) -> Result<Multiplication> {
    Multiplication::new(inputs.candidate.clone())
        .context("the input structure is not a multiplication")
}

fn print_element(inputs: &Inputs, label: &str, el: &Element) -> Result<()> {
    let file = element_to_file(inputs, el)?;
    println!(
        "{label}: arity {}, coefficients [{}]",
        file.arity,
        file.coefficients.join(", ")
    );
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::CheckMultiplication {
            input,
            flavor,
            json,
        } => {
            let inputs = parse_inputs(&input, flavor)?;
            let holds = is_multiplication(&inputs.candidate)?;
            if json {
                println!("{}", json!({ "multiplication": holds }));
            } else if holds {
                println!("multiplication: holds");
            } else {
                println!("multiplication: does not hold");
            }
            Ok(u8::from(!holds))
        }
        Command::Classify {
            input,
            operator,
            kind,
            weight,
            flavor,
            json,
        } => {
            let inputs = parse_inputs(&input, flavor)?;
            let pi = multiplication(&inputs)?;
            let t = parse_operator(&operator, &inputs)?;
            let w = parse_weight(&weight)?;
            let verdict = classify(&pi, &t, kind.to_core(), w.as_ref())?;
            if json {
                let defects: Vec<Vec<String>> = verdict
                    .defects
                    .iter()
                    .map(|d| {
                        formats::public_coefficients(&inputs, d)
                            .map(|c| c.iter().map(format_rat).collect())
                    })
                    .collect::<Result<_>>()?;
                println!(
                    "{}",
                    json!({
                        "kind": verdict.kind.name(),
                        "holds": verdict.holds,
                        "weight": w.as_ref().map(format_rat),
                        "defects": defects,
                    })
                );
            } else {
                println!(
                    "{}: {}",
                    verdict.kind.name(),
                    if verdict.holds {
                        "holds"
                    } else {
                        "does not hold"
                    }
                );
                if !verdict.holds {
                    for (i, d) in verdict.defects.iter().enumerate() {
                        print_element(&inputs, &format!("defect {}", i + 1), d)?;
                    }
                }
            }
            Ok(u8::from(!verdict.holds))
        }
        Command::Bracket {
            input,
            kind,
            f,
            g,
            flavor,
            output,
            json,
        } => {
            let inputs = parse_inputs(&input, flavor)?;
            let fe = parse_element(&f, &inputs)?;
            let ge = parse_element(&g, &inputs)?;
            let result = match kind {
                BracketKind::Gv => gv_bracket(&fe, &ge)?,
                BracketKind::Cup => cup_bracket(&multiplication(&inputs)?, &fe, &ge)?,
                BracketKind::Fn => fn_bracket(&multiplication(&inputs)?, &fe, &ge)?,
                BracketKind::Derived => derived_bracket(&multiplication(&inputs)?, &fe, &ge)?,
            };
            let file = element_to_file(&inputs, &result)?;
            if let Some(path) = &output {
                std::fs::write(path, serde_json::to_string_pretty(&file)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if json {
                println!("{}", serde_json::to_string(&file)?);
            } else {
                print_element(&inputs, "bracket", &result)?;
            }
            Ok(0)
        }
        Command::Deform {
            input,
            operator,
            kind,
            weight,
            flavor,
            output,
            json,
        } => {
            let inputs = parse_inputs(&input, flavor)?;
            let pi = multiplication(&inputs)?;
            let t = parse_operator(&operator, &inputs)?;
            let w = parse_weight(&weight)?;
            let mut named: Vec<(&str, Element)> = Vec::new();
            match kind {
                DeformKind::Nijenhuis => {
                    named.push(("pi_N", nijenhuis_deformation(&pi, &t)?));
                }
                DeformKind::RotaBaxter => {
                    let lam = w.clone().ok_or_else(|| anyhow!("--weight is required"))?;
                    let (pi_r, rep) = rb_deformations(&pi, &t, &lam)?;
                    named.push(("pi_R", pi_r.element().clone()));
                    named.push(("pi_l", rep.left().clone()));
                    named.push(("pi_r", rep.right().clone()));
                }
                DeformKind::Averaging => {
                    let (left, right) = averaging_deformations(&pi, &t)?;
                    named.push(("pi_left_dashv", left.element().clone()));
                    named.push(("pi_right_vdash", right.element().clone()));
                }
            }
            let mut obj = serde_json::Map::new();
            for (name, el) in &named {
                obj.insert(
                    (*name).to_string(),
                    serde_json::to_value(element_to_file(&inputs, el)?)?,
                );
            }
            let value = serde_json::Value::Object(obj);
            if let Some(path) = &output {
                std::fs::write(path, serde_json::to_string_pretty(&value)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if json {
                println!("{value}");
            } else {
                for (name, el) in &named {
                    print_element(&inputs, name, el)?;
                }
            }
            Ok(0)
        }
        Command::Tower {
            input,
            operator,
            kmax,
            flavor,
            json,
        } => {
            let inputs = parse_inputs(&input, flavor)?;
            let pi = multiplication(&inputs)?;
            let n = parse_operator(&operator, &inputs)?;
            let tower = nijenhuis_tower(&pi, &n, kmax)?;
            if json {
                let items: Vec<serde_json::Value> = tower
                    .iter()
                    .enumerate()
                    .map(|(k, (nk, pik))| {
                        Ok(json!({
                            "k": k,
                            "N_k": element_to_file(&inputs, nk)?,
                            "pi_N_k": element_to_file(&inputs, pik)?,
                        }))
                    })
                    .collect::<Result<_>>()?;
                println!("{}", json!({ "tower": items }));
            } else {
                for (k, (nk, pik)) in tower.iter().enumerate() {
                    print_element(&inputs, &format!("N^{k}"), nk)?;
                    print_element(&inputs, &format!("pi_N^{k}"), pik)?;
                }
            }
            Ok(0)
        }
        Command::Cohomology {
            input,
            complex,
            operator,
            weight,
            rep_left,
            rep_right,
            degree_max,
            flavor,
            json,
        } => {
            let inputs = parse_inputs(&input, flavor)?;
            let pi = multiplication(&inputs)?;
            // Tree cochain spaces grow by a Catalan factor, so the
            // averaging complex defaults one degree lower.
            let degree_max = degree_max.unwrap_or(match complex {
                ComplexArg::Averaging => 3,
                _ if inputs.spec.dimension() <= 2 => 4,
                _ => 3,
            });
            let need_op = || -> Result<Element> {
                let path = operator
                    .as_ref()
                    .ok_or_else(|| anyhow!("--operator is required for this complex"))?;
                parse_operator(path, &inputs)
            };
            let handle = match complex {
                ComplexArg::Hochschild => ComplexHandle::hochschild(pi, degree_max)?,
                ComplexArg::TrivialRep => ComplexHandle::trivial_rep(pi, degree_max)?,
                ComplexArg::Preserving => ComplexHandle::preserving(pi, need_op()?, degree_max)?,
                ComplexArg::Nijenhuis => ComplexHandle::nijenhuis(pi, need_op()?, degree_max)?,
                ComplexArg::RotaBaxter => {
                    let lam =
                        parse_weight(&weight)?.ok_or_else(|| anyhow!("--weight is required"))?;
                    ComplexHandle::rota_baxter(pi, need_op()?, lam, degree_max)?
                }
                ComplexArg::Averaging => ComplexHandle::averaging(pi, need_op()?, degree_max)?,
                ComplexArg::Representation => {
                    let (Some(lp), Some(rp)) = (&rep_left, &rep_right) else {
                        bail!("--rep-left and --rep-right are required");
                    };
                    let pil = parse_element(lp, &inputs)?;
                    let pir = parse_element(rp, &inputs)?;
                    let rep = Representation::new(&pi, pil, pir)?;
                    ComplexHandle::representation(pi, rep, degree_max)?
                }
            };
            let dims = handle.cohomology_dims()?;
            let degrees: Vec<usize> = (1..degree_max).collect();
            if json {
                println!(
                    "{}",
                    json!({
                        "complex": handle.kind().name(),
                        "dims": dims,
                        "degrees": degrees,
                    })
                );
            } else {
                println!("complex: {}", handle.kind().name());
                for (deg, dim) in degrees.iter().zip(&dims) {
                    println!("dim H^{deg} = {dim}");
                }
            }
            Ok(0)
        }
        Command::Trees { n, json } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let trees = enumerate_trees(n);
            if json {
                let strings: Vec<String> = trees.iter().map(|t| t.canonical()).collect();
                println!(
                    "{}",
                    json!({ "n": n, "count": trees.len(), "trees": strings })
                );
            } else {
                println!("Y_{n}: {} trees", trees.len());
                for t in &trees {
                    println!("{t}");
                }
            }
            Ok(0)
        }
        Command::Selftest { seed, json } => {
            let seed = match std::env::var("OPERAD_SEED") {
                Ok(v) => v
                    .parse::<u64>()
                    .map_err(|_| anyhow!("OPERAD_SEED must be an integer"))?,
                Err(_) => seed,
            };
            let results = selftest::run_all(seed);
            let all_pass = results.iter().all(|r| r.pass);
            if json {
                let items: Vec<serde_json::Value> = results
                    .iter()
                    .map(|r| json!({ "suite": r.name, "pass": r.pass, "detail": r.detail }))
                    .collect();
                println!(
                    "{}",
                    json!({ "seed": seed, "pass": all_pass, "suites": items })
                );
            } else {
                println!("seed: {seed}");
                for r in &results {
                    println!(
                        "{:24} {} ({})",
                        r.name,
                        if r.pass { "PASS" } else { "FAIL" },
                        r.detail
                    );
                }
            }
            Ok(u8::from(!all_pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
