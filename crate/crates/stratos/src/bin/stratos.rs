//! Command-line front end: JSON in, JSON/DOT out.
//!
//! Exit codes: 0 success, 2 validation failure (JSON diagnostic on
//! stderr), 64 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::json;

use stratos::alexandroff::Space;
use stratos::complex::{image_order, Homology, Variance};
use stratos::dot::poset_dot;
use stratos::error::{Error, Result};
use stratos::gottlieb::{cat_of_map, evaluation_subgroup};
use stratos::homotopy::{Flavor, HomotopySet, DEFAULT_BUDGET};
use stratos::order::Poset;
use stratos::rational::{
    example_law1, example_law2, example_polymap, induced_map, strata_report, ParametricFamily,
};
use stratos::{io, modp};

#[derive(Parser)]
#[command(name = "stratos", version, about = "finite-space order topology toolkit")]
struct Cli {
    /// Max enumeration candidates (overrides STRATOS_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Proset/space equivalence checks.
    Alex {
        #[command(subcommand)]
        cmd: AlexCmd,
    },
    /// Check the stratification conditions of a decomposition.
    Strata { decomposition: PathBuf },
    /// Homotopy classes of maps between two prosets and a quotient poset.
    Homset {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value = "R")]
        flavor: FlavorArg,
        /// Write the quotient Hasse diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Homology of a space in one degree.
    Homology {
        space: PathBuf,
        #[arg(short = 'n', long, default_value_t = 0)]
        degree: usize,
        #[arg(long, default_value = "Z")]
        coeff: CoeffArg,
    },
    /// Image subgroups of induced (co)homology maps versus the preorder.
    ImageOrder {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value = "R")]
        flavor: FlavorArg,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value = "Z")]
        coeff: CoeffArg,
    },
    /// Evaluation subgroup of the class of a map.
    Gottlieb {
        map: PathBuf,
        #[arg(long)]
        basepoint: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Category of a map with a witness cover.
    Cat { map: PathBuf },
    /// Parametric rational families.
    Rational {
        #[command(subcommand)]
        cmd: RationalCmd,
    },
}

#[derive(Subcommand)]
enum AlexCmd {
    /// Verify both round trips between a proset and its space.
    Roundtrip { poset: PathBuf },
}

#[derive(Subcommand)]
enum RationalCmd {
    /// The built-in two-law preset with its induced map.
    ExampleEx1 {
        /// Write the first diagram here and the second next to it.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// A family from a JSON document.
    Custom {
        family: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy)]
struct FlavorArg(Flavor);

impl FromStr for FlavorArg {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<FlavorArg, String> {
        match s.to_ascii_uppercase().as_str() {
            "R" => Ok(FlavorArg(Flavor::R)),
            "L" => Ok(FlavorArg(Flavor::L)),
            "LR" => Ok(FlavorArg(Flavor::LR)),
            _ => Err(format!("unknown flavor `{s}`, expected R, L or LR")),
        }
    }
}

#[derive(Clone, Copy)]
enum CoeffArg {
    Z,
    Fp(u64),
}

impl FromStr for CoeffArg {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<CoeffArg, String> {
        if s == "Z" {
            return Ok(CoeffArg::Z);
        }
        if let Some(p) = s.strip_prefix('F') {
            if let Ok(p) = p.parse::<u64>() {
                return Ok(CoeffArg::Fp(p));
            }
        }
        Err(format!("unknown coefficients `{s}`, expected Z or F<prime>"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(64);
        }
    };
    let budget = cli
        .budget
        .or_else(|| {
            std::env::var("STRATOS_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_BUDGET);
    match run(cli.cmd, budget) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn hasse_labels(p: &Poset) -> Vec<(String, String)> {
    p.hasse_edges()
        .into_iter()
        .map(|(a, b)| (p.label(a).to_owned(), p.label(b).to_owned()))
        .collect()
}

fn run(cmd: Cmd, budget: u128) -> Result<()> {
    match cmd {
        Cmd::Alex {
            cmd: AlexCmd::Roundtrip { poset },
        } => {
            let p = io::poset_from_json(&read(&poset)?)?;
            if p.len() > 22 {
                return Err(Error::InvalidInput(format!(
                    "at most 22 points, got {}",
                    p.len()
                )));
            }
            let s = Space::from_proset(&p);
            s.is_alexandroff()?;
            if s.specialization_order() != p {
                return Err(Error::InvalidInput(
                    "round trip failed to recover the proset".into(),
                ));
            }
            if Space::from_proset(&s.specialization_order()) != s {
                return Err(Error::InvalidInput(
                    "round trip failed to recover the space".into(),
                ));
            }
            println!("OK");
        }
        Cmd::Strata { decomposition } => {
            let d = io::decomposition_from_json(&read(&decomposition)?)?;
            let report = d.is_stratification();
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Cmd::Homset {
            source,
            target,
            flavor,
            dot,
        } => {
            let x = io::poset_from_json(&read(&source)?)?;
            let y = io::poset_from_json(&read(&target)?)?;
            let hs = HomotopySet::enumerate(&x, &y, budget)?;
            let q = hs.quotient(flavor.0, budget)?;
            let classes: Vec<String> =
                (0..hs.class_count()).map(|c| hs.class_label(c)).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "flavor": flavor.0.as_str(),
                    "map_count": hs.maps.len(),
                    "class_count": hs.class_count(),
                    "classes": classes,
                    "quotient": {
                        "elements": q.poset.elements(),
                        "hasse": hasse_labels(&q.poset),
                    },
                }))
                .unwrap()
            );
            if let Some(path) = dot {
                write_file(&path, &poset_dot(&q.poset))?;
            }
        }
        Cmd::Homology {
            space,
            degree,
            coeff,
        } => {
            let s = io::space_from_json(&read(&space)?)?;
            let p = s.specialization_order();
            let group = match coeff {
                CoeffArg::Z => {
                    Homology::of_proset(&p, Variance::Homology)
                        .group(degree)
                        .describe()
                }
                CoeffArg::Fp(prime) => {
                    let (poset, _) = p.quotient_by_mutual_leq();
                    let c = stratos::complex::OrderComplex::new(poset);
                    let d = modp::homology_dim(&c, degree, prime)?;
                    match d {
                        0 => "0".to_string(),
                        1 => format!("F{prime}"),
                        _ => format!("F{prime}^{d}"),
                    }
                }
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "degree": degree,
                    "group": group,
                }))
                .unwrap()
            );
        }
        Cmd::ImageOrder {
            source,
            target,
            flavor,
            degree,
            coeff,
        } => {
            let x = io::poset_from_json(&read(&source)?)?;
            let y = io::poset_from_json(&read(&target)?)?;
            let hs = HomotopySet::enumerate(&x, &y, budget)?;
            let out = match coeff {
                CoeffArg::Z => {
                    let r = image_order(&hs, flavor.0, degree, budget)?;
                    let images: Vec<String> = r.images.iter().map(|s| s.describe()).collect();
                    json!({
                        "flavor": r.flavor.as_str(),
                        "degree": r.degree,
                        "ambient": r.ambient.describe(),
                        "images": images,
                        "monotone": r.monotone,
                        "violations": r.violations,
                        "well_defined_on_quotient": r.well_defined_on_quotient,
                    })
                }
                CoeffArg::Fp(p) => {
                    let r = modp::image_order(&hs, flavor.0, degree, p, budget)?;
                    json!({
                        "flavor": r.flavor.as_str(),
                        "degree": r.degree,
                        "p": r.p,
                        "ambient_dim": r.ambient_dim,
                        "image_dims": r.image_dims,
                        "monotone": r.monotone,
                        "violations": r.violations,
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Cmd::Gottlieb {
            map,
            basepoint,
            degree,
        } => {
            let m = io::map_from_json(&read(&map)?)?;
            let bp = m
                .source
                .index_of(&basepoint)
                .ok_or_else(|| Error::UnknownLabel(basepoint.clone()))?;
            let hs = HomotopySet::enumerate(&m.source, &m.target, budget)?;
            let class = hs
                .class_of_map(&m.assignment)
                .expect("validated map is enumerated");
            let sub = evaluation_subgroup(&hs, class, bp, degree)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "class": hs.class_label(class),
                    "basepoint": basepoint,
                    "degree": degree,
                    "ambient": sub.ambient.describe(),
                    "subgroup": sub.describe(),
                }))
                .unwrap()
            );
        }
        Cmd::Cat { map } => {
            let m = io::map_from_json(&read(&map)?)?;
            let r = cat_of_map(&m.source, &m.target, &m.assignment, budget)?;
            let cover: Vec<Vec<String>> = r
                .cover
                .iter()
                .map(|&u| {
                    (0..m.source.len())
                        .filter(|&i| u >> i & 1 == 1)
                        .map(|i| m.source.label(i).to_owned())
                        .collect()
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "value": r.value,
                    "cover": cover,
                }))
                .unwrap()
            );
        }
        Cmd::Rational { cmd } => run_rational(cmd)?,
    }
    Ok(())
}

fn family_json(fam: &ParametricFamily) -> Result<serde_json::Value> {
    let r = strata_report(fam)?;
    Ok(json!({
        "elements": r.classes.poset.elements(),
        "hasse": hasse_labels(&r.classes.poset),
        "patterns": r.patterns,
        "closure_contains": r.closure_contains,
    }))
}

/// `x.dot` -> `x-2.dot` for the second diagram.
fn sibling_dot(path: &Path) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("dot");
    path.with_file_name(format!("{stem}-2.{ext}"))
}

fn run_rational(cmd: RationalCmd) -> Result<()> {
    match cmd {
        RationalCmd::ExampleEx1 { dot } => {
            let fam1 = example_law1();
            let fam2 = example_law2();
            let induced = induced_map(&fam1, &fam2, &example_polymap())?;
            let mut table = serde_json::Map::new();
            for c in 0..induced.source.poset.len() {
                table.insert(
                    induced.source.poset.label(c).to_owned(),
                    induced
                        .target
                        .poset
                        .label(induced.class_assignment[c])
                        .to_owned()
                        .into(),
                );
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "diagram1": family_json(&fam1)?,
                    "diagram2": family_json(&fam2)?,
                    "induced_map": table,
                    "monotone": induced.monotone,
                }))
                .unwrap()
            );
            if let Some(path) = dot {
                write_file(&path, &poset_dot(&induced.source.poset))?;
                write_file(&sibling_dot(&path), &poset_dot(&induced.target.poset))?;
            }
        }
        RationalCmd::Custom { family, dot } => {
            let fam = io::family_from_json(&read(&family)?)?;
            let out = family_json(&fam)?;
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if let Some(path) = dot {
                let r = strata_report(&fam)?;
                write_file(&path, &poset_dot(&r.classes.poset))?;
            }
        }
    }
    Ok(())
}
