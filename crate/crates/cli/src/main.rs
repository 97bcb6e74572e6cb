//! Batch front end for the species enumeration library: count tables for
//! k-trees and bipartite blocks, cycle-index dumps, and the verification
//! suites, in plain, CSV, or JSON form.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation or check failure.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use species::bipartite::BipartitePipeline;
use species::cycleindex::{CycleIndexSeries, Truncation};
use species::gammaspecies::GammaCycleIndex;
use species::ktrees::ktree_ogf;
use species::verify;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "species-cli",
    about = "Exact enumeration of unlabeled k-trees, bipartite blocks, and related cycle indices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count unlabeled k-trees with 0..=n hedra
    Ktrees {
        /// Clique parameter k (1 gives ordinary trees by edge count)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Largest hedron count to report
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Write output here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count unlabeled nonseparable bipartite graphs with 1..=n vertices
    Bpblocks {
        /// Largest vertex count to report
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a cycle index as sorted monomial/coefficient records
    Species {
        #[arg(long, value_enum)]
        name: SpeciesName,
        /// Truncation degree
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite and report pass/fail per check
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum SpeciesName {
    #[value(name = "BC")]
    Bc,
    #[value(name = "CBC")]
    Cbc,
    #[value(name = "CBP")]
    Cbp,
    #[value(name = "BP")]
    Bp,
    #[value(name = "NBP")]
    Nbp,
    #[value(name = "Omega")]
    Omega,
}

impl SpeciesName {
    fn as_str(self) -> &'static str {
        match self {
            SpeciesName::Bc => "BC",
            SpeciesName::Cbc => "CBC",
            SpeciesName::Cbp => "CBP",
            SpeciesName::Bp => "BP",
            SpeciesName::Nbp => "NBP",
            SpeciesName::Omega => "Omega",
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum Suite {
    Identities,
    Oracles,
    Tables,
}

impl Suite {
    fn as_str(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracles => "oracles",
            Suite::Tables => "tables",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are not usage errors
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };

    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> species::Result<ExitCode> {
    match command {
        Command::Ktrees { k, n, format, output } => {
            let counts = ktree_ogf(k, n)?;
            let rows: Vec<(usize, String)> = counts
                .iter()
                .enumerate()
                .map(|(i, c)| (i, c.to_string()))
                .collect();
            let params = json!({ "k": k, "n": n });
            emit(render_counts("ktrees", &params, &rows, format), output);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bpblocks { n, format, output } => {
            let mut pipeline = BipartitePipeline::new(n as usize);
            let counts = pipeline.nbp_counts()?;
            let rows: Vec<(usize, String)> = counts
                .iter()
                .enumerate()
                .map(|(i, c)| (i + 1, c.to_string()))
                .collect();
            let params = json!({ "n": n });
            emit(render_counts("bpblocks", &params, &rows, format), output);
            Ok(ExitCode::SUCCESS)
        }
        Command::Species {
            name,
            degree,
            format,
            output,
        } => {
            let degree = degree as usize;
            let records = species_records(name, degree)?;
            let params = json!({ "name": name.as_str(), "degree": degree });
            emit(render_species(&params, &records, format), output);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let checks = verify::run_suite(suite.as_str()).expect("suite names are closed");
            let mut all_passed = true;
            for check in &checks {
                if check.passed {
                    println!("PASS {}", check.name);
                } else {
                    all_passed = false;
                    println!("FAIL {}: {}", check.name, check.detail);
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

/// (component, monomial, coefficient) rows; component is empty for ordinary
/// cycle indices.
type SpeciesRecord = (String, String, String);

fn gamma_records(family: &GammaCycleIndex) -> Vec<SpeciesRecord> {
    let mut records = Vec::new();
    for label in ["e", "tau"] {
        let component = family.component_by_label(label).expect("S2 labels");
        for (monomial, coeff) in component.terms() {
            records.push((label.to_string(), monomial.to_string(), coeff.to_string()));
        }
    }
    records
}

fn plain_records(series: &CycleIndexSeries) -> Vec<SpeciesRecord> {
    series
        .terms()
        .map(|(monomial, coeff)| (String::new(), monomial.to_string(), coeff.to_string()))
        .collect()
}

fn species_records(name: SpeciesName, degree: usize) -> species::Result<Vec<SpeciesRecord>> {
    let mut pipeline = BipartitePipeline::new(degree);
    Ok(match name {
        SpeciesName::Bc => gamma_records(pipeline.bc()),
        SpeciesName::Cbc => gamma_records(pipeline.cbc()?),
        SpeciesName::Cbp => plain_records(pipeline.cbp()?),
        SpeciesName::Bp => plain_records(pipeline.bp()?),
        SpeciesName::Nbp => plain_records(pipeline.nbp()?),
        SpeciesName::Omega => plain_records(&CycleIndexSeries::omega(Truncation::total(degree))),
    })
}

fn render_counts(
    command: &str,
    params: &serde_json::Value,
    rows: &[(usize, String)],
    format: Format,
) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for (n, count) in rows {
                out.push_str(&format!("{n} {count}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,count\n");
            for (n, count) in rows {
                out.push_str(&format!("{n},{count}\n"));
            }
            out
        }
        Format::Json => {
            let results: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, count)| json!({ "n": n, "count": count }))
                .collect();
            let doc = json!({ "command": command, "params": params, "results": results });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

fn render_species(
    params: &serde_json::Value,
    records: &[SpeciesRecord],
    format: Format,
) -> String {
    let has_components = records.iter().any(|(c, _, _)| !c.is_empty());
    match format {
        Format::Plain => {
            let mut out = String::new();
            for (component, monomial, coeff) in records {
                if has_components {
                    out.push_str(&format!("{component} {monomial} {coeff}\n"));
                } else {
                    out.push_str(&format!("{monomial} {coeff}\n"));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            if has_components {
                out.push_str("component,monomial,coefficient\n");
                for (component, monomial, coeff) in records {
                    out.push_str(&format!("{component},{monomial},{coeff}\n"));
                }
            } else {
                out.push_str("monomial,coefficient\n");
                for (_, monomial, coeff) in records {
                    out.push_str(&format!("{monomial},{coeff}\n"));
                }
            }
            out
        }
        Format::Json => {
            let results: Vec<serde_json::Value> = records
                .iter()
                .map(|(component, monomial, coeff)| {
                    if has_components {
                        json!({ "component": component, "monomial": monomial, "coeff": coeff })
                    } else {
                        json!({ "monomial": monomial, "coeff": coeff })
                    }
                })
                .collect();
            let doc = json!({ "command": "species", "params": params, "results": results });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

fn emit(text: String, output: Option<PathBuf>) {
    match output {
        None => print!("{text}"),
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .unwrap_or_else(|e| panic!("cannot create {}: {e}", path.display()));
            file.write_all(text.as_bytes())
                .unwrap_or_else(|e| panic!("cannot write {}: {e}", path.display()));
        }
    }
}
