//! Command-line interface: Hilbert functions, model cohomology, catalog
//! lookups, and presentation-versus-model verification.
//!
//! Exit codes: 0 on success, 1 when a verification reports a mismatch,
//! 2 on bad input or usage.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use equicoh::io::{
    self, catalog_to_doc, cohomology_to_doc, doc_to_model, doc_to_presentation, model_to_doc,
    report_to_doc, table_doc, to_json, ModelDoc, PresentationDoc,
};
use equicoh::{
    build_model, classifying_data, dispatch_verification, presented_ring, verify_all_small,
    GrassmannCase, GroupDescriptor,
};

#[derive(Parser)]
#[command(
    name = "equicoh",
    about = "Exact rational cohomology of homogeneous spaces and homotopy biquotients",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to a file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Degreewise dimensions of a presented graded ring
    Hilbert {
        /// Grassmannian case, e.g. "n=1,k=1,a=0,b=0,oriented,two-sided"
        #[arg(long, conflicts_with = "file")]
        case: Option<GrassmannCase>,
        /// Presentation document (JSON) to read instead of a case
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Top degree of the table (defaults to the case cutoff)
        #[arg(long)]
        max_degree: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cohomology of a pure Sullivan model
    Model {
        /// Grassmannian case whose model to build
        #[arg(long, conflicts_with = "file")]
        case: Option<GrassmannCase>,
        /// Model document (JSON) to read instead of a case
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Top degree of the table (defaults to the case cutoff)
        #[arg(long)]
        max_degree: Option<u32>,
        /// Include representative cocycles per degree
        #[arg(long)]
        representatives: bool,
        /// Print the model itself instead of its cohomology
        #[arg(long)]
        show: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare a presented ring with the matching model cohomology
    Verify {
        /// Grassmannian case to verify
        #[arg(long, conflicts_with = "all_small")]
        case: Option<GrassmannCase>,
        /// Run the whole small-parameter battery
        #[arg(long)]
        all_small: bool,
        /// Verification cutoff degree (defaults per case)
        #[arg(long)]
        max_degree: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classifying-ring generators and fiber data for a compact group
    Catalog {
        /// Group name, e.g. "SO(7)", "U(3)", "Sp(2)xT(1)"
        #[arg(long)]
        group: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: &OutputArgs, content: String) -> Result<(), String> {
    match &output.out {
        Some(path) => fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Hilbert {
            case,
            file,
            max_degree,
            output,
        } => {
            let (ring, fallback) = match (case, file) {
                (Some(case), None) => {
                    (presented_ring(&case).map_err(|e| e.to_string())?, Some(case.default_cutoff()))
                }
                (None, Some(path)) => {
                    let doc: PresentationDoc = read_json(&path)?;
                    (doc_to_presentation(&doc).map_err(|e| e.to_string())?, None)
                }
                _ => return Err("provide exactly one of --case or --file".to_string()),
            };
            let limit = max_degree
                .or(fallback)
                .ok_or("--max-degree is required with --file")?;
            let table = ring.hilbert_function(limit).map_err(|e| e.to_string())?;
            let doc = table_doc(ring.label.clone(), &table);
            let content = match output.format {
                Format::Json => to_json(&doc),
                Format::Text => io::render_table_text(&doc),
            };
            emit(&output, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Model {
            case,
            file,
            max_degree,
            representatives,
            show,
            output,
        } => {
            let (model, fallback) = match (case, file) {
                (Some(case), None) => {
                    (build_model(&case).map_err(|e| e.to_string())?, Some(case.default_cutoff()))
                }
                (None, Some(path)) => {
                    let doc: ModelDoc = read_json(&path)?;
                    (doc_to_model(&doc).map_err(|e| e.to_string())?, None)
                }
                _ => return Err("provide exactly one of --case or --file".to_string()),
            };
            if show {
                let doc = model_to_doc(&model);
                let content = match output.format {
                    Format::Json => to_json(&doc),
                    Format::Text => {
                        return Err("--show supports only --format json".to_string())
                    }
                };
                emit(&output, content)?;
                return Ok(ExitCode::SUCCESS);
            }
            let limit = max_degree
                .or(fallback)
                .ok_or("--max-degree is required with --file")?;
            let report = model
                .cohomology(limit, representatives)
                .map_err(|e| e.to_string())?;
            let doc = cohomology_to_doc(&report);
            let content = match output.format {
                Format::Json => to_json(&doc),
                Format::Text => io::render_cohomology_text(&doc),
            };
            emit(&output, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            case,
            all_small,
            max_degree,
            output,
        } => {
            let reports = match (case, all_small) {
                (Some(case), false) => {
                    let limit = max_degree.unwrap_or_else(|| case.default_cutoff());
                    vec![dispatch_verification(&case, limit).map_err(|e| e.to_string())?]
                }
                (None, true) => verify_all_small(max_degree).map_err(|e| e.to_string())?,
                _ => return Err("provide exactly one of --case or --all-small".to_string()),
            };
            let docs: Vec<_> = reports.iter().map(report_to_doc).collect();
            let passed = docs.iter().filter(|d| d.pass).count();
            let content = match output.format {
                Format::Json => to_json(&docs),
                Format::Text => {
                    let mut text = String::new();
                    for doc in &docs {
                        text.push_str(&io::render_report_text(doc));
                    }
                    text.push_str(&format!("passed {passed} of {}\n", docs.len()));
                    text
                }
            };
            emit(&output, content)?;
            if passed == docs.len() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Catalog { group, output } => {
            let descriptor: GroupDescriptor = group.parse().map_err(|e: equicoh::EngineError| e.to_string())?;
            let data = classifying_data(&descriptor).map_err(|e| e.to_string())?;
            let doc = catalog_to_doc(&data);
            let content = match output.format {
                Format::Json => to_json(&doc),
                Format::Text => io::render_catalog_text(&doc),
            };
            emit(&output, content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
