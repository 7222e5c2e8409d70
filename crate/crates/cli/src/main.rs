//! `nkconf`: command-line front end for the `nkconfig` library.
//!
//! Every subcommand prints JSON on stdout, or writes it to `--json <path>`.
//! Exit status: 0 when the analysis completed, whatever the verdict; 1 on
//! unreadable or malformed input; 2 on usage errors; 3 when `validate`
//! finds that a file does not satisfy its own `config n k` header.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value as Json};

use nkconfig::construction::{plan_min_free, ConstructionSequence};
use nkconfig::incidence::{parse_document, validate, Document};
use nkconfig::realizer::{realize, realize_planned, to_svg, Normalization, RealizeOptions, Status, Verdict};
use nkconfig::subconfig::{enumerate_embeddings, theorem_compatible, PatternLibrary, TheoremReport};
use nkconfig::symmetry::{automorphism_group, polarity_check, Correspondence, TopologicalData};
use nkconfig::{Claim, Configuration};

#[derive(Parser)]
#[command(
    name = "nkconf",
    version,
    about = "Analyze combinatorial (n_k) point-line configurations"
)]
struct Cli {
    /// Write the JSON output to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check counts, regularity and the no-digon axiom.
    Validate {
        file: PathBuf,
        /// Expected number of points and lines (default: from the header).
        #[arg(long)]
        n: Option<usize>,
        /// Expected degree (default: from the header).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print the dual structure in the text format.
    Dual { file: PathBuf },
    /// Automorphisms and self-dualities.
    Autgroup {
        file: PathBuf,
        /// List every element in cycle notation.
        #[arg(long)]
        elements: bool,
    },
    /// Compare cyclic orders under self-dualities.
    Polarity {
        file: PathBuf,
        /// Check only this duality, in paired notation such as `(A,a)(B,b)`.
        #[arg(long)]
        duality: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Plan a construction sequence with the fewest free steps, or check a
    /// given one.
    Cseq {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long)]
        sequence: Option<String>,
    },
    /// Induced embeddings of a pattern.
    FindSub {
        file: PathBuf,
        /// Built-in pattern name (pappus, non_pappus, desargues,
        /// non_desargues) or a path to a pattern file.
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Pappus and Desargues compatibility.
    Filter { file: PathBuf },
    /// Decide geometric realizability over the reals.
    Realize {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Largest number of variables the solver decides (0, 1 or 2).
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
        max_vars: u8,
        /// Use this construction sequence instead of planning one.
        #[arg(long)]
        sequence: Option<String>,
        /// Keep polynomials unreduced, as they come out of the cross products.
        #[arg(long)]
        raw: bool,
        /// Draw the witness, if one is found.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// One JSON line per file; directories contribute their `.conf` files.
    Report {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
        max_vars: u8,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
}

struct Output {
    text: String,
    failed_claim: bool,
}

impl Output {
    fn json(v: &Json) -> Self {
        Output {
            text: serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n",
            failed_claim: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli.command) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("nkconf: {e}");
            return ExitCode::from(if matches!(e, CliError::Usage(_)) { 2 } else { 1 });
        }
    };
    match &cli.json {
        Some(path) => {
            if let Err(e) = write_atomically(path, &out.text) {
                eprintln!("nkconf: {e}");
                return ExitCode::from(1);
            }
        }
        None => print!("{}", out.text),
    }
    ExitCode::from(if out.failed_claim { 3 } else { 0 })
}

fn write_atomically(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_document(&text).map_err(|e| input(path, e))
}

fn input(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

fn options(max_vars: u8, raw: bool) -> RealizeOptions {
    RealizeOptions {
        normalization: if raw {
            Normalization::Raw
        } else {
            Normalization::Reduced
        },
        max_vars: max_vars as usize,
    }
}

fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Validate { file, n, k } => {
            let c = load(file)?.config;
            let (n, k) = match (c.claim(), n, k) {
                (_, Some(n), Some(k)) => (*n, *k),
                (Claim::Configuration { n: hn, k: hk }, n, k) => (n.unwrap_or(hn), k.unwrap_or(hk)),
                (Claim::Structure, _, _) => {
                    return Err(CliError::Usage(format!(
                        "{}: a structure file needs both --n and --k",
                        file.display()
                    )))
                }
            };
            let report = validate(&c, n, k);
            let mut out = Output::json(&json!(report));
            out.failed_claim = !report.certified;
            Ok(out)
        }
        Command::Dual { file } => {
            let c = load(file)?.config;
            Ok(Output {
                text: c.dual().to_text(),
                failed_claim: false,
            })
        }
        Command::Autgroup { file, elements } => {
            let c = load(file)?.config;
            let g = automorphism_group(&c);
            let mut v = json!({
                "summary": g.summary(),
                "self_dual": g.dualities().next().is_some(),
            });
            if *elements {
                let list: Vec<Json> = g
                    .elements()
                    .iter()
                    .map(|e| json!({"kind": e.kind(), "cycles": e.to_cycle_notation(&c)}))
                    .collect();
                v["elements"] = Json::Array(list);
            }
            Ok(Output::json(&v))
        }
        Command::Polarity { file, duality, budget } => {
            let doc = load(file)?;
            Ok(Output::json(&polarity(file, &doc, duality.as_deref(), *budget)?))
        }
        Command::Cseq { file, budget, sequence } => {
            let c = load(file)?.config;
            let v = match sequence {
                Some(text) => {
                    let s = ConstructionSequence::parse(&c, text).map_err(|e| input(file, e))?;
                    json!({"sequence": s.to_text(&c), "free_count": s.free_count(), "valid": true})
                }
                None => {
                    let plan = plan_min_free(&c, *budget).map_err(|e| input(file, e))?;
                    json!({
                        "base": plan.base.labels(&c),
                        "sequence": plan.sequence.to_text(&c),
                        "free_count": plan.free_count,
                        "explored": plan.explored,
                        "exhausted": plan.exhausted,
                    })
                }
            };
            Ok(Output::json(&v))
        }
        Command::FindSub { file, pattern, limit } => {
            let host = load(file)?.config;
            let lib = PatternLibrary::new();
            let owned;
            let pat = match lib.get(pattern) {
                Some(p) => p,
                None => {
                    let path = Path::new(pattern);
                    if !path.exists() {
                        return Err(CliError::Usage(format!("unknown pattern {pattern:?}")));
                    }
                    owned = load(path)?.config;
                    &owned
                }
            };
            let s = enumerate_embeddings(pat, &host, *limit);
            let list: Vec<String> = s.embeddings.iter().map(|e| e.to_text(pat, &host)).collect();
            Ok(Output::json(&json!({
                "method": s.method,
                "count": list.len(),
                "truncated": s.truncated,
                "embeddings": list,
            })))
        }
        Command::Filter { file } => {
            let c = load(file)?.config;
            Ok(Output::json(&filter_json(&c, &theorem_compatible(&c))))
        }
        Command::Realize {
            file,
            budget,
            max_vars,
            sequence,
            raw,
            svg,
        } => {
            let c = load(file)?.config;
            let opts = options(*max_vars, *raw);
            let v = match sequence {
                Some(text) => {
                    let s = ConstructionSequence::parse(&c, text).map_err(|e| input(file, e))?;
                    realize(&c, &s, opts)
                }
                None => realize_planned(&c, *budget, opts),
            }
            .map_err(|e| input(file, e))?;
            if let (Some(path), Some(w)) = (svg, &v.witness) {
                write_atomically(path, &to_svg(&c, w))?;
            }
            Ok(Output::json(&v.to_json(&c)))
        }
        Command::Report {
            paths,
            budget,
            max_vars,
        } => {
            let mut files = Vec::new();
            for p in paths {
                files.extend(conf_files(p)?);
            }
            files.sort();
            files.dedup();
            let mut text = String::new();
            for f in &files {
                let line = report_line(f, *budget, options(*max_vars, false))?;
                text += &serde_json::to_string(&line).expect("JSON values serialize");
                text.push('\n');
            }
            Ok(Output {
                text,
                failed_claim: false,
            })
        }
    }
}

fn conf_files(path: &Path) -> Result<Vec<PathBuf>, CliError> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut out = Vec::new();
    for entry in fs::read_dir(path).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.extension().is_some_and(|e| e == "conf") {
            out.push(p);
        }
    }
    Ok(out)
}

fn filter_json(c: &Configuration, r: &TheoremReport) -> Json {
    let lib = PatternLibrary::new();
    json!({
        "pappus": r.pappus,
        "desargues": r.desargues,
        "pappus_violation": r.pappus_violation.as_ref().map(|e| e.to_text(&lib.non_pappus, c)),
        "desargues_violation": r.desargues_violation.as_ref().map(|e| e.to_text(&lib.non_desargues, c)),
    })
}

/// Cyclic orders from the file, or else from an exact witness.
fn topology(path: &Path, doc: &Document, budget: u64) -> Result<(TopologicalData, &'static str), CliError> {
    let c = &doc.config;
    if !doc.cyclic_lines.is_empty() || !doc.cyclic_points.is_empty() {
        return Ok((TopologicalData::from_document(doc).map_err(|e| input(path, e))?, "file"));
    }
    let v = realize_planned(c, budget, RealizeOptions::default()).map_err(|e| input(path, e))?;
    let coords = v
        .witness
        .as_ref()
        .and_then(|w| Some((w.point_coords(c)?, w.line_coords(c)?)));
    let Some((points, lines)) = coords else {
        return Err(input(path, "no cyclic rows and no exact witness to read them from"));
    };
    let t = TopologicalData::from_coordinates(c, &points, &lines).map_err(|e| input(path, e))?;
    Ok((t, "witness"))
}

fn polarity(path: &Path, doc: &Document, duality: Option<&str>, budget: u64) -> Result<Json, CliError> {
    let c = &doc.config;
    let (t, source) = topology(path, doc, budget)?;
    let sigmas: Vec<Correspondence> = match duality {
        Some(text) => vec![Correspondence::parse(c, text).map_err(|e| CliError::Usage(e.to_string()))?],
        None => automorphism_group(c).dualities().cloned().collect(),
    };
    let mut checks = Vec::new();
    for s in &sigmas {
        let r = polarity_check(c, &t, s).map_err(|e| input(path, e))?;
        checks.push(json!({
            "duality": s.to_cycle_notation(c),
            "strict": r.strict,
            "tolerant": r.tolerant,
            "first_failure": r.first_failure,
        }));
    }
    let count = |key: &str| checks.iter().filter(|v| v[key] == true).count();
    Ok(json!({
        "topology": source,
        "dualities": checks.len(),
        "strict_polarities": count("strict"),
        "tolerant_polarities": count("tolerant"),
        "checks": checks,
    }))
}

fn report_line(path: &Path, budget: u64, opts: RealizeOptions) -> Result<Json, CliError> {
    let c = load(path)?.config;
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned());
    let validation = match c.claim() {
        Claim::Configuration { n, k } => json!(validate(&c, n, k)),
        Claim::Structure => Json::Null,
    };
    let g = automorphism_group(&c);
    let realizability = match realize_planned(&c, budget, opts) {
        Ok(v) => verdict_summary(&v),
        Err(e) => json!({"status": Status::Undecided, "reason": e.to_string()}),
    };
    Ok(json!({
        "file": name,
        "validation": validation,
        "automorphisms": g.summary(),
        "self_dual": g.dualities().next().is_some(),
        "filter": filter_json(&c, &theorem_compatible(&c)),
        "realizability": realizability,
    }))
}

fn verdict_summary(v: &Verdict) -> Json {
    json!({
        "status": v.status,
        "sequence": v.sequence,
        "variables": v.variables,
        "branches": v.branches.len(),
        "certificate_steps": v.branches.iter().map(|b| b.certificate.len()).sum::<usize>(),
        "reason": v.reason,
    })
}
