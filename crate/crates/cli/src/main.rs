//! `qtchar` command-line tool.
//!
//! Exit status: 0 success, 2 bad usage or unreadable input, 3 computation
//! error, 4 validation failure, 5 fixture mismatch.

mod args;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use qtchar::charalg::{CharacterDoc, DocError};
use qtchar::fixtures::{self, FIXTURES};
use qtchar::fm::{audit, FmOptions};
use qtchar::jordan::annotate_doc;
use qtchar::{
    dot, fundamental_qt_with, standard_module_qt_with, validate_poincare, Character, Exec, FactorSpec,
    RootDatum, SpectralShift,
};

use args::{Cli, Command, ComputeArgs, Format, OutputArgs};

enum Failure {
    Usage(String),
    Compute(String),
    Validation(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 3,
            Failure::Validation(_) => 4,
            Failure::Mismatch(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) | Failure::Validation(m) | Failure::Mismatch(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qtchar: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn options(c: &ComputeArgs) -> (FmOptions, Exec) {
    let exec = if c.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let opts = FmOptions {
        depth_cap: c.depth_cap,
        exec,
        ..FmOptions::default()
    };
    (opts, exec)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Fundamental {
            datum,
            node,
            shift,
            orbit,
            compute,
            output,
        } => {
            let (opts, _) = options(&compute);
            datum
                .datum
                .check_node(node)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let ch = fundamental_qt_with(&datum.datum, node, &SpectralShift::new(orbit, shift), &opts)
                .map_err(|e| Failure::Compute(e.to_string()))?;
            emit_character(&ch, &output)
        }
        Command::Standard {
            datum,
            factors,
            compute,
            output,
        } => {
            let ch = standard(&datum.datum, &factors, &compute)?;
            emit_character(&ch, &output)
        }
        Command::Decode { input, output } => {
            let mut doc = read_doc(&input.input)?;
            annotate_doc(&mut doc).map_err(|e| Failure::Validation(e.to_string()))?;
            let text = match output.format {
                Format::Json => doc.to_json_pretty() + "\n",
                Format::Text => doc_text(&doc),
                Format::Dot => {
                    return Err(Failure::Usage("decode output cannot be drawn; use dot".into()));
                }
            };
            write_out(output.out.as_deref(), &text)
        }
        Command::Check { input } => {
            let doc = read_doc(&input.input)?;
            let problems = check(&doc);
            if problems.is_empty() {
                println!("ok: {} terms", doc.terms.len());
                Ok(())
            } else {
                for p in &problems {
                    println!("{p}");
                }
                Err(Failure::Validation("check failed".into()))
            }
        }
        Command::Dot {
            input,
            type_name,
            node,
            factors,
            compute,
            out,
        } => {
            let ch = match (input, type_name) {
                (Some(path), _) => {
                    let doc = read_doc(&path)?;
                    Character::from_doc(&doc).map_err(doc_failure)?
                }
                (None, Some(datum)) => {
                    let factors = match (node, factors) {
                        (Some(n), None) => vec![FactorSpec::at(n, 0)],
                        (None, Some(f)) => f,
                        _ => return Err(Failure::Usage("give --node or --factors".into())),
                    };
                    standard(&datum, &factors, &compute)?
                }
                (None, None) => return Err(Failure::Usage("give --input or --type".into())),
            };
            write_out(out.as_deref(), &dot::to_dot(&ch))
        }
        Command::Fixtures { name, compute } => run_fixtures(name.as_deref(), &compute),
    }
}

fn standard(datum: &RootDatum, factors: &[FactorSpec], compute: &ComputeArgs) -> Result<Character, Failure> {
    for f in factors {
        datum
            .check_node(f.node)
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let (opts, exec) = options(compute);
    standard_module_qt_with(datum, factors, &opts, exec).map_err(|e| Failure::Compute(e.to_string()))
}

fn emit_character(ch: &Character, output: &OutputArgs) -> Result<(), Failure> {
    let text = match output.format {
        Format::Dot => dot::to_dot(ch),
        Format::Json | Format::Text => {
            let mut doc = ch.to_doc();
            if output.decode {
                annotate_doc(&mut doc).map_err(|e| Failure::Validation(e.to_string()))?;
            }
            if output.format == Format::Json {
                doc.to_json_pretty() + "\n"
            } else {
                doc_text(&doc)
            }
        }
    };
    write_out(output.out.as_deref(), &text)
}

/// One line per term: coefficient, monomial and, when present, Jordan blocks.
fn doc_text(doc: &CharacterDoc) -> String {
    let mut out = String::new();
    for t in &doc.terms {
        let mono = if t.monomial.trim().is_empty() {
            "1"
        } else {
            &t.monomial
        };
        let _ = write!(out, "{}\t{}", t.coeff.0, mono);
        if let Some(j) = &t.jordan {
            let blocks: Vec<String> = j.blocks.iter().map(|b| b.to_string()).collect();
            let _ = write!(out, "\t[{}]", blocks.join(","));
        }
        out.push('\n');
    }
    out
}

fn check(doc: &CharacterDoc) -> Vec<String> {
    let mut problems = Vec::new();
    for t in &doc.terms {
        let report = validate_poincare(&t.coeff.0);
        if !report.is_pass() {
            problems.push(format!("{}: coefficient {}: {report}", t.monomial, t.coeff.0));
        }
    }
    if doc.terms.iter().all(|t| t.w.is_some() && t.v.is_some()) {
        match Character::from_doc(doc) {
            Ok(ch) => {
                if let Err(e) = audit(&ch, Exec::default()) {
                    problems.push(e.to_string());
                }
            }
            Err(e) => problems.push(e.to_string()),
        }
    }
    problems
}

fn run_fixtures(name: Option<&str>, compute: &ComputeArgs) -> Result<(), Failure> {
    let selected: Vec<_> = match name {
        Some(n) => vec![fixtures::fixture(n).ok_or_else(|| {
            let known: Vec<&str> = FIXTURES.iter().map(|f| f.name).collect();
            Failure::Usage(format!("unknown fixture {n:?}; known: {}", known.join(", ")))
        })?],
        None => FIXTURES.iter().collect(),
    };
    let (opts, exec) = options(compute);
    let mut failed = Vec::new();
    for f in selected {
        let doc = f.doc().map_err(|e| Failure::Usage(format!("{}: {e}", f.name)))?;
        let ch =
            fixtures::compute(&doc, &opts, exec).map_err(|e| Failure::Compute(format!("{}: {e}", f.name)))?;
        let diff = fixtures::compare(&doc, &ch);
        match diff.first() {
            None => println!(
                "{}: ok ({} terms computed, {} listed)",
                f.name,
                ch.len(),
                doc.terms.len()
            ),
            Some(first) => {
                println!("{}: {} mismatches; first: {first}", f.name, diff.len());
                failed.push((f.name, first.clone()));
            }
        }
    }
    match failed.first() {
        None => Ok(()),
        Some((name, m)) => Err(Failure::Mismatch(format!("{name}: {m}"))),
    }
}

fn read_doc(path: &Path) -> Result<CharacterDoc, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    } else {
        text =
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    CharacterDoc::from_json(&text).map_err(doc_failure)
}

fn doc_failure(e: DocError) -> Failure {
    match e {
        DocError::Json(_)
        | DocError::Parse { .. }
        | DocError::RootData(_)
        | DocError::MissingField { .. } => Failure::Usage(e.to_string()),
        DocError::PayloadMismatch { .. } | DocError::Character(_) => Failure::Validation(e.to_string()),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("writing output: {e}"))),
    }
}
