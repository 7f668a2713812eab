mod cli;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use apa_sbox::algebraic::interpolate;
use apa_sbox::analysis::analyze;
use apa_sbox::format::{parse_hex_text, to_c_array, to_decimal_grid, to_hex_text};
use apa_sbox::{builtin, SBox};
use clap::Parser;
use thiserror::Error;

use cli::{AnalyzeEmit, Cli, Command, CompareEmit, GenerateFormat, Kind, PolynomialEmit};
use render::{PolynomialDocument, ReportDocument, SboxDocument};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}: {message}")]
    Input { source_name: String, message: String },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input { .. } => 2,
            CliError::Internal(_) => 3,
        }
    }
}

fn input_error(source_name: impl Into<String>, message: impl ToString) -> CliError {
    CliError::Input {
        source_name: source_name.into(),
        message: message.to_string(),
    }
}

/// A built-in name, otherwise a path to a hex text file.
fn load(source: &str) -> Result<SBox, CliError> {
    if let Some(s) = builtin(source) {
        return Ok(s);
    }
    let text = fs::read_to_string(source).map_err(|e| input_error(source, e))?;
    parse_hex_text(&text, source).map_err(|e| input_error(source, e))
}

fn generated(kind: Kind, k: Option<u32>) -> Result<SBox, CliError> {
    let name = match (kind, k) {
        (Kind::Rotation, Some(k)) if (1..=7).contains(&k) => format!("rotation-{k}"),
        (Kind::Rotation, Some(k)) => {
            return Err(CliError::Usage(format!("--k must be in 1..=7, got {k}")))
        }
        (Kind::Rotation, None) => return Err(CliError::Usage("rotation requires --k".into())),
        (_, Some(_)) => return Err(CliError::Usage("--k only applies to rotation".into())),
        (Kind::Aes, None) => "aes".into(),
        (Kind::Apa, None) => "apa".into(),
        (Kind::ApaAesAffine, None) => "apa-aes-affine".into(),
    };
    let s = builtin(&name).ok_or_else(|| CliError::Internal(format!("unknown builtin {name}")))?;
    if !s.is_bijective() {
        return Err(CliError::Internal(format!("{} is not bijective", s.label())));
    }
    Ok(s)
}

fn c_identifier(label: &str) -> String {
    let mut id: String = label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '_' })
        .collect();
    if id.starts_with(|c: char| c.is_ascii_digit()) {
        id.insert(0, '_');
    }
    id
}

fn run(command: Command) -> Result<(String, Option<PathBuf>), CliError> {
    match command {
        Command::Generate { kind, k, format, output } => {
            let s = generated(kind, k)?;
            let text = match format {
                GenerateFormat::Hex => to_hex_text(&s),
                GenerateFormat::Table => to_decimal_grid(&s),
                GenerateFormat::CArray => to_c_array(&s, &c_identifier(s.label())),
                GenerateFormat::Json => render::to_json(&SboxDocument::new(&s)),
            };
            Ok((text, output))
        }
        Command::Analyze { source, emit, output } => {
            let s = load(&source)?;
            let report = analyze(&s);
            let text = match emit {
                AnalyzeEmit::Summary => render::summary(&report),
                AnalyzeEmit::Markdown => render::markdown_report(&report),
                AnalyzeEmit::FullJson => render::to_json(&ReportDocument::single(report, &s)),
            };
            Ok((text, output))
        }
        Command::Compare { sources, emit, output } => {
            let boxes = sources.iter().map(|src| load(src)).collect::<Result<Vec<_>, _>>()?;
            let reports: Vec<_> = boxes.iter().map(analyze).collect();
            let text = match emit {
                CompareEmit::Markdown => render::markdown_comparison(&reports),
                CompareEmit::Json => render::to_json(&ReportDocument::many(reports)),
            };
            Ok((text, output))
        }
        Command::Polynomial { source, emit, output } => {
            let s = load(&source)?;
            let p = interpolate(&s);
            if p.evaluation_table() != *s.table() {
                return Err(CliError::Internal(format!(
                    "{}: interpolating polynomial does not reproduce the table",
                    s.label()
                )));
            }
            let text = match emit {
                PolynomialEmit::Text => render::polynomial_text(s.label(), &p),
                PolynomialEmit::Json => render::to_json(&PolynomialDocument::new(s.label(), &p)),
            };
            Ok((text, output))
        }
    }
}

fn write_output(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| input_error(path.display().to_string(), e)),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| input_error("stdout", e))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(cli.command).and_then(|(text, output)| write_output(&text, output.as_deref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("apa-sbox: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
