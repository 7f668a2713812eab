use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "apa-sbox", version, about = "Build and analyze 8x8 S-boxes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a built-in S-box.
    Generate {
        kind: Kind,
        /// Rotation amount, required for `rotation` (1..=7).
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = GenerateFormat::Hex)]
        format: GenerateFormat,
        /// Output file; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Analyze one S-box given as a built-in name or a hex text file.
    Analyze {
        source: String,
        #[arg(long, value_enum, default_value_t = AnalyzeEmit::Summary)]
        emit: AnalyzeEmit,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate several S-boxes side by side, in argument order.
    Compare {
        #[arg(required = true)]
        sources: Vec<String>,
        #[arg(long, value_enum, default_value_t = CompareEmit::Markdown)]
        emit: CompareEmit,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the interpolating polynomial of an S-box over GF(2^8).
    Polynomial {
        source: String,
        #[arg(long, value_enum, default_value_t = PolynomialEmit::Text)]
        emit: PolynomialEmit,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Aes,
    Apa,
    Rotation,
    /// A ∘ P ∘ A with the AES affine transform on both sides.
    ApaAesAffine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenerateFormat {
    Hex,
    Table,
    CArray,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AnalyzeEmit {
    Summary,
    FullJson,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CompareEmit {
    Markdown,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolynomialEmit {
    Text,
    Json,
}
