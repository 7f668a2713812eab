//! Human- and machine-readable renderings of S-boxes and reports.

use std::fmt::Write as _;

use apa_sbox::analysis::{display_trimmed, AnalysisReport};
use apa_sbox::rational::truncated_decimal;
use apa_sbox::{FieldPolynomial, SBox};
use serde::{Deserialize, Serialize};

/// JSON form of a single S-box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SboxDocument {
    pub label: String,
    pub bijective: bool,
    pub table: Vec<u8>,
}

impl SboxDocument {
    pub fn new(s: &SBox) -> Self {
        SboxDocument {
            label: s.label().to_string(),
            bijective: s.is_bijective(),
            table: s.bytes().to_vec(),
        }
    }
}

/// Machine-readable output of `analyze` and `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub reports: Vec<AnalysisReport>,
    /// 16×16 grid of the analyzed table, row-major; present for single-box output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<Vec<u8>>>,
}

impl ReportDocument {
    pub fn single(report: AnalysisReport, s: &SBox) -> Self {
        ReportDocument {
            reports: vec![report],
            grid: Some(s.bytes().chunks(16).map(<[u8]>::to_vec).collect()),
        }
    }

    pub fn many(reports: Vec<AnalysisReport>) -> Self {
        ReportDocument { reports, grid: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialTerm {
    pub exponent: u32,
    /// Two hex digits.
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDocument {
    pub label: String,
    pub term_count: u32,
    pub terms: Vec<PolynomialTerm>,
}

impl PolynomialDocument {
    pub fn new(label: &str, p: &FieldPolynomial) -> Self {
        PolynomialDocument {
            label: label.to_string(),
            term_count: p.term_count(),
            terms: p
                .terms()
                .into_iter()
                .map(|(exponent, c)| PolynomialTerm {
                    exponent,
                    coefficient: format!("{:02x}", c.value()),
                })
                .collect(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>, sep: &str) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn summary(r: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "{}", r.label).unwrap();
    writeln!(out, "bijective: {}", if r.bijective { "yes" } else { "no" }).unwrap();
    writeln!(
        out,
        "nonlinearity: {} (min {}, average {})",
        join(&r.nonlinearity.values, " "),
        r.nonlinearity.min,
        display_trimmed(&r.nonlinearity.average, 4)
    )
    .unwrap();
    writeln!(out, "{}", r.summary_line()).unwrap();
    out
}

fn nonlinearity_header(out: &mut String) {
    out.push_str("| S-box | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | Average |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
}

fn nonlinearity_row(out: &mut String, r: &AnalysisReport) {
    writeln!(
        out,
        "| {} | {} | {} |",
        r.label,
        join(&r.nonlinearity.values, " | "),
        display_trimmed(&r.nonlinearity.average, 2)
    )
    .unwrap();
}

fn metrics_header(out: &mut String) {
    out.push_str("| S-box | SAC | Max DU | Average BIC-NN | Max LP | Algebraic complexity |\n");
    out.push_str("|---|---|---|---|---|---|\n");
}

fn metrics_row(out: &mut String, r: &AnalysisReport) {
    writeln!(
        out,
        "| {} | {} | {} | {} | {} | {} |",
        r.label,
        r.sac_display(),
        r.max_du,
        display_trimmed(&r.bic_nl.average, 2),
        display_trimmed(&r.lap, 4),
        r.algebraic_complexity
    )
    .unwrap();
}

fn square_matrix<T>(out: &mut String, rows: &[Vec<T>], cell: impl Fn(&T) -> String) {
    let n = rows.len();
    writeln!(out, "| - | {} |", join((1..=n).map(|i| format!("f_{i}")), " | ")).unwrap();
    writeln!(out, "|---|{}", "---|".repeat(n)).unwrap();
    for (j, row) in rows.iter().enumerate() {
        writeln!(out, "| f_{} | {} |", j + 1, join(row.iter().map(&cell), " | ")).unwrap();
    }
}

pub fn markdown_report(r: &AnalysisReport) -> String {
    let mut out = format!("# {}\n\n", r.label);
    writeln!(out, "Bijective: {}\n", if r.bijective { "yes" } else { "no" }).unwrap();
    out.push_str("## Nonlinearity\n\n");
    nonlinearity_header(&mut out);
    nonlinearity_row(&mut out, r);
    out.push_str("\n## Summary\n\n");
    metrics_header(&mut out);
    metrics_row(&mut out, r);
    out.push_str("\n## BIC nonlinearity\n\n");
    square_matrix(&mut out, &r.bic_nl.matrix, |v| v.to_string());
    out.push_str("\n## BIC avalanche\n\n");
    square_matrix(&mut out, &r.bic_sac.matrix, |v| truncated_decimal(v, 4));
    out.push_str("\n## SAC dependency matrix\n\n");
    square_matrix(&mut out, &r.sac.entries, |v| truncated_decimal(v, 4));
    let (lo, hi) = r.sac.range();
    writeln!(
        out,
        "\nSAC mean {} (range {} to {})",
        r.sac_display(),
        truncated_decimal(&lo, 4),
        truncated_decimal(&hi, 4)
    )
    .unwrap();
    writeln!(
        out,
        "Max DP {}, LAT max |count − 128| = {}",
        display_trimmed(&r.max_dp, 6),
        r.lat_max_deviation
    )
    .unwrap();
    out
}

pub fn markdown_comparison(reports: &[AnalysisReport]) -> String {
    let mut out = String::from("## Nonlinearities\n\n");
    nonlinearity_header(&mut out);
    for r in reports {
        nonlinearity_row(&mut out, r);
    }
    out.push_str("\n## SAC, max DU, average BIC-NN, max LP, algebraic complexity\n\n");
    metrics_header(&mut out);
    for r in reports {
        metrics_row(&mut out, r);
    }
    out
}

pub fn polynomial_text(label: &str, p: &FieldPolynomial) -> String {
    let mut out = String::new();
    writeln!(out, "# {label}").unwrap();
    match p.terms().as_slice() {
        [(d, c)] => writeln!(out, "1 term: X^{d} · {c}").unwrap(),
        terms => {
            for (d, c) in terms {
                writeln!(out, "X^{d} · {c}").unwrap();
            }
            writeln!(out, "{} terms", terms.len()).unwrap();
        }
    }
    out
}
