//! Text encodings of an S-box.
//!
//! The interchange format is 256 whitespace-separated two-digit hex bytes,
//! case-insensitive, with `#` comment lines. Export writes 16 per line.

use std::fmt::Write as _;

use crate::error::SboxError;
use crate::sbox::{sbox_from_bytes, SBox, SBOX_SIZE};

/// Parse the hex text format. Errors carry 1-based line numbers.
pub fn parse_hex_text(text: &str, label: impl Into<String>) -> Result<SBox, SboxError> {
    let mut bytes = Vec::with_capacity(SBOX_SIZE);
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        for token in trimmed.split_whitespace() {
            if token.len() != 2 || !token.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(SboxError::Parse {
                    line: line_no,
                    message: format!("invalid byte `{token}`, expected two hex digits"),
                });
            }
            if bytes.len() == SBOX_SIZE {
                return Err(SboxError::Parse {
                    line: line_no,
                    message: format!("more than {SBOX_SIZE} values"),
                });
            }
            bytes.push(u8::from_str_radix(token, 16).expect("validated hex"));
        }
    }
    if bytes.len() != SBOX_SIZE {
        return Err(SboxError::Parse {
            line: last_line,
            message: format!("expected {SBOX_SIZE} values, found {}", bytes.len()),
        });
    }
    sbox_from_bytes(&bytes, label)
}

/// Hex text format, 16 lowercase bytes per line, preceded by a comment with the label.
pub fn to_hex_text(s: &SBox) -> String {
    let mut out = String::with_capacity(SBOX_SIZE * 3 + 64);
    writeln!(out, "# {}", s.label()).unwrap();
    for row in s.bytes().chunks(16) {
        let line: Vec<String> = row.iter().map(|b| format!("{b:02x}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// 16×16 decimal grid with 1-based row and column headers; input `16·(row−1) + (col−1)`.
pub fn to_decimal_grid(s: &SBox) -> String {
    let mut out = String::new();
    out.push_str("   ");
    for col in 1..=16 {
        write!(out, " {col:>3}").unwrap();
    }
    out.push('\n');
    for (r, row) in s.bytes().chunks(16).enumerate() {
        write!(out, "{:>3}", r + 1).unwrap();
        for v in row {
            write!(out, " {v:>3}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// A C array initializer.
pub fn to_c_array(s: &SBox, name: &str) -> String {
    let mut out = format!("/* {} */\nstatic const unsigned char {name}[256] = {{\n", s.label());
    for row in s.bytes().chunks(16) {
        let line: Vec<String> = row.iter().map(|b| format!("0x{b:02x}")).collect();
        writeln!(out, "    {},", line.join(", ")).unwrap();
    }
    out.push_str("};\n");
    out
}
