use serde::Serialize;

use crate::error::CliError;
use crate::Format;

/// A report with text and TeX renderings; JSON comes from `Serialize`.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn tex(&self) -> String;
}

pub fn emit<R: Report>(r: &R, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => r.text(),
        Format::Tex => r.tex(),
        Format::Json => {
            serde_json::to_string_pretty(r).map_err(|e| CliError::BadInput(e.to_string()))?
        }
    })
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

/// TeX form of the pretty-printed notation used throughout.
pub fn to_tex(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if let Some(d) = SUPERSCRIPTS.iter().position(|&x| x == c) {
            let mut digits = d.to_string();
            while let Some(e) = chars
                .peek()
                .and_then(|n| SUPERSCRIPTS.iter().position(|x| x == n))
            {
                digits.push_str(&e.to_string());
                chars.next();
            }
            out.push_str(&format!("^{{{digits}}}"));
            continue;
        }
        match c {
            '−' => out.push('-'),
            '·' => out.push_str(" \\cdot "),
            '⊕' => out.push_str("\\oplus"),
            '∈' => out.push_str("\\in"),
            '↦' => out.push_str("\\mapsto"),
            'σ' => out.push_str("\\sigma"),
            '⁰'..='⁹' => {}
            _ => out.push(c),
        }
    }
    out.replace("tot(", "\\operatorname{tot}(")
        .replace("H^{0}(", "H^0(")
}

pub fn tex_matrix(rows: &[Vec<String>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(|x| to_tex(x)).collect::<Vec<_>>().join(" & "))
        .collect();
    format!(
        "\\begin{{pmatrix}} {} \\end{{pmatrix}}",
        body.join(" \\\\ ")
    )
}

pub fn math_lines(lines: &[String]) -> String {
    let body: Vec<String> = lines
        .iter()
        .map(|l| format!("  {} \\\\", to_tex(l)))
        .collect();
    format!("\\begin{{gather*}}\n{}\n\\end{{gather*}}", body.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tex_conversion() {
        assert_eq!(to_tex("x⁴ − yz + b1·x²"), "x^{4} - yz + b1 \\cdot x^{2}");
        assert_eq!(to_tex("a¹²"), "a^{12}");
    }
}
