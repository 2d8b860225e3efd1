//! Rendering helpers shared by the `verify` and `tables` binaries: the
//! report and matrix-table structures serialized as JSON, CSV, or LaTeX.
//!
//! JSON output is byte-deterministic for a fixed configuration and seed.

use anyhow::{bail, Result};
use quantum_pbw::report::{MatrixTable, RatFunRepr, Report};

/// Render a verification report in the requested format.
pub fn render_report(report: &Report, format: &str) -> Result<String> {
    match format {
        "json" => Ok(format!("{}\n", serde_json::to_string_pretty(report)?)),
        "csv" => Ok(report_csv(report)),
        "latex" => Ok(report_latex(report)),
        other => bail!("unknown format {:?} (expected json, csv, or latex)", other),
    }
}

/// Render transition-matrix tables in the requested format.
pub fn render_tables(tables: &[MatrixTable], format: &str) -> Result<String> {
    match format {
        "json" => Ok(format!("{}\n", serde_json::to_string_pretty(tables)?)),
        "csv" => Ok(tables_csv(tables)),
        "latex" => Ok(tables_latex(tables)),
        other => bail!("unknown format {:?} (expected json, csv, or latex)", other),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn ints_string<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn report_csv(report: &Report) -> String {
    let mut out = String::from("check,beta,word,status,witness,note\n");
    for r in &report.results {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            csv_escape(&r.check),
            csv_escape(&r.beta.as_ref().map(|b| ints_string(b)).unwrap_or_default()),
            csv_escape(&r.word.as_ref().map(|w| ints_string(w)).unwrap_or_default()),
            csv_escape(&r.status),
            csv_escape(r.witness.as_deref().unwrap_or("")),
            csv_escape(r.note.as_deref().unwrap_or("")),
        ));
    }
    out.push_str(&format!(
        "summary,,,{},{} of {} passed,\n",
        if report.all_passed() { "pass" } else { "fail" },
        report.summary.passed,
        report.summary.total
    ));
    out
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('_', "\\_")
        .replace('#', "\\#")
        .replace('%', "\\%")
        .replace('&', "\\&")
        .replace('{', "\\{")
        .replace('}', "\\}")
}

fn report_latex(report: &Report) -> String {
    let mut out = String::from("\\begin{tabular}{llll}\n\\hline\ncheck & beta & word & status \\\\\n\\hline\n");
    for r in &report.results {
        out.push_str(&format!(
            "{} & {} & {} & {} \\\\\n",
            latex_escape(&r.check),
            r.beta.as_ref().map(|b| ints_string(b)).unwrap_or_default(),
            r.word.as_ref().map(|w| ints_string(w)).unwrap_or_default(),
            r.status
        ));
    }
    out.push_str(&format!(
        "\\hline\n\\multicolumn{{4}}{{l}}{{{} of {} passed}} \\\\\n\\hline\n\\end{{tabular}}\n",
        report.summary.passed, report.summary.total
    ));
    out
}

/// A Laurent-polynomial string like `1 - t^2 + 3t^4` from sparse pairs.
fn poly_string(pairs: &[(i64, i64)], latex: bool) -> String {
    if pairs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, &(e, c)) in pairs.iter().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let var = match e {
            0 => String::new(),
            1 => "t".into(),
            _ if latex => format!("t^{{{}}}", e),
            _ => format!("t^{}", e),
        };
        if var.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&var);
        }
    }
    out
}

/// A human-readable `num / (den)` string for a serialized rational function.
pub fn ratfun_string(f: &RatFunRepr, latex: bool) -> String {
    let num = poly_string(&f.num, latex);
    if f.den.len() == 1 && f.den[0] == (0, 1) {
        return num;
    }
    let den = poly_string(&f.den, latex);
    if latex {
        format!("\\frac{{{}}}{{{}}}", num, den)
    } else {
        format!("({}) / ({})", num, den)
    }
}

fn tables_csv(tables: &[MatrixTable]) -> String {
    let mut out = String::new();
    for t in tables {
        out.push_str(&format!("matrix,{}\n", csv_escape(&t.name)));
        let labels: Vec<String> = t.data.iter().map(|d| ints_string(&d.c)).collect();
        out.push_str(&format!(
            "datum,{}\n",
            labels.iter().map(|l| csv_escape(l)).collect::<Vec<_>>().join(",")
        ));
        for (i, row) in t.entries.iter().enumerate() {
            out.push_str(&csv_escape(&labels[i]));
            for f in row {
                out.push(',');
                out.push_str(&csv_escape(&ratfun_string(f, false)));
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

fn tables_latex(tables: &[MatrixTable]) -> String {
    let mut out = String::new();
    for t in tables {
        let labels: Vec<String> = t
            .data
            .iter()
            .map(|d| format!("({})", ints_string(&d.c)))
            .collect();
        out.push_str(&format!(
            "% {}\n\\begin{{tabular}}{{l{}}}\n\\hline\n{} & {} \\\\\n\\hline\n",
            t.name,
            "c".repeat(labels.len()),
            latex_escape(&t.name),
            labels.join(" & ")
        ));
        for (i, row) in t.entries.iter().enumerate() {
            out.push_str(&labels[i]);
            for f in row {
                out.push_str(" & $");
                out.push_str(&ratfun_string(f, true));
                out.push('$');
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}\n\n");
    }
    out
}

/// Parse a comma-separated integer list like `1,1,0`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(Into::into))
        .collect()
}
