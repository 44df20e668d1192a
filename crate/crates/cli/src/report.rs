//! The report document: the same key/value shape as the problem file, with
//! `input`, `result` and `diag` prefixes. Scalars are rendered with 17
//! significant digits so parsing the report recovers every double exactly.

use std::fmt::Write as _;

/// 17 significant digits: lossless round-trip for f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn fmt_vector(coords: &[f64]) -> String {
    coords
        .iter()
        .map(|c| fmt_f64(*c))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Default)]
pub struct Report {
    header: Vec<(String, String)>,
    inputs: Vec<(String, String)>,
    results: Vec<(String, String)>,
    diagnostics: Vec<(String, String)>,
    footer: Vec<String>,
}

impl Report {
    pub fn new(task: &str, p: f64) -> Self {
        let mut r = Report::default();
        r.header.push(("format_version".into(), "1".into()));
        r.header.push(("task".into(), task.into()));
        r.header.push(("p".into(), fmt_f64(p)));
        r
    }

    pub fn echo_input(&mut self, name: &str, coords: &[f64]) {
        self.inputs.push((name.into(), fmt_vector(coords)));
    }

    pub fn result_scalar(&mut self, name: &str, value: f64) {
        self.results.push((name.into(), fmt_f64(value)));
    }

    pub fn result_vector(&mut self, name: &str, coords: &[f64]) {
        self.results.push((name.into(), fmt_vector(coords)));
    }

    pub fn diag(&mut self, name: &str, value: impl ToString) {
        self.diagnostics.push((name.into(), value.to_string()));
    }

    pub fn footer(&mut self, line: String) {
        self.footer.push(line);
    }

    /// Renders the document; the footer is dropped in quiet mode.
    pub fn render(&self, quiet: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.header {
            let _ = writeln!(out, "{k}: {v}");
        }
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "input {k}: {v}");
        }
        for (k, v) in &self.results {
            let _ = writeln!(out, "result {k}: {v}");
        }
        for (k, v) in &self.diagnostics {
            let _ = writeln!(out, "diag {k}: {v}");
        }
        if !quiet {
            for line in &self.footer {
                let _ = writeln!(out, "# {line}");
            }
        }
        out
    }
}
