//! The problem file: a self-describing key/value text document, one problem
//! per file.
//!
//! ```text
//! format_version: 1
//! task: angle2d
//! p: 2
//! u1: 1 1 2 0
//! u2: 2 1 3 0
//! v1: 1 0 0 0
//! v2: 0 1 0 0
//! samples: 4096
//! ```
//!
//! Scalar keys are `format_version`, `task`, `p` and the optimizer overrides
//! `samples`, `refine_iters`, `seed`, `tol`, `oracle_grid`; every other key
//! names a vector whose value is a whitespace-separated list of reals. Lines
//! starting with `#` and blank lines are ignored. Errors carry the line
//! number.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    G,
    Norm2,
    Project,
    Orthonormalize,
    Angle1d,
    Angle2d,
    LemmaCheck,
}

impl Task {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "g" => Some(Task::G),
            "norm2" => Some(Task::Norm2),
            "project" => Some(Task::Project),
            "orthonormalize" => Some(Task::Orthonormalize),
            "angle1d" => Some(Task::Angle1d),
            "angle2d" => Some(Task::Angle2d),
            "lemma-check" => Some(Task::LemmaCheck),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Task::G => "g",
            Task::Norm2 => "norm2",
            Task::Project => "project",
            Task::Orthonormalize => "orthonormalize",
            Task::Angle1d => "angle1d",
            Task::Angle2d => "angle2d",
            Task::LemmaCheck => "lemma-check",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug)]
pub struct Problem {
    pub task: Option<Task>,
    pub p: f64,
    /// Named vectors in file order.
    pub vectors: Vec<(String, Vec<f64>)>,
    pub samples: Option<usize>,
    pub refine_iters: Option<usize>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub oracle_grid: Option<usize>,
}

impl Problem {
    pub fn vector(&self, name: &str) -> Option<&[f64]> {
        self.vectors
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    /// The run `v1, v2, .., vm` of consecutively numbered vectors with the
    /// given stem; an error if `<stem>1` is missing or the numbering has a
    /// gap.
    pub fn numbered(&self, stem: &str) -> Result<Vec<&[f64]>, String> {
        let mut out = Vec::new();
        let mut k = 1usize;
        while let Some(v) = self.vector(&format!("{stem}{k}")) {
            out.push(v);
            k += 1;
        }
        if out.is_empty() {
            return Err(format!("missing required vector '{stem}1'"));
        }
        let extra: Vec<String> = self
            .vectors
            .iter()
            .map(|(n, _)| n.clone())
            .filter(|n| {
                n.strip_prefix(stem)
                    .is_some_and(|suffix| suffix.parse::<usize>().is_ok_and(|i| i >= k))
            })
            .collect();
        if let Some(name) = extra.first() {
            return Err(format!(
                "vector '{name}' skips '{stem}{k}'; numbering must be consecutive"
            ));
        }
        Ok(out)
    }
}

fn scalar_key(key: &str) -> bool {
    matches!(
        key,
        "format_version" | "task" | "p" | "samples" | "refine_iters" | "seed" | "tol"
            | "oracle_grid"
    )
}

pub fn parse(text: &str) -> Result<Problem, String> {
    let mut task = None;
    let mut p = None;
    let mut vectors: Vec<(String, Vec<f64>)> = Vec::new();
    let mut samples = None;
    let mut refine_iters = None;
    let mut seed = None;
    let mut tol = None;
    let mut oracle_grid = None;
    let mut seen: BTreeSet<String> = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| format!("line {lineno}: expected 'key: value'"))?;
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() {
            return Err(format!("line {lineno}: empty key"));
        }
        if !seen.insert(key.to_string()) {
            return Err(format!("line {lineno}: duplicate key '{key}'"));
        }
        match key {
            "format_version" => {
                let v: u32 = value
                    .parse()
                    .map_err(|_| format!("line {lineno}: format_version must be an integer"))?;
                if v != 1 {
                    return Err(format!("line {lineno}: unsupported format_version {v}"));
                }
            }
            "task" => {
                task = Some(Task::from_name(value).ok_or_else(|| {
                    format!("line {lineno}: unknown task '{value}'")
                })?)
            }
            "p" => {
                let v: f64 = value
                    .parse()
                    .map_err(|_| format!("line {lineno}: p must be a real number"))?;
                p = Some(v);
            }
            "samples" => samples = Some(parse_usize(value, lineno, "samples")?),
            "refine_iters" => refine_iters = Some(parse_usize(value, lineno, "refine_iters")?),
            "oracle_grid" => oracle_grid = Some(parse_usize(value, lineno, "oracle_grid")?),
            "seed" => {
                seed = Some(value.parse().map_err(|_| {
                    format!("line {lineno}: seed must be an unsigned integer")
                })?)
            }
            "tol" => {
                tol = Some(value.parse().map_err(|_| {
                    format!("line {lineno}: tol must be a real number")
                })?)
            }
            name => {
                if !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(format!("line {lineno}: invalid vector name '{name}'"));
                }
                debug_assert!(!scalar_key(name));
                let mut coords = Vec::new();
                for (pos, token) in value.split_whitespace().enumerate() {
                    let x: f64 = token.parse().map_err(|_| {
                        format!(
                            "line {lineno}: vector '{name}' entry {}: invalid number '{token}'",
                            pos + 1
                        )
                    })?;
                    if !x.is_finite() {
                        return Err(format!(
                            "line {lineno}: vector '{name}' entry {}: must be finite",
                            pos + 1
                        ));
                    }
                    coords.push(x);
                }
                if coords.is_empty() {
                    return Err(format!("line {lineno}: vector '{name}' is empty"));
                }
                vectors.push((name.to_string(), coords));
            }
        }
    }
    Ok(Problem {
        task,
        p: p.ok_or_else(|| "missing required key 'p'".to_string())?,
        vectors,
        samples,
        refine_iters,
        seed,
        tol,
        oracle_grid,
    })
}

fn parse_usize(value: &str, lineno: usize, key: &str) -> Result<usize, String> {
    value
        .parse()
        .map_err(|_| format!("line {lineno}: {key} must be a nonnegative integer"))
}
