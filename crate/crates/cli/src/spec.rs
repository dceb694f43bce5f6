//! Textual graph specs: `cycle:<n>`, `zd:<d>`, `file:<path>` and
//! `prod:<spec>,<spec>,...`.
//!
//! Product factors are split on commas outside parentheses, so a nested
//! product can be written `prod:(prod:cycle:3,cycle:4),cycle:5`.

use std::path::Path;

use gzeta_core::graph::{build_cycle, build_product};
use gzeta_core::GraphModel;

use crate::graph_file::load_graph_file;
use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Lattice(usize),
    File(String),
    Product(Vec<GraphSpec>),
}

impl GraphSpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        let text = text.trim();
        let (kind, arg) = text
            .split_once(':')
            .ok_or_else(|| CliError::usage(format!("graph spec '{text}' has no kind prefix")))?;
        match kind {
            "cycle" => Ok(GraphSpec::Cycle(parse_count(arg, text)?)),
            "zd" => Ok(GraphSpec::Lattice(parse_count(arg, text)?)),
            "file" if !arg.is_empty() => Ok(GraphSpec::File(arg.to_string())),
            "file" => Err(CliError::usage("graph spec 'file:' needs a path")),
            "prod" => {
                let factors = split_top_level(arg)
                    .map_err(|e| CliError::usage(format!("{e} in '{text}'")))?
                    .into_iter()
                    .map(|f| GraphSpec::parse(strip_parens(f)))
                    .collect::<CliResult<Vec<_>>>()?;
                if factors.is_empty() {
                    return Err(CliError::usage("graph spec 'prod:' needs factors"));
                }
                Ok(GraphSpec::Product(factors))
            }
            other => Err(CliError::usage(format!(
                "unknown graph kind '{other}' in '{text}' (expected cycle, zd, file or prod)"
            ))),
        }
    }

    pub fn to_model(&self) -> CliResult<GraphModel> {
        match self {
            GraphSpec::Cycle(n) => Ok(build_cycle(*n)?),
            GraphSpec::Lattice(d) => Ok(GraphModel::lattice(*d)?),
            GraphSpec::File(path) => load_graph_file(Path::new(path)),
            GraphSpec::Product(factors) => {
                let models = factors
                    .iter()
                    .map(GraphSpec::to_model)
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(build_product(&models)?)
            }
        }
    }
}

fn parse_count(arg: &str, whole: &str) -> CliResult<usize> {
    arg.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("'{arg}' in '{whole}' is not a non-negative integer")))
}

fn split_top_level(s: &str) -> Result<Vec<&str>, String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced ')'".into());
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced '('".into());
    }
    parts.push(&s[start..]);
    if parts.iter().any(|p| p.trim().is_empty()) {
        return Err("empty product factor".into());
    }
    Ok(parts)
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t)
}
