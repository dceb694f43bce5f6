//! JSON graph files: `{"vertices": n, "edges": [[u, v], ...]}`.
//!
//! Every pair becomes two partnered half-edges. Repeated pairs give
//! multi-edges and `[u, u]` gives a self-loop. An optional `"root"` field
//! picks the root vertex (default 0).

use std::path::Path;

use serde::Deserialize;

use gzeta_core::{GraphModel, HalfEdgeGraph};

use crate::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    root: usize,
}

pub fn parse_graph_json(text: &str) -> CliResult<GraphModel> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("graph file: {e}")))?;
    let edges: Vec<(usize, usize)> = file.edges.iter().map(|&[u, v]| (u, v)).collect();
    let graph = HalfEdgeGraph::from_edges(file.vertices, &edges)?;
    Ok(GraphModel::finite(graph, file.root)?)
}

pub fn load_graph_file(path: &Path) -> CliResult<GraphModel> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph_json(&text)
}
