use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GraphModel, LaplacianMatrix};
use crate::error::{Error, Result};

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::domain(alloc::format!(
            "vertex {v} out of range for {n} vertices"
        )));
    }
    Ok(())
}

/// Breadth-first edge distance between two vertices of a finite model.
pub fn graph_distance(model: &GraphModel, u: usize, v: usize) -> Result<usize> {
    let (graph, _) = model.materialize()?;
    let n = graph.vertex_count();
    check_vertex(u, n)?;
    check_vertex(v, n)?;
    let adj = graph.adjacency_lists();
    let mut dist = vec![usize::MAX; n];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return Ok(dist[x]);
        }
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    unreachable!("half-edge graphs are connected")
}

/// Least n with ⟨δ_v, Δⁿ δ_u⟩ ≠ 0.
pub fn distance_by_laplacian_powers(model: &GraphModel, u: usize, v: usize) -> Result<usize> {
    let (graph, _) = model.materialize()?;
    let n = graph.vertex_count();
    check_vertex(u, n)?;
    check_vertex(v, n)?;
    let lap = LaplacianMatrix::from_graph(&graph);
    let mut vec_u: Vec<BigInt> = vec![BigInt::zero(); n];
    vec_u[u] = BigInt::one();
    for power in 0..n {
        if !vec_u[v].is_zero() {
            return Ok(power);
        }
        vec_u = (0..n)
            .map(|i| {
                lap.row(i)
                    .iter()
                    .zip(&vec_u)
                    .filter(|(a, _)| **a != 0)
                    .map(|(a, x)| x * *a)
                    .sum()
            })
            .collect();
    }
    unreachable!("distance in a connected graph is below the vertex count")
}
