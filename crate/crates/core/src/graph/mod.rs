//! Rooted graphs in the half-edge model, plus the symbolic lattices ℤᵈ.

mod distance;
mod laplacian;
mod moments;

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use distance::{distance_by_laplacian_powers, graph_distance};
pub use laplacian::{laplacian, LaplacianMatrix};
pub use moments::{lattice_moment_with_radius, n_similar, spectral_moment};

/// One half of an undirected edge. Its terminus is the origin of its partner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfEdge {
    pub origin: usize,
    pub partner: usize,
}

/// A connected finite graph given by vertices `0..n` and paired half-edges.
///
/// Self-loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfEdgeGraph {
    vertex_count: usize,
    half_edges: Vec<HalfEdge>,
}

impl HalfEdgeGraph {
    /// Validates the pairing and connectivity.
    pub fn new(vertex_count: usize, half_edges: Vec<HalfEdge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        for (i, e) in half_edges.iter().enumerate() {
            if e.origin >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "half-edge {i} starts at vertex {} but there are {vertex_count} vertices",
                    e.origin
                )));
            }
            if e.partner >= half_edges.len() || e.partner == i {
                return Err(Error::InvalidGraph(format!(
                    "half-edge {i} has invalid partner {}",
                    e.partner
                )));
            }
            if half_edges[e.partner].partner != i {
                return Err(Error::InvalidGraph(format!(
                    "partner map is not an involution at half-edge {i}"
                )));
            }
        }
        let graph = HalfEdgeGraph {
            vertex_count,
            half_edges,
        };
        if !graph.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(graph)
    }

    /// Builds a graph from undirected vertex pairs; each pair becomes two
    /// partnered half-edges and `(u, u)` is a self-loop.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut half_edges = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            let i = half_edges.len();
            half_edges.push(HalfEdge {
                origin: u,
                partner: i + 1,
            });
            half_edges.push(HalfEdge {
                origin: v,
                partner: i,
            });
        }
        Self::new(vertex_count, half_edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn origin(&self, e: usize) -> usize {
        self.half_edges[e].origin
    }

    pub fn terminus(&self, e: usize) -> usize {
        self.half_edges[self.half_edges[e].partner].origin
    }

    /// Undirected edges as `(u, v)` pairs, one per partnered couple.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.half_edges
            .iter()
            .enumerate()
            .filter(|(i, e)| *i < e.partner)
            .map(|(i, e)| (e.origin, self.terminus(i)))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.half_edges {
            deg[e.origin] += 1;
        }
        deg
    }

    /// Common degree if every vertex has the same one.
    pub fn regular_degree(&self) -> Result<usize> {
        let deg = self.degrees();
        let min = deg.iter().copied().min().unwrap_or(0);
        let max = deg.iter().copied().max().unwrap_or(0);
        if min == max {
            Ok(min)
        } else {
            Err(Error::NotRegular { min, max })
        }
    }

    /// Neighbour lists with multiplicity (one entry per outgoing half-edge).
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for i in 0..self.half_edges.len() {
            adj[self.origin(i)].push(self.terminus(i));
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.vertex_count
    }

    /// Cartesian product; vertex `(a, b)` gets index `a * |V_other| + b`.
    pub fn product(&self, other: &HalfEdgeGraph) -> HalfEdgeGraph {
        let (na, nb) = (self.vertex_count, other.vertex_count);
        let (ha, hb) = (self.half_edges.len(), other.half_edges.len());
        let mut half_edges = Vec::with_capacity(ha * nb + na * hb);
        // first factor moves, second fixed: index e * nb + b
        for e in &self.half_edges {
            for b in 0..nb {
                half_edges.push(HalfEdge {
                    origin: e.origin * nb + b,
                    partner: e.partner * nb + b,
                });
            }
        }
        let offset = ha * nb;
        // second factor moves: index offset + a * hb + f
        for a in 0..na {
            for f in &other.half_edges {
                half_edges.push(HalfEdge {
                    origin: a * nb + f.origin,
                    partner: offset + a * hb + f.partner,
                });
            }
        }
        HalfEdgeGraph {
            vertex_count: na * nb,
            half_edges,
        }
    }
}

/// A rooted graph: finite, a cycle, a lattice ℤᵈ, or a product of finite
/// factors.
///
/// Build values through [`GraphModel::finite`], [`build_cycle`],
/// [`GraphModel::lattice`] and [`build_product`], which enforce the
/// invariants (cycles have n ≥ 3, lattices d ≥ 1, products are non-empty and
/// all-finite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphModel {
    Finite { graph: HalfEdgeGraph, root: usize },
    /// Cayley graph of ℤ/nℤ with generators ±1, rooted at 0.
    Cycle(usize),
    /// Cayley graph of ℤᵈ with the standard generators, rooted at the origin.
    Lattice(usize),
    /// Product of finite factors rooted at the tuple of their roots.
    Product(Vec<GraphModel>),
}

pub fn build_cycle(n: usize) -> Result<GraphModel> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(GraphModel::Cycle(n))
}

/// Product of rooted graphs. Lattices merge symbolically
/// (ℤᵃ × ℤᵇ = ℤᵃ⁺ᵇ); finite factors are flattened into one product.
pub fn build_product(models: &[GraphModel]) -> Result<GraphModel> {
    if models.is_empty() {
        return Err(Error::domain("product of zero factors"));
    }
    let lattice_dims: Vec<usize> = models
        .iter()
        .filter_map(|m| match m {
            GraphModel::Lattice(d) => Some(*d),
            _ => None,
        })
        .collect();
    if lattice_dims.len() == models.len() {
        return Ok(GraphModel::Lattice(lattice_dims.iter().sum()));
    }
    if !lattice_dims.is_empty() {
        return Err(Error::unsupported(
            "products mixing lattices and finite graphs",
        ));
    }
    let mut factors = Vec::new();
    for m in models {
        match m {
            GraphModel::Product(inner) => factors.extend(inner.iter().cloned()),
            other => factors.push(other.clone()),
        }
    }
    if factors.len() == 1 {
        return Ok(factors.pop().unwrap());
    }
    Ok(GraphModel::Product(factors))
}

impl GraphModel {
    pub fn finite(graph: HalfEdgeGraph, root: usize) -> Result<Self> {
        if root >= graph.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "root {root} out of range for {} vertices",
                graph.vertex_count()
            )));
        }
        Ok(GraphModel::Finite { graph, root })
    }

    pub fn lattice(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("lattice dimension must be >= 1"));
        }
        Ok(GraphModel::Lattice(d))
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, GraphModel::Lattice(_))
    }

    /// Vertex-transitive by construction. Graphs loaded as `Finite` are not
    /// inspected and report `false`.
    pub fn is_transitive(&self) -> bool {
        match self {
            GraphModel::Finite { .. } => false,
            GraphModel::Cycle(_) | GraphModel::Lattice(_) => true,
            GraphModel::Product(f) => f.iter().all(GraphModel::is_transitive),
        }
    }

    pub fn vertex_count(&self) -> Option<usize> {
        match self {
            GraphModel::Finite { graph, .. } => Some(graph.vertex_count()),
            GraphModel::Cycle(n) => Some(*n),
            GraphModel::Lattice(_) => None,
            GraphModel::Product(f) => f.iter().map(GraphModel::vertex_count).product(),
        }
    }

    /// Degree of the root (2d for ℤᵈ).
    pub fn root_degree(&self) -> Result<usize> {
        match self {
            GraphModel::Lattice(d) => Ok(2 * d),
            _ => {
                let (graph, root) = self.materialize()?;
                Ok(graph.degrees()[root])
            }
        }
    }

    /// Common vertex degree of a regular model.
    pub fn regular_degree(&self) -> Result<usize> {
        match self {
            GraphModel::Lattice(d) => Ok(2 * d),
            GraphModel::Cycle(_) => Ok(2),
            GraphModel::Product(f) => f.iter().map(GraphModel::regular_degree).sum(),
            GraphModel::Finite { graph, .. } => graph.regular_degree(),
        }
    }

    /// Explicit half-edge graph and root index for a finite model.
    pub fn materialize(&self) -> Result<(HalfEdgeGraph, usize)> {
        match self {
            GraphModel::Finite { graph, root } => Ok((graph.clone(), *root)),
            GraphModel::Cycle(n) => {
                if *n < 3 {
                    return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Ok((HalfEdgeGraph::from_edges(*n, &edges)?, 0))
            }
            GraphModel::Lattice(d) => Err(Error::InfiniteGraph(*d)),
            GraphModel::Product(factors) => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::domain("product of zero factors"))?;
                let (mut graph, mut root) = first.materialize()?;
                for f in iter {
                    let (g, r) = f.materialize()?;
                    root = root * g.vertex_count() + r;
                    graph = graph.product(&g);
                }
                Ok((graph, root))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_constructor() {
        assert!(build_cycle(2).is_err());
        let (g, root) = build_cycle(5).unwrap().materialize().unwrap();
        assert_eq!(root, 0);
        assert_eq!(g.vertex_count(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn partner_must_be_an_involution() {
        let bad = alloc::vec![
            HalfEdge { origin: 0, partner: 1 },
            HalfEdge { origin: 1, partner: 1 },
        ];
        assert!(HalfEdgeGraph::new(2, bad).is_err());
        let skew = alloc::vec![
            HalfEdge { origin: 0, partner: 1 },
            HalfEdge { origin: 1, partner: 2 },
            HalfEdge { origin: 1, partner: 0 },
        ];
        assert!(HalfEdgeGraph::new(2, skew).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        assert!(HalfEdgeGraph::from_edges(4, &[(0, 1), (2, 3)]).is_err());
    }

    #[test]
    fn self_loop_counts_twice() {
        let g = HalfEdgeGraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(g.degrees(), alloc::vec![1, 3]);
    }

    #[test]
    fn products() {
        let l = build_product(&[GraphModel::Lattice(1), GraphModel::Lattice(1)]).unwrap();
        assert_eq!(l, GraphModel::Lattice(2));
        let c = build_cycle(3).unwrap();
        let p = build_product(&[c.clone(), c.clone()]).unwrap();
        let (g, root) = p.materialize().unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(root, 0);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert!(p.is_transitive());
        assert_eq!(p.regular_degree().unwrap(), 4);
        assert!(matches!(
            build_product(&[c, GraphModel::Lattice(1)]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn product_root_is_tuple_of_roots() {
        let path = HalfEdgeGraph::from_edges(2, &[(0, 1)]).unwrap();
        let a = GraphModel::finite(path.clone(), 1).unwrap();
        let b = GraphModel::finite(path, 0).unwrap();
        let (_, root) = build_product(&[a, b]).unwrap().materialize().unwrap();
        assert_eq!(root, 2);
    }
}
