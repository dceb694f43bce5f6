use alloc::vec;
use alloc::vec::Vec;

use super::{GraphModel, HalfEdgeGraph};
use crate::error::Result;

/// Dense graph Laplacian: degree on the diagonal minus edge counts.
///
/// Entries are exact; the degrees of desk-scale graphs fit an `i64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn from_graph(graph: &HalfEdgeGraph) -> Self {
        let n = graph.vertex_count();
        let mut entries = vec![0i64; n * n];
        for (i, e) in graph.half_edges().iter().enumerate() {
            let (u, v) = (e.origin, graph.terminus(i));
            entries[u * n + u] += 1;
            entries[u * n + v] -= 1;
        }
        LaplacianMatrix { dim: n, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

pub fn laplacian(model: &GraphModel) -> Result<LaplacianMatrix> {
    let (graph, _) = model.materialize()?;
    Ok(LaplacianMatrix::from_graph(&graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_product};
    use crate::Error;

    #[test]
    fn triangle() {
        let l = laplacian(&build_cycle(3).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l.get(i, j), if i == j { 2 } else { -1 });
            }
        }
    }

    #[test]
    fn single_edge() {
        let g = HalfEdgeGraph::from_edges(2, &[(0, 1)]).unwrap();
        let l = laplacian(&GraphModel::finite(g, 0).unwrap()).unwrap();
        assert_eq!(l.entries(), &[1, -1, -1, 1]);
    }

    #[test]
    fn lattice_is_rejected() {
        assert_eq!(
            laplacian(&GraphModel::Lattice(2)),
            Err(Error::InfiniteGraph(2))
        );
    }

    #[test]
    fn invariants_on_cycles_and_products() {
        let c3 = build_cycle(3).unwrap();
        let c4 = build_cycle(4).unwrap();
        let models = [
            c3.clone(),
            c4.clone(),
            build_cycle(7).unwrap(),
            build_product(&[c3, c4]).unwrap(),
        ];
        for m in &models {
            let l = laplacian(m).unwrap();
            for i in 0..l.dim() {
                assert_eq!(l.row(i).iter().sum::<i64>(), 0);
                assert!(l.get(i, i) > 0);
                for j in 0..l.dim() {
                    assert_eq!(l.get(i, j), l.get(j, i));
                }
            }
        }
    }

    #[test]
    fn product_laplacian_is_kronecker_sum() {
        let a = laplacian(&build_cycle(3).unwrap()).unwrap();
        let b = laplacian(&build_cycle(4).unwrap()).unwrap();
        let p = laplacian(&build_product(&[build_cycle(3).unwrap(), build_cycle(4).unwrap()]).unwrap())
            .unwrap();
        let (na, nb) = (a.dim(), b.dim());
        for i in 0..na {
            for j in 0..nb {
                for k in 0..na {
                    for l in 0..nb {
                        let mut want = 0;
                        if j == l {
                            want += a.get(i, k);
                        }
                        if i == k {
                            want += b.get(j, l);
                        }
                        assert_eq!(p.get(i * nb + j, k * nb + l), want);
                    }
                }
            }
        }
    }
}
