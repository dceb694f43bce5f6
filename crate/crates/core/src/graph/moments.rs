use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GraphModel, LaplacianMatrix};
use crate::error::Result;

/// Rooted spectral moment ⟨δ_root, Δᵏ δ_root⟩, exact.
///
/// ℤᵈ is handled by restricting Δ to the ℓ¹-ball of radius `k` around the
/// origin: a closed walk of length `k` never leaves it.
pub fn spectral_moment(model: &GraphModel, k: usize) -> Result<BigInt> {
    match model {
        GraphModel::Lattice(d) => Ok(lattice_moment_with_radius(*d, k, k)),
        _ => {
            let (graph, root) = model.materialize()?;
            let lap = LaplacianMatrix::from_graph(&graph);
            let n = lap.dim();
            let rows: Vec<Vec<(usize, i64)>> = (0..n)
                .map(|i| {
                    lap.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(j, &v)| (j, v))
                        .collect()
                })
                .collect();
            let mut v = vec![BigInt::zero(); n];
            v[root] = BigInt::one();
            for _ in 0..k {
                v = rows
                    .iter()
                    .map(|row| row.iter().map(|&(j, a)| &v[j] * a).sum())
                    .collect();
            }
            Ok(v.swap_remove(root))
        }
    }
}

/// Same as the ℤᵈ branch of [`spectral_moment`] with an explicit truncation
/// radius. Any `radius >= k / 2` gives the exact value.
pub fn lattice_moment_with_radius(d: usize, k: usize, radius: usize) -> BigInt {
    let degree = BigInt::from(2 * d);
    let mut current: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    current.insert(vec![0; d], BigInt::one());
    for _ in 0..k {
        let mut next: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (point, value) in &current {
            *next.entry(point.clone()).or_insert_with(BigInt::zero) += &degree * value;
            let norm: usize = point.iter().map(|c| c.unsigned_abs() as usize).sum();
            for axis in 0..d {
                for step in [-1i32, 1] {
                    let c = point[axis];
                    let q_norm =
                        norm - c.unsigned_abs() as usize + (c + step).unsigned_abs() as usize;
                    if q_norm <= radius {
                        let mut q = point.clone();
                        q[axis] += step;
                        *next.entry(q).or_insert_with(BigInt::zero) -= value;
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        current = next;
    }
    current.remove(&vec![0; d]).unwrap_or_default()
}

/// True when the rooted moments of `a` and `b` agree for every order `<= n`.
pub fn n_similar(a: &GraphModel, b: &GraphModel, n: usize) -> Result<bool> {
    for k in 0..=n {
        if spectral_moment(a, k)? != spectral_moment(b, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}
