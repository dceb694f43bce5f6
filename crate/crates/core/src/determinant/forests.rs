use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::specfun::binomial;

use crate::graph::GraphModel;

pub const BRUTEFORCE_VERTEX_LIMIT: usize = 10;
pub const BRUTEFORCE_EDGE_LIMIT: usize = 24;

/// Number of rooted spanning forests of the n-cycle with k components:
/// binom(n+k, n−k)·2n/(n+k).
pub fn forest_count_cycle(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let numerator = binomial(n + k, n - k) * BigUint::from(2 * n);
    Ok(BigInt::from(numerator / BigUint::from(n + k)))
}

/// Counts pairs (spanning forest with k trees, one root per tree) by
/// walking every edge subset.
pub fn forest_count_bruteforce(model: &GraphModel, k: usize) -> Result<BigInt> {
    let (graph, _) = model.materialize()?;
    let n = graph.vertex_count();
    if n > BRUTEFORCE_VERTEX_LIMIT {
        return Err(Error::Resource {
            what: "vertices",
            actual: n,
            limit: BRUTEFORCE_VERTEX_LIMIT,
        });
    }
    let edges = graph.edges();
    if edges.len() > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::Resource {
            what: "edges",
            actual: edges.len(),
            limit: BRUTEFORCE_EDGE_LIMIT,
        });
    }
    // a forest with k trees on n vertices has exactly n - k edges
    if k == 0 || k > n {
        return Ok(BigInt::zero());
    }
    let wanted_edges = n - k;
    let mut total: u128 = 0;
    let mut parent: Vec<usize> = Vec::with_capacity(n);
    let mut size: Vec<u128> = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << edges.len()) {
        if mask.count_ones() as usize != wanted_edges {
            continue;
        }
        parent.clear();
        parent.extend(0..n);
        size.clear();
        size.resize(n, 1);
        let mut acyclic = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                acyclic = false;
                break;
            }
            let (big, small) = if size[ru] >= size[rv] { (ru, rv) } else { (rv, ru) };
            parent[small] = big;
            size[big] += size[small];
        }
        if acyclic {
            total += (0..n)
                .filter(|&v| parent[v] == v)
                .map(|v| size[v])
                .product::<u128>();
        }
    }
    Ok(BigInt::from(total))
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}
