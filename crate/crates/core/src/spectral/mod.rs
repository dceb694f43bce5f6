//! Rooted spectral measures and the quantities read off them.

mod heat;
mod resolvent;

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{laplacian, GraphModel};
use crate::linalg::jacobi_eigen;

pub use heat::{heat_function, heat_samples, HeatSample};
pub use resolvent::{arcsine_density, resolvent_z, stieltjes_density_check};

/// Eigenvalues closer than this are one atom.
pub const CLUSTER_TOLERANCE: f64 = 1e-9;

/// Midpoint nodes for the one-dimensional arcsine quadrature.
const ARCSINE_NODES: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    pub eigenvalue: f64,
    pub weight: f64,
    /// Present when the weight is known exactly, e.g. multiplicity / n on a
    /// vertex-transitive graph.
    pub exact_weight: Option<BigRational>,
}

/// Absolutely continuous part of a rooted measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Density {
    None,
    /// 1/(π√(x(4−x))) on [0, 4], the measure of ℤ.
    ArcsineZ,
    /// d-fold additive convolution of the arcsine law, the measure of ℤᵈ.
    LatticePower(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMeasure {
    pub atoms: Vec<Atom>,
    pub density: Density,
}

impl SpectralMeasure {
    pub fn point_mass_at_zero() -> Self {
        SpectralMeasure {
            atoms: alloc::vec![Atom {
                eigenvalue: 0.0,
                weight: 1.0,
                exact_weight: Some(BigRational::from_integer(BigInt::from(1))),
            }],
            density: Density::None,
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.density == Density::None
    }

    /// Number of arcsine factors in the density.
    fn density_dimension(&self) -> usize {
        match self.density {
            Density::None => 0,
            Density::ArcsineZ => 1,
            Density::LatticePower(d) => d,
        }
    }

    /// ∫ f dμ. The density part is computed with x = 2 − 2cos θ per arcsine
    /// factor and a product midpoint rule in θ.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let nodes = match self.density_dimension() {
            0 | 1 => ARCSINE_NODES,
            2 => 200,
            _ => 40,
        };
        self.integrate_with_nodes(f, nodes)
    }

    pub fn integrate_with_nodes(&self, f: impl Fn(f64) -> f64, nodes_per_axis: usize) -> f64 {
        let atoms: f64 = self.atoms.iter().map(|a| a.weight * f(a.eigenvalue)).sum();
        let d = self.density_dimension();
        if d == 0 {
            return atoms;
        }
        let points: Vec<f64> = (0..nodes_per_axis)
            .map(|j| 2.0 - 2.0 * (PI * (j as f64 + 0.5) / nodes_per_axis as f64).cos())
            .collect();
        let mut index = alloc::vec![0usize; d];
        let mut acc = 0.0;
        loop {
            acc += f(index.iter().map(|&i| points[i]).sum());
            let mut axis = 0;
            while axis < d {
                index[axis] += 1;
                if index[axis] < nodes_per_axis {
                    break;
                }
                index[axis] = 0;
                axis += 1;
            }
            if axis == d {
                break;
            }
        }
        atoms + acc / (nodes_per_axis as f64).powi(d as i32)
    }

    pub fn moment(&self, k: usize) -> f64 {
        self.integrate(|x| x.powi(k as i32))
    }

    pub fn total_mass(&self) -> f64 {
        self.integrate(|_| 1.0)
    }

    /// Exact total mass of the atoms when every weight is exact.
    pub fn exact_atom_mass(&self) -> Option<BigRational> {
        self.atoms
            .iter()
            .map(|a| a.exact_weight.clone())
            .sum::<Option<BigRational>>()
    }
}

/// Rooted spectral measure μ^{δ_root, δ_root} of the Laplacian.
pub fn spectral_measure(model: &GraphModel) -> Result<SpectralMeasure> {
    if let GraphModel::Lattice(d) = model {
        let density = if *d == 1 {
            Density::ArcsineZ
        } else {
            Density::LatticePower(*d)
        };
        return Ok(SpectralMeasure {
            atoms: Vec::new(),
            density,
        });
    }
    let (_, root) = model.materialize()?;
    let lap = laplacian(model)?;
    let n = lap.dim();
    let eigen = jacobi_eigen(&lap.to_f64(), n);
    let transitive = model.is_transitive();
    let mut atoms: Vec<Atom> = Vec::new();
    let mut cluster: Vec<usize> = Vec::new();
    let flush = |cluster: &mut Vec<usize>, atoms: &mut Vec<Atom>| {
        if cluster.is_empty() {
            return;
        }
        let mean = cluster.iter().map(|&k| eigen.values[k]).sum::<f64>() / cluster.len() as f64;
        let eigenvalue = if mean.abs() < CLUSTER_TOLERANCE { 0.0 } else { mean };
        let (weight, exact_weight) = if transitive {
            let w = BigRational::new(BigInt::from(cluster.len()), BigInt::from(n));
            (w.to_f64().unwrap_or(0.0), Some(w))
        } else {
            let w = cluster.iter().map(|&k| eigen.vectors[k][root].powi(2)).sum();
            (w, None)
        };
        atoms.push(Atom {
            eigenvalue,
            weight,
            exact_weight,
        });
        cluster.clear();
    };
    for k in 0..n {
        if let Some(&last) = cluster.last() {
            if eigen.values[k] - eigen.values[last] > CLUSTER_TOLERANCE {
                flush(&mut cluster, &mut atoms);
            }
        }
        cluster.push(k);
    }
    flush(&mut cluster, &mut atoms);
    atoms.retain(|a| a.weight > 0.0 || a.exact_weight.as_ref().is_some_and(|w| !w.is_zero()));
    Ok(SpectralMeasure {
        atoms,
        density: Density::None,
    })
}

/// Additive convolution of two purely atomic measures.
pub fn convolve_atomic(a: &SpectralMeasure, b: &SpectralMeasure) -> Result<SpectralMeasure> {
    if !a.is_atomic() || !b.is_atomic() {
        return Err(Error::unsupported(
            "convolution of measures with a density part",
        ));
    }
    let mut sums: Vec<Atom> = Vec::with_capacity(a.atoms.len() * b.atoms.len());
    for x in &a.atoms {
        for y in &b.atoms {
            sums.push(Atom {
                eigenvalue: x.eigenvalue + y.eigenvalue,
                weight: x.weight * y.weight,
                exact_weight: match (&x.exact_weight, &y.exact_weight) {
                    (Some(p), Some(q)) => Some(p * q),
                    _ => None,
                },
            });
        }
    }
    sums.sort_by(|p, q| p.eigenvalue.total_cmp(&q.eigenvalue));
    let mut atoms: Vec<Atom> = Vec::new();
    for atom in sums {
        match atoms.last_mut() {
            Some(last) if atom.eigenvalue - last.eigenvalue <= CLUSTER_TOLERANCE => {
                last.weight += atom.weight;
                last.exact_weight = match (last.exact_weight.take(), atom.exact_weight) {
                    (Some(p), Some(q)) => Some(p + q),
                    _ => None,
                };
            }
            _ => atoms.push(atom),
        }
    }
    Ok(SpectralMeasure {
        atoms,
        density: Density::None,
    })
}
