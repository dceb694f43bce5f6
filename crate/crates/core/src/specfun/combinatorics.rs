use alloc::vec;

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

pub fn central_binomial(k: usize) -> BigUint {
    binomial(2 * k, k)
}

pub fn catalan(n: usize) -> BigUint {
    central_binomial(n) / (n as u64 + 1)
}

/// k! / (k₁! ⋯ k_d!) for k = Σ kᵢ.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Calls `f` on every d-tuple of non-negative integers summing to `k`, in
/// lexicographic order with the first part descending.
pub fn for_each_composition(k: usize, d: usize, mut f: impl FnMut(&[usize])) {
    if d == 0 {
        if k == 0 {
            f(&[]);
        }
        return;
    }
    let mut parts = vec![0usize; d];
    fill(&mut parts, 0, k, &mut f);
}

fn fill(parts: &mut [usize], idx: usize, remaining: usize, f: &mut impl FnMut(&[usize])) {
    if idx + 1 == parts.len() {
        parts[idx] = remaining;
        f(parts);
        return;
    }
    for p in (0..=remaining).rev() {
        parts[idx] = p;
        fill(parts, idx + 1, remaining - p, f);
    }
}
