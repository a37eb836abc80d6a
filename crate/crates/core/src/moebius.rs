//! Heights, a height-respecting order, and the Möbius function of a
//! subgroup lattice, all in exact integer arithmetic.

use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;

/// `heights[i]` is the length of the longest strictly increasing chain
/// `1 = K_1 < … < K_t = K_i`, so the trivial subgroup has height 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightTable {
    pub heights: Vec<usize>,
}

impl HeightTable {
    pub fn get(&self, i: usize) -> usize {
        self.heights[i]
    }

    pub fn max(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }
}

/// Strict covers `i ⋖ j` for every `j`, as lists of lower covers.
pub fn lower_covers(lattice: &SubgroupLattice) -> Vec<Vec<usize>> {
    let n = lattice.len();
    (0..n)
        .map(|j| {
            let strictly_below: Vec<usize> =
                (0..n).filter(|&i| i != j && lattice.le(i, j)).collect();
            strictly_below
                .iter()
                .copied()
                .filter(|&i| !strictly_below.iter().any(|&k| k != i && lattice.le(i, k)))
                .collect()
        })
        .collect()
}

/// Longest-path dynamic programme over the cover relation.
pub fn compute_heights(lattice: &SubgroupLattice) -> HeightTable {
    let covers = lower_covers(lattice);
    let n = lattice.len();
    let mut by_order: Vec<usize> = (0..n).collect();
    by_order.sort_by_key(|&i| lattice.order(i));
    let mut heights = vec![0usize; n];
    for &j in &by_order {
        heights[j] = 1 + covers[j].iter().map(|&i| heights[i]).max().unwrap_or(0);
    }
    HeightTable { heights }
}

/// Orders lattice indices by ascending height, ties broken by canonical
/// element-set order, and checks that ζ becomes upper unitriangular.
pub fn topological_order(lattice: &SubgroupLattice, heights: &HeightTable) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by(|&a, &b| {
        heights.heights[a].cmp(&heights.heights[b]).then_with(|| {
            lattice
                .subgroup(a)
                .elements
                .cmp(&lattice.subgroup(b).elements)
        })
    });
    for (p, &a) in order.iter().enumerate() {
        if !lattice.le(a, a) {
            return Err(Error::Consistency(format!("ζ({a},{a}) is not 1")));
        }
        for &b in &order[..p] {
            if lattice.le(a, b) {
                return Err(Error::Consistency(format!(
                    "ζ is not upper triangular: K{a} ≤ K{b} but K{a} comes later"
                )));
            }
        }
    }
    Ok(order)
}

/// Dense exact matrix of `μ(K_i, K_j)` in lattice indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    n: usize,
    mu: Vec<i64>,
}

impl MoebiusTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.mu[i * self.n + j]
    }

    /// Nonzero entries as `(i, j, μ)` triples in row-major order.
    pub fn nonzero(&self) -> Vec<(usize, usize, i64)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let v = self.get(i, j);
                (v != 0).then_some((i, j, v))
            })
            .collect()
    }
}

/// μ as the inverse of ζ, by back-substitution on the height-ordered
/// upper triangular ζ. Every entry is solved for, including incomparable
/// pairs, and `ζ·μ = I` is verified before returning.
pub fn compute_moebius(lattice: &SubgroupLattice) -> Result<MoebiusTable> {
    let heights = compute_heights(lattice);
    let order = topological_order(lattice, &heights)?;
    let n = order.len();

    // Row p of the permuted ζ: positions q > p with ζ = 1.
    let mut position = vec![0usize; n];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p;
    }
    let upper: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| {
            let mut row: Vec<usize> = lattice
                .above(i)
                .filter(|&j| j != i)
                .map(|j| position[j])
                .collect();
            row.sort_unstable();
            row
        })
        .collect();

    let mut permuted = vec![0i64; n * n];
    for q in 0..n {
        permuted[q * n + q] = 1;
        for p in (0..q).rev() {
            let mut acc = 0i64;
            for &k in &upper[p] {
                if k > q {
                    break;
                }
                acc += permuted[k * n + q];
            }
            permuted[p * n + q] = -acc;
        }
    }

    let mut mu = vec![0i64; n * n];
    for (p, &i) in order.iter().enumerate() {
        for (q, &j) in order.iter().enumerate() {
            mu[i * n + j] = permuted[p * n + q];
        }
    }
    let table = MoebiusTable { n, mu };
    verify_inverse(lattice, &table)?;
    Ok(table)
}

/// Checks `Σ_k ζ(i,k) μ(k,j) = δ(i,j)` for all `i, j`.
pub fn verify_inverse(lattice: &SubgroupLattice, mu: &MoebiusTable) -> Result<()> {
    let n = lattice.len();
    for i in 0..n {
        for j in 0..n {
            let s: i64 = lattice.above(i).map(|k| mu.get(k, j)).sum();
            if s != i64::from(i == j) {
                return Err(Error::Consistency(format!(
                    "(ζ·μ)({i},{j}) = {s}, expected {}",
                    i64::from(i == j)
                )));
            }
        }
    }
    Ok(())
}

/// Euler's totient by trial factorisation.
pub fn euler_totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
