//! The class poset `T_C(G) = { X : C ≤ X < G, X ⊄ N }` and the
//! combinatorics of its order complex (nerve): chain counts, Euler
//! characteristic, connectivity and rational Betti numbers.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::moebius::euler_totient;
use crate::rank::{rank, SparseColumn};
use crate::rational::Rational;

/// Default ceiling on the total number of chains in one nerve.
pub const DEFAULT_CHAIN_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct ClassPoset {
    pub normal: usize,
    pub cyclic_base: usize,
    /// Lattice indices of the members, ascending (a linear extension).
    pub members: Vec<usize>,
    /// `upper[a]`: positions `b` in `members` with `members[a] < members[b]`.
    upper: Vec<Vec<usize>>,
}

impl ClassPoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Strictly greater members of position `a`, as positions.
    pub fn upper(&self, a: usize) -> &[usize] {
        &self.upper[a]
    }
}

pub fn class_poset(lattice: &SubgroupLattice, n: usize, c: usize) -> Result<ClassPoset> {
    if n >= lattice.len() || c >= lattice.len() {
        return Err(Error::Precondition("lattice index out of range".into()));
    }
    if !lattice.is_normal(n) || !lattice.has_prime_index(n) {
        return Err(Error::Precondition(format!(
            "{} is not a normal subgroup of prime index",
            lattice.label(n)
        )));
    }
    if !lattice.is_cyclic(c) {
        return Err(Error::Precondition(format!(
            "{} is not cyclic",
            lattice.label(c)
        )));
    }
    if !lattice.le(c, n) {
        return Err(Error::Precondition(format!(
            "{} is not contained in {}",
            lattice.label(c),
            lattice.label(n)
        )));
    }
    let top = lattice.top();
    let members: Vec<usize> = lattice
        .above(c)
        .filter(|&x| x != top && !lattice.le(x, n))
        .collect();
    let upper = members
        .iter()
        .map(|&a| {
            (0..members.len())
                .filter(|&j| members[j] != a && lattice.le(a, members[j]))
                .collect()
        })
        .collect();
    Ok(ClassPoset {
        normal: n,
        cyclic_base: c,
        members,
        upper,
    })
}

/// Whether `B ∩ D` is a member whenever members `A ≤ B` and `A ≤ D`.
pub fn is_meet_closed(lattice: &SubgroupLattice, poset: &ClassPoset) -> bool {
    let set: std::collections::HashSet<usize> = poset.members.iter().copied().collect();
    for (a, &xa) in poset.members.iter().enumerate() {
        let mut ups: Vec<usize> = poset.upper(a).iter().map(|&b| poset.members[b]).collect();
        ups.push(xa);
        for (i, &b) in ups.iter().enumerate() {
            for &d in &ups[i + 1..] {
                if !set.contains(&lattice.intersection(b, d)) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NerveSummary {
    /// `chain_counts[i]`: strictly increasing chains of `i + 1` members.
    pub chain_counts: Vec<u64>,
    pub euler: i64,
    pub connected: bool,
    /// Rational Betti numbers, present when homology was requested.
    pub betti_numbers: Option<Vec<u64>>,
}

pub fn nerve_summary(poset: &ClassPoset, with_homology: bool) -> Result<NerveSummary> {
    nerve_summary_with_limit(poset, with_homology, DEFAULT_CHAIN_LIMIT)
}

pub fn nerve_summary_with_limit(
    poset: &ClassPoset,
    with_homology: bool,
    chain_limit: u64,
) -> Result<NerveSummary> {
    let chain_counts = count_chains(poset, chain_limit)?;
    let euler = chain_counts
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    let connected = is_connected(poset);
    let betti_numbers = if with_homology {
        let betti = betti_numbers(poset, &chain_counts)?;
        let alt: i64 = betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if alt != euler {
            return Err(Error::Consistency(format!(
                "Euler–Poincaré mismatch: Σ(-1)^i b_i = {alt}, χ = {euler}"
            )));
        }
        Some(betti)
    } else {
        None
    };
    Ok(NerveSummary {
        chain_counts,
        euler,
        connected,
        betti_numbers,
    })
}

/// Counts chains by length: `ending[x]` is the number of chains of the
/// current length whose top element is `x`.
fn count_chains(poset: &ClassPoset, limit: u64) -> Result<Vec<u64>> {
    let n = poset.len();
    let mut counts = Vec::new();
    let mut ending = vec![1u64; n];
    let mut total = 0u64;
    while ending.iter().any(|&c| c > 0) {
        let level: u64 = ending.iter().sum();
        total = total.saturating_add(level);
        if total > limit {
            return Err(Error::resource("nerve chain count", limit));
        }
        counts.push(level);
        let mut next = vec![0u64; n];
        for (a, &count) in ending.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for &b in poset.upper(a) {
                next[b] += count;
            }
        }
        ending = next;
    }
    Ok(counts)
}

/// Union-find over comparable pairs. The empty poset is reported as not
/// connected.
fn is_connected(poset: &ClassPoset) -> bool {
    let n = poset.len();
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for a in 0..n {
        for &b in poset.upper(a) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
    }
    components == 1
}

/// All chains, one list per dimension, each in lexicographic order of
/// member positions.
fn enumerate_chains(poset: &ClassPoset) -> Vec<Vec<Vec<u32>>> {
    let mut dims: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut current: Vec<Vec<u32>> = (0..poset.len() as u32).map(|x| vec![x]).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for chain in &current {
            let last = *chain.last().expect("chains are non-empty") as usize;
            for &b in poset.upper(last) {
                let mut longer = chain.clone();
                longer.push(b as u32);
                next.push(longer);
            }
        }
        dims.push(current);
        current = next;
    }
    dims
}

fn betti_numbers(poset: &ClassPoset, counts: &[u64]) -> Result<Vec<u64>> {
    let dims = enumerate_chains(poset);
    let top = dims.len();
    // ranks[k] = rank of ∂_k : C_k → C_{k-1}; ∂_0 = 0.
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let faces: HashMap<&[u32], usize> = dims[k - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect();
        let columns: Vec<SparseColumn> = dims[k]
            .iter()
            .map(|simplex| {
                let mut col: SparseColumn = (0..simplex.len())
                    .map(|drop| {
                        let face: Vec<u32> = simplex
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        let sign = if drop % 2 == 0 { 1 } else { -1 };
                        (faces[face.as_slice()], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        ranks[k] = rank(columns)?;
    }
    Ok((0..top)
        .map(|k| counts[k] - ranks[k] as u64 - ranks[k + 1] as u64)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopologyOptions {
    pub homology: bool,
    /// Compute one representative per conjugacy class of cyclic subgroups.
    /// `None` collapses automatically when `|G| ≥ 60`.
    pub collapse: Option<bool>,
    pub chain_limit: u64,
}

impl Default for TopologyOptions {
    fn default() -> Self {
        TopologyOptions {
            homology: false,
            collapse: None,
            chain_limit: DEFAULT_CHAIN_LIMIT,
        }
    }
}

/// One conjugacy class of cyclic subgroups `C ≤ N` and the nerve of
/// `T_C(G)` for its representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassRow {
    pub representative: usize,
    pub cyclic_order: usize,
    pub class_size: usize,
    pub members: usize,
    pub summary: NerveSummary,
}

/// Conjugacy classes of cyclic subgroups contained in `n`, each as an
/// ascending list of lattice indices.
pub fn cyclic_classes(lattice: &SubgroupLattice, n: usize) -> Vec<Vec<usize>> {
    let group = lattice.group();
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.index_of(g).expect("generator lies in group"))
        .collect();
    let mut assigned = vec![false; lattice.len()];
    let mut classes = Vec::new();
    for c in lattice.below(n).filter(|&c| lattice.is_cyclic(c)) {
        if assigned[c] {
            continue;
        }
        let mut class = vec![c];
        assigned[c] = true;
        let mut i = 0;
        while i < class.len() {
            for &g in &gens {
                let d = lattice.conjugate(class[i], g);
                if !assigned[d] {
                    assigned[d] = true;
                    class.push(d);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Nerve data of `T_C(G)` for every conjugacy class of cyclic `C ≤ N`.
///
/// Without collapsing, every class member is computed and required to
/// agree with its representative; with collapsing only the representative
/// is computed.
pub fn connectivity_report(
    lattice: &SubgroupLattice,
    n: usize,
    options: TopologyOptions,
) -> Result<Vec<ClassRow>> {
    let collapse = options.collapse.unwrap_or(lattice.group().order() >= 60);
    let mut rows = Vec::new();
    for class in cyclic_classes(lattice, n) {
        let rep = class[0];
        let poset = class_poset(lattice, n, rep)?;
        let summary = nerve_summary_with_limit(&poset, options.homology, options.chain_limit)?;
        if !collapse {
            for &other in &class[1..] {
                let p = class_poset(lattice, n, other)?;
                let s = nerve_summary_with_limit(&p, options.homology, options.chain_limit)?;
                if s != summary || p.len() != poset.len() {
                    return Err(Error::Consistency(format!(
                        "conjugate cyclic subgroups K{rep} and K{other} give different nerves"
                    )));
                }
            }
        }
        rows.push(ClassRow {
            representative: rep,
            cyclic_order: lattice.order(rep),
            class_size: class.len(),
            members: poset.len(),
            summary,
        });
    }
    Ok(rows)
}

/// `(1/|G|) Σ_{C ≤ N cyclic} (1 − χ(T_C(G))) φ(|C|)` from report rows.
pub fn euler_formula(lattice: &SubgroupLattice, rows: &[ClassRow]) -> Rational {
    let sum: i128 = rows
        .iter()
        .map(|r| {
            r.class_size as i128
                * (1 - r.summary.euler as i128)
                * euler_totient(r.cyclic_order as u64) as i128
        })
        .sum();
    Rational::new(sum, lattice.group().order() as i128)
}

/// `m_{G,N}` through Euler characteristics of the class posets. Requires
/// `G` non-cyclic and `N` normal of prime index.
pub fn m_gn_via_euler(lattice: &SubgroupLattice, n: usize) -> Result<Rational> {
    m_gn_via_euler_with(lattice, n, TopologyOptions::default())
}

pub fn m_gn_via_euler_with(
    lattice: &SubgroupLattice,
    n: usize,
    options: TopologyOptions,
) -> Result<Rational> {
    if lattice.is_cyclic(lattice.top()) {
        return Err(Error::Precondition(format!(
            "{} is cyclic; the Euler-characteristic formula needs a non-cyclic group",
            lattice.group().name()
        )));
    }
    let rows = connectivity_report(lattice, n, options)?;
    Ok(euler_formula(lattice, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::lattice::enumerate_subgroups;

    fn s3() -> (SubgroupLattice, usize) {
        let l = enumerate_subgroups(&build("S3").unwrap()).unwrap();
        let a3 = l.normal_subgroups()[1];
        (l, a3)
    }

    #[test]
    fn s3_trivial_base_gives_three_points() {
        let (l, a3) = s3();
        let p = class_poset(&l, a3, 0).unwrap();
        assert_eq!(
            p.members.iter().map(|&i| l.order(i)).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
        let s = nerve_summary(&p, true).unwrap();
        assert_eq!(s.chain_counts, vec![3]);
        assert_eq!(s.euler, 3);
        assert!(!s.connected);
        assert_eq!(s.betti_numbers, Some(vec![3]));
    }

    #[test]
    fn s3_base_a3_is_empty() {
        let (l, a3) = s3();
        let p = class_poset(&l, a3, a3).unwrap();
        assert!(p.is_empty());
        let s = nerve_summary(&p, true).unwrap();
        assert_eq!(s.chain_counts, Vec::<u64>::new());
        assert_eq!(s.euler, 0);
        assert!(!s.connected);
        assert_eq!(s.betti_numbers, Some(vec![]));
    }

    #[test]
    fn s3_euler_formula() {
        let (l, a3) = s3();
        assert_eq!(m_gn_via_euler(&l, a3).unwrap(), Rational::zero());
    }

    #[test]
    fn single_point_poset() {
        // C6 with N = C3 and C = 1: the only member is the C2.
        let l = enumerate_subgroups(&build("C6").unwrap()).unwrap();
        let c3 = (0..l.len()).find(|&i| l.order(i) == 3).unwrap();
        let p = class_poset(&l, c3, 0).unwrap();
        assert_eq!(p.len(), 1);
        let s = nerve_summary(&p, true).unwrap();
        assert_eq!(s.chain_counts, vec![1]);
        assert_eq!(s.euler, 1);
        assert!(s.connected);
        assert_eq!(s.betti_numbers, Some(vec![1]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let (l, a3) = s3();
        assert!(class_poset(&l, a3, 1).is_err()); // C2 not inside A3
        assert!(class_poset(&l, 1, 0).is_err()); // C2 not normal
        let l4 = enumerate_subgroups(&build("C4").unwrap()).unwrap();
        assert!(m_gn_via_euler(&l4, 1).is_err());
    }

    #[test]
    fn chain_limit() {
        let l = enumerate_subgroups(&build("S4").unwrap()).unwrap();
        let a4 = l
            .normal_subgroups()
            .into_iter()
            .find(|&i| l.order(i) == 12)
            .unwrap();
        let p = class_poset(&l, a4, 0).unwrap();
        assert!(matches!(
            nerve_summary_with_limit(&p, false, 5),
            Err(Error::Resource { limit: 5, .. })
        ));
    }
}
